//! Graph analysis of the thresholded similarity graph: connected
//! components, k-core decomposition, and articulation points.

use std::collections::BTreeSet;

use crate::ingest::JournalId;
use crate::similarity::SimilarityMatrix;

/// Undirected unweighted graph over the environment journals, with an edge
/// wherever the similarity matrix kept a nonzero value.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityGraph {
    nodes: Vec<JournalId>,
    adjacency: Vec<Vec<usize>>,
}

impl SimilarityGraph {
    pub fn from_similarity(matrix: &SimilarityMatrix) -> Self {
        let n = matrix.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |k| (i, k)))
            .filter(|&(i, k)| matrix.values()[i][k] > 0.0)
            .collect();
        Self::from_edges(matrix.journals().to_vec(), &edges)
    }

    /// Build from explicit edges; self-loops are dropped and duplicates
    /// collapse.
    pub fn from_edges(nodes: Vec<JournalId>, edges: &[(usize, usize)]) -> Self {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes.len()];
        for &(a, b) in edges {
            if a != b {
                sets[a].insert(b);
                sets[b].insert(a);
            }
        }
        SimilarityGraph {
            nodes,
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn nodes(&self) -> &[JournalId] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

/// Coreness per node: the largest k such that the node survives in the
/// k-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreAssignment {
    pub coreness: Vec<usize>,
}

/// Maximal connected node sets, each sorted by node order; singletons
/// included. Components are listed in order of their smallest member.
pub fn connected_components(g: &SimilarityGraph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut members = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Coreness by iterative minimum-degree peeling. The result is independent
/// of the peel order among ties.
pub fn k_core(g: &SimilarityGraph) -> CoreAssignment {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut coreness = vec![0usize; n];
    let mut level = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .unwrap();
        level = level.max(degree[v]);
        coreness[v] = level;
        removed[v] = true;
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    CoreAssignment { coreness }
}

/// Nodes whose removal increases the number of connected components, via
/// depth-first search low-links.
pub fn articulation_points(g: &SimilarityGraph) -> BTreeSet<usize> {
    struct Dfs<'a> {
        g: &'a SimilarityGraph,
        visited: Vec<bool>,
        discovery: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        cut: BTreeSet<usize>,
    }

    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent: Option<usize>) {
            self.visited[v] = true;
            self.time += 1;
            self.discovery[v] = self.time;
            self.low[v] = self.time;
            let mut children = 0;
            for &u in self.g.neighbors(v) {
                if !self.visited[u] {
                    children += 1;
                    self.run(u, Some(v));
                    self.low[v] = self.low[v].min(self.low[u]);
                    if parent.is_some() && self.low[u] >= self.discovery[v] {
                        self.cut.insert(v);
                    }
                } else if Some(u) != parent {
                    self.low[v] = self.low[v].min(self.discovery[u]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut.insert(v);
            }
        }
    }

    let n = g.node_count();
    let mut dfs = Dfs {
        g,
        visited: vec![false; n],
        discovery: vec![0; n],
        low: vec![0; n],
        time: 0,
        cut: BTreeSet::new(),
    };
    for v in 0..n {
        if !dfs.visited[v] {
            dfs.run(v, None);
        }
    }
    dfs.cut
}
