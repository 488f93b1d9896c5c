//! Citation environment selection and the dense sub-matrix over the
//! selected journals.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::ingest::{CitationGraph, JournalId};
use crate::pajek::{self, PajekError};

/// Whether a journal is analyzed as a target of references (cited) or as a
/// source of references (citing).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Cited,
    Citing,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Cited => "cited",
            Direction::Citing => "citing",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A seed journal's citation environment: the selected journals in label
/// order and the dense citation matrix among them, entry (i, j) holding the
/// citations from journal i to journal j.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment {
    seed: JournalId,
    direction: Direction,
    threshold_pct: f64,
    journals: Vec<JournalId>,
    labels: Vec<String>,
    matrix: Vec<Vec<u64>>,
    grandsum: u64,
}

impl Environment {
    pub fn seed(&self) -> &JournalId {
        &self.seed
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn threshold_pct(&self) -> f64 {
        self.threshold_pct
    }

    pub fn journals(&self) -> &[JournalId] {
        &self.journals
    }

    /// Condensed Pajek labels, parallel to [`Environment::journals`].
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    /// N = sum over all matrix cells; the denominator of local impact
    /// percentages.
    pub fn grandsum(&self) -> u64 {
        self.grandsum
    }

    pub fn len(&self) -> usize {
        self.journals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.journals.is_empty()
    }

    pub fn index_of(&self, journal: &JournalId) -> Option<usize> {
        self.journals.iter().position(|j| j == journal)
    }
}

#[derive(Debug, Error)]
pub enum EnvironmentError {
    #[error("journal {0} is not in the citation graph")]
    SeedNotFound(JournalId),
    #[error("threshold percentage must lie in (0, 100], got {0}")]
    InvalidThreshold(f64),
    #[error("journal {0} is not in the citation graph")]
    UnknownJournal(JournalId),
    #[error("seed {0} is not part of the journal selection")]
    SeedNotSelected(JournalId),
    #[error("the seed journal cannot be excluded from its own environment")]
    SeedExcluded,
    #[error(transparent)]
    Label(#[from] PajekError),
}

/// Warning emitted when the global metadata total backing a threshold is
/// zero or absent and the in-graph sum is used instead.
#[derive(Debug, Clone, PartialEq)]
pub struct FallbackWarning {
    pub seed: JournalId,
    pub direction: Direction,
    pub in_graph_sum: u64,
}

impl fmt::Display for FallbackWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no global {} total for {}; thresholding against the in-graph sum {}",
            match self.direction {
                Direction::Cited => "cited",
                Direction::Citing => "reference",
            },
            self.seed,
            self.in_graph_sum
        )
    }
}

/// Journals selected for a seed's environment, plus any fallback warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub journals: BTreeSet<JournalId>,
    pub warnings: Vec<FallbackWarning>,
}

/// Select the environment of `seed`: every journal whose citation traffic
/// with the seed strictly exceeds `threshold_pct` percent of the seed's
/// global total in the given direction, plus the seed itself.
///
/// For the cited direction the tested weight is citations *to* the seed and
/// the denominator is the seed's global total cites; for the citing
/// direction it is citations *from* the seed against its global total
/// references. The strict comparison runs against the exact real-valued
/// threshold, so "more than five times" at 1% of 506 admits a count of 6.
pub fn select_environment(
    graph: &CitationGraph,
    seed: &JournalId,
    direction: Direction,
    threshold_pct: f64,
) -> Result<Selection, EnvironmentError> {
    if !(threshold_pct > 0.0 && threshold_pct <= 100.0) {
        return Err(EnvironmentError::InvalidThreshold(threshold_pct));
    }
    if !graph.contains(seed) {
        return Err(EnvironmentError::SeedNotFound(seed.clone()));
    }
    let meta = graph.meta(seed);
    let declared = match direction {
        Direction::Cited => meta.total_cited,
        Direction::Citing => meta.total_citing,
    };
    let mut warnings = Vec::new();
    let total = if declared > 0 {
        declared
    } else {
        let in_graph = match direction {
            Direction::Cited => graph.in_sum(seed),
            Direction::Citing => graph.out_sum(seed),
        };
        warnings.push(FallbackWarning {
            seed: seed.clone(),
            direction,
            in_graph_sum: in_graph,
        });
        in_graph
    };
    let threshold = threshold_pct / 100.0 * total as f64;

    let mut journals = BTreeSet::new();
    journals.insert(seed.clone());
    for journal in graph.journals() {
        let weight = match direction {
            Direction::Cited => graph.weight(&journal, seed),
            Direction::Citing => graph.weight(seed, &journal),
        };
        if weight as f64 > threshold {
            journals.insert(journal);
        }
    }
    Ok(Selection { journals, warnings })
}

/// Build the dense citation matrix over a selected journal set, ordered
/// ascending by Pajek label (byte-wise).
pub fn build_environment_matrix(
    graph: &CitationGraph,
    journals: &BTreeSet<JournalId>,
    seed: &JournalId,
    direction: Direction,
    threshold_pct: f64,
) -> Result<Environment, EnvironmentError> {
    if !journals.contains(seed) {
        return Err(EnvironmentError::SeedNotSelected(seed.clone()));
    }
    for journal in journals {
        if !graph.contains(journal) {
            return Err(EnvironmentError::UnknownJournal(journal.clone()));
        }
    }
    let mut labeled: Vec<(String, JournalId)> = journals
        .iter()
        .map(|j| Ok((pajek::make_label(j.as_str())?, j.clone())))
        .collect::<Result<_, PajekError>>()?;
    labeled.sort_by(|a, b| a.0.as_bytes().cmp(b.0.as_bytes()).then(a.1.cmp(&b.1)));

    let (labels, ordered): (Vec<String>, Vec<JournalId>) = labeled.into_iter().unzip();
    let matrix: Vec<Vec<u64>> = ordered
        .iter()
        .map(|citing| ordered.iter().map(|cited| graph.weight(citing, cited)).collect())
        .collect();
    let grandsum = matrix.iter().flatten().sum();
    Ok(Environment {
        seed: seed.clone(),
        direction,
        threshold_pct,
        journals: ordered,
        labels,
        matrix,
        grandsum,
    })
}

/// Convenience wrapper: select and build in one step.
pub fn environment_of(
    graph: &CitationGraph,
    seed: &JournalId,
    direction: Direction,
    threshold_pct: f64,
) -> Result<(Environment, Vec<FallbackWarning>), EnvironmentError> {
    let selection = select_environment(graph, seed, direction, threshold_pct)?;
    let env = build_environment_matrix(graph, &selection.journals, seed, direction, threshold_pct)?;
    Ok((env, selection.warnings))
}

/// Restrict an environment to `journals ∖ excluded`, recomputing the matrix
/// and grandsum. Excluding the seed is an error; excluded journals that are
/// not members are ignored.
pub fn apply_exclusions(
    env: &Environment,
    excluded: &BTreeSet<JournalId>,
) -> Result<Environment, EnvironmentError> {
    if excluded.contains(&env.seed) {
        return Err(EnvironmentError::SeedExcluded);
    }
    let keep: Vec<usize> = (0..env.journals.len())
        .filter(|&i| !excluded.contains(&env.journals[i]))
        .collect();
    let journals: Vec<JournalId> = keep.iter().map(|&i| env.journals[i].clone()).collect();
    let labels: Vec<String> = keep.iter().map(|&i| env.labels[i].clone()).collect();
    let matrix: Vec<Vec<u64>> = keep
        .iter()
        .map(|&i| keep.iter().map(|&k| env.matrix[i][k]).collect())
        .collect();
    let grandsum = matrix.iter().flatten().sum();
    Ok(Environment {
        seed: env.seed.clone(),
        direction: env.direction,
        threshold_pct: env.threshold_pct,
        journals,
        labels,
        matrix,
        grandsum,
    })
}
