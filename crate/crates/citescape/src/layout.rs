//! Deterministic spring-embedder layout and SVG rendering of map documents.
//!
//! Node glyphs are ellipses (or diamonds) whose horizontal and vertical
//! radii scale with x_fact and y_fact, so the aspect ratio of a node shows
//! its self-citation share; edges are drawn with stroke opacity
//! proportional to the cosine value.

use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::SimilarityGraph;
use crate::pajek::{MapDocument, Shape};

/// Node positions in the unit square. The same (graph, seed, iterations)
/// input always produces the same positions.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub positions: Vec<(f64, f64)>,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("layout has {got} positions for {expected} vertices")]
    MissingPositions { expected: usize, got: usize },
}

/// Rendering knobs: display units per impact percent and the radius floor
/// that keeps zero-impact nodes visible.
#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    pub node_scale: f64,
    pub min_radius: f64,
    pub canvas: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            node_scale: 2.0,
            min_radius: 2.0,
            canvas: 800.0,
        }
    }
}

/// Fruchterman-Reingold style layout: similarity-weighted attraction along
/// edges, inverse-distance repulsion between all pairs, and a linear cooling
/// schedule. Initial positions come from a seeded ChaCha stream, so the
/// result is reproducible byte for byte.
pub fn force_layout(
    g: &SimilarityGraph,
    weights: &[Vec<f64>],
    seed: u64,
    iterations: usize,
) -> Layout {
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 0 {
        return Layout {
            positions: Vec::new(),
            seed,
        };
    }
    if n == 1 {
        return Layout {
            positions: vec![(0.5, 0.5)],
            seed,
        };
    }

    let mut positions: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)))
        .collect();
    let ideal = (1.0 / n as f64).sqrt();
    let mut temperature = 0.1;
    let cooling = temperature / iterations.max(1) as f64;

    for _ in 0..iterations {
        let mut displacement = vec![(0.0f64, 0.0f64); n];
        for i in 0..n {
            for k in i + 1..n {
                let dx = positions[i].0 - positions[k].0;
                let dy = positions[i].1 - positions[k].1;
                let distance = (dx * dx + dy * dy).sqrt().max(1e-9);
                let repulsion = ideal * ideal / distance;
                let (ux, uy) = (dx / distance, dy / distance);
                displacement[i].0 += ux * repulsion;
                displacement[i].1 += uy * repulsion;
                displacement[k].0 -= ux * repulsion;
                displacement[k].1 -= uy * repulsion;
            }
        }
        for v in 0..n {
            for &u in g.neighbors(v) {
                if u <= v {
                    continue;
                }
                let weight = weights[v][u];
                let dx = positions[v].0 - positions[u].0;
                let dy = positions[v].1 - positions[u].1;
                let distance = (dx * dx + dy * dy).sqrt().max(1e-9);
                let attraction = distance * distance / ideal * weight;
                let (ux, uy) = (dx / distance, dy / distance);
                displacement[v].0 -= ux * attraction;
                displacement[v].1 -= uy * attraction;
                displacement[u].0 += ux * attraction;
                displacement[u].1 += uy * attraction;
            }
        }
        for v in 0..n {
            let (dx, dy) = displacement[v];
            let magnitude = (dx * dx + dy * dy).sqrt();
            if magnitude > 0.0 {
                let step = magnitude.min(temperature);
                positions[v].0 = (positions[v].0 + dx / magnitude * step).clamp(0.0, 1.0);
                positions[v].1 = (positions[v].1 + dy / magnitude * step).clamp(0.0, 1.0);
            }
        }
        temperature = (temperature - cooling).max(1e-4);
    }

    Layout { positions, seed }
}

fn fmt2(value: f64) -> String {
    format!("{value:.2}")
}

/// Render a document over a layout as standalone SVG text. Exactly the
/// nonzero similarity entries become edges; each vertex becomes an ellipse
/// (or a diamond path) with `rx` from x_fact and `ry` from y_fact, floored
/// so zero-impact nodes stay visible, plus a label.
pub fn render_svg(
    doc: &MapDocument,
    layout: &Layout,
    options: &RenderOptions,
) -> Result<String, RenderError> {
    if layout.positions.len() != doc.len() {
        return Err(RenderError::MissingPositions {
            expected: doc.len(),
            got: layout.positions.len(),
        });
    }
    let margin = 60.0;
    let span = options.canvas - 2.0 * margin;
    let place = |p: (f64, f64)| (margin + p.0 * span, margin + p.1 * span);

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        fmt2(options.canvas)
    )
    .unwrap();
    writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>").unwrap();

    for i in 0..doc.len() {
        for k in i + 1..doc.len() {
            let value = doc.matrix()[i][k];
            if value <= 0.0 {
                continue;
            }
            let (x1, y1) = place(layout.positions[i]);
            let (x2, y2) = place(layout.positions[k]);
            writeln!(
                svg,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"grey\" stroke-opacity=\"{}\" stroke-width=\"1.5\"/>",
                fmt2(x1), fmt2(y1), fmt2(x2), fmt2(y2), fmt2(value)
            )
            .unwrap();
        }
    }

    for (vertex, &position) in doc.vertices().iter().zip(&layout.positions) {
        let (cx, cy) = place(position);
        let rx = (vertex.x_fact * options.node_scale).max(options.min_radius);
        let ry = (vertex.y_fact * options.node_scale).max(options.min_radius);
        match vertex.shape {
            Shape::Ellipse => writeln!(
                svg,
                "<ellipse cx=\"{}\" cy=\"{}\" rx=\"{}\" ry=\"{}\" fill=\"lightsteelblue\" stroke=\"black\"/>",
                fmt2(cx), fmt2(cy), fmt2(rx), fmt2(ry)
            )
            .unwrap(),
            Shape::Diamond => writeln!(
                svg,
                "<path d=\"M {} {} L {} {} L {} {} L {} {} Z\" fill=\"lightsteelblue\" stroke=\"black\"/>",
                fmt2(cx), fmt2(cy - ry),
                fmt2(cx + rx), fmt2(cy),
                fmt2(cx), fmt2(cy + ry),
                fmt2(cx - rx), fmt2(cy)
            )
            .unwrap(),
        }
        writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>",
            fmt2(cx + rx + 3.0),
            fmt2(cy + 4.0),
            vertex.label
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::JournalId;
    use crate::pajek::Vertex;

    fn nodes(n: usize) -> Vec<JournalId> {
        (0..n)
            .map(|i| JournalId::new(&format!("J{i}")).unwrap())
            .collect()
    }

    #[test]
    fn single_node_sits_at_the_center() {
        let g = SimilarityGraph::from_edges(nodes(1), &[]);
        let layout = force_layout(&g, &[vec![0.0]], 7, 50);
        assert_eq!(layout.positions, vec![(0.5, 0.5)]);
    }

    #[test]
    fn connected_pair_ends_closer_than_disconnected_pair() {
        let connected = SimilarityGraph::from_edges(nodes(2), &[(0, 1)]);
        let lonely = SimilarityGraph::from_edges(nodes(2), &[]);
        let weights = vec![vec![0.0, 0.9], vec![0.9, 0.0]];
        let zero = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        let dist = |l: &Layout| {
            let (a, b) = (l.positions[0], l.positions[1]);
            ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
        };
        let near = dist(&force_layout(&connected, &weights, 42, 200));
        let far = dist(&force_layout(&lonely, &zero, 42, 200));
        assert!(near < far, "connected {near} vs disconnected {far}");
    }

    #[test]
    fn identical_inputs_give_identical_positions() {
        let g = SimilarityGraph::from_edges(nodes(5), &[(0, 1), (1, 2), (3, 4)]);
        let weights = vec![vec![0.5; 5]; 5];
        let a = force_layout(&g, &weights, 99, 150);
        let b = force_layout(&g, &weights, 99, 150);
        assert_eq!(a, b);
    }

    #[test]
    fn positions_stay_inside_the_unit_square() {
        let g = SimilarityGraph::from_edges(nodes(6), &[(0, 1), (2, 3), (4, 5), (1, 2)]);
        let weights = vec![vec![0.4; 6]; 6];
        let layout = force_layout(&g, &weights, 3, 300);
        for &(x, y) in &layout.positions {
            assert!((0.0..=1.0).contains(&x));
            assert!((0.0..=1.0).contains(&y));
        }
    }

    fn two_vertex_doc() -> MapDocument {
        MapDocument::new(
            vec![
                Vertex {
                    index: 1,
                    label: "Tall".into(),
                    x_fact: 5.147929,
                    y_fact: 11.183432,
                    shape: Shape::Ellipse,
                },
                Vertex {
                    index: 2,
                    label: "Flat".into(),
                    x_fact: 0.0,
                    y_fact: 0.177515,
                    shape: Shape::Diamond,
                },
            ],
            vec![vec![0.0, 0.5], vec![0.5, 0.0]],
        )
        .unwrap()
    }

    #[test]
    fn ellipse_is_taller_than_wide_when_y_fact_dominates() {
        let doc = two_vertex_doc();
        let layout = Layout {
            positions: vec![(0.25, 0.25), (0.75, 0.75)],
            seed: 0,
        };
        let svg = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        let ellipse = svg.lines().find(|l| l.starts_with("<ellipse")).unwrap();
        assert!(ellipse.contains("rx=\"10.30\""), "{ellipse}");
        assert!(ellipse.contains("ry=\"22.37\""), "{ellipse}");
    }

    #[test]
    fn zero_impact_node_gets_the_radius_floor() {
        let doc = two_vertex_doc();
        let layout = Layout {
            positions: vec![(0.25, 0.25), (0.75, 0.75)],
            seed: 0,
        };
        let svg = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        let diamond = svg.lines().find(|l| l.starts_with("<path")).unwrap();
        // x radius floored at 2.0 even though x_fact is 0
        let (cx, cy) = (60.0 + 0.75 * 680.0, 60.0 + 0.75 * 680.0);
        assert!(diamond.contains(&format!("L {:.2} {:.2}", cx + 2.0, cy)), "{diamond}");
    }

    #[test]
    fn every_positive_similarity_becomes_exactly_one_edge() {
        let doc = two_vertex_doc();
        let layout = Layout {
            positions: vec![(0.1, 0.1), (0.9, 0.9)],
            seed: 0,
        };
        let svg = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<line").count(), 1);
        assert!(svg.contains("stroke-opacity=\"0.50\""));
    }

    #[test]
    fn empty_edge_set_renders_nodes_only() {
        let doc = MapDocument::new(
            vec![Vertex {
                index: 1,
                label: "Only".into(),
                x_fact: 1.0,
                y_fact: 1.0,
                shape: Shape::Ellipse,
            }],
            vec![vec![0.0]],
        )
        .unwrap();
        let layout = Layout {
            positions: vec![(0.5, 0.5)],
            seed: 0,
        };
        let svg = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<line").count(), 0);
        assert_eq!(svg.matches("<ellipse").count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        let doc = two_vertex_doc();
        let g = SimilarityGraph::from_edges(nodes(2), &[(0, 1)]);
        let weights = vec![vec![0.0, 0.5], vec![0.5, 0.0]];
        let layout = force_layout(&g, &weights, 11, 100);
        let a = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        let b = render_svg(&doc, &layout, &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_positions_are_rejected() {
        let doc = two_vertex_doc();
        let layout = Layout {
            positions: vec![(0.5, 0.5)],
            seed: 0,
        };
        assert!(matches!(
            render_svg(&doc, &layout, &RenderOptions::default()),
            Err(RenderError::MissingPositions { expected: 2, got: 1 })
        ));
    }
}
