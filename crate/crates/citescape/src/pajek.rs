//! Pajek map files: the `*Vertices` / `*Matrix` dialect used for citation
//! environment maps.
//!
//! A document serializes as
//!
//! ```text
//! *Vertices N
//! 1 "Label" 0.0 0.0 0.0 x_fact <v> y_fact <v>
//! ...
//! *Matrix
//! <N rows of N space-separated values>
//! ```
//!
//! with LF line endings, no trailing whitespace, and every numeric value in
//! fixed six-decimal notation. The three coordinates are emitted as the
//! literal `0.0 0.0 0.0`; positions are left to the viewer. Non-default
//! shapes append their lowercase Pajek token after the y_fact value.

use std::fmt::Write as _;

use thiserror::Error;

/// Node shape in the rendered map. SSCI journals stay ellipses; journals
/// merged in from the Science Citation Index are drawn as diamonds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Shape {
    #[default]
    Ellipse,
    Diamond,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    /// 1-based position in the file.
    pub index: usize,
    /// Condensed journal name; ASCII letters and digits only.
    pub label: String,
    /// Local impact percentage excluding within-journal citations.
    pub x_fact: f64,
    /// Local impact percentage including within-journal citations.
    pub y_fact: f64,
    pub shape: Shape,
}

/// An ordered vertex list plus the symmetric similarity matrix in the same
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct MapDocument {
    vertices: Vec<Vertex>,
    matrix: Vec<Vec<f64>>,
}

impl MapDocument {
    /// Build a document, enforcing the structural invariants: the matrix is
    /// square with one row per vertex, indices run 1..=N in order, labels are
    /// non-empty ASCII alphanumerics, and no two vertices share a label
    /// (labels are the only identity in the file).
    pub fn new(vertices: Vec<Vertex>, matrix: Vec<Vec<f64>>) -> Result<Self, PajekError> {
        if matrix.len() != vertices.len() {
            return Err(PajekError::DimensionMismatch {
                vertices: vertices.len(),
                matrix: matrix.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != vertices.len()) {
            return Err(PajekError::DimensionMismatch {
                vertices: vertices.len(),
                matrix: row.len(),
            });
        }
        for (pos, vertex) in vertices.iter().enumerate() {
            if vertex.index != pos + 1 {
                return Err(PajekError::BadIndex {
                    expected: pos + 1,
                    found: vertex.index,
                });
            }
            if vertex.label.is_empty()
                || !vertex.label.bytes().all(|b| b.is_ascii_alphanumeric())
            {
                return Err(PajekError::InvalidLabel {
                    label: vertex.label.clone(),
                });
            }
        }
        for i in 0..vertices.len() {
            for k in i + 1..vertices.len() {
                if vertices[i].label == vertices[k].label {
                    return Err(PajekError::LabelCollision {
                        label: vertices[i].label.clone(),
                    });
                }
            }
        }
        Ok(MapDocument { vertices, matrix })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum PajekError {
    #[error("name {0:?} contains no alphanumeric characters to build a label from")]
    UnlabelableName(String),
    #[error("label {label:?} is not a non-empty ASCII alphanumeric string")]
    InvalidLabel { label: String },
    #[error("two names condense to the same label {label:?}")]
    LabelCollision { label: String },
    #[error("vertex indices must be consecutive from 1: expected {expected}, found {found}")]
    BadIndex { expected: usize, found: usize },
    #[error("vertex count {vertices} does not match matrix dimension {matrix}")]
    DimensionMismatch { vertices: usize, matrix: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Condense a journal name into a Pajek label: per whitespace-separated
/// token, uppercase the first letter, lowercase the rest, and drop every
/// character that is not an ASCII letter or digit.
///
/// "Environ Plann A" becomes "EnvironPlannA"; "J Urban Plan D-Asce" becomes
/// "JUrbanPlanDasce".
pub fn make_label(name: &str) -> Result<String, PajekError> {
    let mut label = String::new();
    for token in name.split_whitespace() {
        let first_alpha = token.char_indices().find(|(_, c)| c.is_ascii_alphabetic());
        for (pos, c) in token.char_indices() {
            let mapped = match first_alpha {
                Some((alpha_pos, _)) if pos == alpha_pos => c.to_ascii_uppercase(),
                Some((alpha_pos, _)) if pos > alpha_pos => c.to_ascii_lowercase(),
                _ => c,
            };
            if mapped.is_ascii_alphanumeric() {
                label.push(mapped);
            }
        }
    }
    if label.is_empty() {
        return Err(PajekError::UnlabelableName(name.to_string()));
    }
    Ok(label)
}

/// Fixed six-decimal notation, rounding half away from zero.
pub fn format_six(value: f64) -> String {
    let scaled = (value * 1_000_000.0).round();
    let negative = scaled < 0.0;
    let magnitude = scaled.abs() as u64;
    let int_part = magnitude / 1_000_000;
    let frac_part = magnitude % 1_000_000;
    format!(
        "{}{}.{:06}",
        if negative && magnitude > 0 { "-" } else { "" },
        int_part,
        frac_part
    )
}

/// Serialize a document to the Pajek text format.
pub fn write_map(doc: &MapDocument) -> String {
    let mut out = String::new();
    writeln!(out, "*Vertices {}", doc.vertices.len()).unwrap();
    for vertex in &doc.vertices {
        write!(
            out,
            "{} \"{}\" 0.0 0.0 0.0 x_fact {} y_fact {}",
            vertex.index,
            vertex.label,
            format_six(vertex.x_fact),
            format_six(vertex.y_fact),
        )
        .unwrap();
        if vertex.shape == Shape::Diamond {
            out.push_str(" diamond");
        }
        out.push('\n');
    }
    out.push_str("*Matrix\n");
    for row in &doc.matrix {
        let mut first = true;
        for value in row {
            if !first {
                out.push(' ');
            }
            out.push_str(&format_six(*value));
            first = false;
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> PajekError {
    PajekError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_vertex_line(line_no: usize, line: &str) -> Result<Vertex, PajekError> {
    let trimmed = line.trim();
    let open = trimmed
        .find('"')
        .ok_or_else(|| parse_err(line_no, "vertex label must be quoted"))?;
    let index: usize = trimmed[..open]
        .trim()
        .parse()
        .map_err(|_| parse_err(line_no, "vertex line must start with an integer index"))?;
    let rest = &trimmed[open + 1..];
    let close = rest
        .find('"')
        .ok_or_else(|| parse_err(line_no, "unterminated vertex label"))?;
    let label = rest[..close].to_string();
    let tail: Vec<&str> = rest[close + 1..].split_whitespace().collect();
    if tail.len() < 7 {
        return Err(parse_err(
            line_no,
            "vertex line needs coordinates, x_fact and y_fact",
        ));
    }
    for coord in &tail[0..3] {
        coord
            .parse::<f64>()
            .map_err(|_| parse_err(line_no, format!("invalid coordinate {coord:?}")))?;
    }
    if tail[3] != "x_fact" {
        return Err(parse_err(line_no, "expected x_fact keyword"));
    }
    let x_fact: f64 = tail[4]
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid x_fact value {:?}", tail[4])))?;
    if tail[5] != "y_fact" {
        return Err(parse_err(line_no, "expected y_fact keyword"));
    }
    let y_fact: f64 = tail[6]
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid y_fact value {:?}", tail[6])))?;
    let shape = match tail.get(7) {
        None => Shape::Ellipse,
        Some(&"diamond") => Shape::Diamond,
        Some(&"ellipse") => Shape::Ellipse,
        Some(token) => return Err(parse_err(line_no, format!("unknown shape token {token:?}"))),
    };
    if tail.len() > 8 {
        return Err(parse_err(line_no, "trailing tokens after vertex definition"));
    }
    Ok(Vertex {
        index,
        label,
        x_fact,
        y_fact,
        shape,
    })
}

/// Parse a map document written by [`write_map`]. Extra whitespace between
/// tokens and blank lines are tolerated; structural problems are reported
/// with their line number.
pub fn read_map(text: &str) -> Result<MapDocument, PajekError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing *Vertices header"))?;
    let mut parts = header.split_whitespace();
    let keyword = parts.next().unwrap_or("");
    if !keyword.eq_ignore_ascii_case("*vertices") {
        return Err(parse_err(line_no, "missing *Vertices header"));
    }
    let count: usize = parts
        .next()
        .ok_or_else(|| parse_err(line_no, "*Vertices header needs a count"))?
        .parse()
        .map_err(|_| parse_err(line_no, "invalid vertex count"))?;

    let mut vertices = Vec::with_capacity(count);
    let mut last_line = line_no;
    for expected in 1..=count {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, "unexpected end of vertex list"))?;
        last_line = line_no;
        if line.trim_start().starts_with('*') {
            return Err(parse_err(
                line_no,
                format!("expected {count} vertex lines, found {}", expected - 1),
            ));
        }
        let vertex = parse_vertex_line(line_no, line)?;
        if vertex.index != expected {
            return Err(PajekError::BadIndex {
                expected,
                found: vertex.index,
            });
        }
        vertices.push(vertex);
    }

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(last_line + 1, "missing *Matrix header"))?;
    if !header.trim().eq_ignore_ascii_case("*matrix") {
        return Err(parse_err(line_no, "missing *Matrix header"));
    }
    last_line = line_no;

    let mut matrix = Vec::with_capacity(count);
    for row_no in 0..count {
        let (line_no, line) = lines.next().ok_or_else(|| {
            parse_err(
                last_line + 1,
                format!("expected {count} matrix rows, found {row_no}"),
            )
        })?;
        last_line = line_no;
        let mut row = Vec::with_capacity(count);
        for token in line.split_whitespace() {
            let value: f64 = token
                .parse()
                .map_err(|_| parse_err(line_no, format!("invalid matrix value {token:?}")))?;
            row.push(value);
        }
        if row.len() != count {
            return Err(parse_err(
                line_no,
                format!("matrix row has {} values, expected {count}", row.len()),
            ));
        }
        matrix.push(row);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "unexpected content after matrix block"));
    }

    // identity invariants still apply; ordering is whatever the file says
    if matrix.len() != vertices.len() {
        return Err(PajekError::DimensionMismatch {
            vertices: vertices.len(),
            matrix: matrix.len(),
        });
    }
    Ok(MapDocument { vertices, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condenses_names_to_labels() {
        assert_eq!(make_label("Int J Geogr Inf Sci").unwrap(), "IntJGeogrInfSci");
        assert_eq!(make_label("J Urban Plan D-Asce").unwrap(), "JUrbanPlanDasce");
        assert_eq!(make_label("Cities").unwrap(), "Cities");
        assert_eq!(make_label("Environ Plann A").unwrap(), "EnvironPlannA");
    }

    #[test]
    fn label_requires_alphanumerics() {
        assert!(matches!(
            make_label("--- ***"),
            Err(PajekError::UnlabelableName(_))
        ));
    }

    #[test]
    fn six_decimal_rounding_is_half_away_from_zero() {
        assert_eq!(format_six(11.183431952662722), "11.183432");
        assert_eq!(format_six(5.14792899408284), "5.147929");
        assert_eq!(format_six(0.0), "0.000000");
        assert_eq!(format_six(0.0000005), "0.000001");
        assert_eq!(format_six(-0.0000005), "-0.000001");
        assert_eq!(format_six(28.461538461538463), "28.461538");
    }

    fn single_vertex_doc() -> MapDocument {
        MapDocument::new(
            vec![Vertex {
                index: 1,
                label: "Cities".into(),
                x_fact: 1.0,
                y_fact: 2.0,
                shape: Shape::Ellipse,
            }],
            vec![vec![0.0]],
        )
        .unwrap()
    }

    #[test]
    fn minimal_document_serializes() {
        let text = write_map(&single_vertex_doc());
        assert_eq!(
            text,
            "*Vertices 1\n1 \"Cities\" 0.0 0.0 0.0 x_fact 1.000000 y_fact 2.000000\n*Matrix\n0.000000\n"
        );
    }

    #[test]
    fn diamond_shape_is_appended() {
        let doc = MapDocument::new(
            vec![Vertex {
                index: 1,
                label: "LectNotesComputSc".into(),
                x_fact: 1.0,
                y_fact: 1.0,
                shape: Shape::Diamond,
            }],
            vec![vec![0.0]],
        )
        .unwrap();
        let text = write_map(&doc);
        assert!(text.contains("y_fact 1.000000 diamond\n"), "{text}");
        let read = read_map(&text).unwrap();
        assert_eq!(read.vertices()[0].shape, Shape::Diamond);
    }

    #[test]
    fn write_read_write_is_a_fixed_point() {
        let doc = MapDocument::new(
            vec![
                Vertex {
                    index: 1,
                    label: "A1".into(),
                    x_fact: 0.123456789,
                    y_fact: 3.5,
                    shape: Shape::Ellipse,
                },
                Vertex {
                    index: 2,
                    label: "B2".into(),
                    x_fact: 0.0,
                    y_fact: 0.0000004,
                    shape: Shape::Diamond,
                },
            ],
            vec![vec![0.0, 0.87654321], vec![0.87654321, 0.0]],
        )
        .unwrap();
        let once = write_map(&doc);
        let twice = write_map(&read_map(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn line_count_matches_dimension() {
        let text = write_map(&single_vertex_doc());
        assert_eq!(text.lines().count(), 1 + 2 + 1);
    }

    #[test]
    fn golden_file_parses_to_ten_vertices() {
        let doc = read_map(crate::fixtures::TABLE2_GOLDEN).unwrap();
        assert_eq!(doc.len(), 10);
        assert_eq!(doc.vertices()[2].label, "EnvironPlannB");
        assert_eq!(doc.vertices()[2].x_fact, 5.147929);
        assert_eq!(doc.vertices()[2].y_fact, 11.183432);
    }

    #[test]
    fn matrix_text_is_symmetric() {
        let text = write_map(&read_map(crate::fixtures::TABLE2_GOLDEN).unwrap());
        let rows: Vec<Vec<&str>> = text
            .lines()
            .skip(12)
            .map(|l| l.split_whitespace().collect())
            .collect();
        for i in 0..10 {
            for k in 0..10 {
                assert_eq!(rows[i][k], rows[k][i]);
            }
        }
    }

    #[test]
    fn missing_matrix_rows_is_a_dimension_error() {
        let mut text = String::from("*Vertices 2\n");
        text.push_str("1 \"A\" 0.0 0.0 0.0 x_fact 1.000000 y_fact 1.000000\n");
        text.push_str("2 \"B\" 0.0 0.0 0.0 x_fact 1.000000 y_fact 1.000000\n");
        text.push_str("*Matrix\n0.000000 0.000000\n");
        let err = read_map(&text).unwrap_err();
        assert!(matches!(err, PajekError::Parse { .. }), "{err}");
        assert!(err.to_string().contains("expected 2 matrix rows"), "{err}");
    }

    #[test]
    fn missing_headers_are_parse_errors() {
        assert!(read_map("nonsense\n").is_err());
        let err = read_map("*Vertices 1\n1 \"A\" 0.0 0.0 0.0 x_fact 0.000000 y_fact 0.000000\n")
            .unwrap_err();
        assert!(err.to_string().contains("*Matrix"), "{err}");
    }

    #[test]
    fn extra_whitespace_is_tolerated() {
        let text = "*Vertices 1\n  1   \"A\"   0.0  0.0 0.0   x_fact   1.500000  y_fact 2.000000\n*Matrix\n  0.000000  \n";
        let doc = read_map(text).unwrap();
        assert_eq!(doc.vertices()[0].x_fact, 1.5);
    }

    #[test]
    fn label_collision_is_rejected_at_build_time() {
        let vertices = vec![
            Vertex {
                index: 1,
                label: "Same".into(),
                x_fact: 0.0,
                y_fact: 0.0,
                shape: Shape::Ellipse,
            },
            Vertex {
                index: 2,
                label: "Same".into(),
                x_fact: 0.0,
                y_fact: 0.0,
                shape: Shape::Ellipse,
            },
        ];
        let err = MapDocument::new(vertices, vec![vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap_err();
        assert!(matches!(err, PajekError::LabelCollision { .. }));
    }
}
