//! Embedded reference data: the published citation environment of
//! Environment and Planning B in 2004, as machine-readable fixtures.
//!
//! Each fixture ships with a provenance note next to its data file under
//! `fixtures/`. The golden map file is reproduced byte for byte by the
//! pipeline run on `table1_env` with default parameters.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ingest::{self, CitationGraph, IngestError, JournalId, JournalMeta};

/// Edge list of the ten-journal cited environment (zeros omitted).
pub const TABLE1_EDGES: &str = include_str!("../fixtures/table1_env/edges.csv");
/// Golden Pajek output for the seed's cited environment.
pub const TABLE2_GOLDEN: &str = include_str!("../fixtures/table2_golden/EnvironPlannB.net");
/// Published rotated loadings (blank below |0.10|), reference only.
pub const TABLE3_LOADINGS: &str = include_str!("../fixtures/table3_loadings/loadings.csv");
/// Impact factors and global citation totals of the ten journals.
pub const TABLE4_META: &str = include_str!("../fixtures/table4_meta/meta.csv");
/// table1_env plus the derived Geogr Anal edge for the citing direction.
pub const CITING_EDGES: &str = include_str!("../fixtures/citing_env/edges.csv");

/// One published loadings row; `None` marks a suppressed (blank) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadingRow {
    pub journal: String,
    pub loadings: Vec<Option<f64>>,
}

/// Parsed fixture content.
#[derive(Debug, Clone)]
pub enum Fixture {
    /// Ten-journal cited environment graph with metadata attached.
    Table1Env(CitationGraph),
    /// Exact bytes of the reference Pajek map.
    Table2Golden(String),
    /// Published rotated component matrix.
    Table3Loadings(Vec<LoadingRow>),
    /// Journal metadata map.
    Table4Meta(BTreeMap<JournalId, JournalMeta>),
    /// Eleven-journal graph whose citing-side selection has six members.
    CitingEnv(CitationGraph),
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
}

fn graph_with_meta(edges: &str) -> Result<CitationGraph, IngestError> {
    let mut graph = ingest::parse_edge_list(edges)?;
    graph.attach_metadata(ingest::parse_metadata(TABLE4_META)?);
    graph.validate_totals()?;
    Ok(graph)
}

fn parse_loadings(input: &str) -> Vec<LoadingRow> {
    input
        .lines()
        .skip(1)
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let mut fields = line.split(',');
            let journal = fields.next().unwrap_or("").to_string();
            let loadings = fields
                .map(|cell| cell.trim().parse::<f64>().ok())
                .collect();
            LoadingRow { journal, loadings }
        })
        .collect()
}

/// Load a fixture by name: one of `table1_env`, `table2_golden`,
/// `table3_loadings`, `table4_meta`, `citing_env`.
pub fn load_fixture(name: &str) -> Result<Fixture, FixtureError> {
    match name {
        "table1_env" => Ok(Fixture::Table1Env(graph_with_meta(TABLE1_EDGES)?)),
        "table2_golden" => Ok(Fixture::Table2Golden(TABLE2_GOLDEN.to_string())),
        "table3_loadings" => Ok(Fixture::Table3Loadings(parse_loadings(TABLE3_LOADINGS))),
        "table4_meta" => Ok(Fixture::Table4Meta(ingest::parse_metadata(TABLE4_META)?)),
        "citing_env" => Ok(Fixture::CitingEnv(graph_with_meta(CITING_EDGES)?)),
        other => Err(FixtureError::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_fixture_has_ten_journals_and_grandsum_1690() {
        let Fixture::Table1Env(graph) = load_fixture("table1_env").unwrap() else {
            panic!("wrong variant");
        };
        assert_eq!(graph.journals().len(), 10);
        let total: u64 = graph.edges().map(|(_, _, w)| w).sum();
        assert_eq!(total, 1690);
    }

    #[test]
    fn table4_fixture_has_ten_metadata_rows() {
        let Fixture::Table4Meta(meta) = load_fixture("table4_meta").unwrap() else {
            panic!("wrong variant");
        };
        assert_eq!(meta.len(), 10);
        assert!(meta.values().all(|m| m.impact_factor.is_some()));
    }

    #[test]
    fn citing_fixture_adds_the_derived_geogr_anal_edge() {
        let Fixture::CitingEnv(graph) = load_fixture("citing_env").unwrap() else {
            panic!("wrong variant");
        };
        let seed = JournalId::new("Environ Plann B").unwrap();
        let counts = [
            ("Environ Plann A", 25),
            ("Environ Plann B", 102),
            ("Int J Geogr Inf Sci", 34),
            ("J Am Plann Assoc", 24),
            ("Urban Stud", 22),
            ("Geogr Anal", 18),
        ];
        let mut sum = 0;
        for (name, expected) in counts {
            let weight = graph.weight(&seed, &JournalId::new(name).unwrap());
            assert_eq!(weight, expected, "{name}");
            sum += weight;
        }
        assert_eq!(sum, 225);
    }

    #[test]
    fn loadings_fixture_has_blanks_and_anchors() {
        let Fixture::Table3Loadings(rows) = load_fixture("table3_loadings").unwrap() else {
            panic!("wrong variant");
        };
        assert_eq!(rows.len(), 10);
        let prof = rows.iter().find(|r| r.journal == "Prof Geogr").unwrap();
        assert_eq!(prof.loadings[0], None);
        assert_eq!(prof.loadings[3], Some(0.940));
    }

    #[test]
    fn unknown_fixture_name_is_an_error() {
        assert!(matches!(
            load_fixture("table9"),
            Err(FixtureError::UnknownFixture(_))
        ));
    }
}
