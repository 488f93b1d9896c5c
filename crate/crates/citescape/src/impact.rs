//! Local citation impact: a journal's percentage share of its environment's
//! grandsum, with and without within-journal citations.

use thiserror::Error;

use crate::environment::{Direction, Environment};
use crate::ingest::JournalId;

/// Impact of one journal inside one environment. `pct_with_self` feeds the
/// y_fact node size, `pct_without_self` the x_fact.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalImpact {
    pub journal: JournalId,
    pub raw_total: u64,
    pub raw_self: u64,
    pub pct_with_self: f64,
    pub pct_without_self: f64,
}

#[derive(Debug, Error)]
pub enum ImpactError {
    #[error("environment of {seed} has a zero grandsum; local impact is undefined")]
    DegenerateEnvironment { seed: JournalId },
}

/// Local impact of the journal at index `k`. In the cited direction the raw
/// total is the in-environment column sum, in the citing direction the row
/// sum; the self count is the diagonal cell either way.
pub fn local_impact(
    env: &Environment,
    k: usize,
    direction: Direction,
) -> Result<LocalImpact, ImpactError> {
    if env.grandsum() == 0 {
        return Err(ImpactError::DegenerateEnvironment {
            seed: env.seed().clone(),
        });
    }
    let matrix = env.matrix();
    let raw_total: u64 = match direction {
        Direction::Cited => (0..env.len()).map(|i| matrix[i][k]).sum(),
        Direction::Citing => matrix[k].iter().sum(),
    };
    let raw_self = matrix[k][k];
    let grandsum = env.grandsum() as f64;
    Ok(LocalImpact {
        journal: env.journals()[k].clone(),
        raw_total,
        raw_self,
        pct_with_self: 100.0 * raw_total as f64 / grandsum,
        pct_without_self: 100.0 * (raw_total - raw_self) as f64 / grandsum,
    })
}

/// One [`LocalImpact`] per environment journal, in environment order.
pub fn impact_report(
    env: &Environment,
    direction: Direction,
) -> Result<Vec<LocalImpact>, ImpactError> {
    (0..env.len()).map(|k| local_impact(env, k, direction)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::environment::{build_environment_matrix, environment_of};
    use crate::fixtures;
    use crate::ingest::{parse_edge_list, parse_metadata, JournalId};

    fn j(name: &str) -> JournalId {
        JournalId::new(name).unwrap()
    }

    fn table1_env() -> Environment {
        let mut graph = parse_edge_list(fixtures::TABLE1_EDGES).unwrap();
        graph.attach_metadata(parse_metadata(fixtures::TABLE4_META).unwrap());
        environment_of(&graph, &j("Environ Plann B"), Direction::Cited, 1.0)
            .unwrap()
            .0
    }

    fn pct(env: &Environment, name: &str) -> (f64, f64) {
        let k = env.index_of(&j(name)).unwrap();
        let impact = local_impact(env, k, Direction::Cited).unwrap();
        (impact.pct_with_self, impact.pct_without_self)
    }

    #[test]
    fn seed_impact_matches_printed_factors() {
        let env = table1_env();
        let (with_self, without_self) = pct(&env, "Environ Plann B");
        assert!((with_self - 11.183432).abs() < 5e-7);
        assert!((without_self - 5.147929).abs() < 5e-7);
        let k = env.index_of(&j("Environ Plann B")).unwrap();
        let impact = local_impact(&env, k, Direction::Cited).unwrap();
        assert_eq!(impact.raw_total, 189);
        assert_eq!(impact.raw_self, 102);
    }

    #[test]
    fn journal_with_only_self_citations_has_zero_corrected_impact() {
        let env = table1_env();
        let (with_self, without_self) = pct(&env, "J Urban Plan D-Asce");
        assert!((with_self - 0.177515).abs() < 5e-7);
        assert_eq!(without_self, 0.0);
    }

    #[test]
    fn urban_stud_and_cities_match_printed_factors() {
        let env = table1_env();
        let (with_self, without_self) = pct(&env, "Urban Stud");
        assert!((with_self - 28.461538).abs() < 5e-7);
        assert!((without_self - 13.668639).abs() < 5e-7);
        let (with_self, without_self) = pct(&env, "Cities");
        assert!((with_self - 5.562130).abs() < 5e-7);
        assert!((without_self - 3.313609).abs() < 5e-7);
    }

    #[test]
    fn with_self_percentages_partition_the_grandsum() {
        let env = table1_env();
        let report = impact_report(&env, Direction::Cited).unwrap();
        let total: f64 = report.iter().map(|i| i.pct_with_self).sum();
        assert!((total - 100.0).abs() < 1e-9, "{total}");
    }

    #[test]
    fn single_journal_environment_is_all_self_citations() {
        let graph = parse_edge_list("A,A,7\n").unwrap();
        let env = build_environment_matrix(&graph, &[j("A")].into(), &j("A"), Direction::Cited, 1.0)
            .unwrap();
        let impact = local_impact(&env, 0, Direction::Cited).unwrap();
        assert_eq!(impact.pct_with_self, 100.0);
        assert_eq!(impact.pct_without_self, 0.0);
    }

    #[test]
    fn zero_grandsum_is_degenerate() {
        let graph = parse_edge_list("A,B,1\n").unwrap();
        let env = build_environment_matrix(&graph, &[j("A")].into(), &j("A"), Direction::Cited, 1.0)
            .unwrap();
        assert!(matches!(
            impact_report(&env, Direction::Cited),
            Err(ImpactError::DegenerateEnvironment { .. })
        ));
    }

    #[test]
    fn exclusion_changes_percentages_but_not_self_counts() {
        let env = table1_env();
        let reduced =
            crate::environment::apply_exclusions(&env, &[j("Urban Stud")].into()).unwrap();
        let before = impact_report(&env, Direction::Cited).unwrap();
        let after = impact_report(&reduced, Direction::Cited).unwrap();
        for impact in &after {
            let original = before
                .iter()
                .find(|i| i.journal == impact.journal)
                .unwrap();
            assert_eq!(impact.raw_self, original.raw_self);
            assert_ne!(impact.pct_with_self, original.pct_with_self);
        }
    }

    #[test]
    fn corrected_equals_uncorrected_without_self_loop() {
        let graph = parse_edge_list("A,B,4\nB,B,1\n").unwrap();
        let env = build_environment_matrix(
            &graph,
            &[j("A"), j("B")].into(),
            &j("B"),
            Direction::Cited,
            1.0,
        )
        .unwrap();
        let a = env.index_of(&j("A")).unwrap();
        let impact = local_impact(&env, a, Direction::Cited).unwrap();
        assert_eq!(impact.raw_self, 0);
        assert_eq!(impact.pct_with_self, impact.pct_without_self);
    }
}
