//! Cosine similarity between citation profiles, with sub-cutoff suppression.

use thiserror::Error;

use crate::environment::{Direction, Environment};
use crate::ingest::JournalId;

/// Symmetric cosine values among environment journals. The diagonal is 0 and
/// every off-diagonal entry is either 0 or at least `cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    journals: Vec<JournalId>,
    values: Vec<Vec<f64>>,
    cutoff: f64,
}

impl SimilarityMatrix {
    pub fn journals(&self) -> &[JournalId] {
        &self.journals
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn len(&self) -> usize {
        self.journals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.journals.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SimilarityError {
    #[error("profile vectors must have equal lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

/// The citation profile of each environment journal, in environment order.
///
/// In the cited direction journal k's profile is COLUMN k of the environment
/// matrix (who cites it, diagonal included); in the citing direction it is
/// ROW k (whom it cites).
pub fn profile_vectors(env: &Environment, direction: Direction) -> Vec<Vec<f64>> {
    let n = env.len();
    let matrix = env.matrix();
    (0..n)
        .map(|k| match direction {
            Direction::Cited => (0..n).map(|i| matrix[i][k] as f64).collect(),
            Direction::Citing => matrix[k].iter().map(|&w| w as f64).collect(),
        })
        .collect()
}

/// Cosine of the angle between two nonnegative vectors; 0 when either norm
/// vanishes. Computed in double precision, rounded only at serialization.
pub fn cosine(u: &[f64], v: &[f64]) -> Result<f64, SimilarityError> {
    if u.len() != v.len() {
        return Err(SimilarityError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let dot: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let norm_u = u.iter().map(|a| a * a).sum::<f64>().sqrt();
    let norm_v = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm_u == 0.0 || norm_v == 0.0 {
        return Ok(0.0);
    }
    Ok(dot / (norm_u * norm_v))
}

/// Pairwise cosine over the environment's profile vectors, entries below
/// `cutoff` suppressed to 0 and the diagonal forced to 0.
pub fn similarity_matrix(env: &Environment, direction: Direction, cutoff: f64) -> SimilarityMatrix {
    let profiles = profile_vectors(env, direction);
    let n = profiles.len();
    let mut values = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in i + 1..n {
            // equal lengths by construction
            let value = cosine(&profiles[i], &profiles[k]).unwrap();
            let kept = if value < cutoff { 0.0 } else { value };
            values[i][k] = kept;
            values[k][i] = kept;
        }
    }
    SimilarityMatrix {
        journals: env.journals().to_vec(),
        values,
        cutoff,
    }
}
