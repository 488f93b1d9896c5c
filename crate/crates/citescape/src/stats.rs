//! Factor analysis of citation profiles (principal components with varimax
//! rotation) and rank statistics.

use thiserror::Error;

/// Factor loadings for a set of variables, together with the extraction
/// eigenvalues and rotation bookkeeping.
///
/// `loadings[v][c]` is variable v's loading on retained component c.
/// `eigenvalues` holds the full descending spectrum of the input matrix, not
/// just the retained part, so the decomposition can be checked end to end.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadingsMatrix {
    pub variables: Vec<String>,
    pub loadings: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    pub rotated: bool,
    pub iterations_used: usize,
    pub converged: bool,
    /// Orthogonal rotation applied by varimax (columns permuted and signed
    /// like the loadings); `None` before rotation.
    pub rotation: Option<Vec<Vec<f64>>>,
}

impl LoadingsMatrix {
    pub fn component_count(&self) -> usize {
        self.loadings.first().map(|row| row.len()).unwrap_or(0)
    }

    pub fn communality(&self, variable: usize) -> f64 {
        self.loadings[variable].iter().map(|l| l * l).sum()
    }
}

/// How many principal components to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Retention {
    /// Components with eigenvalue strictly greater than 1.
    Kaiser,
    Fixed(usize),
}

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("input vectors must have equal lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least {need} values, got {got}")]
    TooFewValues { need: usize, got: usize },
    #[error("vector has zero variance")]
    ZeroVariance,
    #[error("variable {name:?} has zero variance")]
    DegenerateVariable { name: String },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("cannot retain {requested} of {available} components")]
    BadRetention { requested: usize, available: usize },
    #[error("loadings are already rotated")]
    AlreadyRotated,
    #[error("eigendecomposition did not converge")]
    NoConvergence,
}

/// Pearson correlation via single-pass online moments.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::TooFewValues {
            need: 2,
            got: x.len(),
        });
    }
    let mut mean_x = 0.0;
    let mut mean_y = 0.0;
    let mut m2x = 0.0;
    let mut m2y = 0.0;
    let mut cxy = 0.0;
    for (n, (&xi, &yi)) in x.iter().zip(y).enumerate() {
        let count = (n + 1) as f64;
        let dx = xi - mean_x;
        mean_x += dx / count;
        let dy = yi - mean_y;
        mean_y += dy / count;
        m2x += dx * (xi - mean_x);
        m2y += dy * (yi - mean_y);
        cxy += dx * (yi - mean_y);
    }
    if m2x == 0.0 || m2y == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    Ok(cxy / (m2x * m2y).sqrt())
}

/// Pairwise Pearson correlations among named variables; unit diagonal.
pub fn pearson_correlation_matrix(
    names: &[String],
    vectors: &[Vec<f64>],
) -> Result<Vec<Vec<f64>>, StatsError> {
    if vectors.len() < 2 {
        return Err(StatsError::TooFewValues {
            need: 2,
            got: vectors.len(),
        });
    }
    let n = vectors.len();
    let mut corr = vec![vec![1.0; n]; n];
    for i in 0..n {
        for k in i + 1..n {
            let value = pearson(&vectors[i], &vectors[k]).map_err(|e| match e {
                StatsError::ZeroVariance => {
                    // the earlier vector gets blamed only if it is the flat one
                    let flat = if is_constant(&vectors[i]) { i } else { k };
                    StatsError::DegenerateVariable {
                        name: names.get(flat).cloned().unwrap_or_else(|| flat.to_string()),
                    }
                }
                other => other,
            })?;
            corr[i][k] = value;
            corr[k][i] = value;
        }
    }
    Ok(corr)
}

fn is_constant(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

fn check_symmetric(matrix: &[Vec<f64>]) -> Result<usize, StatsError> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(StatsError::NotSquare);
    }
    for i in 0..n {
        for k in i + 1..n {
            if (matrix[i][k] - matrix[k][i]).abs() > 1e-9 {
                return Err(StatsError::NotSymmetric { row: i, col: k });
            }
        }
    }
    Ok(n)
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm falls below 1e-12.
///
/// Returns eigenvalues in descending order with their eigenvectors
/// (`vectors[c]` belongs to `values[c]`), each vector signed so its largest
/// component is positive.
pub fn eigen_symmetric(matrix: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>), StatsError> {
    let n = check_symmetric(matrix)?;
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v = identity(n);
    const OFF_DIAG_TOL: f64 = 1e-12;
    const MAX_SWEEPS: usize = 100;

    let off = |a: &[Vec<f64>]| -> f64 {
        let mut sum = 0.0;
        for i in 0..n {
            for k in 0..n {
                if i != k {
                    sum += a[i][k] * a[i][k];
                }
            }
        }
        sum.sqrt()
    };

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if off(&a) < OFF_DIAG_TOL {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                if a[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for i in 0..n {
                    let vip = v[i][p];
                    let viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    if !converged && off(&a) >= OFF_DIAG_TOL {
        return Err(StatsError::NoConvergence);
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|c| (a[c][c], (0..n).map(|i| v[i][c]).collect()))
        .collect();
    pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    for (_, vector) in &mut pairs {
        let dominant = vector
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .map(|(i, _)| i)
            .unwrap_or(0);
        if vector[dominant] < 0.0 {
            for entry in vector.iter_mut() {
                *entry = -*entry;
            }
        }
    }
    Ok(pairs.into_iter().unzip())
}

fn identity(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect())
        .collect()
}

/// Principal component extraction from a correlation matrix.
///
/// Loadings are eigenvectors scaled by the square roots of their
/// eigenvalues; retention keeps components with eigenvalue strictly above 1
/// (Kaiser) or a fixed count.
pub fn principal_components(
    corr: &[Vec<f64>],
    names: &[String],
    retain: Retention,
) -> Result<LoadingsMatrix, StatsError> {
    let (eigenvalues, vectors) = eigen_symmetric(corr)?;
    let n = eigenvalues.len();
    let kept = match retain {
        Retention::Kaiser => eigenvalues.iter().take_while(|&&v| v > 1.0).count(),
        Retention::Fixed(k) if k <= n => k,
        Retention::Fixed(k) => {
            return Err(StatsError::BadRetention {
                requested: k,
                available: n,
            })
        }
    };
    let loadings: Vec<Vec<f64>> = (0..n)
        .map(|variable| {
            (0..kept)
                .map(|c| vectors[c][variable] * eigenvalues[c].max(0.0).sqrt())
                .collect()
        })
        .collect();
    Ok(LoadingsMatrix {
        variables: names.to_vec(),
        loadings,
        eigenvalues,
        rotated: false,
        iterations_used: 0,
        converged: true,
        rotation: None,
    })
}

fn varimax_criterion(loadings: &[Vec<f64>], components: usize) -> f64 {
    let n = loadings.len() as f64;
    (0..components)
        .map(|c| {
            let (quartic, quadratic) = loadings.iter().fold((0.0, 0.0), |(q4, q2), row| {
                let sq = row[c] * row[c];
                (q4 + sq * sq, q2 + sq)
            });
            quartic - quadratic * quadratic / n
        })
        .sum()
}

/// Varimax rotation by pairwise planar rotations, optionally on
/// Kaiser-normalized rows, sweeping until the relative criterion improvement
/// drops below `tol` or `max_iter` sweeps have run.
///
/// Output columns are ordered by descending sum of squared loadings and
/// signed so each column's largest-magnitude loading is positive. If the
/// sweep budget runs out the result carries `converged: false`.
pub fn varimax(
    input: &LoadingsMatrix,
    kaiser_normalize: bool,
    tol: f64,
    max_iter: usize,
) -> Result<LoadingsMatrix, StatsError> {
    if input.rotated {
        return Err(StatsError::AlreadyRotated);
    }
    let n = input.loadings.len();
    let k = input.component_count();
    let mut loadings = input.loadings.clone();
    let mut rotation = identity(k);
    if k < 2 || n == 0 {
        return Ok(LoadingsMatrix {
            rotated: true,
            iterations_used: 0,
            converged: true,
            rotation: Some(rotation),
            ..input.clone()
        });
    }

    let scale: Vec<f64> = loadings
        .iter()
        .map(|row| row.iter().map(|l| l * l).sum::<f64>().sqrt())
        .collect();
    if kaiser_normalize {
        for (row, &h) in loadings.iter_mut().zip(&scale) {
            if h > 0.0 {
                for value in row.iter_mut() {
                    *value /= h;
                }
            }
        }
    }

    let nf = n as f64;
    let mut last = varimax_criterion(&loadings, k);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        for p in 0..k - 1 {
            for q in p + 1..k {
                let mut sum_u = 0.0;
                let mut sum_v = 0.0;
                let mut sum_u2_v2 = 0.0;
                let mut sum_uv = 0.0;
                for row in &loadings {
                    let (x, y) = (row[p], row[q]);
                    let u = x * x - y * y;
                    let w = 2.0 * x * y;
                    sum_u += u;
                    sum_v += w;
                    sum_u2_v2 += u * u - w * w;
                    sum_uv += u * w;
                }
                let numerator = 2.0 * sum_uv - 2.0 * sum_u * sum_v / nf;
                let denominator = sum_u2_v2 - (sum_u * sum_u - sum_v * sum_v) / nf;
                let angle = 0.25 * numerator.atan2(denominator);
                if angle == 0.0 {
                    continue;
                }
                let (sin, cos) = angle.sin_cos();
                for row in loadings.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = x * cos + y * sin;
                    row[q] = -x * sin + y * cos;
                }
                for row in rotation.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = x * cos + y * sin;
                    row[q] = -x * sin + y * cos;
                }
            }
        }
        let now = varimax_criterion(&loadings, k);
        let relative = if last.abs() > f64::MIN_POSITIVE {
            (now - last).abs() / last.abs()
        } else {
            (now - last).abs()
        };
        last = now;
        if relative < tol {
            converged = true;
            break;
        }
    }

    if kaiser_normalize {
        for (row, &h) in loadings.iter_mut().zip(&scale) {
            if h > 0.0 {
                for value in row.iter_mut() {
                    *value *= h;
                }
            }
        }
    }

    // order components by explained variance, then make the dominant
    // loading of each positive
    let mut order: Vec<usize> = (0..k).collect();
    let column_ss = |c: usize| -> f64 { loadings.iter().map(|row| row[c] * row[c]).sum() };
    order.sort_by(|&a, &b| column_ss(b).partial_cmp(&column_ss(a)).unwrap());
    let mut signs = vec![1.0; k];
    for (slot, &c) in order.iter().enumerate() {
        let dominant = loadings
            .iter()
            .map(|row| row[c])
            .enumerate()
            .max_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .map(|(_, value)| value)
            .unwrap_or(1.0);
        signs[slot] = if dominant < 0.0 { -1.0 } else { 1.0 };
    }
    let permuted = |rows: &[Vec<f64>]| -> Vec<Vec<f64>> {
        rows.iter()
            .map(|row| {
                order
                    .iter()
                    .enumerate()
                    .map(|(slot, &c)| row[c] * signs[slot])
                    .collect()
            })
            .collect()
    };

    Ok(LoadingsMatrix {
        variables: input.variables.clone(),
        loadings: permuted(&loadings),
        eigenvalues: input.eigenvalues.clone(),
        rotated: true,
        iterations_used: iterations,
        converged,
        rotation: Some(permuted(&rotation)),
    })
}

/// Average ranks (1-based), assigning tied values the mean of the positions
/// they occupy.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start;
        while end + 1 < order.len() && values[order[end + 1]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end) as f64 / 2.0 + 1.0;
        for &index in &order[start..=end] {
            ranks[index] = rank;
        }
        start = end + 1;
    }
    ranks
}

/// Spearman's rank correlation with average-rank tie handling: the Pearson
/// correlation of the two rank vectors.
pub fn spearman_rho(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::TooFewValues {
            need: 2,
            got: x.len(),
        });
    }
    pearson(&average_ranks(x), &average_ranks(y))
}

/// Factor-analyze an environment's cited profiles: correlation matrix over
/// the profile vectors, principal components, varimax with Kaiser
/// normalization.
pub fn factor_analysis(
    env: &crate::environment::Environment,
    direction: crate::environment::Direction,
    retain: Retention,
) -> Result<LoadingsMatrix, StatsError> {
    let names: Vec<String> = env.journals().iter().map(|j| j.to_string()).collect();
    let profiles = crate::similarity::profile_vectors(env, direction);
    let corr = pearson_correlation_matrix(&names, &profiles)?;
    let unrotated = principal_components(&corr, &names, retain)?;
    varimax(&unrotated, true, 1e-6, 100)
}
