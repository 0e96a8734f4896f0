//! Birkhoff–von Neumann decomposition of doubly stochastic matrices.

mod matching;

pub use matching::{perfect_matching, HopcroftKarp};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::channels::random::dirichlet_weights;
use crate::error::{Error, Result};
use crate::matcore::{c64, ComplexMatrix};

/// Bijection on `0..n`, `map[j] = sigma(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &k in &map {
            if k >= n || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidPermutation { n });
            }
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(map: Vec<usize>) -> Result<Self> {
        Self::new(map)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.map
    }
}

/// Zero/one matrix with a one at `(j, sigma(j))`.
pub fn perm_matrix(p: &Permutation) -> ComplexMatrix {
    let n = p.len();
    ComplexMatrix::from_fn(n, n, |j, k| c64(f64::from(u8::from(p.map[j] == k)), 0.0))
}

const REAL_TOL: f64 = 1e-12;
const NONNEG_TOL: f64 = 1e-12;
const MARGINAL_TOL: f64 = 1e-10;

/// Realness and nonnegativity at `tol`, unit row and column sums at `tol`.
pub fn is_doubly_stochastic(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    let n = m.require_square()?;
    for j in 0..n {
        let mut row = 0.0;
        let mut col = 0.0;
        for k in 0..n {
            let z = m[(j, k)];
            if z.im.abs() > tol || z.re < -tol {
                return Ok(false);
            }
            row += z.re;
            col += m[(k, j)].re;
        }
        if (row - 1.0).abs() > tol || (col - 1.0).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DoublyStochasticMatrix {
    mat: ComplexMatrix,
}

impl DoublyStochasticMatrix {
    /// Accepts imaginary parts and negative entries up to 1e-12 and marginal
    /// errors up to 1e-10.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let n = mat.require_square()?;
        for j in 0..n {
            let mut row = 0.0;
            let mut col = 0.0;
            for k in 0..n {
                let z = mat[(j, k)];
                if z.im.abs() > REAL_TOL {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({j}, {k}) has imaginary part {}",
                        z.im
                    )));
                }
                if z.re < -NONNEG_TOL {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({j}, {k}) is negative: {}",
                        z.re
                    )));
                }
                row += z.re;
                col += mat[(k, j)].re;
            }
            if (row - 1.0).abs() > MARGINAL_TOL {
                return Err(Error::InvalidArgument(format!("row {j} sums to {row}")));
            }
            if (col - 1.0).abs() > MARGINAL_TOL {
                return Err(Error::InvalidArgument(format!("column {j} sums to {col}")));
            }
        }
        Ok(Self { mat })
    }

    pub fn n(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BirkhoffTerm {
    pub weight: f64,
    pub perm: Permutation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BirkhoffDecomposition {
    pub terms: Vec<BirkhoffTerm>,
    /// Tolerance the decomposition was computed at.
    pub tol: f64,
}

impl BirkhoffDecomposition {
    pub fn weight_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }

    /// `sum_sigma w_sigma P_sigma`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.terms.first().map_or(0, |t| t.perm.len());
        let mut out = vec![0.0; n * n];
        for t in &self.terms {
            for (j, &k) in t.perm.as_slice().iter().enumerate() {
                out[j * n + k] += t.weight;
            }
        }
        ComplexMatrix::from_fn(n, n, |j, k| c64(out[j * n + k], 0.0))
    }

    /// JSON array of `{"weight": ..., "perm": [...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.terms).expect("terms serialize")
    }
}

/// Greedy decomposition: repeatedly match on entries above `tol`, peel off
/// the permutation with weight equal to its smallest matched entry, and stop
/// once every residual entry is at most `tol`.
pub fn birkhoff_decompose(d: &DoublyStochasticMatrix, tol: f64) -> Result<BirkhoffDecomposition> {
    let n = d.n();
    let mut residual: Vec<f64> = (0..n * n).map(|i| d.mat[(i / n, i % n)].re).collect();
    let mut terms = Vec::new();
    loop {
        let max_entry = residual.iter().copied().fold(0.0_f64, f64::max);
        if max_entry <= tol {
            break;
        }
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|j| (0..n).filter(|&k| residual[j * n + k] > tol).collect())
            .collect();
        let sigma = perfect_matching(&adj).ok_or(Error::NoPerfectMatching {
            residual: max_entry,
        })?;
        let weight = sigma
            .iter()
            .enumerate()
            .map(|(j, &k)| residual[j * n + k])
            .fold(f64::INFINITY, f64::min);
        for (j, &k) in sigma.iter().enumerate() {
            residual[j * n + k] -= weight;
        }
        terms.push(BirkhoffTerm {
            weight,
            perm: Permutation { map: sigma },
        });
    }
    Ok(BirkhoffDecomposition { terms, tol })
}

/// Convex combination of `k` uniformly drawn permutations with
/// Dirichlet(1, ..., 1) weights.
pub fn random_doubly_stochastic(n: usize, k: usize, seed: u64) -> DoublyStochasticMatrix {
    assert!(
        n >= 1 && k >= 1,
        "random_doubly_stochastic requires n, k >= 1"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = dirichlet_weights(k, &mut rng);
    let mut acc = vec![0.0; n * n];
    for w in weights {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(&mut rng);
        for (j, &s) in map.iter().enumerate() {
            acc[j * n + s] += w;
        }
    }
    DoublyStochasticMatrix {
        mat: ComplexMatrix::from_fn(n, n, |j, s| c64(acc[j * n + s], 0.0)),
    }
}
