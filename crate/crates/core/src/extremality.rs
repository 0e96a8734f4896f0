//! Landau–Streater extremality test for unital channels.
//!
//! A unital channel with linearly independent Kraus operators
//! `A_1, ..., A_N` is extremal iff the `N²` block-diagonal matrices
//! `A_k† A_l ⊕ A_l A_k†` are linearly independent. Each block pair is
//! flattened into a row of length `2 dim²`; the stack is full rank iff the
//! channel is extremal.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::channels::{self, kraus_from_choi, to_choi, KrausChannel};
use crate::error::{Error, Result};
use crate::matcore::{numeric_rank, ComplexMatrix, C64, DEFAULT_RANK_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    pub kraus_count: usize,
    pub test_vector_count: usize,
    pub ambient_dim: usize,
    pub rank: usize,
    pub extremal: bool,
}

/// Minimal Kraus set with the same Choi matrix.
pub fn canonical_kraus(k: &KrausChannel, tol: f64) -> Result<KrausChannel> {
    kraus_from_choi(&to_choi(k), tol)
}

/// Stacked test matrix: row `k * N + l` is `vec(A_k† A_l) ++ vec(A_l A_k†)`.
pub fn test_vectors(kraus: &[ComplexMatrix]) -> ComplexMatrix {
    let n = kraus.len();
    let dim = kraus.first().map_or(0, ComplexMatrix::rows);
    let len = dim * dim;
    let adjoints: Vec<ComplexMatrix> = kraus.iter().map(ComplexMatrix::adjoint).collect();
    let mut out = DMatrix::<C64>::zeros(n * n, 2 * len);
    for (k, ak) in adjoints.iter().enumerate() {
        for (l, al) in kraus.iter().enumerate() {
            let row = k * n + l;
            let left = ak * al;
            let right = al * ak;
            for (idx, z) in left.as_slice().iter().enumerate() {
                out[(row, idx)] = *z;
            }
            for (idx, z) in right.as_slice().iter().enumerate() {
                out[(row, len + idx)] = *z;
            }
        }
    }
    ComplexMatrix::wrap(out)
}

fn report_for(kraus: &[ComplexMatrix]) -> ExtremalityReport {
    let n = kraus.len();
    let dim = kraus[0].rows();
    let rank = numeric_rank(&test_vectors(kraus), DEFAULT_RANK_TOL);
    ExtremalityReport {
        kraus_count: n,
        test_vector_count: n * n,
        ambient_dim: 2 * dim * dim,
        rank,
        extremal: rank == n * n,
    }
}

/// Extremality of a unital channel. `tol` governs the unitality check and
/// the eigenvalue cut used for canonicalization; rank uses
/// [`DEFAULT_RANK_TOL`].
pub fn landau_streater_extremal(k: &KrausChannel, tol: f64) -> Result<ExtremalityReport> {
    tensor_power_extremal(k, 1, tol)
}

/// The same criterion applied to `k^{⊗n}`, whose Kraus set is the `n`-fold
/// products of the canonical factor set (itself linearly independent).
pub fn tensor_power_extremal(k: &KrausChannel, n: usize, tol: f64) -> Result<ExtremalityReport> {
    k.require_unital(tol)?;
    let canonical = canonical_kraus(k, tol)?;
    let power = channels::tensor_power(&canonical, n)?;
    Ok(report_for(power.kraus()))
}

/// Equality of the maps, decided on Choi matrices in max-entry norm.
pub fn kraus_equivalent(a: &KrausChannel, b: &KrausChannel, tol: f64) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(to_choi(a).matrix().max_abs_diff(to_choi(b).matrix()) <= tol)
}

/// Whether every canonical Kraus operator equals its transpose, in the
/// computational basis.
pub fn is_symmetric_kraus(k: &KrausChannel, tol: f64) -> bool {
    let Ok(canonical) = canonical_kraus(k, tol) else {
        return false;
    };
    canonical
        .kraus()
        .iter()
        .all(|a| a.max_abs_diff(&a.transpose()) <= tol)
}
