//! Choi representation.
//!
//! Column-stacking convention throughout: `vec(A)[i + d*j] = A[i][j]` and
//! `J = sum_i vec(A_i) vec(A_i)†`. Equivalently `J = sum_{jl} E_jl ⊗ T(E_jl)`
//! with the input factor indexing blocks, so tracing out the second (output)
//! factor yields `I` for a trace-preserving map.

use nalgebra::DMatrix;

use super::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::{self, c64, ComplexMatrix, C64, DEFAULT_TOL};

/// `dim² x dim²` Choi matrix of a trace-preserving CP map.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiMatrix {
    dim: usize,
    mat: ComplexMatrix,
}

impl ChoiMatrix {
    /// Validates Hermiticity, positivity and the trace-preservation
    /// partial-trace condition, all at 1e-10.
    pub fn new(dim: usize, mat: ComplexMatrix) -> Result<Self> {
        let n = mat.require_square()?;
        if n != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: n,
            });
        }
        let herm = mat.hermitian_deviation();
        if herm > DEFAULT_TOL {
            return Err(Error::InvalidChoi {
                reason: format!("not Hermitian (deviation {herm:.3e})"),
            });
        }
        let min_eig = matcore::min_eigenvalue(&mat)?;
        if min_eig < -DEFAULT_TOL {
            return Err(Error::NotPsd {
                eigenvalue: min_eig,
            });
        }
        let choi = Self { dim, mat };
        let tp = choi
            .partial_trace_output()
            .max_abs_diff(&ComplexMatrix::identity(dim));
        if tp > DEFAULT_TOL {
            return Err(Error::InvalidChoi {
                reason: format!("partial trace deviates from identity by {tp:.3e}"),
            });
        }
        Ok(choi)
    }

    /// Choi matrix of an arbitrary linear map given by its action on
    /// operators, evaluated on the matrix-unit basis. No CPTP check.
    pub fn from_linear_map(
        dim: usize,
        map: impl Fn(&ComplexMatrix) -> ComplexMatrix,
    ) -> ComplexMatrix {
        let n = dim * dim;
        let mut out = DMatrix::<C64>::zeros(n, n);
        for j in 0..dim {
            for l in 0..dim {
                let unit = ComplexMatrix::from_fn(dim, dim, |r, c| {
                    c64(f64::from(u8::from(r == j && c == l)), 0.0)
                });
                let image = map(&unit);
                for i in 0..dim {
                    for k in 0..dim {
                        out[(i + dim * j, k + dim * l)] = image[(i, k)];
                    }
                }
            }
        }
        ComplexMatrix::wrap(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Trace over the output (fast) factor: `dim x dim`.
    pub fn partial_trace_output(&self) -> ComplexMatrix {
        let d = self.dim;
        ComplexMatrix::from_fn(d, d, |j, l| {
            (0..d).map(|i| self.mat[(i + d * j, i + d * l)]).sum()
        })
    }
}

/// `J = sum_i vec(A_i) vec(A_i)†`.
pub fn to_choi(k: &KrausChannel) -> ChoiMatrix {
    let d = k.dim();
    let n = d * d;
    let mut out = DMatrix::<C64>::zeros(n, n);
    for a in k.kraus() {
        let v = a.as_dmatrix().as_slice();
        for col in 0..n {
            let vc = v[col].conj();
            if vc == c64(0.0, 0.0) {
                continue;
            }
            for row in 0..n {
                out[(row, col)] += v[row] * vc;
            }
        }
    }
    ChoiMatrix {
        dim: d,
        mat: ComplexMatrix::wrap(out),
    }
}

/// Canonical Kraus set from the eigendecomposition of `j`: one operator
/// `sqrt(lambda) * unvec(v)` per eigenvalue above `tol`, largest first.
pub fn kraus_from_choi(j: &ChoiMatrix, tol: f64) -> Result<KrausChannel> {
    let d = j.dim;
    let (values, vectors) = matcore::hermitian_eigen(&j.mat)?;
    if let Some(&lowest) = values.last() {
        if lowest < -tol {
            return Err(Error::NotPsd { eigenvalue: lowest });
        }
    }
    let n = d * d;
    let kraus: Vec<ComplexMatrix> = values
        .iter()
        .enumerate()
        .take_while(|(_, &lambda)| lambda > tol)
        .map(|(idx, &lambda)| {
            let s = lambda.sqrt();
            let col: Vec<C64> = (0..n).map(|r| vectors[(r, idx)] * s).collect();
            ComplexMatrix::from_columns_vec(d, d, &col).expect("eigenvector entries are finite")
        })
        .collect();
    if kraus.is_empty() {
        return Err(Error::InvalidChoi {
            reason: "no eigenvalue above tolerance".into(),
        });
    }
    Ok(KrausChannel::from_parts(d, kraus))
}
