//! Channel algebra in Kraus form.
//!
//! A [`KrausChannel`] is a trace-preserving completely positive map on
//! `dim x dim` matrices, `rho -> sum_i A_i rho A_i†`. Unitality is a query,
//! not an invariant, so non-unital channels such as amplitude damping stay
//! representable. Equality of channels is decided on the Choi matrix
//! (see [`choi`]).

pub mod choi;
pub mod io;
pub mod random;
pub mod standard;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcore::{self, kron, ComplexMatrix, DEFAULT_TOL};

pub use choi::{kraus_from_choi, to_choi, ChoiMatrix};

/// Default cap on `dim^n` for tensor powers.
pub const DEFAULT_DIM_CAP: usize = 81;

/// Density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        mat.require_square()?;
        let herm = mat.hermitian_deviation();
        if herm > DEFAULT_TOL {
            return Err(Error::InvalidState {
                reason: format!("not Hermitian (deviation {herm:.3e})"),
            });
        }
        let tr = mat.trace();
        if (tr - 1.0).norm() > DEFAULT_TOL {
            return Err(Error::InvalidState {
                reason: format!("trace {tr} != 1"),
            });
        }
        let min_eig = matcore::min_eigenvalue(&mat)?;
        if min_eig < -DEFAULT_TOL {
            return Err(Error::InvalidState {
                reason: format!("negative eigenvalue {min_eig:.3e}"),
            });
        }
        Ok(Self { mat })
    }

    /// Pure state `|psi><psi|` from an amplitude vector (normalized here).
    pub fn pure(amplitudes: &[matcore::C64]) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidState {
                reason: "zero state vector".into(),
            });
        }
        let n = amplitudes.len();
        let mat = ComplexMatrix::from_fn(n, n, |i, j| {
            amplitudes[i] * amplitudes[j].conj() / (norm * norm)
        });
        Self::new(mat)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            mat: ComplexMatrix::identity(dim).scale(1.0 / dim as f64),
        }
    }

    pub(crate) fn from_unchecked(mat: ComplexMatrix) -> Self {
        Self { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// `rho ⊗ sigma`.
    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix::from_unchecked(kron(&self.mat, &other.mat))
    }
}

/// Outcome of checking a raw Kraus set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub dim: usize,
    pub kraus_count: usize,
    /// `max |sum A†A - I|`
    pub trace_deviation: f64,
    /// `max |sum A A† - I|`
    pub unital_deviation: f64,
    pub trace_preserving: bool,
    pub unital: bool,
}

fn common_dim(ops: &[ComplexMatrix]) -> Result<usize> {
    let first = ops.first().ok_or(Error::EmptyKraus)?;
    let dim = first.require_square()?;
    for op in ops {
        let d = op.require_square()?;
        if d != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: d,
            });
        }
    }
    Ok(dim)
}

fn sum_adjoint_products(ops: &[ComplexMatrix], dim: usize, left_adjoint: bool) -> ComplexMatrix {
    ops.iter().fold(ComplexMatrix::zeros(dim, dim), |acc, a| {
        if left_adjoint {
            acc + a.adjoint() * a
        } else {
            acc + a * a.adjoint()
        }
    })
}

/// Checks trace preservation and unitality of a raw Kraus set at 1e-10.
pub fn validate_kraus(ops: &[ComplexMatrix]) -> Result<ValidationReport> {
    let dim = common_dim(ops)?;
    let id = ComplexMatrix::identity(dim);
    let trace_deviation = sum_adjoint_products(ops, dim, true).max_abs_diff(&id);
    let unital_deviation = sum_adjoint_products(ops, dim, false).max_abs_diff(&id);
    Ok(ValidationReport {
        dim,
        kraus_count: ops.len(),
        trace_deviation,
        unital_deviation,
        trace_preserving: trace_deviation <= DEFAULT_TOL,
        unital: unital_deviation <= DEFAULT_TOL,
    })
}

/// Trace-preserving channel stored as a nonempty Kraus set.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel {
    dim: usize,
    kraus: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Validates that the operators share a dimension and satisfy
    /// `sum A†A = I` to 1e-10.
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let report = validate_kraus(&kraus)?;
        if !report.trace_preserving {
            return Err(Error::NotTracePreserving {
                deviation: report.trace_deviation,
            });
        }
        Ok(Self {
            dim: report.dim,
            kraus,
        })
    }

    pub(crate) fn from_parts(dim: usize, kraus: Vec<ComplexMatrix>) -> Self {
        debug_assert!(!kraus.is_empty());
        Self { dim, kraus }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_parts(dim, vec![ComplexMatrix::identity(dim)])
    }

    /// Unitary channel `rho -> U rho U†`.
    pub fn unitary(u: ComplexMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn kraus_count(&self) -> usize {
        self.kraus.len()
    }

    pub fn into_kraus(self) -> Vec<ComplexMatrix> {
        self.kraus
    }

    pub fn validate(&self) -> ValidationReport {
        validate_kraus(&self.kraus).expect("channel invariants hold")
    }

    /// `sum_i A_i x A_i†` for an arbitrary operator `x`.
    pub fn apply_operator(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        let d = x.require_square()?;
        if d != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: d,
            });
        }
        Ok(self
            .kraus
            .iter()
            .fold(ComplexMatrix::zeros(d, d), |acc, a| {
                acc + a * x * a.adjoint()
            }))
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        self.apply_operator(rho.matrix())
            .map(DensityMatrix::from_unchecked)
    }

    /// `T(I)` deviation from `I` in max-entry norm.
    pub fn unital_deviation(&self) -> f64 {
        sum_adjoint_products(&self.kraus, self.dim, false)
            .max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    pub fn is_unital(&self, tol: f64) -> bool {
        self.unital_deviation() <= tol
    }

    pub(crate) fn require_unital(&self, tol: f64) -> Result<()> {
        let deviation = self.unital_deviation();
        if deviation > tol {
            Err(Error::NotUnital { deviation })
        } else {
            Ok(())
        }
    }
}

pub fn validate_channel(k: &KrausChannel) -> ValidationReport {
    k.validate()
}

pub fn apply(k: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    k.apply(rho)
}

pub fn is_unital(k: &KrausChannel, tol: f64) -> bool {
    k.is_unital(tol)
}

/// `t ∘ r`: first `r`, then `t`. Kraus set `{B_j A_i}` ordered with the
/// index of `t` outermost; no canonicalization.
pub fn compose(t: &KrausChannel, r: &KrausChannel) -> Result<KrausChannel> {
    if t.dim != r.dim {
        return Err(Error::DimensionMismatch {
            expected: t.dim,
            found: r.dim,
        });
    }
    let kraus = t
        .kraus
        .iter()
        .flat_map(|b| r.kraus.iter().map(move |a| b * a))
        .collect();
    Ok(KrausChannel::from_parts(t.dim, kraus))
}

/// Convex combination `sum_i p_i T_i`, realized by scaling each part's
/// Kraus operators by `sqrt(p_i)`. Zero-weight parts are dropped.
pub fn mix_channels(parts: &[(f64, KrausChannel)]) -> Result<KrausChannel> {
    let (_, first) = parts.first().ok_or_else(|| Error::BadWeights {
        reason: "no parts".into(),
    })?;
    let dim = first.dim;
    let mut total = 0.0;
    for (w, k) in parts {
        if !(w.is_finite() && *w >= 0.0) {
            return Err(Error::BadWeights {
                reason: format!("weight {w} is not a nonnegative number"),
            });
        }
        if k.dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k.dim,
            });
        }
        total += w;
    }
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::BadWeights {
            reason: format!("weights sum to {total}"),
        });
    }
    let kraus = parts
        .iter()
        .filter(|(w, _)| *w > 0.0)
        .flat_map(|(w, k)| {
            let s = w.sqrt();
            k.kraus.iter().map(move |a| a.scale(s))
        })
        .collect();
    Ok(KrausChannel::from_parts(dim, kraus))
}

/// `t ⊗ s` with Kraus set `{A_i ⊗ B_j}`.
pub fn tensor(t: &KrausChannel, s: &KrausChannel) -> KrausChannel {
    let kraus = t
        .kraus
        .iter()
        .flat_map(|a| s.kraus.iter().map(move |b| kron(a, b)))
        .collect();
    KrausChannel::from_parts(t.dim * s.dim, kraus)
}

/// `t^{⊗n}` subject to the default dimension cap.
pub fn tensor_power(t: &KrausChannel, n: usize) -> Result<KrausChannel> {
    tensor_power_capped(t, n, DEFAULT_DIM_CAP)
}

pub fn tensor_power_capped(t: &KrausChannel, n: usize, cap: usize) -> Result<KrausChannel> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "tensor power requires n >= 1".into(),
        ));
    }
    let dim = power_dim(t.dim, n, cap)?;
    let mut out = t.clone();
    for _ in 1..n {
        out = tensor(&out, t);
    }
    debug_assert_eq!(out.dim, dim);
    Ok(out)
}

/// `d^n`, or `DimensionCapExceeded` when it passes `cap`.
pub(crate) fn power_dim(d: usize, n: usize, cap: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim.saturating_mul(d);
        if dim > cap {
            return Err(Error::DimensionCapExceeded { dim, cap });
        }
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use crate::matcore::{c64, haar_unitary};

    fn basis_state(d: usize, k: usize) -> DensityMatrix {
        let mut amps = vec![c64(0.0, 0.0); d];
        amps[k] = c64(1.0, 0.0);
        DensityMatrix::pure(&amps).unwrap()
    }

    #[test]
    fn validate_examples() {
        let r = validate_channel(&KrausChannel::identity(2));
        assert!(r.trace_preserving && r.unital);

        let r = validate_channel(&amplitude_damping(0.5).unwrap());
        assert!(r.trace_preserving);
        assert!(!r.unital);
        // sum A A† = diag(1.5, 0.5)
        assert!((r.unital_deviation - 0.5).abs() < 1e-15);

        let doubled = vec![ComplexMatrix::identity(2), ComplexMatrix::identity(2)];
        let r = validate_kraus(&doubled).unwrap();
        assert!(!r.trace_preserving);
        assert!((r.trace_deviation - 1.0).abs() < 1e-15);
        assert!(matches!(
            KrausChannel::new(doubled),
            Err(Error::NotTracePreserving { .. })
        ));
    }

    #[test]
    fn validate_rejects_mixed_dimensions() {
        let ops = vec![ComplexMatrix::identity(2), ComplexMatrix::identity(3)];
        assert!(matches!(
            validate_kraus(&ops),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(matches!(validate_kraus(&[]), Err(Error::EmptyKraus)));
    }

    #[test]
    fn apply_examples() {
        let rho = basis_state(2, 0);
        assert_eq!(apply(&KrausChannel::identity(2), &rho).unwrap(), rho);

        let rho = DensityMatrix::pure(&[c64(0.6, 0.0), c64(0.0, 0.8)]).unwrap();
        let out = apply(&depolarizing_qubit(), &rho).unwrap();
        assert!(
            out.matrix()
                .max_abs_diff(&ComplexMatrix::identity(2).scale(0.5))
                < 1e-15
        );

        let u = haar_unitary(2, 3);
        let out = apply(&KrausChannel::unitary(u.clone()).unwrap(), &rho).unwrap();
        let expected = &u * rho.matrix() * u.adjoint();
        assert!(out.matrix().max_abs_diff(&expected) < 1e-15);

        assert!(matches!(
            apply(&KrausChannel::identity(3), &rho),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn unitality_examples() {
        assert!(is_unital(&KrausChannel::identity(3), 1e-10));
        let mix = mix_channels(&[
            (0.3, KrausChannel::unitary(haar_unitary(3, 1)).unwrap()),
            (0.7, KrausChannel::unitary(haar_unitary(3, 2)).unwrap()),
        ])
        .unwrap();
        assert!(is_unital(&mix, 1e-10));
        assert!(!is_unital(&amplitude_damping(0.5).unwrap(), 1e-10));
    }

    #[test]
    fn compose_examples() {
        let t = random::random_channel(2, 3, 5);
        let c = compose(&KrausChannel::identity(2), &t).unwrap();
        assert!(to_choi(&c).matrix().max_abs_diff(to_choi(&t).matrix()) < 1e-12);

        let u = haar_unitary(2, 1);
        let v = haar_unitary(2, 2);
        let c = compose(
            &KrausChannel::unitary(v.clone()).unwrap(),
            &KrausChannel::unitary(u.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(c.kraus_count(), 1);
        assert!(c.kraus()[0].max_abs_diff(&(&v * &u)) < 1e-15);

        let two = random::random_channel(2, 2, 8);
        let three = random::random_channel(2, 3, 9);
        assert_eq!(compose(&two, &three).unwrap().kraus_count(), 6);
        assert!(compose(&two, &KrausChannel::identity(3)).is_err());
    }

    #[test]
    fn mix_examples() {
        let t = random::random_channel(2, 2, 4);
        let single = mix_channels(&[(1.0, t.clone())]).unwrap();
        assert!(to_choi(&single).matrix().max_abs_diff(to_choi(&t).matrix()) < 1e-15);

        let flip = mix_channels(&[
            (0.5, KrausChannel::identity(2)),
            (0.5, KrausChannel::unitary(pauli_x()).unwrap()),
        ])
        .unwrap();
        let out = flip.apply(&basis_state(2, 0)).unwrap();
        assert!(
            out.matrix()
                .max_abs_diff(&ComplexMatrix::identity(2).scale(0.5))
                < 1e-15
        );

        assert!(matches!(
            mix_channels(&[(0.6, t.clone()), (0.6, t.clone())]),
            Err(Error::BadWeights { .. })
        ));
        assert!(matches!(
            mix_channels(&[(1.5, t.clone()), (-0.5, t.clone())]),
            Err(Error::BadWeights { .. })
        ));
        assert!(matches!(
            mix_channels(&[(0.5, t), (0.5, KrausChannel::identity(3))]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tensor_examples() {
        let id = tensor(&KrausChannel::identity(3), &KrausChannel::identity(3));
        assert_eq!(id.dim(), 9);
        assert!(
            to_choi(&id)
                .matrix()
                .max_abs_diff(to_choi(&KrausChannel::identity(9)).matrix())
                < 1e-15
        );

        let t = random::random_unital_channel(2, 3, 6);
        let rho = random::random_density(2, 7);
        let lhs = tensor(&t, &t).apply(&rho.kron(&rho)).unwrap();
        let single = t.apply(&rho).unwrap();
        let rhs = single.kron(&single);
        assert!(lhs.matrix().max_abs_diff(rhs.matrix()) < 1e-12);

        let s = random::random_channel(3, 2, 1);
        assert_eq!(tensor(&t, &s).kraus_count(), 6);
    }

    #[test]
    fn tensor_power_examples() {
        let t = random::random_unital_channel(2, 4, 2);
        assert_eq!(tensor_power(&t, 1).unwrap(), t);

        let p3 = tensor_power(&t, 3).unwrap();
        assert_eq!(p3.dim(), 8);
        assert!(p3.is_unital(1e-10));
        assert!(p3.validate().trace_preserving);

        let p2 = tensor_power(&depolarizing_qubit(), 2).unwrap();
        assert_eq!((p2.dim(), p2.kraus_count()), (4, 16));

        assert!(matches!(
            tensor_power(&werner_holevo_3(), 5),
            Err(Error::DimensionCapExceeded { dim: 243, cap: 81 })
        ));
        assert!(tensor_power(&werner_holevo_3(), 4).is_ok());
    }

    #[test]
    fn density_matrix_checks() {
        let bad_trace = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(bad_trace),
            Err(Error::InvalidState { .. })
        ));
        let negative = ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]).unwrap();
        assert!(DensityMatrix::new(negative).is_err());
        let nonherm = ComplexMatrix::from_real_rows(&[&[0.5, 0.1], &[0.0, 0.5]]).unwrap();
        assert!(DensityMatrix::new(nonherm).is_err());
        assert!(DensityMatrix::new(DensityMatrix::maximally_mixed(3).into_matrix()).is_ok());
    }
}
