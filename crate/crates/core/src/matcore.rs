//! Dense complex matrix kernel.
//!
//! [`ComplexMatrix`] wraps an `nalgebra` dense matrix of `Complex64` and keeps
//! the finiteness invariant at its checked constructors. Singular value,
//! Hermitian eigen and QR factorizations are delegated to `nalgebra`; the
//! Kronecker product, Cholesky factorization, Haar sampling and polar
//! projection live here.

use std::fmt;
use std::ops::{Add, Deref, Index, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Default tolerance for equality-style checks (max-entry norm).
pub const DEFAULT_TOL: f64 = 1e-10;

/// Default relative tolerance for numeric rank.
pub const DEFAULT_RANK_TOL: f64 = 1e-12;

pub type C64 = Complex64;

#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

/// Dense rectangular matrix of complex scalars.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    /// Builds a matrix from a row-major buffer.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Self::from_dmatrix(DMatrix::from_row_iterator(rows, cols, entries))
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::BadShape {
                expected: ncols,
                found: bad.len(),
            });
        }
        let flat = rows.iter().flatten().copied().collect();
        Self::from_row_major(nrows, ncols, flat)
    }

    /// Builds a matrix of real entries from nested rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c64(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Self(m)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    /// Checked conversion from an `nalgebra` matrix.
    pub fn from_dmatrix(m: DMatrix<C64>) -> Result<Self> {
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let z = m[(i, j)];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self(m))
    }

    /// Wraps the result of arithmetic on already-valid matrices.
    pub(crate) fn wrap(m: DMatrix<C64>) -> Self {
        Self(m)
    }

    pub fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<C64> {
        self.0
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    /// Entries in row-major order.
    pub fn row_major(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.map(|z| z * s))
    }

    pub fn scale_c(&self, s: C64) -> Self {
        Self(&self.0 * s)
    }

    pub fn kron(&self, other: &Self) -> Self {
        kron(self, other)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
    }

    /// Max-entry norm of `self - other`. Shapes must agree.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.0.shape(), other.0.shape(), "shape mismatch");
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).norm()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max-entry deviation from Hermiticity.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows();
        let mut dev = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Column-stacking vectorization: `vec[i + rows * j] = self[(i, j)]`.
    pub fn vec_columns(&self) -> Vec<C64> {
        self.0.as_slice().to_vec()
    }

    /// Inverse of [`vec_columns`](Self::vec_columns).
    pub fn from_columns_vec(rows: usize, cols: usize, v: &[C64]) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(Error::BadShape {
                expected: rows * cols,
                found: v.len(),
            });
        }
        Self::from_dmatrix(DMatrix::from_column_slice(rows, cols, v))
    }

    /// Unitarity deviation `max |U†U - I|`.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (self.adjoint() * self).max_abs_diff(&Self::identity(self.rows()))
    }
}

impl Deref for ComplexMatrix {
    type Target = DMatrix<C64>;

    fn deref(&self) -> &DMatrix<C64> {
        &self.0
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows(), self.cols())?;
        for i in 0..self.rows() {
            write!(f, "  ")?;
            for j in 0..self.cols() {
                let z = self.0[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(&self.0 $op &rhs.0)
            }
        }
        impl $trait<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(self.0 $op rhs.0)
            }
        }
        impl $trait<&ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(self.0 $op &rhs.0)
            }
        }
        impl $trait<ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix(-self.0)
    }
}

/// Kronecker product; the left factor indexes blocks.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    let mut out = DMatrix::zeros(ar * br, ac * bc);
    for aj in 0..ac {
        for bj in 0..bc {
            let col = aj * bc + bj;
            for ai in 0..ar {
                let x = a.0[(ai, aj)];
                for bi in 0..br {
                    out[(ai * br + bi, col)] = x * b.0[(bi, bj)];
                }
            }
        }
    }
    ComplexMatrix(out)
}

pub fn adjoint(a: &ComplexMatrix) -> ComplexMatrix {
    a.adjoint()
}

pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    if a.rows() == 0 || a.cols() == 0 {
        return Vec::new();
    }
    a.0.clone().singular_values().iter().copied().collect()
}

/// Number of singular values above `rel_tol * sigma_max * max(rows, cols)`.
pub fn numeric_rank(a: &ComplexMatrix, rel_tol: f64) -> usize {
    let sv = singular_values(a);
    let sigma_max = sv.iter().copied().fold(0.0_f64, f64::max);
    if sigma_max == 0.0 {
        return 0;
    }
    let threshold = rel_tol * sigma_max * a.rows().max(a.cols()) as f64;
    sv.iter().filter(|&&s| s > threshold).count()
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending
/// order with matching eigenvector columns.
pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = a.require_square()?;
    let eig = a.0.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, ComplexMatrix(vectors)))
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(0.0);
    }
    Ok(a.0
        .clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min))
}

/// Lower-triangular `L` with `L L† = a` for Hermitian positive definite `a`.
pub fn cholesky_factor(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    let deviation = a.hermitian_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    let mut l = DMatrix::<C64>::zeros(n, n);
    for j in 0..n {
        let mut pivot = a.0[(j, j)].re;
        for k in 0..j {
            pivot -= l[(j, k)].norm_sqr();
        }
        if pivot <= tol {
            return Err(Error::NotPositiveDefinite { index: j, pivot });
        }
        let ljj = pivot.sqrt();
        l[(j, j)] = c64(ljj, 0.0);
        for i in (j + 1)..n {
            let mut s = a.0[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / ljj;
        }
    }
    Ok(ComplexMatrix(l))
}

/// Haar-distributed `d x d` unitary drawn from `rng`.
///
/// QR of a complex Ginibre matrix, with the phases of `R`'s diagonal pushed
/// into `Q` so the distribution is exactly Haar.
pub fn haar_unitary_from_rng<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    assert!(d >= 1, "haar_unitary requires d >= 1");
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut g = DMatrix::<C64>::zeros(d, d);
    // fill row-major so the draw order is independent of storage layout
    for i in 0..d {
        for j in 0..d {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            g[(i, j)] = c64(re * scale, im * scale);
        }
    }
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let rjj = r[(j, j)];
        let norm = rjj.norm();
        let phase = if norm > 0.0 {
            rjj / norm
        } else {
            c64(1.0, 0.0)
        };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    ComplexMatrix(q)
}

/// Haar-distributed unitary, deterministic in `seed`.
pub fn haar_unitary(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_unitary_from_rng(d, &mut rng)
}

/// Shortest round-trip text for `x`: plain decimal for moderate magnitudes,
/// exponent form otherwise.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-4..1e6).contains(&a) || !a.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Unitary factor of the polar decomposition (nearest unitary in Frobenius norm).
pub fn polar_unitary(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    let svd = a.0.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().copied().fold(0.0_f64, f64::max);
    let threshold = DEFAULT_RANK_TOL * sigma_max * n as f64;
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > threshold)
        .count();
    if sigma_max == 0.0 || rank < n {
        return Err(Error::SingularInput { rank, dim: n });
    }
    let (u, v_t) = match (svd.u, svd.v_t) {
        (Some(u), Some(v_t)) => (u, v_t),
        _ => unreachable!("svd requested both factors"),
    };
    Ok(ComplexMatrix(u * v_t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_real_rows(rows).unwrap()
    }

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ComplexMatrix::from_fn(rows, cols, |_, _| {
            c64(rng.sample(StandardNormal), rng.sample(StandardNormal))
        })
    }

    #[test]
    fn kron_identities_and_diagonals() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));

        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(4, 5);
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 15));

        let d1 = real(&[&[1.0, 0.0], &[0.0, 2.0]]);
        let d2 = real(&[&[3.0, 0.0], &[0.0, 4.0]]);
        let expected = ComplexMatrix::from_diagonal(&[
            c64(3.0, 0.0),
            c64(4.0, 0.0),
            c64(6.0, 0.0),
            c64(8.0, 0.0),
        ]);
        assert_eq!(kron(&d1, &d2), expected);
    }

    #[test]
    fn kron_block_convention() {
        let a = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let b = real(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let k = kron(&a, &b);
        // block (0, 1) holds b
        assert_eq!(k[(0, 2)], c64(1.0, 0.0));
        assert_eq!(k[(1, 3)], c64(4.0, 0.0));
        assert_eq!(k[(2, 2)], c64(0.0, 0.0));
    }

    #[test]
    fn adjoint_examples() {
        let i3 = ComplexMatrix::identity(3);
        assert_eq!(adjoint(&i3), i3);

        let m = ComplexMatrix::from_rows(&[
            vec![c64(0.0, 0.0), c64(0.0, 1.0)],
            vec![c64(0.0, 0.0), c64(0.0, 0.0)],
        ])
        .unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c64(0.0, 0.0), c64(0.0, 0.0)],
            vec![c64(0.0, -1.0), c64(0.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(adjoint(&m), expected);

        let r = random_matrix(3, 5, 7);
        assert_eq!(adjoint(&adjoint(&r)), r);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(numeric_rank(&ComplexMatrix::zeros(4, 4), 1e-12), 0);
        assert_eq!(numeric_rank(&ComplexMatrix::identity(4), 1e-12), 4);
        assert_eq!(numeric_rank(&real(&[&[1.0, 1.0], &[1.0, 1.0]]), 1e-12), 1);
    }

    #[test]
    fn rank_is_unitarily_invariant() {
        let low = random_matrix(5, 2, 1) * random_matrix(2, 5, 2);
        let u = haar_unitary(5, 3);
        let v = haar_unitary(5, 4);
        assert_eq!(numeric_rank(&low, DEFAULT_RANK_TOL), 2);
        assert_eq!(numeric_rank(&(&u * &low), DEFAULT_RANK_TOL), 2);
        assert_eq!(numeric_rank(&(&low * &v), DEFAULT_RANK_TOL), 2);
    }

    #[test]
    fn cholesky_examples() {
        let i3 = ComplexMatrix::identity(3);
        assert!(cholesky_factor(&i3, 1e-12).unwrap().max_abs_diff(&i3) < 1e-15);

        let d = real(&[&[4.0, 0.0], &[0.0, 9.0]]);
        let l = cholesky_factor(&d, 1e-12).unwrap();
        assert!(l.max_abs_diff(&real(&[&[2.0, 0.0], &[0.0, 3.0]])) < 1e-15);

        let a = real(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let l = cholesky_factor(&a, 1e-12).unwrap();
        assert_eq!(l[(0, 1)], c64(0.0, 0.0));
        assert!((&l * l.adjoint()).max_abs_diff(&a) <= 1e-10);
    }

    #[test]
    fn cholesky_complex_hermitian_reconstructs() {
        let g = random_matrix(5, 5, 11);
        let a = &g * g.adjoint() + ComplexMatrix::identity(5);
        let l = cholesky_factor(&a, 1e-10).unwrap();
        for i in 0..5 {
            assert!(l[(i, i)].re > 0.0 && l[(i, i)].im == 0.0);
            for j in (i + 1)..5 {
                assert_eq!(l[(i, j)], c64(0.0, 0.0));
            }
        }
        assert!((&l * l.adjoint()).max_abs_diff(&a) <= 1e-10);
    }

    #[test]
    fn cholesky_errors() {
        let asym = real(&[&[2.0, 1.0], &[0.0, 2.0]]);
        assert!(matches!(
            cholesky_factor(&asym, 1e-10),
            Err(Error::NotHermitian { .. })
        ));
        let indefinite = real(&[&[1.0, 2.0], &[2.0, 1.0]]);
        assert!(matches!(
            cholesky_factor(&indefinite, 1e-10),
            Err(Error::NotPositiveDefinite { index: 1, .. })
        ));
        assert!(matches!(
            cholesky_factor(&ComplexMatrix::zeros(2, 3), 1e-10),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn haar_examples() {
        let u1 = haar_unitary(1, 5);
        assert!((u1[(0, 0)].norm() - 1.0).abs() < 1e-14);

        let u4 = haar_unitary(4, 9);
        assert!(u4.unitarity_deviation() <= 1e-12);

        assert_eq!(haar_unitary(3, 42), haar_unitary(3, 42));
        assert_ne!(haar_unitary(3, 42), haar_unitary(3, 43));
    }

    #[test]
    fn polar_examples() {
        let u = haar_unitary(3, 17);
        assert!(polar_unitary(&u).unwrap().max_abs_diff(&u) < 1e-12);

        let two_i = ComplexMatrix::identity(3).scale(2.0);
        assert!(
            polar_unitary(&two_i)
                .unwrap()
                .max_abs_diff(&ComplexMatrix::identity(3))
                < 1e-14
        );

        let singular = real(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert!(matches!(
            polar_unitary(&singular),
            Err(Error::SingularInput { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn polar_beats_random_unitaries() {
        let m = random_matrix(3, 3, 23);
        let p = polar_unitary(&m).unwrap();
        let best = (&m - &p).frobenius_norm();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..10_000 {
            let v = haar_unitary_from_rng(3, &mut rng);
            assert!((&m - &v).frobenius_norm() >= best - 1e-12);
        }
    }

    #[test]
    fn hermitian_eigen_sorted_and_reconstructs() {
        let g = random_matrix(4, 4, 31);
        let h = &g + g.adjoint();
        let (vals, vecs) = hermitian_eigen(&h).unwrap();
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let diag =
            ComplexMatrix::from_diagonal(&vals.iter().map(|&v| c64(v, 0.0)).collect::<Vec<_>>());
        let rebuilt = &vecs * &diag * vecs.adjoint();
        assert!(rebuilt.max_abs_diff(&h) < 1e-12);
    }

    #[test]
    fn checked_constructors() {
        assert!(matches!(
            ComplexMatrix::from_row_major(2, 2, vec![c64(1.0, 0.0); 3]),
            Err(Error::BadShape { .. })
        ));
        assert!(matches!(
            ComplexMatrix::from_row_major(1, 2, vec![c64(1.0, 0.0), c64(f64::NAN, 0.0)]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
        let m = ComplexMatrix::from_row_major(2, 2, (0..4).map(|k| c64(k as f64, 0.0)).collect())
            .unwrap();
        assert_eq!(m[(0, 1)], c64(1.0, 0.0));
        assert_eq!(m.vec_columns()[1], c64(2.0, 0.0));
        assert_eq!(m.row_major()[1], c64(1.0, 0.0));
    }
}
