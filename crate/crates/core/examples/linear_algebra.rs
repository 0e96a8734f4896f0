//! The dense kernel: Kronecker products, rank, Cholesky, Haar sampling and
//! the polar retraction.

use qbirkhoff::matcore::{
    cholesky_factor, haar_unitary, kron, numeric_rank, polar_unitary, ComplexMatrix,
    DEFAULT_RANK_TOL, DEFAULT_TOL,
};

fn main() -> qbirkhoff::Result<()> {
    let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]])?;
    let b = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])?;
    let ab = kron(&a, &b);
    println!(
        "kron is {}x{}, rank {}",
        ab.rows(),
        ab.cols(),
        numeric_rank(&ab, DEFAULT_RANK_TOL)
    );

    let spd = ComplexMatrix::from_real_rows(&[&[4.0, 2.0], &[2.0, 3.0]])?;
    let l = cholesky_factor(&spd, DEFAULT_TOL)?;
    println!(
        "Cholesky residual {:.1e}",
        (&l * l.adjoint()).max_abs_diff(&spd)
    );

    let u = haar_unitary(4, 7);
    println!(
        "Haar sample unitarity deviation {:.1e}",
        u.unitarity_deviation()
    );

    let noisy = &u + ComplexMatrix::identity(4).scale(0.05);
    let p = polar_unitary(&noisy)?;
    println!(
        "polar factor unitarity deviation {:.1e}, distance to noisy input {:.3}",
        p.unitarity_deviation(),
        (&p - &noisy).frobenius_norm()
    );
    Ok(())
}
