//! Seeded generators for states and channels.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use super::{DensityMatrix, KrausChannel};
use crate::matcore::{c64, haar_unitary_from_rng, ComplexMatrix};

/// Uniform point on the probability simplex (Dirichlet(1, ..., 1)).
pub fn dirichlet_weights<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Random density matrix `G G† / tr(G G†)` from a complex Ginibre `G`.
pub fn random_density_from_rng<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| {
        c64(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let p = &g * g.adjoint();
    let tr = p.trace().re;
    let p = p.scale(1.0 / tr);
    // symmetrize away rounding so the Hermitian check is exact
    let herm = (&p + p.adjoint()).scale(0.5);
    DensityMatrix::from_unchecked(herm)
}

pub fn random_density(d: usize, seed: u64) -> DensityMatrix {
    random_density_from_rng(d, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random CPTP channel with `k` Kraus operators, cut from a Haar isometry
/// `C^d -> C^{dk}`. Generally not unital.
pub fn random_channel_from_rng<R: Rng + ?Sized>(d: usize, k: usize, rng: &mut R) -> KrausChannel {
    let u = haar_unitary_from_rng(d * k, rng);
    let kraus = (0..k)
        .map(|block| ComplexMatrix::from_fn(d, d, |r, c| u[(block * d + r, c)]))
        .collect();
    KrausChannel::from_parts(d, kraus)
}

pub fn random_channel(d: usize, k: usize, seed: u64) -> KrausChannel {
    random_channel_from_rng(d, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random unital channel: a Dirichlet-weighted mixture of `k` Haar unitaries
/// (Kraus set `{sqrt(p_i) U_i}`).
pub fn random_unital_channel_from_rng<R: Rng + ?Sized>(
    d: usize,
    k: usize,
    rng: &mut R,
) -> KrausChannel {
    let weights = dirichlet_weights(k, rng);
    let kraus = weights
        .iter()
        .map(|w| haar_unitary_from_rng(d, rng).scale(w.sqrt()))
        .collect();
    KrausChannel::from_parts(d, kraus)
}

pub fn random_unital_channel(d: usize, k: usize, seed: u64) -> KrausChannel {
    random_unital_channel_from_rng(d, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_produce_valid_objects() {
        for seed in 0..10 {
            let rho = random_density(3, seed);
            assert!(DensityMatrix::new(rho.into_matrix()).is_ok());

            let k = random_channel(2, 3, seed);
            let report = k.validate();
            assert!(report.trace_preserving);
            assert_eq!(report.kraus_count, 3);

            let u = random_unital_channel(3, 2, seed);
            assert!(u.validate().trace_preserving && u.is_unital(1e-10));
        }
    }

    #[test]
    fn dirichlet_is_on_simplex() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = dirichlet_weights(7, &mut rng);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        assert!(w.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_channel(3, 2, 4), random_channel(3, 2, 4));
        assert_eq!(random_density(2, 4), random_density(2, 4));
    }
}
