//! Numerical checks of the category structure of channels under composition
//! and of `⊗` as a bifunctor.
//!
//! Arrows are compared as maps, i.e. on their Choi matrices, never as Kraus
//! sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::channels::random::{
    random_channel_from_rng, random_density_from_rng, random_unital_channel_from_rng,
};
use crate::channels::{self, compose, tensor, to_choi, KrausChannel};
use crate::error::{Error, Result};
use crate::matcore::{kron, ComplexMatrix, DEFAULT_TOL};

/// Tolerance every law check is judged at.
pub const LAW_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law_name: String,
    pub max_deviation: f64,
    pub samples: usize,
    pub tolerance: f64,
    pub passed: bool,
}

impl LawReport {
    fn new(law_name: &str, max_deviation: f64, samples: usize) -> Self {
        Self {
            law_name: law_name.to_string(),
            max_deviation,
            samples,
            tolerance: LAW_TOL,
            passed: max_deviation <= LAW_TOL,
        }
    }

    /// Folds another report of the same law into this one.
    fn absorb(&mut self, other: &LawReport) {
        self.max_deviation = self.max_deviation.max(other.max_deviation);
        self.samples += other.samples;
        self.passed = self.max_deviation <= self.tolerance;
    }
}

fn choi_gap(a: &KrausChannel, b: &KrausChannel) -> f64 {
    to_choi(a).matrix().max_abs_diff(to_choi(b).matrix())
}

/// `t ∘ 1 = t = 1 ∘ t`, on Choi matrices and on `samples` random states.
pub fn check_identity_law(t: &KrausChannel, samples: usize, seed: u64) -> LawReport {
    let id = KrausChannel::identity(t.dim());
    let right = compose(t, &id).expect("same dimension");
    let left = compose(&id, t).expect("same dimension");
    let mut dev = choi_gap(&right, t).max(choi_gap(&left, t));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let rho = random_density_from_rng(t.dim(), &mut rng);
        let expected = t.apply(&rho).expect("same dimension");
        for composite in [&right, &left] {
            let got = composite.apply(&rho).expect("same dimension");
            dev = dev.max(got.matrix().max_abs_diff(expected.matrix()));
        }
    }
    LawReport::new("identity", dev, samples.max(1))
}

/// `v ∘ (t ∘ r) = (v ∘ t) ∘ r`.
pub fn check_associativity(
    r: &KrausChannel,
    t: &KrausChannel,
    v: &KrausChannel,
) -> Result<LawReport> {
    let inner_first = compose(v, &compose(t, r)?)?;
    let outer_first = compose(&compose(v, t)?, r)?;
    Ok(LawReport::new(
        "associativity",
        choi_gap(&inner_first, &outer_first),
        1,
    ))
}

/// `T(rho) ⊗ S(sigma) = (T ⊗ S)(rho ⊗ sigma)` over random state pairs.
pub fn check_bifunctor_law(
    t: &KrausChannel,
    s: &KrausChannel,
    samples: usize,
    seed: u64,
) -> LawReport {
    let ts = tensor(t, s);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dev: f64 = 0.0;
    for _ in 0..samples {
        let rho = random_density_from_rng(t.dim(), &mut rng);
        let sigma = random_density_from_rng(s.dim(), &mut rng);
        let separate = kron(
            t.apply(&rho).expect("dims agree").matrix(),
            s.apply(&sigma).expect("dims agree").matrix(),
        );
        let joint = ts.apply(&rho.kron(&sigma)).expect("dims agree");
        dev = dev.max(joint.matrix().max_abs_diff(&separate));
    }
    LawReport::new("bifunctor", dev, samples)
}

/// `T^{⊗n}(1^{⊗n}) = 1^{⊗n}`, measured by applying the power to the
/// maximally mixed state and rescaling.
pub fn check_unitality_power(t: &KrausChannel, n: usize) -> Result<LawReport> {
    t.require_unital(DEFAULT_TOL)?;
    let power = channels::tensor_power(t, n)?;
    let dim = power.dim();
    let mixed = channels::DensityMatrix::maximally_mixed(dim);
    let image = power.apply(&mixed)?.into_matrix().scale(dim as f64);
    let dev = image.max_abs_diff(&ComplexMatrix::identity(dim));
    Ok(LawReport::new("unitality_power", dev, 1))
}

/// Trace preservation of `t ∘ r`: `max |sum C_k† C_k - I|`.
pub fn check_composite_trace_preservation(t: &KrausChannel, r: &KrausChannel) -> Result<LawReport> {
    let c = compose(t, r)?;
    Ok(LawReport::new(
        "composite_trace_preservation",
        c.validate().trace_deviation,
        1,
    ))
}

/// Copies of the base channel across the chain `Chan(d), ..., Chan(d^n)`,
/// where level `k` carries `k` copies: `n(n+1)/2`.
pub fn chain_copy_count(n: usize) -> usize {
    assert!(n >= 1, "chain_copy_count requires n >= 1");
    n * (n + 1) / 2
}

/// Runs every law over `cases` random channel triples (dimension 2 or 3,
/// alternating unital mixtures and general channels) and returns one
/// aggregated report per law.
pub fn randomized_suite(cases: usize, samples: usize, seed: u64) -> Result<Vec<LawReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports: Vec<LawReport> = Vec::new();
    let mut push = |r: LawReport| match reports.iter_mut().find(|x| x.law_name == r.law_name) {
        Some(existing) => existing.absorb(&r),
        None => reports.push(r),
    };
    for case in 0..cases {
        let d = if case % 2 == 0 { 2 } else { 3 };
        let draw = |rng: &mut ChaCha8Rng| {
            let k = rng.random_range(1..=3);
            if rng.random_bool(0.5) {
                random_unital_channel_from_rng(d, k, rng)
            } else {
                random_channel_from_rng(d, k, rng)
            }
        };
        let r = draw(&mut rng);
        let t = draw(&mut rng);
        let v = draw(&mut rng);
        let unital = random_unital_channel_from_rng(d, rng.random_range(1..=3), &mut rng);
        let sub_seed: u64 = rng.random();

        push(check_identity_law(&t, samples, sub_seed));
        push(check_associativity(&r, &t, &v)?);
        push(check_bifunctor_law(&t, &v, samples, sub_seed));
        push(check_composite_trace_preservation(&t, &r)?);
        push(check_unitality_power(&unital, 2)?);
    }
    if reports.is_empty() {
        return Err(Error::InvalidArgument(
            "suite needs at least one case".into(),
        ));
    }
    Ok(reports)
}

/// Every law with `t` in each slot. The unitality law is included only when
/// `t` is unital and `t ⊗ t` fits under the dimension cap.
pub fn channel_suite(t: &KrausChannel, samples: usize, seed: u64) -> Result<Vec<LawReport>> {
    let mut reports = vec![
        check_identity_law(t, samples, seed),
        check_associativity(t, t, t)?,
        check_bifunctor_law(t, t, samples, seed),
        check_composite_trace_preservation(t, t)?,
    ];
    let fits = channels::power_dim(t.dim(), 2, channels::DEFAULT_DIM_CAP).is_ok();
    if t.is_unital(DEFAULT_TOL) && fits {
        reports.push(check_unitality_power(t, 2)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::random::random_unital_channel;
    use crate::channels::standard::*;
    use crate::matcore::haar_unitary;

    fn unitary(seed: u64, d: usize) -> KrausChannel {
        KrausChannel::unitary(haar_unitary(d, seed)).unwrap()
    }

    #[test]
    fn identity_law_examples() {
        assert!(check_identity_law(&unitary(1, 3), 4, 0).max_deviation <= 1e-12);
        assert!(check_identity_law(&werner_holevo_3(), 4, 0).max_deviation <= 1e-12);
        let r = check_identity_law(&random_unital_channel(2, 3, 5), 8, 1);
        assert!(r.passed);
        assert_eq!(r.samples, 8);
    }

    #[test]
    fn associativity_examples() {
        let r = check_associativity(&unitary(1, 2), &unitary(2, 2), &unitary(3, 2)).unwrap();
        assert!(r.max_deviation <= 1e-12);
        let id = KrausChannel::identity(3);
        let r = check_associativity(&id, &werner_holevo_3(), &id).unwrap();
        assert!(r.max_deviation <= 1e-12);
        let r = check_associativity(
            &random_unital_channel(3, 2, 1),
            &random_unital_channel(3, 2, 2),
            &random_unital_channel(3, 2, 3),
        )
        .unwrap();
        assert!(r.passed);
        assert!(check_associativity(&id, &unitary(1, 2), &id).is_err());
    }

    #[test]
    fn bifunctor_examples() {
        let id = KrausChannel::identity(2);
        assert!(check_bifunctor_law(&id, &id, 5, 0).max_deviation <= 1e-14);
        let dep = depolarizing_qubit();
        assert!(check_bifunctor_law(&dep, &dep, 10, 1).passed);
        assert!(check_bifunctor_law(&unitary(4, 2), &werner_holevo_3(), 10, 2).passed);
    }

    #[test]
    fn unitality_power_examples() {
        let r = check_unitality_power(&KrausChannel::identity(2), 4).unwrap();
        assert!(r.max_deviation <= 1e-12);
        assert!(
            check_unitality_power(&depolarizing_qubit(), 3)
                .unwrap()
                .passed
        );
        assert!(check_unitality_power(&werner_holevo_3(), 2).unwrap().passed);
        assert!(matches!(
            check_unitality_power(&amplitude_damping(0.5).unwrap(), 2),
            Err(Error::NotUnital { .. })
        ));
        assert!(matches!(
            check_unitality_power(&werner_holevo_3(), 5),
            Err(Error::DimensionCapExceeded { .. })
        ));
    }

    #[test]
    fn chain_counts() {
        assert_eq!(chain_copy_count(1), 1);
        assert_eq!(chain_copy_count(2), 3);
        assert_eq!(chain_copy_count(4), 10);
        for n in 2..50 {
            assert_eq!(chain_copy_count(n) - chain_copy_count(n - 1), n);
        }
    }

    #[test]
    fn channel_suite_skips_unitality_for_non_unital() {
        let reports = channel_suite(&amplitude_damping(0.5).unwrap(), 4, 0).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.passed));
        let reports = channel_suite(&werner_holevo_3(), 4, 0).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn small_suite_passes() {
        let reports = randomized_suite(10, 3, 7).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
    }
}
