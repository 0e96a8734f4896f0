//! Best approximation of a unital channel by a mixture of unitary channels.
//!
//! The objective is the normalized Choi–Frobenius distance
//! `||J(T) - J(sum_i p_i U_i . U_i†)||_F / dim`. Fitting alternates two
//! steps until the relative decrease drops below `conv_tol`:
//!
//! * weights: with unitaries fixed the squared distance is the quadratic
//!   `p^T G p - 2 b^T p + c` with `G_ij = |<vec U_i, vec U_j>|²` and
//!   `b_i = vec(U_i)† J(T) vec(U_i)`, minimized over the simplex by
//!   projected gradient descent;
//! * unitaries: one Riemannian conjugate-gradient step moving every term
//!   at once, retracted with the polar factor. The line search starts at
//!   1.0, doubles or halves, and accepts only strict decrease.
//!
//! Every history entry is the distance of an actual mixture, evaluated
//! through [`mixture_to_channel`] and the Choi map, so the recorded best
//! distance is exactly what [`choi_distance`] reports for the returned
//! mixture.

mod experiment;
pub mod simplex;

pub use experiment::{
    tensor_power_experiment, ExperimentRow, ExperimentTable, TensorPowerExperiment,
};

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::channels::{to_choi, ChoiMatrix, KrausChannel};
use crate::error::{Error, Result};
use crate::matcore::{haar_unitary_from_rng, polar_unitary, ComplexMatrix, C64, DEFAULT_TOL};

/// Metric label written into every report.
pub const METRIC: &str = "choi_frobenius_per_dim";

const MAX_HALVINGS: usize = 60;
const MAX_DOUBLINGS: usize = 30;
const WEIGHT_STEP_MAX_ITER: usize = 500;

#[derive(Clone, Debug, PartialEq)]
pub struct MixtureTerm {
    pub weight: f64,
    pub unitary: ComplexMatrix,
}

/// Convex combination of unitarily implemented channels.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMixture {
    dim: usize,
    terms: Vec<MixtureTerm>,
}

impl UnitaryMixture {
    /// Requires nonnegative weights summing to 1 and unitaries of one
    /// dimension, both at 1e-10.
    pub fn new(terms: Vec<MixtureTerm>) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::BadWeights {
            reason: "empty mixture".into(),
        })?;
        let dim = first.unitary.require_square()?;
        let mut total = 0.0;
        for t in &terms {
            if !(t.weight.is_finite() && t.weight >= 0.0) {
                return Err(Error::BadWeights {
                    reason: format!("weight {} is not a nonnegative number", t.weight),
                });
            }
            let d = t.unitary.require_square()?;
            if d != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: d,
                });
            }
            let dev = t.unitary.unitarity_deviation();
            if dev > DEFAULT_TOL {
                return Err(Error::InvalidArgument(format!(
                    "mixture term is not unitary (deviation {dev:.3e})"
                )));
            }
            total += t.weight;
        }
        if (total - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::BadWeights {
                reason: format!("weights sum to {total}"),
            });
        }
        Ok(Self { dim, terms })
    }

    fn from_parts(weights: Vec<f64>, unitaries: Vec<ComplexMatrix>) -> Self {
        let dim = unitaries[0].rows();
        let terms = weights
            .into_iter()
            .zip(unitaries)
            .map(|(weight, unitary)| MixtureTerm { weight, unitary })
            .collect();
        Self { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[MixtureTerm] {
        &self.terms
    }

    pub fn weights(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.weight).collect()
    }

    pub fn unitaries(&self) -> Vec<ComplexMatrix> {
        self.terms.iter().map(|t| t.unitary.clone()).collect()
    }

    /// Appends `u` with weight zero; the represented channel is unchanged.
    pub fn padded(&self, u: ComplexMatrix) -> Self {
        let mut terms = self.terms.clone();
        terms.push(MixtureTerm {
            weight: 0.0,
            unitary: u,
        });
        Self {
            dim: self.dim,
            terms,
        }
    }
}

fn channel_from_parts(dim: usize, weights: &[f64], unitaries: &[ComplexMatrix]) -> KrausChannel {
    let kraus = weights
        .iter()
        .zip(unitaries)
        .filter(|(w, _)| **w > 0.0)
        .map(|(w, u)| u.scale(w.sqrt()))
        .collect();
    KrausChannel::from_parts(dim, kraus)
}

/// Kraus set `{sqrt(p_i) U_i}`, zero-weight terms dropped.
pub fn mixture_to_channel(m: &UnitaryMixture) -> KrausChannel {
    channel_from_parts(m.dim, &m.weights(), &m.unitaries())
}

fn distance_to_choi(target: &ChoiMatrix, k: &KrausChannel) -> f64 {
    (target.matrix() - to_choi(k).matrix()).frobenius_norm() / target.dim() as f64
}

/// `||J(a) - J(b)||_F / dim`.
pub fn choi_distance(a: &KrausChannel, b: &KrausChannel) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(distance_to_choi(&to_choi(a), b))
}

/// `sum_i p_i vec(U_i) vec(U_i)†` for arbitrary (not necessarily unitary)
/// matrices.
fn raw_mixture_choi(weights: &[f64], mats: &[ComplexMatrix]) -> DMatrix<C64> {
    let n = mats[0].rows() * mats[0].cols();
    let mut out = DMatrix::<C64>::zeros(n, n);
    for (w, a) in weights.iter().zip(mats) {
        let v = a.as_slice();
        for col in 0..n {
            let vc = v[col].conj() * *w;
            for row in 0..n {
                out[(row, col)] += v[row] * vc;
            }
        }
    }
    out
}

/// `||sum_i p_i vec(U_i) vec(U_i)† - J||_F²`, defined for any matrices.
pub fn squared_loss(target: &ChoiMatrix, weights: &[f64], mats: &[ComplexMatrix]) -> f64 {
    let r = raw_mixture_choi(weights, mats) - target.matrix().as_dmatrix();
    r.iter().map(|z| z.norm_sqr()).sum()
}

/// Euclidean gradient of [`squared_loss`] with respect to `mats[i]`, in the
/// real inner product `<X, Y> = Re tr(X† Y)`: `4 p_i unvec(R vec(U_i))`
/// with `R` the Choi residual.
pub fn unitary_gradient(
    target: &ChoiMatrix,
    weights: &[f64],
    mats: &[ComplexMatrix],
    i: usize,
) -> ComplexMatrix {
    let residual = raw_mixture_choi(weights, mats) - target.matrix().as_dmatrix();
    gradient_from_residual(&residual, weights[i], &mats[i])
}

fn gradient_from_residual(
    residual: &DMatrix<C64>,
    weight: f64,
    u: &ComplexMatrix,
) -> ComplexMatrix {
    let v = nalgebra::DVector::from_column_slice(u.as_slice());
    let rv = residual * v * C64::new(4.0 * weight, 0.0);
    ComplexMatrix::wrap(DMatrix::from_column_slice(
        u.rows(),
        u.cols(),
        rv.as_slice(),
    ))
}

/// Projection of a Euclidean gradient onto the tangent space of the unitary
/// group at `u`: `g - u herm(u† g)`.
pub fn riemannian_gradient(u: &ComplexMatrix, g: &ComplexMatrix) -> ComplexMatrix {
    let ug = u.adjoint() * g;
    let herm = (&ug + ug.adjoint()).scale(0.5);
    g - u * herm
}

/// Real inner product `sum_i Re tr(a_i† b_i)` on tuples of matrices.
fn inner(a: &[ComplexMatrix], b: &[ComplexMatrix]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            x.iter()
                .zip(y.iter())
                .map(|(p, q)| (p.conj() * q).re)
                .sum::<f64>()
        })
        .sum()
}

fn transport(vs: &[ComplexMatrix], at: &[ComplexMatrix]) -> Vec<ComplexMatrix> {
    vs.iter()
        .zip(at)
        .map(|(v, u)| riemannian_gradient(u, v))
        .collect()
}

#[derive(Clone, Debug)]
pub struct FitOptions {
    pub restarts: usize,
    pub seed: u64,
    pub max_iter: usize,
    pub conv_tol: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            restarts: 5,
            seed: 0,
            max_iter: 2000,
            conv_tol: 1e-12,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FitReport {
    pub best_distance: f64,
    pub mixture: UnitaryMixture,
    pub iterations: usize,
    pub restarts_used: usize,
    pub converged: bool,
    /// Distance after each outer iteration; entry 0 is the starting point.
    pub history: Vec<f64>,
}

struct Fitter<'a> {
    target: &'a ChoiMatrix,
    dim: usize,
    weights: Vec<f64>,
    unitaries: Vec<ComplexMatrix>,
    current: f64,
    /// Gradient and search direction of the last accepted unitary step.
    memory: Option<(Vec<ComplexMatrix>, Vec<ComplexMatrix>)>,
}

impl<'a> Fitter<'a> {
    fn new(target: &'a ChoiMatrix, init: UnitaryMixture) -> Self {
        let dim = init.dim;
        let weights = init.weights();
        let unitaries = init.unitaries();
        let current = distance_to_choi(target, &channel_from_parts(dim, &weights, &unitaries));
        Self {
            target,
            dim,
            weights,
            unitaries,
            current,
            memory: None,
        }
    }

    fn eval(&self, weights: &[f64], unitaries: &[ComplexMatrix]) -> f64 {
        distance_to_choi(
            self.target,
            &channel_from_parts(self.dim, weights, unitaries),
        )
    }

    fn weight_step(&mut self, tol: f64) {
        let m = self.weights.len();
        let vecs: Vec<&[C64]> = self.unitaries.iter().map(|u| u.as_slice()).collect();
        let gram: Vec<Vec<f64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        vecs[i]
                            .iter()
                            .zip(vecs[j])
                            .map(|(a, b)| a.conj() * b)
                            .sum::<C64>()
                            .norm_sqr()
                    })
                    .collect()
            })
            .collect();
        let j = self.target.matrix().as_dmatrix();
        let linear: Vec<f64> = vecs
            .iter()
            .map(|v| {
                let v = nalgebra::DVector::from_column_slice(v);
                (v.adjoint() * j * &v)[(0, 0)].re
            })
            .collect();
        let next = simplex::minimize_quadratic_on_simplex(
            &gram,
            &linear,
            &self.weights,
            tol,
            WEIGHT_STEP_MAX_ITER,
        );
        let d = self.eval(&next, &self.unitaries);
        if d <= self.current {
            self.weights = next;
            self.current = d;
        }
    }

    /// One conjugate-gradient step moving every positive-weight unitary at
    /// once. Each term's Euclidean gradient has its factor `4 p_i` divided
    /// out, so trial steps are on the same scale for heavy and light terms.
    fn unitary_step(&mut self) {
        let residual =
            raw_mixture_choi(&self.weights, &self.unitaries) - self.target.matrix().as_dmatrix();
        let base = self.unitaries.clone();
        let grads: Vec<ComplexMatrix> = base
            .iter()
            .zip(&self.weights)
            .map(|(u, &p)| {
                if p > 0.0 {
                    riemannian_gradient(u, &gradient_from_residual(&residual, 0.25, u))
                } else {
                    ComplexMatrix::zeros(u.rows(), u.cols())
                }
            })
            .collect();
        let gg = inner(&grads, &grads);
        if gg == 0.0 {
            self.memory = None;
            return;
        }
        let mut dirs: Vec<ComplexMatrix> = grads.iter().map(|g| g.scale(-1.0)).collect();
        if let Some((prev_grads, prev_dirs)) = &self.memory {
            // Polak-Ribiere with transport by tangent projection; fall back to
            // steepest descent when the result is not a descent direction.
            let moved_grads = transport(prev_grads, &base);
            let moved_dirs = transport(prev_dirs, &base);
            let change: Vec<ComplexMatrix> =
                grads.iter().zip(&moved_grads).map(|(g, h)| g - h).collect();
            let beta = (inner(&grads, &change) / inner(prev_grads, prev_grads)).max(0.0);
            let candidate: Vec<ComplexMatrix> = dirs
                .iter()
                .zip(&moved_dirs)
                .map(|(d, t)| d + t.scale(beta))
                .collect();
            if inner(&candidate, &grads) < 0.0 {
                dirs = candidate;
            }
        }

        // Powers of two around 1.0: move in whichever direction improves and
        // keep going while the distance keeps dropping. Stopping at the first
        // decrease can leave the step capped or on the edge of oscillation.
        let mut best: Option<(f64, Vec<ComplexMatrix>)> = None;
        let mut try_step = |eta: f64, this: &Self| -> bool {
            let mut trial = base.clone();
            for ((t, d), &p) in trial.iter_mut().zip(&dirs).zip(&this.weights) {
                if p == 0.0 {
                    continue;
                }
                match polar_unitary(&(&*t + d.scale(eta))) {
                    Ok(x) => *t = x,
                    Err(_) => return false,
                }
            }
            let d = this.eval(&this.weights, &trial);
            if d < best.as_ref().map_or(this.current, |b| b.0) {
                best = Some((d, trial));
                true
            } else {
                false
            }
        };
        let mut grew = false;
        let unit_ok = try_step(1.0, self);
        if unit_ok {
            let mut eta = 1.0;
            for _ in 0..MAX_DOUBLINGS {
                eta *= 2.0;
                if !try_step(eta, self) {
                    break;
                }
                grew = true;
            }
        }
        if !grew {
            let mut found = unit_ok;
            let mut eta = 1.0;
            for _ in 0..MAX_HALVINGS {
                eta *= 0.5;
                let improved = try_step(eta, self);
                if found && !improved {
                    break;
                }
                found |= improved;
            }
        }
        match best {
            Some((d, trial)) => {
                self.current = d;
                self.unitaries = trial;
                self.memory = Some((grads, dirs));
            }
            None => self.memory = None,
        }
    }

    fn run(mut self, opts: &FitOptions) -> FitReport {
        let mut history = vec![self.current];
        let mut iterations = 0;
        let mut converged = false;
        while iterations < opts.max_iter {
            iterations += 1;
            let previous = self.current;
            self.weight_step(opts.conv_tol);
            self.unitary_step();
            history.push(self.current);
            if self.current == 0.0 || previous - self.current <= opts.conv_tol * previous {
                converged = true;
                break;
            }
        }
        FitReport {
            best_distance: self.current,
            mixture: UnitaryMixture::from_parts(self.weights, self.unitaries),
            iterations,
            restarts_used: 1,
            converged,
            history,
        }
    }
}

fn random_start(dim: usize, m: usize, seed: u64) -> UnitaryMixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unitaries = (0..m)
        .map(|_| haar_unitary_from_rng(dim, &mut rng))
        .collect();
    UnitaryMixture::from_parts(vec![1.0 / m as f64; m], unitaries)
}

/// Single optimizer run from a given starting mixture.
pub fn fit_from(t: &KrausChannel, init: UnitaryMixture, opts: &FitOptions) -> Result<FitReport> {
    t.require_unital(DEFAULT_TOL)?;
    if init.dim != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: init.dim,
        });
    }
    let target = to_choi(t);
    Ok(Fitter::new(&target, init).run(opts))
}

/// Best `m`-term fit over `opts.restarts` Haar-random starts (restart `r`
/// seeded with `seed + r`). Restarts run in parallel; the winner is the
/// smallest `(distance, restart index)`.
pub fn fit_unitary_mixture(t: &KrausChannel, m: usize, opts: &FitOptions) -> Result<FitReport> {
    t.require_unital(DEFAULT_TOL)?;
    if m == 0 {
        return Err(Error::InvalidArgument("mixture size m must be >= 1".into()));
    }
    let restarts = opts.restarts.max(1);
    let target = to_choi(t);
    let dim = t.dim();
    let runs: Vec<FitReport> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let init = random_start(dim, m, opts.seed.wrapping_add(r as u64));
            Fitter::new(&target, init).run(opts)
        })
        .collect();
    let mut best = runs
        .into_iter()
        .enumerate()
        .min_by(|(ia, a), (ib, b)| a.best_distance.total_cmp(&b.best_distance).then(ia.cmp(ib)))
        .map(|(_, r)| r)
        .expect("at least one restart");
    best.restarts_used = restarts;
    Ok(best)
}

/// Fits `m = 1..=m_max`, seeding each size with the previous best mixture
/// padded by one zero-weight Haar unitary. Best distances are then
/// non-increasing in `m`.
pub fn fit_warm_start_sweep(
    t: &KrausChannel,
    m_max: usize,
    opts: &FitOptions,
) -> Result<Vec<FitReport>> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be >= 1".into()));
    }
    let mut reports = vec![fit_unitary_mixture(t, 1, opts)?];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_0f1a_57ed);
    for _ in 2..=m_max {
        let previous = &reports.last().expect("nonempty").mixture;
        let init = previous.padded(haar_unitary_from_rng(t.dim(), &mut rng));
        reports.push(fit_from(t, init, opts)?);
    }
    Ok(reports)
}

#[derive(Serialize)]
struct TermJson {
    weight: f64,
    unitary: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct MixtureJson {
    dim: usize,
    terms: Vec<TermJson>,
}

impl Serialize for UnitaryMixture {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.dim;
        MixtureJson {
            dim: d,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    weight: t.weight,
                    unitary: (0..d)
                        .map(|i| {
                            (0..d)
                                .map(|j| [t.unitary[(i, j)].re, t.unitary[(i, j)].im])
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl Serialize for FitReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            metric: &'static str,
            best_distance: f64,
            iterations: usize,
            restarts_used: usize,
            converged: bool,
            history: &'a [f64],
            mixture: &'a UnitaryMixture,
        }
        Json {
            metric: METRIC,
            best_distance: self.best_distance,
            iterations: self.iterations,
            restarts_used: self.restarts_used,
            converged: self.converged,
            history: &self.history,
            mixture: &self.mixture,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::standard::*;
    use crate::matcore::{c64, haar_unitary};

    fn pauli_mixture() -> UnitaryMixture {
        UnitaryMixture::new(
            paulis()
                .into_iter()
                .map(|u| MixtureTerm {
                    weight: 0.25,
                    unitary: u,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn mixture_to_channel_examples() {
        let u = haar_unitary(3, 1);
        let single = UnitaryMixture::new(vec![MixtureTerm {
            weight: 1.0,
            unitary: u.clone(),
        }])
        .unwrap();
        let k = mixture_to_channel(&single);
        assert_eq!(k.kraus(), &[u]);

        let dep = mixture_to_channel(&pauli_mixture());
        let oracle =
            ChoiMatrix::from_linear_map(2, |x| ComplexMatrix::identity(2).scale_c(x.trace() * 0.5));
        assert!(to_choi(&dep).matrix().max_abs_diff(&oracle) < 1e-15);
        assert!(dep.is_unital(1e-10) && dep.validate().trace_preserving);
    }

    #[test]
    fn zero_weight_terms_are_dropped() {
        let m = pauli_mixture().padded(haar_unitary(2, 5));
        assert_eq!(mixture_to_channel(&m).kraus_count(), 4);
    }

    #[test]
    fn mixture_validation() {
        let bad_sum = UnitaryMixture::new(vec![MixtureTerm {
            weight: 0.5,
            unitary: ComplexMatrix::identity(2),
        }]);
        assert!(matches!(bad_sum, Err(Error::BadWeights { .. })));
        let not_unitary = UnitaryMixture::new(vec![MixtureTerm {
            weight: 1.0,
            unitary: ComplexMatrix::identity(2).scale(2.0),
        }]);
        assert!(not_unitary.is_err());
    }

    #[test]
    fn choi_distance_examples() {
        let t = random_unital(3);
        assert_eq!(choi_distance(&t, &t).unwrap(), 0.0);
        let a = random_unital(4);
        assert_eq!(
            choi_distance(&a, &t).unwrap(),
            choi_distance(&t, &a).unwrap()
        );

        // identity: 2|Omega><Omega| has entries 1 at (0,0),(0,3),(3,0),(3,3);
        // subtracting I/2 leaves 0.5, 1, 1, 0.5 there and -0.5 on (1,1),(2,2).
        let expected = (0.25 + 1.0 + 1.0 + 0.25 + 0.25 + 0.25_f64).sqrt() / 2.0;
        let d = choi_distance(&KrausChannel::identity(2), &depolarizing_qubit()).unwrap();
        assert!((d - expected).abs() < 1e-15);
        assert!(choi_distance(&t, &KrausChannel::identity(2)).is_err());
    }

    fn random_unital(seed: u64) -> KrausChannel {
        crate::channels::random::random_unital_channel(3, 2, seed)
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let target = to_choi(&werner_holevo_3());
        let init = random_start(3, 3, 8);
        let (w, us) = (vec![0.2, 0.5, 0.3], init.unitaries());
        let dir = haar_unitary(3, 99).scale_c(c64(0.3, -0.7));
        for i in 0..3 {
            let g = unitary_gradient(&target, &w, &us, i);
            let analytic = (g.adjoint() * &dir).trace().re;
            let h = 1e-5;
            let shifted = |s: f64| {
                let mut m = us.clone();
                m[i] = &us[i] + dir.scale(s);
                squared_loss(&target, &w, &m)
            };
            let fd = (shifted(h) - shifted(-h)) / (2.0 * h);
            assert!(
                (analytic - fd).abs() <= 1e-5 * fd.abs().max(1e-8),
                "{analytic} vs {fd}"
            );
        }
    }

    #[test]
    fn recovers_a_unitary_channel() {
        let v = haar_unitary(3, 1234);
        let t = KrausChannel::unitary(v.clone()).unwrap();
        let report = fit_unitary_mixture(&t, 1, &FitOptions::default()).unwrap();
        assert!(report.best_distance <= 1e-8, "{}", report.best_distance);
        let u = &report.mixture.terms()[0].unitary;
        let overlap = (u.adjoint() * &v).trace().norm() / 3.0;
        assert!(overlap >= 1.0 - 1e-6);
    }

    #[test]
    fn history_is_monotone_and_honest() {
        let t = werner_holevo_3();
        let opts = FitOptions {
            restarts: 2,
            max_iter: 200,
            ..FitOptions::default()
        };
        let report = fit_unitary_mixture(&t, 3, &opts).unwrap();
        assert!(report.history.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(report.best_distance, *report.history.last().unwrap());
        let check = choi_distance(&t, &mixture_to_channel(&report.mixture)).unwrap();
        assert!((check - report.best_distance).abs() <= 1e-12);
        assert!(UnitaryMixture::new(report.mixture.terms().to_vec()).is_ok());
    }

    #[test]
    fn non_unital_target_is_rejected() {
        let t = amplitude_damping(0.5).unwrap();
        assert!(matches!(
            fit_unitary_mixture(&t, 2, &FitOptions::default()),
            Err(Error::NotUnital { .. })
        ));
    }
}
