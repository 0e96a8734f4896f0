//! Distance of tensor powers `T^{⊗k}` from the unitary-mixture hull.
//!
//! The table only records what the optimizer finds; nothing here asserts a
//! trend in `k`.

use serde::Serialize;

use super::{fit_unitary_mixture, FitOptions, FitReport, METRIC};
use crate::catlaws::chain_copy_count;
use crate::channels::{self, KrausChannel, DEFAULT_DIM_CAP};
use crate::error::{Error, Result};
use crate::matcore::format_real;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub k: usize,
    pub m: usize,
    pub best_distance: f64,
    pub chain_copies: usize,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentTable {
    pub metric: &'static str,
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,m,best_distance,chain_copies,iterations,converged\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.k,
                r.m,
                format_real(r.best_distance),
                r.chain_copies,
                r.iterations,
                r.converged
            ));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct TensorPowerExperiment {
    pub table: ExperimentTable,
    /// Full fit report per row, in row order.
    pub fits: Vec<FitReport>,
}

/// Fits `m_schedule[k - 1]` unitaries to `T^{⊗k}` for `k = 1..=n_max`.
pub fn tensor_power_experiment(
    t: &KrausChannel,
    n_max: usize,
    m_schedule: &[usize],
    opts: &FitOptions,
) -> Result<TensorPowerExperiment> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    if m_schedule.len() < n_max {
        return Err(Error::InvalidArgument(format!(
            "m schedule has {} entries, need {n_max}",
            m_schedule.len()
        )));
    }
    channels::power_dim(t.dim(), n_max, DEFAULT_DIM_CAP)?;
    let mut rows = Vec::with_capacity(n_max);
    let mut fits = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let power = channels::tensor_power(t, k)?;
        let m = m_schedule[k - 1];
        let fit = fit_unitary_mixture(&power, m, opts)?;
        rows.push(ExperimentRow {
            k,
            m,
            best_distance: fit.best_distance,
            chain_copies: chain_copy_count(k),
            iterations: fit.iterations,
            converged: fit.converged,
        });
        fits.push(fit);
    }
    Ok(TensorPowerExperiment {
        table: ExperimentTable {
            metric: METRIC,
            rows,
        },
        fits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::standard::werner_holevo_3;
    use crate::matcore::haar_unitary;

    #[test]
    fn unitary_channel_rows_are_near_zero() {
        let u = KrausChannel::unitary(haar_unitary(2, 6)).unwrap();
        let exp = tensor_power_experiment(&u, 2, &[1, 1], &FitOptions::default()).unwrap();
        assert_eq!(exp.table.rows.len(), 2);
        for row in &exp.table.rows {
            assert!(row.best_distance <= 1e-8, "{row:?}");
        }
        assert_eq!(exp.table.rows[1].chain_copies, 3);
    }

    #[test]
    fn schedule_and_cap_errors() {
        let wh = werner_holevo_3();
        assert!(tensor_power_experiment(&wh, 2, &[2], &FitOptions::default()).is_err());
        assert!(matches!(
            tensor_power_experiment(&wh, 5, &[1; 5], &FitOptions::default()),
            Err(Error::DimensionCapExceeded { .. })
        ));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let table = ExperimentTable {
            metric: METRIC,
            rows: vec![ExperimentRow {
                k: 1,
                m: 2,
                best_distance: 0.5,
                chain_copies: 1,
                iterations: 3,
                converged: true,
            }],
        };
        assert_eq!(
            table.to_csv(),
            "k,m,best_distance,chain_copies,iterations,converged\n1,2,0.5,1,3,true\n"
        );
    }
}
