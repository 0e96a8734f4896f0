//! Distance of T and T (x) T from the unitary-mixture hull, printed as CSV.
//!
//! cargo run --release --example tensor_power_experiment -- [werner|depolarizing]

use qbirkhoff::channels::standard::{depolarizing_qubit, werner_holevo_3};
use qbirkhoff::cli::default_schedule;
use qbirkhoff::mixapprox::{tensor_power_experiment, FitOptions};

fn main() -> qbirkhoff::Result<()> {
    let which = std::env::args().nth(1).unwrap_or_else(|| "werner".into());
    let t = match which.as_str() {
        "depolarizing" => depolarizing_qubit(),
        _ => werner_holevo_3(),
    };
    let schedule = default_schedule(t.dim(), 2);
    let exp = tensor_power_experiment(&t, 2, &schedule, &FitOptions::default())?;
    print!("{}", exp.table.to_csv());
    Ok(())
}
