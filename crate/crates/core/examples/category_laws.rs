//! Runs the law checks on random channels and on the bundled examples.

use qbirkhoff::catlaws::{chain_copy_count, channel_suite, randomized_suite};
use qbirkhoff::channels::standard::{amplitude_damping, depolarizing_qubit, werner_holevo_3};

fn main() -> qbirkhoff::Result<()> {
    for r in randomized_suite(200, 8, 0)? {
        println!(
            "{:>30}: max deviation {:.2e} over {} samples, passed {}",
            r.law_name, r.max_deviation, r.samples, r.passed
        );
    }

    for (name, k) in [
        ("depolarizing", depolarizing_qubit()),
        ("amplitude damping", amplitude_damping(0.5)?),
        ("Werner-Holevo", werner_holevo_3()),
    ] {
        let reports = channel_suite(&k, 8, 1)?;
        let worst = reports.iter().map(|r| r.max_deviation).fold(0.0, f64::max);
        println!(
            "{name:>18}: {} laws, all passed {}, worst deviation {worst:.1e}",
            reports.len(),
            reports.iter().all(|r| r.passed)
        );
    }

    let counts: Vec<usize> = (1..=6).map(chain_copy_count).collect();
    println!("copies along the chain for n = 1..6: {counts:?}");
    Ok(())
}
