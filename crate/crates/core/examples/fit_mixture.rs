//! Fits unitary mixtures to a hidden unitary, the depolarizing qubit and the
//! Werner-Holevo channel, then sweeps m with warm starts.

use qbirkhoff::channels::standard::{depolarizing_qubit, werner_holevo_3};
use qbirkhoff::channels::KrausChannel;
use qbirkhoff::matcore::haar_unitary;
use qbirkhoff::mixapprox::{fit_unitary_mixture, fit_warm_start_sweep, FitOptions};

fn main() -> qbirkhoff::Result<()> {
    let opts = FitOptions::default();

    let hidden = haar_unitary(3, 42);
    let fit = fit_unitary_mixture(&KrausChannel::unitary(hidden.clone())?, 1, &opts)?;
    let found = &fit.mixture.unitaries()[0];
    let overlap = (hidden.adjoint() * found).trace().norm() / 3.0;
    println!(
        "hidden unitary: distance {:.2e}, |tr(V^dag U)|/d = {overlap:.12}",
        fit.best_distance
    );

    let fit = fit_unitary_mixture(&depolarizing_qubit(), 4, &opts)?;
    println!(
        "depolarizing qubit, m = 4: distance {:.2e}, weights {:.4?}",
        fit.best_distance,
        fit.mixture.weights()
    );

    let wh = werner_holevo_3();
    let fit = fit_unitary_mixture(
        &wh,
        10,
        &FitOptions {
            restarts: 20,
            ..opts.clone()
        },
    )?;
    println!(
        "Werner-Holevo, m = 10, 20 restarts: distance {:.6}",
        fit.best_distance
    );

    let sweep = fit_warm_start_sweep(&wh, 10, &opts)?;
    for (m, r) in sweep.iter().enumerate() {
        println!("  warm start m = {:>2}: {:.6}", m + 1, r.best_distance);
    }
    Ok(())
}
