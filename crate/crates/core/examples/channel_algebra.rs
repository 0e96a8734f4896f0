//! Composition, tensor products and the Choi round trip on the standard
//! channels.

use qbirkhoff::channels::standard::{amplitude_damping, depolarizing_qubit, pauli_x};
use qbirkhoff::channels::{
    compose, kraus_from_choi, tensor, to_choi, validate_channel, DensityMatrix, KrausChannel,
};
use qbirkhoff::matcore::{c64, DEFAULT_TOL};

fn main() -> qbirkhoff::Result<()> {
    let flip = KrausChannel::unitary(pauli_x())?;
    let damp = amplitude_damping(0.5)?;
    let dep = depolarizing_qubit();

    let plus = DensityMatrix::pure(&[c64(1.0, 0.0), c64(0.0, 0.0)])?;
    let out = compose(&flip, &damp)?.apply(&plus)?;
    println!(
        "X after amplitude damping applied to |0><0|:\n{:?}",
        out.matrix()
    );

    for (name, k) in [("flip", &flip), ("damping", &damp), ("depolarizing", &dep)] {
        let r = validate_channel(k);
        println!(
            "{name:>12}: {} Kraus ops, trace dev {:.1e}, unital {}",
            r.kraus_count, r.trace_deviation, r.unital
        );
    }

    let pair = tensor(&dep, &flip);
    println!("depolarizing (x) flip acts on dimension {}", pair.dim());

    let back = kraus_from_choi(&to_choi(&damp), DEFAULT_TOL)?;
    let err = to_choi(&back)
        .matrix()
        .max_abs_diff(to_choi(&damp).matrix());
    println!(
        "Choi round trip of damping: {} canonical ops, Choi error {err:.1e}",
        back.kraus_count()
    );
    Ok(())
}
