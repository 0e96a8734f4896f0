//! Extremality test on unitary channels, mixtures and the Werner-Holevo
//! channel, including its second tensor power.

use qbirkhoff::channels::standard::{depolarizing_qubit, werner_holevo_3};
use qbirkhoff::channels::{mix_channels, KrausChannel};
use qbirkhoff::extremality::{landau_streater_extremal, tensor_power_extremal};
use qbirkhoff::matcore::{haar_unitary, DEFAULT_TOL};

fn main() -> qbirkhoff::Result<()> {
    let u = KrausChannel::unitary(haar_unitary(3, 1))?;
    let v = KrausChannel::unitary(haar_unitary(3, 2))?;
    let mix = mix_channels(&[(0.3, u.clone()), (0.7, v)])?;

    let cases = [
        ("random unitary", u),
        ("mixture of two unitaries", mix),
        ("depolarizing qubit", depolarizing_qubit()),
        ("Werner-Holevo d=3", werner_holevo_3()),
    ];
    for (name, k) in &cases {
        let r = landau_streater_extremal(k, DEFAULT_TOL)?;
        println!(
            "{name:>26}: rank {} of {} test vectors -> extremal {}",
            r.rank, r.test_vector_count, r.extremal
        );
    }

    let r = tensor_power_extremal(&werner_holevo_3(), 2, DEFAULT_TOL)?;
    println!(
        "Werner-Holevo squared: rank {} of {} in ambient dimension {} -> extremal {}",
        r.rank, r.test_vector_count, r.ambient_dim, r.extremal
    );
    Ok(())
}
