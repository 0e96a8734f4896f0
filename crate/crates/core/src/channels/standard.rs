//! Named channels used throughout the tests, examples and bundled data.

use super::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::{c64, ComplexMatrix};

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c64(0.0, 0.0), c64(0.0, -1.0)],
        vec![c64(0.0, 1.0), c64(0.0, 0.0)],
    ])
    .unwrap()
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]).unwrap()
}

/// `[I, X, Y, Z]`.
pub fn paulis() -> [ComplexMatrix; 4] {
    [ComplexMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()]
}

/// Completely depolarizing qubit channel `rho -> tr(rho) I / 2`, Kraus
/// operators `sigma_i / 2`.
pub fn depolarizing_qubit() -> KrausChannel {
    KrausChannel::from_parts(2, paulis().iter().map(|p| p.scale(0.5)).collect())
}

/// Amplitude damping with decay probability `gamma` (trace preserving, not
/// unital for `gamma > 0`).
pub fn amplitude_damping(gamma: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidArgument(format!(
            "damping probability {gamma} outside [0, 1]"
        )));
    }
    let a0 = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, (1.0 - gamma).sqrt()]])?;
    let a1 = ComplexMatrix::from_real_rows(&[&[0.0, gamma.sqrt()], &[0.0, 0.0]])?;
    KrausChannel::new(vec![a0, a1])
}

/// Werner–Holevo channel on qutrits, `rho -> (tr(rho) I - rho^T) / 2`.
///
/// Kraus operators are `(|i><j| - |j><i|) / sqrt(2)` for `i < j`. Unital,
/// extremal, and not a mixture of unitary channels.
pub fn werner_holevo_3() -> KrausChannel {
    let d = 3;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut kraus = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            kraus.push(ComplexMatrix::from_fn(d, d, |r, c| {
                if r == i && c == j {
                    c64(s, 0.0)
                } else if r == j && c == i {
                    c64(-s, 0.0)
                } else {
                    c64(0.0, 0.0)
                }
            }));
        }
    }
    KrausChannel::from_parts(d, kraus)
}
