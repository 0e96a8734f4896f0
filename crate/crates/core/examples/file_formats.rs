//! Reads the bundled channel and matrix files and writes one back out.

use std::path::Path;

use qbirkhoff::channels::io::{channel_to_json, parse_channel_json, parse_matrix_csv};
use qbirkhoff::channels::validate_channel;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for name in [
        "identity_2",
        "depolarizing_qubit",
        "amplitude_damping_0.5",
        "werner_holevo_3",
    ] {
        let k = parse_channel_json(&std::fs::read_to_string(data.join(format!("{name}.json")))?)?;
        let r = validate_channel(&k);
        println!(
            "{name:>22}: dim {}, {} ops, unital {}",
            r.dim, r.kraus_count, r.unital
        );
    }
    let m = parse_matrix_csv(&std::fs::read_to_string(
        data.join("doubly_stochastic_4.csv"),
    )?)?;
    println!("doubly_stochastic_4.csv is {}x{}", m.rows(), m.cols());

    let k = parse_channel_json(&std::fs::read_to_string(data.join("identity_2.json"))?)?;
    println!("{}", channel_to_json(&k));
    Ok(())
}
