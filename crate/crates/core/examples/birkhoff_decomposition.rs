//! Decomposes a random doubly stochastic matrix into permutation matrices
//! and checks the reconstruction.
//!
//! cargo run --example birkhoff_decomposition -- [n] [k] [seed]

use qbirkhoff::birkhoff::{birkhoff_decompose, random_doubly_stochastic};
use qbirkhoff::matcore::DEFAULT_TOL;

fn main() -> qbirkhoff::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let n = *args.first().unwrap_or(&5) as usize;
    let k = *args.get(1).unwrap_or(&4) as usize;
    let seed = *args.get(2).unwrap_or(&0);

    let ds = random_doubly_stochastic(n, k, seed);
    let dec = birkhoff_decompose(&ds, DEFAULT_TOL)?;

    println!("{n}x{n} matrix built from {k} permutations (seed {seed})");
    for term in &dec.terms {
        println!("  {:.6}  {:?}", term.weight, term.perm.as_slice());
    }
    let err = dec.reconstruct().max_abs_diff(ds.matrix());
    println!(
        "{} terms (bound {}), weight sum {:.15}, max reconstruction error {err:.2e}",
        dec.terms.len(),
        (n - 1) * (n - 1) + 1,
        dec.weight_sum()
    );
    Ok(())
}
