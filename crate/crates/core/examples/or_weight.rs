//! The second OR-weight d'₂ and its lower bound ⌈3d/2⌉.

use agq::codes::families::{even_weight, extended_hamming8, hamming};
use agq::codes::DEFAULT_BUDGET;

pub fn run_example() -> anyhow::Result<()> {
    for (name, c) in [
        ("even-weight [8,7]", even_weight(8)),
        ("Hamming [7,4]", hamming(3)),
        ("extended Hamming [8,4]", extended_hamming8()),
    ] {
        let d = c.min_distance_exact(DEFAULT_BUDGET)?;
        let d2 = c.second_or_weight(DEFAULT_BUDGET)?;
        println!(
            "{name}: d = {d}, d'2 = {d2}, ⌈3d/2⌉ = {}",
            (3 * d).div_ceil(2)
        );
        anyhow::ensure!(d2 >= (3 * d).div_ceil(2));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
