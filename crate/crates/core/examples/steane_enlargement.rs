//! Steane enlargement of [8,4,4] ⊂ [8,7,2] into an [[8,3,3]] code, and why
//! the row mixing must have no fixed combination.

use agq::codes::families::{even_weight, extended_hamming8};
use agq::codes::DEFAULT_BUDGET;
use agq::symplectic::{quantum_params, steane_compose, Mixing, SteaneOptions};

pub fn run_example() -> anyhow::Result<()> {
    let (d, d_prime) = (extended_hamming8(), even_weight(8));
    for mixing in [Mixing::FixedPointFree, Mixing::CyclicShift] {
        let opts = SteaneOptions {
            mixing,
            budget: DEFAULT_BUDGET,
        };
        let s = steane_compose(&d, &d_prime, opts)?;
        let r = quantum_params(&s.code, DEFAULT_BUDGET)?;
        println!(
            "{mixing:?}: k_F = {}, large = {}, {} witness {}",
            s.code.dim(),
            s.code.is_large(),
            r.params(),
            r.witness.as_deref().unwrap_or("-")
        );
    }
    let s = steane_compose(&d, &d_prime, SteaneOptions::default())?;
    let r = quantum_params(&s.code, DEFAULT_BUDGET)?;
    anyhow::ensure!((r.k_q, r.d_q, r.d_exact) == (3, 3, true));
    anyhow::ensure!(s.bound() == Some(3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
