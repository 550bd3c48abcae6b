//! A twisted Hermitian chain C' ⊃ C ⊇ C^⊥ over GF(4) with exact distances.

use agq::agcurve::{build_dual_chain, enumerate_curve, CurveKind, TwistOptions};
use agq::codes::DEFAULT_BUDGET;

pub fn run_example() -> anyhow::Result<()> {
    let curve = enumerate_curve(CurveKind::Hermitian, 2)?;
    let t = build_dual_chain(&curve, 3, 1, TwistOptions::default())?;
    t.certify()?;
    let d = t.c.min_distance_exact(DEFAULT_BUDGET)?;
    let d_prime = t.c_prime.min_distance_exact(DEFAULT_BUDGET)?;
    let p = &t.provenance;
    println!("twist w = [{}], regime {:?}", p.twist.join(", "), p.regime);
    println!(
        "C = [{}, {}, {d}] (designed {}), C' = [{}, {}, {d_prime}] (designed {})",
        t.c.len(),
        t.c.dim(),
        p.designed_d,
        t.c_prime.len(),
        t.c_prime.dim(),
        p.designed_d_prime
    );
    anyhow::ensure!((t.c.dim(), d) == (5, 3));
    anyhow::ensure!(t.c.contains_dual());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
