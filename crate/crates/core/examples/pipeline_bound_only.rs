//! The construction at m = 2, where only the designed bound is available.

use agq::agcurve::CurveKind;
use agq::atlas::{pipeline_build, PipelineConfig};

pub fn run_example() -> anyhow::Result<()> {
    let r = pipeline_build(&PipelineConfig::new(2, CurveKind::Hermitian, 4, 34, 30))?;
    println!(
        "field level: n = {}, k = {}, k' = {}, designed d = {}, d' = {}",
        r.field.n, r.field.k, r.field.k_prime, r.field.d, r.field.d_prime
    );
    println!(
        "binary level: D = [{}, {}], D' = [{}, {}]",
        r.binary.n, r.binary.k, r.binary.n, r.binary.k_prime
    );
    println!("{}", r.quantum.params());
    anyhow::ensure!(r.all_verified());
    anyhow::ensure!((r.quantum.n, r.quantum.k_q, r.quantum.d_q) == (256, 40, 24));
    anyhow::ensure!(!r.quantum.d_exact);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
