//! Points, genus and Riemann-Roch bases of small Hermitian curves, and the
//! evaluation codes they define.

use agq::agcurve::{enumerate_curve, evaluation_code, rr_basis, CurveKind};

pub fn run_example() -> anyhow::Result<()> {
    for (q, points, genus) in [(2, 8, 1), (4, 64, 6)] {
        let c = enumerate_curve(CurveKind::Hermitian, q)?;
        println!(
            "Hermitian q = {q}: {} affine points, genus {}",
            c.len(),
            c.genus()
        );
        anyhow::ensure!(c.len() == points && c.genus() == genus);
    }
    let c = enumerate_curve(CurveKind::Hermitian, 2)?;
    for a in 0..=5 {
        let l = rr_basis(&c, a);
        let e = evaluation_code(&c, a)?;
        println!(
            "L({a}P∞): dim {}, evaluation code [{}, {}]",
            l.len(),
            e.len(),
            e.dim()
        );
        anyhow::ensure!(e.dim() == l.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
