//! Expanding GF(2^{2m}) codes in a self-dual basis commutes with duality.

use agq::agcurve::{build_dual_chain, enumerate_curve, CurveKind, TwistOptions};
use agq::descent::{expand_chain, expand_code, ExpansionMap};
use agq::galois::gf;
use agq::random::random_dual_containing;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> anyhow::Result<()> {
    let curve = enumerate_curve(CurveKind::Hermitian, 4)?;
    let t = build_dual_chain(&curve, 34, 30, TwistOptions::default())?;
    let map = ExpansionMap::new(curve.field(), t.c.len())?;
    let pair = expand_chain(&t, &map)?;
    println!(
        "GF(16) chain [64, {}] ⊂ [64, {}] expands to D = [{}, {}] ⊂ D' = [{}, {}]",
        t.c.dim(),
        t.c_prime.dim(),
        pair.d.len(),
        pair.d.dim(),
        pair.d_prime.len(),
        pair.d_prime.dim()
    );
    anyhow::ensure!(pair.d.contains_dual());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = gf(4)?;
    for n in [3, 6, 9] {
        let c = random_dual_containing(&mut rng, f, n)?;
        let map = ExpansionMap::new(f, n)?;
        let same = expand_code(&c.dual(), &map)? == expand_code(&c, &map)?.dual();
        println!(
            "random [{n}, {}] over GF(16): dual commutes with expansion: {same}",
            c.dim()
        );
        anyhow::ensure!(same);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
