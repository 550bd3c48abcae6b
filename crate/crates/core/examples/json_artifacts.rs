//! Saving and reloading each stage as JSON; loading rechecks the stored claims.

use agq::agcurve::{build_dual_chain, enumerate_curve, CurveKind, TwistOptions};
use agq::artifact::{read_json, write_json, FCodeJson, Invocation, PairJson, TripleJson};
use agq::descent::{expand_chain, ExpansionMap};
use agq::symplectic::{steane_compose, SteaneOptions};

pub fn run_example() -> anyhow::Result<()> {
    let dir = std::env::temp_dir().join(format!("agq_json_{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let curve = enumerate_curve(CurveKind::Hermitian, 2)?;
    let t = build_dual_chain(&curve, 3, 1, TwistOptions::default())?;
    write_json(
        dir.join("triple.json"),
        TripleJson::from(&t),
        Some(Invocation::new("example")),
    )?;

    let t = read_json::<TripleJson>(dir.join("triple.json"))?
        .body
        .to_triple()?;
    let map = ExpansionMap::new(curve.field(), t.c.len())?;
    let pair = expand_chain(&t, &map)?;
    write_json(
        dir.join("pair.json"),
        PairJson::new(&pair, &map, Some(t.provenance.clone())),
        None,
    )?;

    let pair = read_json::<PairJson>(dir.join("pair.json"))?
        .body
        .to_pair()?;
    let s = steane_compose(&pair.d, &pair.d_prime, SteaneOptions::default())?;
    write_json(dir.join("fcode.json"), FCodeJson::from(&s), None)?;
    let f = read_json::<FCodeJson>(dir.join("fcode.json"))?
        .body
        .to_code()?;
    println!(
        "reloaded F: n = {}, k_F = {}, bound {:?}",
        f.len(),
        f.dim(),
        f.distance_bound()
    );
    anyhow::ensure!(f == s.code);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
