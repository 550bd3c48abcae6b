//! The GV-type bound against the envelope of the polynomial lines, written
//! as CSV, plus the breakpoint comparison.

use agq::atlas::{
    breakpoint_diagnostic, envelope, envelope_pieces, grid, gv4_curve, gv4_root, write_csv,
};

pub fn run_example() -> anyhow::Result<()> {
    let gv = gv4_curve(&grid(5e-4, 0.19)?)?;
    let env = envelope(&grid(5e-4, 1.0 / 18.0)?)?;
    let path = std::env::temp_dir().join("agq_bounds_figure.csv");
    write_csv(&[gv.clone(), env.curve.clone()], &path)?;
    println!(
        "wrote {} and {} samples to {}",
        gv.samples.len(),
        env.curve.samples.len(),
        path.display()
    );
    println!("gv4 crosses zero at δ = {:.6}", gv4_root());
    for (s, m) in env.curve.samples.iter().zip(&env.argmax) {
        let g = gv.value_at(s.delta).expect("shared grid");
        anyhow::ensure!(g > s.r, "gv4 below the envelope at δ = {}", s.delta);
        if ((s.delta * 1e4).round() as u64).is_multiple_of(100) {
            println!(
                "δ = {:.3}: gv4 {g:.4}, envelope {:.4} (m = {m})",
                s.delta, s.r
            );
        }
    }
    for p in envelope_pieces().iter().filter(|p| p.m <= 6) {
        println!("line m = {} is the envelope on [{}, {}]", p.m, p.from, p.to);
    }
    let d = breakpoint_diagnostic();
    for r in d.rows.iter().filter(|r| !r.agrees) {
        println!(
            "m = {}: stated [{}, {}]{}, computed {:?}",
            r.m,
            r.stated_from,
            r.stated_to,
            if r.inverted { " (inverted)" } else { "" },
            r.computed.map(|(a, b)| format!("[{a}, {b}]"))
        );
    }
    anyhow::ensure!(d.inversions() == [3]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
