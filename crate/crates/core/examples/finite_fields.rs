//! GF(2^k) arithmetic, traces and self-dual bases for k = 1..8.

use agq::galois::{gf, SelfDualBasis};

pub fn run_example() -> anyhow::Result<()> {
    for k in 1..=8 {
        let f = gf(k)?;
        let basis: SelfDualBasis = f.find_self_dual_basis()?;
        anyhow::ensure!(basis.is_self_dual(f), "GF(2^{k}) basis is not self-dual");
        let hex: Vec<String> = basis.elements().iter().map(|&x| f.to_hex(x)).collect();
        println!(
            "GF(2^{k}) modulus {:#x}: self-dual basis [{}]",
            f.modulus(),
            hex.join(", ")
        );
    }
    let f = gf(4)?;
    let x = f.generator_pow(5);
    println!(
        "in GF(16): g^5 = {}, its inverse {}, trace {}, square root {}",
        f.to_hex(x),
        f.to_hex(f.inv(x)),
        f.trace(x),
        f.to_hex(f.sqrt(x))
    );
    anyhow::ensure!(f.mul(x, f.inv(x)) == 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
