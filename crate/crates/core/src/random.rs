//! Seeded random codes for property suites.

use rand::Rng;

use crate::codes::{nullspace, LinearCode};
use crate::error::Result;
use crate::galois::{Elem, FieldCtx};

fn random_word<R: Rng>(rng: &mut R, field: &FieldCtx, n: usize) -> Vec<Elem> {
    (0..n)
        .map(|_| rng.gen_range(0..field.order()) as Elem)
        .collect()
}

/// Span of `rows` random words; the dimension may fall short of `rows`.
pub fn random_code<R: Rng>(
    rng: &mut R,
    field: &'static FieldCtx,
    n: usize,
    rows: usize,
) -> Result<LinearCode> {
    let gens = (0..rows).map(|_| random_word(rng, field, n)).collect();
    LinearCode::from_generators(field, n, gens)
}

/// Random binary code of dimension exactly `k ≤ n`.
pub fn random_binary_code<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<LinearCode> {
    let f = crate::galois::gf(1)?;
    loop {
        let c = random_code(rng, f, n, k)?;
        if c.dim() == k {
            return Ok(c);
        }
    }
}

/// `C = S^⊥` for a random self-orthogonal `S` of dimension at most `n/2`,
/// so `C ⊇ C^⊥ = S`. In characteristic 2, `v·v = (Σ v_j)²`, so `S` grows by
/// random words of `(S + ⟨1⟩)^⊥` outside `S`.
pub fn random_dual_containing<R: Rng>(
    rng: &mut R,
    field: &'static FieldCtx,
    n: usize,
) -> Result<LinearCode> {
    let target = rng.gen_range(0..=n / 2);
    let mut s = LinearCode::zero(field, n);
    let ones = vec![1 as Elem; n];
    for _ in 0..4 * n {
        if s.dim() >= target {
            break;
        }
        let mut checks = s.generators().to_vec();
        checks.push(ones.clone());
        let space = nullspace(field, &checks, n);
        if space.is_empty() {
            break;
        }
        let mut v = vec![0 as Elem; n];
        for row in &space {
            let c = rng.gen_range(0..field.order()) as Elem;
            for (x, &y) in v.iter_mut().zip(row) {
                *x = field.add(*x, field.mul(c, y));
            }
        }
        if v.iter().all(|&x| x == 0) || s.contains_word(&v) {
            continue;
        }
        let mut gens = s.generators().to_vec();
        gens.push(v);
        s = LinearCode::from_generators(field, n, gens)?;
    }
    Ok(s.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::gf;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_codes_contain_their_duals() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut dims = std::collections::BTreeSet::new();
        for k in [2, 4] {
            for n in 1..=8 {
                let c = random_dual_containing(&mut rng, gf(k).unwrap(), n).unwrap();
                assert!(c.contains_dual());
                dims.insert((n, c.dim()));
            }
        }
        assert!(dims.iter().any(|&(n, k)| k < n), "some proper codes appear");
    }

    #[test]
    fn binary_code_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for k in 0..=6 {
            assert_eq!(random_binary_code(&mut rng, 8, k).unwrap().dim(), k);
        }
    }
}
