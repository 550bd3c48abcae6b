//! Randomized invariants of the symplectic layer and the Steane enlargement.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use agq::codes::{LinearCode, DEFAULT_BUDGET};
use agq::galois::{gf, Elem};
use agq::random::random_dual_containing;
use agq::symplectic::{
    pack_gf4, steane_compose, symplectic_form, trace_form, SteaneOptions, SymplecticCode,
};
use agq::BitVec;

fn bits(v: &[bool]) -> BitVec {
    BitVec::from_bits(v.iter().copied())
}

/// Binary `D ⊇ D^⊥` with a superset `D'` of dimension at least `k + 2`.
fn nested_pair(seed: u64) -> Option<(LinearCode, LinearCode)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = gf(1).unwrap();
    let n = rng.gen_range(4..=9);
    let d = random_dual_containing(&mut rng, f, n).unwrap();
    if d.dim() + 2 > n {
        return None;
    }
    let target = rng.gen_range(d.dim() + 2..=n);
    let mut gens = d.generators().to_vec();
    let mut d_prime = d.clone();
    while d_prime.dim() < target {
        gens.push((0..n).map(|_| rng.gen_range(0..2) as Elem).collect());
        d_prime = LinearCode::from_generators(f, n, gens.clone()).unwrap();
    }
    Some((d, d_prime))
}

fn random_span_element(rng: &mut ChaCha8Rng, code: &SymplecticCode) -> BitVec {
    let mut v = BitVec::zeros(2 * code.len());
    for g in code.generators() {
        if rng.gen_bool(0.5) {
            v.xor_assign(g);
        }
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn form_is_alternating_and_symmetric(
        x in (1..=12usize).prop_flat_map(|n| prop::collection::vec(any::<bool>(), 2 * n)),
        y_seed in any::<u64>(),
    ) {
        let n = x.len();
        let mut rng = ChaCha8Rng::seed_from_u64(y_seed);
        let y: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let (x, y) = (bits(&x), bits(&y));
        prop_assert!(!symplectic_form(&x, &x).unwrap());
        prop_assert_eq!(symplectic_form(&x, &y).unwrap(), symplectic_form(&y, &x).unwrap());
    }

    #[test]
    fn form_matches_gf4_trace_form(
        x in prop::collection::vec(0u8..4, 1..=16usize),
        y_seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(y_seed);
        let y: Vec<Elem> = (0..x.len()).map(|_| rng.gen_range(0..4)).collect();
        let form = symplectic_form(&pack_gf4(&x), &pack_gf4(&y)).unwrap();
        prop_assert_eq!(u8::from(form), trace_form(&x, &y).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn steane_enlargement_invariants(seed in any::<u64>()) {
        let pair = nested_pair(seed);
        prop_assume!(pair.is_some());
        let (d, d_prime) = pair.unwrap();
        let s = steane_compose(&d, &d_prime, SteaneOptions::default()).unwrap();
        let f = &s.code;
        let n = f.len();
        prop_assert_eq!(f.dim(), d.dim() + d_prime.dim());
        prop_assert!(f.is_large());
        let dual = f.symplectic_dual();
        prop_assert_eq!(f.dim() + dual.dim(), 2 * n);
        prop_assert!(f.contains(&dual).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let sample: Vec<BitVec> = (0..100).map(|_| random_span_element(&mut rng, &dual)).collect();
        for u in &sample {
            prop_assert!(dual.contains_vec(u));
            for v in &sample {
                prop_assert!(!symplectic_form(u, v).unwrap());
            }
        }

        let dp = d_prime.min_distance_exact(DEFAULT_BUDGET).unwrap();
        let d2 = d_prime.second_or_weight(DEFAULT_BUDGET).unwrap();
        prop_assert!((3 * dp).div_ceil(2) <= d2, "d' = {}, d'2 = {}", dp, d2);
    }
}
