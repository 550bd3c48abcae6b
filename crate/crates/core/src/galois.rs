//! Arithmetic in GF(2^k) for k ≤ 8.
//!
//! Elements are `u8` coordinate masks over the polynomial basis `1, x, …, x^{k-1}`
//! of `GF(2)[x]/(p)`, where `p` is a fixed primitive polynomial per degree. The
//! class of `x` generates the multiplicative group, so log/exp tables give
//! multiplication in two lookups.
//!
//! GF(4) gets a few extra helpers because the symplectic layer identifies it
//! with pairs of bits: `ε = x` and `ε̄ = x² = x + 1`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Field element as a polynomial-basis bit mask.
pub type Elem = u8;

/// Primitive polynomials, bit `i` is the coefficient of `x^i`.
const PRIMITIVE: [u16; 9] = [
    0,
    0b11,        // x + 1
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1000011,   // x^6 + x + 1
    0b10000011,  // x^7 + x + 1
    0b100011101, // x^8 + x^4 + x^3 + x^2 + 1
];

pub const MAX_DEGREE: u32 = 8;

#[derive(Debug, Clone)]
pub struct FieldCtx {
    k: u32,
    modulus: u16,
    /// `exp[i] = g^i` for `0 ≤ i < 2(q-1)`, doubled so products need no reduction.
    exp: Vec<Elem>,
    log: Vec<u16>,
    trace: Vec<u8>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(2^k) with the fixed primitive modulus.
    pub fn new(k: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(Error::DegreeOutOfRange(k));
        }
        let modulus = PRIMITIVE[k as usize];
        let q = 1usize << k;
        let group = q - 1;
        let mut exp = vec![0u8; 2 * group];
        let mut log = vec![0u16; q];
        // x reduces to 1 in GF(2) = GF(2)[x]/(x+1).
        let generator: u16 = if k == 1 { 1 } else { 0b10 };
        let mut e: u16 = 1;
        for i in 0..group {
            exp[i] = e as u8;
            exp[i + group] = e as u8;
            log[e as usize] = i as u16;
            e = clmul_mod(e, generator, modulus, k);
        }
        let mut ctx = FieldCtx {
            k,
            modulus,
            exp,
            log,
            trace: vec![0; q],
        };
        for x in 0..q {
            let mut acc = 0u8;
            let mut y = x as Elem;
            for _ in 0..k {
                acc ^= y;
                y = ctx.mul(y, y);
            }
            // The Frobenius sum lands in the prime field {0, 1}.
            debug_assert!(acc <= 1);
            ctx.trace[x] = acc;
        }
        Ok(ctx)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn order(&self) -> usize {
        1 << self.k
    }

    pub fn modulus(&self) -> u16 {
        self.modulus
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        (x as usize) < self.order()
    }

    pub fn check(&self, x: u32) -> Result<Elem> {
        if self.contains(x) {
            Ok(x as Elem)
        } else {
            Err(Error::NotInField {
                value: x,
                k: self.k,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    /// Multiplicative inverse; `inv(0)` panics.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        let group = self.order() - 1;
        self.exp[(group - self.log[a as usize] as usize) % group]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = (self.order() - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % group)) % group) as usize]
    }

    /// `g^i` for the fixed generator `g`.
    pub fn generator_pow(&self, i: usize) -> Elem {
        self.exp[i % (self.order() - 1)]
    }

    /// Multiplicative order of the fixed generator.
    pub fn generator_order(&self) -> usize {
        let g = self.generator_pow(1);
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// Absolute trace to GF(2).
    #[inline]
    pub fn trace(&self, x: Elem) -> u8 {
        self.trace[x as usize]
    }

    /// The unique square root, `x^{2^{k-1}}`.
    pub fn sqrt(&self, x: Elem) -> Elem {
        let mut y = x;
        for _ in 1..self.k {
            y = self.mul(y, y);
        }
        y
    }

    /// Rank of an element in generator-power order: `0`, then `1, g, g², …`.
    #[inline]
    pub fn power_rank(&self, x: Elem) -> usize {
        if x == 0 {
            0
        } else {
            1 + self.log[x as usize] as usize
        }
    }

    /// All elements in generator-power order, zero first.
    pub fn elements(&self) -> Vec<Elem> {
        std::iter::once(0)
            .chain((0..self.order() - 1).map(|i| self.exp[i]))
            .collect()
    }

    /// Deterministic backtracking search for a trace-orthonormal basis.
    pub fn find_self_dual_basis(&self) -> Result<SelfDualBasis> {
        let candidates: Vec<Elem> = (0..self.order() - 1)
            .map(|i| self.exp[i])
            .filter(|&x| self.trace(self.mul(x, x)) == 1)
            .collect();
        let mut chosen = Vec::with_capacity(self.k as usize);
        if self.extend_orthonormal(&candidates, 0, &mut chosen) {
            Ok(SelfDualBasis { elements: chosen })
        } else {
            Err(Error::SelfDualSearchExhausted(self.k))
        }
    }

    fn extend_orthonormal(&self, cands: &[Elem], from: usize, chosen: &mut Vec<Elem>) -> bool {
        if chosen.len() == self.k as usize {
            return true;
        }
        for (i, &c) in cands.iter().enumerate().skip(from) {
            if chosen.iter().all(|&a| self.trace(self.mul(a, c)) == 0) {
                chosen.push(c);
                if self.extend_orthonormal(cands, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn to_hex(&self, x: Elem) -> String {
        format!("{x:x}")
    }

    pub fn parse_hex(&self, s: &str) -> Result<Elem> {
        let v = u32::from_str_radix(s, 16)
            .map_err(|_| Error::Artifact(format!("bad hex element {s:?}")))?;
        self.check(v)
    }
}

fn clmul_mod(a: u16, b: u16, modulus: u16, k: u32) -> u16 {
    let mut r: u32 = 0;
    for i in 0..16 {
        if (b >> i) & 1 == 1 {
            r ^= (a as u32) << i;
        }
    }
    for bit in (k..32).rev() {
        if (r >> bit) & 1 == 1 {
            r ^= (modulus as u32) << (bit - k);
        }
    }
    r as u16
}

/// Shared, immutable field context for GF(2^k).
pub fn gf(k: u32) -> Result<&'static FieldCtx> {
    static FIELDS: OnceLock<Vec<FieldCtx>> = OnceLock::new();
    if !(1..=MAX_DEGREE).contains(&k) {
        return Err(Error::DegreeOutOfRange(k));
    }
    let fields = FIELDS.get_or_init(|| {
        (1..=MAX_DEGREE)
            .map(|k| FieldCtx::new(k).expect("degree in range"))
            .collect()
    });
    Ok(&fields[k as usize - 1])
}

/// Basis `α_1 … α_k` of GF(2^k) over GF(2) with `Tr(α_i α_j) = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfDualBasis {
    elements: Vec<Elem>,
}

impl SelfDualBasis {
    /// Wraps a candidate basis after checking its trace-Gram matrix.
    pub fn new(field: &FieldCtx, elements: Vec<Elem>) -> Result<Self> {
        let basis = SelfDualBasis { elements };
        if basis.elements.len() != field.degree() as usize || !basis.is_self_dual(field) {
            return Err(Error::CertificateFailed(
                "trace-Gram matrix of basis is not the identity".into(),
            ));
        }
        Ok(basis)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn gram(&self, field: &FieldCtx) -> Vec<Vec<u8>> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| field.trace(field.mul(a, b)))
                    .collect()
            })
            .collect()
    }

    pub fn is_self_dual(&self, field: &FieldCtx) -> bool {
        self.gram(field)
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &t)| t == u8::from(i == j)))
    }

    /// Coordinates of `x`: the i-th is `Tr(x·α_i)`.
    pub fn coordinates(&self, field: &FieldCtx, x: Elem) -> Vec<u8> {
        self.elements
            .iter()
            .map(|&a| field.trace(field.mul(x, a)))
            .collect()
    }

    pub fn combine(&self, coords: &[u8]) -> Elem {
        self.elements
            .iter()
            .zip(coords)
            .filter(|(_, &c)| c & 1 == 1)
            .fold(0, |acc, (&a, _)| acc ^ a)
    }
}

/// GF(4) constants in the polynomial basis of `x² + x + 1`.
pub mod gf4 {
    use super::Elem;

    pub const ZERO: Elem = 0;
    pub const ONE: Elem = 1;
    /// `ε`, the class of `x`.
    pub const EPS: Elem = 2;
    /// `ε̄ = ε² = ε + 1`.
    pub const EPS_BAR: Elem = 3;

    /// Complex conjugation `x ↦ x²`: fixes 0 and 1, swaps `ε` and `ε̄`.
    pub fn conj(x: Elem) -> Elem {
        const TABLE: [Elem; 4] = [0, 1, 3, 2];
        TABLE[(x & 3) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook multiplication mod p, independent of the tables.
    fn poly_mul(k: u32, a: u16, b: u16) -> u16 {
        clmul_mod(a, b, PRIMITIVE[k as usize], k)
    }

    fn frobenius_trace(k: u32, x: u16) -> u16 {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..k {
            acc ^= y;
            y = poly_mul(k, y, y);
        }
        acc
    }

    #[test]
    fn gf2_trace_is_identity() {
        let f = gf(1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.trace(0), 0);
        assert_eq!(f.trace(1), 1);
    }

    #[test]
    fn gf4_arithmetic_and_trace() {
        let f = gf(2).unwrap();
        let w = gf4::EPS;
        assert_eq!(f.mul(w, w), w ^ 1, "ω² = ω + 1");
        assert_eq!(
            [f.trace(0), f.trace(1), f.trace(w), f.trace(f.mul(w, w))],
            [0, 0, 1, 1]
        );
        assert_eq!(f.sqrt(w), f.mul(w, w));
    }

    #[test]
    fn gf16_generator_order_and_trace_of_one() {
        let f = gf(4).unwrap();
        assert_eq!(f.modulus(), 0b10011);
        assert_eq!(f.generator_order(), 15);
        assert_eq!(f.trace(1), 0);
    }

    #[test]
    fn tables_match_schoolbook_arithmetic() {
        for k in 1..=8 {
            let f = gf(k).unwrap();
            assert_eq!(f.generator_order(), (1 << k) - 1);
            for a in 0..f.order() as u16 {
                for b in 0..f.order() as u16 {
                    assert_eq!(f.mul(a as u8, b as u8) as u16, poly_mul(k, a, b));
                }
                assert_eq!(f.trace(a as u8) as u16, frobenius_trace(k, a));
                let r = f.sqrt(a as u8);
                assert_eq!(f.mul(r, r), a as u8);
                if a != 0 {
                    assert_eq!(f.mul(a as u8, f.inv(a as u8)), 1);
                }
            }
        }
    }

    #[test]
    fn trace_is_linear_and_frobenius_invariant() {
        for k in 1..=8 {
            let f = gf(k).unwrap();
            for x in 0..f.order() as u8 {
                assert_eq!(f.trace(f.mul(x, x)), f.trace(x));
                for y in 0..f.order() as u8 {
                    assert_eq!(f.trace(x ^ y), f.trace(x) ^ f.trace(y));
                }
            }
        }
    }

    #[test]
    fn self_dual_bases_small_fields() {
        let f1 = gf(1).unwrap();
        assert_eq!(f1.find_self_dual_basis().unwrap().elements(), &[1]);
        let f2 = gf(2).unwrap();
        assert_eq!(
            f2.find_self_dual_basis().unwrap().elements(),
            &[gf4::EPS, gf4::EPS_BAR]
        );
    }

    #[test]
    fn self_dual_bases_all_degrees() {
        for k in 1..=8 {
            let f = gf(k).unwrap();
            let b = f.find_self_dual_basis().unwrap();
            assert_eq!(b.elements().len(), k as usize);
            assert!(b.is_self_dual(f));
            assert_eq!(b, f.find_self_dual_basis().unwrap());
            for x in 0..f.order() as u8 {
                assert_eq!(b.combine(&b.coordinates(f, x)), x);
            }
        }
    }

    #[test]
    fn conj4_is_the_frobenius_involution() {
        let f = gf(2).unwrap();
        assert_eq!(gf4::conj(0), 0);
        assert_eq!(gf4::conj(gf4::EPS), gf4::EPS_BAR);
        for x in 0..4 {
            assert_eq!(gf4::conj(x), f.mul(x, x));
            assert_eq!(gf4::conj(gf4::conj(x)), x);
        }
    }

    #[test]
    fn degree_out_of_range() {
        assert!(matches!(FieldCtx::new(0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(gf(9), Err(Error::DegreeOutOfRange(9))));
    }

    #[test]
    fn hex_round_trip_and_range() {
        let f = gf(4).unwrap();
        assert_eq!(f.to_hex(0xb), "b");
        assert_eq!(f.parse_hex("b").unwrap(), 0xb);
        assert!(f.parse_hex("1f").is_err());
    }
}
