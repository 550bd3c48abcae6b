//! Additive codes over GF(4) in binary `(a | b)` coordinates, Steane's
//! enlargement, and quantum parameter extraction.
//!
//! A vector of GF(4)^n is held as a `2n`-bit word: the first `n` bits are the
//! `a` halves and the last `n` the `b` halves, with the pair identification
//! `(0,0)=0, (0,1)=ε, (1,0)=ε̄, (1,1)=1`. Under the Pauli map `ε ↦ X` and
//! `ε̄ ↦ Z`, so `a` is the Z-part and `b` the X-part. The trace form
//! `Tr(x·ȳ)` becomes `Σ_j a_j b'_j + a'_j b_j`.
//!
//! A large code `F ⊇ F^ω` yields the stabilizer code of its small dual
//! `F^ω`: `k_Q = k_F − n` and `d_Q = min wt(F ∖ F^ω)`.

use crate::bits::{self, BitVec};
use crate::codes::LinearCode;
use crate::enumerate::{gray, PlaneBasis};
use crate::error::{Error, Result};
use crate::galois::{gf, gf4, Elem};
use crate::report::{Certificate, QuantumCodeReport};

/// GF(4) element from its `(a, b)` bit pair.
pub fn gf4_from_pair(a: bool, b: bool) -> Elem {
    match (a, b) {
        (false, false) => gf4::ZERO,
        (false, true) => gf4::EPS,
        (true, false) => gf4::EPS_BAR,
        (true, true) => gf4::ONE,
    }
}

pub fn gf4_to_pair(x: Elem) -> (bool, bool) {
    match x {
        gf4::ZERO => (false, false),
        gf4::EPS => (false, true),
        gf4::EPS_BAR => (true, false),
        _ => (true, true),
    }
}

/// Packs a GF(4)^n vector into `(a | b)` form.
pub fn pack_gf4(v: &[Elem]) -> BitVec {
    let n = v.len();
    let mut out = BitVec::zeros(2 * n);
    for (j, &x) in v.iter().enumerate() {
        let (a, b) = gf4_to_pair(x);
        out.set(j, a);
        out.set(n + j, b);
    }
    out
}

pub fn unpack_gf4(v: &BitVec) -> Vec<Elem> {
    let n = v.len() / 2;
    (0..n)
        .map(|j| gf4_from_pair(v.get(j), v.get(n + j)))
        .collect()
}

/// Pauli letters for a packed vector: `ε ↦ X`, `ε̄ ↦ Z`, `1 ↦ Y`.
pub fn pauli_string(v: &BitVec) -> String {
    unpack_gf4(v)
        .into_iter()
        .map(|x| match x {
            gf4::ZERO => 'I',
            gf4::EPS => 'X',
            gf4::EPS_BAR => 'Z',
            _ => 'Y',
        })
        .collect()
}

pub fn parse_pauli_string(s: &str) -> Result<BitVec> {
    let v: Vec<Elem> = s
        .chars()
        .map(|c| match c {
            'I' => Ok(gf4::ZERO),
            'X' => Ok(gf4::EPS),
            'Z' => Ok(gf4::EPS_BAR),
            'Y' => Ok(gf4::ONE),
            other => Err(Error::Artifact(format!("bad Pauli letter {other:?}"))),
        })
        .collect::<Result<_>>()?;
    Ok(pack_gf4(&v))
}

/// Number of coordinates with `(a_j, b_j) ≠ (0, 0)`.
pub fn gf4_weight(v: &BitVec) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&j| v.get(j) || v.get(n + j)).count()
}

/// `Σ_j a_j b'_j + a'_j b_j` over GF(2).
pub fn symplectic_form(x: &BitVec, y: &BitVec) -> Result<bool> {
    if x.len() != y.len() || !x.len().is_multiple_of(2) {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    Ok(x.dot(&swap_halves(y)))
}

/// `Σ_j Tr(x_j · conj(y_j))` computed in GF(4).
pub fn trace_form(x: &[Elem], y: &[Elem]) -> Result<u8> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    let f = gf(2)?;
    Ok(x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| acc ^ f.trace(f.mul(a, gf4::conj(b)))))
}

fn swap_halves(v: &BitVec) -> BitVec {
    let n = v.len() / 2;
    v.slice(n, 2 * n).concat(&v.slice(0, n))
}

/// An GF(2)-subspace of GF(4)^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticCode {
    n: usize,
    generators: Vec<BitVec>,
    is_isotropic: bool,
    is_large: bool,
    distance_bound: Option<usize>,
}

impl SymplecticCode {
    pub fn from_generators(n: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != 2 * n) {
            return Err(Error::LengthMismatch {
                expected: 2 * n,
                got: r.len(),
            });
        }
        let (generators, _) = bits::rref(&rows, 2 * n);
        let mut code = Self {
            n,
            generators,
            is_isotropic: false,
            is_large: false,
            distance_bound: None,
        };
        let dual = code.dual_rows();
        code.is_isotropic = code.generators.iter().all(|g| {
            code.generators
                .iter()
                .all(|h| !symplectic_form(g, h).expect("same length"))
        });
        code.is_large = span_contains(&code.generators, &dual, 2 * n);
        Ok(code)
    }

    pub fn from_gf4(n: usize, vectors: &[Vec<Elem>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: v.len(),
            });
        }
        Self::from_generators(n, vectors.iter().map(|v| pack_gf4(v)).collect())
    }

    pub fn full(n: usize) -> Self {
        let rows = (0..2 * n)
            .map(|i| {
                let mut v = BitVec::zeros(2 * n);
                v.set(i, true);
                v
            })
            .collect();
        Self::from_generators(n, rows).expect("well formed")
    }

    /// Number of GF(4) coordinates.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// GF(2)-dimension `k_F`.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[BitVec] {
        &self.generators
    }

    pub fn gf4_generators(&self) -> Vec<Vec<Elem>> {
        self.generators.iter().map(unpack_gf4).collect()
    }

    /// `F ⊆ F^ω` (small code).
    pub fn is_isotropic(&self) -> bool {
        self.is_isotropic
    }

    /// `F ⊇ F^ω` (large code).
    pub fn is_large(&self) -> bool {
        self.is_large
    }

    /// Lower bound on the quantum distance recorded by the construction.
    pub fn distance_bound(&self) -> Option<usize> {
        self.distance_bound
    }

    pub fn with_distance_bound(mut self, bound: Option<usize>) -> Self {
        self.distance_bound = bound;
        self
    }

    fn dual_rows(&self) -> Vec<BitVec> {
        let swapped: Vec<BitVec> = self.generators.iter().map(swap_halves).collect();
        bits::nullspace(&swapped, 2 * self.n)
    }

    /// `F^ω`: every vector pairing to zero with all of `F`.
    pub fn symplectic_dual(&self) -> SymplecticCode {
        Self::from_generators(self.n, self.dual_rows()).expect("well formed")
    }

    pub fn contains(&self, other: &SymplecticCode) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(span_contains(
            &self.generators,
            &other.generators,
            2 * self.n,
        ))
    }

    pub fn contains_vec(&self, v: &BitVec) -> bool {
        span_contains(&self.generators, std::slice::from_ref(v), 2 * self.n)
    }

    fn plane_basis(&self, vecs: &[BitVec]) -> PlaneBasis {
        let words = self.n.div_ceil(64);
        let mut basis = PlaneBasis::new(2, words);
        for v in vecs {
            let mut p = vec![0u64; 2 * words];
            for i in v.ones() {
                let (plane, j) = if i < self.n { (0, i) } else { (1, i - self.n) };
                p[plane * words + j / 64] |= 1 << (j % 64);
            }
            basis.vecs.push(p);
        }
        basis
    }

    fn unplane(&self, p: &[u64], words: usize) -> BitVec {
        let mut v = BitVec::zeros(2 * self.n);
        for j in 0..self.n {
            if (p[j / 64] >> (j % 64)) & 1 == 1 {
                v.set(j, true);
            }
            if (p[words + j / 64] >> (j % 64)) & 1 == 1 {
                v.set(self.n + j, true);
            }
        }
        v
    }

    /// Minimum GF(4) weight over `self ∖ inner`, with a witness. `inner` must
    /// be a subspace of `self`; when it is the whole code, `None`.
    pub fn min_weight_outside(
        &self,
        inner: &SymplecticCode,
        budget: u64,
    ) -> Result<Option<(usize, BitVec)>> {
        if !self.contains(inner)? {
            return Err(Error::InvalidParameter(
                "inner code is not a subspace".into(),
            ));
        }
        LinearCode::check_budget(self.dim(), budget)?;
        let mut order = inner.generators.clone();
        order.extend(bits::complement_in(
            &inner.generators,
            &self.generators,
            2 * self.n,
        ));
        let basis = self.plane_basis(&order);
        Ok(basis.min_weight_from(1u64 << inner.dim()).map(|hit| {
            (
                hit.weight,
                self.unplane(&basis.combination(gray(hit.index)), basis.words),
            )
        }))
    }
}

fn span_contains(rows: &[BitVec], others: &[BitVec], ncols: usize) -> bool {
    let (red, piv) = bits::rref(rows, ncols);
    others.iter().all(|v| bits::reduce(v, &red, &piv).is_zero())
}

fn binary_rows(c: &LinearCode) -> Vec<BitVec> {
    c.generators()
        .iter()
        .map(|r| BitVec::from_bits(r.iter().map(|&x| x == 1)))
        .collect()
}

/// How the enlargement rows of the second half are derived from `G'`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mixing {
    /// `G'' = A·G'` with `A` block-diagonal in companions of `x²+x+1` (and one
    /// `x³+x+1` block for odd size): neither `A` nor `A + I` is singular, so
    /// no nonzero combination of the rows of `G'` maps to itself.
    #[default]
    FixedPointFree,
    /// Cyclic row shift. A permutation always fixes the all-ones combination,
    /// so the `min(d, d'₂)` bound can fail; kept to exhibit that.
    CyclicShift,
}

impl Mixing {
    /// Row `i` of the result is the XOR of the listed rows of `G'`.
    pub fn row_map(self, r: usize) -> Vec<Vec<usize>> {
        match self {
            Mixing::CyclicShift => (0..r).map(|i| vec![(i + 1) % r]).collect(),
            Mixing::FixedPointFree => {
                let mut out = Vec::with_capacity(r);
                let mut start = 0;
                while start < r {
                    let rest = r - start;
                    if rest == 3 {
                        out.push(vec![start + 1]);
                        out.push(vec![start + 2]);
                        out.push(vec![start, start + 1]);
                        start += 3;
                    } else {
                        out.push(vec![start + 1]);
                        out.push(vec![start, start + 1]);
                        start += 2;
                    }
                }
                out
            }
        }
    }

    fn apply(self, rows: &[BitVec]) -> Vec<BitVec> {
        self.row_map(rows.len())
            .into_iter()
            .map(|srcs| {
                let mut v = BitVec::zeros(rows[0].len());
                for s in srcs {
                    v.xor_assign(&rows[s]);
                }
                v
            })
            .collect()
    }
}

/// A lower bound on a distance and where it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    Exact,
    /// `d'₂ ≥ ⌈3d'/2⌉` from an exact `d'`.
    ThreeHalves,
    Designed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DistanceBound {
    pub value: usize,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteaneOptions {
    pub mixing: Mixing,
    pub budget: u64,
}

impl Default for SteaneOptions {
    fn default() -> Self {
        Self {
            mixing: Mixing::default(),
            budget: crate::codes::DEFAULT_BUDGET,
        }
    }
}

/// The enlarged code with the bound inputs it was certified against.
#[derive(Debug, Clone)]
pub struct SteaneCode {
    pub code: SymplecticCode,
    pub k: usize,
    pub k_prime: usize,
    pub mixing: Mixing,
    /// Lower bound on `d(D)`.
    pub d: Option<DistanceBound>,
    /// Lower bound on `d'₂(D')`.
    pub d2: Option<DistanceBound>,
}

impl SteaneCode {
    pub fn bound(&self) -> Option<usize> {
        Some(quantum_bound(self.d?.value, self.d2?.value))
    }
}

pub fn quantum_bound(d: usize, d2: usize) -> usize {
    d.min(d2)
}

/// Generator matrix `(G 0 / 0 G / G' G'')` from a chain `D' ⊃ D ⊇ D^⊥`.
pub fn steane_compose(
    d: &LinearCode,
    d_prime: &LinearCode,
    opts: SteaneOptions,
) -> Result<SteaneCode> {
    if !d.is_binary() || !d_prime.is_binary() {
        return Err(Error::NotBinary(if d.is_binary() {
            d_prime.field().degree()
        } else {
            d.field().degree()
        }));
    }
    if !d_prime.contains(d)? {
        return Err(Error::CertificateFailed("D' does not contain D".into()));
    }
    if !d.contains_dual() {
        return Err(Error::CertificateFailed(
            "D does not contain its dual".into(),
        ));
    }
    let (k, k_prime) = (d.dim(), d_prime.dim());
    if k_prime < k + 2 {
        return Err(Error::InvalidParameter(format!(
            "enlargement needs k' ≥ k + 2, got k = {k}, k' = {k_prime}"
        )));
    }
    let n = d.len();
    let g = binary_rows(d);
    let g_ext = bits::complement_in(&g, &binary_rows(d_prime), n);
    let g_mixed = opts.mixing.apply(&g_ext);
    let zero = BitVec::zeros(n);
    let mut rows = Vec::with_capacity(2 * k + g_ext.len());
    rows.extend(g.iter().map(|r| r.concat(&zero)));
    rows.extend(g.iter().map(|r| zero.concat(r)));
    rows.extend(g_ext.iter().zip(&g_mixed).map(|(x, y)| x.concat(y)));
    let code = SymplecticCode::from_generators(n, rows)?;
    if code.dim() != k + k_prime {
        return Err(Error::CertificateFailed(format!(
            "k_F = {} but k + k' = {}",
            code.dim(),
            k + k_prime
        )));
    }
    if !code.is_large() {
        return Err(Error::CertificateFailed("F does not contain F^ω".into()));
    }
    let dist = d
        .min_distance_exact(opts.budget)
        .ok()
        .map(|v| DistanceBound {
            value: v,
            evidence: Evidence::Exact,
        });
    let d2 = match d_prime.second_or_weight(opts.budget) {
        Ok(v) => Some(DistanceBound {
            value: v,
            evidence: Evidence::Exact,
        }),
        Err(_) => d_prime
            .min_distance_exact(opts.budget)
            .ok()
            .map(|dp| DistanceBound {
                value: (3 * dp).div_ceil(2),
                evidence: Evidence::ThreeHalves,
            }),
    };
    let mut out = SteaneCode {
        code,
        k,
        k_prime,
        mixing: opts.mixing,
        d: dist,
        d2,
    };
    if opts.mixing == Mixing::FixedPointFree {
        let bound = out.bound();
        out.code = out.code.with_distance_bound(bound);
    }
    Ok(out)
}

/// `[[n, k_Q, d_Q]]` of the stabilizer code attached to `F`.
///
/// Works from either side: for a large `F` the small code is `F^ω`, for a
/// small `F` the large code is `F^ω`. `d_Q` is enumerated over
/// `large ∖ small` when `2^{k_large}` fits the budget, otherwise it falls
/// back to the bound recorded on `F`.
pub fn quantum_params(f: &SymplecticCode, budget: u64) -> Result<QuantumCodeReport> {
    let dual = f.symplectic_dual();
    let n = f.len();
    let mut trace = Vec::new();
    let (large, small) = if f.is_large() {
        trace.push(format!(
            "F is large (k_F = {}); stabilizer group from F^ω (dim {}), d_Q over F ∖ F^ω",
            f.dim(),
            dual.dim()
        ));
        (f.clone(), dual)
    } else if f.is_isotropic() {
        trace.push(format!(
            "F is small (k_F = {}); stabilizer group from F, d_Q over F^ω ∖ F (dim {})",
            f.dim(),
            dual.dim()
        ));
        (dual, f.clone())
    } else {
        return Err(Error::InvalidParameter(
            "code is neither isotropic nor dual-containing".into(),
        ));
    };
    let k_q = large.dim() - n;
    let mut certificates = vec![
        Certificate::new("small code is isotropic", small.is_isotropic()),
        Certificate::new("large code contains its symplectic dual", large.is_large()),
        Certificate::new("k_large + k_small = 2n", large.dim() + small.dim() == 2 * n),
    ];
    let bound = f.distance_bound();
    let exact = if k_q == 0 {
        trace.push("k_Q = 0: distance taken over the nonzero stabilizer elements".into());
        let zero = SymplecticCode::from_generators(n, Vec::new())?;
        large.min_weight_outside(&zero, budget)
    } else {
        large.min_weight_outside(&small, budget)
    };
    let (d_q, d_exact, witness) = match exact {
        Ok(Some((w, v))) => {
            trace.push(format!(
                "enumerated 2^{} elements, minimum weight {w}",
                large.dim()
            ));
            (w, true, Some(pauli_string(&v)))
        }
        Ok(None) => (0, true, None),
        Err(Error::BudgetExceeded { .. }) => {
            trace.push(format!(
                "2^{} elements exceed the budget {budget}; distance from recorded bound",
                large.dim()
            ));
            (bound.unwrap_or(1), false, None)
        }
        Err(e) => return Err(e),
    };
    if let (true, Some(b)) = (d_exact, bound) {
        certificates.push(Certificate::new(
            format!("enumerated d_Q = {d_q} ≥ recorded bound {b}"),
            d_q >= b,
        ));
    }
    Ok(QuantumCodeReport {
        n,
        k_q,
        d_q,
        d_exact,
        bound,
        witness,
        certificates,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::families::*;
    use crate::codes::DEFAULT_BUDGET;
    use gf4::{EPS as E, EPS_BAR as B};

    fn four_two_two() -> SymplecticCode {
        SymplecticCode::from_gf4(4, &[vec![E, E, E, E], vec![B, B, B, B]]).unwrap()
    }

    #[test]
    fn binary_form_agrees_with_trace_form() {
        for x in 0..4u8 {
            for y in 0..4u8 {
                let bin = symplectic_form(&pack_gf4(&[x]), &pack_gf4(&[y])).unwrap();
                assert_eq!(
                    u8::from(bin),
                    trace_form(&[x], &[y]).unwrap(),
                    "x={x} y={y}"
                );
            }
            assert!(!symplectic_form(&pack_gf4(&[x]), &pack_gf4(&[x])).unwrap());
        }
    }

    #[test]
    fn form_examples() {
        let x = pack_gf4(&[E, E, E, E]);
        let y = pack_gf4(&[B, B, B, B]);
        assert!(!symplectic_form(&x, &y).unwrap());
        assert_eq!(trace_form(&[E, E, E, E], &[B, B, B, B]).unwrap(), 0);
        assert!(symplectic_form(&pack_gf4(&[E, 0]), &pack_gf4(&[B, 0])).unwrap());
        assert!(symplectic_form(&x, &pack_gf4(&[E])).is_err());
    }

    #[test]
    fn pauli_letters_follow_the_identification() {
        assert_eq!(pauli_string(&pack_gf4(&[0, E, B, 1])), "IXZY");
        assert_eq!(parse_pauli_string("IXZY").unwrap(), pack_gf4(&[0, E, B, 1]));
    }

    #[test]
    fn duals_of_small_codes() {
        let zero = SymplecticCode::from_generators(3, vec![]).unwrap();
        assert_eq!(zero.symplectic_dual().dim(), 6);
        let f = four_two_two();
        let fw = f.symplectic_dual();
        assert_eq!(fw.dim(), 6);
        assert!(f.is_isotropic());
        assert!(fw.contains(&f).unwrap());
        assert!(fw.is_large());
    }

    #[test]
    fn four_two_two_params() {
        let r = quantum_params(&four_two_two(), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.n, r.k_q, r.d_q, r.d_exact), (4, 2, 2, true));
        assert!(r.all_verified());
    }

    #[test]
    fn full_space_is_trivial_code() {
        let r = quantum_params(&SymplecticCode::full(3), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.k_q, r.d_q), (3, 1));
    }

    #[test]
    fn fixed_point_free_mixing_has_no_fixed_vector() {
        for r in 2..=12usize {
            let map = Mixing::FixedPointFree.row_map(r);
            // c·A = c  ⇔  Σ_i c_i (row i of A) = c.
            for c in 1u32..(1 << r) {
                let mut image = 0u32;
                for (i, srcs) in map.iter().enumerate() {
                    if (c >> i) & 1 == 1 {
                        for &s in srcs {
                            image ^= 1 << s;
                        }
                    }
                }
                assert_ne!(image, c, "r={r} fixed vector {c:b}");
                assert_ne!(image, 0, "r={r} singular at {c:b}");
            }
        }
        // A permutation always fixes the all-ones combination.
        let shift = Mixing::CyclicShift.row_map(4);
        assert!(shift.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn steane_eight_three_three() {
        let s = steane_compose(
            &extended_hamming8(),
            &even_weight(8),
            SteaneOptions::default(),
        )
        .unwrap();
        assert_eq!(s.code.dim(), 11);
        assert!(s.code.is_large());
        assert_eq!(s.d.unwrap().value, 4);
        assert_eq!(s.d2.unwrap().value, 3);
        assert_eq!(s.bound(), Some(3));
        let r = quantum_params(&s.code, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.n, r.k_q, r.d_q, r.d_exact), (8, 3, 3, true));
        assert!(r.all_verified());
    }

    #[test]
    fn derangement_mixing_loses_the_bound() {
        let opts = SteaneOptions {
            mixing: Mixing::CyclicShift,
            ..SteaneOptions::default()
        };
        let s = steane_compose(&extended_hamming8(), &even_weight(8), opts).unwrap();
        assert!(s.code.is_large());
        let r = quantum_params(&s.code, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.k_q, 3);
        assert_eq!(r.d_q, 2, "(u|u) with u = Σ G'_i lands outside F^ω");
    }

    #[test]
    fn steane_guards() {
        let e8 = extended_hamming8();
        assert!(matches!(
            steane_compose(&e8, &e8, SteaneOptions::default()),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            steane_compose(&even_weight(8), &e8, SteaneOptions::default()),
            Err(Error::CertificateFailed(_))
        ));
    }

    #[test]
    fn quantum_bound_examples() {
        assert_eq!(quantum_bound(4, 3), 3);
        assert_eq!(quantum_bound(3, 7), 3);
    }
}
