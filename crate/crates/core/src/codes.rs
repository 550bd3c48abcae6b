//! Linear codes over GF(2^k).
//!
//! A [`LinearCode`] keeps its generators in reduced row echelon form with
//! pivots leftmost-first, so two codes are equal exactly when their stored
//! generators are. Duals, weighted duals and coordinate scalings are all
//! computed by row reduction; distances by exhaustive Gray-code enumeration of
//! the GF(2)-span, bounded by a budget.

use crate::enumerate::{gray, PlaneBasis};
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldCtx};

/// Default enumeration budget: codewords (or codeword pairs) evaluated.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: &'static FieldCtx,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearCode[{}, {}] over GF(2^{})",
            self.n,
            self.dim(),
            self.field.degree()
        )
    }
}

/// Length-n vector of nonzero field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<Elem>);

impl WeightVector {
    pub fn new(entries: Vec<Elem>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&e| e == 0) {
            return Err(Error::ZeroWeight(i));
        }
        Ok(Self(entries))
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn entries(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self, field: &FieldCtx) -> Self {
        Self(self.0.iter().map(|&x| field.inv(x)).collect())
    }

    pub fn square(&self, field: &FieldCtx) -> Self {
        Self(self.0.iter().map(|&x| field.mul(x, x)).collect())
    }

    /// Entrywise square root; every element of GF(2^k) is a square.
    pub fn sqrt(&self, field: &FieldCtx) -> Self {
        Self(self.0.iter().map(|&x| field.sqrt(x)).collect())
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }
}

/// Reduced row echelon form over `field`, zero rows dropped.
pub(crate) fn rref(field: &FieldCtx, rows: &[Vec<Elem>], n: usize) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            let f = row[c];
            if i != r && f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= field.mul(f, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : Σ_j x_j r_j = 0 for every row r}`.
pub(crate) fn nullspace(field: &FieldCtx, rows: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    let (red, pivots) = rref(field, rows, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &p) in red.iter().zip(&pivots) {
                // Characteristic 2: -r = r.
                v[p] = row[free];
            }
            v
        })
        .collect()
}

impl LinearCode {
    /// Code spanned by `generators`; they need not be independent.
    pub fn from_generators(
        field: &'static FieldCtx,
        n: usize,
        generators: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        for g in &generators {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            if let Some(&bad) = g.iter().find(|&&x| !field.contains(x as u32)) {
                return Err(Error::NotInField {
                    value: bad as u32,
                    k: field.degree(),
                });
            }
        }
        let (rows, pivots) = rref(field, &generators, n);
        Ok(Self {
            field,
            n,
            rows,
            pivots,
        })
    }

    /// Code with parity-check matrix `checks`.
    pub fn from_parity_checks(
        field: &'static FieldCtx,
        n: usize,
        checks: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let h = Self::from_generators(field, n, checks)?;
        Ok(h.dual())
    }

    pub fn zero(field: &'static FieldCtx, n: usize) -> Self {
        Self {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &'static FieldCtx, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Self {
            field,
            n,
            rows,
            pivots: (0..n).collect(),
        }
    }

    pub fn field(&self) -> &'static FieldCtx {
        self.field
    }

    /// Block length.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_binary(&self) -> bool {
        self.field.degree() == 1
    }

    /// Euclidean dual `{x : Σ x_j y_j = 0 for all y ∈ C}`.
    pub fn dual(&self) -> Self {
        let basis = nullspace(self.field, &self.rows, self.n);
        Self::from_generators(self.field, self.n, basis).expect("nullspace rows are well formed")
    }

    /// `{x : Σ w_j x_j y_j = 0 for all y ∈ C}`.
    pub fn weighted_dual(&self, w: &WeightVector) -> Result<Self> {
        self.check_len(w.len())?;
        let twisted: Vec<Vec<Elem>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(w.entries())
                    .map(|(&x, &wi)| self.field.mul(x, wi))
                    .collect()
            })
            .collect();
        let basis = nullspace(self.field, &twisted, self.n);
        Self::from_generators(self.field, self.n, basis)
    }

    /// Image under coordinatewise multiplication by `v`.
    pub fn scale(&self, v: &WeightVector) -> Result<Self> {
        self.check_len(v.len())?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v.entries())
                    .map(|(&x, &vi)| self.field.mul(x, vi))
                    .collect()
            })
            .collect();
        Self::from_generators(self.field, self.n, rows)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.rows.iter().all(|r| self.contains_word(r)))
    }

    pub fn contains_word(&self, word: &[Elem]) -> bool {
        let mut v = word.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x ^= self.field.mul(f, y);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// `C ⊇ C^⊥`.
    pub fn contains_dual(&self) -> bool {
        self.contains(&self.dual()).expect("dual is compatible")
    }

    /// `C ⊆ C^⊥`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.dual().contains(self).expect("dual is compatible")
    }

    /// `Σ_i m_i g_i` for a message `m` of length `dim`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: message.len(),
            });
        }
        let mut out = vec![0; self.n];
        for (&m, row) in message.iter().zip(&self.rows) {
            if m != 0 {
                for (x, &y) in out.iter_mut().zip(row) {
                    *x ^= self.field.mul(m, y);
                }
            }
        }
        Ok(out)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.degree(),
                other.field.degree(),
            ));
        }
        self.check_len(other.n)
    }

    /// Number of codewords as a base-2 exponent: `k · dim`.
    pub fn log2_size(&self) -> usize {
        self.field.degree() as usize * self.dim()
    }

    /// The GF(2)-basis `x^b · g_i` in bit-plane form.
    pub(crate) fn plane_basis(&self) -> PlaneBasis {
        let k = self.field.degree() as usize;
        let words = self.n.div_ceil(64);
        let mut basis = PlaneBasis::new(k, words);
        for row in &self.rows {
            for b in 0..k {
                let beta = 1u8 << b;
                let mut v = vec![0u64; k * words];
                for (j, &x) in row.iter().enumerate() {
                    let s = self.field.mul(beta, x);
                    for p in 0..k {
                        if (s >> p) & 1 == 1 {
                            v[p * words + j / 64] |= 1 << (j % 64);
                        }
                    }
                }
                basis.vecs.push(v);
            }
        }
        basis
    }

    pub(crate) fn check_budget(log2_items: usize, budget: u64) -> Result<()> {
        if log2_items >= 64 || (1u64 << log2_items) > budget {
            return Err(Error::BudgetExceeded {
                needed: 1u128 << log2_items.min(127),
                budget,
            });
        }
        Ok(())
    }

    /// Exact minimum Hamming weight over the nonzero codewords.
    pub fn min_distance_exact(&self, budget: u64) -> Result<usize> {
        Ok(self.min_weight_word(budget)?.0)
    }

    /// A minimum-weight codeword and its weight.
    pub fn min_weight_word(&self, budget: u64) -> Result<(usize, Vec<Elem>)> {
        if self.dim() == 0 {
            return Err(Error::TooFewCodewords);
        }
        Self::check_budget(self.log2_size(), budget)?;
        let basis = self.plane_basis();
        let hit = basis.min_weight_from(1).expect("nonempty range");
        let v = basis.combination(gray(hit.index));
        Ok((hit.weight, self.unplane(&v, basis.words)))
    }

    fn unplane(&self, v: &[u64], words: usize) -> Vec<Elem> {
        let k = self.field.degree() as usize;
        (0..self.n)
            .map(|j| {
                (0..k).fold(0u8, |acc, p| {
                    acc | ((((v[p * words + j / 64] >> (j % 64)) & 1) as u8) << p)
                })
            })
            .collect()
    }

    /// Minimum `|supp(u) ∪ supp(v)|` over distinct nonzero codewords `u ≠ v`
    /// of a binary code. The budget bounds both the codeword list and the
    /// number of pairs actually compared.
    pub fn second_or_weight(&self, budget: u64) -> Result<usize> {
        if !self.is_binary() {
            return Err(Error::NotBinary(self.field.degree()));
        }
        if self.dim() < 2 {
            return Err(Error::TooFewCodewords);
        }
        Self::check_budget(self.dim(), budget)?;
        let basis = self.plane_basis();
        let mut words = basis.all_words();
        words.retain(|(w, _)| *w > 0);
        words.sort_by_key(|(w, _)| *w);
        let mut best = usize::MAX;
        let mut evaluated: u64 = 0;
        for i in 0..words.len() {
            if words[i].0 >= best {
                break;
            }
            for j in i + 1..words.len() {
                // |u ∪ v| ≥ max(|u|, |v|) and the list is weight-sorted.
                if words[j].0 >= best {
                    break;
                }
                evaluated += 1;
                if evaluated > budget {
                    let m = words.len() as u128;
                    return Err(Error::BudgetExceeded {
                        needed: m * (m - 1) / 2,
                        budget,
                    });
                }
                best = best.min(basis.union_weight(&words[i].1, &words[j].1));
            }
        }
        Ok(best)
    }
}

/// Standard small binary codes used throughout tests and examples.
pub mod families {
    use super::*;
    use crate::galois::gf;

    fn gf2() -> &'static FieldCtx {
        gf(1).expect("GF(2)")
    }

    pub fn repetition(n: usize) -> LinearCode {
        LinearCode::from_generators(gf2(), n, vec![vec![1; n]]).expect("valid")
    }

    /// `[n, n-1, 2]` even-weight code.
    pub fn even_weight(n: usize) -> LinearCode {
        repetition(n).dual()
    }

    /// `[2^r - 1, 2^r - 1 - r, 3]` Hamming code.
    pub fn hamming(r: u32) -> LinearCode {
        let n = (1usize << r) - 1;
        let checks = (0..r as usize)
            .map(|b| (1..=n).map(|c| ((c >> b) & 1) as u8).collect())
            .collect();
        LinearCode::from_parity_checks(gf2(), n, checks).expect("valid")
    }

    /// `[8, 4, 4]` extended Hamming code, self-dual.
    pub fn extended_hamming8() -> LinearCode {
        let h = hamming(3);
        let rows = h
            .generators()
            .iter()
            .map(|r| {
                let parity = r.iter().fold(0u8, |a, &b| a ^ b);
                let mut e = r.clone();
                e.push(parity);
                e
            })
            .collect();
        LinearCode::from_generators(gf2(), 8, rows).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;
    use crate::galois::gf;

    /// Brute-force minimum distance by listing every message over the field.
    fn brute_min_distance(c: &LinearCode) -> usize {
        let q = c.field().order();
        let k = c.dim();
        let mut best = usize::MAX;
        for idx in 1..q.pow(k as u32) {
            let mut msg = vec![0u8; k];
            let mut t = idx;
            for m in msg.iter_mut() {
                *m = (t % q) as u8;
                t /= q;
            }
            let w = c.encode(&msg).unwrap().iter().filter(|&&x| x != 0).count();
            best = best.min(w);
        }
        best
    }

    #[test]
    fn dual_of_full_and_zero() {
        let f = gf(1).unwrap();
        assert_eq!(LinearCode::full(f, 5).dual(), LinearCode::zero(f, 5));
        assert_eq!(LinearCode::zero(f, 5).dual(), LinearCode::full(f, 5));
    }

    #[test]
    fn hamming_dual_is_simplex_inside_hamming() {
        let h = hamming(3);
        assert_eq!(h.dim(), 4);
        let s = h.dual();
        assert_eq!(s.dim(), 3);
        // Every nonzero simplex codeword has weight 4.
        assert_eq!(s.min_distance_exact(DEFAULT_BUDGET).unwrap(), 4);
        assert!(h.contains(&s).unwrap());
        assert_eq!(s.dual(), h);
    }

    #[test]
    fn classic_distances() {
        assert_eq!(repetition(6).min_distance_exact(DEFAULT_BUDGET).unwrap(), 6);
        assert_eq!(hamming(3).min_distance_exact(DEFAULT_BUDGET).unwrap(), 3);
        let e8 = extended_hamming8();
        assert_eq!(e8.min_distance_exact(DEFAULT_BUDGET).unwrap(), 4);
        assert_eq!(e8.dual(), e8);
    }

    #[test]
    fn contains_edge_cases() {
        let f = gf(1).unwrap();
        let h = hamming(3);
        assert!(h.contains(&h).unwrap());
        assert!(!LinearCode::zero(f, 7).contains(&h).unwrap());
        assert!(matches!(
            h.contains(&repetition(5)),
            Err(Error::LengthMismatch { .. })
        ));
        let g4 = LinearCode::full(gf(2).unwrap(), 7);
        assert!(matches!(h.contains(&g4), Err(Error::FieldMismatch(1, 2))));
    }

    #[test]
    fn budget_is_enforced() {
        let h = hamming(3);
        assert!(matches!(
            h.min_distance_exact(15),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(h.min_distance_exact(16).unwrap(), 3);
    }

    #[test]
    fn second_or_weight_even_weight_code() {
        assert_eq!(even_weight(8).second_or_weight(DEFAULT_BUDGET).unwrap(), 3);
        assert!(matches!(
            repetition(5).second_or_weight(DEFAULT_BUDGET),
            Err(Error::TooFewCodewords)
        ));
        let g4 = LinearCode::full(gf(2).unwrap(), 3);
        assert!(matches!(
            g4.second_or_weight(DEFAULT_BUDGET),
            Err(Error::NotBinary(2))
        ));
    }

    #[test]
    fn second_or_weight_small_codes_by_pairs() {
        // Two-word check by explicit pair enumeration on the [7,4] Hamming code.
        let h = hamming(3);
        let words: Vec<Vec<u8>> = (1u8..16)
            .map(|m| {
                h.encode(&[m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1])
                    .unwrap()
            })
            .collect();
        let mut best = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let u = words[i]
                    .iter()
                    .zip(&words[j])
                    .filter(|(a, b)| **a | **b != 0)
                    .count();
                best = best.min(u);
            }
        }
        assert_eq!(h.second_or_weight(DEFAULT_BUDGET).unwrap(), best);
        assert_eq!(best, 5);
    }

    #[test]
    fn gf4_code_distance_matches_brute_force() {
        let f = gf(2).unwrap();
        let c = LinearCode::from_generators(
            f,
            6,
            vec![
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 1, 2, 3, 2, 1],
                vec![1, 2, 3, 0, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(
            c.min_distance_exact(DEFAULT_BUDGET).unwrap(),
            brute_min_distance(&c)
        );
        let (w, word) = c.min_weight_word(DEFAULT_BUDGET).unwrap();
        assert!(c.contains_word(&word));
        assert_eq!(word.iter().filter(|&&x| x != 0).count(), w);
    }

    #[test]
    fn weighted_dual_with_ones_is_dual() {
        let f = gf(2).unwrap();
        let c =
            LinearCode::from_generators(f, 4, vec![vec![1, 2, 3, 0], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(c.weighted_dual(&WeightVector::ones(4)).unwrap(), c.dual());
        let w = WeightVector::new(vec![1, 2, 3, 2]).unwrap();
        let cw = c.weighted_dual(&w).unwrap();
        assert_eq!(cw.dim(), 2);
        assert_eq!(cw.weighted_dual(&w).unwrap(), c);
        assert!(matches!(
            c.weighted_dual(&WeightVector::ones(3)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn scaling_round_trip_and_zero_entries() {
        let f = gf(2).unwrap();
        let c = LinearCode::from_generators(f, 3, vec![vec![1, 2, 3]]).unwrap();
        let v = WeightVector::new(vec![2, 3, 1]).unwrap();
        assert_eq!(c.scale(&WeightVector::ones(3)).unwrap(), c);
        let s = c.scale(&v).unwrap();
        assert_eq!(s.scale(&v.inverse(f)).unwrap(), c);
        assert!(matches!(
            WeightVector::new(vec![1, 0, 2]),
            Err(Error::ZeroWeight(1))
        ));
    }
}
