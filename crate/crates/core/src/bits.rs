//! Packed GF(2) vectors and the row reduction used by binary and symplectic codes.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters, position 0 first.
    pub fn parse(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(Self::from_bits(bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        let mut out = BitVec::zeros(end - start);
        for i in self.ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with pivots leftmost-first; zero rows are dropped.
/// Returns the reduced rows and their pivot columns.
pub fn rref(rows: &[BitVec], ncols: usize) -> (Vec<BitVec>, Vec<usize>) {
    let mut m: Vec<BitVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : <x, row> = 0 for every row}`, in reduced form.
pub fn nullspace(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let (red, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(ncols - red.len());
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = BitVec::zeros(ncols);
        v.set(free, true);
        for (row, &p) in red.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    rref(&basis, ncols).0
}

/// Reduces `v` against rows already in reduced echelon form.
pub fn reduce(v: &BitVec, red: &[BitVec], pivots: &[usize]) -> BitVec {
    let mut v = v.clone();
    for (row, &p) in red.iter().zip(pivots) {
        if v.get(p) {
            v.xor_assign(row);
        }
    }
    v
}

/// Extends the span of `base` to the span of `base ∪ extra`, returning only
/// the added vectors (taken from `extra`, in order).
pub fn complement_in(base: &[BitVec], extra: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let (mut red, mut pivots) = rref(base, ncols);
    let mut added = Vec::new();
    for v in extra {
        let r = reduce(v, &red, &pivots);
        if let Some(p) = r.first_one() {
            added.push(v.clone());
            for row in red.iter_mut() {
                if row.get(p) {
                    row.xor_assign(&r);
                }
            }
            red.push(r);
            pivots.push(p);
        }
    }
    added
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        let v = BitVec::parse("1011000001").unwrap();
        assert_eq!(v.to_string(), "1011000001");
        assert_eq!(v.count_ones(), 4);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 2, 3, 9]);
        assert!(BitVec::parse("10a").is_none());
    }

    #[test]
    fn rref_and_nullspace_of_hamming_parity() {
        let h: Vec<BitVec> = ["1010101", "0110011", "0001111"]
            .iter()
            .map(|s| BitVec::parse(s).unwrap())
            .collect();
        let (red, piv) = rref(&h, 7);
        assert_eq!(red.len(), 3);
        assert_eq!(piv, vec![0, 1, 3]);
        let ns = nullspace(&h, 7);
        assert_eq!(ns.len(), 4);
        for v in &ns {
            for r in &h {
                assert!(!v.dot(r));
            }
        }
    }

    #[test]
    fn words_cross_boundary() {
        let mut v = BitVec::zeros(130);
        v.set(63, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![63, 64, 129]);
        let w = v.slice(60, 130);
        assert_eq!(w.ones().collect::<Vec<_>>(), vec![3, 4, 69]);
        assert_eq!(w.concat(&BitVec::parse("1").unwrap()).len(), 71);
    }
}
