//! Gray-code enumeration of GF(2)-spans with a minimum-weight reduction.
//!
//! A vector is stored as `planes` bit-planes of `words` u64 each, laid out
//! plane-major. A coordinate is nonzero when any plane has its bit set, so the
//! same engine measures binary Hamming weight (one plane), symbol weight over
//! GF(2^k) (k planes) and GF(4) weight of symplectic vectors (two planes).

use rayon::prelude::*;

#[derive(Debug, Clone)]
pub(crate) struct PlaneBasis {
    pub planes: usize,
    pub words: usize,
    pub vecs: Vec<Vec<u64>>,
}

/// Minimum weight found and the Gray-code index of the first word achieving it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct MinHit {
    pub weight: usize,
    pub index: u64,
}

impl PlaneBasis {
    pub fn new(planes: usize, words: usize) -> Self {
        Self {
            planes,
            words,
            vecs: Vec::new(),
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        let mut w = 0;
        for i in 0..self.words {
            let mut acc = 0u64;
            for p in 0..self.planes {
                acc |= v[p * self.words + i];
            }
            w += acc.count_ones() as usize;
        }
        w
    }

    /// The span element selected by the bits of `gray`.
    pub fn combination(&self, gray: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.planes * self.words];
        for (b, bv) in self.vecs.iter().enumerate() {
            if (gray >> b) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(bv) {
                    *x ^= *y;
                }
            }
        }
        v
    }

    /// Minimum weight over Gray-code indices `start..2^len`. With the first
    /// `start.trailing_zeros()` basis vectors spanning a subgroup, starting at
    /// `start` skips exactly that subgroup. Chunks run in parallel; the
    /// reduction picks the smallest `(weight, index)` so results are deterministic.
    pub fn min_weight_from(&self, start: u64) -> Option<MinHit> {
        let dim = self.vecs.len();
        assert!(dim < 64, "span too large to index");
        let end: u64 = 1u64 << dim;
        if start >= end {
            return None;
        }
        const CHUNK_BITS: u32 = 14;
        let chunk = 1u64 << CHUNK_BITS;
        let first_chunk = start / chunk;
        let last_chunk = (end - 1) / chunk;
        (first_chunk..=last_chunk)
            .into_par_iter()
            .filter_map(|c| {
                let lo = (c * chunk).max(start);
                let hi = ((c + 1) * chunk).min(end);
                self.scan(lo, hi)
            })
            .min()
    }

    fn scan(&self, lo: u64, hi: u64) -> Option<MinHit> {
        let mut v = self.combination(lo ^ (lo >> 1));
        let mut best = MinHit {
            weight: self.weight(&v),
            index: lo,
        };
        for i in lo + 1..hi {
            let flip = &self.vecs[i.trailing_zeros() as usize];
            for (x, y) in v.iter_mut().zip(flip) {
                *x ^= *y;
            }
            let w = self.weight(&v);
            if w < best.weight {
                best = MinHit {
                    weight: w,
                    index: i,
                };
            }
        }
        Some(best)
    }

    /// Every span element with its weight, in Gray-code order.
    pub fn all_words(&self) -> Vec<(usize, Vec<u64>)> {
        let dim = self.vecs.len();
        let mut out = Vec::with_capacity(1 << dim);
        let mut v = vec![0u64; self.planes * self.words];
        out.push((0, v.clone()));
        for i in 1..(1u64 << dim) {
            let flip = &self.vecs[i.trailing_zeros() as usize];
            for (x, y) in v.iter_mut().zip(flip) {
                *x ^= *y;
            }
            out.push((self.weight(&v), v.clone()));
        }
        out
    }

    pub fn union_weight(&self, a: &[u64], b: &[u64]) -> usize {
        let mut w = 0;
        for i in 0..self.words {
            let mut acc = 0u64;
            for p in 0..self.planes {
                acc |= a[p * self.words + i] | b[p * self.words + i];
            }
            w += acc.count_ones() as usize;
        }
        w
    }
}

#[inline]
pub(crate) fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_scan_matches_brute_force() {
        // 18 random-ish binary vectors of length 40: enough for several chunks.
        let mut basis = PlaneBasis::new(1, 1);
        let mut s: u64 = 0x9e3779b97f4a7c15;
        for _ in 0..18 {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            basis.vecs.push(vec![s & ((1 << 40) - 1)]);
        }
        let hit = basis.min_weight_from(1).unwrap();
        let brute = (1u64..1 << 18)
            .map(|i| basis.combination(i)[0].count_ones() as usize)
            .min()
            .unwrap();
        assert_eq!(hit.weight, brute);
        assert_eq!(
            basis.combination(gray(hit.index))[0].count_ones() as usize,
            brute
        );

        // Skipping the span of the first 5 vectors.
        let skip = basis.min_weight_from(1 << 5).unwrap();
        let brute_skip = (1u64..1 << 18)
            .filter(|i| i >> 5 != 0)
            .map(|i| basis.combination(i)[0].count_ones() as usize)
            .min()
            .unwrap();
        assert_eq!(skip.weight, brute_skip);
    }
}
