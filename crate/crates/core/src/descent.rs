//! Symbolwise binary expansion of GF(2^k) codes in a self-dual basis.
//!
//! With `Tr(α_i α_j) = δ_ij`, the binary inner product of two expanded words
//! equals `Tr(Σ_j x_j y_j)`, so expansion commutes with taking duals and a
//! dual-containing code expands to a dual-containing binary code.
//!
//! Bit layout: symbol `j` occupies bits `j·k … j·k + k − 1`, bit `j·k + i`
//! holding `Tr(x_j · α_i)`.

use crate::agcurve::DualChainTriple;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{gf, Elem, FieldCtx, SelfDualBasis};

#[derive(Debug, Clone)]
pub struct ExpansionMap {
    field: &'static FieldCtx,
    basis: SelfDualBasis,
    n: usize,
}

impl ExpansionMap {
    /// Uses the field's deterministic self-dual basis.
    pub fn new(field: &'static FieldCtx, n: usize) -> Result<Self> {
        Ok(Self {
            field,
            basis: field.find_self_dual_basis()?,
            n,
        })
    }

    pub fn with_basis(field: &'static FieldCtx, basis: Vec<Elem>, n: usize) -> Result<Self> {
        Ok(Self {
            field,
            basis: SelfDualBasis::new(field, basis)?,
            n,
        })
    }

    pub fn field(&self) -> &'static FieldCtx {
        self.field
    }

    pub fn basis(&self) -> &SelfDualBasis {
        &self.basis
    }

    pub fn source_len(&self) -> usize {
        self.n
    }

    pub fn binary_len(&self) -> usize {
        self.n * self.field.degree() as usize
    }

    pub fn expand_word(&self, word: &[Elem]) -> Vec<Elem> {
        word.iter()
            .flat_map(|&x| self.basis.coordinates(self.field, x))
            .collect()
    }

    pub fn contract_word(&self, bits: &[Elem]) -> Vec<Elem> {
        bits.chunks(self.field.degree() as usize)
            .map(|c| self.basis.combine(c))
            .collect()
    }

    fn check_code(&self, c: &LinearCode) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(
                c.field().degree(),
                self.field.degree(),
            ));
        }
        if c.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: c.len(),
            });
        }
        Ok(())
    }
}

/// Binary `[kn, k·dim C]` image of `C`.
pub fn expand_code(c: &LinearCode, map: &ExpansionMap) -> Result<LinearCode> {
    map.check_code(c)?;
    let f = map.field;
    let rows = c
        .generators()
        .iter()
        .flat_map(|g| {
            map.basis.elements().iter().map(move |&beta| {
                let scaled: Vec<Elem> = g.iter().map(|&x| f.mul(beta, x)).collect();
                map.expand_word(&scaled)
            })
        })
        .collect();
    let d = LinearCode::from_generators(gf(1)?, map.binary_len(), rows)?;
    debug_assert_eq!(d.dim(), c.dim() * f.degree() as usize);
    Ok(d)
}

/// Binary chain `D' ⊃ D ⊇ D^⊥` from a dual-containing triple.
#[derive(Debug, Clone)]
pub struct BinaryPair {
    pub d_prime: LinearCode,
    pub d: LinearCode,
}

impl BinaryPair {
    pub fn certify(&self) -> Result<()> {
        if !self.d_prime.contains(&self.d)? || self.d_prime.dim() <= self.d.dim() {
            return Err(Error::CertificateFailed(
                "D' does not strictly contain D".into(),
            ));
        }
        if !self.d.contains_dual() {
            return Err(Error::CertificateFailed(
                "D does not contain its dual".into(),
            ));
        }
        Ok(())
    }
}

pub fn expand_chain(triple: &DualChainTriple, map: &ExpansionMap) -> Result<BinaryPair> {
    let pair = BinaryPair {
        d_prime: expand_code(&triple.c_prime, map)?,
        d: expand_code(&triple.c, map)?,
    };
    pair.certify()?;
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agcurve::{build_dual_chain, enumerate_curve, CurveKind, TwistOptions};
    use crate::galois::gf4;

    #[test]
    fn zero_code_expands_to_zero_code() {
        let f = gf(2).unwrap();
        let map = ExpansionMap::new(f, 5).unwrap();
        let d = expand_code(&LinearCode::zero(f, 5), &map).unwrap();
        assert_eq!((d.len(), d.dim()), (10, 0));
    }

    #[test]
    fn self_dual_pair_over_gf4() {
        let f = gf(2).unwrap();
        let c = LinearCode::from_generators(f, 2, vec![vec![gf4::EPS, gf4::EPS]]).unwrap();
        assert_eq!(c.dual(), c);
        let map = ExpansionMap::with_basis(f, vec![gf4::EPS, gf4::EPS_BAR], 2).unwrap();
        let d = expand_code(&c, &map).unwrap();
        let expected = LinearCode::from_generators(
            gf(1).unwrap(),
            4,
            vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
        )
        .unwrap();
        assert_eq!(d, expected);
        assert_eq!(d.dual(), d);
    }

    #[test]
    fn non_self_dual_basis_rejected() {
        let f = gf(2).unwrap();
        assert!(ExpansionMap::with_basis(f, vec![1, gf4::EPS], 2).is_err());
    }

    #[test]
    fn word_round_trip_and_weight_growth() {
        let f = gf(4).unwrap();
        let map = ExpansionMap::new(f, 4).unwrap();
        let w = vec![0u8, 7, 1, 15];
        let bits = map.expand_word(&w);
        assert_eq!(bits.len(), 16);
        assert_eq!(map.contract_word(&bits), w);
        let sym_weight = w.iter().filter(|&&x| x != 0).count();
        assert!(bits.iter().filter(|&&b| b != 0).count() >= sym_weight);
    }

    #[test]
    fn hermitian_chain_expands_to_16_bit_pair() {
        let curve = enumerate_curve(CurveKind::Hermitian, 2).unwrap();
        let t = build_dual_chain(&curve, 3, 1, TwistOptions::default()).unwrap();
        let map = ExpansionMap::new(curve.field(), 8).unwrap();
        let pair = expand_chain(&t, &map).unwrap();
        assert_eq!((pair.d.len(), pair.d.dim()), (16, 10));
        assert_eq!(pair.d_prime.dim(), 14);
        assert_eq!(pair.d.dual(), expand_code(&t.c.dual(), &map).unwrap());
    }
}
