//! JSON forms of codes, chains and reports.
//!
//! Every document carries its `kind` and an optional `invocation` recording
//! the command and flags that produced it. Loading a document rebuilds the
//! objects and rechecks the claims stored in it.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::agcurve::{ChainProvenance, DualChainTriple};
use crate::bits::BitVec;
use crate::codes::LinearCode;
use crate::descent::{BinaryPair, ExpansionMap};
use crate::error::{Error, Result};
use crate::galois::{gf, Elem};
use crate::symplectic::{DistanceBound, Mixing, SteaneCode, SymplecticCode};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invocation {
    pub command: String,
    pub flags: BTreeMap<String, String>,
}

impl Invocation {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            flags: BTreeMap::new(),
        }
    }

    pub fn flag(mut self, name: &str, value: impl ToString) -> Self {
        self.flags.insert(name.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document<T> {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invocation: Option<Invocation>,
    #[serde(flatten)]
    pub body: T,
}

pub trait Kind {
    const KIND: &'static str;
}

impl<T: Kind> Document<T> {
    pub fn new(body: T, invocation: Option<Invocation>) -> Self {
        Self {
            kind: T::KIND.to_string(),
            invocation,
            body,
        }
    }
}

pub fn write_json<T: Kind + Serialize>(
    path: impl AsRef<Path>,
    body: T,
    inv: Option<Invocation>,
) -> Result<()> {
    let text = serde_json::to_string_pretty(&Document::new(body, inv))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

pub fn read_json<T: Kind + DeserializeOwned>(path: impl AsRef<Path>) -> Result<Document<T>> {
    parse_json(&std::fs::read_to_string(path)?)
}

pub fn parse_json<T: Kind + DeserializeOwned>(text: &str) -> Result<Document<T>> {
    let doc: Document<T> = serde_json::from_str(text)?;
    if doc.kind != T::KIND {
        return Err(Error::Artifact(format!(
            "expected a {} document, found {}",
            T::KIND,
            doc.kind
        )));
    }
    Ok(doc)
}

/// Linear code with hex-encoded generator symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field_k: u32,
    pub n: usize,
    pub generators: Vec<Vec<String>>,
}

impl From<&LinearCode> for CodeJson {
    fn from(c: &LinearCode) -> Self {
        let f = c.field();
        Self {
            field_k: f.degree(),
            n: c.len(),
            generators: c
                .generators()
                .iter()
                .map(|r| r.iter().map(|&x| f.to_hex(x)).collect())
                .collect(),
        }
    }
}

impl CodeJson {
    pub fn to_code(&self) -> Result<LinearCode> {
        let f = gf(self.field_k)?;
        let rows = self
            .generators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| f.parse_hex(s))
                    .collect::<Result<Vec<Elem>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let count = rows.len();
        let c = LinearCode::from_generators(f, self.n, rows)?;
        if c.dim() != count {
            return Err(Error::Artifact(format!(
                "{count} generators span only dimension {}",
                c.dim()
            )));
        }
        Ok(c)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripleJson {
    pub provenance: ChainProvenance,
    pub c: CodeJson,
    pub c_prime: CodeJson,
}

impl Kind for TripleJson {
    const KIND: &'static str = "dual-chain-triple";
}

impl From<&DualChainTriple> for TripleJson {
    fn from(t: &DualChainTriple) -> Self {
        Self {
            provenance: t.provenance.clone(),
            c: (&t.c).into(),
            c_prime: (&t.c_prime).into(),
        }
    }
}

impl TripleJson {
    /// Rebuilds and recertifies the chain.
    pub fn to_triple(&self) -> Result<DualChainTriple> {
        let t = DualChainTriple {
            c: self.c.to_code()?,
            c_prime: self.c_prime.to_code()?,
            provenance: self.provenance.clone(),
        };
        t.certify()?;
        Ok(t)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    /// Degree of the source field and the self-dual basis used.
    pub source_k: u32,
    pub basis: Vec<String>,
    pub chain: Option<ChainProvenance>,
    pub d: CodeJson,
    pub d_prime: CodeJson,
}

impl Kind for PairJson {
    const KIND: &'static str = "binary-pair";
}

impl PairJson {
    pub fn new(pair: &BinaryPair, map: &ExpansionMap, chain: Option<ChainProvenance>) -> Self {
        let f = map.field();
        Self {
            source_k: f.degree(),
            basis: map
                .basis()
                .elements()
                .iter()
                .map(|&x| f.to_hex(x))
                .collect(),
            chain,
            d: (&pair.d).into(),
            d_prime: (&pair.d_prime).into(),
        }
    }

    pub fn to_pair(&self) -> Result<BinaryPair> {
        let pair = BinaryPair {
            d: self.d.to_code()?,
            d_prime: self.d_prime.to_code()?,
        };
        if !pair.d.is_binary() || !pair.d_prime.is_binary() {
            return Err(Error::Artifact("binary pair holds non-binary codes".into()));
        }
        pair.certify()?;
        Ok(pair)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticRow {
    pub a: String,
    pub b: String,
}

/// Bound inputs recorded by the enlargement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteaneRecord {
    pub k: usize,
    pub k_prime: usize,
    pub mixing: Mixing,
    pub d: Option<DistanceBound>,
    pub d2: Option<DistanceBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FCodeJson {
    pub n: usize,
    pub k_f: usize,
    pub is_isotropic: bool,
    pub is_large: bool,
    pub distance_bound: Option<usize>,
    pub steane: Option<SteaneRecord>,
    pub generators: Vec<SymplecticRow>,
}

impl Kind for FCodeJson {
    const KIND: &'static str = "symplectic-code";
}

impl From<&SymplecticCode> for FCodeJson {
    fn from(f: &SymplecticCode) -> Self {
        let n = f.len();
        Self {
            n,
            k_f: f.dim(),
            is_isotropic: f.is_isotropic(),
            is_large: f.is_large(),
            distance_bound: f.distance_bound(),
            steane: None,
            generators: f
                .generators()
                .iter()
                .map(|g| SymplecticRow {
                    a: g.slice(0, n).to_string(),
                    b: g.slice(n, 2 * n).to_string(),
                })
                .collect(),
        }
    }
}

impl From<&SteaneCode> for FCodeJson {
    fn from(s: &SteaneCode) -> Self {
        let mut out = FCodeJson::from(&s.code);
        out.steane = Some(SteaneRecord {
            k: s.k,
            k_prime: s.k_prime,
            mixing: s.mixing,
            d: s.d,
            d2: s.d2,
        });
        out
    }
}

impl FCodeJson {
    /// Rebuilds the code and checks the stored dimension and flags.
    pub fn to_code(&self) -> Result<SymplecticCode> {
        let parse = |s: &str| {
            BitVec::parse(s)
                .filter(|v| v.len() == self.n)
                .ok_or_else(|| Error::Artifact(format!("bad half-row {s:?}")))
        };
        let rows = self
            .generators
            .iter()
            .map(|r| Ok(parse(&r.a)?.concat(&parse(&r.b)?)))
            .collect::<Result<Vec<_>>>()?;
        let f =
            SymplecticCode::from_generators(self.n, rows)?.with_distance_bound(self.distance_bound);
        let stored = (self.k_f, self.is_isotropic, self.is_large);
        let actual = (f.dim(), f.is_isotropic(), f.is_large());
        if stored != actual {
            return Err(Error::Artifact(format!(
                "stored (k_F, isotropic, large) = {stored:?} but the generators give {actual:?}"
            )));
        }
        Ok(f)
    }
}

impl Kind for crate::report::QuantumCodeReport {
    const KIND: &'static str = "quantum-code-report";
}

impl Kind for crate::pauli::PauliCheckReport {
    const KIND: &'static str = "pauli-check-report";
}

impl Kind for crate::atlas::BreakpointDiagnostic {
    const KIND: &'static str = "breakpoint-diagnostic";
}

impl Kind for crate::atlas::PipelineReport {
    const KIND: &'static str = "pipeline-report";
}
