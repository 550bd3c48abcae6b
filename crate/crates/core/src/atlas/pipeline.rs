//! AG chain → binary descent → Steane enlargement → quantum parameters.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::agcurve::{build_dual_chain, enumerate_curve, ChainProvenance, CurveKind, TwistOptions};
use crate::codes::DEFAULT_BUDGET;
use crate::descent::{expand_chain, expand_code, ExpansionMap};
use crate::error::{Error, Result};
use crate::report::{Certificate, QuantumCodeReport};
use crate::symplectic::{quantum_bound, quantum_params, steane_compose, Mixing, SteaneOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// The codes live over GF(2^{2m}).
    pub m: u32,
    pub curve: CurveKind,
    pub q: usize,
    pub a: usize,
    pub a_prime: usize,
    pub allow_beyond_bound: bool,
    /// Enumeration budget for every exact distance.
    pub budget: u64,
    pub mixing: Mixing,
}

impl PipelineConfig {
    pub fn new(m: u32, curve: CurveKind, q: usize, a: usize, a_prime: usize) -> Self {
        Self {
            m,
            curve,
            q,
            a,
            a_prime,
            allow_beyond_bound: false,
            budget: DEFAULT_BUDGET,
            mixing: Mixing::default(),
        }
    }

    /// Hermitian curves need `q² = 2^{2m}`, the line `q = 2^{2m}`.
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || 2 * self.m > crate::galois::MAX_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "m = {} outside 1..=4",
                self.m
            )));
        }
        let expected = match self.curve {
            CurveKind::Hermitian => 1usize << self.m,
            CurveKind::ProjectiveLine => 1usize << (2 * self.m),
        };
        if self.q != expected {
            return Err(Error::InvalidParameter(format!(
                "{} curve over GF(2^{}) needs q = {expected}, got {}",
                self.curve,
                2 * self.m,
                self.q
            )));
        }
        Ok(())
    }
}

/// Dimensions and distance lower bounds at one level of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSummary {
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    /// Lower bound on the distance of the smaller code.
    pub d: usize,
    /// Lower bound on `d'` (field level) or `d'₂` (binary level).
    pub d_prime: usize,
    pub evidence: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipelineReport {
    pub config: PipelineConfig,
    pub chain: ChainProvenance,
    pub field: StageSummary,
    pub binary: StageSummary,
    pub k_f: usize,
    /// `min(d, ⌈3d'/2⌉)` from the designed field distances.
    pub designed_bound: usize,
    /// Best proven lower bound on `d_Q` before enumerating `F`.
    pub bound: usize,
    /// `R`, `R'`, `R_Q` as exact fractions.
    pub rates: [String; 3],
    pub quantum: QuantumCodeReport,
}

impl PipelineReport {
    pub fn all_verified(&self) -> bool {
        self.quantum.all_verified()
    }
}

pub fn pipeline_build(cfg: &PipelineConfig) -> Result<PipelineReport> {
    cfg.validate().map_err(Error::at("config"))?;
    let curve = enumerate_curve(cfg.curve, cfg.q).map_err(Error::at("enumerate_curve"))?;
    let opts = TwistOptions {
        allow_beyond_bound: cfg.allow_beyond_bound,
    };
    let triple = build_dual_chain(&curve, cfg.a, cfg.a_prime, opts)
        .map_err(Error::at("build_dual_chain"))?;
    let mut certificates = vec![Certificate::new(
        "C' ⊃ C ⊇ C^⊥ over GF(2^2m)",
        triple.certify().is_ok(),
    )];
    let n = triple.c.len();
    let (k, k_prime) = (triple.c.dim(), triple.c_prime.dim());
    let p = &triple.provenance;
    let field = StageSummary {
        n,
        k,
        k_prime,
        d: p.designed_d,
        d_prime: p.designed_d_prime,
        evidence: "designed".into(),
    };

    let map = ExpansionMap::new(curve.field(), n).map_err(Error::at("expand_chain"))?;
    let pair = expand_chain(&triple, &map).map_err(Error::at("expand_chain"))?;
    certificates.push(Certificate::new(
        "D' ⊃ D ⊇ D^⊥ over GF(2)",
        pair.certify().is_ok(),
    ));
    let dual_commutes =
        expand_code(&triple.c.dual(), &map).map_err(Error::at("expand_chain"))? == pair.d.dual();
    certificates.push(Certificate::new(
        "dual(expand C) = expand(dual C)",
        dual_commutes,
    ));

    let steane = steane_compose(
        &pair.d,
        &pair.d_prime,
        SteaneOptions {
            mixing: cfg.mixing,
            budget: cfg.budget,
        },
    )
    .map_err(Error::at("steane_compose"))?;
    let two_m = 2 * cfg.m as usize;
    let designed_d2 = (3 * p.designed_d_prime).div_ceil(2);
    let designed_bound = quantum_bound(p.designed_d, designed_d2);
    let d_best = steane.d.map_or(0, |b| b.value).max(p.designed_d);
    let d2_best = steane.d2.map_or(0, |b| b.value).max(designed_d2);
    let evidence = match (steane.d, steane.d2) {
        (Some(a), Some(b)) => format!("d: {:?}, d'2: {:?}", a.evidence, b.evidence),
        (Some(a), None) => format!("d: {:?}, d'2: designed", a.evidence),
        (None, Some(b)) => format!("d: designed, d'2: {:?}", b.evidence),
        (None, None) => "designed".into(),
    };
    let binary = StageSummary {
        n: pair.d.len(),
        k: pair.d.dim(),
        k_prime: pair.d_prime.dim(),
        d: d_best,
        d_prime: d2_best,
        evidence,
    };
    let bound = if cfg.mixing == Mixing::FixedPointFree {
        quantum_bound(d_best, d2_best)
    } else {
        // A permutation mixing does not support the bound; record the trivial one.
        1
    };
    let f = steane.code.with_distance_bound(Some(bound));
    let k_f = f.dim();

    let mut quantum = quantum_params(&f, cfg.budget).map_err(Error::at("quantum_params"))?;
    let k_q_formula = two_m as i64 * (k as i64 + k_prime as i64 - n as i64);
    certificates.push(Certificate::new(
        "k_F = k_D + k_D'",
        k_f == binary.k + binary.k_prime,
    ));
    certificates.push(Certificate::new(
        "k_Q = 2m(k + k' − n)",
        quantum.k_q as i64 == k_q_formula,
    ));
    let r = Ratio::new(binary.k as i64, binary.n as i64);
    let r_prime = Ratio::new(binary.k_prime as i64, binary.n as i64);
    let r_q = Ratio::new(quantum.k_q as i64, quantum.n as i64);
    certificates.push(Certificate::new("R_Q = R + R' − 1", r_q == r + r_prime - 1));
    if quantum.d_exact {
        certificates.push(Certificate::new(
            format!("d_Q = {} ≥ designed bound {designed_bound}", quantum.d_q),
            quantum.d_q >= designed_bound,
        ));
    }
    let mut trace = vec![
        format!(
            "curve {} q={} over GF(2^{}): {} points, genus {}, {} dropped",
            p.curve,
            p.q,
            p.field_k,
            p.points_total,
            p.genus,
            p.dropped_points.len()
        ),
        format!(
            "chain a={} a'={} ({:?}): C=[{n},{k},≥{}] ⊂ C'=[{n},{k_prime},≥{}]",
            p.a, p.a_prime, p.regime, p.designed_d, p.designed_d_prime
        ),
        format!(
            "descent: D=[{},{}] ⊂ D'=[{},{}]",
            binary.n, binary.k, binary.n, binary.k_prime
        ),
        format!(
            "steane ({:?}): k_F = {k_f}, bound min({d_best}, {d2_best}) = {bound}",
            cfg.mixing
        ),
    ];
    trace.append(&mut quantum.trace);
    quantum.trace = trace;
    certificates.append(&mut quantum.certificates);
    quantum.certificates = certificates;
    Ok(PipelineReport {
        config: cfg.clone(),
        chain: triple.provenance.clone(),
        field,
        binary,
        k_f,
        designed_bound,
        bound,
        rates: [r.to_string(), r_prime.to_string(), r_q.to_string()],
        quantum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_consistency() {
        assert!(PipelineConfig::new(1, CurveKind::Hermitian, 2, 3, 1)
            .validate()
            .is_ok());
        assert!(PipelineConfig::new(1, CurveKind::Hermitian, 4, 3, 1)
            .validate()
            .is_err());
        assert!(PipelineConfig::new(1, CurveKind::ProjectiveLine, 4, 3, 1)
            .validate()
            .is_ok());
        assert!(PipelineConfig::new(5, CurveKind::Hermitian, 32, 3, 1)
            .validate()
            .is_err());
    }

    #[test]
    fn errors_carry_stage_labels() {
        let e = pipeline_build(&PipelineConfig::new(1, CurveKind::Hermitian, 2, 3, 3)).unwrap_err();
        assert!(e.to_string().starts_with("build_dual_chain: "), "{e}");
        let e = pipeline_build(&PipelineConfig::new(1, CurveKind::Hermitian, 4, 3, 1)).unwrap_err();
        assert!(e.to_string().starts_with("config: "), "{e}");
    }

    #[test]
    fn line_pipeline_over_gf4() {
        // Line over GF(4): n = 4, g = 0; a = 1 gives C = [4,2,3], C' = [4,3,2].
        let r =
            pipeline_build(&PipelineConfig::new(1, CurveKind::ProjectiveLine, 4, 1, 0)).unwrap();
        assert!(r.all_verified(), "{:?}", r.quantum.certificates);
        assert_eq!((r.field.n, r.field.k, r.field.k_prime), (4, 2, 3));
        assert_eq!((r.quantum.n, r.quantum.k_q), (8, 2));
        assert_eq!(r.designed_bound, 3);
        assert!(r.quantum.d_exact);
        assert!(r.quantum.d_q >= 3);
    }
}
