//! One-point algebraic-geometry codes on the projective line and on Hermitian
//! curves, and the twisted dual-containing chains `C' ⊃ C ⊇ C^⊥` built from them.
//!
//! The Riemann–Roch space `L(a·P₀)` is spanned by monomials `x^i y^j` whose
//! pole order at the point at infinity is at most `a`: on the line `x` has
//! pole order 1; on the Hermitian curve `x^{q+1} = y^q + y` over GF(q²), `x`
//! has pole order `q` and `y` has `q+1`, and `j ≤ q−1` keeps the monomials
//! independent.
//!
//! A twist vector `w` is an all-nonzero solution of `Σ_i w_i f(P_i) g(P_i) = 0`
//! over basis pairs `f, g` of `L(a·P₀)`. It makes the evaluation code `E_a`
//! lie inside its `w`-weighted dual, so `C = (E_a)^⊥_w` contains `C^⊥_w`, and
//! scaling by `v = √w` turns that into plain dual containment.

use serde::{Deserialize, Serialize};

use crate::codes::{LinearCode, WeightVector};
use crate::error::{Error, Result};
use crate::galois::{gf, Elem, FieldCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    #[serde(rename = "line")]
    ProjectiveLine,
    Hermitian,
}

impl std::str::FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" | "projective-line" => Ok(CurveKind::ProjectiveLine),
            "hermitian" => Ok(CurveKind::Hermitian),
            other => Err(Error::UnsupportedCurve(other.to_string())),
        }
    }
}

impl std::fmt::Display for CurveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CurveKind::ProjectiveLine => "line",
            CurveKind::Hermitian => "hermitian",
        })
    }
}

/// Affine rational point; `y` is unused (zero) on the projective line.
pub type Point = (Elem, Elem);

#[derive(Debug, Clone)]
pub struct Curve {
    kind: CurveKind,
    q: usize,
    field: &'static FieldCtx,
    genus: usize,
    points: Vec<Point>,
}

impl Curve {
    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// Hermitian: the curve lives over GF(q²). Line: `q` is the field size.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn field(&self) -> &'static FieldCtx {
        self.field
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Rational points other than the point at infinity.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Pole orders at infinity of `x` and `y`.
    fn pole_weights(&self) -> (usize, usize) {
        match self.kind {
            CurveKind::ProjectiveLine => (1, 0),
            CurveKind::Hermitian => (self.q, self.q + 1),
        }
    }

    fn eval(&self, (i, j): (u32, u32), (x, y): Point) -> Elem {
        let f = self.field;
        f.mul(f.pow(x, i as u64), f.pow(y, j as u64))
    }
}

fn log2_exact(q: usize) -> Option<u32> {
    (q.is_power_of_two() && q >= 2).then(|| q.trailing_zeros())
}

/// Enumerates the affine rational points in lexicographic (x, y) order,
/// each coordinate ranked in generator-power order.
pub fn enumerate_curve(kind: CurveKind, q: usize) -> Result<Curve> {
    match kind {
        CurveKind::ProjectiveLine => {
            let k = log2_exact(q)
                .filter(|&k| k <= crate::galois::MAX_DEGREE)
                .ok_or_else(|| Error::UnsupportedCurve(format!("projective line over GF({q})")))?;
            let field = gf(k)?;
            let points = field.elements().into_iter().map(|x| (x, 0)).collect();
            Ok(Curve {
                kind,
                q,
                field,
                genus: 0,
                points,
            })
        }
        CurveKind::Hermitian => {
            if !matches!(q, 2 | 4 | 8) {
                return Err(Error::UnsupportedCurve(format!(
                    "hermitian curve with q = {q} (supported: 2, 4, 8)"
                )));
            }
            let s = log2_exact(q).expect("power of two");
            let field = gf(2 * s)?;
            let elems = field.elements();
            let mut points = Vec::with_capacity(q * q * q);
            for &x in &elems {
                let lhs = field.pow(x, q as u64 + 1);
                for &y in &elems {
                    if lhs == field.pow(y, q as u64) ^ y {
                        points.push((x, y));
                    }
                }
            }
            Ok(Curve {
                kind,
                q,
                field,
                genus: weierstrass_gaps(q, q + 1),
                points,
            })
        }
    }
}

/// Number of gaps of the numerical semigroup generated by coprime `a`, `b`.
fn weierstrass_gaps(a: usize, b: usize) -> usize {
    let conductor = (a - 1) * (b - 1);
    let mut representable = vec![false; conductor + 1];
    for i in 0..=conductor / a {
        for j in 0..=conductor / b {
            if a * i + b * j <= conductor {
                representable[a * i + b * j] = true;
            }
        }
    }
    (1..=conductor).filter(|&m| !representable[m]).count()
}

/// Monomial basis of `L(a·P₀)`, ordered by pole order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRBasis {
    pub a: usize,
    pub monomials: Vec<(u32, u32)>,
}

impl RRBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

pub fn rr_basis(curve: &Curve, a: usize) -> RRBasis {
    let (px, py) = curve.pole_weights();
    let mut monomials: Vec<(usize, (u32, u32))> = Vec::new();
    match curve.kind {
        CurveKind::ProjectiveLine => {
            for i in 0..=a {
                monomials.push((i, (i as u32, 0)));
            }
        }
        CurveKind::Hermitian => {
            for j in 0..curve.q {
                if py * j > a {
                    break;
                }
                for i in 0..=(a - py * j) / px {
                    monomials.push((px * i + py * j, (i as u32, j as u32)));
                }
            }
        }
    }
    monomials.sort();
    RRBasis {
        a,
        monomials: monomials.into_iter().map(|(_, m)| m).collect(),
    }
}

fn evaluation_rows(curve: &Curve, basis: &RRBasis, points: &[Point]) -> Vec<Vec<Elem>> {
    basis
        .monomials
        .iter()
        .map(|&m| points.iter().map(|&p| curve.eval(m, p)).collect())
        .collect()
}

/// Image of `L(a·P₀)` under evaluation at every curve point.
pub fn evaluation_code(curve: &Curve, a: usize) -> Result<LinearCode> {
    evaluation_code_at(curve, a, curve.points())
}

/// Evaluation code on a subset of the curve points.
pub fn evaluation_code_at(curve: &Curve, a: usize, points: &[Point]) -> Result<LinearCode> {
    if a >= points.len() {
        return Err(Error::InvalidParameter(format!(
            "divisor degree a = {a} must be below the number of points {}",
            points.len()
        )));
    }
    let basis = rr_basis(curve, a);
    LinearCode::from_generators(
        curve.field,
        points.len(),
        evaluation_rows(curve, &basis, points),
    )
}

/// Whether `2a ≤ n' + g − 2`, the range where a suitable twist is guaranteed.
pub fn within_twist_bound(curve: &Curve, a: usize) -> bool {
    2 * a + 2 <= curve.len() + curve.genus
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistRegime {
    /// `2a ≤ n' + g − 2`: existence of the twist is guaranteed.
    Guaranteed,
    /// Beyond the guaranteed range; a twist happened to exist.
    Override,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwistOptions {
    /// Solve even when `a` exceeds the guaranteed range.
    pub allow_beyond_bound: bool,
}

#[derive(Debug, Clone)]
pub struct TwistSolution {
    pub w: WeightVector,
    /// Indices (into `curve.points()`) of the points kept.
    pub kept: Vec<usize>,
    /// Indices of points where every solution vanishes.
    pub dropped: Vec<usize>,
    pub regime: TwistRegime,
    pub solution_dim: usize,
    pub attempts: usize,
}

const MAX_TWIST_ATTEMPTS: usize = 1 << 16;

/// Finds an all-nonzero `w` with `Σ w_i f(P_i) g(P_i) = 0` for every pair of
/// basis functions of `L(a·P₀)`.
pub fn solve_twist_vector(curve: &Curve, a: usize, opts: TwistOptions) -> Result<TwistSolution> {
    let regime = if within_twist_bound(curve, a) {
        TwistRegime::Guaranteed
    } else if opts.allow_beyond_bound {
        TwistRegime::Override
    } else {
        return Err(Error::InvalidParameter(format!(
            "a = {a} exceeds the twist bound 2a ≤ n' + g − 2 = {}",
            (curve.len() + curve.genus).saturating_sub(2)
        )));
    };
    let field = curve.field;
    let basis = rr_basis(curve, a);
    let mut kept: Vec<usize> = (0..curve.len()).collect();
    let mut dropped = Vec::new();
    loop {
        let points: Vec<Point> = kept.iter().map(|&i| curve.points[i]).collect();
        let evals = evaluation_rows(curve, &basis, &points);
        let mut products = Vec::with_capacity(evals.len() * (evals.len() + 1) / 2);
        for (s, f) in evals.iter().enumerate() {
            for g in &evals[s..] {
                products.push(f.iter().zip(g).map(|(&x, &y)| field.mul(x, y)).collect());
            }
        }
        let solutions = LinearCode::from_generators(
            field,
            points.len(),
            crate::codes::nullspace(field, &products, points.len()),
        )?;
        if solutions.dim() == 0 {
            return Err(Error::NoTwistVector(format!(
                "the vanishing system for a = {a} has only the zero solution"
            )));
        }
        let forced: Vec<usize> = (0..points.len())
            .filter(|&c| solutions.generators().iter().all(|r| r[c] == 0))
            .collect();
        if !forced.is_empty() {
            for &c in forced.iter().rev() {
                dropped.push(kept.remove(c));
            }
            if a >= kept.len() {
                return Err(Error::NoTwistVector(format!(
                    "dropping forced-zero points left {} points for a = {a}",
                    kept.len()
                )));
            }
            continue;
        }
        let (w, attempts) = search_all_nonzero(field, solutions.generators()).ok_or_else(|| {
            Error::NoTwistVector(format!(
                "no all-nonzero combination within {MAX_TWIST_ATTEMPTS} attempts"
            ))
        })?;
        dropped.sort_unstable();
        return Ok(TwistSolution {
            w: WeightVector::new(w)?,
            kept,
            dropped,
            regime,
            solution_dim: solutions.dim(),
            attempts,
        });
    }
}

/// Combinations `Σ c_i r_i` of reduced rows. Each pivot coordinate equals its
/// coefficient, so only all-nonzero coefficient vectors can work; fixing
/// `c_0 = 1` removes the overall scalar. Coefficients run through the nonzero
/// elements in generator-power order, last index fastest.
fn search_all_nonzero(field: &FieldCtx, rows: &[Vec<Elem>]) -> Option<(Vec<Elem>, usize)> {
    let r = rows.len();
    let n = rows[0].len();
    let group = field.order() - 1;
    let mut digits = vec![0usize; r];
    for attempt in 1..=MAX_TWIST_ATTEMPTS {
        let mut w = vec![0u8; n];
        for (row, &d) in rows.iter().zip(&digits) {
            let c = field.generator_pow(d);
            for (x, &y) in w.iter_mut().zip(row) {
                *x ^= field.mul(c, y);
            }
        }
        if w.iter().all(|&x| x != 0) {
            return Some((w, attempt));
        }
        // Odometer over digits[1..]; digits[0] stays at g^0 = 1.
        let mut i = r;
        loop {
            if i <= 1 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < group {
                break;
            }
            digits[i] = 0;
        }
    }
    None
}

/// Provenance of a dual-containing chain.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainProvenance {
    pub curve: CurveKind,
    pub q: usize,
    pub field_k: u32,
    pub genus: usize,
    pub points_total: usize,
    pub dropped_points: Vec<usize>,
    pub a: usize,
    pub a_prime: usize,
    pub regime: TwistRegime,
    /// Twist vector `w`, hex elements.
    pub twist: Vec<String>,
    /// Scaling `v = √w`, hex elements.
    pub scaling: Vec<String>,
    pub designed_d: usize,
    pub designed_d_prime: usize,
}

/// Certified chain `C' ⊃ C ⊇ C^⊥` over one field.
#[derive(Debug, Clone)]
pub struct DualChainTriple {
    pub c_prime: LinearCode,
    pub c: LinearCode,
    pub provenance: ChainProvenance,
}

impl DualChainTriple {
    /// Rechecks the chain: `C' ⊇ C`, `C ⊇ C^⊥`, and the dimension gap.
    pub fn certify(&self) -> Result<()> {
        if !self.c_prime.contains(&self.c)? || self.c_prime.dim() <= self.c.dim() {
            return Err(Error::CertificateFailed(
                "C' does not strictly contain C".into(),
            ));
        }
        if !self.c.contains_dual() {
            return Err(Error::CertificateFailed(
                "C does not contain its dual".into(),
            ));
        }
        let gap = self.provenance.a - self.provenance.a_prime;
        if self.c_prime.dim() - self.c.dim() != gap {
            return Err(Error::CertificateFailed(format!(
                "dim C' − dim C = {} but a − a' = {gap}",
                self.c_prime.dim() - self.c.dim()
            )));
        }
        Ok(())
    }
}

/// `C = √w·(E_a)^⊥_w` and `C' = √w·(E_{a'})^⊥_w` with one twist for both.
pub fn build_dual_chain(
    curve: &Curve,
    a: usize,
    a_prime: usize,
    opts: TwistOptions,
) -> Result<DualChainTriple> {
    let g = curve.genus;
    if a_prime >= a {
        return Err(Error::InvalidParameter(format!(
            "a' = {a_prime} must be smaller than a = {a}"
        )));
    }
    if a_prime + 1 < 2 * g {
        return Err(Error::InvalidParameter(format!(
            "a' = {a_prime} is below 2g − 1 = {}",
            2 * g - 1
        )));
    }
    let twist = solve_twist_vector(curve, a, opts)?;
    let field = curve.field;
    let points: Vec<Point> = twist.kept.iter().map(|&i| curve.points[i]).collect();
    let n = points.len();
    let e_a = evaluation_code_at(curve, a, &points)?;
    let e_ap = evaluation_code_at(curve, a_prime, &points)?;
    if !e_a.weighted_dual(&twist.w)?.contains(&e_a)? {
        return Err(Error::CertificateFailed(
            "evaluation code is not w-self-orthogonal".into(),
        ));
    }
    let v = twist.w.sqrt(field);
    let c = e_a.weighted_dual(&twist.w)?.scale(&v)?;
    let c_prime = e_ap.weighted_dual(&twist.w)?.scale(&v)?;
    let expected_k = n + g - 1 - a;
    if c.dim() != expected_k || c_prime.dim() != n + g - 1 - a_prime {
        return Err(Error::CertificateFailed(format!(
            "dimensions ({}, {}) differ from n − a + g − 1 = ({expected_k}, {})",
            c.dim(),
            c_prime.dim(),
            n + g - 1 - a_prime
        )));
    }
    let triple = DualChainTriple {
        c_prime,
        c,
        provenance: ChainProvenance {
            curve: curve.kind,
            q: curve.q,
            field_k: field.degree(),
            genus: g,
            points_total: curve.len(),
            dropped_points: twist.dropped.clone(),
            a,
            a_prime,
            regime: twist.regime,
            twist: twist.w.entries().iter().map(|&x| field.to_hex(x)).collect(),
            scaling: v.entries().iter().map(|&x| field.to_hex(x)).collect(),
            designed_d: a + 2 - 2 * g,
            designed_d_prime: a_prime + 2 - 2 * g,
        },
    };
    triple.certify()?;
    Ok(triple)
}
