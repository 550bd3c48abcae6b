//! Rate-distance bounds for binary quantum codes.
//!
//! Rational formulas are evaluated exactly in `Ratio<i128>`; only the
//! entropy-based bound uses floating point.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Smallest `m` for which the polynomial line is stated.
pub const MIN_LINE_M: u32 = 3;
/// Largest `m` taken into the envelope.
pub const MAX_ENVELOPE_M: u32 = 20;

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

pub fn to_f64(x: Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Binary entropy, `0` at both endpoints.
pub fn entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "entropy argument {x} outside [0, 1]"
        )));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// `1 − δ log₂3 − H(δ)`, unclipped. `NaN` outside `[0, 1]`.
pub fn gv4(delta: f64) -> f64 {
    match entropy(delta) {
        Ok(h) => 1.0 - delta * 3f64.log2() - h,
        Err(_) => f64::NAN,
    }
}

/// Zero of `gv4` on `(0, 1/2)`, by bisection to `1e−12`.
pub fn gv4_root() -> f64 {
    let (mut lo, mut hi) = (1e-9, 0.5);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if gv4(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn check_m(m: u32) -> Result<()> {
    if !(MIN_LINE_M..=60).contains(&m) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 3..=60")));
    }
    Ok(())
}

/// `γ = 1/(2^m − 2)`.
pub fn gamma(m: u32) -> Rational {
    q(1, (1i128 << m) - 2)
}

/// Restriction (d): `δ_Q ≤ (1/2m)(1/2 − γ)`.
pub fn restriction_limit(m: u32) -> Rational {
    (q(1, 2) - gamma(m)) / q(2 * m as i128, 1)
}

pub fn line_intercept(m: u32) -> Rational {
    q(1, 1) - gamma(m) * 2
}

pub fn line_slope(m: u32) -> Rational {
    q(10 * m as i128, 3)
}

/// Lower end of the achievable rate range: `1/6 − (1/3)γ`.
pub fn rate_floor(m: u32) -> Rational {
    q(1, 6) - gamma(m) / 3
}

/// `R_Q = 1 − 2/(2^m − 2) − (10/3)mδ` when `0 ≤ δ ≤` the restriction limit.
pub fn agq_line_exact(m: u32, delta: Rational) -> Result<Option<Rational>> {
    check_m(m)?;
    if delta < q(0, 1) || delta > restriction_limit(m) {
        return Ok(None);
    }
    Ok(Some(line_intercept(m) - line_slope(m) * delta))
}

pub fn agq_line(m: u32, delta: f64) -> Result<Option<f64>> {
    check_m(m)?;
    if delta < 0.0 || delta > to_f64(restriction_limit(m)) {
        return Ok(None);
    }
    Ok(Some(
        to_f64(line_intercept(m)) - to_f64(line_slope(m)) * delta,
    ))
}

/// Stated breakpoints: `δ₂ = 1/18`, `δ_m = (3/5)·2^m/((2^m − 2)(2^{m+1} − 2))`.
pub fn stated_breakpoint(m: u32) -> Result<Rational> {
    match m {
        2 => Ok(q(1, 18)),
        3..=60 => {
            let p = 1i128 << m;
            Ok(q(3, 5) * q(p, (p - 2) * (2 * p - 2)))
        }
        _ => Err(Error::InvalidParameter(format!(
            "no breakpoint for m = {m}"
        ))),
    }
}

/// Where lines `i` and `j` meet.
pub fn line_crossing(i: u32, j: u32) -> Rational {
    (line_intercept(j) - line_intercept(i)) / (line_slope(j) - line_slope(i))
}

/// Best in-range line at `δ` over `m ∈ 3..=20`, ties to the larger `m`.
pub fn envelope_at(delta: f64) -> Option<(f64, u32)> {
    (MIN_LINE_M..=MAX_ENVELOPE_M)
        .filter_map(|m| agq_line(m, delta).ok().flatten().map(|r| (r, m)))
        .fold(None, |best, (r, m)| match best {
            Some((br, _)) if br > r => best,
            _ => Some((r, m)),
        })
}

/// Curve tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Source {
    Gv4,
    AgqLine(u32),
    Envelope,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::Gv4 => write!(f, "gv4"),
            Source::AgqLine(m) => write!(f, "agq-line({m})"),
            Source::Envelope => write!(f, "envelope"),
        }
    }
}

impl std::str::FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gv4" => Ok(Source::Gv4),
            "envelope" => Ok(Source::Envelope),
            _ => s
                .strip_prefix("agq-line(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|m| m.parse().ok())
                .map(Source::AgqLine)
                .ok_or_else(|| Error::Artifact(format!("unknown curve source {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub delta: f64,
    pub r: f64,
}

/// Samples of one bound, `δ` strictly increasing and `R ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurve {
    pub source: Source,
    pub samples: Vec<Sample>,
}

impl BoundCurve {
    pub fn new(source: Source, samples: Vec<Sample>) -> Result<Self> {
        if samples.windows(2).any(|w| w[0].delta >= w[1].delta) {
            return Err(Error::InvalidParameter(format!(
                "{source}: δ not strictly increasing"
            )));
        }
        if let Some(s) = samples.iter().find(|s| !(0.0..=1.0).contains(&s.r)) {
            return Err(Error::InvalidParameter(format!(
                "{source}: R = {} at δ = {} outside [0, 1]",
                s.r, s.delta
            )));
        }
        Ok(Self { source, samples })
    }

    pub fn value_at(&self, delta: f64) -> Option<f64> {
        self.samples.iter().find(|s| s.delta == delta).map(|s| s.r)
    }
}

/// `step, 2·step, …` up to `upper` (inclusive within rounding).
pub fn grid(step: f64, upper: f64) -> Result<Vec<f64>> {
    if step.is_nan() || upper.is_nan() || step <= 0.0 || upper <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "grid step {step} / upper {upper}"
        )));
    }
    let count = (upper / step + 1e-9).floor() as usize;
    if count == 0 {
        return Err(Error::InvalidParameter("grid is empty".into()));
    }
    Ok((1..=count).map(|i| i as f64 * step).collect())
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("grid is empty".into()));
    }
    Ok(())
}

/// `gv4` clipped to `[0, 1]`.
pub fn gv4_curve(grid: &[f64]) -> Result<BoundCurve> {
    check_grid(grid)?;
    let samples = grid
        .par_iter()
        .map(|&d| Sample {
            delta: d,
            r: gv4(d).clamp(0.0, 1.0),
        })
        .collect();
    BoundCurve::new(Source::Gv4, samples)
}

/// Line `m` at the grid points inside its restriction.
pub fn agq_curve(m: u32, grid: &[f64]) -> Result<BoundCurve> {
    check_grid(grid)?;
    let mut samples = Vec::new();
    for &d in grid {
        if let Some(r) = agq_line(m, d)? {
            samples.push(Sample { delta: d, r });
        }
    }
    BoundCurve::new(Source::AgqLine(m), samples)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeCurve {
    pub curve: BoundCurve,
    /// Achieving `m` per sample.
    pub argmax: Vec<u32>,
}

/// Upper envelope of the in-range lines on a grid inside `(0, 1/18]`.
pub fn envelope(grid: &[f64]) -> Result<EnvelopeCurve> {
    check_grid(grid)?;
    let top = to_f64(restriction_limit(MIN_LINE_M));
    if let Some(d) = grid.iter().find(|&&d| !(d > 0.0 && d <= top + 1e-15)) {
        return Err(Error::InvalidParameter(format!(
            "envelope grid point {d} outside (0, 1/18]"
        )));
    }
    let pts: Vec<(f64, u32)> = grid
        .par_iter()
        .map(|&d| envelope_at(d.min(top)).expect("line 3 covers (0, 1/18]"))
        .collect();
    let samples = grid
        .iter()
        .zip(&pts)
        .map(|(&delta, &(r, _))| Sample { delta, r })
        .collect();
    Ok(EnvelopeCurve {
        curve: BoundCurve::new(Source::Envelope, samples)?,
        argmax: pts.into_iter().map(|(_, m)| m).collect(),
    })
}

/// Maximal interval on which line `m` is the envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopePiece {
    pub m: u32,
    pub from: Rational,
    pub to: Rational,
}

/// Exact decomposition of the envelope on `[0, 1/18]` into line pieces.
pub fn envelope_pieces() -> Vec<EnvelopePiece> {
    let top = restriction_limit(MIN_LINE_M);
    let zero = q(0, 1);
    let ms: Vec<u32> = (MIN_LINE_M..=MAX_ENVELOPE_M).collect();
    let mut cuts = vec![zero, top];
    for &i in &ms {
        cuts.push(restriction_limit(i));
        for &j in &ms {
            if i < j {
                cuts.push(line_crossing(i, j));
            }
        }
    }
    cuts.retain(|c| *c >= zero && *c <= top);
    cuts.sort();
    cuts.dedup();
    let mut pieces: Vec<EnvelopePiece> = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        // Just left of b: highest value at b, ties to the steeper line.
        let winner = ms
            .iter()
            .filter(|&&m| b <= restriction_limit(m))
            .map(|&m| (line_intercept(m) - line_slope(m) * b, m))
            .max()
            .expect("line 3 is valid on [0, 1/18]")
            .1;
        match pieces.last_mut() {
            Some(p) if p.m == winner => p.to = b,
            _ => pieces.push(EnvelopePiece {
                m: winner,
                from: a,
                to: b,
            }),
        }
    }
    pieces
}

/// One `m` of the breakpoint comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointRow {
    pub m: u32,
    /// `δ_m`.
    pub stated_from: Rational,
    /// `δ_{m−1}`.
    pub stated_to: Rational,
    /// `δ_m > δ_{m−1}`.
    pub inverted: bool,
    pub restriction: Rational,
    /// `δ_{m−1}` lies beyond the restriction of line `m`.
    pub beyond_restriction: bool,
    /// Where line `m` is actually the envelope.
    pub computed: Option<(Rational, Rational)>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointDiagnostic {
    pub rows: Vec<BreakpointRow>,
}

impl BreakpointDiagnostic {
    pub fn inversions(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.inverted)
            .map(|r| r.m)
            .collect()
    }

    pub fn disagreements(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| !r.agrees)
            .map(|r| r.m)
            .collect()
    }
}

/// Compares the stated intervals `[δ_m, δ_{m−1}]` with the computed envelope.
/// The cap at `m = 20` fixes that line's lower end at 0, so only its upper end
/// is compared.
pub fn breakpoint_diagnostic() -> BreakpointDiagnostic {
    let pieces = envelope_pieces();
    let rows = (MIN_LINE_M..=MAX_ENVELOPE_M)
        .map(|m| {
            let from = stated_breakpoint(m).expect("m in range");
            let to = stated_breakpoint(m - 1).expect("m in range");
            let restriction = restriction_limit(m);
            let computed = pieces.iter().find(|p| p.m == m).map(|p| (p.from, p.to));
            let agrees = match computed {
                Some((lo, hi)) => hi == to && (m == MAX_ENVELOPE_M || lo == from),
                None => false,
            };
            BreakpointRow {
                m,
                stated_from: from,
                stated_to: to,
                inverted: from > to,
                restriction,
                beyond_restriction: to > restriction,
                computed,
                agrees,
            }
        })
        .collect();
    BreakpointDiagnostic { rows }
}

/// `α' = (2/3)(α + γ)`, for `2γ ≤ α ≤ 1/2 + γ`.
pub fn optimal_aprime(alpha: Rational, m: u32) -> Result<Rational> {
    check_m(m)?;
    let g = gamma(m);
    if alpha < g * 2 || alpha > q(1, 2) + g {
        return Err(Error::InvalidParameter(format!(
            "α = {alpha} outside [2γ, 1/2 + γ] for m = {m}"
        )));
    }
    Ok(q(2, 3) * (alpha + g))
}

/// Relative parameters of the AG pair and the resulting quantum codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymptoticPoint {
    pub alpha: Rational,
    pub alpha_prime: Rational,
    pub r: Rational,
    pub delta: Rational,
    pub r_prime: Rational,
    pub delta_prime: Rational,
    pub r_q: Rational,
    pub delta_q: Rational,
}

pub fn asymptotic_parameters(alpha: Rational, m: u32) -> Result<AsymptoticPoint> {
    let alpha_prime = optimal_aprime(alpha, m)?;
    let g = gamma(m);
    let one = q(1, 1);
    let (r, delta) = (one - alpha + g, alpha - g * 2);
    let (r_prime, delta_prime) = (one - alpha_prime + g, alpha_prime - g * 2);
    // Binary expansion keeps rates and divides distances by 2m.
    let delta_q = std::cmp::min(delta, delta_prime * q(3, 2)) / q(2 * m as i128, 1);
    Ok(AsymptoticPoint {
        alpha,
        alpha_prime,
        r,
        delta,
        r_prime,
        delta_prime,
        r_q: r + r_prime - one,
        delta_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_values() {
        assert_eq!(entropy(0.5).unwrap(), 1.0);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!((entropy(1.0 / 18.0).unwrap() - 0.309_543_4).abs() < 1e-6);
        assert!(entropy(-0.1).is_err());
    }

    #[test]
    fn gv4_values() {
        assert_eq!(gv4(0.0), 1.0);
        assert!((gv4(1.0 / 18.0) - 0.602_403_1).abs() < 1e-6);
        assert!((gv4_root() - 0.189_289_6).abs() < 1e-6);
        assert!(gv4(1.5).is_nan());
    }

    #[test]
    fn line_values_are_exact() {
        assert_eq!(agq_line_exact(3, q(0, 1)).unwrap(), Some(q(2, 3)));
        assert_eq!(agq_line_exact(3, q(1, 18)).unwrap(), Some(q(1, 9)));
        assert_eq!(agq_line(3, 0.1).unwrap(), None);
        assert!(agq_line(2, 0.0).is_err());
    }

    #[test]
    fn line_meets_rate_floor_at_restriction() {
        for m in MIN_LINE_M..=MAX_ENVELOPE_M {
            let v = agq_line_exact(m, restriction_limit(m)).unwrap().unwrap();
            assert_eq!(v, rate_floor(m), "m = {m}");
        }
    }

    #[test]
    fn breakpoints() {
        assert_eq!(stated_breakpoint(2).unwrap(), q(1, 18));
        assert_eq!(stated_breakpoint(3).unwrap(), q(2, 35));
        for m in 3..=20 {
            assert_eq!(stated_breakpoint(m).unwrap(), line_crossing(m, m + 1));
        }
        for m in 4..20 {
            assert!(stated_breakpoint(m + 1).unwrap() < stated_breakpoint(m).unwrap());
        }
    }

    #[test]
    fn envelope_values() {
        let (r, m) = envelope_at(0.01).unwrap();
        assert_eq!(m, 6);
        assert!((r - 0.767_74).abs() < 1e-4);
        let e = envelope(&grid(1e-3, 1.0 / 18.0).unwrap()).unwrap();
        assert!(e.curve.samples.windows(2).all(|w| w[1].r <= w[0].r));
        let (r0, _) = envelope_at(1e-9).unwrap();
        assert!(r0 > 0.9999);
        assert!(envelope(&[0.06]).is_err());
        assert!(envelope(&[]).is_err());
    }

    #[test]
    fn envelope_pieces_match_pointwise_envelope() {
        let pieces = envelope_pieces();
        assert_eq!(pieces.first().unwrap().m, MAX_ENVELOPE_M);
        let last = pieces.last().unwrap();
        assert_eq!((last.m, last.from, last.to), (3, q(3, 56), q(1, 18)));
        for p in &pieces {
            let mid = to_f64((p.from + p.to) / 2);
            assert_eq!(envelope_at(mid).unwrap().1, p.m);
        }
    }

    #[test]
    fn diagnostic_flags_the_inverted_interval() {
        let d = breakpoint_diagnostic();
        assert_eq!(d.inversions(), vec![3]);
        let r3 = &d.rows[0];
        assert_eq!((r3.stated_from, r3.stated_to), (q(2, 35), q(1, 18)));
        assert_eq!(r3.computed, Some((q(3, 56), q(1, 18))));
        let r4 = &d.rows[1];
        assert!(r4.beyond_restriction);
        assert_eq!(r4.computed, Some((q(48, 2100), q(3, 56))));
        assert_eq!(d.disagreements(), vec![3, 4]);
    }

    #[test]
    fn optimal_aprime_values() {
        assert_eq!(optimal_aprime(q(2, 3), 3).unwrap(), q(5, 9));
        for m in 3..=20 {
            let g = gamma(m);
            assert_eq!(optimal_aprime(g * 2, m).unwrap(), g * 2);
        }
        assert!(optimal_aprime(q(1, 100), 3).is_err());
    }

    #[test]
    fn asymptotic_points_lie_on_the_line() {
        for m in 3..=12 {
            let g = gamma(m);
            for t in 0..=10 {
                let alpha = g * 2 + (q(1, 2) - g) * q(t, 10);
                let p = asymptotic_parameters(alpha, m).unwrap();
                assert_eq!(p.r_q, q(1, 1) + g * q(4, 3) - alpha * q(5, 3));
                assert_eq!(agq_line_exact(m, p.delta_q).unwrap(), Some(p.r_q));
            }
        }
    }

    #[test]
    fn gv_dominates_envelope() {
        let g = grid(1e-3, 1.0 / 18.0).unwrap();
        let e = envelope(&g).unwrap();
        let gv = gv4_curve(&g).unwrap();
        for (a, b) in gv.samples.iter().zip(&e.curve.samples) {
            assert!(a.r > b.r, "δ = {}", a.delta);
        }
    }

    #[test]
    fn source_round_trip() {
        for s in [Source::Gv4, Source::AgqLine(7), Source::Envelope] {
            assert_eq!(s.to_string().parse::<Source>().unwrap(), s);
        }
        assert!("agq-line(x)".parse::<Source>().is_err());
    }
}
