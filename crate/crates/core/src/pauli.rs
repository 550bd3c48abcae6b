//! Exact operator-level check of stabilizer codes on few qubits.
//!
//! Matrices hold Gaussian integers over a power-of-two denominator, which is
//! closed under everything used here: Pauli matrices, Kronecker and matrix
//! products, and the factors `(I + S)/2` of a stabilizer projector.
//!
//! A Pauli `E` is detectable when `P E P = c·P`. That is tested without
//! division as `tr(P)·PEP = tr(EP)·P`.

use num_complex::Complex;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::symplectic::{pauli_string, SymplecticCode};

pub type Gaussian = Complex<i64>;

/// `num / 2^shift`.
#[derive(Debug, Clone, Copy)]
pub struct Dyadic {
    pub num: Gaussian,
    pub shift: u32,
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        let s = self.shift.max(other.shift);
        self.num * (1i64 << (s - self.shift)) == other.num * (1i64 << (s - other.shift))
    }
}

impl Eq for Dyadic {}

impl Dyadic {
    pub fn to_f64(self) -> Complex<f64> {
        let s = (self.shift as f64).exp2();
        Complex::new(self.num.re as f64 / s, self.num.im as f64 / s)
    }
}

/// Square matrix `entries / 2^shift`, row-major.
#[derive(Debug, Clone)]
pub struct ExactMatrix {
    dim: usize,
    shift: u32,
    entries: Vec<Gaussian>,
}

const ZERO: Gaussian = Complex::new(0, 0);
const ONE: Gaussian = Complex::new(1, 0);
const I: Gaussian = Complex::new(0, 1);

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            shift: 0,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<Gaussian>, shift: u32) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self {
            dim,
            shift,
            entries,
        }
        .normalized())
    }

    pub fn pauli_x() -> Self {
        Self::from_entries(2, vec![ZERO, ONE, ONE, ZERO], 0).expect("2x2")
    }

    pub fn pauli_y() -> Self {
        Self::from_entries(2, vec![ZERO, -I, I, ZERO], 0).expect("2x2")
    }

    pub fn pauli_z() -> Self {
        Self::from_entries(2, vec![ONE, ZERO, ZERO, -ONE], 0).expect("2x2")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Dyadic {
        Dyadic {
            num: self.entries[i * self.dim + j],
            shift: self.shift,
        }
    }

    /// Divides out common factors of two.
    fn normalized(mut self) -> Self {
        while self.shift > 0 && self.entries.iter().all(|z| z.re % 2 == 0 && z.im % 2 == 0) {
            for z in &mut self.entries {
                *z = Complex::new(z.re / 2, z.im / 2);
            }
            self.shift -= 1;
        }
        if self.entries.iter().all(|z| *z == ZERO) {
            self.shift = 0;
        }
        self
    }

    fn rescaled(&self, shift: u32) -> Vec<Gaussian> {
        let f = 1i64 << (shift - self.shift);
        self.entries.iter().map(|z| z * f).collect()
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let mut entries = vec![ZERO; n * n];
        for i in 0..a {
            for j in 0..a {
                let x = self.entries[i * a + j];
                if x == ZERO {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        entries[(i * b + k) * n + j * b + l] = x * other.entries[k * b + l];
                    }
                }
            }
        }
        Self {
            dim: n,
            shift: self.shift + other.shift,
            entries,
        }
        .normalized()
    }

    /// Product, skipping zero entries of the left factor.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            let out = &mut entries[i * n..(i + 1) * n];
            for k in 0..n {
                let x = self.entries[i * n + k];
                if x == ZERO {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                for (o, y) in out.iter_mut().zip(row) {
                    *o += x * y;
                }
            }
        }
        Ok(Self {
            dim: n,
            shift: self.shift + other.shift,
            entries,
        }
        .normalized())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let shift = self.shift.max(other.shift);
        let entries = self
            .rescaled(shift)
            .into_iter()
            .zip(other.rescaled(shift))
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self {
            dim: self.dim,
            shift,
            entries,
        }
        .normalized())
    }

    pub fn scale(&self, c: Dyadic) -> Self {
        Self {
            dim: self.dim,
            shift: self.shift + c.shift,
            entries: self.entries.iter().map(|z| z * c.num).collect(),
        }
        .normalized()
    }

    pub fn halve(&self) -> Self {
        Self {
            dim: self.dim,
            shift: self.shift + 1,
            entries: self.entries.clone(),
        }
        .normalized()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        Self {
            dim: n,
            shift: self.shift,
            entries,
        }
    }

    pub fn trace(&self) -> Dyadic {
        let num = (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum();
        Dyadic {
            num,
            shift: self.shift,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| *z == ZERO)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let shift = self.shift.max(other.shift);
        self.rescaled(shift) == other.rescaled(shift)
    }
}

impl Eq for ExactMatrix {}

/// Hard ceiling on qubits regardless of configuration: `4^n` entries.
pub const HARD_MAX_QUBITS: usize = 10;
pub const DEFAULT_MAX_QUBITS: usize = 6;
/// Largest generator count for which every sign pattern is checked.
pub const MAX_SIGN_PATTERN_GENERATORS: usize = 8;

/// `σ(v) = ⊗_j σ(v_j)` for a packed `(a | b)` vector, qubit 0 leftmost.
pub fn sigma(v: &BitVec) -> Result<ExactMatrix> {
    let n = v.len() / 2;
    if n > HARD_MAX_QUBITS {
        return Err(Error::TooManyQubits {
            n,
            cap: HARD_MAX_QUBITS,
        });
    }
    let mut m = ExactMatrix::identity(1);
    for j in 0..n {
        let f = match (v.get(j), v.get(n + j)) {
            (false, false) => ExactMatrix::identity(2),
            (false, true) => ExactMatrix::pauli_x(),
            (true, false) => ExactMatrix::pauli_z(),
            (true, true) => ExactMatrix::pauli_y(),
        };
        m = m.kron(&f);
    }
    Ok(m)
}

/// Generators `f_i` of an isotropic subspace and signs `μ_i`.
#[derive(Debug, Clone)]
pub struct StabilizerSpec {
    pub n: usize,
    pub generators: Vec<BitVec>,
    /// `true` selects the `−1` eigenspace of `σ(f_i)`.
    pub mu: Vec<bool>,
}

impl StabilizerSpec {
    pub fn new(n: usize, generators: Vec<BitVec>) -> Self {
        let mu = vec![false; generators.len()];
        Self { n, generators, mu }
    }

    /// From a small code, or from the dual of a large one.
    pub fn from_code(f: &SymplecticCode) -> Result<Self> {
        let small = if f.is_isotropic() {
            f.clone()
        } else if f.is_large() {
            f.symplectic_dual()
        } else {
            return Err(Error::InvalidParameter(
                "code is neither isotropic nor dual-containing".into(),
            ));
        };
        Ok(Self::new(small.len(), small.generators().to_vec()))
    }

    /// Signs from the low bits of `pattern`.
    pub fn with_pattern(mut self, pattern: u32) -> Self {
        for (i, m) in self.mu.iter_mut().enumerate() {
            *m = (pattern >> i) & 1 == 1;
        }
        self
    }

    /// `n − #generators`.
    pub fn logical(&self) -> usize {
        self.n.saturating_sub(self.generators.len())
    }

    pub fn mu_string(&self) -> String {
        self.mu.iter().map(|&m| if m { '-' } else { '+' }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PauliCheckOptions {
    pub max_n: usize,
}

impl Default for PauliCheckOptions {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_QUBITS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Projector {
    pub n: usize,
    pub logical: usize,
    pub matrix: ExactMatrix,
}

/// `P = ∏ (I + μ_i σ(f_i))/2`, checked for `P² = P`, `P† = P`, `tr P = 2^{n−k}`.
pub fn stabilizer_projector(spec: &StabilizerSpec, opts: PauliCheckOptions) -> Result<Projector> {
    let cap = opts.max_n.min(HARD_MAX_QUBITS);
    if spec.n > cap {
        return Err(Error::TooManyQubits { n: spec.n, cap });
    }
    if spec.mu.len() != spec.generators.len() {
        return Err(Error::LengthMismatch {
            expected: spec.generators.len(),
            got: spec.mu.len(),
        });
    }
    for (i, g) in spec.generators.iter().enumerate() {
        if g.len() != 2 * spec.n {
            return Err(Error::LengthMismatch {
                expected: 2 * spec.n,
                got: g.len(),
            });
        }
        for (j, h) in spec.generators.iter().enumerate().skip(i + 1) {
            if crate::symplectic::symplectic_form(g, h)? {
                return Err(Error::NotIsotropic(i, j));
            }
        }
    }
    let dim = 1usize << spec.n;
    let id = ExactMatrix::identity(dim);
    let mut p = id.clone();
    for (g, &neg) in spec.generators.iter().zip(&spec.mu) {
        let mut s = sigma(g)?;
        if neg {
            s = s.scale(Dyadic {
                num: -ONE,
                shift: 0,
            });
        }
        p = id.add(&s)?.halve().mul(&p)?;
    }
    let logical = spec.logical();
    let checks = [
        ("P² = P", p.mul(&p)? == p),
        ("P† = P", p.adjoint() == p),
        (
            "tr P = 2^(n-k)",
            p.trace()
                == Dyadic {
                    num: Complex::new(1i64 << logical, 0),
                    shift: 0,
                },
        ),
    ];
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::CertificateFailed(format!(
            "projector fails {name}; generators are dependent"
        )));
    }
    Ok(Projector {
        n: spec.n,
        logical,
        matrix: p,
    })
}

/// Every Pauli of weight exactly `w` on `n` qubits, positions and letters in
/// lexicographic order.
pub fn paulis_of_weight(n: usize, w: usize) -> Vec<BitVec> {
    let mut out = Vec::new();
    if w > n {
        return out;
    }
    let mut positions: Vec<usize> = (0..w).collect();
    loop {
        for letters in 0..3usize.pow(w as u32) {
            let mut v = BitVec::zeros(2 * n);
            let mut l = letters;
            for &p in &positions {
                // X, Y, Z
                let (a, b) = [(false, true), (true, true), (true, false)][l % 3];
                v.set(p, a);
                v.set(n + p, b);
                l /= 3;
            }
            out.push(v);
        }
        let mut i = w;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if positions[i] < n - w + i {
                break;
            }
        }
        positions[i] += 1;
        for j in i + 1..w {
            positions[j] = positions[j - 1] + 1;
        }
    }
}

/// `λ` with `PEP = λP`, if one exists.
pub fn detection_scalar(p: &Projector, e: &ExactMatrix) -> Result<Option<Dyadic>> {
    let tr_p = p.matrix.trace();
    let ep = e.mul(&p.matrix)?;
    let tr_ep = ep.trace();
    let pep = p.matrix.mul(&ep)?;
    if pep.scale(tr_p) != p.matrix.scale(tr_ep) {
        return Ok(None);
    }
    // tr P = 2^{n−k} is a power of two, so λ = tr(EP)/tr(P) stays dyadic.
    let log = (tr_p.num.re as u64).trailing_zeros();
    Ok(Some(Dyadic {
        num: tr_ep.num,
        shift: tr_ep.shift + log - tr_p.shift,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DetectabilityReport {
    pub n: usize,
    pub max_weight: usize,
    pub checked: usize,
    /// First undetectable Pauli found, as a Pauli string.
    pub violation: Option<String>,
}

impl DetectabilityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Confirms every Pauli of weight `1..d_max` is detectable. The condition is
/// linear in `E` and Paulis on a support span all operators there, so
/// checking Paulis suffices.
pub fn detectability_check(p: &Projector, d_max: usize) -> Result<DetectabilityReport> {
    let max_weight = d_max.saturating_sub(1).min(p.n);
    let mut checked = 0;
    for w in 1..=max_weight {
        for v in paulis_of_weight(p.n, w) {
            checked += 1;
            if detection_scalar(p, &sigma(&v)?)?.is_none() {
                return Ok(DetectabilityReport {
                    n: p.n,
                    max_weight,
                    checked,
                    violation: Some(pauli_string(&v)),
                });
            }
        }
    }
    Ok(DetectabilityReport {
        n: p.n,
        max_weight,
        checked,
        violation: None,
    })
}

/// Lowest-weight undetectable Pauli up to `max_weight`, with its weight.
pub fn find_violation(p: &Projector, max_weight: usize) -> Result<Option<(usize, String)>> {
    for w in 1..=max_weight.min(p.n) {
        for v in paulis_of_weight(p.n, w) {
            if detection_scalar(p, &sigma(&v)?)?.is_none() {
                return Ok(Some((w, pauli_string(&v))));
            }
        }
    }
    Ok(None)
}

/// Result for one sign pattern.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PatternCheck {
    pub mu: String,
    pub detectability: DetectabilityReport,
    /// Lowest-weight violation at weight `d_max` or above, if searched.
    pub witness: Option<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PauliCheckReport {
    pub n: usize,
    pub logical: usize,
    pub d_max: usize,
    pub patterns: Vec<PatternCheck>,
}

impl PauliCheckReport {
    pub fn passed(&self) -> bool {
        self.patterns.iter().all(|p| p.detectability.passed())
    }
}

/// Projector and detectability for the default signs, or for every sign
/// pattern when `all_mu` is set. With `witness`, also searches weight `d_max`
/// for an undetectable Pauli.
pub fn check_stabilizer(
    spec: &StabilizerSpec,
    d_max: usize,
    opts: PauliCheckOptions,
    all_mu: bool,
    witness: bool,
) -> Result<PauliCheckReport> {
    let r = spec.generators.len();
    let patterns: Vec<u32> = if all_mu {
        if r > MAX_SIGN_PATTERN_GENERATORS {
            return Err(Error::InvalidParameter(format!(
                "{r} generators exceed the sign-pattern limit {MAX_SIGN_PATTERN_GENERATORS}"
            )));
        }
        (0..1u32 << r).collect()
    } else {
        vec![0]
    };
    let mut out = Vec::with_capacity(patterns.len());
    for pat in patterns {
        let s = spec.clone().with_pattern(pat);
        let p = stabilizer_projector(&s, opts)?;
        let detectability = detectability_check(&p, d_max)?;
        let witness = if witness && detectability.passed() {
            find_violation(&p, d_max)?
        } else {
            None
        };
        out.push(PatternCheck {
            mu: s.mu_string(),
            detectability,
            witness,
        });
    }
    Ok(PauliCheckReport {
        n: spec.n,
        logical: spec.logical(),
        d_max,
        patterns: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{parse_pauli_string, symplectic_form};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(n: usize, gens: &[&str]) -> StabilizerSpec {
        StabilizerSpec::new(
            n,
            gens.iter()
                .map(|s| parse_pauli_string(s).unwrap())
                .collect(),
        )
    }

    fn pm(sign: i64) -> Dyadic {
        Dyadic {
            num: Complex::new(sign, 0),
            shift: 0,
        }
    }

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (
            ExactMatrix::pauli_x(),
            ExactMatrix::pauli_y(),
            ExactMatrix::pauli_z(),
        );
        let id = ExactMatrix::identity(2);
        for m in [&x, &y, &z] {
            assert_eq!(m.mul(m).unwrap(), id);
            assert_eq!(m.adjoint(), *m);
        }
        // XZ = −iY
        let xz = x.mul(&z).unwrap();
        assert_eq!(
            xz,
            y.scale(Dyadic {
                num: Complex::new(0, -1),
                shift: 0
            })
        );
        // σ(ε)σ(ε̄) = −σ(ε̄)σ(ε)
        let e = sigma(&parse_pauli_string("X").unwrap()).unwrap();
        let eb = sigma(&parse_pauli_string("Z").unwrap()).unwrap();
        assert_eq!(e.mul(&eb).unwrap(), eb.mul(&e).unwrap().scale(pm(-1)));
        assert_eq!(sigma(&BitVec::zeros(6)).unwrap(), ExactMatrix::identity(8));
    }

    #[test]
    fn sigma_commutation_follows_symplectic_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 3;
        for _ in 0..30 {
            let rand_vec =
                |rng: &mut ChaCha8Rng| BitVec::from_bits((0..2 * n).map(|_| rng.gen::<bool>()));
            let (u, v) = (rand_vec(&mut rng), rand_vec(&mut rng));
            let (su, sv) = (sigma(&u).unwrap(), sigma(&v).unwrap());
            let uv = su.mul(&sv).unwrap();
            let vu = sv.mul(&su).unwrap();
            if symplectic_form(&u, &v).unwrap() {
                assert_eq!(uv, vu.scale(pm(-1)));
            } else {
                assert_eq!(uv, vu);
                let mut w = u.clone();
                w.xor_assign(&v);
                let sw = sigma(&w).unwrap();
                assert!(uv == sw || uv == sw.scale(pm(-1)), "σ(u)σ(v) = ±σ(u+v)");
            }
            assert_eq!(su.mul(&su).unwrap(), ExactMatrix::identity(8));
        }
    }

    #[test]
    fn dyadic_arithmetic_normalises() {
        let h = ExactMatrix::identity(2).halve();
        assert_eq!(h.add(&h).unwrap(), ExactMatrix::identity(2));
        assert_eq!(h.trace().to_f64(), Complex::new(1.0, 0.0));
        assert_eq!(
            Dyadic {
                num: Complex::new(2, 0),
                shift: 1
            },
            pm(1)
        );
    }

    #[test]
    fn weight_enumeration_counts() {
        assert_eq!(paulis_of_weight(4, 1).len(), 12);
        assert_eq!(paulis_of_weight(4, 2).len(), 6 * 9);
        assert_eq!(paulis_of_weight(3, 3).len(), 27);
        assert!(paulis_of_weight(2, 3).is_empty());
    }

    #[test]
    fn bell_state_and_trivial_projectors() {
        let p =
            stabilizer_projector(&spec(2, &["XX", "ZZ"]), PauliCheckOptions::default()).unwrap();
        assert_eq!(p.matrix.trace(), pm(1));
        let h = Dyadic { num: ONE, shift: 1 };
        assert_eq!(p.matrix.get(0, 0), h);
        assert_eq!(p.matrix.get(0, 3), h);
        assert_eq!(p.matrix.get(1, 1), pm(0));
        let id = stabilizer_projector(&spec(3, &[]), PauliCheckOptions::default()).unwrap();
        assert_eq!(id.matrix, ExactMatrix::identity(8));
    }

    #[test]
    fn stabilizer_elements_act_as_signs() {
        let p = stabilizer_projector(
            &spec(4, &["XXXX", "ZZZZ"]).with_pattern(0b01),
            PauliCheckOptions::default(),
        )
        .unwrap();
        let lam = |s: &str| {
            detection_scalar(&p, &sigma(&parse_pauli_string(s).unwrap()).unwrap()).unwrap()
        };
        assert_eq!(lam("IIII"), Some(pm(1)));
        assert_eq!(lam("XXXX"), Some(pm(-1)));
        assert_eq!(lam("ZZZZ"), Some(pm(1)));
        // YYYY = XXXX·ZZZZ exactly, so it acts as −1 here
        assert_eq!(lam("YYYY"), Some(pm(-1)));
        assert_eq!(lam("XIII"), Some(pm(0)));
        assert_eq!(lam("XXII"), None);
    }

    #[test]
    fn four_two_two_detects_single_errors_only() {
        let r = check_stabilizer(
            &spec(4, &["XXXX", "ZZZZ"]),
            2,
            PauliCheckOptions::default(),
            true,
            true,
        )
        .unwrap();
        assert_eq!(r.patterns.len(), 4);
        assert!(r.passed());
        for pat in &r.patterns {
            assert_eq!(pat.detectability.checked, 12);
            assert_eq!(pat.witness, Some((2, "XXII".to_string())));
        }
    }

    #[test]
    fn five_qubit_code_distance_three() {
        let g = spec(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let r = check_stabilizer(&g, 3, PauliCheckOptions::default(), true, true).unwrap();
        assert_eq!(r.logical, 1);
        assert_eq!(r.patterns.len(), 16);
        assert!(r.passed());
        assert!(r
            .patterns
            .iter()
            .all(|p| p.witness.as_ref().unwrap().0 == 3));
    }

    #[test]
    fn projector_guards() {
        assert!(matches!(
            stabilizer_projector(&spec(2, &["XI", "ZI"]), PauliCheckOptions::default()),
            Err(Error::NotIsotropic(0, 1))
        ));
        assert!(matches!(
            stabilizer_projector(&spec(7, &["XXXXXXX"]), PauliCheckOptions::default()),
            Err(Error::TooManyQubits { n: 7, cap: 6 })
        ));
        assert!(matches!(
            stabilizer_projector(&spec(2, &["XX", "XX"]), PauliCheckOptions::default()),
            Err(Error::CertificateFailed(_))
        ));
        assert!(sigma(&BitVec::zeros(22)).is_err());
    }
}
