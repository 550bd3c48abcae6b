use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use agq::agcurve::{build_dual_chain, enumerate_curve, CurveKind, TwistOptions};
use agq::artifact::{read_json, write_json, FCodeJson, Invocation, Kind, PairJson, TripleJson};
use agq::atlas::{
    agq_curve, breakpoint_diagnostic, envelope, grid, gv4_curve, pipeline_build, restriction_limit,
    to_f64, write_csv, PipelineConfig, MIN_LINE_M,
};
use agq::codes::DEFAULT_BUDGET;
use agq::descent::{expand_chain, ExpansionMap};
use agq::galois::gf;
use agq::pauli::{check_stabilizer, PauliCheckOptions, StabilizerSpec, DEFAULT_MAX_QUBITS};
use agq::symplectic::{quantum_params, steane_compose, Mixing, SteaneOptions};

#[derive(Parser)]
#[command(
    name = "agq",
    version,
    about = "Quantum stabilizer codes from algebraic-geometry codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Line,
    Hermitian,
}

impl From<CurveArg> for CurveKind {
    fn from(c: CurveArg) -> Self {
        match c {
            CurveArg::Line => CurveKind::ProjectiveLine,
            CurveArg::Hermitian => CurveKind::Hermitian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MixingArg {
    FixedPointFree,
    CyclicShift,
}

impl From<MixingArg> for Mixing {
    fn from(m: MixingArg) -> Self {
        match m {
            MixingArg::FixedPointFree => Mixing::FixedPointFree,
            MixingArg::CyclicShift => Mixing::CyclicShift,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundType {
    Gv4,
    Agq,
    Envelope,
}

#[derive(Subcommand)]
enum Command {
    /// Build a dual-containing chain C' ⊃ C ⊇ C^⊥ from a curve.
    Build {
        #[arg(long, value_enum)]
        curve: CurveArg,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        a: usize,
        #[arg(long = "a-prime")]
        a_prime: usize,
        /// Solve for a twist even above the guaranteed range of a.
        #[arg(long)]
        allow_beyond_bound: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Expand a chain to binary codes in a self-dual basis.
    Expand {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enlarge a binary pair into a large symplectic code.
    Steane {
        #[arg(long)]
        d: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "fixed-point-free")]
        mixing: MixingArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Report [[n, k, d]] of a symplectic code.
    Verify {
        #[arg(long)]
        code: PathBuf,
        /// Enumerate the distance instead of reporting the recorded bound.
        #[arg(long)]
        exact_distance: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check projectors and detectability with exact operators.
    PauliCheck {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_QUBITS)]
        max_n: usize,
        /// Check every sign pattern of the stabilizer generators.
        #[arg(long)]
        all_mu: bool,
        /// Detect all Paulis below this weight; defaults to the enumerated distance.
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a bound curve to CSV.
    Bounds {
        #[arg(long = "type", value_enum)]
        kind: BoundType,
        #[arg(long, default_value_t = MIN_LINE_M)]
        m: u32,
        #[arg(long, default_value_t = 0.0005)]
        step: f64,
        /// Largest δ sampled; defaults to the curve's natural range.
        #[arg(long)]
        max: Option<f64>,
        #[arg(long)]
        out: PathBuf,
        /// Also write the breakpoint diagnostic as JSON.
        #[arg(long)]
        breakpoints: Option<PathBuf>,
    },
    /// Run the whole construction and report the quantum code.
    Pipeline {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum)]
        curve: CurveArg,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        a: usize,
        #[arg(long = "a-prime")]
        a_prime: usize,
        #[arg(long)]
        allow_beyond_bound: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "fixed-point-free")]
        mixing: MixingArg,
        #[arg(long)]
        out: PathBuf,
    },
}

fn show(p: &Path) -> String {
    p.display().to_string()
}

fn emit<T: Kind + serde::Serialize>(
    out: Option<&Path>,
    body: T,
    inv: Invocation,
) -> anyhow::Result<()> {
    match out {
        Some(p) => write_json(p, body, Some(inv)).with_context(|| format!("writing {}", show(p))),
        None => {
            let doc = agq::artifact::Document::new(body, Some(inv));
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(())
        }
    }
}

/// Returns whether every certificate held.
fn run(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Build {
            curve,
            q,
            a,
            a_prime,
            allow_beyond_bound,
            out,
        } => {
            let kind = CurveKind::from(curve);
            let c = enumerate_curve(kind, q)?;
            let t = build_dual_chain(&c, a, a_prime, TwistOptions { allow_beyond_bound })?;
            let ok = t.certify().is_ok();
            let inv = Invocation::new("build")
                .flag("curve", kind)
                .flag("q", q)
                .flag("a", a)
                .flag("a-prime", a_prime)
                .flag("allow-beyond-bound", allow_beyond_bound)
                .flag("out", show(&out));
            eprintln!(
                "C' = [{n}, {}] ⊃ C = [{n}, {}] over GF(2^{}), regime {:?}",
                t.c_prime.dim(),
                t.c.dim(),
                t.provenance.field_k,
                t.provenance.regime,
                n = t.c.len()
            );
            emit(Some(&out), TripleJson::from(&t), inv)?;
            Ok(ok)
        }
        Command::Expand { input, out } => {
            let t = read_json::<TripleJson>(&input)?.body.to_triple()?;
            let map = ExpansionMap::new(gf(t.provenance.field_k)?, t.c.len())?;
            let pair = expand_chain(&t, &map)?;
            let ok = pair.certify().is_ok();
            eprintln!(
                "D' = [{n}, {}] ⊃ D = [{n}, {}]",
                pair.d_prime.dim(),
                pair.d.dim(),
                n = pair.d.len()
            );
            let inv = Invocation::new("expand")
                .flag("in", show(&input))
                .flag("out", show(&out));
            emit(
                Some(&out),
                PairJson::new(&pair, &map, Some(t.provenance)),
                inv,
            )?;
            Ok(ok)
        }
        Command::Steane {
            d,
            out,
            mixing,
            budget,
        } => {
            let pair = read_json::<PairJson>(&d)?.body.to_pair()?;
            let mixing = Mixing::from(mixing);
            let s = steane_compose(&pair.d, &pair.d_prime, SteaneOptions { mixing, budget })?;
            eprintln!(
                "F: n = {}, k_F = {}, large = {}, bound {:?}",
                s.code.len(),
                s.code.dim(),
                s.code.is_large(),
                s.bound()
            );
            let inv = Invocation::new("steane")
                .flag("d", show(&d))
                .flag("out", show(&out))
                .flag("mixing", format!("{mixing:?}"))
                .flag("budget", budget);
            let ok = s.code.is_large();
            emit(Some(&out), FCodeJson::from(&s), inv)?;
            Ok(ok)
        }
        Command::Verify {
            code,
            exact_distance,
            budget,
            out,
        } => {
            let f = read_json::<FCodeJson>(&code)?.body.to_code()?;
            let r = quantum_params(&f, if exact_distance { budget } else { 0 })?;
            eprintln!("{}", r.params());
            let ok = r.all_verified();
            let inv = Invocation::new("verify")
                .flag("code", show(&code))
                .flag("exact-distance", exact_distance)
                .flag("budget", budget);
            emit(out.as_deref(), r, inv)?;
            Ok(ok)
        }
        Command::PauliCheck {
            code,
            max_n,
            all_mu,
            d_max,
            out,
        } => {
            let f = read_json::<FCodeJson>(&code)?.body.to_code()?;
            let spec = StabilizerSpec::from_code(&f)?;
            let (d_max, witness) = match d_max {
                Some(d) => (d, false),
                None => {
                    let r = quantum_params(&f, DEFAULT_BUDGET)?;
                    if !r.d_exact {
                        bail!("distance not enumerable within budget; pass --d-max");
                    }
                    (r.d_q, true)
                }
            };
            let r = check_stabilizer(&spec, d_max, PauliCheckOptions { max_n }, all_mu, witness)?;
            let witness_ok = !witness
                || r.patterns
                    .iter()
                    .all(|p| p.witness.as_ref().is_some_and(|w| w.0 == d_max));
            for p in &r.patterns {
                eprintln!(
                    "μ = {}: {} Paulis below weight {d_max} {}, witness {:?}",
                    p.mu,
                    p.detectability.checked,
                    if p.detectability.passed() {
                        "detected"
                    } else {
                        "NOT detected"
                    },
                    p.witness
                );
            }
            let ok = r.passed() && witness_ok;
            let inv = Invocation::new("pauli-check")
                .flag("code", show(&code))
                .flag("max-n", max_n)
                .flag("all-mu", all_mu)
                .flag("d-max", d_max);
            emit(out.as_deref(), r, inv)?;
            Ok(ok)
        }
        Command::Bounds {
            kind,
            m,
            step,
            max,
            out,
            breakpoints,
        } => {
            let env_top = to_f64(restriction_limit(MIN_LINE_M));
            let curve = match kind {
                BoundType::Gv4 => gv4_curve(&grid(step, max.unwrap_or(0.19))?)?,
                BoundType::Agq => {
                    agq_curve(m, &grid(step, max.unwrap_or(to_f64(restriction_limit(m))))?)?
                }
                BoundType::Envelope => envelope(&grid(step, max.unwrap_or(env_top))?)?.curve,
            };
            write_csv(std::slice::from_ref(&curve), &out)?;
            eprintln!(
                "{} samples of {} written to {}",
                curve.samples.len(),
                curve.source,
                show(&out)
            );
            if let Some(path) = breakpoints {
                let d = breakpoint_diagnostic();
                eprintln!(
                    "inverted intervals at m = {:?}; computed envelope differs at m = {:?}",
                    d.inversions(),
                    d.disagreements()
                );
                let inv = Invocation::new("bounds").flag("breakpoints", show(&path));
                emit(Some(&path), d, inv)?;
            }
            Ok(true)
        }
        Command::Pipeline {
            m,
            curve,
            q,
            a,
            a_prime,
            allow_beyond_bound,
            budget,
            mixing,
            out,
        } => {
            let mut cfg = PipelineConfig::new(m, curve.into(), q, a, a_prime);
            cfg.allow_beyond_bound = allow_beyond_bound;
            cfg.budget = budget;
            cfg.mixing = mixing.into();
            let r = pipeline_build(&cfg)?;
            for line in &r.quantum.trace {
                eprintln!("{line}");
            }
            eprintln!("{}", r.quantum.params());
            let inv = Invocation::new("pipeline")
                .flag("m", m)
                .flag("curve", cfg.curve)
                .flag("q", q)
                .flag("a", a)
                .flag("a-prime", a_prime)
                .flag("allow-beyond-bound", allow_beyond_bound)
                .flag("budget", budget)
                .flag("mixing", format!("{:?}", cfg.mixing))
                .flag("out", show(&out));
            let ok = r.all_verified();
            emit(Some(&out), r, inv)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: a certificate failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
