//! Command-line front end.
//!
//! Every subcommand prints one JSON document on standard output:
//! `{"manifest": .., "log_base": .., "tol": .., "result": ..}`.  Series
//! (curves, embezzling distances, α scans) are additionally written as CSV
//! to `--out`.  Exit codes: 0 success or feasible, 1 infeasible or not
//! found, 2 input error, 3 inconclusive, 4 internal or solver error.

mod output;

pub use output::{Exit, InputDigest, RunManifest};

use crate::base::{ExtendedReal, Hamiltonian, ProbDist, ThermalContext, Weights};
use crate::catalysis::{
    embezzle_erase, search_catalyst, tensor_catalyst_report, verify_catalyst, Catalyst, SearchOutcome,
};
use crate::channels::{lp_dmajorization, lp_nearest_image, DmajOutcome};
use crate::error::{Error, Result};
use crate::io::{read_context, read_hamiltonian, read_json, DensityDoc, StateDoc};
use crate::majorize::{curve_dominates_tol, thermo_curve};
use crate::quantum::{quantum_second_law_check, DensityMatrix, QuantumVerdict};
use crate::renyi::{divergence_weights, entropy_weights};
use crate::secondlaws::{
    check_switch_hamiltonian, check_transition, two_condition_check, CheckMode, TransitionReport, Verdict,
};
use crate::work::{erasure_work, w_cost, w_ext, wit_transition_check, work_distance};
use crate::zeroeth::{extraction_simulation, is_completely_passive, is_passive};
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{render, Envelope, Inputs, Outcome, Series};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "thermolaws", version, about = "Second laws of thermodynamics: Rényi monotones, catalysis and work")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LogBase {
    #[value(name = "e")]
    E,
    #[value(name = "2")]
    Two,
}

impl LogBase {
    fn name(self) -> &'static str {
        match self {
            LogBase::E => "e",
            LogBase::Two => "2",
        }
    }

    /// Converts an information quantity from nats.
    fn convert(self, x: ExtendedReal) -> ExtendedReal {
        match self {
            LogBase::E => x,
            LogBase::Two => x.scale(1.0 / std::f64::consts::LN_2),
        }
    }
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Base of logarithms in information-valued outputs.
    #[arg(long, global = true, value_enum, default_value = "e")]
    pub log_base: LogBase,
    /// Comparison tolerance for verdicts.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// CSV file for series output, or a copy of the JSON report.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Nonneg,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => CheckMode::ExactAllAlpha,
            ModeArg::Nonneg => CheckMode::NonnegAlpha,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rényi divergence `D_α(p‖q)`, or the entropy of `p` without `--q`.
    Divergence {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: Option<PathBuf>,
        /// Orders (repeatable or comma separated; `inf` and `-inf` allowed).
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        alpha: Vec<f64>,
    },
    /// Thermo-majorization curve of a state.
    Curve {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Whether the curve of `a` lies above the curve of `b` (exit 0/1).
    CheckCurve {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Linear-programming oracles.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Feasibility of `from → to` under catalytic thermal operations.
    Check {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Use the two-condition sufficient check at smoothing `eps` instead.
        #[arg(long)]
        eps: Option<f64>,
        /// Also write the report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Catalyst search, verification and constructions.
    #[command(subcommand)]
    Catalyst(CatalystCmd),
    /// Work accounting.
    #[command(subcommand)]
    Work(WorkCmd),
    /// Necessary conditions for a quantum state transition.
    Qcheck {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long = "H")]
        h: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Passivity of a state, or of its tensor powers with `--copies`.
    Passivity {
        #[arg(long)]
        state: PathBuf,
        #[arg(long = "H")]
        h: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// Monte Carlo of population-inversion work extraction.
    ExtractSim {
        /// State document; defaults to `p = (0.3, 0.7)`, `E = (0, 1)`.
        #[arg(long)]
        state: Option<PathBuf>,
        #[arg(long = "H")]
        h: Option<PathBuf>,
        /// Higher level (0-based); defaults to the passivity witness.
        #[arg(long)]
        i: Option<usize>,
        /// Lower level (0-based).
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, default_value_t = 2000)]
        m: usize,
        #[arg(long, default_value_t = 0.1)]
        alpha: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// Whether one channel maps `p → p′` and `q → q′`.
    Dmaj {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        pprime: PathBuf,
        #[arg(long)]
        qprime: PathBuf,
    },
    /// The reachable image of `p` closest to `target` among channels fixing `fixed`.
    Nearest {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        fixed: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalystCmd {
    /// Randomized search for a catalyst with trivial Hamiltonian.
    Search {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Whether a given catalyst enables `from → to`.
    Verify {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        catalyst: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Residuals of the tensor-power catalyst for `n = 2..=n_max`.
    Tensor {
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Erasure of a uniform `m`-level system with embezzlers of sizes `n`.
    Embezzle {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WorkCmd {
    /// Work distance `D_work(from ≻ to)`.
    Distance {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Extractable work `kT·D_0(p‖γ)`.
    Ext {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Work of formation `kT·D_∞(p‖γ)`.
    Cost {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
    },
    /// Erasure of `S` with memory `Q` for a joint state over `Q × S`.
    Erasure {
        #[arg(long)]
        joint: PathBuf,
        /// `dQ,dS`.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Whether `from → to` succeeds while raising a wit by `w` (exit 0/1).
    WitCheck {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ctx: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        w: f64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Divergence { .. } => "divergence",
            Command::Curve { .. } => "curve",
            Command::CheckCurve { .. } => "check-curve",
            Command::Oracle(OracleCmd::Dmaj { .. }) => "oracle dmaj",
            Command::Oracle(OracleCmd::Nearest { .. }) => "oracle nearest",
            Command::Check { .. } => "check",
            Command::Catalyst(CatalystCmd::Search { .. }) => "catalyst search",
            Command::Catalyst(CatalystCmd::Verify { .. }) => "catalyst verify",
            Command::Catalyst(CatalystCmd::Tensor { .. }) => "catalyst tensor",
            Command::Catalyst(CatalystCmd::Embezzle { .. }) => "catalyst embezzle",
            Command::Work(WorkCmd::Distance { .. }) => "work distance",
            Command::Work(WorkCmd::Ext { .. }) => "work ext",
            Command::Work(WorkCmd::Cost { .. }) => "work cost",
            Command::Work(WorkCmd::Erasure { .. }) => "work erasure",
            Command::Work(WorkCmd::WitCheck { .. }) => "work wit-check",
            Command::Qcheck { .. } => "qcheck",
            Command::Passivity { .. } => "passivity",
            Command::ExtractSim { .. } => "extract-sim",
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `stdout` and diagnostics to `stderr`.  Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Input.code() } else { Exit::Ok.code() };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let mut inputs = Inputs::new();
    let outcome = match execute(&cli, &mut inputs) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return Exit::for_error(&e).code();
        }
    };
    let manifest = inputs.into_manifest(cli.command.name(), cli.global.seed);
    let envelope = Envelope {
        manifest: &manifest,
        log_base: cli.global.log_base.name(),
        tol: cli.global.tol,
        result: &outcome.result,
    };
    let mut finish = || -> Result<()> {
        let text = render(&envelope)?;
        writeln!(stdout, "{text}")?;
        if let Some(path) = &outcome.report_path {
            std::fs::write(path, format!("{text}\n"))?;
        }
        match (&outcome.series, &cli.global.out) {
            (Some(series), Some(path)) => series.write(path)?,
            (None, Some(path)) => std::fs::write(path, format!("{text}\n"))?,
            _ => {}
        }
        Ok(())
    };
    match finish() {
        Ok(()) => outcome.exit.code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            Exit::for_error(&e).code()
        }
    }
}

fn load_state(inputs: &mut Inputs, role: &str, path: &Path) -> Result<(ProbDist, Option<Hamiltonian>)> {
    let doc: StateDoc = read_json(inputs.add(role, path)?)?;
    Ok((doc.to_dist()?, doc.hamiltonian()?))
}

fn load_ctx(inputs: &mut Inputs, path: &Path) -> Result<ThermalContext> {
    read_context(inputs.add("ctx", path)?)
}

/// The common Hamiltonian of several states: the energies they carry
/// (which must agree) or the trivial Hamiltonian.
fn common_hamiltonian(hs: &[&Option<Hamiltonian>], dim: usize) -> Result<Hamiltonian> {
    let mut found: Option<&Hamiltonian> = None;
    for h in hs.iter().filter_map(|h| h.as_ref()) {
        match found {
            Some(f) if f != h => {
                return Err(Error::InvalidParameter("states carry different energies".into()))
            }
            _ => found = Some(h),
        }
    }
    Ok(found.cloned().unwrap_or_else(|| Hamiltonian::trivial(dim)))
}

fn verdict_exit(verdict: Verdict) -> Exit {
    match verdict {
        Verdict::Feasible | Verdict::SufficientPass => Exit::Ok,
        Verdict::Infeasible => Exit::Negative,
        Verdict::Inconclusive => Exit::Inconclusive,
    }
}

/// Re-derives the verdict of an all-α check at the user tolerance.
fn apply_tol(mut r: TransitionReport, tol: f64) -> TransitionReport {
    if matches!(r.verdict, Verdict::Feasible | Verdict::Infeasible) {
        let infeasible = r.margin < ExtendedReal::from_f64(-tol);
        r.verdict = if infeasible { Verdict::Infeasible } else { Verdict::Feasible };
        r.marginal = !infeasible && r.margin < ExtendedReal::from_f64(tol);
    }
    r
}

fn work_value(value: ExtendedReal) -> serde_json::Value {
    json!({ "value": value, "units": "energy" })
}

fn execute(cli: &Cli, inputs: &mut Inputs) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Divergence { p, q, alpha } => {
            let (p, _) = load_state(inputs, "p", p)?;
            let q = q.as_ref().map(|q| load_state(inputs, "q", q)).transpose()?.map(|x| x.0);
            let mut series = Series::new(&["alpha", "value"]);
            let mut rows = Vec::new();
            for &a in alpha {
                if a.is_nan() {
                    return Err(Error::InvalidParameter("α must not be NaN".into()));
                }
                let v = match &q {
                    Some(q) => {
                        crate::error::check_dim(p.dim(), q.dim())?;
                        divergence_weights(p.weights(), q.weights(), a)
                    }
                    None => entropy_weights(p.weights(), a),
                };
                let v = g.log_base.convert(v);
                series.rows.push(vec![a, v.to_f64()]);
                rows.push(json!({ "alpha": ExtendedReal::from_f64(a), "value": v }));
            }
            let kind = if q.is_some() { "divergence" } else { "entropy" };
            Ok(Outcome::new(&json!({ "quantity": kind, "values": rows }), Exit::Ok)?.with_series(series))
        }
        Command::Curve { state, ctx } => {
            let (p, h) = load_state(inputs, "state", state)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h], p.dim())?;
            let curve = thermo_curve(&p, &h, &ctx)?;
            let mut series = Series::new(&["x", "y"]);
            series.rows = curve.points().iter().map(|&(x, y)| vec![x, y]).collect();
            Ok(Outcome::new(&json!({ "points": curve.points() }), Exit::Ok)?.with_series(series))
        }
        Command::CheckCurve { a, b, ctx } => {
            let (pa, ha) = load_state(inputs, "a", a)?;
            let (pb, hb) = load_state(inputs, "b", b)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&ha, &hb], pa.dim())?;
            let dominates = curve_dominates_tol(&thermo_curve(&pa, &h, &ctx)?, &thermo_curve(&pb, &h, &ctx)?, g.tol)?;
            Outcome::new(&json!({ "dominates": dominates }), Exit::from_bool(dominates))
        }
        Command::Oracle(OracleCmd::Dmaj { p, q, pprime, qprime }) => {
            let (p, _) = load_state(inputs, "p", p)?;
            let (q, _) = load_state(inputs, "q", q)?;
            let (pp, _) = load_state(inputs, "pprime", pprime)?;
            let (qp, _) = load_state(inputs, "qprime", qprime)?;
            match lp_dmajorization(&p, &q, &pp, &qp)? {
                DmajOutcome::Feasible(w) => Outcome::new(&json!({ "feasible": true, "witness": w }), Exit::Ok),
                DmajOutcome::Infeasible { phase_one_residual } => Outcome::new(
                    &json!({ "feasible": false, "phase_one_residual": phase_one_residual }),
                    Exit::Negative,
                ),
            }
        }
        Command::Oracle(OracleCmd::Nearest { p, target, fixed }) => {
            let (p, _) = load_state(inputs, "p", p)?;
            let (t, _) = load_state(inputs, "target", target)?;
            let (f, _) = load_state(inputs, "fixed", fixed)?;
            let img = lp_nearest_image(&p, &t, &f)?;
            Outcome::new(
                &json!({
                    "image": img.image.weights(),
                    "l1_dist": img.l1_dist,
                    "witness": img.witness,
                }),
                Exit::Ok,
            )
        }
        Command::Check { from, to, ctx, mode, eps, report } => {
            let (p, h0) = load_state(inputs, "from", from)?;
            let (pp, h1) = load_state(inputs, "to", to)?;
            let ctx = load_ctx(inputs, ctx)?;
            let r = match (eps, &h0, &h1) {
                (Some(eps), _, _) => two_condition_check(&p, &pp, &common_hamiltonian(&[&h0, &h1], p.dim())?, &ctx, *eps)?,
                (None, Some(a), Some(b)) if a != b => {
                    apply_tol(check_switch_hamiltonian(&p, a, &pp, b, &ctx, (*mode).into())?, g.tol)
                }
                (None, _, _) => {
                    let h = common_hamiltonian(&[&h0, &h1], p.dim())?;
                    apply_tol(check_transition(&p, &pp, &h, &ctx, (*mode).into())?, g.tol)
                }
            };
            let mut out = Outcome::new(&r, verdict_exit(r.verdict))?;
            out.report_path = report.clone();
            Ok(out)
        }
        Command::Catalyst(cmd) => catalyst(cmd, g, inputs),
        Command::Work(cmd) => work(cmd, g, inputs),
        Command::Qcheck { from, to, h, ctx } => {
            let rho = DensityMatrix::try_from(&read_json::<DensityDoc>(inputs.add("from", from)?)?)?;
            let sigma = DensityMatrix::try_from(&read_json::<DensityDoc>(inputs.add("to", to)?)?)?;
            let h = read_hamiltonian(inputs.add("H", h)?)?;
            let ctx = load_ctx(inputs, ctx)?;
            let mut r = quantum_second_law_check(&rho, &sigma, &h, &ctx)?;
            for f in [&mut r.hat, &mut r.hat_reversed, &mut r.tilde] {
                f.violated = f.margin < ExtendedReal::from_f64(-g.tol);
            }
            r.overall = if r.hat.violated || r.hat_reversed.violated || r.tilde.violated {
                QuantumVerdict::Infeasible
            } else {
                QuantumVerdict::PossiblyFeasible
            };
            let exit = Exit::from_bool(r.overall == QuantumVerdict::PossiblyFeasible);
            Outcome::new(&r, exit)
        }
        Command::Passivity { state, h, copies } => {
            let (p, hs) = load_state(inputs, "state", state)?;
            let h = match h {
                Some(path) => read_hamiltonian(inputs.add("H", path)?)?,
                None => hs.ok_or_else(|| Error::InvalidParameter("passivity needs energies (--H or in the state)".into()))?,
            };
            let r = if *copies <= 1 { is_passive(&p, &h)? } else { is_completely_passive(&p, &h, *copies)? };
            Outcome::new(&r, Exit::from_bool(r.passive))
        }
        Command::ExtractSim { state, h, i, j, m, alpha, trials } => {
            let (p, hs) = match state {
                Some(path) => load_state(inputs, "state", path)?,
                None => (ProbDist::new(vec![0.3, 0.7])?, Some(Hamiltonian::new(vec![0.0, 1.0])?)),
            };
            let h = match h {
                Some(path) => read_hamiltonian(inputs.add("H", path)?)?,
                None => hs.ok_or_else(|| Error::InvalidParameter("extraction needs energies (--H or in the state)".into()))?,
            };
            let (i, j) = match (i, j) {
                (Some(i), Some(j)) => (*i, *j),
                (None, None) => is_passive(&p, &h)?
                    .witness
                    .ok_or_else(|| Error::Precondition("state is passive; no population inversion to use".into()))?,
                _ => return Err(Error::InvalidParameter("give both --i and --j or neither".into())),
            };
            let r = extraction_simulation(&p, &h, i, j, *m, *alpha, *trials, g.seed.unwrap_or(0))?;
            Outcome::new(&json!({ "i": i, "j": j, "simulation": r }), Exit::Ok)
        }
    }
}

fn catalyst(cmd: &CatalystCmd, g: &GlobalOpts, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        CatalystCmd::Search { from, to, ctx, max_dim, samples } => {
            let (p, h0) = load_state(inputs, "from", from)?;
            let (pp, h1) = load_state(inputs, "to", to)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h0, &h1], p.dim())?;
            let s = search_catalyst(&p, &pp, &h, &ctx, *max_dim, *samples, g.seed.unwrap_or(0))?;
            let catalyst = match &s.outcome {
                SearchOutcome::Found(c) => Some(StateDoc::from_dist(&c.state, None)),
                SearchOutcome::NotFound => None,
            };
            let found = catalyst.is_some();
            let summary = s.summary();
            Outcome::new(
                &json!({
                    "found": found,
                    "catalyst": catalyst,
                    "attempts": summary.attempts,
                    "transcript_digest": summary.transcript_digest,
                }),
                Exit::from_bool(found),
            )
        }
        CatalystCmd::Verify { from, to, catalyst, ctx } => {
            let (p, h0) = load_state(inputs, "from", from)?;
            let (pp, h1) = load_state(inputs, "to", to)?;
            let (c, hc) = load_state(inputs, "catalyst", catalyst)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h0, &h1], p.dim())?;
            let cat = match hc {
                Some(hc) => Catalyst::new(c, hc)?,
                None => Catalyst::trivial(c),
            };
            let ok = verify_catalyst(&p, &pp, &cat, &h, &ctx)?;
            Outcome::new(&json!({ "enables": ok }), Exit::from_bool(ok))
        }
        CatalystCmd::Tensor { p, q, n_max } => {
            let (p, _) = load_state(inputs, "p", p)?;
            let (q, _) = load_state(inputs, "q", q)?;
            let mut series = Series::new(&["n", "residual", "fannes"]);
            let mut reports = Vec::new();
            for n in 2..=*n_max {
                let r = tensor_catalyst_report(&p, &q, n)?;
                series.rows.push(vec![n as f64, r.residual, r.fannes]);
                reports.push(r);
            }
            Ok(Outcome::new(&json!({ "reports": reports }), Exit::Ok)?.with_series(series))
        }
        CatalystCmd::Embezzle { m, n } => {
            let mut series = Series::new(&["n", "trace_dist"]);
            let mut rows = Vec::new();
            for &n in n {
                let r = embezzle_erase(*m, n)?;
                series.rows.push(vec![n as f64, r.trace_dist]);
                rows.push(json!({
                    "n": n,
                    "trace_dist": r.trace_dist,
                    "joint_trace_dist": r.joint_trace_dist,
                    "fidelity": r.fidelity,
                    "marginal_fidelity": r.marginal_fidelity,
                    "fidelity_bound_holds": r.fidelity_bound_holds,
                }));
            }
            Ok(Outcome::new(&json!({ "m": m, "runs": rows }), Exit::Ok)?.with_series(series))
        }
    }
}

fn work(cmd: &WorkCmd, g: &GlobalOpts, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        WorkCmd::Distance { from, to, ctx } => {
            let (p, h0) = load_state(inputs, "from", from)?;
            let (pp, h1) = load_state(inputs, "to", to)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h0, &h1], p.dim())?;
            Outcome::new(&work_value(work_distance(&p, &pp, &h, &ctx)?), Exit::Ok)
        }
        WorkCmd::Ext { state, ctx } | WorkCmd::Cost { state, ctx } => {
            let (p, h) = load_state(inputs, "state", state)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h], p.dim())?;
            let v = if matches!(cmd, WorkCmd::Ext { .. }) { w_ext(&p, &h, &ctx)? } else { w_cost(&p, &h, &ctx)? };
            Outcome::new(&work_value(ExtendedReal::from_f64(v)), Exit::Ok)
        }
        WorkCmd::Erasure { joint, dims } => {
            let (j, _) = load_state(inputs, "joint", joint)?;
            let [dq, ds] = dims[..] else {
                return Err(Error::InvalidParameter(format!("--dims needs two values dQ,dS, got {}", dims.len())));
            };
            let v = g.log_base.convert(erasure_work(&j, (dq, ds))?);
            let units = match g.log_base {
                LogBase::E => "kT·nats",
                LogBase::Two => "kT·bits",
            };
            Outcome::new(&json!({ "value": v, "units": units }), Exit::Ok)
        }
        WorkCmd::WitCheck { from, to, ctx, w } => {
            let (p, h0) = load_state(inputs, "from", from)?;
            let (pp, h1) = load_state(inputs, "to", to)?;
            let ctx = load_ctx(inputs, ctx)?;
            let h = common_hamiltonian(&[&h0, &h1], p.dim())?;
            let r = apply_tol(wit_transition_check(&p, &pp, &h, &ctx, *w)?, g.tol);
            Outcome::new(&r, verdict_exit(r.verdict))
        }
    }
}
