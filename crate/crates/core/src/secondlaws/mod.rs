//! Generalized free energies and the feasibility checks built on them.
//!
//! With `F_α(p) = −kT ln Z + kT·D_α(p‖γ)`, a transition `p → p′` under
//! catalytic thermal operations is possible exactly when the gap
//! `F_α(p) − F_α(p′)` is non-negative for every real α
//! ([`CheckMode::ExactAllAlpha`]), or for every `α ≥ 0` when a pure qubit may
//! be borrowed ([`CheckMode::NonnegAlpha`]).  The infimum over α is found
//! numerically, see [`scan`].

pub mod scan;

use crate::base::{
    gibbs_state, log_partition_function, ExtendedReal, Hamiltonian, ProbDist, ThermalContext,
    Weights, TOL,
};
use crate::error::{check_dim, Error, Result};
use crate::renyi::{divergence_weights, smooth_d0, smooth_d_inf};
pub use scan::{AlphaSample, CheckMode};
use serde::{Deserialize, Serialize};

/// Outcome of a feasibility check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Feasible,
    Infeasible,
    /// A sufficient condition holds (the transition is possible).
    SufficientPass,
    /// A sufficient condition was not met; nothing is concluded.
    Inconclusive,
}

/// The values a smoothing-based check compared.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmoothingSummary {
    pub eps: f64,
    /// `D_0(p‖γ)` of the input.
    pub d0_input: ExtendedReal,
    /// `D_∞(p′‖γ)` of the target.
    pub dinf_target: ExtendedReal,
    /// `D_∞` of the smoothed input.
    pub dinf_input_smoothed: ExtendedReal,
    /// `D_0` of the smoothed target.
    pub d0_target_smoothed: ExtendedReal,
}

/// Result of a transition check.  Gaps and the margin are in energy units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionReport {
    pub verdict: Verdict,
    pub worst_alpha: ExtendedReal,
    /// Minimum of the gap over the checked family.
    pub margin: ExtendedReal,
    /// Set when the verdict is feasible but `|margin|` is below the tolerance.
    pub marginal: bool,
    pub samples: Vec<AlphaSample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub smoothing: Option<SmoothingSummary>,
}

impl TransitionReport {
    pub fn is_feasible(&self) -> bool {
        matches!(self.verdict, Verdict::Feasible | Verdict::SufficientPass)
    }
}

/// `F_α(p) = −kT ln Z + kT·D_α(p‖γ)`.
pub fn free_energy(p: &ProbDist, h: &Hamiltonian, ctx: &ThermalContext, alpha: f64) -> Result<ExtendedReal> {
    check_dim(h.dim(), p.dim())?;
    crate::base::check_alpha(alpha)?;
    let g = gibbs_state(h, ctx);
    let kt = ctx.kt();
    let d = divergence_weights(p.weights(), g.weights(), alpha);
    Ok(d.scale(kt) + (-kt * log_partition_function(h, ctx)))
}

/// Builds a report from gap samples on `α < 0` (possibly empty) and `α ≥ 0`.
fn summarize(negative: Vec<AlphaSample>, nonneg: Vec<AlphaSample>) -> TransitionReport {
    let mut samples = negative;
    samples.extend(nonneg);
    let worst = scan::argmin(&samples).expect("non-empty grid");
    let infeasible = worst.gap < ExtendedReal::from_f64(-TOL);
    TransitionReport {
        verdict: if infeasible { Verdict::Infeasible } else { Verdict::Feasible },
        worst_alpha: worst.alpha,
        margin: worst.gap,
        marginal: !infeasible && worst.gap < ExtendedReal::from_f64(TOL),
        samples,
        smoothing: None,
    }
}

/// Scans a gap function over the family selected by `mode`.
/// `skip_negative` marks the negative half as vacuous (gap `+∞`).
fn scan_gap<F: Fn(f64) -> ExtendedReal>(f: F, mode: CheckMode, skip_negative: bool) -> TransitionReport {
    let nonneg = scan::scan_nonnegative(&f);
    let negative = match mode {
        CheckMode::NonnegAlpha => Vec::new(),
        CheckMode::ExactAllAlpha if skip_negative => vec![AlphaSample {
            alpha: ExtendedReal::NegInf,
            gap: ExtendedReal::PosInf,
        }],
        CheckMode::ExactAllAlpha => scan::scan_negative(&f),
    };
    summarize(negative, nonneg)
}

/// Checks `p → p′` under (catalytic) thermal operations for Hamiltonian `h`.
pub fn check_transition(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
    mode: CheckMode,
) -> Result<TransitionReport> {
    check_dim(h.dim(), p.dim())?;
    check_dim(h.dim(), p_prime.dim())?;
    let g = gibbs_state(h, ctx);
    let kt = ctx.kt();
    let (a, b, gw) = (p.weights(), p_prime.weights(), g.weights());
    let f = |alpha: f64| {
        let da = divergence_weights(a, gw, alpha);
        let db = divergence_weights(b, gw, alpha);
        scan::gap_of(da, db).scale(kt)
    };
    // For α < 0 every divergence of a rank-deficient state is +∞.
    let skip = !p.is_full_rank() && p_prime.is_full_rank();
    Ok(scan_gap(f, mode, skip))
}

/// Checks `(p, H0) → (p′, H1)` by comparing `F_α(p, H0)` with `F_α(p′, H1)`,
/// which decides transitions that also switch the Hamiltonian.
pub fn check_switch_hamiltonian(
    p: &ProbDist,
    h0: &Hamiltonian,
    p_prime: &ProbDist,
    h1: &Hamiltonian,
    ctx: &ThermalContext,
    mode: CheckMode,
) -> Result<TransitionReport> {
    check_dim(h0.dim(), p.dim())?;
    check_dim(h1.dim(), p_prime.dim())?;
    let (g0, g1) = (gibbs_state(h0, ctx), gibbs_state(h1, ctx));
    let kt = ctx.kt();
    let offset = kt * (log_partition_function(h1, ctx) - log_partition_function(h0, ctx));
    let f = |alpha: f64| {
        let da = divergence_weights(p.weights(), g0.weights(), alpha);
        let db = divergence_weights(p_prime.weights(), g1.weights(), alpha);
        scan::gap_of(da, db).scale(kt) + offset
    };
    let skip = !p.is_full_rank() && p_prime.is_full_rank();
    Ok(scan_gap(f, mode, skip))
}

/// Sufficient check for `p → p′` over `α ≥ 0` from two smoothed quantities.
///
/// For `α > 1`, `D_α(p) ≥ D_∞(p_s) − log(1/ε)/(α−1)` where `p_s` is the
/// max-divergence smoothing of `p`, and for `α < 1`,
/// `D_α(p′) ≤ D_0(p′_s) + log(1/ε)/(1−α)` where `p′_s` is the
/// zero-divergence smoothing of `p′`.  Combined with the monotonicity of
/// `D_α` in α these give a lower bound `L(α)` on `D_α(p)` and an upper bound
/// `U(α)` on `D_α(p′)`; the check passes when `L(α) ≥ U(α)` for every
/// sampled α.  The samples record `kT·(L − U)`.  The check never reports
/// infeasibility.
pub fn two_condition_check(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
    eps: f64,
) -> Result<TransitionReport> {
    check_dim(h.dim(), p.dim())?;
    check_dim(h.dim(), p_prime.dim())?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!("eps must lie in (0,1), got {eps}")));
    }
    let g = gibbs_state(h, ctx);
    let kt = ctx.kt();
    let gw = g.weights();
    let d0_input = divergence_weights(p.weights(), gw, 0.0);
    let dinf_target = divergence_weights(p_prime.weights(), gw, f64::INFINITY);
    let (_, dinf_input_smoothed) = smooth_d_inf(p, &g, eps)?;
    let (_, d0_target_smoothed) = smooth_d0(p_prime, &g, eps)?;
    let c = (1.0 / eps).ln();
    let bound_gap = |alpha: f64| {
        let mut lower = d0_input;
        if alpha > 1.0 {
            let corr = if alpha.is_infinite() { 0.0 } else { c / (alpha - 1.0) };
            lower = lower.max(dinf_input_smoothed + (-corr));
        }
        let mut upper = dinf_target;
        if alpha < 1.0 {
            upper = upper.min(d0_target_smoothed + c / (1.0 - alpha));
        }
        scan::gap_of(lower, upper).scale(kt)
    };
    let samples = scan::scan_nonnegative(&bound_gap);
    let worst = scan::argmin(&samples).expect("non-empty grid");
    let pass = worst.gap >= ExtendedReal::from_f64(-TOL);
    Ok(TransitionReport {
        verdict: if pass { Verdict::SufficientPass } else { Verdict::Inconclusive },
        worst_alpha: worst.alpha,
        margin: worst.gap,
        marginal: pass && worst.gap < ExtendedReal::from_f64(TOL),
        samples,
        smoothing: Some(SmoothingSummary {
            eps,
            d0_input,
            dinf_target,
            dinf_input_smoothed,
            d0_target_smoothed,
        }),
    })
}
