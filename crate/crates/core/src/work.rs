//! Work accounting: the work distance, extractable work and work of
//! formation, Landauer erasure with a memory, wits and qubit batteries.
//!
//! All energies are in the units of the Hamiltonian; `kT = 1/β`.

use crate::base::{
    gibbs_state, ExtendedReal, Hamiltonian, ProbDist, ThermalContext, Weights, TOL,
};
use crate::error::{check_dim, Error, Result};
use crate::renyi::{divergence_weights, entropy_weights};
use crate::secondlaws::{check_transition, scan, CheckMode, TransitionReport};
use serde::{Deserialize, Serialize};

/// `D_work(p ≻ p′) = inf_{α>0} [F_α(p) − F_α(p′)]`, the largest work that can
/// be extracted (or, when negative, the least work that must be invested)
/// while turning `p` into `p′`.  The limit `α → 0⁺` is attained at the
/// closed-form point `α = 0`.
pub fn work_distance(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
) -> Result<ExtendedReal> {
    Ok(check_transition(p, p_prime, h, ctx, CheckMode::NonnegAlpha)?.margin)
}

/// Extractable work `kT·D_0(p‖γ)` when thermalizing `p`.
pub fn w_ext(p: &ProbDist, h: &Hamiltonian, ctx: &ThermalContext) -> Result<f64> {
    check_dim(h.dim(), p.dim())?;
    let g = gibbs_state(h, ctx);
    Ok(ctx.kt() * divergence_weights(p.weights(), g.weights(), 0.0).to_f64())
}

/// Work of formation `kT·D_∞(p‖γ)` of `p` from the thermal state.
pub fn w_cost(p: &ProbDist, h: &Hamiltonian, ctx: &ThermalContext) -> Result<f64> {
    check_dim(h.dim(), p.dim())?;
    let g = gibbs_state(h, ctx);
    Ok(ctx.kt() * divergence_weights(p.weights(), g.weights(), f64::INFINITY).to_f64())
}

/// Marginal over the first factor of a row-major `Q × S` joint distribution.
pub fn marginal_first(joint: &ProbDist, dq: usize, ds: usize) -> Result<Vec<f64>> {
    if dq * ds != joint.dim() || dq == 0 || ds == 0 {
        return Err(Error::InvalidParameter(format!(
            "joint of dimension {} does not factor as {dq} × {ds}",
            joint.dim()
        )));
    }
    let w = joint.weights();
    Ok((0..dq).map(|q| w[q * ds..(q + 1) * ds].iter().sum()).collect())
}

/// Work (in units of `kT`, natural log) to reset the system `S` of a joint
/// state over `Q × S` with access to the memory `Q`, for a trivial
/// Hamiltonian: `inf_{α≥0} [H_α(QS) − H_α(Q)]`.  A negative value means
/// work is gained.  The joint is indexed row-major, `q·dS + s`.
pub fn erasure_work(joint: &ProbDist, dims: (usize, usize)) -> Result<ExtendedReal> {
    let (dq, ds) = dims;
    let marg = marginal_first(joint, dq, ds)?;
    let f = |alpha: f64| {
        let hj = entropy_weights(joint.weights(), alpha);
        let hq = entropy_weights(&marg, alpha);
        scan::gap_of(hj, hq)
    };
    let samples = scan::scan_nonnegative(&f);
    Ok(scan::argmin(&samples).expect("non-empty grid").gap)
}

/// A two-level work storage system with energies `(0, W)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitSpec {
    pub w: f64,
}

impl WitSpec {
    pub fn new(w: f64) -> Result<Self> {
        if !w.is_finite() {
            return Err(Error::InvalidParameter(format!("wit energy must be finite, got {w}")));
        }
        Ok(Self { w })
    }

    pub fn hamiltonian(&self) -> Hamiltonian {
        Hamiltonian::new(vec![0.0, self.w]).expect("finite levels")
    }

    /// `τ_W = (|0⟩⟨0| + e^{−βW}|W⟩⟨W|)/(1 + e^{−βW})`.
    pub fn thermal_state(&self, ctx: &ThermalContext) -> ProbDist {
        gibbs_state(&self.hamiltonian(), ctx)
    }
}

/// Checks whether `p → p′` is possible while raising a wit from `|0⟩` to
/// `|W⟩` (for `W < 0`, while drawing `|W|` from it).  The wit is appended to
/// both states and the combined transition is checked over `α ≥ 0`; the
/// gap of the combined check is the gap of `p → p′` minus `W`.
pub fn wit_transition_check(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
    w: f64,
) -> Result<TransitionReport> {
    check_dim(h.dim(), p.dim())?;
    check_dim(h.dim(), p_prime.dim())?;
    let wit = WitSpec::new(w)?;
    let total_h = h.tensor(&wit.hamiltonian());
    let from = p.tensor(&ProbDist::pure(2, 0));
    let to = p_prime.tensor(&ProbDist::pure(2, 1));
    check_transition(&from, &to, &total_h, ctx, CheckMode::NonnegAlpha)
}

/// A register of `n_qubits` qubits with trivial Hamiltonian in which
/// `λ` qubits are maximally mixed and the rest pure.  The battery goes from
/// `λ1` to `λ2` mixed qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandauerBattery {
    pub n_qubits: usize,
    pub lambda1: usize,
    pub lambda2: usize,
}

/// Largest register handled by the battery constructions.
pub const MAX_BATTERY_QUBITS: usize = 12;

impl LandauerBattery {
    pub fn new(n_qubits: usize, lambda1: usize, lambda2: usize) -> Result<Self> {
        if n_qubits > MAX_BATTERY_QUBITS {
            return Err(Error::TooLarge { size: n_qubits, limit: MAX_BATTERY_QUBITS });
        }
        if lambda1 > n_qubits || lambda2 > n_qubits {
            return Err(Error::InvalidParameter(format!(
                "mixed-qubit counts ({lambda1}, {lambda2}) exceed the register size {n_qubits}"
            )));
        }
        Ok(Self { n_qubits, lambda1, lambda2 })
    }

    /// `|0…0⟩⟨0…0| ⊗ 2^{−λ}𝕀` as a distribution over `2^n` outcomes.
    pub fn register_state(n_qubits: usize, lambda: usize) -> ProbDist {
        let n = 1usize << n_qubits;
        let m = 1usize << lambda;
        ProbDist::uniform(m).pad(n)
    }

    pub fn initial(&self) -> ProbDist {
        Self::register_state(self.n_qubits, self.lambda1)
    }

    pub fn final_state(&self) -> ProbDist {
        Self::register_state(self.n_qubits, self.lambda2)
    }

    /// Net number of qubits purified, `λ1 − λ2`.
    pub fn gain(&self) -> i64 {
        self.lambda1 as i64 - self.lambda2 as i64
    }
}

/// `kT·ln 2·(λ1 − λ2)`: the work stored by purifying `λ1 − λ2` qubits.
pub fn landauer_bound(b: &LandauerBattery, ctx: &ThermalContext) -> f64 {
    ctx.kt() * std::f64::consts::LN_2 * b.gain() as f64
}

/// Checks `p ⊗ W_1 → p′ ⊗ W_2` with the battery appended, over `α ≥ 0`.
pub fn battery_transition_check(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
    battery: &LandauerBattery,
) -> Result<TransitionReport> {
    check_dim(h.dim(), p.dim())?;
    check_dim(h.dim(), p_prime.dim())?;
    let hb = h.tensor(&Hamiltonian::trivial(1 << battery.n_qubits));
    check_transition(
        &p.tensor(&battery.initial()),
        &p_prime.tensor(&battery.final_state()),
        &hb,
        ctx,
        CheckMode::NonnegAlpha,
    )
}

/// Comparison between the work distance and qubit-battery accounting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatteryEquivalence {
    pub work_distance: ExtendedReal,
    /// `⌊D_work / (kT ln 2)⌋`.
    pub predicted_gain: i64,
    /// Largest feasible `λ1 − λ2` found by sweeping batteries.
    pub max_feasible_gain: Option<i64>,
    pub n_qubits: usize,
    /// Bound of the best feasible battery, `kT ln 2 · max_feasible_gain`.
    pub best_bound: Option<f64>,
    /// The best bound does not exceed the work distance and is within one
    /// quantum `kT ln 2` of it, and the sweep agrees with the prediction.
    pub consistent: bool,
}

/// Sweeps `λ1 − λ2` over every battery of `n` qubits and compares the
/// largest feasible gain with the work distance.  `n` is chosen so that the
/// predicted gain lies strictly inside the sweep range.
pub fn battery_equivalence_check(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
) -> Result<BatteryEquivalence> {
    let wd = work_distance(p, p_prime, h, ctx)?;
    let quantum = ctx.kt() * std::f64::consts::LN_2;
    let ratio = wd.finite().ok_or_else(|| {
        Error::Precondition("work distance is infinite; no battery accounts for it".into())
    })? / quantum;
    let predicted = (ratio + TOL).floor() as i64;
    let n_qubits = (predicted.unsigned_abs() as usize + 1).max(1);
    if n_qubits > MAX_BATTERY_QUBITS {
        return Err(Error::TooLarge { size: n_qubits, limit: MAX_BATTERY_QUBITS });
    }
    let n = n_qubits as i64;
    let mut best = None;
    for k in -n..=n {
        let (l1, l2) = if k >= 0 { (k as usize, 0) } else { (0, (-k) as usize) };
        let b = LandauerBattery::new(n_qubits, l1, l2)?;
        if battery_transition_check(p, p_prime, h, ctx, &b)?.is_feasible() {
            best = Some(k);
        }
    }
    let best_bound = best.map(|k| quantum * k as f64);
    let wdf = wd.to_f64();
    let consistent = match best_bound {
        Some(b) => b <= wdf + TOL && wdf - b < quantum + TOL && best == Some(predicted),
        None => false,
    };
    Ok(BatteryEquivalence {
        work_distance: wd,
        predicted_gain: predicted,
        max_feasible_gain: best,
        n_qubits,
        best_bound,
        consistent,
    })
}
