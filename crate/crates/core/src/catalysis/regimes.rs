//! Regimes of approximately cyclic processes.
//!
//! A catalyst returned as `c_out` instead of `c_in` is classified by the
//! strongest of the following bounds that holds at accuracy `ε`:
//!
//! * exact: `c_out = c_in`;
//! * work-ε: the work needed to restore `c_in`, `−D_work(c_out ≻ c_in)`, is
//!   at most `ε`;
//! * extensive error: `‖c_in − c_out‖₁ ≤ ε/ln N` for catalyst dimension `N`;
//! * embezzling: `‖c_in − c_out‖₁ ≤ ε`.
//!
//! Each bound is tested with the comparison tolerance `1e−9`.

use crate::base::{ExtendedReal, Hamiltonian, ProbDist, ThermalContext, Weights, TOL};
use crate::error::{check_dim, Result};
use crate::work::work_distance;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Exact,
    WorkEps,
    ExtensiveError,
    Embezzling,
    /// None of the bounds holds at the given accuracy.
    NotApproximatelyCyclic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    /// `−D_work(c_out ≻ c_in)` in energy units.
    pub work_to_restore: ExtendedReal,
    /// `‖c_in − c_out‖₁`.
    pub trace_distance: f64,
    pub dim: usize,
    pub regime: Regime,
}

/// Classifies the returned catalyst `c_out` against the borrowed `c_in`.
pub fn classify_regime(
    c_in: &ProbDist,
    c_out: &ProbDist,
    h_c: &Hamiltonian,
    ctx: &ThermalContext,
    eps: f64,
) -> Result<RegimeReport> {
    check_dim(c_in.dim(), c_out.dim())?;
    check_dim(h_c.dim(), c_in.dim())?;
    let work_to_restore = -work_distance(c_out, c_in, h_c, ctx)?;
    let trace_distance = c_in.l1_distance(c_out);
    let dim = c_in.dim();
    let regime = if c_in.approx_eq(c_out, TOL) {
        Regime::Exact
    } else if work_to_restore <= ExtendedReal::from_f64(eps + TOL) {
        Regime::WorkEps
    } else if dim > 1 && trace_distance <= eps / (dim as f64).ln() + TOL {
        Regime::ExtensiveError
    } else if trace_distance <= eps + TOL {
        Regime::Embezzling
    } else {
        Regime::NotApproximatelyCyclic
    };
    Ok(RegimeReport { work_to_restore, trace_distance, dim, regime })
}
