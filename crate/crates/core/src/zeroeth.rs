//! Passivity, complete passivity and population-inversion work extraction.
//!
//! A state diagonal in the energy basis is passive iff `E_i > E_j` implies
//! `p_i ≤ p_j`: no unitary lowers its energy.  It is completely passive iff
//! every tensor power is passive, which singles out Gibbs and ground states.
//! Completeness can only be checked up to a finite number of copies, so
//! reports carry the number of copies examined.
//!
//! Indices in reports are 0-based.

use crate::base::{Hamiltonian, ProbDist, Weights, TOL};
use crate::error::{check_dim, Error, Result};
use crate::quantum::DEGENERACY_TOL;
use crate::sampling::seeded_rng;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Largest tensor-power dimension scanned by [`is_completely_passive`].
pub const MAX_PASSIVITY_DIM: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PassivityReport {
    /// Passive for every number of copies up to `n_checked`.
    pub passive: bool,
    /// A pair `(i, j)` with `E_i > E_j` and `p_i > p_j`, indexing the
    /// `n_checked`-fold tensor power.  Present iff not passive.
    pub witness: Option<(usize, usize)>,
    /// Number of copies examined; for a failure, the first failing power.
    pub n_checked: usize,
}

/// Finds `(i, j)` with `E_i > E_j` and `p_i > p_j`.
fn find_inversion(p: &[f64], e: &[f64]) -> Option<(usize, usize)> {
    let mut idx: Vec<usize> = (0..e.len()).collect();
    idx.sort_by(|&a, &b| e[a].total_cmp(&e[b]));
    // Smallest population among strictly lower energies seen so far.
    let mut lower_min: Option<usize> = None;
    let mut start = 0;
    while start < idx.len() {
        let mut end = start + 1;
        while end < idx.len() && e[idx[end]] - e[idx[end - 1]] <= DEGENERACY_TOL {
            end += 1;
        }
        let group = &idx[start..end];
        if let Some(j) = lower_min {
            if let Some(&i) = group.iter().find(|&&i| p[i] > p[j] + TOL) {
                return Some((i, j));
            }
        }
        for &i in group {
            if lower_min.is_none_or(|j| p[i] < p[j]) {
                lower_min = Some(i);
            }
        }
        start = end;
    }
    None
}

/// Checks passivity of the diagonal state `p` for Hamiltonian `h`.
pub fn is_passive(p: &ProbDist, h: &Hamiltonian) -> Result<PassivityReport> {
    check_dim(h.dim(), p.dim())?;
    let witness = find_inversion(p.weights(), h.levels());
    Ok(PassivityReport { passive: witness.is_none(), witness, n_checked: 1 })
}

/// Checks passivity of `p^{⊗n}` for `n = 1..=n_max`, stopping at the first
/// failure.
pub fn is_completely_passive(p: &ProbDist, h: &Hamiltonian, n_max: usize) -> Result<PassivityReport> {
    check_dim(h.dim(), p.dim())?;
    if n_max == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let d = p.dim() as u128;
    match d.checked_pow(n_max as u32) {
        Some(x) if x <= MAX_PASSIVITY_DIM as u128 => {}
        _ => return Err(Error::TooLarge { size: usize::MAX, limit: MAX_PASSIVITY_DIM }),
    }
    let base = p.to_float();
    let (mut pn, mut hn) = (base.clone(), h.clone());
    for n in 1..=n_max {
        if n > 1 {
            pn = pn.tensor(&base);
            hn = hn.tensor(h);
        }
        if let Some(w) = find_inversion(pn.weights(), hn.levels()) {
            return Ok(PassivityReport { passive: false, witness: Some(w), n_checked: n });
        }
    }
    Ok(PassivityReport { passive: true, witness: None, n_checked: n_max })
}

/// Result of the many-copy extraction Monte Carlo.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtractionReport {
    pub m: usize,
    pub trials: usize,
    pub alpha: f64,
    /// Extracted work per copy averaged over all trials.
    pub mean_work: f64,
    /// `(p_i − p_j)(E_i − E_j)`, the expected work per copy.
    pub expected_work: f64,
    /// Standard error of `mean_work`.
    pub std_error: f64,
    /// Fraction of trials with `x ≤ ⟨x⟩ − α·m`.
    pub empirical_tail: f64,
    /// `exp(−α²m/2)`.
    pub hoeffding_bound: f64,
    /// Binomial standard error of a tail frequency at the bound.
    pub tail_std_error: f64,
}

/// Simulates the population-inversion protocol on `m` copies, `trials`
/// times.
///
/// Each copy contributes `+1` with probability `p_i` (the swap `i → j`
/// releases `E_i − E_j`), `−1` with probability `p_j`, and `0` otherwise.
/// The total `x` over `m` copies gives work `x·(E_i − E_j)`.  Requires
/// `E_i > E_j` and `p_i ≥ p_j`.
#[allow(clippy::too_many_arguments)]
pub fn extraction_simulation(
    p: &ProbDist,
    h: &Hamiltonian,
    i: usize,
    j: usize,
    m: usize,
    alpha: f64,
    trials: usize,
    seed: u64,
) -> Result<ExtractionReport> {
    check_dim(h.dim(), p.dim())?;
    let d = p.dim();
    if i >= d || j >= d {
        return Err(Error::InvalidParameter(format!("indices ({i}, {j}) out of range for dimension {d}")));
    }
    if m == 0 || trials == 0 {
        return Err(Error::InvalidParameter("need m ≥ 1 copies and at least one trial".into()));
    }
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter(format!("deviation α must be finite and ≥ 0, got {alpha}")));
    }
    let (pi, pj) = (p.weights()[i], p.weights()[j]);
    let (ei, ej) = (h.levels()[i], h.levels()[j]);
    if ei <= ej || pi < pj {
        return Err(Error::Precondition(format!(
            "extraction needs E_i > E_j and p_i ≥ p_j, got E = ({ei}, {ej}), p = ({pi}, {pj})"
        )));
    }
    let gap = ei - ej;
    let mean_x = m as f64 * (pi - pj);
    let threshold = mean_x - alpha * m as f64;
    let mut rng = seeded_rng(seed);
    let (mut total, mut tail_hits) = (0i64, 0usize);
    for _ in 0..trials {
        let mut x = 0i64;
        for _ in 0..m {
            let u: f64 = rng.gen();
            if u < pi {
                x += 1;
            } else if u < pi + pj {
                x -= 1;
            }
        }
        total += x;
        if (x as f64) <= threshold {
            tail_hits += 1;
        }
    }
    let copies = (m * trials) as f64;
    let variance = pi + pj - (pi - pj).powi(2);
    let hoeffding_bound = (-alpha * alpha * m as f64 / 2.0).exp();
    Ok(ExtractionReport {
        m,
        trials,
        alpha,
        mean_work: total as f64 * gap / copies,
        expected_work: (pi - pj) * gap,
        std_error: gap * (variance / copies).sqrt(),
        empirical_tail: tail_hits as f64 / trials as f64,
        hoeffding_bound,
        tail_std_error: (hoeffding_bound * (1.0 - hoeffding_bound) / trials as f64).sqrt(),
    })
}
