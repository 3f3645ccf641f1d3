//! Smoothed entropies and divergences.
//!
//! Each function returns a sub-normalized distribution obtained by removing
//! probability mass from its input, together with the smoothed quantity.
//! The removed mass is at most `eps`, so every output lies in the `ε`-ball
//! around the input.

use super::divergence::divergence_weights;
use crate::base::{ExtendedReal, ProbDist, SubDist, Weights};
use crate::error::{check_dim, Error, Result};

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("smoothing parameter must lie in (0,1), got {eps}")))
    }
}

/// The correction term `log(1/ε)/|α − 1|` of the smoothing inequalities.
pub fn smoothing_correction(eps: f64, alpha: f64) -> f64 {
    (1.0 / eps).ln() / (alpha - 1.0).abs()
}

/// Removes the largest ascending prefix of `order` whose `mass` is at most `eps`.
fn cut_prefix(weights: &[f64], order: &[usize], eps: f64) -> Vec<f64> {
    let mut out = weights.to_vec();
    let mut cut = 0.0;
    for &i in order {
        if cut + weights[i] > eps {
            break;
        }
        cut += weights[i];
        out[i] = 0.0;
    }
    out
}

/// Smoothed max-entropy: cuts the smallest probabilities up to total mass
/// `eps` and returns the result with its `H_0 = log rank`.
pub fn smooth_h0(p: &ProbDist, eps: f64) -> Result<(SubDist, ExtendedReal)> {
    check_eps(eps)?;
    let w = p.weights();
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| w[a].total_cmp(&w[b]).then(a.cmp(&b)));
    let cut = SubDist::new(cut_prefix(w, &order, eps))?;
    let h0 = ExtendedReal::ln_of(cut.rank() as f64);
    Ok((cut, h0))
}

/// Smoothed min-entropy: levels the largest probabilities down to a common
/// ceiling `c`, removing exactly `eps` in total, and returns `H_∞ = −log c`.
pub fn smooth_hinf(p: &ProbDist, eps: f64) -> Result<(SubDist, ExtendedReal)> {
    check_eps(eps)?;
    let c = water_level(&p.sorted_desc(), eps);
    let leveled = p.weights().iter().map(|&w| w.min(c)).collect();
    Ok((SubDist::new(leveled)?, -ExtendedReal::ln_of(c)))
}

/// Ceiling `c` with `Σ_i (w_i − c)_+ = eps` for `w` sorted non-increasingly.
fn water_level(w: &[f64], eps: f64) -> f64 {
    let mut top = 0.0;
    for k in 0..w.len() {
        top += w[k];
        let c = (top - eps) / (k + 1) as f64;
        let next = w.get(k + 1).copied().unwrap_or(0.0);
        if c >= next {
            return c;
        }
    }
    (top - eps) / w.len() as f64
}

/// Smoothed max-divergence: with `Z_δ = {i : p_i/q_i ≥ δ}`, sets
/// `p′_i = δ q_i` on `Z_δ` where `δ` is chosen so that the removed mass
/// `Σ_{Z_δ}(p_i − δ q_i)` equals `eps`.  Returns `D_∞(p′‖q) = log δ`.
///
/// The removed mass is piecewise linear in `δ`, so `δ` is found exactly on
/// the segment between consecutive likelihood ratios.
pub fn smooth_d_inf(p: &ProbDist, q: &ProbDist, eps: f64) -> Result<(SubDist, ExtendedReal)> {
    check_dim(p.dim(), q.dim())?;
    check_eps(eps)?;
    let (pw, qw) = (p.weights(), q.weights());
    if let Some(i) = (0..pw.len()).find(|&i| pw[i] > 0.0 && qw[i] == 0.0) {
        return Err(Error::Support(format!(
            "p has weight at index {i} where q vanishes"
        )));
    }
    let mut idx: Vec<usize> = (0..pw.len()).filter(|&i| qw[i] > 0.0).collect();
    let ratio = |i: usize| pw[i] / qw[i];
    idx.sort_by(|&a, &b| ratio(b).total_cmp(&ratio(a)).then(a.cmp(&b)));
    let (mut ps, mut qs) = (0.0, 0.0);
    let mut delta = 0.0;
    for (k, &i) in idx.iter().enumerate() {
        ps += pw[i];
        qs += qw[i];
        let d = (ps - eps) / qs;
        let next = idx.get(k + 1).map_or(0.0, |&j| ratio(j));
        if d >= next {
            delta = d;
            break;
        }
    }
    let smoothed = pw
        .iter()
        .zip(qw)
        .map(|(&a, &b)| a.min(delta * b))
        .collect();
    Ok((SubDist::new(smoothed)?, ExtendedReal::ln_of(delta)))
}

/// Smoothed zero-divergence: orders the support by ascending likelihood
/// ratio `p_i/q_i` and cuts the largest prefix of `p`-mass at most `eps`.
/// Returns `D_0(p′‖q) = −log Σ_{kept} q_i`.
pub fn smooth_d0(p: &ProbDist, q: &ProbDist, eps: f64) -> Result<(SubDist, ExtendedReal)> {
    check_dim(p.dim(), q.dim())?;
    check_eps(eps)?;
    let (pw, qw) = (p.weights(), q.weights());
    let mut idx: Vec<usize> = (0..pw.len()).filter(|&i| pw[i] > 0.0).collect();
    let ratio = |i: usize| ExtendedReal::ratio(pw[i], qw[i]);
    idx.sort_by(|&a, &b| ratio(a).cmp(&ratio(b)).then(a.cmp(&b)));
    let cut = SubDist::new(cut_prefix(pw, &idx, eps))?;
    let d0 = divergence_weights(cut.weights(), qw, 0.0);
    Ok((cut, d0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(w: &[f64]) -> ProbDist {
        ProbDist::new(w.to_vec()).unwrap()
    }

    #[test]
    fn h0_examples() {
        let (s, h) = smooth_h0(&pd(&[0.5, 0.3, 0.15, 0.05]), 0.05).unwrap();
        assert_eq!(s.weights(), &[0.5, 0.3, 0.15, 0.0]);
        assert!((h.to_f64() - 3f64.ln()).abs() < 1e-15);
        let (s, h) = smooth_h0(&pd(&[0.5, 0.3, 0.2]), 0.1).unwrap();
        assert_eq!(s.rank(), 3);
        assert!((h.to_f64() - 3f64.ln()).abs() < 1e-15);
        let (_, h) = smooth_h0(&ProbDist::uniform(4), 0.3).unwrap();
        assert!((h.to_f64() - 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn hinf_examples() {
        let (s, h) = smooth_hinf(&pd(&[1.0, 0.0]), 0.25).unwrap();
        assert_eq!(s.weights(), &[0.75, 0.0]);
        assert!((h.to_f64() + 0.75f64.ln()).abs() < 1e-15);
        let (s, h) = smooth_hinf(&pd(&[0.6, 0.4]), 0.2).unwrap();
        assert!((s.weights()[0] - 0.4).abs() < 1e-15 && (s.weights()[1] - 0.4).abs() < 1e-15);
        assert!((h.to_f64() + 0.4f64.ln()).abs() < 1e-15);
        // A flat distribution is lowered uniformly.
        let (s, h) = smooth_hinf(&ProbDist::uniform(4), 0.2).unwrap();
        assert!((s.total() - 0.8).abs() < 1e-15);
        assert!((h.to_f64() + 0.2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn d_inf_examples() {
        let p = pd(&[1.0, 0.0]);
        let q = pd(&[0.5, 0.5]);
        let (s, d) = smooth_d_inf(&p, &q, 0.5).unwrap();
        assert_eq!(s.weights(), &[0.5, 0.0]);
        assert!(d.to_f64().abs() < 1e-15);
        let (s, d) = smooth_d_inf(&q, &q, 1e-3).unwrap();
        assert!((s.total() - (1.0 - 1e-3)).abs() < 1e-15);
        assert!((d.to_f64() - (1.0f64 - 1e-3).ln()).abs() < 1e-15);
        assert!(smooth_d_inf(&q, &p, 0.1).is_err());
    }

    #[test]
    fn d0_examples() {
        let p = pd(&[0.05, 0.95]);
        let q = pd(&[0.5, 0.5]);
        let (s, d) = smooth_d0(&p, &q, 0.1).unwrap();
        assert_eq!(s.weights(), &[0.0, 0.95]);
        assert!((d.to_f64() + 0.5f64.ln()).abs() < 1e-15);
        let (s, d) = smooth_d0(&p, &q, 0.01).unwrap();
        assert_eq!(s.weights(), p.weights());
        assert!(d.to_f64().abs() < 1e-15);
    }
}
