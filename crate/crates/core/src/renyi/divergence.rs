//! Classical Rényi divergences and entropies on the whole extended α line.
//!
//! `D_α(p‖q) = sgn(α)/(α−1) · log Σ_i p_i^α q_i^{1−α}` with `sgn(α) = 1` for
//! `α ≥ 0` and `−1` otherwise.  The points `α ∈ {−∞, 0, 1, ∞}` use their
//! closed forms.  All logarithms are natural.

use crate::base::{check_alpha, ExtendedReal, ProbDist, Weights};
use crate::error::{check_dim, Error, Result};

/// `sgn(α)` as used by the divergence family: `1` for `α ≥ 0`, else `−1`.
pub fn sgn(alpha: f64) -> f64 {
    if alpha >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// `D_α(p‖q)`; `p` may be sub-normalized.
pub fn divergence<W: Weights + ?Sized>(p: &W, q: &ProbDist, alpha: f64) -> Result<ExtendedReal> {
    check_dim(q.dim(), p.dim())?;
    check_alpha(alpha)?;
    Ok(divergence_weights(p.weights(), q.weights(), alpha))
}

/// `H_α(p) = sgn(α)/(1−α) · log Σ p_i^α`.
pub fn entropy<W: Weights + ?Sized>(p: &W, alpha: f64) -> Result<ExtendedReal> {
    check_alpha(alpha)?;
    Ok(entropy_weights(p.weights(), alpha))
}

/// Both sides of `α·sgn(1−α)·D_{1−α}(p‖q) = (1−α)·sgn(α)·D_α(q‖p)`.
pub fn symmetry_check(
    p: &ProbDist,
    q: &ProbDist,
    alpha: f64,
) -> Result<(ExtendedReal, ExtendedReal)> {
    check_dim(p.dim(), q.dim())?;
    check_alpha(alpha)?;
    if alpha == 0.0 || alpha == 1.0 || alpha.is_infinite() {
        return Err(Error::InvalidParameter(format!(
            "symmetry relation needs a finite α outside {{0, 1}}, got {alpha}"
        )));
    }
    let lhs = divergence_weights(p.weights(), q.weights(), 1.0 - alpha).scale(alpha * sgn(1.0 - alpha));
    let rhs = divergence_weights(q.weights(), p.weights(), alpha).scale((1.0 - alpha) * sgn(alpha));
    Ok((lhs, rhs))
}

/// Slice form of [`divergence`].
///
/// # Panics
/// Panics if the slices differ in length or `alpha` is `NaN`.
pub fn divergence_weights(p: &[f64], q: &[f64], alpha: f64) -> ExtendedReal {
    assert_eq!(p.len(), q.len(), "divergence needs equal dimensions");
    assert!(!alpha.is_nan(), "α must not be NaN");
    if alpha == f64::INFINITY {
        return max_divergence(p, q);
    }
    if alpha == f64::NEG_INFINITY {
        return max_divergence(q, p);
    }
    if alpha == 0.0 {
        return zero_divergence(p, q);
    }
    if alpha == 1.0 {
        return relative_entropy(p, q);
    }

    // Log-terms ln(p_i^α q_i^{1−α}) of the non-vanishing summands.
    let mut logs = Vec::with_capacity(p.len());
    let mut base = 0.0;
    let mut ratios = Vec::with_capacity(p.len());
    for (&pi, &qi) in p.iter().zip(q) {
        if pi == 0.0 && qi == 0.0 {
            continue;
        }
        if pi == 0.0 {
            if alpha < 0.0 {
                return ExtendedReal::PosInf;
            }
            continue;
        }
        if qi == 0.0 {
            if alpha > 1.0 {
                return ExtendedReal::PosInf;
            }
            continue;
        }
        let l = (qi / pi).ln();
        logs.push(pi.ln() + (1.0 - alpha) * l);
        base += pi;
        ratios.push((pi, l));
    }
    if logs.is_empty() {
        // Σ = 0, log Σ = −∞.
        return ExtendedReal::NegInf.scale(sgn(alpha) / (alpha - 1.0));
    }
    let t = 1.0 - alpha;
    let k = if t.abs() < 1e-3 {
        // Σ p_i e^{tℓ_i} = base · (1 + Σ p_i expm1(tℓ_i)/base); keeps the
        // O(t) cancellation near α = 1 exact.  For a normalized `p` the
        // support mass is measured against the total so that rounding in
        // the normalization is not amplified by 1/t.
        let s: f64 = ratios.iter().map(|&(pi, l)| pi * (t * l).exp_m1()).sum();
        let total: f64 = p.iter().sum();
        let log_base = if (total - 1.0).abs() <= 1e-12 { (base / total).ln() } else { base.ln() };
        log_base + (s / base).ln_1p()
    } else {
        log_sum_exp(&logs)
    };
    ExtendedReal::from_f64(sgn(alpha) * k / (alpha - 1.0))
}

/// Slice form of [`entropy`], via `H_α(p) = sgn(α)·log n − D_α(p‖η_n)`.
pub fn entropy_weights(p: &[f64], alpha: f64) -> ExtendedReal {
    let n = p.len();
    let eta = vec![1.0 / n as f64; n];
    let d = divergence_weights(p, &eta, alpha);
    ExtendedReal::from_f64(sgn(alpha) * (n as f64).ln()) - d
}

/// Shannon entropy in nats.
pub fn shannon(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum()
}

/// `D_∞(p‖q) = log max_i p_i/q_i`.
fn max_divergence(p: &[f64], q: &[f64]) -> ExtendedReal {
    p.iter()
        .zip(q)
        .map(|(&a, &b)| ExtendedReal::ratio(a, b))
        .max()
        .unwrap_or(ExtendedReal::ZERO)
        .ln()
}

/// `D_0(p‖q) = −log Σ_{i: p_i ≠ 0} q_i`.
fn zero_divergence(p: &[f64], q: &[f64]) -> ExtendedReal {
    let s: f64 = p.iter().zip(q).filter(|(&a, _)| a > 0.0).map(|(_, &b)| b).sum();
    -ExtendedReal::ln_of(s)
}

/// `D_1(p‖q) = Σ p_i log(p_i/q_i)`.
fn relative_entropy(p: &[f64], q: &[f64]) -> ExtendedReal {
    let mut acc = 0.0;
    for (&a, &b) in p.iter().zip(q) {
        if a == 0.0 {
            continue;
        }
        if b == 0.0 {
            return ExtendedReal::PosInf;
        }
        acc += a * (a / b).ln();
    }
    ExtendedReal::from_f64(acc)
}

pub(crate) fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}
