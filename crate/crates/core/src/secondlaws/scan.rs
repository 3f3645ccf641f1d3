//! Numerical infimum of an α-indexed gap function.
//!
//! The gap is evaluated at the closed-form points, on a fixed grid that
//! resolves both ends of the α line, and then refined by golden-section
//! search around every grid-local minimum.

use crate::base::ExtendedReal;
use serde::{Deserialize, Serialize};

/// Which orders α a check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// All real α, the condition for exact catalysis.
    ExactAllAlpha,
    /// `α ≥ 0`, the condition when a pure qubit may be borrowed.
    NonnegAlpha,
}

/// A sampled value of the gap.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaSample {
    pub alpha: ExtendedReal,
    pub gap: ExtendedReal,
}

/// α-tolerance of the golden-section refinement.
pub const ALPHA_TOL: f64 = 1e-6;

fn positive_grid() -> Vec<f64> {
    let mut g = vec![
        0.0, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0,
        6.0, 8.0, 12.0, 16.0, 24.0, 32.0, 64.0, 128.0, 256.0, 1024.0, f64::INFINITY,
    ];
    g.extend((1..19).map(|k| 2.0 * k as f64 / 19.0));
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

fn negative_grid() -> Vec<f64> {
    vec![
        f64::NEG_INFINITY, -1024.0, -256.0, -64.0, -32.0, -16.0, -8.0, -4.0, -2.0, -1.0, -0.5,
        -0.25, -0.1, -0.05, -1e-2, -1e-3, -1e-4, -1e-5, -1e-6,
    ]
}

/// Samples `f` over one side of the α line and refines its local minima.
fn scan_side<F: Fn(f64) -> ExtendedReal>(f: &F, grid: &[f64]) -> Vec<AlphaSample> {
    let vals: Vec<ExtendedReal> = grid.iter().map(|&a| f(a)).collect();
    let mut out: Vec<(f64, ExtendedReal)> = grid.iter().copied().zip(vals.iter().copied()).collect();
    for i in 1..grid.len().saturating_sub(1) {
        let (a, b) = (grid[i - 1], grid[i + 1]);
        if !a.is_finite() || !b.is_finite() || !vals[i].is_finite() {
            continue;
        }
        if vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1] {
            let (x, fx) = golden_section(|t| f(t).to_f64(), a, b);
            out.push((x, ExtendedReal::from_f64(fx)));
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out.into_iter().map(|(a, g)| AlphaSample { alpha: ExtendedReal::from_f64(a), gap: g }).collect()
}

/// Minimizes a unimodal-on-bracket function to α-tolerance [`ALPHA_TOL`].
fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a) <= ALPHA_TOL * c.abs().max(1.0) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Samples for `α ≥ 0` (with `α = 0` the closed-form right limit).
pub fn scan_nonnegative<F: Fn(f64) -> ExtendedReal>(f: &F) -> Vec<AlphaSample> {
    scan_side(f, &positive_grid())
}

/// Samples for `α < 0`.
pub fn scan_negative<F: Fn(f64) -> ExtendedReal>(f: &F) -> Vec<AlphaSample> {
    scan_side(f, &negative_grid())
}

/// The sample with the smallest gap (first one on ties).
pub fn argmin(samples: &[AlphaSample]) -> Option<AlphaSample> {
    samples.iter().copied().reduce(|best, s| if s.gap < best.gap { s } else { best })
}

/// `a − b` for a free-energy comparison: `∞ − ∞` is treated as `+∞`, since
/// both sides diverging leaves the inequality `a ≥ b` intact.
pub fn gap_of(a: ExtendedReal, b: ExtendedReal) -> ExtendedReal {
    a.checked_sub(b).unwrap_or(ExtendedReal::PosInf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_interior_minimum() {
        let (x, fx) = golden_section(|t| (t - 0.3).powi(2) - 1.0, 0.0, 1.0);
        assert!((x - 0.3).abs() < 1e-5);
        assert!((fx + 1.0).abs() < 1e-10);
    }

    #[test]
    fn scan_refines_between_grid_points() {
        let f = |a: f64| ExtendedReal::from_f64(if a.is_infinite() { 1.0 } else { (a - 0.33).powi(2) });
        let s = scan_nonnegative(&f);
        let m = argmin(&s).unwrap();
        assert!((m.alpha.to_f64() - 0.33).abs() < 1e-5);
    }
}
