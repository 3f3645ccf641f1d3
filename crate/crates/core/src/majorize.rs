//! Majorization and thermo-majorization.
//!
//! A thermo-majorization curve accumulates `(e^{−βE_i}, p_i)` in β-order,
//! giving a concave piecewise-linear curve from `(0,0)` to `(Z,1)`.  One
//! state can be mapped to another by a Gibbs-preserving channel exactly when
//! its curve lies on or above the other's.

use crate::base::thermal::beta_order_weights;
use crate::base::{Hamiltonian, ProbDist, ThermalContext, Weights, TOL};
use crate::error::{check_dim, Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// `x ≻ y`: every partial sum of `x↓` dominates that of `y↓`, totals equal.
///
/// The shorter vector is padded with zeros.  If both inputs are exact the
/// comparison is exact; otherwise it uses tolerance [`TOL`].
pub fn majorizes(x: &ProbDist, y: &ProbDist) -> bool {
    let n = x.dim().max(y.dim());
    let (x, y) = (x.pad(n), y.pad(n));
    match (x.exact(), y.exact()) {
        (Some(a), Some(b)) => majorizes_exact(a, b),
        _ => majorizes_weights(x.weights(), y.weights(), TOL),
    }
}

/// Float majorization test on equal-length weight vectors.
pub fn majorizes_weights(x: &[f64], y: &[f64], tol: f64) -> bool {
    assert_eq!(x.len(), y.len(), "majorization needs equal dimensions");
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| b.total_cmp(a));
    ys.sort_by(|a, b| b.total_cmp(a));
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx < sy - tol {
            return false;
        }
    }
    (sx - sy).abs() <= tol
}

fn majorizes_exact(x: &[BigRational], y: &[BigRational]) -> bool {
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| b.cmp(a));
    ys.sort_by(|a, b| b.cmp(a));
    let (mut sx, mut sy) = (BigRational::zero(), BigRational::zero());
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx < sy {
            return false;
        }
    }
    sx == sy
}

/// A β-ordered Lorenz curve: breakpoints `(Σ e^{−βE}, Σ p)` from `(0,0)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThermoCurve {
    points: Vec<(f64, f64)>,
}

impl ThermoCurve {
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// The horizontal extent, `Z` for an unscaled curve.
    pub fn extent(&self) -> f64 {
        self.points.last().map_or(0.0, |p| p.0)
    }

    /// Piecewise-linear interpolation; constant beyond the last breakpoint.
    pub fn eval(&self, x: f64) -> f64 {
        let pts = &self.points;
        if x <= 0.0 {
            return 0.0;
        }
        // First breakpoint with abscissa ≥ x.
        let k = pts.partition_point(|p| p.0 < x);
        if k == pts.len() {
            return pts[k - 1].1;
        }
        let (x1, y1) = pts[k];
        if x1 == x {
            // Coincident abscissae (zero-width segments) keep the largest y.
            return pts[k..]
                .iter()
                .take_while(|p| p.0 == x)
                .map(|p| p.1)
                .fold(y1, f64::max);
        }
        let (x0, y0) = pts[k - 1];
        if x1 <= x0 {
            return y1.max(y0);
        }
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Multiplies every abscissa by `e^{−βW}`, the effect of supplying work
    /// `W` through a pure battery state.
    pub fn scale_by_work(&self, w: f64, ctx: &ThermalContext) -> ThermoCurve {
        let s = (-ctx.beta * w).exp();
        ThermoCurve { points: self.points.iter().map(|&(x, y)| (x * s, y)).collect() }
    }
}

/// The thermo-majorization curve of `p` with respect to `h` at `ctx`.
pub fn thermo_curve(p: &ProbDist, h: &Hamiltonian, ctx: &ThermalContext) -> Result<ThermoCurve> {
    check_dim(p.dim(), h.dim())?;
    Ok(curve_from_weights(p.weights(), h.levels(), ctx.beta))
}

pub(crate) fn curve_from_weights(p: &[f64], e: &[f64], beta: f64) -> ThermoCurve {
    // Boltzmann factors relative to the ground level avoid overflow; the
    // common factor e^{−βE_min} is restored at the end.
    let emin = e.iter().copied().fold(f64::INFINITY, f64::min);
    let shift = (-beta * emin).exp();
    let mut points = Vec::with_capacity(p.len() + 1);
    points.push((0.0, 0.0));
    let (mut x, mut y) = (0.0, 0.0);
    for i in beta_order_weights(p, e, beta) {
        x += (-beta * (e[i] - emin)).exp();
        y += p[i];
        points.push((x * shift, y));
    }
    ThermoCurve { points }
}

/// Whether curve `a` lies on or above curve `b` within [`TOL`].
pub fn curve_dominates(a: &ThermoCurve, b: &ThermoCurve) -> Result<bool> {
    curve_dominates_tol(a, b, TOL)
}

/// [`curve_dominates`] with an explicit tolerance.
///
/// Both curves are piecewise linear, so comparing them on the union of their
/// breakpoints decides dominance everywhere.
pub fn curve_dominates_tol(a: &ThermoCurve, b: &ThermoCurve, tol: f64) -> Result<bool> {
    let (za, zb) = (a.extent(), b.extent());
    if (za - zb).abs() > TOL * za.max(zb).max(1.0) {
        return Err(Error::InvalidParameter(format!(
            "curves have different extents {za} and {zb}"
        )));
    }
    let ok = a
        .points
        .iter()
        .chain(&b.points)
        .all(|&(x, _)| a.eval(x) >= b.eval(x) - tol);
    Ok(ok)
}

/// Thermo-majorization of `p` over `p′` for a shared Hamiltonian.
pub fn thermo_majorizes(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
) -> Result<bool> {
    curve_dominates(&thermo_curve(p, h, ctx)?, &thermo_curve(p_prime, h, ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::gibbs_state;

    fn pd(w: &[f64]) -> ProbDist {
        ProbDist::new(w.to_vec()).unwrap()
    }

    fn ctx() -> ThermalContext {
        ThermalContext::new(1.0).unwrap()
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&pd(&[1.0, 0.0]), &pd(&[0.5, 0.5])));
        let p = ProbDist::from_rational_strs(&["2/5", "2/5", "1/10", "1/10"]).unwrap();
        let q = ProbDist::from_rational_strs(&["1/2", "1/4", "1/4", "0"]).unwrap();
        assert!(!majorizes(&p, &q) && !majorizes(&q, &p));
        let r = ProbDist::from_rational_strs(&["3/5", "2/5"]).unwrap();
        assert!(majorizes(&q.tensor(&r), &p.tensor(&r)));
        // Padding: a 2-outcome pure state majorizes any 3-outcome state.
        assert!(majorizes(&pd(&[1.0, 0.0]), &pd(&[0.2, 0.3, 0.5])));
    }

    #[test]
    fn curve_examples() {
        let flat = Hamiltonian::trivial(3);
        let c = thermo_curve(&pd(&[0.2, 0.5, 0.3]), &flat, &ctx()).unwrap();
        let xs: Vec<f64> = c.points().iter().map(|p| p.0).collect();
        assert_eq!(xs, vec![0.0, 1.0, 2.0, 3.0]);

        let h = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
        let c = thermo_curve(&pd(&[1.0, 0.0]), &h, &ctx()).unwrap();
        let e = (-1.0f64).exp();
        assert_eq!(c.points(), &[(0.0, 0.0), (1.0, 1.0), (1.0 + e, 1.0)]);

        let h = Hamiltonian::new(vec![0.0, 0.7, 1.9]).unwrap();
        let g = gibbs_state(&h, &ctx());
        let c = thermo_curve(&g, &h, &ctx()).unwrap();
        let z = c.extent();
        for &(x, y) in c.points() {
            assert!((y - x / z).abs() < 1e-14);
        }
    }

    #[test]
    fn dominance() {
        let h = Hamiltonian::new(vec![0.0, 0.4, 1.3]).unwrap();
        let g = gibbs_state(&h, &ctx());
        let p = pd(&[0.1, 0.7, 0.2]);
        let cp = thermo_curve(&p, &h, &ctx()).unwrap();
        let cg = thermo_curve(&g, &h, &ctx()).unwrap();
        assert!(curve_dominates(&cp, &cp).unwrap());
        assert!(curve_dominates(&cp, &cg).unwrap());
        assert!(!curve_dominates(&cg, &cp).unwrap());
        let other = thermo_curve(&p, &Hamiltonian::trivial(3), &ctx()).unwrap();
        assert!(curve_dominates(&cp, &other).is_err());
    }

    #[test]
    fn work_scaling() {
        let h = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
        let c = thermo_curve(&pd(&[0.3, 0.7]), &h, &ctx()).unwrap();
        assert_eq!(c.scale_by_work(0.0, &ctx()), c);
        let s = c.scale_by_work(0.8, &ctx());
        assert!((s.extent() - c.extent() * (-0.8f64).exp()).abs() < 1e-15);
        let back = s.scale_by_work(-0.8, &ctx());
        for (a, b) in back.points().iter().zip(c.points()) {
            assert!((a.0 - b.0).abs() < 1e-14 && a.1 == b.1);
        }
    }
}
