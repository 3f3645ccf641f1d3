//! Linear-programming oracles for channel existence.
//!
//! [`lp_dmajorization`] decides whether one stochastic matrix maps `p → p′`
//! and `q → q′` simultaneously.  [`lp_nearest_image`] finds the channel that
//! fixes a given distribution and brings `p` as close as possible to a target
//! in `ℓ₁` distance.

use super::simplex::{solve, LinearProgram, LpStatus, SimplexOptions};
use super::StochasticMatrix;
use crate::base::{l1_distance, ProbDist, Weights};
use crate::error::{check_dim, Error, Result};
use crate::majorize::majorizes_weights;
use nalgebra::DMatrix;

/// Tolerance to which returned witnesses satisfy their constraints.
pub const WITNESS_TOL: f64 = 1e-8;

/// Outcome of a d-majorization query.
#[derive(Clone, Debug)]
pub enum DmajOutcome {
    Feasible(StochasticMatrix),
    Infeasible { phase_one_residual: f64 },
}

impl DmajOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, DmajOutcome::Feasible(_))
    }
}

/// Decides whether a stochastic `Λ` with `Λp = p′` and `Λq = q′` exists.
///
/// Infeasibility is certified by a phase-one optimum above `1e−8`.  A
/// returned witness has its columns renormalized and is re-checked against
/// both constraints; a witness that fails the re-check is a solver error.
pub fn lp_dmajorization(
    p: &ProbDist,
    q: &ProbDist,
    p_prime: &ProbDist,
    q_prime: &ProbDist,
) -> Result<DmajOutcome> {
    let d = p.dim();
    let d_out = p_prime.dim();
    check_dim(d, q.dim())?;
    check_dim(d_out, q_prime.dim())?;
    let var = |j: usize, i: usize| j * d + i;
    let mut lp = LinearProgram::feasibility(d * d_out);
    for i in 0..d {
        let coeffs: Vec<_> = (0..d_out).map(|j| (var(j, i), 1.0)).collect();
        lp.add_constraint(&coeffs, 1.0);
    }
    for (input, output) in [(p, p_prime), (q, q_prime)] {
        for j in 0..d_out {
            let coeffs: Vec<_> = (0..d).map(|i| (var(j, i), input.weights()[i])).collect();
            lp.add_constraint(&coeffs, output.weights()[j]);
        }
    }
    match solve(&lp, &SimplexOptions::default())? {
        LpStatus::Infeasible { phase_one_residual } => {
            Ok(DmajOutcome::Infeasible { phase_one_residual })
        }
        LpStatus::Unbounded => Err(Error::Solver("feasibility problem reported unbounded".into())),
        LpStatus::Optimal { x, .. } => {
            let w = StochasticMatrix::renormalized(DMatrix::from_fn(d_out, d, |j, i| x[var(j, i)]))?;
            for (input, output) in [(p, p_prime), (q, q_prime)] {
                let r = w.residual(input.weights(), output.weights());
                if r > WITNESS_TOL {
                    return Err(Error::Solver(format!("witness violates its constraints by {r}")));
                }
            }
            Ok(DmajOutcome::Feasible(w))
        }
    }
}

/// The closest reachable image of `p` to a target.
#[derive(Clone, Debug)]
pub struct NearestImage {
    pub image: ProbDist,
    pub l1_dist: f64,
    pub witness: StochasticMatrix,
}

/// Minimizes `‖Λp − target‖₁` over stochastic `Λ` with `Λ(fixed) = fixed`.
///
/// For a uniform `fixed` the channels are the bistochastic matrices and the
/// optimum is found by a dedicated majorization routine that scales to
/// dimensions in the hundreds; otherwise the general linear program of
/// [`lp_nearest_image_general`] is solved.
pub fn lp_nearest_image(p: &ProbDist, target: &ProbDist, fixed: &ProbDist) -> Result<NearestImage> {
    check_dim(p.dim(), target.dim())?;
    check_dim(p.dim(), fixed.dim())?;
    let n = p.dim() as f64;
    if fixed.weights().iter().all(|&w| (w - 1.0 / n).abs() <= 1e-12) {
        nearest_bistochastic_image(p, target)
    } else {
        lp_nearest_image_general(p, target, fixed)
    }
}

/// The general nearest-image linear program.
///
/// Variables are the entries of `Λ` and the positive and negative parts
/// `u, v ≥ 0` of the residual `Λp − target = u − v`; the objective is
/// `Σ(u + v)`.
pub fn lp_nearest_image_general(
    p: &ProbDist,
    target: &ProbDist,
    fixed: &ProbDist,
) -> Result<NearestImage> {
    let d = p.dim();
    check_dim(d, target.dim())?;
    check_dim(d, fixed.dim())?;
    let var = |j: usize, i: usize| j * d + i;
    let u = |j: usize| d * d + j;
    let v = |j: usize| d * d + d + j;
    let mut lp = LinearProgram::feasibility(d * d + 2 * d);
    for j in 0..d {
        lp.c[u(j)] = 1.0;
        lp.c[v(j)] = 1.0;
    }
    for i in 0..d {
        let coeffs: Vec<_> = (0..d).map(|j| (var(j, i), 1.0)).collect();
        lp.add_constraint(&coeffs, 1.0);
    }
    for j in 0..d {
        let coeffs: Vec<_> = (0..d).map(|i| (var(j, i), fixed.weights()[i])).collect();
        lp.add_constraint(&coeffs, fixed.weights()[j]);
    }
    for j in 0..d {
        let mut coeffs: Vec<_> = (0..d).map(|i| (var(j, i), p.weights()[i])).collect();
        coeffs.push((u(j), -1.0));
        coeffs.push((v(j), 1.0));
        lp.add_constraint(&coeffs, target.weights()[j]);
    }
    match solve(&lp, &SimplexOptions::default())? {
        LpStatus::Optimal { x, .. } => {
            let w = StochasticMatrix::renormalized(DMatrix::from_fn(d, d, |j, i| x[var(j, i)]))?;
            let r = w.residual(fixed.weights(), fixed.weights());
            if r > WITNESS_TOL {
                return Err(Error::Solver(format!("witness moves the fixed point by {r}")));
            }
            let image = w.apply(p)?;
            let l1_dist = image.l1_distance(target);
            Ok(NearestImage { image, l1_dist, witness: w })
        }
        other => Err(Error::Solver(format!("nearest-image program ended as {other:?}"))),
    }
}

/// Nearest bistochastic image via the flattest `ε`-approximation.
///
/// For a distribution `t` and radius `ε` in statistical distance, the
/// flattest element of the ball (remove `ε` from the top by leveling, add
/// `ε` at the bottom by filling) is majorized by every other element of the
/// ball.  So the optimal `ε` is the smallest one whose flattest
/// approximation of `target` is majorized by `p`; it is monotone and found
/// by bisection.  The witness is assembled from T-transforms.
fn nearest_bistochastic_image(p: &ProbDist, target: &ProbDist) -> Result<NearestImage> {
    const MAJ_TOL: f64 = 1e-13;
    let x = p.weights();
    let t = target.weights();
    let y = if majorizes_weights(x, t, MAJ_TOL) {
        t.to_vec()
    } else {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if majorizes_weights(x, &flattest(t, mid), MAJ_TOL) {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        flattest(t, hi)
    };
    let witness = bistochastic_witness(x, &y)?;
    let image = witness.apply(p)?;
    let l1_dist = image.l1_distance(target);
    Ok(NearestImage { image, l1_dist, witness })
}

/// The flattest distribution within statistical distance `eps` of `t`.
pub fn flattest(t: &[f64], eps: f64) -> Vec<f64> {
    let n = t.len();
    let mut desc = t.to_vec();
    desc.sort_by(|a, b| b.total_cmp(a));
    // Ceiling c with Σ(t_i − c)_+ = eps.
    let mut top = 0.0;
    let mut ceil = 0.0;
    for k in 0..n {
        top += desc[k];
        let c = (top - eps) / (k + 1) as f64;
        if k + 1 == n || c >= desc[k + 1] {
            ceil = c;
            break;
        }
    }
    // Floor f with Σ(f − t_i)_+ = eps.
    let mut bottom = 0.0;
    let mut floor = 0.0;
    for k in 0..n {
        bottom += desc[n - 1 - k];
        let f = (bottom + eps) / (k + 1) as f64;
        if k + 1 == n || f <= desc[n - 2 - k] {
            floor = f;
            break;
        }
    }
    if floor >= ceil {
        return vec![1.0 / n as f64; n];
    }
    t.iter().map(|&v| v.clamp(floor, ceil)).collect()
}

/// A bistochastic matrix `B` with `B x ≈ y`, for `x ≻ y`, built as a product
/// of T-transforms on the sorted vectors.
pub fn bistochastic_witness(x: &[f64], y: &[f64]) -> Result<StochasticMatrix> {
    const TOL: f64 = 1e-15;
    let n = x.len();
    check_dim(n, y.len())?;
    let sort_desc = |v: &[f64]| {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| v[b].total_cmp(&v[a]).then(a.cmp(&b)));
        idx
    };
    let sx = sort_desc(x);
    let sy = sort_desc(y);
    let mut cur: Vec<f64> = sx.iter().map(|&i| x[i]).collect();
    let goal: Vec<f64> = sy.iter().map(|&i| y[i]).collect();
    // b acts on sorted coordinates: cur = b · x_sorted.
    let mut b = DMatrix::<f64>::identity(n, n);
    let mut j = n;
    // Largest index with cur_j > goal_j, then the first later index with
    // cur_k < goal_k.
    while let Some(jj) = (0..j).rev().find(|&i| cur[i] > goal[i] + TOL) {
        let Some(k) = (jj + 1..n).find(|&i| cur[i] < goal[i] - TOL) else {
            // Only rounding excess remains at jj; move on to lower indices.
            j = jj;
            continue;
        };
        let delta = (cur[jj] - goal[jj]).min(goal[k] - cur[k]);
        let gap = cur[jj] - cur[k];
        if gap <= 0.0 {
            break;
        }
        let lambda = 1.0 - delta / gap;
        // Row update of the T-transform λI + (1−λ)Q_{jk}.
        let rj = b.row(jj).clone_owned();
        let rk = b.row(k).clone_owned();
        b.set_row(jj, &(&rj * lambda + &rk * (1.0 - lambda)));
        b.set_row(k, &(&rj * (1.0 - lambda) + &rk * lambda));
        let (cj, ck) = (cur[jj], cur[k]);
        cur[jj] = lambda * cj + (1.0 - lambda) * ck;
        cur[k] = (1.0 - lambda) * cj + lambda * ck;
        j = jj + 1;
    }
    // Map back: output coordinate sy[a] receives sorted row a, input
    // coordinate sx[c] is sorted column c.
    let mut m = DMatrix::zeros(n, n);
    for a in 0..n {
        for c in 0..n {
            m[(sy[a], sx[c])] = b[(a, c)];
        }
    }
    let w = StochasticMatrix::renormalized(m)?;
    let err = l1_distance(&w.apply_weights(x), y);
    if err > 1e-6 {
        return Err(Error::Solver(format!(
            "T-transform witness misses the target by {err}; input does not majorize it"
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{gibbs_state, Hamiltonian, ThermalContext};

    fn pd(w: &[f64]) -> ProbDist {
        ProbDist::new(w.to_vec()).unwrap()
    }

    #[test]
    fn dmaj_examples() {
        let p = pd(&[0.2, 0.5, 0.3]);
        let out = lp_dmajorization(&p, &p, &p, &p).unwrap();
        assert!(out.is_feasible());

        let h = Hamiltonian::new(vec![0.0, 0.5, 1.5]).unwrap();
        let g = gibbs_state(&h, &ThermalContext::new(1.0).unwrap());
        let out = lp_dmajorization(&p, &g, &g, &g).unwrap();
        assert!(out.is_feasible());

        // The Gibbs state cannot be driven anywhere else.
        let out = lp_dmajorization(&g, &g, &p, &g).unwrap();
        assert!(!out.is_feasible());
    }

    #[test]
    fn nearest_examples() {
        let u = ProbDist::uniform(2);
        let r = lp_nearest_image(&pd(&[0.9, 0.1]), &pd(&[0.2, 0.8]), &u).unwrap();
        assert!(r.l1_dist.abs() < 1e-12, "0.9 ≻ 0.8 so the target is reachable");

        let r = lp_nearest_image(&pd(&[0.6, 0.4]), &pd(&[0.1, 0.9]), &u).unwrap();
        assert!((r.l1_dist - 0.6).abs() < 1e-9);
        let g = lp_nearest_image_general(&pd(&[0.6, 0.4]), &pd(&[0.1, 0.9]), &u).unwrap();
        assert!((g.l1_dist - 0.6).abs() < 1e-9);
    }

    #[test]
    fn flattest_examples() {
        let f = flattest(&[0.7, 0.2, 0.1], 0.1);
        assert!((f[0] - 0.6).abs() < 1e-15 && (f[2] - 0.2).abs() < 1e-15);
        assert_eq!(flattest(&[0.7, 0.3], 0.5), vec![0.5, 0.5]);
    }

    #[test]
    fn witness_reproduces_target() {
        let x = [0.5, 0.1, 0.3, 0.1];
        let y = [0.2, 0.3, 0.25, 0.25];
        let w = bistochastic_witness(&x, &y).unwrap();
        assert!(l1_distance(&w.apply_weights(&x), &y) < 1e-12);
        let ones = w.apply_weights(&[0.25; 4]);
        assert!(ones.iter().all(|v| (v - 0.25).abs() < 1e-12));
    }
}
