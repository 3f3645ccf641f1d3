//! Quantum Rényi divergences.
//!
//! * `S̃_α(ρ‖σ) = sgn(α)/(α−1) · log tr ρ^α σ^{1−α}` (the "tilde" or Petz
//!   family).  With `ρ = Σ λ_i |u_i⟩⟨u_i|` and `σ = Σ μ_j |v_j⟩⟨v_j|`,
//!   `tr ρ^α σ^{1−α} = Σ_{ij} P_ij^α Q_ij^{1−α}` for the pair of classical
//!   distributions `P_ij = λ_i |⟨u_i|v_j⟩|²`, `Q_ij = μ_j |⟨u_i|v_j⟩|²`, so
//!   every closed form and support rule of the classical family carries over.
//! * `Ŝ_α(ρ‖σ) = 1/(α−1) · log tr (σ^{γ} ρ σ^{γ})^α` with
//!   `γ = (1−α)/(2α)`, the "hat" or sandwiched family, defined for `α ≥ 1/2`.
//!   `Ŝ_∞ = log ‖σ^{−1/2} ρ σ^{−1/2}‖_∞`.
//!
//! Both reduce to the relative entropy `tr ρ(log ρ − log σ)` at `α = 1` and
//! to the classical divergence of the spectra when `ρ` and `σ` commute.

use super::linalg::{hermitian_eigen, spectral_apply, EIG_TOL};
use super::state::DensityMatrix;
use crate::base::{check_alpha, ExtendedReal};
use crate::error::{check_dim, Error, Result};
use crate::renyi::divergence_weights;
use serde::{Deserialize, Serialize};

fn clamp_spectrum(vals: Vec<f64>) -> Vec<f64> {
    vals.into_iter().map(|x| if x < EIG_TOL { 0.0 } else { x }).collect()
}

/// The pair of classical distributions whose divergence equals `S̃_α(ρ‖σ)`.
fn overlap_distributions(rho: &DensityMatrix, sigma: &DensityMatrix) -> (Vec<f64>, Vec<f64>) {
    let (l, u) = rho.eigen();
    let (m, v) = sigma.eigen();
    let (l, m) = (clamp_spectrum(l), clamp_spectrum(m));
    let overlaps = u.adjoint() * v;
    let n = l.len();
    let mut p = Vec::with_capacity(n * n);
    let mut q = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let w = overlaps[(i, j)].norm_sqr();
            let w = if w < EIG_TOL { 0.0 } else { w };
            p.push(l[i] * w);
            q.push(m[j] * w);
        }
    }
    (p, q)
}

/// `S̃_α(ρ‖σ)` for any α, with the classical limit forms at `0, 1, ±∞`.
pub fn tilde_divergence(rho: &DensityMatrix, sigma: &DensityMatrix, alpha: f64) -> Result<ExtendedReal> {
    check_dim(rho.dim(), sigma.dim())?;
    check_alpha(alpha)?;
    let (p, q) = overlap_distributions(rho, sigma);
    Ok(divergence_weights(&p, &q, alpha))
}

/// `tr(ρ Π)` for the projector `Π` onto the kernel of `σ`.
fn weight_outside_support(rho: &DensityMatrix, sigma_vals: &[f64], sigma_vecs: &super::CMatrix) -> f64 {
    let kernel = spectral_apply(sigma_vals, sigma_vecs, |x| if x < EIG_TOL { 1.0 } else { 0.0 });
    (rho.matrix() * kernel).trace().re
}

/// `Ŝ_α(ρ‖σ)` for `α ≥ 1/2`, including `α = ∞`.
pub fn hat_divergence(rho: &DensityMatrix, sigma: &DensityMatrix, alpha: f64) -> Result<ExtendedReal> {
    check_dim(rho.dim(), sigma.dim())?;
    check_alpha(alpha)?;
    if alpha < 0.5 {
        return Err(Error::InvalidParameter(format!(
            "the sandwiched divergence is defined here for α ≥ 1/2, got {alpha}"
        )));
    }
    if alpha == 1.0 {
        return tilde_divergence(rho, sigma, 1.0);
    }
    let (s_vals, s_vecs) = sigma.eigen();
    if alpha > 1.0 && weight_outside_support(rho, &s_vals, &s_vecs) > EIG_TOL {
        return Ok(ExtendedReal::PosInf);
    }
    let gamma = if alpha.is_infinite() { -0.5 } else { (1.0 - alpha) / (2.0 * alpha) };
    let s_pow = spectral_apply(&s_vals, &s_vecs, |x| if x < EIG_TOL { 0.0 } else { x.powf(gamma) });
    let sandwiched = &s_pow * rho.matrix() * &s_pow;
    let x = clamp_spectrum(hermitian_eigen(&sandwiched).0);
    if alpha.is_infinite() {
        return Ok(ExtendedReal::ln_of(x.iter().copied().fold(0.0, f64::max)));
    }
    let s: f64 = x.iter().filter(|&&v| v > 0.0).map(|&v| v.powf(alpha)).sum();
    Ok(ExtendedReal::ln_of(s).scale(1.0 / (alpha - 1.0)))
}

/// Which quantum divergence a derived quantity is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Hat,
    Tilde,
}

/// Evaluates the chosen variant.
pub fn quantum_divergence(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    alpha: f64,
    variant: Variant,
) -> Result<ExtendedReal> {
    match variant {
        Variant::Hat => hat_divergence(rho, sigma, alpha),
        Variant::Tilde => tilde_divergence(rho, sigma, alpha),
    }
}

/// The skew divergence `S_α(ρ ‖ sρ + (1−s)σ)`.
pub fn skew_divergence(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    alpha: f64,
    s: f64,
    variant: Variant,
) -> Result<ExtendedReal> {
    let mixture = sigma.mix(rho, s)?;
    quantum_divergence(rho, &mixture, alpha, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::ProbDist;
    use crate::quantum::linalg::{haar_unitary, CMatrix};
    use crate::sampling::{random_dist, seeded_rng};

    fn rotate(p: &ProbDist, u: &CMatrix) -> DensityMatrix {
        DensityMatrix::new(u * DensityMatrix::from_diagonal(p).matrix() * u.adjoint()).unwrap()
    }

    #[test]
    fn commuting_pairs_are_classical() {
        let mut rng = seeded_rng(11);
        for _ in 0..5 {
            let (p, q) = (random_dist(&mut rng, 3), random_dist(&mut rng, 3));
            let u = haar_unitary(&mut rng, 3);
            let (rho, sigma) = (rotate(&p, &u), rotate(&q, &u));
            for a in [0.0, 0.5, 0.9, 1.0, 1.7, 2.0, 5.0, f64::INFINITY, -1.0] {
                let c = divergence_weights(crate::Weights::weights(&p), crate::Weights::weights(&q), a);
                let t = tilde_divergence(&rho, &sigma, a).unwrap();
                assert!(t.approx_eq(c, 1e-9), "tilde α={a}: {t:?} vs {c:?}");
                if a >= 0.5 {
                    let h = hat_divergence(&rho, &sigma, a).unwrap();
                    assert!(h.approx_eq(c, 1e-9), "hat α={a}: {h:?} vs {c:?}");
                }
            }
        }
    }

    #[test]
    fn pure_qubit_against_maximally_mixed() {
        let rho = DensityMatrix::from_diagonal(&ProbDist::new(vec![1.0, 0.0]).unwrap());
        let sigma = DensityMatrix::from_diagonal(&ProbDist::uniform(2));
        for a in [0.1, 0.5, 1.0, 1.5, 2.0] {
            let t = tilde_divergence(&rho, &sigma, a).unwrap();
            assert!(t.approx_eq(ExtendedReal::from_f64(2f64.ln()), 1e-12));
        }
        assert_eq!(tilde_divergence(&rho, &rho, 0.7).unwrap().finite(), Some(0.0));
        assert_eq!(hat_divergence(&sigma, &rho, 2.0).unwrap(), ExtendedReal::PosInf);
        assert!(hat_divergence(&rho, &sigma, 0.3).is_err());
    }

    #[test]
    fn max_sandwiched_on_qubits() {
        let mut rng = seeded_rng(3);
        let (rho, sigma) = (DensityMatrix::random(&mut rng, 2), DensityMatrix::random(&mut rng, 2));
        let (vals, vecs) = sigma.eigen();
        let inv_sqrt = spectral_apply(&vals, &vecs, |x| x.powf(-0.5));
        let m = &inv_sqrt * rho.matrix() * &inv_sqrt;
        // Largest root of the 2×2 characteristic polynomial.
        let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
        let b = m[(0, 1)].norm_sqr();
        let lmax = (a + d) / 2.0 + (((a - d) / 2.0).powi(2) + b).sqrt();
        let h = hat_divergence(&rho, &sigma, f64::INFINITY).unwrap();
        assert!(h.approx_eq(ExtendedReal::from_f64(lmax.ln()), 1e-10));
        let one = hat_divergence(&rho, &sigma, 1.0).unwrap();
        assert!(one.approx_eq(tilde_divergence(&rho, &sigma, 1.0).unwrap(), 1e-15));
    }

    #[test]
    fn sandwiched_below_petz() {
        let mut rng = seeded_rng(8);
        for _ in 0..10 {
            let (rho, sigma) = (DensityMatrix::random(&mut rng, 3), DensityMatrix::random(&mut rng, 3));
            for a in [0.5, 0.8, 1.3, 2.0] {
                let h = hat_divergence(&rho, &sigma, a).unwrap().to_f64();
                let t = tilde_divergence(&rho, &sigma, a).unwrap().to_f64();
                assert!(h <= t + 1e-10, "α={a}: {h} > {t}");
            }
        }
    }

    #[test]
    fn skew_endpoints() {
        let mut rng = seeded_rng(4);
        let (rho, sigma) = (DensityMatrix::random(&mut rng, 2), DensityMatrix::random(&mut rng, 2));
        for v in [Variant::Hat, Variant::Tilde] {
            let base = quantum_divergence(&rho, &sigma, 1.5, v).unwrap();
            assert_eq!(skew_divergence(&rho, &sigma, 1.5, 0.0, v).unwrap(), base);
            let z = skew_divergence(&rho, &sigma, 1.5, 1.0, v).unwrap().to_f64();
            assert!(z.abs() < 1e-12);
        }
        let p = ProbDist::new(vec![0.7, 0.3]).unwrap();
        let q = ProbDist::new(vec![0.2, 0.8]).unwrap();
        let (rho, sigma) = (DensityMatrix::from_diagonal(&p), DensityMatrix::from_diagonal(&q));
        let s = skew_divergence(&rho, &sigma, 2.0, 0.5, Variant::Tilde).unwrap();
        let c = divergence_weights(&[0.7, 0.3], &[0.45, 0.55], 2.0);
        assert!(s.approx_eq(c, 1e-12));
    }
}
