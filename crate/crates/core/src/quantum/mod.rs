//! Small-dimension density-matrix layer: quantum Rényi divergences,
//! necessary conditions for quantum state transitions, dephasing and
//! simulated thermal operations.
//!
//! Everything here works with dense matrices of dimension at most
//! [`MAX_QUANTUM_DIM`], written in the energy eigenbasis.

mod divergence;
pub mod linalg;
mod ops;
mod state;

pub use divergence::{hat_divergence, quantum_divergence, skew_divergence, tilde_divergence, Variant};
pub use linalg::CMatrix;
pub use ops::{
    dephase, energy_blocks, energy_preserving_unitary_from_seed, is_block_diagonal,
    random_energy_preserving_unitary, thermal_op, StinespringChannel, COMMUTATOR_TOL,
    DEGENERACY_TOL,
};
pub use state::{DensityMatrix, MAX_QUANTUM_DIM, STATE_TOL};

use crate::base::{gibbs_state, ExtendedReal, Hamiltonian, ThermalContext, TOL};
use crate::error::{check_dim, Result};
use crate::secondlaws::scan::gap_of;
use serde::{Deserialize, Serialize};

/// A family of necessary conditions on `ρ → ρ′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `Ŝ_α(ρ‖ρ_β) ≥ Ŝ_α(ρ′‖ρ_β)` for `α ≥ 1/2`.
    Hat,
    /// `Ŝ_α(ρ_β‖ρ) ≥ Ŝ_α(ρ_β‖ρ′)` for `1/2 ≤ α ≤ 1`.
    HatReversed,
    /// `S̃_α(ρ‖ρ_β) ≥ S̃_α(ρ′‖ρ_β)` for `0 ≤ α ≤ 2`.
    Tilde,
}

impl Family {
    /// The sampled orders, endpoints included.
    pub fn alpha_grid(self) -> Vec<f64> {
        match self {
            Family::Hat => vec![
                0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 16.0, 32.0,
                64.0, f64::INFINITY,
            ],
            Family::HatReversed => (0..=10).map(|k| 0.5 + 0.05 * k as f64).collect(),
            Family::Tilde => (0..=40).map(|k| 0.05 * k as f64).collect(),
        }
    }

    fn sides(
        self,
        rho: &DensityMatrix,
        rho_prime: &DensityMatrix,
        gibbs: &DensityMatrix,
        alpha: f64,
    ) -> Result<(ExtendedReal, ExtendedReal)> {
        Ok(match self {
            Family::Hat => (hat_divergence(rho, gibbs, alpha)?, hat_divergence(rho_prime, gibbs, alpha)?),
            Family::HatReversed => {
                (hat_divergence(gibbs, rho, alpha)?, hat_divergence(gibbs, rho_prime, alpha)?)
            }
            Family::Tilde => (tilde_divergence(rho, gibbs, alpha)?, tilde_divergence(rho_prime, gibbs, alpha)?),
        })
    }
}

/// The verdict of one family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub family: Family,
    /// Order with the smallest margin.
    pub worst_alpha: f64,
    /// `kT·(lhs − rhs)` at `worst_alpha`, in energy units.
    pub margin: ExtendedReal,
    pub violated: bool,
}

/// Overall outcome: the conditions are necessary only, so a transition is
/// never certified feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantumVerdict {
    PossiblyFeasible,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumCheckReport {
    pub hat: FamilyVerdict,
    pub hat_reversed: FamilyVerdict,
    pub tilde: FamilyVerdict,
    pub overall: QuantumVerdict,
}

fn check_family(
    family: Family,
    rho: &DensityMatrix,
    rho_prime: &DensityMatrix,
    gibbs: &DensityMatrix,
    kt: f64,
) -> Result<FamilyVerdict> {
    let mut worst: Option<(f64, ExtendedReal)> = None;
    for alpha in family.alpha_grid() {
        let (lhs, rhs) = family.sides(rho, rho_prime, gibbs, alpha)?;
        let margin = gap_of(lhs, rhs).scale(kt);
        if worst.is_none_or(|(_, m)| margin < m) {
            worst = Some((alpha, margin));
        }
    }
    let (worst_alpha, margin) = worst.expect("every grid is non-empty");
    Ok(FamilyVerdict { family, worst_alpha, margin, violated: margin < ExtendedReal::from_f64(-TOL) })
}

/// Evaluates the three families of necessary conditions for `ρ → ρ′` under
/// thermal operations with Hamiltonian `h` (diagonal in the working basis).
///
/// Free-energy differences `F_α(ρ) − F_α(ρ′)` reduce to `kT` times
/// divergence differences, reported as margins.  A violation beyond `1e−9`
/// makes the transition infeasible.
pub fn quantum_second_law_check(
    rho: &DensityMatrix,
    rho_prime: &DensityMatrix,
    h: &Hamiltonian,
    ctx: &ThermalContext,
) -> Result<QuantumCheckReport> {
    check_dim(h.dim(), rho.dim())?;
    check_dim(h.dim(), rho_prime.dim())?;
    let gibbs = DensityMatrix::from_diagonal(&gibbs_state(h, ctx));
    let kt = ctx.kt();
    let hat = check_family(Family::Hat, rho, rho_prime, &gibbs, kt)?;
    let hat_reversed = check_family(Family::HatReversed, rho, rho_prime, &gibbs, kt)?;
    let tilde = check_family(Family::Tilde, rho, rho_prime, &gibbs, kt)?;
    let overall = if hat.violated || hat_reversed.violated || tilde.violated {
        QuantumVerdict::Infeasible
    } else {
        QuantumVerdict::PossiblyFeasible
    };
    Ok(QuantumCheckReport { hat, hat_reversed, tilde, overall })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::seeded_rng;
    use num_complex::Complex64;

    #[test]
    fn check_examples() {
        let ctx = ThermalContext::new(1.3).unwrap();
        let h = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
        let gibbs = DensityMatrix::from_diagonal(&gibbs_state(&h, &ctx));
        let rho = DensityMatrix::random(&mut seeded_rng(6), 2);
        let same = quantum_second_law_check(&rho, &rho, &h, &ctx).unwrap();
        assert_eq!(same.overall, QuantumVerdict::PossiblyFeasible);
        let to_gibbs = quantum_second_law_check(&rho, &gibbs, &h, &ctx).unwrap();
        assert_eq!(to_gibbs.overall, QuantumVerdict::PossiblyFeasible);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = DensityMatrix::pure(&[Complex64::new(s, 0.0), Complex64::new(s, 0.0)]).unwrap();
        let r = quantum_second_law_check(&gibbs, &plus, &h, &ctx).unwrap();
        assert_eq!(r.overall, QuantumVerdict::Infeasible);
        assert!(r.hat.violated && r.tilde.violated);
    }

    #[test]
    fn thermal_ops_pass_the_check() {
        let ctx = ThermalContext::new(0.9).unwrap();
        let h_s = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
        let h_r = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
        let total = h_s.tensor(&h_r);
        let mut rng = seeded_rng(21);
        for _ in 0..10 {
            let rho = DensityMatrix::random(&mut rng, 2);
            let u = random_energy_preserving_unitary(&total, &mut rng);
            let out = thermal_op(&rho, &h_s, &h_r, &ctx, &u).unwrap();
            let r = quantum_second_law_check(&rho, &out, &h_s, &ctx).unwrap();
            assert_eq!(r.overall, QuantumVerdict::PossiblyFeasible, "{r:?}");
        }
    }
}
