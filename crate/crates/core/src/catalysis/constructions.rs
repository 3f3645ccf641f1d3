//! Explicit catalysts: the tensor-power catalyst for the extensive-error
//! regime and the embezzling state.

use super::Catalyst;
use crate::base::{ProbDist, Weights};
use crate::channels::lp_nearest_image;
use crate::error::{check_dim, Error, Result};
use crate::renyi::shannon;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Largest catalyst (and joint state) dimension the constructions build.
pub const MAX_CATALYST_DIM: usize = 1_000_000;

/// Largest embezzler whose weights are also kept as exact rationals.
const EXACT_EMBEZZLER_LIMIT: usize = 64;

fn power(p: &ProbDist, k: usize) -> ProbDist {
    if k == 0 {
        ProbDist::uniform(1)
    } else {
        p.tensor_power(k)
    }
}

/// `ω = [p^{⊗(n−1)} ⊕ p^{⊗(n−2)}⊗q ⊕ … ⊕ q^{⊗(n−1)}]/n`, of dimension
/// `n·d^{n−1}`.  Block `k` holds `p^{⊗(n−1−k)} ⊗ q^{⊗k}`.  The result is
/// exact when both inputs are.
pub fn tensor_catalyst(p: &ProbDist, q: &ProbDist, n: usize) -> Result<Catalyst> {
    check_dim(p.dim(), q.dim())?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("tensor catalyst needs n ≥ 2, got {n}")));
    }
    let d = p.dim();
    let dim = (d as u128).checked_pow(n as u32 - 1).map(|x| x * n as u128);
    match dim {
        Some(x) if x <= MAX_CATALYST_DIM as u128 => {}
        _ => {
            return Err(Error::TooLarge {
                size: dim.map_or(usize::MAX, |x| x.min(usize::MAX as u128) as usize),
                limit: MAX_CATALYST_DIM,
            })
        }
    }
    let blocks: Vec<ProbDist> = (0..n).map(|k| power(p, n - 1 - k).tensor(&power(q, k))).collect();
    let state = match blocks.iter().map(|b| b.exact()).collect::<Option<Vec<_>>>() {
        Some(exact_blocks) => {
            let scale = BigRational::new(BigInt::one(), BigInt::from(n));
            let exact = exact_blocks.iter().flat_map(|b| b.iter().map(|w| w * &scale)).collect();
            ProbDist::from_rationals(exact)?
        }
        None => {
            let parts: Vec<(f64, &ProbDist)> = blocks.iter().map(|b| (1.0 / n as f64, b)).collect();
            ProbDist::direct_sum(&parts)?
        }
    };
    Ok(Catalyst::trivial(state))
}

/// Continuity bound `δ·ln D + h(min(δ, 1/2))` on the entropy difference of
/// two distributions on `D` outcomes at `ℓ₁` distance `δ`, with
/// `h` the binary entropy.
pub fn fannes_bound(delta: f64, dim: usize) -> f64 {
    let t = delta.clamp(0.0, 0.5);
    let h = if t == 0.0 { 0.0 } else { -t * t.ln() - (1.0 - t) * (1.0 - t).ln() };
    delta.max(0.0) * (dim as f64).ln() + h
}

/// How closely the tensor catalyst `ω_n` realizes `p ⊗ ω → q ⊗ ω` by a
/// bistochastic map.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TensorCatalystReport {
    pub n: usize,
    pub catalyst_dim: usize,
    /// `min_Λ ‖Λ(p⊗ω) − q⊗ω‖₁` over bistochastic `Λ`.
    pub residual: f64,
    /// [`fannes_bound`] at the residual for the joint dimension.
    pub fannes: f64,
    /// `|H(s) − H(q⊗ω)| ≤ fannes` for the optimal image `s`.
    pub continuity_holds: bool,
    /// `H(p) ≤ H(q) + fannes`, the entropy condition implied by the residual.
    pub entropy_bound_holds: bool,
}

/// Builds `ω_n` and measures the residual of the catalytic transition with
/// the nearest-image oracle.
pub fn tensor_catalyst_report(p: &ProbDist, q: &ProbDist, n: usize) -> Result<TensorCatalystReport> {
    let omega = tensor_catalyst(p, q, n)?;
    let a = p.tensor(&omega.state).to_float();
    let b = q.tensor(&omega.state).to_float();
    let joint = a.dim();
    let img = lp_nearest_image(&a, &b, &ProbDist::uniform(joint).to_float())?;
    let fannes = fannes_bound(img.l1_dist, joint);
    let slack = 1e-9;
    let continuity_holds = (shannon(img.image.weights()) - shannon(b.weights())).abs() <= fannes + slack;
    let entropy_bound_holds = shannon(p.weights()) <= shannon(q.weights()) + fannes + slack;
    Ok(TensorCatalystReport {
        n,
        catalyst_dim: omega.dim(),
        residual: img.l1_dist,
        fannes,
        continuity_holds,
        entropy_bound_holds,
    })
}

/// The embezzling state `(1/C(n)) Σ_{j=1}^n (1/j)|j⟩⟨j|` with
/// `C(n) = Σ_{j≤n} 1/j`, exact for `n ≤ 64`.
pub fn embezzler(n: usize) -> Result<Catalyst> {
    if n == 0 {
        return Err(Error::InvalidParameter("embezzler needs n ≥ 1".into()));
    }
    if n > MAX_CATALYST_DIM {
        return Err(Error::TooLarge { size: n, limit: MAX_CATALYST_DIM });
    }
    let state = if n <= EXACT_EMBEZZLER_LIMIT {
        let inv: Vec<BigRational> =
            (1..=n).map(|j| BigRational::new(BigInt::one(), BigInt::from(j))).collect();
        let c: BigRational = inv.iter().sum();
        ProbDist::from_rationals(inv.into_iter().map(|x| x / &c).collect())?
    } else {
        ProbDist::normalized((1..=n).map(|j| 1.0 / j as f64).collect())?
    };
    Ok(Catalyst::trivial(state))
}

/// Result of erasing a uniform `m`-level system with an `n`-level embezzler.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbezzleReport {
    pub n: usize,
    pub m: usize,
    /// Catalyst marginal after the erasure.
    pub final_catalyst: ProbDist,
    /// `‖ω_C − ρ_C‖₁` between the returned and the initial catalyst.
    pub trace_dist: f64,
    /// `‖ω − ρ_C ⊗ |0⟩⟨0|‖₁` on the joint system.
    pub joint_trace_dist: f64,
    /// `Σ_j √(q_j/(j·C(n)))`, the fidelity of `ω` with `ρ_C ⊗ |0⟩⟨0|`.
    pub fidelity: f64,
    /// Fidelity of the returned catalyst marginal with `ρ_C`.
    pub marginal_fidelity: f64,
    /// `F ≥ 1 − dist/2` for both the joint and the marginal pair.
    pub fidelity_bound_holds: bool,
}

/// Erases a maximally mixed `m`-level system with the `n`-level embezzler.
///
/// The eigenvalues of `ρ_C ⊗ 𝕀/m` are sorted non-increasingly into
/// `q_1 ≥ … ≥ q_{nm}` and `q_{s·n+j}` is placed on `|j⟩|s⟩`, so the `n`
/// largest eigenvalues sit on `|j⟩|0⟩`.  This permutation is a unitary
/// on the joint system.  The catalyst is returned as the marginal
/// `ω_C(j) = Σ_s q_{s·n+j}`.
pub fn embezzle_erase(m: usize, n: usize) -> Result<EmbezzleReport> {
    if m == 0 {
        return Err(Error::InvalidParameter("erased system needs m ≥ 1".into()));
    }
    let total = n.saturating_mul(m);
    if total > MAX_CATALYST_DIM {
        return Err(Error::TooLarge { size: total, limit: MAX_CATALYST_DIM });
    }
    let rho = embezzler(n)?.state.to_float();
    let mut q = rho.tensor(&ProbDist::uniform(m).to_float()).weights().to_vec();
    q.sort_by(|a, b| b.total_cmp(a));
    let e = rho.weights();
    let marginal: Vec<f64> = (0..n).map(|j| (0..m).map(|s| q[s * n + j]).sum()).collect();
    let trace_dist: f64 = marginal.iter().zip(e).map(|(a, b)| (a - b).abs()).sum();
    let joint_trace_dist: f64 =
        (0..n).map(|j| (q[j] - e[j]).abs()).sum::<f64>() + q[n..].iter().sum::<f64>();
    let fidelity: f64 = (0..n).map(|j| (q[j] * e[j]).sqrt()).sum();
    let marginal_fidelity: f64 = marginal.iter().zip(e).map(|(a, b)| (a * b).sqrt()).sum();
    let slack = 1e-12;
    let fidelity_bound_holds = fidelity >= 1.0 - joint_trace_dist / 2.0 - slack
        && marginal_fidelity >= 1.0 - trace_dist / 2.0 - slack;
    Ok(EmbezzleReport {
        n,
        m,
        final_catalyst: ProbDist::normalized(marginal)?,
        trace_dist,
        joint_trace_dist,
        fidelity,
        marginal_fidelity,
        fidelity_bound_holds,
    })
}
