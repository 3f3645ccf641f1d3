//! Hamiltonians, thermal contexts, Gibbs states and the β-ordering.

use super::dist::{ProbDist, Weights};
use crate::error::{check_dim, Error, Result};
use serde::{Deserialize, Serialize};

/// Energy levels `E_i`, index-aligned with a [`ProbDist`].  Degeneracies are
/// repeated levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Hamiltonian {
    levels: Vec<f64>,
}

impl Hamiltonian {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidParameter("Hamiltonian needs at least one level".into()));
        }
        if let Some(e) = levels.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter(format!("energy level {e} is not finite")));
        }
        Ok(Self { levels })
    }

    /// The all-zero Hamiltonian on `n` levels.
    pub fn trivial(n: usize) -> Self {
        Self { levels: vec![0.0; n] }
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|&e| e == 0.0)
    }

    /// Non-interacting composite: `E_{(i,j)} = E_i + F_j`, row-major.
    pub fn tensor(&self, other: &Hamiltonian) -> Hamiltonian {
        let levels = self
            .levels
            .iter()
            .flat_map(|a| other.levels.iter().map(move |b| a + b))
            .collect();
        Hamiltonian { levels }
    }

    /// Adds the same constant to every level.
    pub fn shifted(&self, c: f64) -> Hamiltonian {
        Hamiltonian { levels: self.levels.iter().map(|e| e + c).collect() }
    }

    /// Direct sum of spectra.
    pub fn direct_sum(&self, other: &Hamiltonian) -> Hamiltonian {
        let mut levels = self.levels.clone();
        levels.extend_from_slice(&other.levels);
        Hamiltonian { levels }
    }

    pub fn max_level(&self) -> f64 {
        self.levels.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl TryFrom<Vec<f64>> for Hamiltonian {
    type Error = Error;
    fn try_from(levels: Vec<f64>) -> Result<Self> {
        Hamiltonian::new(levels)
    }
}

impl From<Hamiltonian> for Vec<f64> {
    fn from(h: Hamiltonian) -> Self {
        h.levels
    }
}

/// Inverse temperature and Boltzmann constant.
///
/// `β` is measured in inverse energy units (`β = 1/kT`), so `kT = 1/β`
/// whatever the value of `k`; `k` only enters the reported temperature
/// `T = 1/(kβ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThermalContext {
    pub beta: f64,
    #[serde(default = "unit_k")]
    pub k: f64,
}

fn unit_k() -> f64 {
    1.0
}

impl ThermalContext {
    pub fn new(beta: f64) -> Result<Self> {
        Self::with_k(beta, 1.0)
    }

    pub fn with_k(beta: f64, k: f64) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!("β must be positive and finite, got {beta}")));
        }
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Boltzmann constant must be positive and finite, got {k}"
            )));
        }
        Ok(Self { beta, k })
    }

    /// The thermal energy `kT = 1/β`.
    pub fn kt(&self) -> f64 {
        1.0 / self.beta
    }

    pub fn temperature(&self) -> f64 {
        1.0 / (self.k * self.beta)
    }

    /// Validates a deserialized context.
    pub fn validated(self) -> Result<Self> {
        Self::with_k(self.beta, self.k)
    }
}

/// `ln Z` with `Z = Σ_i e^{−βE_i}`, computed stably.
pub fn log_partition_function(h: &Hamiltonian, ctx: &ThermalContext) -> f64 {
    let emin = h.levels.iter().copied().fold(f64::INFINITY, f64::min);
    let s: f64 = h.levels.iter().map(|e| (-ctx.beta * (e - emin)).exp()).sum();
    -ctx.beta * emin + s.ln()
}

pub fn partition_function(h: &Hamiltonian, ctx: &ThermalContext) -> f64 {
    log_partition_function(h, ctx).exp()
}

/// The Gibbs distribution `e^{−βE_i}/Z`.
///
/// Weights that would underflow are clamped to the smallest positive float
/// so the result keeps full rank.
pub fn gibbs_state(h: &Hamiltonian, ctx: &ThermalContext) -> ProbDist {
    let log_z = log_partition_function(h, ctx);
    let w = h
        .levels
        .iter()
        .map(|e| (-ctx.beta * e - log_z).exp().max(f64::MIN_POSITIVE))
        .collect();
    ProbDist::normalized(w).expect("Gibbs weights are a valid distribution")
}

/// The β-ordering: a permutation `σ` such that `p_{σ(k)} e^{βE_{σ(k)}}` is
/// non-increasing in `k`, ties broken by ascending index.
pub fn beta_order(p: &ProbDist, h: &Hamiltonian, ctx: &ThermalContext) -> Result<Vec<usize>> {
    check_dim(p.dim(), h.dim())?;
    Ok(beta_order_weights(p.weights(), h.levels(), ctx.beta))
}

pub(crate) fn beta_order_weights(p: &[f64], e: &[f64], beta: f64) -> Vec<usize> {
    // Compare ln p_i + βE_i, which cannot overflow.
    let key: Vec<f64> = p
        .iter()
        .zip(e)
        .map(|(&pi, &ei)| if pi > 0.0 { pi.ln() + beta * ei } else { f64::NEG_INFINITY })
        .collect();
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| key[b].total_cmp(&key[a]).then(a.cmp(&b)));
    order
}

/// Pads a state and its Hamiltonian to `n` levels.  The new levels carry zero
/// probability and the largest existing energy.
pub fn pad_system(p: &ProbDist, h: &Hamiltonian, n: usize) -> Result<(ProbDist, Hamiltonian)> {
    check_dim(p.dim(), h.dim())?;
    if n < p.dim() {
        return Err(Error::InvalidParameter(format!(
            "cannot pad dimension {} down to {n}",
            p.dim()
        )));
    }
    let mut levels = h.levels.clone();
    levels.resize(n, h.max_level());
    Ok((p.pad(n), Hamiltonian { levels }))
}
