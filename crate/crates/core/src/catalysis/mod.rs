//! Catalysis: trumping, catalyst verification and search, explicit catalyst
//! constructions, and the regimes of approximately cyclic processes.
//!
//! A catalyst `c` enables `p → p′` when `p ⊗ c` thermo-majorizes `p′ ⊗ c`
//! for the product Hamiltonian.  With trivial Hamiltonians this is plain
//! majorization, decided exactly when all inputs are rational.

mod constructions;
mod regimes;

pub use constructions::{
    embezzle_erase, embezzler, fannes_bound, tensor_catalyst, tensor_catalyst_report,
    EmbezzleReport, TensorCatalystReport, MAX_CATALYST_DIM,
};
pub use regimes::{classify_regime, Regime, RegimeReport};

use crate::base::{Hamiltonian, ProbDist, ThermalContext, Weights};
use crate::error::{Error, Result};
use crate::majorize::{majorizes, thermo_majorizes};
use crate::sampling::{random_dist, seeded_rng};
use crate::secondlaws::{check_transition, CheckMode, TransitionReport};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// A catalyst state together with its Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct Catalyst {
    pub state: ProbDist,
    pub hamiltonian: Hamiltonian,
}

impl Catalyst {
    /// A catalyst with trivial Hamiltonian.
    pub fn trivial(state: ProbDist) -> Self {
        let hamiltonian = Hamiltonian::trivial(state.dim());
        Self { state, hamiltonian }
    }

    pub fn new(state: ProbDist, hamiltonian: Hamiltonian) -> Result<Self> {
        crate::error::check_dim(hamiltonian.dim(), state.dim())?;
        Ok(Self { state, hamiltonian })
    }

    pub fn dim(&self) -> usize {
        self.state.dim()
    }

    /// Zero weights can be dropped from a catalyst without loss.
    pub fn is_full_rank(&self) -> bool {
        self.state.is_full_rank()
    }
}

/// Decides whether `x` can be trumped into `y` (catalytic majorization),
/// padding the shorter vector with zeros.
pub fn trump_check(x: &ProbDist, y: &ProbDist, mode: CheckMode) -> Result<TransitionReport> {
    let n = x.dim().max(y.dim());
    let (x, y) = (x.pad(n), y.pad(n));
    let ctx = ThermalContext::new(1.0)?;
    check_transition(&x, &y, &Hamiltonian::trivial(n), &ctx, mode)
}

/// Whether `p ⊗ c` thermo-majorizes `p′ ⊗ c` for the Hamiltonian `H ⊗ H_C`.
pub fn verify_catalyst(
    p: &ProbDist,
    p_prime: &ProbDist,
    c: &Catalyst,
    h: &Hamiltonian,
    ctx: &ThermalContext,
) -> Result<bool> {
    crate::error::check_dim(h.dim(), p.dim())?;
    crate::error::check_dim(h.dim(), p_prime.dim())?;
    let (a, b) = (p.tensor(&c.state), p_prime.tensor(&c.state));
    if h.is_trivial() && c.hamiltonian.is_trivial() {
        Ok(majorizes(&a, &b))
    } else {
        thermo_majorizes(&a, &b, &h.tensor(&c.hamiltonian), ctx)
    }
}

/// Outcome of a randomized catalyst search.
#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Found(Catalyst),
    NotFound,
}

/// A search result with a reproducibility record.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalystSearch {
    pub outcome: SearchOutcome,
    /// Number of candidate catalysts tried (including the dimension-1 one).
    pub attempts: usize,
    /// SHA-256 over the weights of every candidate tried, in order.
    pub transcript_digest: String,
}

/// Serializable summary of a search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub found: bool,
    pub catalyst: Option<Vec<f64>>,
    pub dim: Option<usize>,
    pub attempts: usize,
    pub transcript_digest: String,
}

impl CatalystSearch {
    pub fn summary(&self) -> SearchSummary {
        let cat = match &self.outcome {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFound => None,
        };
        SearchSummary {
            found: cat.is_some(),
            catalyst: cat.map(|c| c.state.weights().to_vec()),
            dim: cat.map(Catalyst::dim),
            attempts: self.attempts,
            transcript_digest: self.transcript_digest.clone(),
        }
    }
}

/// Largest catalyst dimension the search accepts.
pub const MAX_SEARCH_DIM: usize = 12;

/// Known witnesses tried before random samples: the two-outcome catalyst
/// `(3/5, 2/5)` and its reversal.
fn seed_catalysts() -> Vec<ProbDist> {
    vec![
        ProbDist::from_rational_strs(&["3/5", "2/5"]).expect("valid"),
        ProbDist::from_rational_strs(&["2/5", "3/5"]).expect("valid"),
    ]
}

/// Searches for a catalyst with trivial Hamiltonian enabling `p → p′`.
///
/// Tries the trivial one-outcome catalyst, then the known seeds, then
/// `samples` flat-Dirichlet catalysts of each dimension `2..=max_dim`.
/// The search is deterministic for a given `seed`.
pub fn search_catalyst(
    p: &ProbDist,
    p_prime: &ProbDist,
    h: &Hamiltonian,
    ctx: &ThermalContext,
    max_dim: usize,
    samples: usize,
    seed: u64,
) -> Result<CatalystSearch> {
    if max_dim > MAX_SEARCH_DIM {
        return Err(Error::TooLarge { size: max_dim, limit: MAX_SEARCH_DIM });
    }
    let mut hasher = Sha256::new();
    let mut attempts = 0;
    let mut try_one = |c: ProbDist, hasher: &mut Sha256| -> Result<Option<Catalyst>> {
        attempts += 1;
        for w in c.weights() {
            hasher.update(w.to_le_bytes());
        }
        let cat = Catalyst::trivial(c);
        Ok(verify_catalyst(p, p_prime, &cat, h, ctx)?.then_some(cat))
    };
    let mut found = try_one(ProbDist::uniform(1), &mut hasher)?;
    if found.is_none() && max_dim >= 2 {
        for c in seed_catalysts() {
            if let Some(cat) = try_one(c, &mut hasher)? {
                found = Some(cat);
                break;
            }
        }
    }
    let mut rng = seeded_rng(seed);
    'outer: for d in 2..=max_dim {
        if found.is_some() {
            break;
        }
        for _ in 0..samples {
            let c = random_dist(&mut rng, d);
            if let Some(cat) = try_one(c, &mut hasher)? {
                found = Some(cat);
                break 'outer;
            }
        }
    }
    Ok(CatalystSearch {
        outcome: found.map_or(SearchOutcome::NotFound, SearchOutcome::Found),
        attempts,
        transcript_digest: hex::encode(hasher.finalize()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::secondlaws::Verdict;

    fn jp() -> (ProbDist, ProbDist) {
        (
            ProbDist::from_rational_strs(&["1/2", "1/4", "1/4", "0"]).unwrap(),
            ProbDist::from_rational_strs(&["2/5", "2/5", "1/10", "1/10"]).unwrap(),
        )
    }

    #[test]
    fn trumping_examples() {
        let (x, y) = jp();
        assert_eq!(trump_check(&x, &y, CheckMode::ExactAllAlpha).unwrap().verdict, Verdict::Feasible);
        assert_eq!(trump_check(&x, &x, CheckMode::ExactAllAlpha).unwrap().verdict, Verdict::Feasible);
        let r = trump_check(&ProbDist::uniform(3), &ProbDist::pure(3, 0), CheckMode::ExactAllAlpha);
        assert_eq!(r.unwrap().verdict, Verdict::Infeasible);
    }

    #[test]
    fn jonathan_plenio_catalyst() {
        let (x, y) = jp();
        let h = Hamiltonian::trivial(4);
        let ctx = ThermalContext::new(1.0).unwrap();
        let r = Catalyst::trivial(ProbDist::from_rational_strs(&["3/5", "2/5"]).unwrap());
        assert!(verify_catalyst(&x, &y, &r, &h, &ctx).unwrap());
        assert!(!verify_catalyst(&x, &y, &Catalyst::trivial(ProbDist::uniform(1)), &h, &ctx).unwrap());
        assert!(verify_catalyst(&y, &y, &r, &h, &ctx).unwrap());
    }

    #[test]
    fn search_behaviour() {
        let (x, y) = jp();
        let h = Hamiltonian::trivial(4);
        let ctx = ThermalContext::new(1.0).unwrap();
        let s = search_catalyst(&x, &y, &h, &ctx, 2, 50, 3).unwrap();
        assert!(matches!(s.outcome, SearchOutcome::Found(ref c) if c.dim() == 2));
        let back = search_catalyst(&y, &x, &h, &ctx, 3, 50, 3).unwrap();
        assert_eq!(back.outcome, SearchOutcome::NotFound);
        assert_eq!(back, search_catalyst(&y, &x, &h, &ctx, 3, 50, 3).unwrap());
        let direct = search_catalyst(&x, &ProbDist::uniform(4), &h, &ctx, 3, 5, 1).unwrap();
        assert!(matches!(direct.outcome, SearchOutcome::Found(ref c) if c.dim() == 1));
    }
}
