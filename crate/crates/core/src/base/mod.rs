//! Foundational value types shared by every other module.

pub mod dist;
pub mod extended;
pub mod thermal;

pub use dist::{l1_distance, parse_rational, Mode, ProbDist, SubDist, Weights, TOL};
pub use extended::ExtendedReal;
pub use thermal::{
    beta_order, gibbs_state, log_partition_function, pad_system, partition_function, Hamiltonian,
    ThermalContext,
};

use crate::error::{Error, Result};

/// Rejects `NaN` orders; every other float, including `±∞`, is a valid α.
pub fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() {
        Err(Error::InvalidParameter("α must not be NaN".into()))
    } else {
        Ok(())
    }
}
