//! Classical channels, structured channel constructions, and the LP oracles
//! that ground-truth transformation criteria at small dimension.

mod constructions;
mod oracle;
pub mod simplex;
mod stochastic;

pub use constructions::{check_direct_sum, rational_approx_channel, EmbeddingSpec};
pub use oracle::{
    bistochastic_witness, flattest, lp_dmajorization, lp_nearest_image, lp_nearest_image_general,
    DmajOutcome, NearestImage, WITNESS_TOL,
};
pub use stochastic::StochasticMatrix;
