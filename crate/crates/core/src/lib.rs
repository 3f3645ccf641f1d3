//! Numerics for the second laws of thermodynamics in the single-shot,
//! catalytic regime.
//!
//! A state transition `p → p′` under (catalytic) thermal operations is
//! governed by the whole family of Rényi divergences to the Gibbs state,
//! equivalently the generalized free energies
//! `F_α(p) = −kT ln Z + kT·D_α(p‖γ)`.  This crate evaluates that family,
//! decides feasibility, constructs catalysts and channels that witness
//! feasible transitions, and cross-checks every criterion against
//! independent linear-programming oracles at small dimension.
//!
//! Module map:
//!
//! * [`base`]: distributions (float or exact rational), Hamiltonians,
//!   thermal contexts, extended reals, β-ordering.
//! * [`renyi`]: divergences, entropies and their smoothed variants.
//! * [`majorize`]: majorization and thermo-majorization curves.
//! * [`channels`]: stochastic matrices, embeddings, the rational
//!   approximation channel and the LP oracles.
//! * [`secondlaws`]: free energies and transition checks.
//! * [`catalysis`]: trumping, catalyst search and constructions, regimes of
//!   approximate catalysis.
//! * [`work`]: work distance, extractable work and work of formation,
//!   Landauer erasure, wits and batteries.
//! * [`quantum`]: density matrices, quantum Rényi divergences, thermal
//!   operations.
//! * [`zeroeth`]: passivity, complete passivity and work extraction.
//! * [`io`] and [`cli`]: JSON documents and the command-line front end.

// Parameter checks use `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod base;
pub mod catalysis;
pub mod channels;
pub mod cli;
mod error;
pub mod io;
pub mod majorize;
pub mod quantum;
pub mod renyi;
pub mod sampling;
pub mod secondlaws;
pub mod work;
pub mod zeroeth;

pub use base::{ExtendedReal, Hamiltonian, ProbDist, SubDist, ThermalContext, Weights};
pub use error::{Error, Result};
