//! Dephasing, energy-preserving unitaries, thermal operations and random
//! channels in Stinespring form.
//!
//! Density matrices are written in the energy eigenbasis of their
//! Hamiltonian, so a [`Hamiltonian`] is the list of diagonal energies.  A
//! composite `S ⊗ R` uses row-major index `s·d_R + r`, matching
//! [`Hamiltonian::tensor`] and the Kronecker product.

use super::linalg::{haar_isometry, haar_unitary, max_abs, partial_trace_second, CMatrix};
use super::state::{DensityMatrix, MAX_QUANTUM_DIM};
use crate::base::{gibbs_state, Hamiltonian, ThermalContext};
use crate::error::{check_dim, Error, Result};
use crate::sampling::seeded_rng;
use num_complex::Complex64;
use rand::Rng;

/// Energies closer than this are the same eigenvalue.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Tolerance for `‖[U, H]‖` and `‖U†U − 𝟙‖` (largest entry).
pub const COMMUTATOR_TOL: f64 = 1e-9;

/// Index sets of the energy eigenspaces, in increasing energy.
pub fn energy_blocks(h: &Hamiltonian) -> Vec<Vec<usize>> {
    let e = h.levels();
    let mut idx: Vec<usize> = (0..e.len()).collect();
    idx.sort_by(|&a, &b| e[a].total_cmp(&e[b]));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in idx {
        match blocks.last_mut() {
            Some(b) if (e[i] - e[*b.last().expect("non-empty")]).abs() <= DEGENERACY_TOL => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    blocks
}

fn same_energy(h: &Hamiltonian, i: usize, j: usize) -> bool {
    (h.levels()[i] - h.levels()[j]).abs() <= DEGENERACY_TOL
}

/// Removes every coherence between distinct energies, keeping the blocks
/// of degenerate subspaces.
pub fn dephase(rho: &DensityMatrix, h: &Hamiltonian) -> Result<DensityMatrix> {
    check_dim(h.dim(), rho.dim())?;
    let m = rho.matrix();
    let out = CMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        if same_energy(h, i, j) {
            m[(i, j)]
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(DensityMatrix::from_trusted(out))
}

/// Whether the state has no coherence between distinct energies.
pub fn is_block_diagonal(rho: &DensityMatrix, h: &Hamiltonian, tol: f64) -> Result<bool> {
    let d = dephase(rho, h)?;
    Ok(max_abs(&(d.matrix() - rho.matrix())) <= tol)
}

/// A unitary that is Haar-random on each energy eigenspace of `h_total` and
/// zero between eigenspaces.
pub fn random_energy_preserving_unitary<R: Rng + ?Sized>(h_total: &Hamiltonian, rng: &mut R) -> CMatrix {
    let n = h_total.dim();
    let mut u = CMatrix::zeros(n, n);
    for block in energy_blocks(h_total) {
        let b = haar_unitary(rng, block.len());
        for (a, &i) in block.iter().enumerate() {
            for (c, &j) in block.iter().enumerate() {
                u[(i, j)] = b[(a, c)];
            }
        }
    }
    u
}

/// [`random_energy_preserving_unitary`] from a fresh seeded generator.
pub fn energy_preserving_unitary_from_seed(h_total: &Hamiltonian, seed: u64) -> CMatrix {
    random_energy_preserving_unitary(h_total, &mut seeded_rng(seed))
}

/// `tr_R[U (ρ_S ⊗ γ_R) U†]` with `γ_R` the Gibbs state of `H_R`.
///
/// `U` must be unitary and commute with `H_S ⊗ 𝟙 + 𝟙 ⊗ H_R` to within
/// [`COMMUTATOR_TOL`].
pub fn thermal_op(
    rho_s: &DensityMatrix,
    h_s: &Hamiltonian,
    h_r: &Hamiltonian,
    ctx: &ThermalContext,
    u: &CMatrix,
) -> Result<DensityMatrix> {
    check_dim(h_s.dim(), rho_s.dim())?;
    let (ds, dr) = (h_s.dim(), h_r.dim());
    let n = ds * dr;
    if n > MAX_QUANTUM_DIM {
        return Err(Error::TooLarge { size: n, limit: MAX_QUANTUM_DIM });
    }
    if u.nrows() != n || u.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.nrows() });
    }
    let unitarity = max_abs(&(u.adjoint() * u - CMatrix::identity(n, n)));
    if unitarity > COMMUTATOR_TOL {
        return Err(Error::InvalidMatrix(format!("not unitary (deviation {unitarity:e})")));
    }
    let e = h_s.tensor(h_r);
    let levels = e.levels();
    let mut comm: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            comm = comm.max((u[(i, j)] * (levels[j] - levels[i])).norm());
        }
    }
    if comm > COMMUTATOR_TOL {
        return Err(Error::Precondition(format!(
            "unitary does not conserve the total energy (‖[U, H]‖ = {comm:e})"
        )));
    }
    let gamma_r = DensityMatrix::from_diagonal(&gibbs_state(h_r, ctx));
    let joint = u * rho_s.kron(&gamma_r).matrix() * u.adjoint();
    Ok(DensityMatrix::from_trusted(partial_trace_second(&joint, ds, dr)))
}

/// A channel `ρ ↦ tr_E[V ρ V†]` for an isometry `V: ℂ^{d_in} → ℂ^{d_out} ⊗ ℂ^{d_env}`.
#[derive(Clone, Debug)]
pub struct StinespringChannel {
    v: CMatrix,
    d_out: usize,
    d_env: usize,
}

impl StinespringChannel {
    /// Wraps an isometry, checking `V†V = 𝟙`.
    pub fn new(v: CMatrix, d_out: usize, d_env: usize) -> Result<Self> {
        let d_in = v.ncols();
        check_dim(d_out * d_env, v.nrows())?;
        if v.nrows() > MAX_QUANTUM_DIM {
            return Err(Error::TooLarge { size: v.nrows(), limit: MAX_QUANTUM_DIM });
        }
        let dev = max_abs(&(v.adjoint() * &v - CMatrix::identity(d_in, d_in)));
        if dev > COMMUTATOR_TOL {
            return Err(Error::InvalidMatrix(format!("not an isometry (deviation {dev:e})")));
        }
        Ok(Self { v, d_out, d_env })
    }

    /// A Haar-random isometry; requires `d_out·d_env ≥ d_in`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, d_in: usize, d_out: usize, d_env: usize) -> Result<Self> {
        let rows = d_out * d_env;
        if rows < d_in {
            return Err(Error::InvalidParameter(format!(
                "dilation space {d_out}×{d_env} is smaller than the input dimension {d_in}"
            )));
        }
        if rows > MAX_QUANTUM_DIM {
            return Err(Error::TooLarge { size: rows, limit: MAX_QUANTUM_DIM });
        }
        Ok(Self { v: haar_isometry(rng, rows, d_in), d_out, d_env })
    }

    pub fn d_in(&self) -> usize {
        self.v.ncols()
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        check_dim(self.d_in(), rho.dim())?;
        let joint = &self.v * rho.matrix() * self.v.adjoint();
        Ok(DensityMatrix::from_trusted(partial_trace_second(&joint, self.d_out, self.d_env)))
    }
}
