//! Seeded random instances: distributions, Hamiltonians and channels.
//!
//! Used by the catalyst search and by the property and oracle suites.  All
//! generators take an explicit RNG so that runs are reproducible.

use crate::base::{Hamiltonian, ProbDist, Weights};
use crate::channels::StochasticMatrix;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

/// The crate's standard seeded generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A sample from the flat Dirichlet distribution `Dir(1, …, 1)`.
pub fn random_dist<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ProbDist {
    let w: Vec<f64> = (0..d).map(|_| rng.sample::<f64, _>(Exp1) + 1e-300).collect();
    ProbDist::normalized(w).expect("Dirichlet sample is a distribution")
}

/// A Dirichlet sample in which each entry is zeroed with probability
/// `p_zero` (at least one entry stays positive).
pub fn random_dist_with_zeros<R: Rng + ?Sized>(rng: &mut R, d: usize, p_zero: f64) -> ProbDist {
    let keep = rng.gen_range(0..d);
    let w: Vec<f64> = (0..d)
        .map(|i| {
            let x: f64 = rng.sample(Exp1);
            if i != keep && rng.gen_bool(p_zero) {
                0.0
            } else {
                x + 1e-300
            }
        })
        .collect();
    ProbDist::normalized(w).expect("sample is a distribution")
}

/// A rational distribution with denominator `denom` (exact mode).
pub fn random_rational_dist<R: Rng + ?Sized>(rng: &mut R, d: usize, denom: u32) -> ProbDist {
    assert!(denom as usize >= d, "denominator too small for a full-rank sample");
    // Stars and bars with every part at least one.
    let mut cuts: Vec<u32> = Vec::with_capacity(d + 1);
    while cuts.len() < d - 1 {
        let c = rng.gen_range(1..denom);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(0);
    cuts.push(denom);
    cuts.sort_unstable();
    let den = BigInt::from(denom);
    let exact = cuts
        .windows(2)
        .map(|w| BigRational::new(BigInt::from(w[1] - w[0]), den.clone()))
        .collect();
    ProbDist::from_rationals(exact).expect("parts sum to one")
}

/// Energies drawn uniformly from `[0, scale)`.
pub fn random_hamiltonian<R: Rng + ?Sized>(rng: &mut R, d: usize, scale: f64) -> Hamiltonian {
    Hamiltonian::new((0..d).map(|_| rng.gen::<f64>() * scale).collect())
        .expect("finite energies")
}

/// A channel whose columns are independent Dirichlet samples.
pub fn random_stochastic<R: Rng + ?Sized>(rng: &mut R, d_out: usize, d_in: usize) -> StochasticMatrix {
    let cols: Vec<ProbDist> = (0..d_in).map(|_| random_dist(rng, d_out)).collect();
    StochasticMatrix::new(DMatrix::from_fn(d_out, d_in, |j, i| cols[i].weights()[j]))
        .expect("Dirichlet columns are stochastic")
}

/// A random channel fixing `g`: a product of `steps` partial two-level
/// thermalizations, each replacing `(x_i, x_j)` by
/// `(1−λ)(x_i, x_j) + λ(x_i + x_j)(g_i, g_j)/(g_i + g_j)`.
pub fn random_gibbs_preserving<R: Rng + ?Sized>(
    rng: &mut R,
    g: &ProbDist,
    steps: usize,
) -> StochasticMatrix {
    let d = g.dim();
    let gw = g.weights();
    let mut m = DMatrix::<f64>::identity(d, d);
    if d < 2 {
        return StochasticMatrix::new(m).expect("identity");
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let lambda: f64 = rng.gen();
        let (gi, gj) = (gw[i] / (gw[i] + gw[j]), gw[j] / (gw[i] + gw[j]));
        let mut t = DMatrix::<f64>::identity(d, d);
        t[(i, i)] = 1.0 - lambda + lambda * gi;
        t[(i, j)] = lambda * gi;
        t[(j, i)] = lambda * gj;
        t[(j, j)] = 1.0 - lambda + lambda * gj;
        m = t * m;
    }
    StochasticMatrix::renormalized(m).expect("product of stochastic matrices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{gibbs_state, ThermalContext};

    #[test]
    fn generators_are_valid_and_seeded() {
        let mut a = seeded_rng(11);
        let mut b = seeded_rng(11);
        assert_eq!(random_dist(&mut a, 5), random_dist(&mut b, 5));
        let r = random_rational_dist(&mut a, 4, 12);
        assert_eq!(r.exact().unwrap().len(), 4);
        let h = random_hamiltonian(&mut a, 3, 2.0);
        let g = gibbs_state(&h, &ThermalContext::new(1.3).unwrap());
        let c = random_gibbs_preserving(&mut a, &g, 10);
        assert!(c.apply(&g).unwrap().approx_eq(&g, 1e-12));
        let z = random_dist_with_zeros(&mut a, 6, 0.5);
        assert!(z.rank() >= 1);
    }
}
