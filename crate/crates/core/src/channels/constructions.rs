//! Structured channels: the uniform embedding `Γ`, the rational
//! approximation channel, and the direct-sum decomposition test.

use super::StochasticMatrix;
use crate::base::{ProbDist, Weights};
use crate::error::{check_dim, Error, Result};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Block sizes `d_i` of the embedding `Γ(p) = ⊕_i p_i η_{d_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSpec {
    block_sizes: Vec<usize>,
}

impl EmbeddingSpec {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self> {
        if block_sizes.is_empty() || block_sizes.contains(&0) {
            return Err(Error::InvalidParameter("block sizes must be positive".into()));
        }
        Ok(Self { block_sizes })
    }

    /// Block sizes proportional to a rational distribution's numerators over
    /// a common denominator.
    pub fn from_rational(gamma: &ProbDist) -> Result<Self> {
        let exact = gamma
            .exact()
            .ok_or_else(|| Error::InvalidParameter("embedding needs an exact distribution".into()))?;
        let lcm = exact
            .iter()
            .fold(BigInt::one(), |acc, r| num_integer_lcm(&acc, r.denom()));
        let sizes = exact
            .iter()
            .map(|r| {
                let n = (r * BigRational::from_integer(lcm.clone())).to_integer();
                usize::try_from(n).map_err(|_| Error::TooLarge { size: usize::MAX, limit: usize::MAX })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// `N = Σ d_i`.
    pub fn total(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// `γ_i = d_i / N`, the distribution that `Γ` maps to `η_N`.
    pub fn gamma(&self) -> ProbDist {
        let n = BigInt::from(self.total());
        ProbDist::from_rationals(
            self.block_sizes
                .iter()
                .map(|&d| BigRational::new(BigInt::from(d), n.clone()))
                .collect(),
        )
        .expect("block weights are a distribution")
    }

    /// `Γ`: spreads `p_i` uniformly over `d_i` outcomes.
    pub fn embed(&self, p: &ProbDist) -> Result<ProbDist> {
        check_dim(self.block_sizes.len(), p.dim())?;
        if let Some(exact) = p.exact() {
            let out = exact
                .iter()
                .zip(&self.block_sizes)
                .flat_map(|(w, &d)| {
                    std::iter::repeat_n(w / BigRational::from_integer(BigInt::from(d)), d)
                })
                .collect();
            return ProbDist::from_rationals(out);
        }
        let out = p
            .weights()
            .iter()
            .zip(&self.block_sizes)
            .flat_map(|(&w, &d)| std::iter::repeat_n(w / d as f64, d))
            .collect();
        ProbDist::new(out)
    }

    /// `Γ*`: sums each block.
    pub fn unembed(&self, p: &ProbDist) -> Result<ProbDist> {
        check_dim(self.total(), p.dim())?;
        if let Some(exact) = p.exact() {
            let mut out = Vec::with_capacity(self.block_sizes.len());
            let mut k = 0;
            for &d in &self.block_sizes {
                out.push(exact[k..k + d].iter().fold(BigRational::zero(), |a, b| a + b));
                k += d;
            }
            return ProbDist::from_rationals(out);
        }
        let w = p.weights();
        let mut out = Vec::with_capacity(self.block_sizes.len());
        let mut k = 0;
        for &d in &self.block_sizes {
            out.push(w[k..k + d].iter().sum());
            k += d;
        }
        ProbDist::new(out)
    }

    /// `Γ` as a stochastic matrix.
    pub fn embed_matrix(&self) -> StochasticMatrix {
        let mut m = DMatrix::zeros(self.total(), self.block_sizes.len());
        let mut k = 0;
        for (i, &d) in self.block_sizes.iter().enumerate() {
            for r in k..k + d {
                m[(r, i)] = 1.0 / d as f64;
            }
            k += d;
        }
        StochasticMatrix::new(m).expect("embedding is stochastic")
    }
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

/// The rational approximation channel for a full-rank, descending `q`.
///
/// Entries `q̃_i = ⌈q_i N⌉/N` for `i < k` and the last entry balances.  The
/// returned channel fixes the first `k − 1` outcomes and leaks mass
/// `Δ_j/q_k` from the last outcome to outcome `j`, where `Δ_j = q̃_j − q_j`,
/// so that it maps `q` to `q̃` while moving any `p` by at most `1/√N` in
/// statistical distance.  Requires `q_k > k/√N`.
pub fn rational_approx_channel(q: &ProbDist, n: u64) -> Result<(ProbDist, StochasticMatrix)> {
    let k = q.dim();
    let w = q.weights();
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Precondition("q must be sorted in non-increasing order".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let threshold = k as f64 / (n as f64).sqrt();
    if !(w[k - 1] > threshold) {
        return Err(Error::Precondition(format!(
            "smallest entry {} must exceed k/√N = {threshold}; increase N",
            w[k - 1]
        )));
    }
    let q_tilde = match q.exact() {
        Some(exact) => {
            let nn = BigInt::from(n);
            let mut out: Vec<BigRational> = exact[..k - 1]
                .iter()
                .map(|r| {
                    let c = (r * BigRational::from_integer(nn.clone())).ceil();
                    c / BigRational::from_integer(nn.clone())
                })
                .collect();
            let rest = BigRational::one() - out.iter().fold(BigRational::zero(), |a, b| a + b);
            out.push(rest);
            ProbDist::from_rationals(out)?
        }
        None => {
            let nf = n as f64;
            // Values already on the 1/N lattice stay put despite rounding.
            let mut out: Vec<f64> = w[..k - 1].iter().map(|&x| (x * nf - 1e-9).ceil() / nf).collect();
            let rest = 1.0 - out.iter().sum::<f64>();
            out.push(rest);
            ProbDist::new(out)?
        }
    };
    let qt = q_tilde.weights();
    let qk = w[k - 1];
    let mut m = DMatrix::identity(k, k);
    let mut leaked = 0.0;
    for j in 0..k - 1 {
        let delta_j = (qt[j] - w[j]).max(0.0);
        m[(j, k - 1)] = delta_j / qk;
        leaked += delta_j;
    }
    m[(k - 1, k - 1)] = 1.0 - leaked / qk;
    Ok((q_tilde, StochasticMatrix::new(m)?))
}

/// Tests whether `l` splits into a direct sum over the first `split`
/// outcomes and the rest.
///
/// The hypotheses are that `l` fixes the full-rank `w` and maps `t` to `t′`,
/// where `t` is positive exactly on the first `split` outcomes and `t′`
/// vanishes outside them.  Under these hypotheses the cross-block entries of
/// `l` must vanish; the function reports whether they do (within `1e−8`).
/// A violated hypothesis is an error.
pub fn check_direct_sum(
    l: &StochasticMatrix,
    split: usize,
    w: &ProbDist,
    t: &ProbDist,
    t_prime: &ProbDist,
) -> Result<bool> {
    const TOL: f64 = 1e-8;
    let n = l.n_inputs();
    check_dim(n, l.n_outputs())?;
    for d in [w.dim(), t.dim(), t_prime.dim()] {
        check_dim(n, d)?;
    }
    if split == 0 || split > n {
        return Err(Error::InvalidParameter(format!("split {split} outside 1..={n}")));
    }
    if !w.is_full_rank() {
        return Err(Error::Precondition("w must have full rank".into()));
    }
    if l.residual(w.weights(), w.weights()) > TOL {
        return Err(Error::Precondition("channel does not preserve w".into()));
    }
    let tw = t.weights();
    if tw[..split].iter().any(|&x| x <= 0.0) || tw[split..].iter().any(|&x| x > 0.0) {
        return Err(Error::Precondition(format!(
            "t must be positive exactly on the first {split} outcomes"
        )));
    }
    if t_prime.weights()[split..].iter().any(|&x| x > TOL) {
        return Err(Error::Precondition(format!(
            "t′ must vanish outside the first {split} outcomes"
        )));
    }
    if l.residual(tw, t_prime.weights()) > TOL {
        return Err(Error::Precondition("channel does not map t to t′".into()));
    }
    let cross = (0..n).any(|j| (0..n).any(|i| (j < split) != (i < split) && l.entry(j, i) > TOL));
    Ok(!cross)
}
