//! Probability vectors, in floating-point or exact rational form.

use crate::error::{check_dim, Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

/// Normalization and comparison tolerance for float-mode distributions.
pub const TOL: f64 = 1e-9;

/// Anything that exposes a weight vector, normalized or not.
pub trait Weights {
    fn weights(&self) -> &[f64];

    fn dim(&self) -> usize {
        self.weights().len()
    }

    fn total(&self) -> f64 {
        self.weights().iter().sum()
    }
}

/// Arithmetic mode of a [`ProbDist`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Float,
    Exact,
}

/// A finite probability distribution.
///
/// Float weights are always available.  A distribution built from rationals
/// additionally keeps the exact weights, and operations that can preserve
/// exactness (products, padding, embeddings) do so.
#[derive(Clone, Debug)]
pub struct ProbDist {
    weights: Vec<f64>,
    exact: Option<Vec<BigRational>>,
}

impl ProbDist {
    /// Builds a float-mode distribution.
    ///
    /// Weights must be non-negative and sum to one within [`TOL`]; they are
    /// then rescaled to remove the residual drift.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "weight {w} is not a non-negative finite number"
            )));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > TOL {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}, not 1"
            )));
        }
        let weights = weights.into_iter().map(|w| w / total).collect();
        Ok(Self { weights, exact: None })
    }

    /// Normalizes an arbitrary non-negative vector with positive total.
    pub fn normalized(weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::InvalidDistribution(format!(
                "cannot normalize a vector with total {total}"
            )));
        }
        Self::new(weights.into_iter().map(|w| w / total).collect())
    }

    /// Builds an exact-mode distribution; the weights must sum to exactly one.
    pub fn from_rationals(exact: Vec<BigRational>) -> Result<Self> {
        if exact.is_empty() {
            return Err(Error::InvalidDistribution("empty weight vector".into()));
        }
        if let Some(w) = exact.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidDistribution(format!("negative weight {w}")));
        }
        let total: BigRational = exact.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "rational weights sum to {total}, not 1"
            )));
        }
        let weights = exact.iter().map(rational_to_f64).collect();
        Ok(Self { weights, exact: Some(exact) })
    }

    /// Parses rationals written as `"num/den"` or integers.
    pub fn from_rational_strs<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let exact = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rationals(exact)
    }

    /// The uniform distribution `η_n`, exact.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "uniform distribution needs n ≥ 1");
        let w = BigRational::new(BigInt::one(), BigInt::from(n));
        Self::from_rationals(vec![w; n]).expect("uniform weights are valid")
    }

    /// The point mass on index `i` of an `n`-outcome space, exact.
    pub fn pure(n: usize, i: usize) -> Self {
        assert!(i < n, "index {i} out of range for dimension {n}");
        let exact = (0..n)
            .map(|k| if k == i { BigRational::one() } else { BigRational::zero() })
            .collect();
        Self::from_rationals(exact).expect("point mass is valid")
    }

    pub fn mode(&self) -> Mode {
        if self.exact.is_some() {
            Mode::Exact
        } else {
            Mode::Float
        }
    }

    pub fn exact(&self) -> Option<&[BigRational]> {
        self.exact.as_deref()
    }

    /// Drops the exact representation.
    pub fn to_float(&self) -> Self {
        Self { weights: self.weights.clone(), exact: None }
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim()
    }

    pub fn max(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.weights.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// The weights sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<f64> {
        let mut w = self.weights.clone();
        w.sort_by(|a, b| b.total_cmp(a));
        w
    }

    /// Tensor product, indexed row-major: `(i, j) ↦ i · other.dim() + j`.
    pub fn tensor(&self, other: &ProbDist) -> ProbDist {
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| a * b))
            .collect();
        let exact = match (&self.exact, &other.exact) {
            (Some(x), Some(y)) => Some(
                x.iter()
                    .flat_map(|a| y.iter().map(move |b| a * b))
                    .collect(),
            ),
            _ => None,
        };
        ProbDist { weights, exact }
    }

    /// `n`-fold tensor power (`n ≥ 1`).
    pub fn tensor_power(&self, n: usize) -> ProbDist {
        assert!(n >= 1, "tensor power needs n ≥ 1");
        let mut out = self.clone();
        for _ in 1..n {
            out = out.tensor(self);
        }
        out
    }

    /// Appends zero weights up to dimension `n`.
    pub fn pad(&self, n: usize) -> ProbDist {
        assert!(n >= self.dim(), "cannot pad to a smaller dimension");
        let mut weights = self.weights.clone();
        weights.resize(n, 0.0);
        let exact = self.exact.as_ref().map(|x| {
            let mut x = x.clone();
            x.resize(n, BigRational::zero());
            x
        });
        ProbDist { weights, exact }
    }

    /// Reorders the weights: output index `k` holds input index `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> ProbDist {
        assert_eq!(perm.len(), self.dim());
        ProbDist {
            weights: perm.iter().map(|&i| self.weights[i]).collect(),
            exact: self
                .exact
                .as_ref()
                .map(|x| perm.iter().map(|&i| x[i].clone()).collect()),
        }
    }

    /// The mixture `(1 − t)·self + t·other`.
    pub fn mix(&self, other: &ProbDist, t: f64) -> Result<ProbDist> {
        check_dim(self.dim(), other.dim())?;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidParameter(format!("mixing weight {t} outside [0,1]")));
        }
        let w = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (1.0 - t) * a + t * b)
            .collect();
        ProbDist::normalized(w)
    }

    /// The `ℓ₁` distance `Σ|p_i − q_i|` (twice the total-variation distance).
    pub fn l1_distance(&self, other: &ProbDist) -> f64 {
        l1_distance(&self.weights, &other.weights)
    }

    /// Exact equality in exact mode, equality within `tol` otherwise.
    pub fn approx_eq(&self, other: &ProbDist, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => self
                .weights
                .iter()
                .zip(&other.weights)
                .all(|(a, b)| (a - b).abs() <= tol),
        }
    }

    /// Direct sum `⊕_k c_k · parts_k` with mixing weights `c` summing to one.
    pub fn direct_sum(parts: &[(f64, &ProbDist)]) -> Result<ProbDist> {
        let weights = parts
            .iter()
            .flat_map(|(c, p)| p.weights.iter().map(move |w| c * w))
            .collect();
        ProbDist::new(weights)
    }
}

impl Weights for ProbDist {
    fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl PartialEq for ProbDist {
    fn eq(&self, other: &Self) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => self.weights == other.weights,
        }
    }
}

/// A sub-normalized weight vector (`Σ w_i ≤ 1`), the output of smoothing.
#[derive(Clone, Debug, PartialEq)]
pub struct SubDist {
    weights: Vec<f64>,
}

impl SubDist {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!(
                "weight {w} is not a non-negative finite number"
            )));
        }
        let total: f64 = weights.iter().sum();
        if total > 1.0 + TOL {
            return Err(Error::InvalidDistribution(format!(
                "sub-normalized weights sum to {total} > 1"
            )));
        }
        Ok(Self { weights })
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    pub fn max(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }
}

impl Weights for SubDist {
    fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl From<&ProbDist> for SubDist {
    fn from(p: &ProbDist) -> Self {
        SubDist { weights: p.weights.clone() }
    }
}

/// `Σ|a_i − b_i|` over equal-length slices.
pub fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "l1 distance needs equal lengths");
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Parses `"num/den"` or an integer into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidDistribution(format!("cannot parse {s:?} as a rational"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidDistribution(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely unbalanced numerator/denominator: fall back to a
        // digit-length estimate.
        let n = r.numer().to_string();
        let d = r.denom().to_string();
        let exp = n.trim_start_matches('-').len() as i32 - d.len() as i32;
        10f64.powi(exp) * r.signum().to_f64().unwrap_or(0.0)
    })
}
