//! Column-stochastic matrices acting on probability vectors.

use crate::base::{ProbDist, Weights, TOL};
use crate::error::{check_dim, Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// A classical channel.  Entry `(j, i)` is the probability of output `j`
/// given input `i`; every column sums to one.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticMatrix {
    m: DMatrix<f64>,
}

impl StochasticMatrix {
    /// Validates non-negativity and unit column sums (within [`TOL`]).
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() == 0 || m.ncols() == 0 {
            return Err(Error::InvalidMatrix("empty stochastic matrix".into()));
        }
        if let Some(x) = m.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidMatrix(format!("entry {x} is not a probability")));
        }
        for (i, col) in m.column_iter().enumerate() {
            let s = col.sum();
            if (s - 1.0).abs() > TOL {
                return Err(Error::InvalidMatrix(format!("column {i} sums to {s}")));
            }
        }
        Ok(Self { m })
    }

    /// Clamps tiny negative entries and rescales columns to unit sum.
    /// Used to clean solver output before validation.
    pub fn renormalized(mut m: DMatrix<f64>) -> Result<Self> {
        m.iter_mut().for_each(|x| *x = x.max(0.0));
        for mut col in m.column_iter_mut() {
            let s = col.sum();
            if s > 0.0 {
                col /= s;
            }
        }
        Self::new(m)
    }

    /// Builds a matrix from rows (`rows[j][i] = P(i → j)`).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Self::new(DMatrix::from_fn(nr, nc, |j, i| rows[j][i]))
    }

    pub fn identity(n: usize) -> Self {
        Self { m: DMatrix::identity(n, n) }
    }

    /// The channel that outputs `g` whatever the input.
    pub fn constant(g: &ProbDist, n_in: usize) -> Self {
        let w = g.weights();
        Self { m: DMatrix::from_fn(w.len(), n_in, |j, _| w[j]) }
    }

    /// The permutation channel sending input `i` to output `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m[(j, i)] = 1.0;
        }
        Self { m }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn n_inputs(&self) -> usize {
        self.m.ncols()
    }

    pub fn n_outputs(&self) -> usize {
        self.m.nrows()
    }

    /// `P(i → j)`.
    pub fn entry(&self, j: usize, i: usize) -> f64 {
        self.m[(j, i)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.m.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    /// Applies the channel to a distribution.
    pub fn apply(&self, p: &ProbDist) -> Result<ProbDist> {
        check_dim(self.n_inputs(), p.dim())?;
        ProbDist::normalized(self.apply_weights(p.weights()))
    }

    /// Applies the channel to an arbitrary weight vector.
    pub fn apply_weights(&self, p: &[f64]) -> Vec<f64> {
        assert_eq!(p.len(), self.n_inputs(), "channel input dimension");
        (&self.m * DVector::from_column_slice(p)).iter().map(|x| x.max(0.0)).collect()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &StochasticMatrix) -> Result<Self> {
        check_dim(self.n_inputs(), first.n_outputs())?;
        Ok(Self { m: &self.m * &first.m })
    }

    /// Convex combination `Σ_k c_k Λ_k`.
    pub fn convex_combination(parts: &[(f64, &StochasticMatrix)]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty convex combination".into()))?;
        let mut m = DMatrix::zeros(first.1.n_outputs(), first.1.n_inputs());
        for (c, s) in parts {
            if s.m.shape() != m.shape() {
                return Err(Error::InvalidMatrix("shape mismatch in convex combination".into()));
            }
            m += &s.m * *c;
        }
        Self::new(m)
    }

    /// Largest violation of `Λp = target` in absolute value.
    pub fn residual(&self, p: &[f64], target: &[f64]) -> f64 {
        self.apply_weights(p)
            .iter()
            .zip(target)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// JSON form: `{"rows": [[..], ..]}`.
impl Serialize for StochasticMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            rows: Vec<Vec<f64>>,
        }
        Doc { rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StochasticMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            rows: Vec<Vec<f64>>,
        }
        let doc = Doc::deserialize(d)?;
        StochasticMatrix::from_rows(&doc.rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorize::majorizes;

    #[test]
    fn examples() {
        let p = ProbDist::new(vec![0.2, 0.3, 0.5]).unwrap();
        assert!(StochasticMatrix::identity(3).apply(&p).unwrap().approx_eq(&p, 0.0));
        let g = ProbDist::new(vec![0.6, 0.4]).unwrap();
        assert!(StochasticMatrix::constant(&g, 3).apply(&p).unwrap().approx_eq(&g, 1e-15));
        let mix = StochasticMatrix::convex_combination(&[
            (0.3, &StochasticMatrix::permutation(&[1, 2, 0])),
            (0.7, &StochasticMatrix::permutation(&[0, 2, 1])),
        ])
        .unwrap();
        assert!(majorizes(&p, &mix.apply(&p).unwrap()));
        assert!(StochasticMatrix::from_rows(&[vec![0.5, 1.0], vec![0.6, 0.0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = StochasticMatrix::from_rows(&[vec![0.25, 1.0], vec![0.75, 0.0]]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: StochasticMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
