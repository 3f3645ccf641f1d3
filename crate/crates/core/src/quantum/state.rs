//! Density matrices.

use super::linalg::{hermitian_eigen, max_abs, partial_trace_first, partial_trace_second, CMatrix};
use crate::base::{ProbDist, Weights};
use crate::error::{Error, Result};
use crate::io::DensityDoc;
use num_complex::Complex64;
use rand::Rng;

/// Validation tolerance for Hermiticity, positivity and trace.
pub const STATE_TOL: f64 = 1e-9;

/// Largest dimension handled by the quantum layer.
pub const MAX_QUANTUM_DIM: usize = 16;

/// A Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: CMatrix,
}

impl DensityMatrix {
    /// Validates and symmetrizes `m`.
    pub fn new(m: CMatrix) -> Result<Self> {
        let n = m.nrows();
        if n == 0 || m.ncols() != n {
            return Err(Error::InvalidMatrix(format!(
                "density matrix must be square and non-empty, got {}×{}",
                m.nrows(),
                m.ncols()
            )));
        }
        if n > MAX_QUANTUM_DIM {
            return Err(Error::TooLarge { size: n, limit: MAX_QUANTUM_DIM });
        }
        let herm = max_abs(&(&m - m.adjoint()));
        if herm > STATE_TOL {
            return Err(Error::InvalidMatrix(format!("not Hermitian (deviation {herm:e})")));
        }
        let m = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let tr = m.trace().re;
        if (tr - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidMatrix(format!("trace {tr} differs from 1")));
        }
        let (vals, _) = hermitian_eigen(&m);
        let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -STATE_TOL {
            return Err(Error::InvalidMatrix(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { m })
    }

    /// The diagonal state with populations `p`.
    pub fn from_diagonal(p: &ProbDist) -> Self {
        let n = p.dim();
        let mut m = CMatrix::zeros(n, n);
        for (i, &w) in p.weights().iter().enumerate() {
            m[(i, i)] = Complex64::new(w, 0.0);
        }
        Self { m }
    }

    /// The pure state `|ψ⟩⟨ψ|` of a (normalized on input) vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::InvalidMatrix("zero state vector".into()));
        }
        let v: Vec<Complex64> = psi.iter().map(|z| z / norm).collect();
        let n = v.len();
        Ok(Self { m: CMatrix::from_fn(n, n, |i, j| v[i] * v[j].conj()) })
    }

    /// A random full-rank state `G G†/tr(G G†)` from a Ginibre matrix.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        let g = super::linalg::ginibre(rng, n, n);
        let m = &g * g.adjoint();
        let tr = m.trace();
        Self { m: m / tr }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    /// Wraps a matrix already known to be a state, symmetrizing roundoff.
    pub(crate) fn from_trusted(m: CMatrix) -> Self {
        let m = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        Self { m }
    }

    /// Eigenvalues (ascending order not guaranteed) and eigenvectors.
    pub fn eigen(&self) -> (Vec<f64>, CMatrix) {
        hermitian_eigen(&self.m)
    }

    /// Populations in the computational (energy) basis.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.m[(i, i)].re).collect()
    }

    /// Spectrum clamped to non-negative values.
    pub fn spectrum(&self) -> Vec<f64> {
        self.eigen().0.into_iter().map(|x| x.max(0.0)).collect()
    }

    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        Self { m: self.m.kronecker(&other.m) }
    }

    /// Reduced state on the first factor of `A ⊗ B`.
    pub fn partial_trace_second(&self, da: usize, db: usize) -> Result<DensityMatrix> {
        self.check_factor(da, db)?;
        Ok(Self::from_trusted(partial_trace_second(&self.m, da, db)))
    }

    /// Reduced state on the second factor of `A ⊗ B`.
    pub fn partial_trace_first(&self, da: usize, db: usize) -> Result<DensityMatrix> {
        self.check_factor(da, db)?;
        Ok(Self::from_trusted(partial_trace_first(&self.m, da, db)))
    }

    fn check_factor(&self, da: usize, db: usize) -> Result<()> {
        if da * db != self.dim() {
            return Err(Error::InvalidParameter(format!(
                "dimension {} does not factor as {da} × {db}",
                self.dim()
            )));
        }
        Ok(())
    }

    /// `(1 − t)·self + t·other`.
    pub fn mix(&self, other: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        crate::error::check_dim(self.dim(), other.dim())?;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidParameter(format!("mixing weight {t} outside [0,1]")));
        }
        Ok(Self {
            m: &self.m * Complex64::new(1.0 - t, 0.0) + &other.m * Complex64::new(t, 0.0),
        })
    }

    /// Whether the state commutes with `other` to within `tol`.
    pub fn commutes_with(&self, other: &DensityMatrix, tol: f64) -> bool {
        max_abs(&(&self.m * &other.m - &other.m * &self.m)) <= tol
    }

    pub fn to_doc(&self) -> DensityDoc {
        let n = self.dim();
        let re = (0..n).map(|i| (0..n).map(|j| self.m[(i, j)].re).collect()).collect();
        let im: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| self.m[(i, j)].im).collect()).collect();
        let any_im = im.iter().flatten().any(|&x| x != 0.0);
        DensityDoc { re, im: any_im.then_some(im) }
    }
}

impl TryFrom<&DensityDoc> for DensityMatrix {
    type Error = Error;

    fn try_from(doc: &DensityDoc) -> Result<Self> {
        let n = doc.re.len();
        let rows_ok = |rows: &Vec<Vec<f64>>| rows.len() == n && rows.iter().all(|r| r.len() == n);
        if !rows_ok(&doc.re) || doc.im.as_ref().is_some_and(|im| !rows_ok(im)) {
            return Err(Error::InvalidMatrix("real and imaginary parts must be square and equal-sized".into()));
        }
        let m = CMatrix::from_fn(n, n, |i, j| {
            let im = doc.im.as_ref().map_or(0.0, |im| im[i][j]);
            Complex64::new(doc.re[i][j], im)
        });
        DensityMatrix::new(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::seeded_rng;

    #[test]
    fn validation() {
        let bad = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.2, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-0.2, 0.0),
            ],
        );
        assert!(DensityMatrix::new(bad).is_err());
        let r = DensityMatrix::random(&mut seeded_rng(1), 3);
        assert!(DensityMatrix::new(r.matrix().clone()).is_ok());
        let doc = r.to_doc();
        let back = DensityMatrix::try_from(&doc).unwrap();
        assert!(max_abs(&(back.matrix() - r.matrix())) < 1e-15);
    }

    #[test]
    fn reductions() {
        let mut rng = seeded_rng(2);
        let (a, b) = (DensityMatrix::random(&mut rng, 2), DensityMatrix::random(&mut rng, 3));
        let ab = a.kron(&b);
        assert!(max_abs(&(ab.partial_trace_second(2, 3).unwrap().matrix() - a.matrix())) < 1e-12);
        assert!(max_abs(&(ab.partial_trace_first(2, 3).unwrap().matrix() - b.matrix())) < 1e-12);
    }
}
