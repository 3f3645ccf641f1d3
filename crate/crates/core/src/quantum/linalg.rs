//! Dense complex linear algebra for small Hermitian matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Complex matrix type of the quantum layer.
pub type CMatrix = DMatrix<Complex64>;

/// Eigenvalues below this are treated as zero in support computations.
pub const EIG_TOL: f64 = 1e-12;

/// Eigendecomposition `m = V diag(λ) V†` of a Hermitian matrix.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let e = h.symmetric_eigen();
    (e.eigenvalues.iter().copied().collect(), e.eigenvectors)
}

/// `V diag(f(λ)) V†`.
pub fn spectral_apply(vals: &[f64], vecs: &CMatrix, f: impl Fn(f64) -> f64) -> CMatrix {
    let n = vals.len();
    let mut scaled = vecs.clone();
    for (j, &v) in vals.iter().enumerate() {
        let fv = Complex64::new(f(v), 0.0);
        for i in 0..n {
            scaled[(i, j)] *= fv;
        }
    }
    scaled * vecs.adjoint()
}

/// Kronecker product, row-major in the first factor.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// `tr_B` of an operator on `A ⊗ B`.
pub fn partial_trace_second(m: &CMatrix, da: usize, db: usize) -> CMatrix {
    assert_eq!(m.nrows(), da * db, "operator dimension does not factor");
    CMatrix::from_fn(da, da, |i, j| (0..db).map(|k| m[(i * db + k, j * db + k)]).sum())
}

/// `tr_A` of an operator on `A ⊗ B`.
pub fn partial_trace_first(m: &CMatrix, da: usize, db: usize) -> CMatrix {
    assert_eq!(m.nrows(), da * db, "operator dimension does not factor");
    CMatrix::from_fn(db, db, |i, j| (0..da).map(|k| m[(k * db + i, k * db + j)]).sum())
}

/// Largest absolute entry.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// A matrix of independent standard complex Gaussians.
pub fn ginibre<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    })
}

/// A Haar-random isometry `ℂ^cols → ℂ^rows` (`rows ≥ cols`): the `Q` factor
/// of a Ginibre matrix with the phases of `R`'s diagonal removed.
pub fn haar_isometry<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    assert!(rows >= cols, "an isometry needs rows ≥ cols");
    let qr = ginibre(rng, rows, cols).qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..cols {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..rows {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// A Haar-random unitary.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    haar_isometry(rng, n, n)
}
