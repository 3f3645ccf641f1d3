//! A dense two-phase simplex method with Bland's anti-cycling rule.
//!
//! Solves `min c·x` subject to `A x = b`, `x ≥ 0`.  Phase one minimizes the
//! sum of artificial variables; a positive optimum certifies infeasibility.
//! The problems solved here have at most a few hundred variables, for which
//! a dense tableau is simple and fast enough.

use crate::error::{Error, Result};

/// `min c·x` subject to `A x = b`, `x ≥ 0`, with `A` given by rows.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

impl LinearProgram {
    /// A feasibility problem (zero objective) over `n_vars` variables.
    pub fn feasibility(n_vars: usize) -> Self {
        Self { a: Vec::new(), b: Vec::new(), c: vec![0.0; n_vars] }
    }

    pub fn n_vars(&self) -> usize {
        self.c.len()
    }

    /// Appends the equality constraint `Σ_k coeffs[k].1 · x_{coeffs[k].0} = rhs`.
    pub fn add_constraint(&mut self, coeffs: &[(usize, f64)], rhs: f64) {
        let mut row = vec![0.0; self.n_vars()];
        for &(j, v) in coeffs {
            row[j] += v;
        }
        self.a.push(row);
        self.b.push(rhs);
    }
}

/// Solver tolerances.
#[derive(Clone, Copy, Debug)]
pub struct SimplexOptions {
    /// Phase-one optimum above which the problem is declared infeasible.
    pub feasibility_tol: f64,
    /// Smallest magnitude accepted as a pivot element.
    pub pivot_tol: f64,
    /// Reduced costs below `−cost_tol` make a column eligible to enter.
    pub cost_tol: f64,
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self { feasibility_tol: 1e-8, pivot_tol: 1e-9, cost_tol: 1e-11, max_iterations: 200_000 }
    }
}

/// Outcome of a solve.
#[derive(Clone, Debug)]
pub enum LpStatus {
    Optimal { x: Vec<f64>, objective: f64 },
    Infeasible { phase_one_residual: f64 },
    Unbounded,
}

struct Tableau {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols - 1)
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let cols = self.cols;
        let inv = 1.0 / self.at(pr, pc);
        for c in 0..cols {
            self.data[pr * cols + c] *= inv;
        }
        self.data[pr * cols + pc] = 1.0;
        let pivot_row: Vec<f64> = self.data[pr * cols..(pr + 1) * cols].to_vec();
        for r in 0..self.rows {
            if r == pr {
                continue;
            }
            let f = self.data[r * cols + pc];
            if f == 0.0 {
                continue;
            }
            let row = &mut self.data[r * cols..(r + 1) * cols];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= f * p;
            }
            row[pc] = 0.0;
        }
        self.basis[pr] = pc;
    }

    /// Runs simplex iterations with Bland's rule on the objective row
    /// (the last row), letting only columns `< n_enter` enter.
    fn optimize(&mut self, n_enter: usize, opts: &SimplexOptions) -> Result<bool> {
        let m = self.rows - 1;
        for _ in 0..opts.max_iterations {
            let entering = (0..n_enter).find(|&j| self.at(m, j) < -opts.cost_tol);
            let Some(j) = entering else {
                return Ok(true);
            };
            let mut best: Option<(usize, f64)> = None;
            for r in 0..m {
                let a = self.at(r, j);
                if a > opts.pivot_tol {
                    let ratio = self.rhs(r).max(0.0) / a;
                    best = match best {
                        None => Some((r, ratio)),
                        Some((br, bratio)) => {
                            if ratio < bratio - 1e-14
                                || (ratio <= bratio + 1e-14 && self.basis[r] < self.basis[br])
                            {
                                Some((r, ratio))
                            } else {
                                Some((br, bratio))
                            }
                        }
                    };
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j),
                None => return Ok(false),
            }
        }
        Err(Error::Solver(format!(
            "simplex did not converge within {} iterations",
            opts.max_iterations
        )))
    }
}

/// Solves a linear program with the two-phase simplex method.
pub fn solve(lp: &LinearProgram, opts: &SimplexOptions) -> Result<LpStatus> {
    let m = lp.a.len();
    let n = lp.n_vars();
    if lp.b.len() != m || lp.a.iter().any(|r| r.len() != n) {
        return Err(Error::Solver("inconsistent linear program dimensions".into()));
    }
    let cols = n + m + 1;
    let rows = m + 1;
    let mut t = Tableau { rows, cols, data: vec![0.0; rows * cols], basis: (n..n + m).collect() };
    for r in 0..m {
        let sign = if lp.b[r] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t.data[r * cols + j] = sign * lp.a[r][j];
        }
        t.data[r * cols + n + r] = 1.0;
        t.data[r * cols + cols - 1] = sign * lp.b[r];
    }
    // Phase one: minimize the sum of artificials.
    for j in (0..n).chain(std::iter::once(cols - 1)) {
        let s: f64 = (0..m).map(|r| t.at(r, j)).sum();
        t.data[m * cols + j] = -s;
    }
    t.optimize(n, opts)?;
    let residual = -t.rhs(m);
    if residual > opts.feasibility_tol {
        return Ok(LpStatus::Infeasible { phase_one_residual: residual });
    }
    // Drive remaining artificials out of the basis where possible; rows
    // without an eligible pivot are redundant and stay inert.
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| t.at(r, j).abs() > opts.pivot_tol) {
                t.pivot(r, j);
            }
        }
    }
    // Phase two objective row.
    for j in 0..cols {
        let cj = if j < n { lp.c[j] } else { 0.0 };
        let s: f64 = (0..m)
            .map(|r| {
                let b = t.basis[r];
                let cb = if b < n { lp.c[b] } else { 0.0 };
                cb * t.at(r, j)
            })
            .sum();
        t.data[m * cols + j] = if j == cols - 1 { -s } else { cj - s };
    }
    if !t.optimize(n, opts)? {
        return Ok(LpStatus::Unbounded);
    }
    let mut x = vec![0.0; n];
    for r in 0..m {
        if t.basis[r] < n {
            x[t.basis[r]] = t.rhs(r).max(0.0);
        }
    }
    let objective = lp.c.iter().zip(&x).map(|(c, x)| c * x).sum();
    Ok(LpStatus::Optimal { x, objective })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_optimum() {
        // min −x − y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
        let lp = LinearProgram {
            a: vec![vec![1.0, 2.0, 1.0, 0.0], vec![3.0, 1.0, 0.0, 1.0]],
            b: vec![4.0, 6.0],
            c: vec![-1.0, -1.0, 0.0, 0.0],
        };
        match solve(&lp, &SimplexOptions::default()).unwrap() {
            LpStatus::Optimal { x, objective } => {
                assert!((x[0] - 1.6).abs() < 1e-12 && (x[1] - 1.2).abs() < 1e-12);
                assert!((objective + 2.8).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x + y = 1 and x + y = 2.
        let lp = LinearProgram {
            a: vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            b: vec![1.0, 2.0],
            c: vec![0.0, 0.0],
        };
        assert!(matches!(
            solve(&lp, &SimplexOptions::default()).unwrap(),
            LpStatus::Infeasible { .. }
        ));
        // min −x s.t. x − y = 0.
        let lp = LinearProgram { a: vec![vec![1.0, -1.0]], b: vec![0.0], c: vec![-1.0, 0.0] };
        assert!(matches!(solve(&lp, &SimplexOptions::default()).unwrap(), LpStatus::Unbounded));
    }

    #[test]
    fn redundant_rows() {
        // x + y = 1 stated twice, minimize y.
        let lp = LinearProgram {
            a: vec![vec![1.0, 1.0], vec![2.0, 2.0], vec![-1.0, -1.0]],
            b: vec![1.0, 2.0, -1.0],
            c: vec![0.0, 1.0],
        };
        match solve(&lp, &SimplexOptions::default()).unwrap() {
            LpStatus::Optimal { x, objective } => {
                assert!((x[0] - 1.0).abs() < 1e-12 && objective.abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
