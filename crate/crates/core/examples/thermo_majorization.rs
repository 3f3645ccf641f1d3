//! Thermo-majorization curves and the channel oracle that certifies them.
//!
//! A transition between diagonal states is possible by thermal operations
//! exactly when the curve of the input lies above that of the output.  The
//! example compares that geometric test with a direct search for a
//! Gibbs-preserving stochastic matrix.
//!
//! Run with `cargo run --example thermo_majorization`.

use thermolaws::base::{gibbs_state, Hamiltonian, ProbDist, ThermalContext, Weights};
use thermolaws::channels::{lp_dmajorization, DmajOutcome};
use thermolaws::majorize::{curve_dominates, thermo_curve};

fn main() -> thermolaws::Result<()> {
    let h = Hamiltonian::new(vec![0.0, 0.5, 1.5])?;
    let ctx = ThermalContext::new(1.0)?;
    let gamma = gibbs_state(&h, &ctx);

    let p = ProbDist::new(vec![0.2, 0.7, 0.1])?;
    let curve = thermo_curve(&p, &h, &ctx)?;
    println!("curve of p = {:?}", curve.points());
    println!("curve of the Gibbs state = {:?}", thermo_curve(&gamma, &h, &ctx)?.points());

    for target in [vec![0.5, 0.35, 0.15], vec![0.1, 0.85, 0.05], gamma.weights().to_vec()] {
        let t = ProbDist::new(target)?;
        let by_curve = curve_dominates(&curve, &thermo_curve(&t, &h, &ctx)?)?;
        let oracle = lp_dmajorization(&p, &gamma, &t, &gamma)?;
        print!("p -> {:?}: curves say {by_curve}, ", t.weights());
        match oracle {
            DmajOutcome::Feasible(w) => println!("channel found:\n{}", w.matrix()),
            DmajOutcome::Infeasible { phase_one_residual } => {
                println!("no channel (residual {phase_one_residual:.3e})")
            }
        }
    }
    Ok(())
}
