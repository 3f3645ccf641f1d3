//! Approximate catalysis: the tensor-power catalyst whose error vanishes
//! with size, and the embezzling state that makes any transition possible
//! while changing almost nothing.
//!
//! Run with `cargo run --example approximate_catalysis`.

use thermolaws::base::{Hamiltonian, ProbDist, ThermalContext};
use thermolaws::catalysis::{classify_regime, embezzle_erase, embezzler, tensor_catalyst_report};

fn main() -> thermolaws::Result<()> {
    let p = ProbDist::new(vec![0.8, 0.15, 0.05])?;
    let q = ProbDist::new(vec![0.5, 0.3, 0.2])?;
    println!("{:>3}  {:>10}  {:>10}  {:>10}", "n", "dim", "residual", "fannes");
    for n in 2..=5 {
        let r = tensor_catalyst_report(&p, &q, n)?;
        println!("{n:>3}  {:>10}  {:>10.3e}  {:>10.3e}", r.catalyst_dim, r.residual, r.fannes);
    }

    let ctx = ThermalContext::new(1.0)?;
    println!("\nerasing a qubit with an embezzler of dimension n");
    for k in [4, 8, 12, 16] {
        let n = 1usize << k;
        let r = embezzle_erase(2, n)?;
        let c = embezzler(n)?;
        let regime = classify_regime(&c.state, &r.final_catalyst, &Hamiltonian::trivial(n), &ctx, 0.3)?;
        println!(
            "n = 2^{k:<2}  catalyst changed by {:.4}, regime {:?}, restoring it costs {:?}",
            r.trace_dist, regime.regime, regime.work_to_restore
        );
    }
    Ok(())
}
