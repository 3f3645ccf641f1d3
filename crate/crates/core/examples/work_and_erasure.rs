//! Work accounting: work distance, extractable work, work of formation,
//! wits, qubit batteries and erasure with a quantum memory.
//!
//! Run with `cargo run --example work_and_erasure`.

use thermolaws::base::{Hamiltonian, ProbDist, ThermalContext};
use thermolaws::work::{
    battery_equivalence_check, erasure_work, w_cost, w_ext, wit_transition_check, work_distance,
};

fn main() -> thermolaws::Result<()> {
    let h = Hamiltonian::new(vec![0.0, 1.0])?;
    let ctx = ThermalContext::new(1.0)?;
    let excited = ProbDist::pure(2, 1);
    let ground = ProbDist::pure(2, 0);

    println!("extractable work of |1>: {:.6}", w_ext(&excited, &h, &ctx)?);
    println!("work to form |1>: {:.6}", w_cost(&excited, &h, &ctx)?);
    let wd = work_distance(&excited, &ground, &h, &ctx)?;
    println!("work distance |1> -> |0>: {wd:?}");

    let w = wd.to_f64();
    for delta in [-1e-3, 1e-3] {
        let r = wit_transition_check(&excited, &ground, &h, &ctx, w + delta)?;
        println!("raise a wit by {:.4}: {:?}", w + delta, r.verdict);
    }

    let trivial = Hamiltonian::trivial(2);
    let b = battery_equivalence_check(&ProbDist::pure(2, 0), &ProbDist::uniform(2), &trivial, &ctx)?;
    println!("qubit battery sweep: {b:?}");

    // Erasing a bit costs kT ln 2 alone, nothing with a correlated memory.
    let alone = ProbDist::uniform(2);
    let correlated = ProbDist::new(vec![0.5, 0.0, 0.0, 0.5])?;
    println!("erase a random bit: {:?}", erasure_work(&alone, (1, 2))?);
    println!("erase it with a perfect copy: {:?}", erasure_work(&correlated, (2, 2))?);
    Ok(())
}
