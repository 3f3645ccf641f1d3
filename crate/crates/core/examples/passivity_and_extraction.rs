//! Passivity, complete passivity and many-copy work extraction from a
//! population inversion.
//!
//! Run with `cargo run --example passivity_and_extraction`.

use thermolaws::base::{gibbs_state, Hamiltonian, ProbDist, ThermalContext};
use thermolaws::zeroeth::{extraction_simulation, is_completely_passive, is_passive};

fn main() -> thermolaws::Result<()> {
    let h = Hamiltonian::new(vec![0.0, 1.0, 2.0])?;
    let ctx = ThermalContext::new(0.7)?;
    println!("Gibbs state: {:?}", is_completely_passive(&gibbs_state(&h, &ctx), &h, 4)?);

    // Passive for one copy, yet three copies hold an inversion.
    let p = ProbDist::new(vec![0.5, 0.45, 0.05])?;
    println!("one copy: {:?}", is_passive(&p, &h)?);
    println!("up to four copies: {:?}", is_completely_passive(&p, &h, 4)?);

    let h2 = Hamiltonian::new(vec![0.0, 1.0])?;
    let inverted = ProbDist::new(vec![0.3, 0.7])?;
    let (i, j) = is_passive(&inverted, &h2)?.witness.expect("inverted");
    for m in [100, 1000, 10_000] {
        let r = extraction_simulation(&inverted, &h2, i, j, m, 0.1, 200, 1)?;
        println!(
            "m = {m:>5}: work per copy {:.4} +- {:.4} (expected {:.4}), tail {:.3} <= bound {:.3e}",
            r.mean_work, r.std_error, r.expected_work, r.empirical_tail, r.hoeffding_bound
        );
    }
    Ok(())
}
