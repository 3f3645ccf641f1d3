//! The family of generalized free energies and the transition checks built
//! on them, including Hamiltonian switching and the two-condition
//! sufficient test.
//!
//! Run with `cargo run --example second_laws`.

use thermolaws::base::{gibbs_state, Hamiltonian, ProbDist, ThermalContext};
use thermolaws::secondlaws::{check_switch_hamiltonian, check_transition, free_energy, two_condition_check, CheckMode};

fn main() -> thermolaws::Result<()> {
    let h = Hamiltonian::new(vec![0.0, 1.0, 2.0])?;
    let ctx = ThermalContext::new(0.8)?;
    let p = ProbDist::new(vec![0.1, 0.2, 0.7])?;
    let p_prime = ProbDist::new(vec![0.3, 0.4, 0.3])?;

    println!("{:>6}  {:>10}  {:>10}", "alpha", "F_a(p)", "F_a(p')");
    for alpha in [0.0, 0.5, 1.0, 2.0, f64::INFINITY] {
        let (a, b) = (free_energy(&p, &h, &ctx, alpha)?, free_energy(&p_prime, &h, &ctx, alpha)?);
        println!("{alpha:>6}  {:>10.5}  {:>10.5}", a.to_f64(), b.to_f64());
    }

    for mode in [CheckMode::ExactAllAlpha, CheckMode::NonnegAlpha] {
        let r = check_transition(&p, &p_prime, &h, &ctx, mode)?;
        println!("{mode:?}: {:?}, margin {:?} at alpha {:?}", r.verdict, r.margin, r.worst_alpha);
    }

    // The sufficient test needs no scan over the full family.
    let pure = ProbDist::pure(3, 2);
    let two = two_condition_check(&pure, &gibbs_state(&h, &ctx), &h, &ctx, 0.01)?;
    println!("two-condition check from the top level to Gibbs: {:?}", two.verdict);

    // Raising an energy level while keeping the population costs free energy.
    let h_raised = Hamiltonian::new(vec![0.0, 1.5, 2.0])?;
    let r = check_switch_hamiltonian(&p, &h, &p, &h_raised, &ctx, CheckMode::ExactAllAlpha)?;
    println!("raise level 1 with p fixed: {:?}, margin {:?}", r.verdict, r.margin);
    let r = check_switch_hamiltonian(&p, &h_raised, &p, &h, &ctx, CheckMode::ExactAllAlpha)?;
    println!("lower it again: {:?}, margin {:?}", r.verdict, r.margin);
    Ok(())
}
