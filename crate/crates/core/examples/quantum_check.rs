//! Necessary conditions for transitions between states with coherence, and
//! a simulated thermal operation that respects them.
//!
//! Run with `cargo run --example quantum_check`.

use num_complex::Complex64;
use thermolaws::base::{gibbs_state, Hamiltonian, ThermalContext};
use thermolaws::quantum::{
    dephase, energy_preserving_unitary_from_seed, hat_divergence, quantum_second_law_check, thermal_op,
    tilde_divergence, DensityMatrix,
};

fn main() -> thermolaws::Result<()> {
    let h = Hamiltonian::new(vec![0.0, 1.0])?;
    let ctx = ThermalContext::new(1.0)?;
    let gibbs = DensityMatrix::from_diagonal(&gibbs_state(&h, &ctx));
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let plus = DensityMatrix::pure(&[Complex64::new(s, 0.0), Complex64::new(s, 0.0)])?;

    for alpha in [0.5, 1.0, 2.0] {
        println!(
            "alpha {alpha}: sandwiched {:.5}, Petz {:.5}",
            hat_divergence(&plus, &gibbs, alpha)?.to_f64(),
            tilde_divergence(&plus, &gibbs, alpha)?.to_f64()
        );
    }

    let r = quantum_second_law_check(&gibbs, &plus, &h, &ctx)?;
    println!("Gibbs -> |+>: {:?} (sandwiched margin {:?} at alpha {})", r.overall, r.hat.margin, r.hat.worst_alpha);
    let r = quantum_second_law_check(&plus, &dephase(&plus, &h)?, &h, &ctx)?;
    println!("|+> -> dephased |+>: {:?}", r.overall);

    // A thermal operation with a two-level bath.
    let h_bath = Hamiltonian::new(vec![0.0, 1.0])?;
    let u = energy_preserving_unitary_from_seed(&h.tensor(&h_bath), 11);
    let out = thermal_op(&plus, &h, &h_bath, &ctx, &u)?;
    println!("output of a thermal operation:\n{}", out.matrix());
    let r = quantum_second_law_check(&plus, &out, &h, &ctx)?;
    println!("|+> -> output: {:?}", r.overall);
    Ok(())
}
