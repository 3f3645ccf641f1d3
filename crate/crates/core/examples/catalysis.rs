//! Catalytic transitions: a state that is unreachable on its own becomes
//! reachable when a borrowed catalyst is returned unchanged.
//!
//! Run with `cargo run --example catalysis`.

use thermolaws::base::{Hamiltonian, ProbDist, ThermalContext};
use thermolaws::catalysis::{search_catalyst, verify_catalyst, Catalyst, SearchOutcome};
use thermolaws::majorize::majorizes;
use thermolaws::secondlaws::{check_transition, CheckMode};

fn main() -> thermolaws::Result<()> {
    let from = ProbDist::from_rational_strs(&["1/2", "1/4", "1/4", "0"])?;
    let to = ProbDist::from_rational_strs(&["2/5", "2/5", "1/10", "1/10"])?;
    let h = Hamiltonian::trivial(4);
    let ctx = ThermalContext::new(1.0)?;

    println!("from majorizes to: {}", majorizes(&from, &to));
    let report = check_transition(&from, &to, &h, &ctx, CheckMode::ExactAllAlpha)?;
    println!("second laws: {:?}, margin {:?} at alpha {:?}", report.verdict, report.margin, report.worst_alpha);

    let catalyst = Catalyst::trivial(ProbDist::from_rational_strs(&["3/5", "2/5"])?);
    println!("(3/5, 2/5) enables the transition: {}", verify_catalyst(&from, &to, &catalyst, &h, &ctx)?);

    let search = search_catalyst(&from, &to, &h, &ctx, 4, 100, 7)?;
    match &search.outcome {
        SearchOutcome::Found(c) => println!("search found {:?} after {} attempts", c.state, search.attempts),
        SearchOutcome::NotFound => println!("search found nothing in {} attempts", search.attempts),
    }
    println!("transcript digest {}", search.transcript_digest);

    let back = check_transition(&to, &from, &h, &ctx, CheckMode::ExactAllAlpha)?;
    println!("reverse direction: {:?} (worst alpha {:?})", back.verdict, back.worst_alpha);
    Ok(())
}
