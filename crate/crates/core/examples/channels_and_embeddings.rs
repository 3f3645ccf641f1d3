//! Channel constructions: embedding a Gibbs state into a uniform one,
//! rational approximation, and the nearest reachable image of a state.
//!
//! Run with `cargo run --example channels_and_embeddings`.

use thermolaws::base::{ProbDist, Weights};
use thermolaws::channels::{lp_nearest_image, rational_approx_channel, EmbeddingSpec};
use thermolaws::renyi::divergence;

fn main() -> thermolaws::Result<()> {
    let gamma = ProbDist::from_rational_strs(&["1/2", "1/3", "1/6"])?;
    let spec = EmbeddingSpec::from_rational(&gamma)?;
    println!("blocks {:?} over {} outcomes", spec.block_sizes(), spec.total());

    let p = ProbDist::from_rational_strs(&["1/5", "3/5", "1/5"])?;
    let embedded = spec.embed(&p)?;
    let eta = ProbDist::uniform(spec.total());
    for alpha in [0.5, 1.0, 3.0] {
        println!(
            "alpha {alpha}: D(p||gamma) = {:.6}, D(embed p||uniform) = {:.6}",
            divergence(&p, &gamma, alpha)?.to_f64(),
            divergence(&embedded, &eta, alpha)?.to_f64()
        );
    }

    // Irrational weights are moved onto a grid of spacing 1/N by a channel
    // that barely disturbs any other state.
    let q = ProbDist::normalized(vec![1.0, 0.5f64.sqrt(), 3f64.sqrt().recip()])?;
    let (rational, channel) = rational_approx_channel(&q, 1_000_000)?;
    println!("\n{:?} is approximated by {:?}\nvia\n{}", q.weights(), rational.weights(), channel.matrix());

    let start = ProbDist::new(vec![0.4, 0.35, 0.25])?;
    let target = ProbDist::new(vec![0.9, 0.05, 0.05])?;
    let near = lp_nearest_image(&start, &target, &ProbDist::uniform(3))?;
    println!("closest mixing image to {:?} is {:?}, l1 distance {:.4}", target.weights(), near.image.weights(), near.l1_dist);
    Ok(())
}
