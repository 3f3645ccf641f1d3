//! Rényi divergences and entropies across the whole order range, plus the
//! smoothed min- and max-quantities.
//!
//! Run with `cargo run --example renyi_divergences`.

use thermolaws::base::{ProbDist, Weights};
use thermolaws::renyi::{divergence, entropy, smooth_d0, smooth_d_inf, smooth_h0, smooth_hinf, smoothing_correction};

fn main() -> thermolaws::Result<()> {
    let p = ProbDist::from_rational_strs(&["1/2", "1/4", "1/8", "1/8"])?;
    let q = ProbDist::uniform(4);

    println!("{:>8}  {:>12}  {:>12}", "alpha", "D_a(p||q)", "H_a(p)");
    for alpha in [f64::NEG_INFINITY, -2.0, -0.5, 0.0, 0.5, 1.0, 2.0, 10.0, f64::INFINITY] {
        let d = divergence(&p, &q, alpha)?;
        let h = entropy(&p, alpha)?;
        println!("{alpha:>8}  {:>12.6}  {:>12.6}", d.to_f64(), h.to_f64());
    }

    // Orders near one approach the relative entropy smoothly.
    let d1 = divergence(&p, &q, 1.0)?.to_f64();
    for t in [1e-2, 1e-5, 1e-9] {
        let d = divergence(&p, &q, 1.0 + t)?.to_f64();
        println!("D at 1 + {t:e} differs from D_1 by {:.2e}", d - d1);
    }

    // Smoothing trades a little accuracy for large changes in the extremes.
    let eps = 0.05;
    let (p0, h0) = smooth_h0(&p, eps)?;
    let (pinf, hinf) = smooth_hinf(&p, eps)?;
    println!("\nsmoothing with eps = {eps}");
    println!("H_0 {:.4} -> {:.4} via {:?}", entropy(&p, 0.0)?.to_f64(), h0.to_f64(), p0.weights());
    println!("H_inf {:.4} -> {:.4} via {:?}", entropy(&p, f64::INFINITY)?.to_f64(), hinf.to_f64(), pinf.weights());

    let g = ProbDist::new(vec![0.4, 0.3, 0.2, 0.1])?;
    let (_, dinf) = smooth_d_inf(&p, &g, eps)?;
    let (_, d0) = smooth_d0(&p, &g, eps)?;
    println!("smoothed D_inf(p||g) = {:.4}, smoothed D_0(p||g) = {:.4}", dinf.to_f64(), d0.to_f64());
    for alpha in [0.5, 2.0] {
        println!("log(1/eps)/|alpha-1| at alpha = {alpha}: {:.4}", smoothing_correction(eps, alpha));
    }
    Ok(())
}
