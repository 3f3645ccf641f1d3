//! Classical Rényi divergences and entropies over the extended real α line,
//! together with the smoothing constructions that bound them.

mod divergence;
mod smoothing;

pub use divergence::{
    divergence, divergence_weights, entropy, entropy_weights, sgn, shannon, symmetry_check,
};
pub use smoothing::{smooth_d0, smooth_d_inf, smooth_h0, smooth_hinf, smoothing_correction};

/// The α grid used by the property suites: every regime boundary
/// (negative, `(0,1)`, `1`, `(1,2]`, large) plus 20 uniform points in `[0,2]`.
pub fn property_alpha_grid() -> Vec<f64> {
    let mut grid = vec![
        -8.0, -4.0, -2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0, 8.0,
        f64::INFINITY,
    ];
    grid.extend((0..20).map(|k| 2.0 * k as f64 / 19.0));
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// [`property_alpha_grid`] extended by `−∞`.
pub fn full_alpha_grid() -> Vec<f64> {
    let mut grid = property_alpha_grid();
    grid.insert(0, f64::NEG_INFINITY);
    grid
}
