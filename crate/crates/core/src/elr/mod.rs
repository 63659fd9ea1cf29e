//! Exact polynomial model of descent classes: endpoint laws, volumes,
//! concatenation, the location of the value 1, and run-length bounds.

mod bounds;
mod model;
mod poly;

pub use bounds::{
    delta_bounds, delta_bounds_integrated, first_run, last_run, run_cdf_bounds,
    valley_window_bound, Direction,
};
pub use model::{
    concat_volume, delta, last_cell_weight, last_cell_weight_by_runs, marginal_cdfs,
    prob_one_between, prob_one_in_valley, prob_one_in_valley_counting, volume, EndpointLaws,
};
pub use poly::{sturm_root_count, PiecewisePolynomial, Poly};
