//! Tether ratios for the interior goat problem in any real dimension.
//!
//! A goat tethered to a point on the boundary of a unit `n`-ball grazes the
//! intersection of that ball with a ball of radius `k` around the anchor.
//! This crate finds the `k` for which the goat reaches exactly half the field
//! three ways:
//!
//! * [`fraser`]: root of a one-dimensional angle equation, any real `n >= 0`;
//! * [`contour`]: residue ratio of two contour integrals, `n = 2`;
//! * [`geometry`]: bisection on the lens volume, integer `n >= 1`, plus a
//!   Monte Carlo estimate of the grazed fraction.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod contour;
pub mod error;
pub mod fraser;
pub mod geometry;
pub mod root;
pub mod solution;
pub mod special;

pub use contour::{ullisch_k, CircleContour, ContourSolution};
pub use error::{GoatError, Result};
pub use fraser::{fraser_residual, limit_gap, solve_beta, solve_k, tether_ratio, FraserSolver};
pub use geometry::{grazed_fraction_mc, lens_area_2d, lens_volume, solve_k_oracle, LensResult, MonteCarloConfig};
pub use solution::{GoatSolution, Method};
pub use special::{ball_volume, cos_power_integral, gamma, QuadratureConfig};
