//! Gamma function, n-ball volumes and integrals of powers of cosine.

mod ball;
mod gamma;
mod quadrature;

pub use ball::{ball_volume, unit_ball_volume};
pub use gamma::gamma;
pub use quadrature::{cos_power_integral, integrate, Estimate, QuadratureConfig, GAUSS_ORDER};
