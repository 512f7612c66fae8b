//! Half-grazing angle from the cap-balance equation
//!
//! ```text
//! F_n(β) = (2 cos β)^n ∫_{π/2-β}^{π/2} cos^n θ dθ - ∫_0^{2β-π/2} cos^n θ dθ
//! ```
//!
//! whose root in `[π/4, π/2]` gives the tether ratio `k_n = 2 cos β`.

use crate::error::{GoatError, Result};
use crate::root::brent;
use crate::solution::{GoatSolution, Method};
use crate::special::{cos_power_integral, QuadratureConfig};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};

/// Lower end of the root bracket.
pub const BETA_MIN: f64 = FRAC_PI_4;
/// Upper end of the root bracket.
pub const BETA_MAX: f64 = FRAC_PI_2;

/// Default tolerance on β.
pub const DEFAULT_TOL: f64 = 1e-12;

fn check_dimension(n: f64) -> Result<()> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(GoatError::Domain(format!("dimension must be >= 0, got {n}")));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(BETA_MIN..=BETA_MAX).contains(&beta) {
        return Err(GoatError::Domain(format!(
            "beta = {beta} outside [pi/4, pi/2]"
        )));
    }
    Ok(())
}

/// `F_n(β)`; zero at the half-grazing angle.
///
/// The factor `(2 cos β)^0` is taken as 1 everywhere, including `β = π/2`.
pub fn fraser_residual(n: f64, beta: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_dimension(n)?;
    check_beta(beta)?;
    let reach = cos_power_integral(n, FRAC_PI_2 - beta, FRAC_PI_2, cfg)?;
    let overlap = cos_power_integral(n, 0.0, 2.0 * beta - FRAC_PI_2, cfg)?;
    let scale = if n == 0.0 { 1.0 } else { (2.0 * beta.cos()).powf(n) };
    Ok(scale * reach - overlap)
}

/// `k = 2 cos β`, evaluated as `2 sin(π/2 - β)` so that `β = π/2` gives 0.
pub fn tether_ratio(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok((2.0 * (FRAC_PI_2 - beta).sin()).min(SQRT_2))
}

/// Solver settings. `force_numeric` bypasses the closed-form branches for
/// `n = 0` and `n = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FraserSolver {
    pub tol: f64,
    pub quad: QuadratureConfig,
    pub force_numeric: bool,
}

impl Default for FraserSolver {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            quad: QuadratureConfig::default(),
            force_numeric: false,
        }
    }
}

impl FraserSolver {
    pub fn new(tol: f64, quad: QuadratureConfig) -> Self {
        Self {
            tol,
            quad,
            force_numeric: false,
        }
    }

    pub fn numeric(mut self) -> Self {
        self.force_numeric = true;
        self
    }

    /// Root of `F_n` in `[π/4, π/2]`.
    pub fn solve_beta(&self, n: f64) -> Result<GoatSolution> {
        check_dimension(n)?;
        if !(self.tol > 0.0) {
            return Err(GoatError::Domain(format!("tol must be > 0, got {}", self.tol)));
        }
        self.quad.validate()?;

        if !self.force_numeric {
            // cos β = 1/2 for the line; β = π/2 for the point
            if n == 1.0 {
                return Ok(GoatSolution {
                    n,
                    beta: FRAC_PI_3,
                    k: 1.0,
                    residual: fraser_residual(n, FRAC_PI_3, &self.quad)?,
                    method: Method::Exact,
                });
            }
            if n == 0.0 {
                return Ok(GoatSolution {
                    n,
                    beta: FRAC_PI_2,
                    k: 0.0,
                    residual: 0.0,
                    method: Method::Exact,
                });
            }
        }

        let (beta, residual) = brent(
            |b| fraser_residual(n, b, &self.quad),
            BETA_MIN,
            BETA_MAX,
            self.tol,
        )?;
        Ok(GoatSolution {
            n,
            beta,
            k: tether_ratio(beta)?,
            residual,
            method: Method::Numeric,
        })
    }

    pub fn solve_k(&self, n: f64) -> Result<GoatSolution> {
        let sol = self.solve_beta(n)?;
        if sol.method == Method::Exact {
            return Ok(sol);
        }
        Ok(GoatSolution {
            k: tether_ratio(sol.beta)?,
            ..sol
        })
    }

    /// `√2 - k_n`, the distance to the large-dimension limit.
    pub fn limit_gap(&self, n: f64) -> Result<f64> {
        Ok(SQRT_2 - self.solve_k(n)?.k)
    }
}

pub fn solve_beta(n: f64, tol: f64, cfg: &QuadratureConfig) -> Result<GoatSolution> {
    FraserSolver::new(tol, *cfg).solve_beta(n)
}

pub fn solve_k(n: f64, tol: f64, cfg: &QuadratureConfig) -> Result<GoatSolution> {
    FraserSolver::new(tol, *cfg).solve_k(n)
}

pub fn limit_gap(n: f64, tol: f64, cfg: &QuadratureConfig) -> Result<f64> {
    FraserSolver::new(tol, *cfg).limit_gap(n)
}
