//! Composite Gauss-Legendre quadrature with global interval halving, and the
//! `∫ cos^n` integrals built on it.

use crate::error::{GoatError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Points per Gauss-Legendre panel.
pub const GAUSS_ORDER: usize = 20;

/// Tolerance and refinement budget for real-line integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    /// Stop once two successive refinements differ by less than this.
    pub abs_tol: f64,
    /// Maximum number of interval halvings (level `L` uses `2^L` panels).
    pub max_subdivisions: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_subdivisions: 20,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, max_subdivisions: u32) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            max_subdivisions,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !self.abs_tol.is_finite() {
            return Err(GoatError::Domain(format!(
                "abs_tol must be > 0, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(GoatError::Domain("max_subdivisions must be >= 1".into()));
        }
        Ok(())
    }
}

/// An integral value with the difference between the last two refinements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
}

/// Nodes and weights on [-1, 1], computed once by Newton iteration on P_n.
fn gauss_legendre() -> &'static [(f64, f64); GAUSS_ORDER] {
    static RULE: OnceLock<[(f64, f64); GAUSS_ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_ORDER;
        let mut rule = [(0.0, 0.0); GAUSS_ORDER];
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th largest root
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            rule[i] = (-x, w);
            rule[n - 1 - i] = (x, w);
        }
        rule
    })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn composite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> Result<f64> {
    let rule = gauss_legendre();
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for j in 0..panels {
        let lo = a + h * j as f64;
        let mid = lo + 0.5 * h;
        let mut panel = 0.0;
        for &(x, w) in rule.iter() {
            let t = mid + 0.5 * h * x;
            let y = f(t);
            if !y.is_finite() {
                return Err(GoatError::NonFinite(format!("integrand at {t}")));
            }
            panel += w * y;
        }
        total += 0.5 * h * panel;
    }
    Ok(total)
}

/// Integrates `f` over `[a, b]`, doubling the panel count until two
/// successive estimates differ by less than `cfg.abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(GoatError::Domain(format!("integration limits must be finite: [{a}, {b}]")));
    }
    if a == b {
        return Ok(Estimate {
            value: 0.0,
            abs_error: 0.0,
        });
    }
    let mut prev = composite(&f, a, b, 1)?;
    let mut diff = f64::INFINITY;
    for level in 1..=cfg.max_subdivisions {
        let cur = composite(&f, a, b, 1usize << level)?;
        diff = (cur - prev).abs();
        if diff < cfg.abs_tol {
            return Ok(Estimate {
                value: cur,
                abs_error: diff,
            });
        }
        prev = cur;
    }
    Err(GoatError::Convergence {
        last_diff: diff,
        levels: cfg.max_subdivisions,
        abs_tol: cfg.abs_tol,
    })
}

/// Smallest power-substitution exponent giving the endpoint behaviour
/// `w^(p(n+1)-1)` at least this many derivatives.
const SMOOTHING_ORDER: f64 = 12.0;

/// `∫_a^b cos^n θ dθ` for real `n >= 0` and `0 <= a <= b <= π/2`.
///
/// For non-integer `n` the integrand behaves like `(π/2 - θ)^n` at the right
/// end of the range, which defeats polynomial panels. Those integrals are
/// taken in `u = π/2 - θ = w^p`, where the integrand becomes
/// `sin(w^p)^n · p w^(p-1)` and is smooth at `w = 0`.
pub fn cos_power_integral(n: f64, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(GoatError::Domain(format!("exponent must be >= 0, got {n}")));
    }
    if !(0.0 <= a && a <= b && b <= FRAC_PI_2) {
        return Err(GoatError::Domain(format!(
            "integration range [{a}, {b}] must satisfy 0 <= a <= b <= pi/2"
        )));
    }
    if n == 0.0 {
        return Ok(b - a);
    }
    if a == b {
        return Ok(0.0);
    }
    if n.fract() == 0.0 && n <= i32::MAX as f64 {
        let m = n as i32;
        return Ok(integrate(|t: f64| t.cos().powi(m), a, b, cfg)?.value);
    }
    let p = (SMOOTHING_ORDER / (n + 1.0)).ceil().max(1.0);
    let w_lo = (FRAC_PI_2 - b).powf(1.0 / p);
    let w_hi = (FRAC_PI_2 - a).powf(1.0 / p);
    let g = |w: f64| w.powf(p).sin().powf(n) * p * w.powf(p - 1.0);
    Ok(integrate(g, w_lo, w_hi, cfg)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;
    use approx::assert_abs_diff_eq;

    fn wallis(n: f64) -> f64 {
        PI.sqrt() * gamma((n + 1.0) / 2.0).unwrap() / (2.0 * gamma(n / 2.0 + 1.0).unwrap())
    }

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre();
        let wsum: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert_abs_diff_eq!(wsum, 2.0, epsilon = 1e-14);
        // degree 38: ∫ x^38 = 2/39
        let m: f64 = rule.iter().map(|&(x, w)| w * x.powi(38)).sum();
        assert_abs_diff_eq!(m, 2.0 / 39.0, epsilon = 1e-14);
    }

    #[test]
    fn trivial_integrals() {
        let cfg = QuadratureConfig::default();
        assert_abs_diff_eq!(cos_power_integral(1.0, 0.0, FRAC_PI_2, &cfg).unwrap(), 1.0, epsilon = 1e-12);
        assert_eq!(cos_power_integral(0.0, 0.2, 1.3, &cfg).unwrap(), 1.3 - 0.2);
        assert_abs_diff_eq!(
            cos_power_integral(2.0, 0.0, FRAC_PI_2, &cfg).unwrap(),
            PI / 4.0,
            epsilon = 1e-12
        );
        assert_eq!(cos_power_integral(3.3, 0.7, 0.7, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn fractional_matches_wallis() {
        let cfg = QuadratureConfig::default();
        let expected = PI.sqrt() * gamma(1.75).unwrap() / (2.0 * gamma(2.25).unwrap());
        assert_abs_diff_eq!(
            cos_power_integral(2.5, 0.0, FRAC_PI_2, &cfg).unwrap(),
            expected,
            epsilon = 10.0 * cfg.abs_tol
        );
        for &n in &[0.01, 0.25, 0.5, 0.999, 1.5, 3.7, 10.5, 33.3, 64.0, 200.0] {
            assert_abs_diff_eq!(
                cos_power_integral(n, 0.0, FRAC_PI_2, &cfg).unwrap(),
                wallis(n),
                epsilon = 10.0 * cfg.abs_tol
            );
        }
    }

    #[test]
    fn domain_errors() {
        let cfg = QuadratureConfig::default();
        assert!(cos_power_integral(-0.5, 0.0, 1.0, &cfg).is_err());
        assert!(cos_power_integral(1.0, -0.1, 1.0, &cfg).is_err());
        assert!(cos_power_integral(1.0, 0.0, 1.6, &cfg).is_err());
        assert!(cos_power_integral(1.0, 1.0, 0.5, &cfg).is_err());
    }

    #[test]
    fn convergence_failure_is_reported() {
        let cfg = QuadratureConfig::new(1e-14, 2).unwrap();
        // |x|^(1/3) kink in the middle of the range converges slowly
        let err = integrate(|x: f64| x.abs().cbrt(), -1.0, 0.7, &cfg).unwrap_err();
        assert!(matches!(err, GoatError::Convergence { levels: 2, .. }));
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(0.0, 5).is_err());
        assert!(QuadratureConfig::new(1e-10, 0).is_err());
        assert!(QuadratureConfig::new(f64::NAN, 5).is_err());
    }

    #[test]
    fn non_finite_integrand() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            integrate(|_| f64::NAN, 0.0, 1.0, &cfg),
            Err(GoatError::NonFinite(_))
        ));
    }
}
