use super::gamma::gamma;
use crate::error::{GoatError, Result};
use std::f64::consts::PI;

/// Volume of the unit ball in (possibly fractional) dimension `n`.
pub fn unit_ball_volume(n: f64) -> Result<f64> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(GoatError::Domain(format!("ball dimension must be >= 0, got {n}")));
    }
    Ok(PI.powf(0.5 * n) / gamma(0.5 * n + 1.0)?)
}

/// Volume `π^(n/2) r^n / Γ(n/2 + 1)` of the `n`-ball of radius `r`.
///
/// Uses `0^0 = 1`, so the zero-dimensional ball has volume 1 for every `r`.
pub fn ball_volume(n: f64, r: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(GoatError::Domain(format!("ball radius must be >= 0, got {r}")));
    }
    Ok(unit_ball_volume(n)? * r.powf(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensions() {
        assert_eq!(ball_volume(0.0, 1.0).unwrap(), 1.0);
        assert_eq!(ball_volume(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(ball_volume(0.0, 7.5).unwrap(), 1.0);
        assert!((ball_volume(1.0, 1.0).unwrap() - 2.0).abs() <= 1e-14);
        assert!((ball_volume(1.0, 2.5).unwrap() - 5.0).abs() <= 1e-14);
        assert!((ball_volume(2.0, 1.0).unwrap() - PI).abs() <= 1e-13);
        assert!((ball_volume(3.0, 1.0).unwrap() - 4.0 * PI / 3.0).abs() <= 1e-13);
    }

    #[test]
    fn recurrence() {
        for n in 2..=30 {
            let n = n as f64;
            let lhs = ball_volume(n, 1.0).unwrap();
            let rhs = ball_volume(n - 2.0, 1.0).unwrap() * 2.0 * PI / n;
            assert!((lhs - rhs).abs() <= 1e-12, "n={n}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn scaling_is_exact() {
        for &n in &[0.0, 0.5, 1.0, 2.0, 3.7, 6.0] {
            let unit = ball_volume(n, 1.0).unwrap();
            for &r in &[0.5_f64, 2.0] {
                assert_eq!(ball_volume(n, r).unwrap(), r.powf(n) * unit);
            }
        }
    }

    #[test]
    fn domain() {
        assert!(ball_volume(-1.0, 1.0).is_err());
        assert!(ball_volume(2.0, -0.1).is_err());
    }
}
