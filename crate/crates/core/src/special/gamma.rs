//! Gamma function on the positive real axis.
//!
//! Positive integers and half-integers up to the overflow limit are computed
//! exactly (to rounding) by their product formulas; everything else goes
//! through a Lanczos approximation with g = 7 and nine coefficients, with the
//! reflection formula below one half.

use crate::error::{GoatError, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(171.62...) overflows f64.
const MAX_ARG: f64 = 171.6;

/// Gamma function for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(GoatError::Domain(format!("gamma requires x > 0, got {x}")));
    }
    if x > MAX_ARG {
        return Ok(f64::INFINITY);
    }
    if let Some(v) = product_form(x) {
        return Ok(v);
    }
    Ok(lanczos(x))
}

/// Exact product for x in {1, 2, 3, ...} and {1/2, 3/2, 5/2, ...}.
fn product_form(x: f64) -> Option<f64> {
    let twice = 2.0 * x;
    if twice.fract() != 0.0 {
        return None;
    }
    let (mut acc, mut t) = if x.fract() == 0.0 {
        (1.0, 1.0)
    } else {
        (PI.sqrt(), 0.5)
    };
    while t < x {
        acc *= t;
        t += 1.0;
    }
    Some(acc)
}

fn lanczos(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) Γ(1 - x) = π / sin(πx)
        return PI / ((PI * x).sin() * lanczos(1.0 - x));
    }
    let x = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // split the power so t^(x+1/2) does not overflow before e^-t pulls it back
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_factorials() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_relative_eq!(gamma(1.5).unwrap(), PI.sqrt() / 2.0, max_relative = 1e-15);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn lanczos_matches_products_on_grid() {
        // compare the approximation itself against the exact products
        for i in 1..=100 {
            let x = 0.5 * i as f64;
            let exact = product_form(x).unwrap();
            let approx = lanczos(x);
            assert_relative_eq!(approx, exact, max_relative = 1e-13);
        }
    }

    #[test]
    fn recurrence_off_grid() {
        // Γ(x+1) = x Γ(x) at arguments the product path never sees
        let mut x = 0.55;
        while x < 49.0 {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-13);
            x += 0.37;
        }
    }

    #[test]
    fn known_values() {
        // reference values from mpmath at 30 digits
        assert_relative_eq!(gamma(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6, max_relative = 1e-13);
        assert_relative_eq!(gamma(0.1).unwrap(), 9.513_507_698_668_732, max_relative = 1e-13);
        assert_relative_eq!(gamma(7.3).unwrap(), 1_271.423_633_663_909_3, max_relative = 1e-13);
    }
}
