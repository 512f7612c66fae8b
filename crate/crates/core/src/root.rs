//! Bracketed scalar root finding.

use crate::error::{GoatError, Result};

const MAX_ITER: usize = 200;

/// Brent's method on `[lo, hi]` with a fallible objective.
///
/// Returns `(x, f(x))` once the bracket around the root is no wider than
/// `tol` (or machine resolution at `x`, whichever is larger). An endpoint
/// where `f` vanishes exactly is returned as-is.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(GoatError::Domain(format!("root tolerance must be > 0, got {tol}")));
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok((a, fa));
    }
    if fb == 0.0 {
        return Ok((b, fb));
    }
    if fa.signum() == fb.signum() {
        return Err(GoatError::Bracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = (2.0 * f64::EPSILON * b.abs()).max(0.5 * tol);
        let m = 0.5 * (c - b);
        if m.abs() <= tol1 || fb == 0.0 {
            return Ok((b, fb));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic interpolation, or secant when a == c
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(m) };
        fb = f(b)?;
    }
    Err(GoatError::Validation(format!(
        "root finder exceeded {MAX_ITER} iterations near {b}"
    )))
}

/// Plain bisection on `[lo, hi]` until the bracket is narrower than `tol`.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(GoatError::Domain(format!("root tolerance must be > 0, got {tol}")));
    }
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa == 0.0 {
        return Ok((a, fa));
    }
    if fb == 0.0 {
        return Ok((b, fb));
    }
    if fa.signum() == fb.signum() {
        return Err(GoatError::Bracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let lower_sign = fa.signum();
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok((mid, fm));
        }
        if fm.signum() == lower_sign {
            a = mid;
        } else {
            b = mid;
        }
    }
    let mid = 0.5 * (a + b);
    Ok((mid, f(mid)?))
}
