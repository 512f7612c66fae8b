//! Grazed volume computed directly from the geometry.
//!
//! The field is the unit `n`-ball at the origin and the goat reaches the ball
//! of radius `k` about the fence point `P = e_1`. Slicing perpendicular to
//! `e_1`, both cross-sections are concentric `(n-1)`-balls, so each slice of
//! the lens is the smaller of the two. The spheres meet on the plane
//! `x = 1 - k²/2`; beyond it the field slice is smaller, before it the tether
//! slice is. Nothing here uses the angle equation in [`crate::fraser`].

use crate::error::{GoatError, Result};
use crate::root::bisect;
use crate::solution::{GoatSolution, Method};
use crate::special::{ball_volume, integrate, QuadratureConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Intersection of the unit field ball and the tether ball.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LensResult {
    pub n: usize,
    pub k: f64,
    pub volume: f64,
    pub abs_error_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub samples: u64,
    pub seed: u64,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            seed: 42,
        }
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 1 {
        return Err(GoatError::Domain("geometric oracle needs n >= 1".into()));
    }
    Ok(())
}

fn check_reach(k: f64) -> Result<()> {
    if !(0.0..=2.0).contains(&k) {
        return Err(GoatError::Domain(format!("tether ratio must lie in [0, 2], got {k}")));
    }
    Ok(())
}

/// Volume of the cap of a radius-`rho` ball between polar angles `lo` and
/// `hi` from its axis, summed from `(n-1)`-ball slices.
///
/// With `x - c = rho cos φ` the slice radius is `rho sin φ` and
/// `dx = rho sin φ dφ`, which removes the square-root endpoint behaviour the
/// integrand has in `x`.
fn cap_by_slices(n: usize, rho: f64, lo: f64, hi: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let dim = (n - 1) as f64;
    // surface the ball_volume error once rather than inside the integrand
    ball_volume(dim, rho)?;
    let slice = |phi: f64| {
        let s = rho * phi.sin();
        ball_volume(dim, s.max(0.0)).unwrap_or(f64::NAN) * s
    };
    let est = integrate(slice, lo, hi, cfg)?;
    Ok((est.value, est.abs_error))
}

/// Volume of the region of the unit `n`-ball within distance `k` of a
/// boundary point.
pub fn lens_volume(n: usize, k: f64, cfg: &QuadratureConfig) -> Result<LensResult> {
    check_dimension(n)?;
    check_reach(k)?;
    cfg.validate()?;
    if k == 0.0 {
        return Ok(LensResult {
            n,
            k,
            volume: 0.0,
            abs_error_estimate: 0.0,
        });
    }
    let split = 1.0 - 0.5 * k * k;
    // field cap: x in [split, 1], axis from the origin towards P
    let (field, field_err) = cap_by_slices(n, 1.0, 0.0, split.clamp(-1.0, 1.0).acos(), cfg)?;
    // tether cap: x in [1 - k, split], axis from P away from the origin
    let (tether, tether_err) = cap_by_slices(n, k, (-0.5 * k).clamp(-1.0, 1.0).acos(), PI, cfg)?;
    let full = ball_volume(n as f64, 1.0)?;
    Ok(LensResult {
        n,
        k,
        volume: (field + tether).clamp(0.0, full),
        abs_error_estimate: field_err + tether_err,
    })
}

/// Closed-form area of the intersection of the unit disk with a disk of
/// radius `k` centred on its rim.
pub fn lens_area_2d(k: f64) -> Result<f64> {
    check_reach(k)?;
    let a = (1.0 - 0.5 * k * k).clamp(-1.0, 1.0).acos();
    let b = (0.5 * k).clamp(-1.0, 1.0).acos();
    let kite = 0.5 * k * (4.0 - k * k).max(0.0).sqrt();
    Ok(a + k * k * b - kite)
}

/// Uniform point in the unit `n`-ball: normalised Gaussian direction scaled
/// by `U^(1/n)`.
pub fn sample_unit_ball<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut point = vec![0.0; n];
    fill_unit_ball(&mut point, rng);
    point
}

fn fill_unit_ball<R: Rng + ?Sized>(point: &mut [f64], rng: &mut R) {
    let n = point.len();
    let mut norm2 = 0.0;
    while norm2 == 0.0 {
        norm2 = 0.0;
        for x in point.iter_mut() {
            *x = rng.sample(StandardNormal);
            norm2 += *x * *x;
        }
    }
    let u: f64 = rng.random();
    let radius = u.powf(1.0 / n as f64);
    let mut scale = radius / norm2.sqrt();
    let len2: f64 = point.iter().map(|x| x * x * scale * scale).sum();
    if len2 > 1.0 {
        scale /= len2.sqrt();
    }
    for x in point.iter_mut() {
        *x *= scale;
    }
}

/// Monte Carlo estimate of the grazed fraction of the field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub fraction: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Fraction of uniform samples from the unit `n`-ball lying within `k` of
/// the fence point `e_1`. Deterministic in `(n, k, samples, seed)`.
pub fn grazed_fraction_mc(n: usize, k: f64, mc: &MonteCarloConfig) -> Result<McEstimate> {
    check_dimension(n)?;
    check_reach(k)?;
    if mc.samples < 1 {
        return Err(GoatError::Domain("Monte Carlo needs at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mc.seed);
    let mut point = vec![0.0; n];
    let k2 = k * k;
    let mut hits = 0u64;
    for _ in 0..mc.samples {
        fill_unit_ball(&mut point, &mut rng);
        let d2 = (point[0] - 1.0).powi(2) + point[1..].iter().map(|x| x * x).sum::<f64>();
        // k = 2 reaches the whole ball; don't let rounding in d2 say otherwise
        if k >= 2.0 || d2 <= k2 {
            hits += 1;
        }
    }
    let f = hits as f64 / mc.samples as f64;
    Ok(McEstimate {
        fraction: f,
        std_error: (f * (1.0 - f) / mc.samples as f64).sqrt(),
        samples: mc.samples,
    })
}

/// Half-volume tether by bisection on `k ∈ [0, 2]`.
pub fn solve_k_oracle(n: usize, tol: f64, cfg: &QuadratureConfig) -> Result<GoatSolution> {
    check_dimension(n)?;
    let half = 0.5 * ball_volume(n as f64, 1.0)?;
    let (k, residual) = bisect(|k| Ok(lens_volume(n, k, cfg)?.volume - half), 0.0, 2.0, tol)?;
    Ok(GoatSolution {
        n: n as f64,
        beta: (0.5 * k).acos(),
        k,
        residual,
        method: Method::Oracle,
    })
}
