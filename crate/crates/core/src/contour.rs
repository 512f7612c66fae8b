//! Root extraction by contour integration.
//!
//! For an analytic `f` with a single simple zero `z0` inside a circle,
//! `∮ z/f(z) dz / ∮ 1/f(z) dz = z0`. Applied to `f(z) = sin z - z cos z - π/2`
//! on `|z - 3π/8| = π/4` this gives `z0 = 2β` for the planar field, and the
//! tether ratio follows as `2 cos(z0 / 2)`.
//!
//! Integrals use the trapezoidal rule in the angle parameter, which converges
//! geometrically for analytic periodic integrands.

use crate::error::{GoatError, Result};
use crate::solution::{GoatSolution, Method};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

pub type ComplexValue = Complex64;

/// Minimum node count accepted for a contour.
pub const MIN_NODES: usize = 8;
/// Default node count.
pub const DEFAULT_NODES: usize = 256;

/// Denominators smaller than this mean the contour encloses no zero.
const DEGENERATE_DENOMINATOR: f64 = 1e-13;
/// Largest imaginary part tolerated on the extracted planar root.
const MAX_IMAG: f64 = 1e-9;

/// Circle `|z - center| = radius` sampled at `nodes` equispaced angles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleContour {
    pub center: ComplexValue,
    pub radius: f64,
    pub nodes: usize,
}

impl CircleContour {
    pub fn new(center: ComplexValue, radius: f64, nodes: usize) -> Result<Self> {
        let c = Self {
            center,
            radius,
            nodes,
        };
        c.validate()?;
        Ok(c)
    }

    /// `|z - 3π/8| = π/4` with the given number of nodes.
    pub fn ullisch(nodes: usize) -> Result<Self> {
        Self::new(Complex64::new(3.0 * PI / 8.0, 0.0), FRAC_PI_4, nodes)
    }

    pub fn with_nodes(self, nodes: usize) -> Result<Self> {
        Self::new(self.center, self.radius, nodes)
    }

    fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(GoatError::Domain(format!("contour radius must be > 0, got {}", self.radius)));
        }
        if self.nodes < MIN_NODES {
            return Err(GoatError::Domain(format!(
                "contour needs at least {MIN_NODES} nodes, got {}",
                self.nodes
            )));
        }
        if !self.center.re.is_finite() || !self.center.im.is_finite() {
            return Err(GoatError::Domain("contour center must be finite".into()));
        }
        Ok(())
    }
}

impl Default for CircleContour {
    fn default() -> Self {
        Self {
            center: Complex64::new(3.0 * PI / 8.0, 0.0),
            radius: FRAC_PI_4,
            nodes: DEFAULT_NODES,
        }
    }
}

/// `f(z) = sin z - z cos z - π/2`.
pub fn ullisch_f(z: ComplexValue) -> ComplexValue {
    z.sin() - z * z.cos() - FRAC_PI_2
}

/// `f'(z) = z sin z`.
pub fn ullisch_f_prime(z: ComplexValue) -> ComplexValue {
    z * z.sin()
}

/// Trapezoidal approximation of `∮ g(z) dz` on `contour`.
pub fn contour_quadrature<G>(g: G, contour: &CircleContour) -> Result<ComplexValue>
where
    G: Fn(ComplexValue) -> ComplexValue,
{
    contour.validate()?;
    let step = TAU / contour.nodes as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..contour.nodes {
        let w = Complex64::from_polar(contour.radius, step * j as f64);
        let z = contour.center + w;
        let gz = g(z);
        if !gz.re.is_finite() || !gz.im.is_finite() {
            return Err(GoatError::NonFinite(format!("contour integrand at {z}")));
        }
        // dz = i w dt
        sum += gz * w;
    }
    Ok(sum * Complex64::new(0.0, step))
}

/// Enclosed simple zero of `f` as `∮ z/f / ∮ 1/f`.
pub fn extract_root<F>(f: F, contour: &CircleContour) -> Result<ComplexValue>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    let inv = contour_quadrature(|z| f(z).inv(), contour)?;
    if inv.norm() < DEGENERATE_DENOMINATOR {
        return Err(GoatError::Degenerate(inv.norm()));
    }
    let first = contour_quadrature(|z| z / f(z), contour)?;
    Ok(first / inv)
}

/// Argument-principle zero count and the unrounded integral it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCount {
    pub count: i64,
    pub raw: ComplexValue,
}

impl ZeroCount {
    /// Distance of the raw integral from the reported integer.
    pub fn deviation(&self) -> f64 {
        (self.raw - Complex64::new(self.count as f64, 0.0)).norm()
    }
}

/// Zeros of `f` inside `contour`, with multiplicity, from `(1/2πi) ∮ f'/f`.
pub fn count_zeros<F, D>(f: F, f_prime: D, contour: &CircleContour) -> Result<ZeroCount>
where
    F: Fn(ComplexValue) -> ComplexValue,
    D: Fn(ComplexValue) -> ComplexValue,
{
    let integral = contour_quadrature(|z| f_prime(z) / f(z), contour)?;
    let raw = integral / Complex64::new(0.0, TAU);
    let count = raw.re.round();
    let zc = ZeroCount {
        count: count as i64,
        raw,
    };
    if zc.deviation() > 0.1 {
        return Err(GoatError::NotInteger(raw.re));
    }
    Ok(zc)
}

/// Planar solution from the contour closed form, scaled to field radius `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSolution {
    pub solution: GoatSolution,
    /// The extracted zero `z0 = 2β` before its imaginary part was dropped.
    pub root: ComplexValue,
    pub zero_count: ZeroCount,
    pub field_radius: f64,
    pub tether_length: f64,
}

/// Tether ratio for `n = 2` from the residue ratio on `contour`.
pub fn ullisch_k(r: f64, contour: &CircleContour) -> Result<ContourSolution> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(GoatError::Domain(format!("field radius must be > 0, got {r}")));
    }
    let zero_count = count_zeros(ullisch_f, ullisch_f_prime, contour)?;
    if zero_count.count != 1 {
        return Err(GoatError::Validation(format!(
            "contour encloses {} zeros, expected exactly 1",
            zero_count.count
        )));
    }
    let root = extract_root(ullisch_f, contour)?;
    if root.im.abs() > MAX_IMAG {
        return Err(GoatError::Validation(format!(
            "extracted root {root} is not real"
        )));
    }
    let beta = 0.5 * root.re;
    let k = 2.0 * beta.cos();
    let residual = ullisch_f(Complex64::new(root.re, 0.0)).re;
    Ok(ContourSolution {
        solution: GoatSolution {
            n: 2.0,
            beta,
            k,
            residual,
            method: Method::Contour,
        },
        root,
        zero_count,
        field_radius: r,
        tether_length: k * r,
    })
}
