use serde::{Deserialize, Serialize};
use std::fmt;

/// How a [`GoatSolution`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Closed-form branch (n = 0 or n = 1).
    Exact,
    /// Bracketed root of the cap-balance residual.
    Numeric,
    /// Residue ratio of two contour integrals (n = 2 only).
    Contour,
    /// Bisection on the lens volume, independent of the angle equation.
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Exact => "exact",
            Method::Numeric => "numeric",
            Method::Contour => "contour",
            Method::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

/// Half-grazing tether for a field of dimension `n`.
///
/// `beta` is the angle at the anchor between the line to the field centre and
/// the farthest reachable fence point, and `k = 2 cos(beta)` is the ratio of
/// tether length to field radius. `residual` is whatever equation the method
/// drove to zero, evaluated at the returned point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GoatSolution {
    pub n: f64,
    pub beta: f64,
    pub k: f64,
    pub residual: f64,
    pub method: Method,
}

impl GoatSolution {
    /// Tether length for a field of radius `r`.
    pub fn tether_length(&self, r: f64) -> f64 {
        self.k * r
    }
}
