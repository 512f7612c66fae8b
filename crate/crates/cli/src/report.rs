//! Cross-method verification report.

use goat_core::geometry::McEstimate;
use goat_core::GoatSolution;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodRun {
    /// `fraser`, `oracle` or `contour`.
    pub name: String,
    pub solution: GoatSolution,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub a: String,
    pub b: String,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Monte Carlo grazed fraction at the Fraser `k`, expected to be one half.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McCheck {
    pub k: f64,
    pub seed: u64,
    pub samples: u64,
    pub fraction: f64,
    pub std_error: f64,
    /// Allowed distance from 1/2, in standard errors.
    pub sigmas: f64,
    pub pass: bool,
}

impl McCheck {
    pub const SIGMAS: f64 = 4.0;

    pub fn new(k: f64, seed: u64, est: McEstimate) -> Self {
        let pass = (est.fraction - 0.5).abs() <= Self::SIGMAS * est.std_error;
        Self {
            k,
            seed,
            samples: est.samples,
            fraction: est.fraction,
            std_error: est.std_error,
            sigmas: Self::SIGMAS,
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub n: u32,
    pub tol_cross: f64,
    pub methods: Vec<MethodRun>,
    pub deviations: Vec<Deviation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub monte_carlo: Option<McCheck>,
    pub verdict: Verdict,
}

impl RunReport {
    /// Builds the report, comparing every pair of methods. The verdict is
    /// pass iff every deviation (and the Monte Carlo check, when present)
    /// passes.
    pub fn new(n: u32, tol_cross: f64, methods: Vec<MethodRun>, monte_carlo: Option<McCheck>) -> Self {
        let mut deviations = Vec::new();
        for (i, a) in methods.iter().enumerate() {
            for b in &methods[i + 1..] {
                let abs_diff = (a.solution.k - b.solution.k).abs();
                deviations.push(Deviation {
                    a: a.name.clone(),
                    b: b.name.clone(),
                    abs_diff,
                    tolerance: tol_cross,
                    pass: abs_diff <= tol_cross,
                });
            }
        }
        let ok = deviations.iter().all(|d| d.pass) && monte_carlo.as_ref().is_none_or(|m| m.pass);
        Self {
            command: "verify".into(),
            n,
            tol_cross,
            methods,
            deviations,
            monte_carlo,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }
}
