use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GoatError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature did not reach its tolerance.
    #[error("quadrature did not converge: last difference {last_diff:e} after {levels} halvings (tolerance {abs_tol:e})")]
    Convergence {
        last_diff: f64,
        levels: u32,
        abs_tol: f64,
    },

    /// The endpoints of a root bracket have the same sign.
    #[error("root not bracketed: f({lo}) = {f_lo:e}, f({hi}) = {f_hi:e}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A sampled integrand or function value was NaN or infinite.
    #[error("non-finite value at {0}")]
    NonFinite(String),

    /// The residue-ratio denominator vanished.
    #[error("degenerate contour integral: |denominator| = {0:e}")]
    Degenerate(f64),

    /// The argument-principle integral was not close to an integer.
    #[error("zero count {0} is not near an integer")]
    NotInteger(f64),

    /// A computed result failed a post-condition check.
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, GoatError>;
