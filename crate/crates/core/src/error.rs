//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole: x = {x} is a non-positive integer")]
    GammaPole { x: f64 },

    /// |Gamma(x)| exceeds the f64 range; callers should switch to `log_gamma`.
    #[error("gamma overflow at x = {x}; use log_gamma")]
    GammaOverflow { x: f64 },

    /// A precondition on the inputs was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A lower pFq parameter is zero or a negative integer, so some term
    /// denominator vanishes.
    #[error("lower pFq parameter {value} is a non-positive integer")]
    LowerParameterPole { value: f64 },

    /// Convergent pFq evaluation requires p <= q.
    #[error("pFq with p = {p} > q = {q} is not convergent; p <= q required")]
    TooManyUpperParameters { p: usize, q: usize },

    /// The term budget ran out before the stopping rule fired.
    #[error("series did not converge within {budget} terms (last term {last_term:e})")]
    SeriesBudgetExhausted { budget: usize, last_term: f64 },

    /// The linear system of bracket constraints has a singular matrix for
    /// the chosen free indices.
    #[error("bracket system is singular for this choice of free indices")]
    SingularBracketSystem,

    /// A basis series with a non-integer sign exponent cannot be summed to a
    /// real value.
    #[error("basis series is not real (sign exponent {sign_exponent})")]
    NonRealBasisSeries { sign_exponent: String },

    /// A gamma argument of a basis series hit a pole at a summation index.
    #[error("gamma argument {argument} is a non-positive integer at summation index k = {k}")]
    GammaPoleInSeries { k: u32, argument: f64 },

    /// No sign change of B was found on the search interval.
    #[error("no sign change of B on T* in [{lo}, {hi}]")]
    RootBracketNotFound { lo: f64, hi: f64 },

    /// Adaptive quadrature could not meet the requested tolerance. The best
    /// value obtained and its error estimate are carried along.
    #[error(
        "quadrature tolerance not met after {subdivisions} subdivisions: \
         value {value:e}, error estimate {error_estimate:e}"
    )]
    QuadratureToleranceNotMet {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },
}
