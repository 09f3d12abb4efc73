//! Real-valued special functions: gamma, Pochhammer symbols, convergent
//! generalized pFq series, the asymptotic ₂F₀ with optimal truncation, and
//! modified Bessel functions of the first kind.
//!
//! All computation is plain f64; every function here is pure.

mod bessel;
mod gamma;
mod pfq;

pub use bessel::bessel_i;
pub(crate) use bessel::bessel_i_detailed;
pub use gamma::{gamma, inv_gamma, is_nonpositive_integer, log_gamma, pochhammer};
pub use pfq::{pfq, pfq_asymptotic_2f0, HypergeometricSpec, SeriesEvaluation};

/// Default term budget for convergent series.
pub const TERM_BUDGET: usize = 10_000;
