//! Second virial coefficient of the Mie (n, m) intermolecular potential.
//!
//! The library computes B(T*) along several independent routes and is built
//! so the routes can be cross-checked against one another:
//!
//! * [`virial::b_general_series`] — the general temperature series valid for
//!   any exponent pair with n > m > 3;
//! * [`virial::b_kummer_n2m`] — the confluent-hypergeometric closed form for
//!   n = 2m, plus the Lennard-Jones specializations (a two-term ₁F₁ form and
//!   a four-term modified-Bessel form);
//! * [`virial::b_nine_six`] and [`virial::b_explicit_84_104`] — explicit
//!   hypergeometric forms for (9,6), (8,4) and (10,4);
//! * [`virial::b_low_t_asymptotic`] — divergent ₂F₀ low-temperature
//!   expansions with optimal truncation;
//! * [`oracle::quadrature_b`] — adaptive Gauss–Kronrod quadrature of the
//!   defining integral, with no series machinery at all;
//! * [`brackets`] — a small method-of-brackets engine that rederives the
//!   general series mechanically from the defining integral.
//!
//! All temperatures are dimensionless: either the reduced temperature T*
//! or the ratio kT/ε; see [`mie`] for the conversion.

pub mod brackets;
pub mod error;
pub mod mie;
pub mod oracle;
pub mod specfun;
pub mod virial;

pub use error::{Error, Result};
pub use mie::{MiePotential, ReducedTemperature};
pub use oracle::QuadratureReport;
pub use specfun::{HypergeometricSpec, SeriesEvaluation};
pub use virial::{Method, VirialResult};
