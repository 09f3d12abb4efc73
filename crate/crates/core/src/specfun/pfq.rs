//! Generalized hypergeometric series.
//!
//! `pfq` sums the convergent series for p <= q by term-to-term recurrence;
//! `pfq_asymptotic_2f0` evaluates the divergent ₂F₀ by truncation, by default
//! at the smallest term.

use crate::error::{Error, Result};
use crate::specfun::gamma::is_nonpositive_integer;
use crate::specfun::TERM_BUDGET;

/// Parameters of a generalized hypergeometric evaluation request:
/// upper parameters a_i, lower parameters b_j, and the argument z.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub argument: f64,
}

impl HypergeometricSpec {
    pub fn new(upper: impl Into<Vec<f64>>, lower: impl Into<Vec<f64>>, argument: f64) -> Self {
        Self {
            upper: upper.into(),
            lower: lower.into(),
            argument,
        }
    }
}

/// Outcome of summing a series: the value, how many terms were used, the
/// magnitude of the last term (the error estimate for asymptotic series),
/// and whether the stopping rule fired within the budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: f64,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    pub converged: bool,
}

/// Sums pFq(a_1..a_p; b_1..b_q; z) = sum_k prod (a_i)_k / prod (b_j)_k z^k/k!.
///
/// Terms follow from the previous one by multiplying
/// prod(a_i + k) / prod(b_j + k) * z / (k + 1); summation stops once two
/// consecutive terms fall below `tolerance * max(1, |partial sum|)`. A single
/// small term is not trusted because a parameter ratio can make one term
/// accidentally tiny.
pub fn pfq(spec: &HypergeometricSpec, tolerance: f64) -> Result<SeriesEvaluation> {
    if spec.upper.len() > spec.lower.len() {
        return Err(Error::TooManyUpperParameters {
            p: spec.upper.len(),
            q: spec.lower.len(),
        });
    }
    if !(tolerance > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    for &b in &spec.lower {
        if is_nonpositive_integer(b) {
            return Err(Error::LowerParameterPole { value: b });
        }
    }

    let z = spec.argument;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    if z == 0.0 {
        return Ok(SeriesEvaluation {
            value: 1.0,
            terms_used: 1,
            last_term_magnitude: 1.0,
            converged: true,
        });
    }

    let mut consecutive_small = 0;
    for k in 0..TERM_BUDGET {
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &spec.upper {
            ratio *= a + kf;
        }
        for &b in &spec.lower {
            ratio /= b + kf;
        }
        term *= ratio;
        sum += term;

        if term == 0.0 {
            // an upper parameter hit a non-positive integer: the series is
            // a polynomial and has terminated exactly
            return Ok(SeriesEvaluation {
                value: sum,
                terms_used: k + 2,
                last_term_magnitude: 0.0,
                converged: true,
            });
        }
        if term.abs() <= tolerance * sum.abs().max(1.0) {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                return Ok(SeriesEvaluation {
                    value: sum,
                    terms_used: k + 2,
                    last_term_magnitude: term.abs(),
                    converged: true,
                });
            }
        } else {
            consecutive_small = 0;
        }
    }
    Err(Error::SeriesBudgetExhausted {
        budget: TERM_BUDGET,
        last_term: term,
    })
}

/// Evaluates the formally divergent asymptotic series
/// ₂F₀(a1, a2; z) = sum_k (a1)_k (a2)_k z^k / k! by truncation.
///
/// With `max_order = Some(n)` the sum is cut after the z^n term, matching a
/// "truncated to an arbitrary order" usage; otherwise it stops at the optimal
/// truncation point, just before the first term whose magnitude exceeds its
/// predecessor. `last_term_magnitude` is the magnitude of the first omitted
/// term and serves as the asymptotic error estimate; growth of the terms past
/// the optimal point is expected for this series and is not an error.
pub fn pfq_asymptotic_2f0(a1: f64, a2: f64, argument: f64, max_order: Option<usize>) -> SeriesEvaluation {
    let z = argument;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut terms_used = 1usize;
    let mut turnaround_seen = false;

    let budget = max_order.map(|n| n.min(TERM_BUDGET)).unwrap_or(TERM_BUDGET);
    let mut next = (a1) * (a2) * z; // term of order 1
    loop {
        if next == 0.0 {
            return SeriesEvaluation {
                value: sum,
                terms_used,
                last_term_magnitude: 0.0,
                converged: true,
            };
        }
        if next.abs() > term.abs() {
            turnaround_seen = true;
            if max_order.is_none() {
                // optimal truncation: stop just before the growing term
                return SeriesEvaluation {
                    value: sum,
                    terms_used,
                    last_term_magnitude: next.abs(),
                    converged: true,
                };
            }
        }
        if terms_used > budget {
            return SeriesEvaluation {
                value: sum,
                terms_used,
                last_term_magnitude: next.abs(),
                converged: turnaround_seen && max_order.is_some(),
            };
        }
        term = next;
        sum += term;
        let k = terms_used as f64;
        next = term * (a1 + k) * (a2 + k) * z / (k + 1.0);
        terms_used += 1;
    }
}
