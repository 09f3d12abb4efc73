//! Modified Bessel function of the first kind, by its power series.

use crate::error::{Error, Result};
use crate::specfun::gamma::{inv_gamma, is_nonpositive_integer};
use crate::specfun::TERM_BUDGET;

const BESSEL_TOLERANCE: f64 = 1e-13;

/// I_nu(x) = sum_k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)) for x >= 0.
///
/// Terms whose Gamma(k+nu+1) sits at a pole contribute zero (1/Gamma
/// vanishes there), which is the analytic continuation used for negative
/// integer orders.
pub fn bessel_i(order: f64, argument: f64) -> Result<f64> {
    bessel_i_detailed(order, argument).map(|(value, _)| value)
}

/// As [`bessel_i`], also reporting how many series terms were summed.
pub(crate) fn bessel_i_detailed(order: f64, argument: f64) -> Result<(f64, usize)> {
    if !(argument >= 0.0) {
        return Err(Error::Domain(format!(
            "bessel_i requires argument >= 0, got {argument}"
        )));
    }
    let nu = order;
    if argument == 0.0 {
        return if nu == 0.0 {
            Ok((1.0, 1))
        } else if nu > 0.0 || is_nonpositive_integer(nu + 1.0) {
            // positive order, or negative integer order via I_{-n} = I_n
            Ok((0.0, 1))
        } else {
            Err(Error::Domain(format!(
                "bessel_i of order {nu} diverges at argument 0"
            )))
        };
    }

    let half = argument / 2.0;
    let half_sq = half * half;
    // (x/2)^nu can be assembled once; the k-dependence is (x/2)^(2k)/k!
    let lead = half.powf(nu);
    if !lead.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_i leading factor (x/2)^nu overflows for nu={nu}, x={argument}"
        )));
    }
    if lead == 0.0 {
        // the whole series underflows
        return Ok((0.0, 1));
    }

    let mut sum = 0.0_f64;
    let mut power = lead; // (x/2)^(2k+nu) / k!
    let mut consecutive_small = 0;
    for k in 0..TERM_BUDGET {
        let term = power * inv_gamma(k as f64 + nu + 1.0);
        sum += term;
        // sum == 0 means only pole terms so far (very negative integer
        // order); the stopping rule must not fire on those
        if sum != 0.0 && term.abs() <= BESSEL_TOLERANCE * sum.abs() {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                return Ok((sum, k + 1));
            }
        } else {
            consecutive_small = 0;
        }
        power *= half_sq / (k as f64 + 1.0);
    }
    Err(Error::SeriesBudgetExhausted {
        budget: TERM_BUDGET,
        last_term: power,
    })
}
