//! Gamma function via a Lanczos approximation in rational form.
//!
//! The coefficient set is the g = 10.900511, n = 11 Lanczos approximation
//! from "An Analysis of the Lanczos Gamma Approximation", Glendon Ralph
//! Pugh, 2004 p. 116 (the same set used by statrs). The partial-fraction
//! form of that set cancels badly in f64 for x beyond ~40, so the sum is
//! evaluated here as a ratio of two degree-10 polynomials with all-positive
//! coefficients obtained by exact expansion of the partial fractions over
//! the common denominator x(x+1)...(x+9). Measured accuracy against a
//! 50-digit reference: relative error below 3e-14 for |x| <= 170.

use crate::error::{Error, Result};

/// Numerator polynomial of the Lanczos sum, low degree first.
const LANCZOS_NUM: [f64; 11] = [
    381540.6633973527,
    365505.352696257,
    157567.99949360118,
    40253.83538142639,
    6748.767525934567,
    775.8779405455635,
    61.94528891422096,
    3.391366244015308,
    0.12184807036444657,
    0.002594340508809067,
    2.4857408913875355e-5,
];

/// Denominator polynomial x(x+1)...(x+9), low degree first.
const LANCZOS_DEN: [f64; 11] = [
    0.0,
    362880.0,
    1026576.0,
    1172700.0,
    723680.0,
    269325.0,
    63273.0,
    9450.0,
    870.0,
    45.0,
    1.0,
];

const GAMMA_R: f64 = 10.900511;

/// 2 * sqrt(e / pi)
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657;

/// ln(2 * sqrt(e / pi))
const LN_2_SQRT_E_OVER_PI: f64 = 0.6207822376352452;

/// True when x is 0, -1, -2, ... (a pole of gamma).
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor() && x.is_finite()
}

/// Lanczos sum for x >= 0.5, by Horner on the rational form.
fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for i in (0..11).rev() {
        num = num * x + LANCZOS_NUM[i];
        den = den * x + LANCZOS_DEN[i];
    }
    num / den
}

/// sin(pi x) with argument reduction done on x itself, so no precision is
/// lost multiplying a large x by pi first.
fn sin_pi(x: f64) -> f64 {
    let nearest = x.round();
    let r = x - nearest;
    let s = (std::f64::consts::PI * r).sin();
    if (nearest as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Gamma for x >= 0.5. The power factor overflows before the final value
/// does, so past exponent 130 it is assembled from two half-powers.
fn gamma_positive(x: f64) -> f64 {
    let s = lanczos_sum(x);
    let base = (x - 0.5 + GAMMA_R) / std::f64::consts::E;
    let expo = x - 0.5;
    if expo <= 130.0 {
        s * TWO_SQRT_E_OVER_PI * base.powf(expo)
    } else {
        let half = base.powf(expo / 2.0);
        (s * TWO_SQRT_E_OVER_PI * half) * half
    }
}

/// Gamma function.
///
/// Arguments below 0.5 go through the reflection formula; non-positive
/// integers are poles and overflow of the result is reported as an error
/// so callers can fall back to [`log_gamma`].
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::GammaPole { x });
    }
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    let value = if x < 0.5 {
        std::f64::consts::PI / (sin_pi(x) * gamma_positive(1.0 - x))
    } else {
        gamma_positive(x)
    };
    if value.is_infinite() {
        return Err(Error::GammaOverflow { x });
    }
    Ok(value)
}

/// 1/Gamma(x), with the poles of gamma mapped to exact zeros.
pub fn inv_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        sin_pi(x) * gamma_positive(1.0 - x) / std::f64::consts::PI
    } else {
        1.0 / gamma_positive(x)
    }
}

/// ln Gamma(x) for x > 0. Stays accurate where gamma itself overflows.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    let s = lanczos_sum(x);
    let base = (x - 0.5 + GAMMA_R) / std::f64::consts::E;
    Ok(s.ln() + LN_2_SQRT_E_OVER_PI + (x - 0.5) * base.ln())
}

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
///
/// Computed by the recurrence rather than by gamma ratios, so non-positive
/// integer a poses no pole problem.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    let mut product = 1.0;
    for i in 0..k {
        product *= a + i as f64;
    }
    product
}
