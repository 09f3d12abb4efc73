//! Exact rational arithmetic for the brackets engine: affine forms
//! `constant + sum_i coeff_i * index_i` over named summation indices.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the brackets engine.
pub type Rational = Ratio<i64>;

/// Shorthand for a reduced rational.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

/// Best small-denominator rational approximation of an f64, by continued
/// fractions. Accepts a convergent once it matches to a relative 1e-9 and
/// gives up above the denominator bound, so `4.2` comes back as exactly
/// 21/5 while irrational inputs land on a faithful nearby fraction.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    const MAX_DENOMINATOR: i64 = 1_000_000;
    const RELATIVE_TOLERANCE: f64 = 1e-9;
    if !x.is_finite() {
        return None;
    }

    let tol = RELATIVE_TOLERANCE * x.abs().max(1.0);
    let (mut p0, mut q0) = (1i64, 0i64);
    let (mut p1, mut q1) = (x.floor() as i64, 1i64);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if (x - p1 as f64 / q1 as f64).abs() <= tol {
            return Some(Rational::new(p1, q1));
        }
        if frac == 0.0 {
            break;
        }
        let y = 1.0 / frac;
        if y >= i64::MAX as f64 {
            break;
        }
        let a = y.floor() as i64;
        frac = 1.0 / frac - a as f64;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        if q2 > MAX_DENOMINATOR {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    if (x - p1 as f64 / q1 as f64).abs() <= tol {
        Some(Rational::new(p1, q1))
    } else {
        None
    }
}

/// An affine form `constant + sum coeff_i * index_i` with exact rational
/// coefficients. The representation is canonical: zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineForm {
    constant: Rational,
    coefficients: BTreeMap<String, Rational>,
}

impl AffineForm {
    pub fn constant(value: Rational) -> Self {
        Self {
            constant: value,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// A bare index with coefficient one.
    pub fn index(name: &str) -> Self {
        Self::zero().plus_term(name, Rational::from_integer(1))
    }

    /// Returns `self + coeff * name`, keeping the representation canonical.
    pub fn plus_term(mut self, name: &str, coeff: Rational) -> Self {
        let entry = self
            .coefficients
            .entry(name.to_owned())
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.remove(name);
        }
        self
    }

    pub fn constant_part(&self) -> Rational {
        self.constant
    }

    pub fn coefficient(&self, name: &str) -> Rational {
        self.coefficients
            .get(name)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&str, Rational)> {
        self.coefficients.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn index_names(&self) -> impl Iterator<Item = &str> {
        self.coefficients.keys().map(String::as_str)
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// True when the form takes integer values at every integer assignment
    /// of its indices, i.e. the constant and all coefficients are integers.
    pub fn is_integer_valued(&self) -> bool {
        self.constant.is_integer() && self.coefficients.values().all(Ratio::is_integer)
    }

    pub fn add(&self, other: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        out.constant += other.constant;
        for (name, coeff) in &other.coefficients {
            out = out.plus_term(name, *coeff);
        }
        out
    }

    pub fn scale(&self, factor: Rational) -> AffineForm {
        if factor.is_zero() {
            return AffineForm::zero();
        }
        AffineForm {
            constant: self.constant * factor,
            coefficients: self
                .coefficients
                .iter()
                .map(|(k, v)| (k.clone(), *v * factor))
                .collect(),
        }
    }

    pub fn negate(&self) -> AffineForm {
        self.scale(Rational::from_integer(-1))
    }

    /// Replaces every listed index by the given affine form.
    pub fn substitute(&self, bindings: &BTreeMap<String, AffineForm>) -> AffineForm {
        let mut out = AffineForm::constant(self.constant);
        for (name, coeff) in &self.coefficients {
            match bindings.get(name) {
                Some(replacement) => out = out.add(&replacement.scale(*coeff)),
                None => out = out.plus_term(name, *coeff),
            }
        }
        out
    }

    /// Exact value at an integer assignment of a single index. The form must
    /// not mention any other index.
    pub fn eval_single(&self, name: &str, k: i64) -> Rational {
        debug_assert!(
            self.coefficients.keys().all(|key| key == name),
            "eval_single of a form with foreign indices: {self}"
        );
        self.constant + self.coefficient(name) * Rational::from_integer(k)
    }

    /// Exact value of a constant form.
    pub fn eval_constant(&self) -> Rational {
        debug_assert!(self.is_constant());
        self.constant
    }
}

/// Lossless f64 view of a rational (exponents and gamma arguments are far
/// inside the exactly-representable range).
pub fn rational_to_f64(r: Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// True when a rational is 0, -1, -2, ...
pub fn is_nonpositive_integer_rational(r: Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.constant.is_zero() || self.coefficients.is_empty() {
            write!(f, "{}", self.constant)?;
            wrote = true;
        }
        for (name, coeff) in &self.coefficients {
            if wrote {
                if coeff.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let mag = coeff.abs();
            if mag == Rational::from_integer(1) {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_from_f64_snaps_to_small_fractions() {
        assert_eq!(rational_from_f64(4.2), Some(rat(21, 5)));
        assert_eq!(rational_from_f64(7.5), Some(rat(15, 2)));
        assert_eq!(rational_from_f64(12.0), Some(rat(12, 1)));
        assert_eq!(rational_from_f64(-0.375), Some(rat(-3, 8)));
        assert_eq!(rational_from_f64(0.1 + 0.2), Some(rat(3, 10)));
    }

    #[test]
    fn rational_from_f64_handles_irrational_inputs() {
        let r = rational_from_f64(std::f64::consts::PI).unwrap();
        let err = (rational_to_f64(r) - std::f64::consts::PI).abs();
        assert!(err <= 1e-9 * std::f64::consts::PI);
        assert!(*r.denom() <= 1_000_000);
    }

    #[test]
    fn canonical_representation_drops_zero_coefficients() {
        let form = AffineForm::index("l")
            .plus_term("l", rat(-1, 1))
            .plus_term("j", rat(2, 3));
        assert!(form.index_names().eq(["j"]));
        assert_eq!(form.coefficient("l"), rat(0, 1));
    }

    #[test]
    fn substitute_replaces_indices() {
        // 3 - 2 l - 5 j with j := (1 - l)/2  =>  3 - 5/2 - 2l + 5l/2 = 1/2 + l/2
        let form = AffineForm::constant(rat(3, 1))
            .plus_term("l", rat(-2, 1))
            .plus_term("j", rat(-5, 1));
        let mut bindings = BTreeMap::new();
        bindings.insert(
            "j".to_owned(),
            AffineForm::constant(rat(1, 2)).plus_term("l", rat(-1, 2)),
        );
        let out = form.substitute(&bindings);
        assert_eq!(out.constant_part(), rat(1, 2));
        assert_eq!(out.coefficient("l"), rat(1, 2));
        assert!(out.index_names().eq(["l"]));
    }

    #[test]
    fn integer_valuedness() {
        assert!(AffineForm::constant(rat(4, 1))
            .plus_term("k", rat(-2, 1))
            .is_integer_valued());
        assert!(!AffineForm::constant(rat(1, 2))
            .plus_term("k", rat(-2, 1))
            .is_integer_valued());
        assert!(!AffineForm::constant(rat(1, 1))
            .plus_term("k", rat(-1, 2))
            .is_integer_valued());
    }

    #[test]
    fn display_is_stable() {
        let form = AffineForm::constant(rat(3, 1))
            .plus_term("l", rat(-12, 1))
            .plus_term("j", rat(-6, 1));
        assert_eq!(form.to_string(), "3 - 6*j - 12*l");
        assert_eq!(AffineForm::zero().to_string(), "0");
        assert_eq!(AffineForm::index("k").negate().to_string(), "-k");
        assert_eq!(
            AffineForm::zero().plus_term("k", rat(-1, 2)).to_string(),
            "-1/2*k"
        );
    }
}
