//! Every representation of the second virial coefficient B(T*): the general
//! temperature series, the n = 2m Kummer closed form, the Lennard-Jones
//! specializations, the explicit (9,6), (8,4) and (10,4) forms, low- and
//! high-temperature asymptotics, the brackets-engine route, and a Boyle
//! temperature root find.
//!
//! Values are reported per sigma^3 and also in the reduced convention
//! B* = B / (2 pi sigma^3 / 3), which makes tables comparable across (n, m).

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::brackets::{
    self, enumerate_basis_series, j_bracket_series, rational_from_f64, Rational, PARAM_INV_T_STAR,
    PARAM_SIGMA,
};
use crate::error::{Error, Result};
use crate::mie::{MiePotential, ReducedTemperature};
use crate::oracle;
use crate::specfun::{
    gamma, log_gamma, pfq, pfq_asymptotic_2f0, HypergeometricSpec, TERM_BUDGET,
};

/// How a B value was obtained. The declaration order is the canonical
/// ordering used in tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    GeneralSeries,
    KummerN2M,
    LennardJones1F1,
    LennardJonesBessel,
    NineSix,
    Explicit84,
    Explicit104,
    LowTAsymptotic,
    HighTLeading,
    Quadrature,
    Brackets,
}

impl Method {
    pub const ALL: [Method; 11] = [
        Method::GeneralSeries,
        Method::KummerN2M,
        Method::LennardJones1F1,
        Method::LennardJonesBessel,
        Method::NineSix,
        Method::Explicit84,
        Method::Explicit104,
        Method::LowTAsymptotic,
        Method::HighTLeading,
        Method::Quadrature,
        Method::Brackets,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::GeneralSeries => "GeneralSeries",
            Method::KummerN2M => "KummerN2M",
            Method::LennardJones1F1 => "LennardJones1F1",
            Method::LennardJonesBessel => "LennardJonesBessel",
            Method::NineSix => "NineSix",
            Method::Explicit84 => "Explicit84",
            Method::Explicit104 => "Explicit104",
            Method::LowTAsymptotic => "LowTAsymptotic",
            Method::HighTLeading => "HighTLeading",
            Method::Quadrature => "Quadrature",
            Method::Brackets => "Brackets",
        }
    }

    pub fn parse(name: &str) -> Option<Method> {
        Method::ALL.iter().copied().find(|m| m.name() == name)
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed B value with its provenance and convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VirialResult {
    /// B divided by sigma^3.
    pub b_over_sigma3: f64,
    /// B divided by 2 pi sigma^3 / 3.
    pub b_reduced: f64,
    pub method: Method,
    pub terms_used: usize,
    pub error_estimate: f64,
}

impl VirialResult {
    fn new(b_over_sigma3: f64, method: Method, terms_used: usize, error_estimate: f64) -> Self {
        Self {
            b_over_sigma3,
            b_reduced: b_over_sigma3 / (2.0 * std::f64::consts::PI / 3.0),
            method,
            terms_used,
            error_estimate,
        }
    }
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if !(tolerance > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    Ok(())
}

/// Relative comparison used for method applicability by (n, m).
fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

/// The general series
/// `B = -(2 pi sigma^3 / n) T*^(-3/n) sum_k Gamma((k m - 3)/n)/k! T*^(-(n-m)k/n)`.
///
/// The k = 0 term is the only negative one (Gamma(-3/n) < 0 for n > 3) and
/// every later term is positive, so there is no cancellation to fight. Terms
/// for k >= 1 are assembled in log space: near T* -> 0 the summands peak far
/// above the final value and direct gamma factors would overflow long before
/// the series stops converging.
pub fn b_general_series(
    potential: &MiePotential,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    let n = potential.n();
    let m = potential.m();
    let t_star = temperature.t_star();
    let ln_t = t_star.ln();

    let mut sum = gamma(-3.0 / n)?;
    let mut last = sum.abs();
    let mut terms_used = 1usize;
    let mut consecutive_small = 0;
    let mut converged = false;
    for k in 1..TERM_BUDGET {
        let kf = k as f64;
        let log_term = log_gamma((kf * m - 3.0) / n)? - log_gamma(kf + 1.0)?
            - (n - m) * kf / n * ln_t;
        let term = log_term.exp();
        sum += term;
        last = term;
        terms_used = k + 1;
        if term <= tolerance * sum.abs().max(1.0) {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                converged = true;
                break;
            }
        } else {
            consecutive_small = 0;
        }
    }
    if !converged {
        return Err(Error::SeriesBudgetExhausted {
            budget: TERM_BUDGET,
            last_term: last,
        });
    }
    let prefactor = -(2.0 * std::f64::consts::PI / n) * t_star.powf(-3.0 / n);
    Ok(VirialResult::new(
        prefactor * sum,
        Method::GeneralSeries,
        terms_used,
        prefactor.abs() * last,
    ))
}

/// The Kummer closed form for n = 2m:
/// `B = -(pi sigma^3)/(m T*^(3/2m)) [Gamma(-3/2m) 1F1(-3/2m; 1/2; 1/4T*)
///    + Gamma(1/2 - 3/2m)/sqrt(T*) 1F1(1/2 - 3/2m; 3/2; 1/4T*)]`.
pub fn b_kummer_n2m(
    m: f64,
    _sigma: f64,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    if !(m > 3.0) {
        return Err(Error::Domain(format!(
            "Kummer form requires m > 3, got {m}"
        )));
    }
    let t_star = temperature.t_star();
    let argument = 1.0 / (4.0 * t_star);
    let a = -3.0 / (2.0 * m);
    let first = pfq(&HypergeometricSpec::new([a], [0.5], argument), tolerance)?;
    let second = pfq(
        &HypergeometricSpec::new([0.5 + a], [1.5], argument),
        tolerance,
    )?;
    let g1 = gamma(a)?;
    let g2 = gamma(0.5 + a)?;
    let sqrt_t = t_star.sqrt();
    let prefactor = -std::f64::consts::PI / (m * t_star.powf(3.0 / (2.0 * m)));
    let value = prefactor * (g1 * first.value + g2 / sqrt_t * second.value);
    let error = prefactor.abs()
        * (g1.abs() * first.last_term_magnitude + g2.abs() / sqrt_t * second.last_term_magnitude);
    Ok(VirialResult::new(
        value,
        Method::KummerN2M,
        first.terms_used + second.terms_used,
        error,
    ))
}

/// The Lennard-Jones (12,6) two-term Kummer display, transcribed verbatim:
/// `B = -(pi sigma^3)/(6 T*^(1/4)) [Gamma(-1/4) 1F1(-1/4;1/2;1/4T*)
///    + Gamma(1/4)/sqrt(T*) 1F1(1/4;3/2;1/4T*)]`.
pub fn b_lj_1f1(
    _sigma: f64,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    let t_star = temperature.t_star();
    let argument = 1.0 / (4.0 * t_star);
    let first = pfq(&HypergeometricSpec::new([-0.25], [0.5], argument), tolerance)?;
    let second = pfq(&HypergeometricSpec::new([0.25], [1.5], argument), tolerance)?;
    let g1 = gamma(-0.25)?;
    let g2 = gamma(0.25)?;
    let sqrt_t = t_star.sqrt();
    let prefactor = -std::f64::consts::PI / (6.0 * t_star.powf(0.25));
    let value = prefactor * (g1 * first.value + g2 / sqrt_t * second.value);
    let error = prefactor.abs()
        * (g1.abs() * first.last_term_magnitude + g2.abs() / sqrt_t * second.last_term_magnitude);
    Ok(VirialResult::new(
        value,
        Method::LennardJones1F1,
        first.terms_used + second.terms_used,
        error,
    ))
}

/// The Lennard-Jones four-Bessel form, in physical temperature units:
/// `B = (sqrt(2) pi^2 sigma^3 / 3) (eps/kT) e^(eps/2kT)
///    [I_{-3/4} + I_{3/4} - I_{1/4} - I_{-1/4}](eps/2kT)`.
///
/// The sqrt(2) follows from substituting the two Kummer-to-Bessel
/// identities into the two-term 1F1 form: with Gamma(-1/4) = -4 Gamma(3/4)
/// and Gamma(1/4) Gamma(3/4) = sqrt(2) pi, both terms collapse onto the
/// common coefficient sqrt(2) pi^2 / 3.
pub fn b_lj_bessel(_sigma: f64, kt_over_eps: f64, tolerance: f64) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    if !(kt_over_eps > 0.0) {
        return Err(Error::Domain(format!(
            "kT/eps must be positive, got {kt_over_eps}"
        )));
    }
    let eps_over_kt = 1.0 / kt_over_eps;
    let x = 0.5 * eps_over_kt;
    let (i_m34, t1) = crate::specfun::bessel_i_detailed(-0.75, x)?;
    let (i_p34, t2) = crate::specfun::bessel_i_detailed(0.75, x)?;
    let (i_p14, t3) = crate::specfun::bessel_i_detailed(0.25, x)?;
    let (i_m14, t4) = crate::specfun::bessel_i_detailed(-0.25, x)?;
    let prefactor =
        std::f64::consts::SQRT_2 * std::f64::consts::PI.powi(2) / 3.0 * eps_over_kt * x.exp();
    let bracket = i_m34 + i_p34 - i_p14 - i_m14;
    let value = prefactor * bracket;
    // the four series are summed to a relative 1e-13 each
    let error = prefactor * 1e-13 * (i_m34.abs() + i_p34.abs() + i_p14.abs() + i_m14.abs());
    Ok(VirialResult::new(
        value,
        Method::LennardJonesBessel,
        t1 + t2 + t3 + t4,
        error,
    ))
}

/// The explicit (9,6) three-term hypergeometric representation.
pub fn b_nine_six(
    _sigma: f64,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    let t_star = temperature.t_star();
    let z = 4.0 / (27.0 * t_star);
    let third = 1.0 / 3.0;
    let pi = std::f64::consts::PI;

    let f1 = pfq(
        &HypergeometricSpec::new([-1.0 / 6.0], [2.0 * third], z),
        tolerance,
    )?;
    let f2 = pfq(
        &HypergeometricSpec::new([1.0 / 6.0], [4.0 * third], z),
        tolerance,
    )?;
    let f3 = pfq(
        &HypergeometricSpec::new([0.5, 1.0], [4.0 * third, 5.0 * third], z),
        tolerance,
    )?;

    let p1 = -2.0 * pi / (9.0 * t_star.powf(third)) * gamma(-third)?;
    let p2 = -2.0 * pi / (9.0 * t_star.powf(2.0 * third)) * gamma(third)?;
    let p3 = -pi / (9.0 * t_star);
    let value = p1 * f1.value + p2 * f2.value + p3 * f3.value;
    let error = p1.abs() * f1.last_term_magnitude
        + p2.abs() * f2.last_term_magnitude
        + p3.abs() * f3.last_term_magnitude;
    Ok(VirialResult::new(
        value,
        Method::NineSix,
        f1.terms_used + f2.terms_used + f3.terms_used,
        error,
    ))
}

/// Which explicit finite-sum display to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplicitCase {
    EightFour,
    TenFour,
}

/// One transcribed term of the (10,4) display: prefactor
/// `-pi * gamma_factor / (denominator * T*^t_exponent)` times a 2F4 of the
/// common argument 4/(3125 T*^3). `gamma_argument = None` marks the term
/// whose gamma factor is sqrt(pi).
struct Term104 {
    gamma_argument: Option<f64>,
    denominator: f64,
    t_exponent: f64,
    upper: [f64; 2],
    lower: [f64; 4],
}

/// Hand-transcribed (10,4) data; guarded by a cross-check against the
/// general series in the tests.
const TERMS_104: [Term104; 5] = [
    Term104 {
        gamma_argument: None,
        denominator: 10.0,
        t_exponent: 1.5,
        upper: [0.25, 0.75],
        lower: [0.6, 0.8, 1.2, 1.4],
    },
    Term104 {
        gamma_argument: Some(-0.3),
        denominator: 5.0,
        t_exponent: 0.3,
        upper: [-0.15, 0.35],
        lower: [0.2, 0.4, 0.6, 0.8],
    },
    Term104 {
        gamma_argument: Some(0.1),
        denominator: 5.0,
        t_exponent: 0.9,
        upper: [0.05, 0.55],
        lower: [0.4, 0.6, 0.8, 1.2],
    },
    Term104 {
        gamma_argument: Some(0.9),
        denominator: 30.0,
        t_exponent: 2.1,
        upper: [0.45, 0.95],
        lower: [0.8, 1.2, 1.4, 1.6],
    },
    Term104 {
        gamma_argument: Some(0.3),
        denominator: 400.0,
        t_exponent: 2.7,
        upper: [0.65, 1.15],
        lower: [1.2, 1.4, 1.6, 1.8],
    },
];

/// The explicit (8,4) two-term and (10,4) five-term displays, evaluated
/// verbatim.
pub fn b_explicit_84_104(
    which: ExplicitCase,
    _sigma: f64,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    let t_star = temperature.t_star();
    let pi = std::f64::consts::PI;
    match which {
        ExplicitCase::EightFour => {
            let argument = 1.0 / (4.0 * t_star);
            let f1 = pfq(&HypergeometricSpec::new([-0.375], [0.5], argument), tolerance)?;
            let f2 = pfq(&HypergeometricSpec::new([0.125], [1.5], argument), tolerance)?;
            let p1 = -pi * gamma(-0.375)? / (4.0 * t_star.powf(3.0 / 8.0));
            let p2 = -pi * gamma(0.125)? / (4.0 * t_star.powf(7.0 / 8.0));
            let value = p1 * f1.value + p2 * f2.value;
            let error =
                p1.abs() * f1.last_term_magnitude + p2.abs() * f2.last_term_magnitude;
            Ok(VirialResult::new(
                value,
                Method::Explicit84,
                f1.terms_used + f2.terms_used,
                error,
            ))
        }
        ExplicitCase::TenFour => {
            let z = 4.0 / (3125.0 * t_star.powi(3));
            let mut value = 0.0;
            let mut error = 0.0;
            let mut terms = 0;
            for term in &TERMS_104 {
                let gamma_factor = match term.gamma_argument {
                    Some(a) => gamma(a)?,
                    None => pi.sqrt(),
                };
                let prefactor =
                    -pi * gamma_factor / (term.denominator * t_star.powf(term.t_exponent));
                let f = pfq(
                    &HypergeometricSpec::new(term.upper, term.lower, z),
                    tolerance,
                )?;
                value += prefactor * f.value;
                error += prefactor.abs() * f.last_term_magnitude;
                terms += f.terms_used;
            }
            Ok(VirialResult::new(value, Method::Explicit104, terms, error))
        }
    }
}

/// The low-temperature asymptotic families supported in closed form.
enum LowTFamily {
    /// n = 2m: 2F0((2m+3)/2m, (m+3)/2m; kT/eps) with prefactor
    /// -2^(1+3/m) pi^(3/2) sigma^3 / m.
    NTwoM { m: f64 },
    /// (9,6): 2F0(5/6, 7/6; kT/eps) with prefactor -pi^(3/2) sigma^3 / sqrt(3).
    NineSix,
}

fn low_t_family(potential: &MiePotential) -> Result<LowTFamily> {
    let n = potential.n();
    let m = potential.m();
    if close(n, 2.0 * m) {
        Ok(LowTFamily::NTwoM { m })
    } else if close(n, 9.0) && close(m, 6.0) {
        Ok(LowTFamily::NineSix)
    } else {
        Err(Error::Domain(format!(
            "low-T asymptotics are available for n = 2m and (n,m) = (9,6); got ({n}, {m})"
        )))
    }
}

/// Low-temperature expansion truncated at `order`, evaluated with the
/// exponential prefactor kept in log space so kT/eps down to a few thousandths
/// cannot overflow on the way to a finite value.
pub fn b_low_t_asymptotic(
    potential: &MiePotential,
    kt_over_eps: f64,
    order: usize,
) -> Result<VirialResult> {
    if !(kt_over_eps > 0.0) {
        return Err(Error::Domain(format!(
            "kT/eps must be positive, got {kt_over_eps}"
        )));
    }
    let (a1, a2, ln_prefactor) = match low_t_family(potential)? {
        LowTFamily::NTwoM { m } => (
            (2.0 * m + 3.0) / (2.0 * m),
            (m + 3.0) / (2.0 * m),
            (1.0 + 3.0 / m) * std::f64::consts::LN_2 + 1.5 * std::f64::consts::PI.ln() - m.ln(),
        ),
        LowTFamily::NineSix => (
            5.0 / 6.0,
            7.0 / 6.0,
            1.5 * std::f64::consts::PI.ln() - 0.5 * 3.0_f64.ln(),
        ),
    };
    let series = pfq_asymptotic_2f0(a1, a2, kt_over_eps, Some(order));
    let ln_scale = ln_prefactor + 0.5 * kt_over_eps.ln() + 1.0 / kt_over_eps;
    let value = -(ln_scale + series.value.ln()).exp();
    Ok(VirialResult::new(
        value,
        Method::LowTAsymptotic,
        series.terms_used,
        ln_scale.exp() * series.last_term_magnitude,
    ))
}

/// Exact rational ₂F₀ coefficients of the low-temperature expansion,
/// c_k = (a1)_k (a2)_k / k!, for the supported families. Orders above 16
/// are rejected to keep the exact arithmetic within i64 range.
pub fn low_t_coefficients(potential: &MiePotential, order: usize) -> Result<Vec<Rational>> {
    if order > 16 {
        return Err(Error::Domain(format!(
            "exact coefficients supported up to order 16, requested {order}"
        )));
    }
    let (a1, a2): (Ratio<i128>, Ratio<i128>) = match low_t_family(potential)? {
        LowTFamily::NTwoM { m } => {
            let m_rational = rational_from_f64(m).ok_or_else(|| {
                Error::Domain(format!("m = {m} has no small rational representation"))
            })?;
            let m_big = Ratio::<i128>::new(*m_rational.numer() as i128, *m_rational.denom() as i128);
            let two_m = m_big * 2;
            ((two_m + 3) / two_m, (m_big + 3) / two_m)
        }
        LowTFamily::NineSix => (Ratio::new(5, 6), Ratio::new(7, 6)),
    };

    let mut coefficients = Vec::with_capacity(order + 1);
    let mut current = Ratio::<i128>::from_integer(1);
    coefficients.push(current);
    for k in 0..order as i128 {
        current = current * (a1 + k) * (a2 + k) / Ratio::from_integer(k + 1);
        coefficients.push(current);
    }
    coefficients
        .into_iter()
        .map(|c| {
            let numer = i64::try_from(*c.numer())
                .map_err(|_| Error::Domain("coefficient exceeds i64".into()))?;
            let denom = i64::try_from(*c.denom())
                .map_err(|_| Error::Domain("coefficient exceeds i64".into()))?;
            Ok(Rational::new(numer, denom))
        })
        .collect()
}

/// Leading high-temperature behavior, the k = 0 truncation of the general
/// series: `B = -(2 pi sigma^3 / n) Gamma(-3/n) T*^(-3/n)`. The error
/// estimate is the first omitted (k = 1) term.
pub fn b_high_t_leading(
    potential: &MiePotential,
    temperature: ReducedTemperature,
) -> Result<VirialResult> {
    let n = potential.n();
    let m = potential.m();
    let t_star = temperature.t_star();
    let prefactor = -(2.0 * std::f64::consts::PI / n) * t_star.powf(-3.0 / n);
    let value = prefactor * gamma(-3.0 / n)?;
    let omitted = prefactor.abs() * gamma((m - 3.0) / n)? * t_star.powf(-(n - m) / n);
    Ok(VirialResult::new(
        value,
        Method::HighTLeading,
        1,
        omitted,
    ))
}

/// B through the brackets engine: build the bracket series of the defining
/// integral, keep the one real basis series, sum it, and restore the -2 pi
/// prefactor. The regulator term of the defining split vanishes exactly in
/// the limit because every exponent of the regulator parameter in the
/// surviving series is negative, so no subtraction is performed here.
pub fn b_brackets(
    potential: &MiePotential,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    let n = rational_from_f64(potential.n()).ok_or_else(|| {
        Error::Domain(format!(
            "n = {} has no small rational representation",
            potential.n()
        ))
    })?;
    let m = rational_from_f64(potential.m()).ok_or_else(|| {
        Error::Domain(format!(
            "m = {} has no small rational representation",
            potential.m()
        ))
    })?;
    let series = j_bracket_series(n, m);
    let enumeration = enumerate_basis_series(&series);
    let surviving = enumeration
        .basis
        .iter()
        .find(|basis| basis.is_real())
        .ok_or_else(|| Error::Domain("no real basis series survived".into()))?;

    let mut params = BTreeMap::new();
    params.insert(PARAM_INV_T_STAR.to_owned(), 1.0 / temperature.t_star());
    params.insert(PARAM_SIGMA.to_owned(), potential.sigma());
    let eval = brackets::evaluate_basis_series(surviving, &params, tolerance, TERM_BUDGET)?;

    let sigma3 = potential.sigma().powi(3);
    let scale = -2.0 * std::f64::consts::PI;
    Ok(VirialResult::new(
        scale * eval.value / sigma3,
        Method::Brackets,
        eval.terms_used,
        scale.abs() * eval.last_term_magnitude / sigma3,
    ))
}

/// B by the quadrature oracle, packaged as a [`VirialResult`].
pub fn b_quadrature(
    potential: &MiePotential,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    check_tolerance(tolerance)?;
    // the quadrature is the looser party in cross-checks; 1e-11 relative is
    // comfortably below the 1e-8 agreement bound while staying fast
    let report = oracle::quadrature_b(potential, temperature, tolerance.max(1e-14), 1e-11)?;
    let sigma3 = potential.sigma().powi(3);
    Ok(VirialResult::new(
        report.value / sigma3,
        Method::Quadrature,
        report.evaluations,
        report.abs_error_estimate / sigma3,
    ))
}

/// Exact methods applicable to an exponent pair, in canonical order.
/// Asymptotic methods are excluded: they are approximations by construction
/// and must be requested explicitly.
pub fn applicable_methods(n: f64, m: f64) -> Vec<Method> {
    let mut methods = vec![Method::GeneralSeries];
    if close(n, 2.0 * m) {
        methods.push(Method::KummerN2M);
    }
    if close(n, 12.0) && close(m, 6.0) {
        methods.push(Method::LennardJones1F1);
        methods.push(Method::LennardJonesBessel);
    }
    if close(n, 9.0) && close(m, 6.0) {
        methods.push(Method::NineSix);
    }
    if close(n, 8.0) && close(m, 4.0) {
        methods.push(Method::Explicit84);
    }
    if close(n, 10.0) && close(m, 4.0) {
        methods.push(Method::Explicit104);
    }
    methods.push(Method::Quadrature);
    methods.push(Method::Brackets);
    methods
}

/// Evaluates one method at one temperature. `LowTAsymptotic` uses the
/// order-2 truncation.
pub fn evaluate_method(
    method: Method,
    potential: &MiePotential,
    temperature: ReducedTemperature,
    tolerance: f64,
) -> Result<VirialResult> {
    let sigma = potential.sigma();
    match method {
        Method::GeneralSeries => b_general_series(potential, temperature, tolerance),
        Method::KummerN2M => b_kummer_n2m(potential.m(), sigma, temperature, tolerance),
        Method::LennardJones1F1 => b_lj_1f1(sigma, temperature, tolerance),
        Method::LennardJonesBessel => {
            b_lj_bessel(sigma, potential.kt_over_eps(temperature), tolerance)
        }
        Method::NineSix => b_nine_six(sigma, temperature, tolerance),
        Method::Explicit84 => {
            b_explicit_84_104(ExplicitCase::EightFour, sigma, temperature, tolerance)
        }
        Method::Explicit104 => {
            b_explicit_84_104(ExplicitCase::TenFour, sigma, temperature, tolerance)
        }
        Method::LowTAsymptotic => {
            b_low_t_asymptotic(potential, potential.kt_over_eps(temperature), 2)
        }
        Method::HighTLeading => b_high_t_leading(potential, temperature),
        Method::Quadrature => b_quadrature(potential, temperature, tolerance),
        Method::Brackets => b_brackets(potential, temperature, tolerance),
    }
}

/// One bisection step record: the bracketing interval after the step.
pub type BracketHistory = Vec<(f64, f64)>;

/// Boyle temperature: the T* at which B changes sign, found by bracketing a
/// sign change of the general series on a geometric grid and bisecting.
/// The returned root satisfies |B*| <= 1e-10 in the reduced convention.
pub fn boyle_temperature(potential: &MiePotential, tolerance: f64) -> Result<f64> {
    boyle_temperature_with_history(potential, tolerance).map(|(root, _)| root)
}

/// As [`boyle_temperature`], also returning the bracket history.
pub fn boyle_temperature_with_history(
    potential: &MiePotential,
    tolerance: f64,
) -> Result<(f64, BracketHistory)> {
    if !(tolerance > 0.0 && tolerance < 1.0) {
        return Err(Error::Domain(format!(
            "root tolerance must be in (0, 1), got {tolerance}"
        )));
    }
    let b_reduced = |t_star: f64| -> Result<f64> {
        Ok(
            b_general_series(potential, ReducedTemperature::new(t_star)?, 1e-14)?
                .b_reduced,
        )
    };

    // scan a geometric grid for a sign change; widen once before giving up
    let mut bracket = None;
    for (lo_bound, hi_bound, points) in [(1e-2, 1e3, 51), (1e-4, 1e5, 91)] {
        let ratio = (hi_bound / lo_bound as f64).powf(1.0 / (points - 1) as f64);
        let mut t_prev = lo_bound;
        let mut b_prev = b_reduced(t_prev)?;
        for i in 1..points {
            let t_next = lo_bound * ratio.powi(i);
            let b_next = b_reduced(t_next)?;
            if b_prev.signum() != b_next.signum() {
                bracket = Some((t_prev, b_prev, t_next));
                break;
            }
            t_prev = t_next;
            b_prev = b_next;
        }
        if bracket.is_some() {
            break;
        }
    }
    let (mut lo, mut b_lo, mut hi) = bracket.ok_or(Error::RootBracketNotFound {
        lo: 1e-4,
        hi: 1e5,
    })?;

    let mut history = vec![(lo, hi)];
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let b_mid = b_reduced(mid)?;
        if b_mid.signum() == b_lo.signum() {
            lo = mid;
            b_lo = b_mid;
        } else {
            hi = mid;
        }
        history.push((lo, hi));
        if hi - lo <= tolerance * mid && b_mid.abs() <= 1e-10 {
            return Ok((mid, history));
        }
    }
    // bisection contracts the interval ~1e-60 in 200 steps, far below any
    // admissible tolerance
    unreachable!("bisection failed to terminate");
}
