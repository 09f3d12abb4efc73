//! A working method-of-brackets engine over multi-index bracket series with
//! affine exponents.
//!
//! A bracket series is `sum_{n1..nk} phi_{n1..nk} C(n1..nk) <b_1> ... <b_r>`
//! where each bracket argument `b` is affine in the indices, `phi_n` is the
//! indicator (-1)^n / n!, and the coefficient C is restricted to products of
//! powers of named parameters with affine exponents together with (-1) raised
//! to an affine exponent. Choosing free indices and solving the brackets for
//! the rest (exactly, over the rationals) produces basis series; a basis
//! series whose residual sign exponent can take non-integer values is not
//! real and is flagged instead of being summed.
//!
//! The engine is exercised on the virial integrand's double series, where it
//! mechanically reproduces the general temperature series for B(T*) and
//! discards the complex branch.

mod affine;

pub use affine::{
    is_nonpositive_integer_rational, rat, rational_from_f64, rational_to_f64, AffineForm, Rational,
};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::specfun::{log_gamma, SeriesEvaluation};

/// Parameter name for 1/T* in the virial bracket series.
pub const PARAM_INV_T_STAR: &str = "inv_t_star";
/// Parameter name for sigma in the virial bracket series.
pub const PARAM_SIGMA: &str = "sigma";

/// A multi-index bracket series.
#[derive(Debug, Clone)]
pub struct BracketSeries {
    indices: Vec<String>,
    sign_exponent: AffineForm,
    parameter_powers: BTreeMap<String, AffineForm>,
    brackets: Vec<AffineForm>,
}

impl BracketSeries {
    /// Builds a series, enforcing that there are at most as many brackets as
    /// indices and that every affine form only mentions declared indices.
    pub fn new(
        indices: Vec<String>,
        sign_exponent: AffineForm,
        parameter_powers: BTreeMap<String, AffineForm>,
        brackets: Vec<AffineForm>,
    ) -> Result<Self> {
        if brackets.len() > indices.len() {
            return Err(Error::Domain(format!(
                "{} brackets over {} indices",
                brackets.len(),
                indices.len()
            )));
        }
        for i in 0..indices.len() {
            if indices[i + 1..].contains(&indices[i]) {
                return Err(Error::Domain(format!("duplicate index {}", indices[i])));
            }
        }
        let known = |form: &AffineForm| -> Result<()> {
            for name in form.index_names() {
                if !indices.iter().any(|i| i == name) {
                    return Err(Error::Domain(format!("undeclared index {name}")));
                }
            }
            Ok(())
        };
        known(&sign_exponent)?;
        for form in parameter_powers.values() {
            known(form)?;
        }
        for form in &brackets {
            known(form)?;
        }
        Ok(Self {
            indices,
            sign_exponent,
            parameter_powers,
            brackets,
        })
    }

    pub fn indices(&self) -> &[String] {
        &self.indices
    }

    pub fn brackets(&self) -> &[AffineForm] {
        &self.brackets
    }

    pub fn sign_exponent(&self) -> &AffineForm {
        &self.sign_exponent
    }

    pub fn parameter_powers(&self) -> &BTreeMap<String, AffineForm> {
        &self.parameter_powers
    }
}

impl fmt::Display for BracketSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum_{{{}}} phi", self.indices.join(","))?;
        if !(self.sign_exponent.is_constant() && self.sign_exponent.constant_part().is_zero()) {
            write!(f, " (-1)^({})", self.sign_exponent)?;
        }
        for (name, power) in &self.parameter_powers {
            write!(f, " {name}^({power})")?;
        }
        for bracket in &self.brackets {
            write!(f, " <{bracket}>")?;
        }
        Ok(())
    }
}

/// One basis series: the exact solution of the brackets for one choice of
/// free indices, ready for numeric summation over the free index.
#[derive(Debug, Clone)]
pub struct BasisSeries {
    free_indices: Vec<String>,
    solved_indices: BTreeMap<String, AffineForm>,
    determinant_abs: Rational,
    gamma_arguments: Vec<AffineForm>,
    sign_exponent: AffineForm,
    parameter_powers: BTreeMap<String, AffineForm>,
    is_real: bool,
}

impl BasisSeries {
    pub fn free_indices(&self) -> &[String] {
        &self.free_indices
    }

    pub fn solved_indices(&self) -> &BTreeMap<String, AffineForm> {
        &self.solved_indices
    }

    pub fn determinant_abs(&self) -> Rational {
        self.determinant_abs
    }

    /// Arguments of the gamma factors, one per solved index, as affine forms
    /// in the free indices.
    pub fn gamma_arguments(&self) -> &[AffineForm] {
        &self.gamma_arguments
    }

    pub fn sign_exponent(&self) -> &AffineForm {
        &self.sign_exponent
    }

    pub fn parameter_powers(&self) -> &BTreeMap<String, AffineForm> {
        &self.parameter_powers
    }

    /// False when the sign exponent can take non-integer values over the
    /// free indices, so the series is not real and must be discarded.
    pub fn is_real(&self) -> bool {
        self.is_real
    }
}

/// Result of enumerating all free-index choices: the solvable ones, plus a
/// record of the choices skipped because their matrix was singular.
#[derive(Debug, Clone, Default)]
pub struct Enumeration {
    pub basis: Vec<BasisSeries>,
    pub skipped_singular: Vec<Vec<String>>,
}

/// Applies the multidimensional bracket rule for every choice of free
/// indices (as many free indices as `indices - brackets`). Each solvable
/// choice yields a [`BasisSeries`]; singular choices are recorded and
/// skipped rather than treated as fatal.
pub fn enumerate_basis_series(series: &BracketSeries) -> Enumeration {
    let index_count = series.indices.len();
    let bracket_count = series.brackets.len();
    let free_count = index_count - bracket_count;

    let mut out = Enumeration::default();
    for free_choice in combinations(index_count, free_count) {
        let free: Vec<String> = free_choice
            .iter()
            .map(|&i| series.indices[i].clone())
            .collect();
        let solved: Vec<String> = series
            .indices
            .iter()
            .filter(|name| !free.contains(name))
            .cloned()
            .collect();
        match solve_brackets(series, &free, &solved) {
            Some((solution, determinant_abs)) => {
                let gamma_arguments = solved
                    .iter()
                    .map(|name| solution[name].negate())
                    .collect();
                let sign_exponent = series.sign_exponent.substitute(&solution);
                let parameter_powers = series
                    .parameter_powers
                    .iter()
                    .map(|(p, form)| (p.clone(), form.substitute(&solution)))
                    .collect();
                let is_real = sign_exponent.is_integer_valued();
                out.basis.push(BasisSeries {
                    free_indices: free,
                    solved_indices: solution,
                    determinant_abs,
                    gamma_arguments,
                    sign_exponent,
                    parameter_powers,
                    is_real,
                });
            }
            None => out.skipped_singular.push(free),
        }
    }
    out
}

/// All `choose`-element subsets of 0..n in lexicographic order.
fn combinations(n: usize, choose: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(choose);
    fn recurse(n: usize, choose: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == choose {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            recurse(n, choose, i + 1, current, out);
            current.pop();
        }
    }
    recurse(n, choose, 0, &mut current, &mut out);
    out
}

/// Solves the bracket system for the `solved` indices exactly, returning the
/// solution forms (affine in the free indices) and |det| of the system
/// matrix, or None if the matrix is singular.
fn solve_brackets(
    series: &BracketSeries,
    free: &[String],
    solved: &[String],
) -> Option<(BTreeMap<String, AffineForm>, Rational)> {
    let r = solved.len();
    debug_assert_eq!(r, series.brackets.len());
    if r == 0 {
        return Some((BTreeMap::new(), Rational::from_integer(1)));
    }

    // matrix over the solved indices; rhs keeps the free-index part, moved
    // to the other side of `bracket = 0`
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(r);
    let mut rhs: Vec<AffineForm> = Vec::with_capacity(r);
    for bracket in &series.brackets {
        matrix.push(solved.iter().map(|s| bracket.coefficient(s)).collect());
        let mut residue = AffineForm::constant(bracket.constant_part());
        for f in free {
            residue = residue.plus_term(f, bracket.coefficient(f));
        }
        rhs.push(residue.negate());
    }

    // exact Gaussian elimination
    let mut determinant = Rational::from_integer(1);
    for col in 0..r {
        let pivot_row = (col..r).find(|&row| !matrix[row][col].is_zero())?;
        if pivot_row != col {
            matrix.swap(pivot_row, col);
            rhs.swap(pivot_row, col);
            determinant = -determinant;
        }
        let pivot = matrix[col][col];
        determinant *= pivot;
        for row in col + 1..r {
            let factor = matrix[row][col] / pivot;
            if factor.is_zero() {
                continue;
            }
            for c in col..r {
                let sub = matrix[col][c] * factor;
                matrix[row][c] -= sub;
            }
            rhs[row] = rhs[row].add(&rhs[col].scale(-factor));
        }
    }

    // back substitution
    let mut solution: Vec<AffineForm> = vec![AffineForm::zero(); r];
    for col in (0..r).rev() {
        let mut value = rhs[col].clone();
        for c in col + 1..r {
            value = value.add(&solution[c].scale(-matrix[col][c]));
        }
        solution[col] = value.scale(Rational::from_integer(1) / matrix[col][col]);
    }

    let map = solved
        .iter()
        .cloned()
        .zip(solution)
        .collect::<BTreeMap<_, _>>();
    Some((map, determinant.abs()))
}

/// One summand of a basis series with a single free index, at free-index
/// value `k`. This is the quantity the series sums over k = 0, 1, 2, ...
///
/// The magnitude is assembled in log space so large gamma factors and deep
/// factorials cannot overflow on the way to a finite term.
pub fn basis_term(basis: &BasisSeries, params: &BTreeMap<String, f64>, k: u32) -> Result<f64> {
    if !basis.is_real {
        return Err(Error::NonRealBasisSeries {
            sign_exponent: basis.sign_exponent.to_string(),
        });
    }
    let free = match basis.free_indices.len() {
        0 => None,
        1 => Some(basis.free_indices[0].as_str()),
        n => {
            return Err(Error::Domain(format!(
                "evaluation supports at most one free index, found {n}"
            )))
        }
    };
    let eval = |form: &AffineForm| -> Rational {
        match free {
            Some(name) => form.eval_single(name, k as i64),
            None => form.eval_constant(),
        }
    };

    // phase: (-1)^k from the free index's phi, times (-1)^(sign exponent)
    let sign_value = eval(&basis.sign_exponent);
    debug_assert!(sign_value.is_integer());
    let mut parity = (sign_value.to_integer() + k as i64).rem_euclid(2);
    // 1/k! from the free index's phi
    let mut log_magnitude = if free.is_some() {
        -log_gamma(k as f64 + 1.0)?
    } else {
        0.0
    };

    for argument_form in &basis.gamma_arguments {
        let argument = eval(argument_form);
        if is_nonpositive_integer_rational(argument) {
            return Err(Error::GammaPoleInSeries {
                k,
                argument: rational_to_f64(argument),
            });
        }
        let a = rational_to_f64(argument);
        if a > 0.0 {
            log_magnitude += log_gamma(a)?;
        } else {
            // reflection in log space; gamma(1-a) is positive here
            let s = sin_pi(a);
            log_magnitude += std::f64::consts::PI.ln() - s.abs().ln() - log_gamma(1.0 - a)?;
            if s < 0.0 {
                parity ^= 1;
            }
        }
    }

    for (name, power) in &basis.parameter_powers {
        let value = *params.get(name).ok_or_else(|| {
            Error::Domain(format!("missing value for parameter {name}"))
        })?;
        if !(value > 0.0) {
            return Err(Error::Domain(format!(
                "parameter {name} must be positive, got {value}"
            )));
        }
        log_magnitude += rational_to_f64(eval(power)) * value.ln();
    }

    log_magnitude -= rational_to_f64(basis.determinant_abs).ln();
    let sign = if parity == 0 { 1.0 } else { -1.0 };
    Ok(sign * log_magnitude.exp())
}

/// sin(pi x) with the argument reduced before multiplication by pi.
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

/// Sums a basis series with at most one free index over k = 0, 1, 2, ...,
/// stopping once two consecutive terms fall below
/// `tolerance * max(1, |partial sum|)`.
///
/// A gamma-factor pole at some k is a hard error: within the virial scope
/// the series is pole-free, so a pole means the engine was misused.
pub fn evaluate_basis_series(
    basis: &BasisSeries,
    params: &BTreeMap<String, f64>,
    tolerance: f64,
    term_budget: usize,
) -> Result<SeriesEvaluation> {
    if basis.free_indices.is_empty() {
        let value = basis_term(basis, params, 0)?;
        return Ok(SeriesEvaluation {
            value,
            terms_used: 1,
            last_term_magnitude: value.abs(),
            converged: true,
        });
    }

    let mut sum = 0.0_f64;
    let mut consecutive_small = 0;
    let mut last = f64::INFINITY;
    for k in 0..term_budget {
        let term = basis_term(basis, params, k as u32)?;
        sum += term;
        last = term.abs();
        if last <= tolerance * sum.abs().max(1.0) {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                return Ok(SeriesEvaluation {
                    value: sum,
                    terms_used: k + 1,
                    last_term_magnitude: last,
                    converged: true,
                });
            }
        } else {
            consecutive_small = 0;
        }
    }
    Err(Error::SeriesBudgetExhausted {
        budget: term_budget,
        last_term: last,
    })
}

/// The one-dimensional bracket rule: for a series with a single index and a
/// single bracket `<alpha n + beta>`, the assigned value is
/// `(1/|alpha|) C(n*) Gamma(-n*)` at the solution n* of the bracket.
pub fn rule1_value(series: &BracketSeries, params: &BTreeMap<String, f64>) -> Result<f64> {
    if series.indices.len() != 1 || series.brackets.len() != 1 {
        return Err(Error::Domain(format!(
            "rule 1 needs exactly one index and one bracket, got {} and {}",
            series.indices.len(),
            series.brackets.len()
        )));
    }
    let enumeration = enumerate_basis_series(series);
    let basis = enumeration
        .basis
        .first()
        .ok_or(Error::SingularBracketSystem)?;
    Ok(basis_term(basis, params, 0)?)
}

/// The bracket series of the virial integrand
/// `J = -2 pi Int exp(-(1/T*)[(sigma/r)^n - (sigma/r)^m]) r^2 dr`
/// (without the overall -2 pi): expanding both exponentials gives a double
/// series over indices l and j with coefficient
/// `(-1)^j (1/T*)^(l+j) sigma^(n l + m j)` and the single bracket
/// `<3 - n l - m j>`.
pub fn j_bracket_series(n: Rational, m: Rational) -> BracketSeries {
    let l = "l";
    let j = "j";
    let mut parameter_powers = BTreeMap::new();
    parameter_powers.insert(
        PARAM_INV_T_STAR.to_owned(),
        AffineForm::index(l).plus_term(j, rat(1, 1)),
    );
    parameter_powers.insert(
        PARAM_SIGMA.to_owned(),
        AffineForm::zero().plus_term(l, n).plus_term(j, m),
    );
    let bracket = AffineForm::constant(rat(3, 1))
        .plus_term(l, -n)
        .plus_term(j, -m);
    BracketSeries::new(
        vec![l.to_owned(), j.to_owned()],
        AffineForm::index(j),
        parameter_powers,
        vec![bracket],
    )
    .expect("J series construction is static")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;
    use approx::assert_relative_eq;

    fn no_params() -> BTreeMap<String, f64> {
        BTreeMap::new()
    }

    fn plain_series(bracket: AffineForm) -> BracketSeries {
        BracketSeries::new(
            vec!["n".to_owned()],
            AffineForm::zero(),
            BTreeMap::new(),
            vec![bracket],
        )
        .unwrap()
    }

    #[test]
    fn rule1_exponential_integral() {
        // Int_0^inf e^-x dx = sum phi_n <n+1>  ->  Gamma(1) = 1
        let series = plain_series(AffineForm::constant(rat(1, 1)).plus_term("n", rat(1, 1)));
        let value = rule1_value(&series, &no_params()).unwrap();
        assert_relative_eq!(value, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn rule1_gaussian_integral() {
        // Int_0^inf e^(-x^2) dx = sum phi_n <2n+1>  ->  (1/2) Gamma(1/2)
        let series = plain_series(AffineForm::constant(rat(1, 1)).plus_term("n", rat(2, 1)));
        let value = rule1_value(&series, &no_params()).unwrap();
        assert_relative_eq!(
            value,
            0.5 * std::f64::consts::PI.sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn rule1_gamma_integral_at_three() {
        // Int_0^inf x^(s-1) e^-x dx with s = 3: bracket <n + 3> -> Gamma(3) = 2
        let series = plain_series(AffineForm::constant(rat(3, 1)).plus_term("n", rat(1, 1)));
        let value = rule1_value(&series, &no_params()).unwrap();
        assert_relative_eq!(value, 2.0, max_relative = 1e-13);
    }

    #[test]
    fn rule1_pole_is_reported() {
        // bracket <n - 2>: n* = 2, value Gamma(-2) -> pole
        let series = plain_series(AffineForm::constant(rat(-2, 1)).plus_term("n", rat(1, 1)));
        assert!(matches!(
            rule1_value(&series, &no_params()),
            Err(Error::GammaPoleInSeries { .. })
        ));
    }

    #[test]
    fn rule1_singular_alpha_is_reported() {
        let series = plain_series(AffineForm::constant(rat(1, 1)));
        assert!(matches!(
            rule1_value(&series, &no_params()),
            Err(Error::SingularBracketSystem)
        ));
    }

    #[test]
    fn j_series_produces_two_basis_series() {
        let series = j_bracket_series(rat(12, 1), rat(6, 1));
        let enumeration = enumerate_basis_series(&series);
        assert_eq!(enumeration.basis.len(), 2);
        assert!(enumeration.skipped_singular.is_empty());

        // deterministic order: free {l} first, then free {j}
        let l_free = &enumeration.basis[0];
        let j_free = &enumeration.basis[1];
        assert_eq!(l_free.free_indices(), ["l".to_owned()]);
        assert_eq!(j_free.free_indices(), ["j".to_owned()]);

        // determinants are the solved-index coefficients m and n
        assert_eq!(l_free.determinant_abs(), rat(6, 1));
        assert_eq!(j_free.determinant_abs(), rat(12, 1));

        // the j-free branch has integer sign exponent, the l-free branch
        // carries the non-integer constant 3/m = 1/2
        assert!(j_free.is_real());
        assert!(!l_free.is_real());
        assert_eq!(l_free.sign_exponent().constant_part(), rat(1, 2));
        assert_eq!(l_free.sign_exponent().coefficient("l"), rat(-2, 1));
    }

    #[test]
    fn j_series_nine_six_realness() {
        let series = j_bracket_series(rat(9, 1), rat(6, 1));
        let enumeration = enumerate_basis_series(&series);
        let l_free = &enumeration.basis[0];
        let j_free = &enumeration.basis[1];
        // sign exponent of the l-free branch is 1/2 - (3/2) l: non-integer in
        // both the constant and the slope (m-n)k/m = -k/2
        assert!(!l_free.is_real());
        assert_eq!(l_free.sign_exponent().coefficient("l"), rat(-3, 2));
        assert!(j_free.is_real());
    }

    #[test]
    fn solved_forms_zero_out_the_brackets() {
        for (n, m) in [(rat(12, 1), rat(6, 1)), (rat(15, 2), rat(21, 5)), (rat(9, 1), rat(6, 1))] {
            let series = j_bracket_series(n, m);
            for basis in enumerate_basis_series(&series).basis {
                for bracket in series.brackets() {
                    let substituted = bracket.substitute(basis.solved_indices());
                    assert!(substituted.is_constant());
                    assert!(substituted.constant_part().is_zero());
                }
            }
        }
    }

    #[test]
    fn singular_two_bracket_choice_is_skipped() {
        // brackets <n1 + n2> and <2 n1 + 2 n2 + 1> have a singular matrix
        let series = BracketSeries::new(
            vec!["n1".to_owned(), "n2".to_owned()],
            AffineForm::zero(),
            BTreeMap::new(),
            vec![
                AffineForm::index("n1").plus_term("n2", rat(1, 1)),
                AffineForm::constant(rat(1, 1))
                    .plus_term("n1", rat(2, 1))
                    .plus_term("n2", rat(2, 1)),
            ],
        )
        .unwrap();
        let enumeration = enumerate_basis_series(&series);
        assert!(enumeration.basis.is_empty());
        assert_eq!(enumeration.skipped_singular, vec![Vec::<String>::new()]);
    }

    #[test]
    fn j_free_branch_matches_general_series_summand() {
        // term k of the surviving branch at (12,6), sigma = 1, T* = 1 must be
        // (1/n) Gamma((k m - 3)/n) / k!  (times T* and sigma powers, trivial here)
        let series = j_bracket_series(rat(12, 1), rat(6, 1));
        let enumeration = enumerate_basis_series(&series);
        let j_free = &enumeration.basis[1];
        let mut params = BTreeMap::new();
        params.insert(PARAM_INV_T_STAR.to_owned(), 1.0);
        params.insert(PARAM_SIGMA.to_owned(), 1.0);
        for k in 0..10u32 {
            let expected = gamma((k as f64 * 6.0 - 3.0) / 12.0).unwrap()
                / gamma(k as f64 + 1.0).unwrap()
                / 12.0;
            let term = basis_term(j_free, &params, k).unwrap();
            assert_relative_eq!(term, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn evaluating_non_real_branch_errors() {
        let series = j_bracket_series(rat(9, 1), rat(6, 1));
        let enumeration = enumerate_basis_series(&series);
        let l_free = &enumeration.basis[0];
        let mut params = BTreeMap::new();
        params.insert(PARAM_INV_T_STAR.to_owned(), 1.0);
        params.insert(PARAM_SIGMA.to_owned(), 1.0);
        assert!(matches!(
            evaluate_basis_series(l_free, &params, 1e-12, 1000),
            Err(Error::NonRealBasisSeries { .. })
        ));
    }

    #[test]
    fn missing_parameter_is_reported() {
        let series = j_bracket_series(rat(12, 1), rat(6, 1));
        let enumeration = enumerate_basis_series(&series);
        let j_free = &enumeration.basis[1];
        let err = evaluate_basis_series(j_free, &no_params(), 1e-12, 100).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn display_of_the_j_series_is_stable() {
        let series = j_bracket_series(rat(12, 1), rat(6, 1));
        assert_eq!(
            series.to_string(),
            "sum_{l,j} phi (-1)^(j) inv_t_star^(j + l) sigma^(6*j + 12*l) <3 - 6*j - 12*l>"
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            /// exact solve: substituting the solution back into the brackets
            /// yields the zero form, for random rational exponent pairs
            #[test]
            fn bracket_solve_exactness(
                n_num in 7i64..60,
                n_den in 1i64..5,
                m_excess_num in 1i64..20,
            ) {
                let n = rat(n_num, n_den);
                let m = n - rat(m_excess_num, 5);
                prop_assume!(m > rat(3, 1));
                let series = j_bracket_series(n, m);
                for basis in enumerate_basis_series(&series).basis {
                    for bracket in series.brackets() {
                        let substituted = bracket.substitute(basis.solved_indices());
                        prop_assert!(substituted.is_constant());
                        prop_assert!(substituted.constant_part().is_zero());
                    }
                }
            }

            /// the j-free branch is always real; the l-free branch is never
            /// real when (n-m)/m is not an integer
            #[test]
            fn realness_filter(
                n_num in 7i64..60,
                n_den in 1i64..5,
                m_excess_num in 1i64..20,
            ) {
                let n = rat(n_num, n_den);
                let m = n - rat(m_excess_num, 5);
                prop_assume!(m > rat(3, 1));
                let series = j_bracket_series(n, m);
                let enumeration = enumerate_basis_series(&series);
                let l_free = &enumeration.basis[0];
                let j_free = &enumeration.basis[1];
                prop_assert!(j_free.is_real());
                if !((n - m) / m).is_integer() {
                    prop_assert!(!l_free.is_real());
                }
            }
        }
    }
}
