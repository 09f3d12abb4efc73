//! The Mie (n, m) pair potential and its reduced-temperature convention.
//!
//! u(r) = ε A [(σ/r)^n − (σ/r)^m] with n > m > 3 and the prefactor
//! A = (n/(n−m)) (n/m)^(m/(n−m)) chosen so the well depth is exactly −ε.
//! Temperatures cross module boundaries only as the dimensionless ratio
//! kT/ε or as the reduced temperature T* with 1/T* = Aε/kT; Boltzmann's
//! constant never appears numerically.

use crate::error::{Error, Result};

/// A Mie potential: repulsive exponent n, attractive exponent m, particle
/// size sigma and well depth epsilon. Exponents need not be integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiePotential {
    n: f64,
    m: f64,
    sigma: f64,
    epsilon_depth: f64,
}

/// Dimensionless reduced temperature T*.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedTemperature {
    t_star: f64,
}

impl ReducedTemperature {
    pub fn new(t_star: f64) -> Result<Self> {
        if !(t_star > 0.0) {
            return Err(Error::Domain(format!(
                "reduced temperature must be positive, got {t_star}"
            )));
        }
        Ok(Self { t_star })
    }

    pub fn t_star(&self) -> f64 {
        self.t_star
    }
}

impl MiePotential {
    /// Builds the potential, rejecting exponents outside n > m > 3 (the
    /// condition for the virial integral to converge) and non-positive
    /// sigma or epsilon.
    pub fn new(n: f64, m: f64, sigma: f64, epsilon_depth: f64) -> Result<Self> {
        if !(n > m && m > 3.0) {
            return Err(Error::Domain(format!(
                "Mie exponents must satisfy n > m > 3, got n = {n}, m = {m}"
            )));
        }
        if !(sigma > 0.0) {
            return Err(Error::Domain(format!("sigma must be positive, got {sigma}")));
        }
        if !(epsilon_depth > 0.0) {
            return Err(Error::Domain(format!(
                "epsilon must be positive, got {epsilon_depth}"
            )));
        }
        Ok(Self {
            n,
            m,
            sigma,
            epsilon_depth,
        })
    }

    /// Lennard-Jones (12, 6) with the given size and depth.
    pub fn lennard_jones(sigma: f64, epsilon_depth: f64) -> Result<Self> {
        Self::new(12.0, 6.0, sigma, epsilon_depth)
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn epsilon_depth(&self) -> f64 {
        self.epsilon_depth
    }

    /// The prefactor A = (n/(n−m)) (n/m)^(m/(n−m)).
    pub fn prefactor(&self) -> f64 {
        let (n, m) = (self.n, self.m);
        (n / (n - m)) * (n / m).powf(m / (n - m))
    }

    /// Pair energy u(r) in units of ε: A [(σ/r)^n − (σ/r)^m].
    pub fn potential_energy(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("separation must be positive, got {r}")));
        }
        let s = self.sigma / r;
        Ok(self.prefactor() * (s.powf(self.n) - s.powf(self.m)))
    }

    /// Location of the potential minimum, r_min = σ (n/m)^(1/(n−m)).
    pub fn r_min(&self) -> f64 {
        self.sigma * (self.n / self.m).powf(1.0 / (self.n - self.m))
    }

    /// Converts a physical temperature ratio kT/ε to T* = (kT/ε)/A.
    pub fn reduced_temperature(&self, kt_over_eps: f64) -> Result<ReducedTemperature> {
        if !(kt_over_eps > 0.0) {
            return Err(Error::Domain(format!(
                "kT/epsilon must be positive, got {kt_over_eps}"
            )));
        }
        ReducedTemperature::new(kt_over_eps / self.prefactor())
    }

    /// The inverse conversion, kT/ε = A T*.
    pub fn kt_over_eps(&self, t: ReducedTemperature) -> f64 {
        self.prefactor() * t.t_star()
    }
}
