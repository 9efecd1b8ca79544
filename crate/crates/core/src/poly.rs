//! Polynomial representation, evaluation and disk geometry.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// A polynomial `a_0 + a_1 z + ... + a_n z^n` with `a_n != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<C64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients. The leading
    /// coefficient must be nonzero.
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        Self::with_threshold(coeffs, 0.0)
    }

    /// Like [`Polynomial::new`], but rejects a leading coefficient whose
    /// modulus is at most `rel_threshold * max_j |a_j|`.
    pub fn with_threshold(coeffs: Vec<C64>, rel_threshold: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(i) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        if !(rel_threshold >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "leading-coefficient threshold must be nonnegative, got {rel_threshold}"
            )));
        }
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if max == 0.0 {
            return Err(Error::AllZero);
        }
        let lead = coeffs[coeffs.len() - 1].norm();
        if lead == 0.0 || lead <= rel_threshold * max {
            return Err(Error::ZeroLeading);
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// `a_j`, with zero padding for indices outside `0..=n`.
    pub fn coeff(&self, j: isize) -> C64 {
        if j < 0 {
            return C64::new(0.0, 0.0);
        }
        self.coeffs.get(j as usize).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> C64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm()).collect()
    }

    /// Real parts `α_j`.
    pub fn re_parts(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    /// Imaginary parts `β_j`.
    pub fn im_parts(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.im).collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Value and first derivative at `z`.
    pub fn eval_with_derivative(&self, z: C64) -> (C64, C64) {
        let mut p = C64::new(0.0, 0.0);
        let mut dp = C64::new(0.0, 0.0);
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// `Σ |a_j| |z|^j`, the scale against which a residual is a backward error.
    pub fn eval_abs(&self, z: C64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
    }

    /// Multiplies every coefficient by `factor` (which must be nonzero).
    pub fn scaled(&self, factor: C64) -> Result<Polynomial> {
        Polynomial::new(self.coeffs.iter().map(|&a| a * factor).collect())
    }
}

/// Cauchy's bound `1 + max_{j<n} |a_j / a_n|`.
pub fn cauchy_bound(p: &Polynomial) -> Result<f64> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::Degree { got: 0, need: 1 });
    }
    let lead = p.leading().norm();
    let max = p.coeffs()[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    Ok(1.0 + max / lead)
}

/// Coefficients of `(t1 - z)(t2 + z) P(z)`.
///
/// The coefficient of `z^ν` is `t1 t2 a_ν + (t1 - t2) a_{ν-1} - a_{ν-2}` for
/// `ν = 0..=n+2`, with `a_j = 0` outside `0..=n`.
pub fn multiply_enestrom_factors(p: &Polynomial, t1: f64, t2: f64) -> Result<Polynomial> {
    if !(t1 > 0.0 && t1.is_finite()) || !(t2 >= 0.0 && t2.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "factor construction needs t1 > 0 and t2 >= 0, got t1 = {t1}, t2 = {t2}"
        )));
    }
    let n = p.degree() as isize;
    let coeffs = (0..=n + 2)
        .map(|nu| p.coeff(nu) * (t1 * t2) + p.coeff(nu - 1) * (t1 - t2) - p.coeff(nu - 2))
        .collect();
    Polynomial::new(coeffs)
}

/// A closed disk `{z : |z - center| <= radius}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: C64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: C64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "disk radius must be finite and nonnegative, got {radius}"
            )));
        }
        Ok(Disk { center, radius })
    }

    pub fn origin(radius: f64) -> Result<Self> {
        Disk::new(C64::new(0.0, 0.0), radius)
    }

    /// Radius of the smallest origin-centered disk containing this one.
    pub fn enclosing_radius(&self) -> f64 {
        self.center.norm() + self.radius
    }

    pub fn contains(&self, z: C64, tol: f64) -> bool {
        (z - self.center).norm() <= self.radius + tol
    }
}

pub fn enclosing_radius(d: &Disk) -> f64 {
    d.enclosing_radius()
}
