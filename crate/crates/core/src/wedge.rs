//! The argument-wedge condition `|arg a_j - β| <= α <= π/2`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, C64};

/// Tolerance for angular comparisons, in radians.
pub const ANGLE_TOL: f64 = 1e-12;

/// A sector of half-angle `alpha` around the axis `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wedge {
    /// Axis, normalized to `(-π, π]`.
    pub beta: f64,
    /// Half-angle in `[0, π/2]`.
    pub alpha: f64,
}

impl Wedge {
    pub fn new(beta: f64, alpha: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2 + ANGLE_TOL).contains(&alpha) || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "wedge needs finite beta and 0 <= alpha <= pi/2, got beta = {beta}, alpha = {alpha}"
            )));
        }
        Ok(Wedge {
            beta: normalize_angle(beta),
            alpha: alpha.min(FRAC_PI_2),
        })
    }

    /// Whether `z` lies in the wedge. Zero is in every wedge.
    pub fn covers(&self, z: C64, tol: f64) -> bool {
        z == C64::new(0.0, 0.0) || angular_distance(arg(z), self.beta) <= self.alpha + tol
    }
}

/// Maps an angle into `(-π, π]`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(TAU);
    if t > PI {
        t -= TAU;
    }
    t
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    normalize_angle(a - b).abs()
}

/// Argument in `(-π, π]`; negative reals with a `-0.0` imaginary part map to `π`.
fn arg(z: C64) -> f64 {
    let t = z.arg();
    if t == -PI {
        PI
    } else {
        t
    }
}

/// Smallest arc covering the arguments of the nonzero entries of `coeffs`,
/// returned as `(axis, half-angle)` with no upper limit on the half-angle.
///
/// The arc is the complement of the largest circular gap between sorted
/// arguments. Equal largest gaps (within [`ANGLE_TOL`]) resolve to the arc
/// whose axis is closest to 0.
pub fn covering_arc(coeffs: &[C64]) -> Result<(f64, f64)> {
    let mut args: Vec<f64> = coeffs.iter().filter(|z| z.norm() > 0.0).map(|&z| arg(z)).collect();
    if args.is_empty() {
        return Err(Error::AllZero);
    }
    args.sort_by(f64::total_cmp);
    args.dedup();
    let len = args.len();
    if len == 1 {
        return Ok((args[0], 0.0));
    }

    // gap i runs from args[i] forward to args[i + 1]; the last one wraps.
    let gap = |i: usize| {
        if i + 1 < len {
            args[i + 1] - args[i]
        } else {
            args[0] + TAU - args[len - 1]
        }
    };
    let largest = (0..len).map(gap).fold(0.0, f64::max);

    let mut best: Option<(f64, f64)> = None;
    for i in (0..len).filter(|&i| gap(i) >= largest - ANGLE_TOL) {
        let (start, width) = if i + 1 == len {
            (args[0], args[len - 1] - args[0])
        } else {
            (args[i + 1], args[i] + TAU - args[i + 1])
        };
        let half = width / 2.0;
        let axis = normalize_angle(start + half);
        let better = match best {
            None => true,
            Some((b, _)) => axis.abs() < b.abs() - ANGLE_TOL,
        };
        if better {
            best = Some((axis, half));
        }
    }
    Ok(best.expect("at least one gap is the largest"))
}

/// Minimal wedge covering the nonzero coefficients of `p`; fails with
/// [`Error::Infeasible`] when the required half-angle exceeds `π/2`.
pub fn fit_wedge(p: &Polynomial) -> Result<Wedge> {
    fit_wedge_coeffs(p.coeffs())
}

pub fn fit_wedge_coeffs(coeffs: &[C64]) -> Result<Wedge> {
    let (beta, alpha) = covering_arc(coeffs)?;
    if alpha > FRAC_PI_2 + ANGLE_TOL {
        return Err(Error::Infeasible(format!(
            "coefficient arguments need a wedge of half-angle {alpha:.6} > pi/2"
        )));
    }
    Wedge::new(beta, alpha)
}

/// Majorant of `|t1 t2 a_j + (t1 - t2) a_{j-1} - a_{j-2}|` for coefficients in
/// a wedge of half-angle `alpha`, in terms of the moduli
/// `m_j, m_jm1, m_jm2`.
pub fn lemma21_rhs(t1: f64, t2: f64, m_j: f64, m_jm1: f64, m_jm2: f64, alpha: f64) -> Result<f64> {
    if !(t1 > t2 && t2 >= 0.0 && t1.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need t1 > t2 >= 0, got t1 = {t1}, t2 = {t2}"
        )));
    }
    if !(m_j >= 0.0 && m_jm1 >= 0.0 && m_jm2 >= 0.0) {
        return Err(Error::InvalidParameter("moduli must be nonnegative".into()));
    }
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("need 0 <= alpha <= pi/2, got {alpha}")));
    }
    let lead = t1 * t2 * m_j + (t1 - t2) * m_jm1;
    Ok((lead - m_jm2).abs() * alpha.cos() + (lead + m_jm2) * alpha.sin())
}
