//! Independent root finder used to verify containment disks.
//!
//! All roots are refined simultaneously (Aberth–Ehrlich by default,
//! Weierstrass/Durand–Kerner selectable). Each sweep is computed from the
//! previous sweep's approximations only, so results do not depend on update
//! order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::{cauchy_bound, Disk, Polynomial, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[default]
    Aberth,
    Weierstrass,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    /// Stop once every backward-error residual is at most this.
    pub tol: f64,
    pub max_iter: usize,
    pub method: Method,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            tol: 1e-12,
            max_iter: 500,
            method: Method::Aberth,
        }
    }
}

/// Approximate roots with multiplicity, sorted by modulus then argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    #[serde(serialize_with = "ser_pairs")]
    pub roots: Vec<C64>,
    /// `|p(z)| / Σ |a_j| |z|^j` per root.
    pub residuals: Vec<f64>,
    pub converged: bool,
}

fn ser_pairs<S: serde::Serializer>(v: &[C64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Backward-error residual of `z` as a root of `p`.
pub fn backward_residual(p: &Polynomial, z: C64) -> f64 {
    let scale = p.eval_abs(z);
    if scale == 0.0 {
        0.0
    } else {
        p.eval(z).norm() / scale
    }
}

pub fn roots(p: &Polynomial, tol: f64, max_iter: usize) -> Result<RootSet> {
    roots_with(
        p,
        &RootConfig {
            tol,
            max_iter,
            ..RootConfig::default()
        },
    )
}

pub fn roots_with(p: &Polynomial, cfg: &RootConfig) -> Result<RootSet> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::Degree { got: 0, need: 1 });
    }

    // exact zero roots
    let zeros = p.coeffs().iter().take_while(|c| c.norm() == 0.0).count();
    let max = p.max_modulus();
    let reduced = Polynomial::new(p.coeffs()[zeros..].iter().map(|&c| c / max).collect())?;

    let mut found = vec![C64::new(0.0, 0.0); zeros];
    let mut converged = true;
    if reduced.degree() > 0 {
        let (z, ok) = iterate(&reduced, cfg);
        found.extend(z);
        converged = ok;
    }

    let mut pairs: Vec<(C64, f64)> = found.into_iter().map(|z| (z, backward_residual(p, z))).collect();
    pairs.sort_by(|a, b| a.0.norm().total_cmp(&b.0.norm()).then(a.0.arg().total_cmp(&b.0.arg())));
    let residuals: Vec<f64> = pairs.iter().map(|x| x.1).collect();
    let converged = converged && residuals.iter().all(|&r| r <= cfg.tol);
    Ok(RootSet {
        roots: pairs.into_iter().map(|x| x.0).collect(),
        residuals,
        converged,
    })
}

/// Root sets for many polynomials; order matches the input.
pub fn roots_many(polys: &[Polynomial], cfg: &RootConfig, exec: Execution) -> Vec<Result<RootSet>> {
    exec.map(polys, |p| roots_with(p, cfg))
}

fn initial_guesses(p: &Polynomial) -> Vec<C64> {
    let n = p.degree();
    let mut r = (p.coeffs()[0].norm() / p.leading().norm()).powf(1.0 / n as f64);
    if !(r > 0.0 && r.is_finite()) {
        r = 0.5 * cauchy_bound(p).unwrap_or(1.0);
    }
    (0..n)
        .map(|j| C64::from_polar(r, std::f64::consts::TAU * j as f64 / n as f64 + 0.4))
        .collect()
}

fn iterate(p: &Polynomial, cfg: &RootConfig) -> (Vec<C64>, bool) {
    let n = p.degree();
    let lead = p.leading();
    let mut z = initial_guesses(p);
    let all_small = |z: &[C64]| z.iter().all(|&x| backward_residual(p, x) <= cfg.tol);
    if all_small(&z) {
        return (z, true);
    }
    for _ in 0..cfg.max_iter {
        let prev = z.clone();
        for i in 0..n {
            let zi = prev[i];
            let (v, dv) = p.eval_with_derivative(zi);
            if v.norm() == 0.0 {
                continue;
            }
            let step = match cfg.method {
                Method::Aberth => {
                    let newton = v / dv;
                    let repulsion: C64 = (0..n).filter(|&j| j != i).map(|j| (zi - prev[j]).inv()).sum();
                    newton / (C64::new(1.0, 0.0) - newton * repulsion)
                }
                Method::Weierstrass => {
                    let denom: C64 = (0..n).filter(|&j| j != i).fold(lead, |acc, j| acc * (zi - prev[j]));
                    v / denom
                }
            };
            if step.re.is_finite() && step.im.is_finite() {
                z[i] = zi - step;
            } else {
                // coincident approximations or a critical point: nudge apart
                z[i] = zi + C64::from_polar(1e-8 * (1.0 + zi.norm()), 0.7 + i as f64);
            }
        }
        if all_small(&z) {
            return (z, true);
        }
    }
    (z, false)
}

/// `(ok, max_i |z_i - center| - radius)`; `ok` when that maximum is at most `tol`.
pub fn verify_containment(rs: &RootSet, d: &Disk, tol: f64) -> Result<(bool, f64)> {
    if !rs.converged {
        return Err(Error::Unconverged);
    }
    let worst = rs
        .roots
        .iter()
        .map(|&z| (z - d.center).norm() - d.radius)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((worst <= tol, worst))
}

/// `max_i |z_i| / enclosing_radius(d)`; at most 1 for a sound bound.
pub fn tightness(rs: &RootSet, d: &Disk) -> Result<f64> {
    if !rs.converged {
        return Err(Error::Unconverged);
    }
    let enc = d.enclosing_radius();
    let top = rs.max_modulus();
    if enc == 0.0 {
        return if top == 0.0 { Ok(0.0) } else { Err(Error::ZeroEnclosing) };
    }
    Ok(top / enc)
}

/// Largest pairing distance under the assignment of `a` to `b` that
/// minimizes the total distance. `None` when the lengths differ.
///
/// Exhaustive over subsets, so intended for at most ~16 roots.
pub fn match_roots(a: &[C64], b: &[C64]) -> Option<f64> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    if n == 0 {
        return Some(0.0);
    }
    assert!(n <= 20, "exhaustive matching is limited to 20 roots");
    let full = 1usize << n;
    // cost[mask]: best (total, max) assigning a[0..popcount(mask)] to the b's in mask
    let mut cost = vec![(f64::INFINITY, 0.0f64); full];
    cost[0] = (0.0, 0.0);
    for mask in 0..full {
        let (total, worst) = cost[mask];
        if !total.is_finite() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == n {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if mask & (1 << j) != 0 {
                continue;
            }
            let d = (a[i] - bj).norm();
            let next = mask | (1 << j);
            if total + d < cost[next].0 {
                cost[next] = (total + d, worst.max(d));
            }
        }
    }
    Some(cost[full - 1].1)
}
