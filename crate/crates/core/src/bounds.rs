//! Zero-containment disks.
//!
//! Each bound comes in two layers: a `*_radius` / `*_disk` function that
//! evaluates the closed-form expression for given parameters without looking
//! at hypotheses, and a `bound_*` function that checks the hypotheses first
//! and packages the result as a [`BoundReport`].
//!
//! A negative radius under satisfied hypotheses would contradict the
//! corresponding theorem; it is reported as [`Error::Anomaly`] and never
//! clamped.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Anomaly, Error, Result};
use crate::hypotheses::{self, HypothesisReport};
use crate::poly::{Disk, Polynomial, C64};
use crate::wedge::Wedge;

/// The bounds this crate evaluates, in tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Classical: positive nondecreasing real coefficients, unit disk.
    Ek,
    /// Real coefficients with `s_r >= 0` for all `r`: disk of radius `t1`.
    AzizReal,
    /// Wedge plus nonincreasing moduli toward `a_0`.
    GovilRahman,
    /// Wedge plus a `t`-scaled unimodal modulus chain.
    AzizT,
    /// Wedge plus a modulus condition sequence split at `k`.
    RsmComplex,
    /// Real and imaginary condition sequences split at `k` and `m`.
    RsmParts,
    /// Off-center refinement of `RsmComplex` (`n >= 3`, `k <= n - 3`).
    Thm17,
    /// `Thm17` at `t2 = 0`.
    Cor19,
    /// Off-center refinement of `RsmParts` (`k, m <= n - 1`).
    Thm110,
    /// `Thm110` restricted to real positive coefficients, radius as printed.
    Cor112,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Ek,
        Theorem::AzizReal,
        Theorem::GovilRahman,
        Theorem::AzizT,
        Theorem::RsmComplex,
        Theorem::RsmParts,
        Theorem::Thm17,
        Theorem::Cor19,
        Theorem::Thm110,
        Theorem::Cor112,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Ek => "ek",
            Theorem::AzizReal => "aziz_real",
            Theorem::GovilRahman => "govil_rahman",
            Theorem::AzizT => "aziz_t",
            Theorem::RsmComplex => "rsm_complex",
            Theorem::RsmParts => "rsm_parts",
            Theorem::Thm17 => "thm17",
            Theorem::Cor19 => "cor19",
            Theorem::Thm110 => "thm110",
            Theorem::Cor112 => "cor112",
        }
    }

    /// Whether the bound has free parameters to search over.
    pub fn is_parameterized(self) -> bool {
        !matches!(self, Theorem::Ek | Theorem::GovilRahman)
    }

    /// Single-parameter bounds (`t2` fixed at 0).
    pub fn is_single_parameter(self) -> bool {
        matches!(self, Theorem::AzizT | Theorem::Cor19)
    }

    /// Whether the hypotheses require `t1 > t2` rather than `t1 >= t2`.
    pub fn strict_t(self) -> bool {
        matches!(self, Theorem::AzizReal | Theorem::RsmComplex | Theorem::RsmParts)
    }

    fn uses_m(self) -> bool {
        matches!(self, Theorem::RsmParts | Theorem::Thm110)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown theorem '{s}'")))
    }
}

/// A containment disk together with the parameters and hypothesis check
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub wedge: Option<Wedge>,
    pub disk: Disk,
    pub hypothesis: HypothesisReport,
    pub enclosing: f64,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            theorem: Theorem,
            t1: Option<f64>,
            t2: Option<f64>,
            k: Option<usize>,
            m: Option<usize>,
            alpha: Option<f64>,
            beta: Option<f64>,
            center: [f64; 2],
            radius: f64,
            enclosing: f64,
            ok: bool,
        }
        Wire {
            theorem: self.theorem,
            t1: self.t1,
            t2: self.t2,
            k: self.k,
            m: self.m,
            alpha: self.wedge.map(|w| w.alpha),
            beta: self.wedge.map(|w| w.beta),
            center: [self.disk.center.re, self.disk.center.im],
            radius: self.disk.radius,
            enclosing: self.enclosing,
            ok: self.hypothesis.ok,
        }
        .serialize(serializer)
    }
}

/// `x / t^e`, switching to log-magnitude arithmetic when `t^e` leaves the
/// normal floating range.
fn div_pow(x: f64, t: f64, e: i32) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let pw = t.powi(e);
    if pw.is_normal() {
        let q = x / pw;
        if q.is_finite() {
            return q;
        }
    }
    x.signum() * (x.abs().ln() - e as f64 * t.ln()).exp()
}

fn at(v: &[f64], j: usize) -> f64 {
    v.get(j).copied().unwrap_or(0.0)
}

/// `(cos α + sin α) + (2 sin α / |a_n|) Σ_{ν=0..n} |a_ν|`.
pub fn govil_rahman_radius(p: &Polynomial, alpha: f64) -> f64 {
    let m = p.moduli();
    let an = p.leading().norm();
    let sum: f64 = m.iter().sum();
    (alpha.cos() + alpha.sin()) + 2.0 * alpha.sin() / an * sum
}

/// `t {(2 t^k |a_k| / (t^n |a_n|) - 1) cos α + sin α}
///  + 2 sin α Σ_{j=0..n} |a_j| / (|a_n| t^{n-j-1})`.
pub fn aziz_t_radius(p: &Polynomial, t: f64, k: usize, alpha: f64) -> f64 {
    let n = p.degree();
    let m = p.moduli();
    let an = m[n];
    let peak = 2.0 * div_pow(m[k], t, n as i32 - k as i32) / an;
    let tail: f64 = (0..=n).map(|j| div_pow(m[j], t, n as i32 - j as i32 - 1)).sum();
    t * ((peak - 1.0) * alpha.cos() + alpha.sin()) + 2.0 * alpha.sin() / an * tail
}

/// `t1 {((2|a_k| + 2 t2 |a_{k+1}|) / (t1^{n-k} |a_n|) - 1) cos α + sin α}
///  + (2 sin α / |a_n|) Σ_{j=0..n-1} |a_j| / t1^{n-j-1}`.
pub fn rsm_complex_radius(p: &Polynomial, t1: f64, t2: f64, k: usize, alpha: f64) -> f64 {
    let n = p.degree();
    let m = p.moduli();
    let an = m[n];
    let peak = div_pow(2.0 * m[k] + 2.0 * t2 * at(&m, k + 1), t1, n as i32 - k as i32) / an;
    let tail: f64 = (0..n).map(|j| div_pow(m[j], t1, n as i32 - j as i32 - 1)).sum();
    t1 * ((peak - 1.0) * alpha.cos() + alpha.sin()) + 2.0 * alpha.sin() / an * tail
}

/// `(t1 / |a_n|) {2 t1^{k-n} (α_k + t2 α_{k+1}) + 2 t1^{m-n} (β_m + t2 β_{m+1}) - (α_n + β_n)}`.
pub fn rsm_parts_radius(p: &Polynomial, t1: f64, t2: f64, k: usize, m: usize) -> f64 {
    let n = p.degree();
    let re = p.re_parts();
    let im = p.im_parts();
    let an = p.leading().norm();
    let real = 2.0 * div_pow(re[k] + t2 * at(&re, k + 1), t1, n as i32 - k as i32);
    let imag = 2.0 * div_pow(im[m] + t2 * at(&im, m + 1), t1, n as i32 - m as i32);
    t1 / an * (real + imag - (re[n] + im[n]))
}

/// Center `(t1 - t2) - a_{n-1}/a_n` and radius
/// `(2 t2 |a_{k+1}| + 2 |a_k|) / (|a_n| t1^{n-k-1}) cos α
///  + (2 sin α / |a_n|) Σ_{ν=0..n-2} |a_ν| / t1^{n-ν-1}
///  + (t2 + |a_{n-1}/a_n|)(sin α - cos α)`.
pub fn thm17_disk(p: &Polynomial, t1: f64, t2: f64, k: usize, alpha: f64) -> (C64, f64) {
    let n = p.degree();
    let m = p.moduli();
    let an = m[n];
    let ratio = p.coeff(n as isize - 1) / p.leading();
    let center = C64::new(t1 - t2, 0.0) - ratio;
    let (s, c) = alpha.sin_cos();
    let peak = div_pow(2.0 * t2 * at(&m, k + 1) + 2.0 * m[k], t1, n as i32 - k as i32 - 1) / an;
    let tail: f64 = (0..n.saturating_sub(1))
        .map(|nu| div_pow(m[nu], t1, (n - nu - 1) as i32))
        .sum();
    let radius = peak * c + 2.0 * s / an * tail + (t2 + ratio.norm()) * (s - c);
    (center, radius)
}

/// Center `-(α_{n-1} - (t1 - t2) α_n) / a_n` and radius
/// `2 (α_{k+1} t2 + α_k) t1^{k+1} / (|a_n| t1^n) + 2 (β_{m+1} t2 + β_m) t1^{m+1} / (|a_n| t1^n)
///  - (t2 α_n + t1 β_n + α_{n-1}) / |a_n|`.
pub fn thm110_disk(p: &Polynomial, t1: f64, t2: f64, k: usize, m: usize) -> (C64, f64) {
    let n = p.degree();
    let re = p.re_parts();
    let im = p.im_parts();
    let lead = p.leading();
    let an = lead.norm();
    let shift = at(&re, n - 1) - (t1 - t2) * re[n];
    let center = -C64::new(shift, 0.0) / lead;
    let real = 2.0 * div_pow(at(&re, k + 1) * t2 + re[k], t1, n as i32 - k as i32 - 1) / an;
    let imag = 2.0 * div_pow(at(&im, m + 1) * t2 + im[m], t1, n as i32 - m as i32 - 1) / an;
    let radius = real + imag - (t2 * re[n] + t1 * im[n] + at(&re, n - 1)) / an;
    (center, radius)
}

/// Center `(t1 - t2) - a_{n-1}/a_n` and radius
/// `t2 + a_{n-1}/a_n + (2 t2 a_{k+1} + 2 a_k) / (a_n t1^{n-k-1})`, for real
/// positive coefficients.
pub fn cor112_disk(p: &Polynomial, t1: f64, t2: f64, k: usize) -> (C64, f64) {
    let n = p.degree();
    let a = p.re_parts();
    let ratio = at(&a, n - 1) / a[n];
    let center = C64::new(t1 - t2 - ratio, 0.0);
    let radius = t2 + ratio + div_pow(2.0 * t2 * at(&a, k + 1) + 2.0 * a[k], t1, n as i32 - k as i32 - 1) / a[n];
    (center, radius)
}

/// Evaluates the disk of `theorem` at fixed parameters, without checking
/// hypotheses. `alpha` is only read by the wedge-based bounds.
pub fn disk_formula(p: &Polynomial, theorem: Theorem, t1: f64, t2: f64, k: usize, m: usize, alpha: f64) -> (C64, f64) {
    let origin = C64::new(0.0, 0.0);
    match theorem {
        Theorem::Ek => (origin, 1.0),
        Theorem::AzizReal => (origin, t1),
        Theorem::GovilRahman => (origin, govil_rahman_radius(p, alpha)),
        Theorem::AzizT => (origin, aziz_t_radius(p, t1, k, alpha)),
        Theorem::RsmComplex => (origin, rsm_complex_radius(p, t1, t2, k, alpha)),
        Theorem::RsmParts => (origin, rsm_parts_radius(p, t1, t2, k, m)),
        Theorem::Thm17 => thm17_disk(p, t1, t2, k, alpha),
        Theorem::Cor19 => thm17_disk(p, t1, 0.0, k, alpha),
        Theorem::Thm110 => thm110_disk(p, t1, t2, k, m),
        Theorem::Cor112 => cor112_disk(p, t1, t2, k),
    }
}

fn package(p: &Polynomial, hyp: HypothesisReport, k: Option<usize>, m: Option<usize>) -> Result<BoundReport> {
    let theorem = hyp.theorem;
    let alpha = hyp.wedge.map(|w| w.alpha).unwrap_or(0.0);
    let (t1, t2) = (hyp.t1.unwrap_or(0.0), hyp.t2.unwrap_or(0.0));
    let (center, radius) = disk_formula(p, theorem, t1, t2, k.unwrap_or(0), m.unwrap_or(0), alpha);
    if !(radius >= 0.0) || !radius.is_finite() || !(center.re.is_finite() && center.im.is_finite()) {
        return Err(Error::Anomaly(Box::new(Anomaly {
            theorem,
            radius,
            coeffs: p.coeffs().iter().map(|c| (c.re, c.im)).collect(),
            t1: hyp.t1,
            t2: hyp.t2,
            k,
            m,
            alpha: hyp.wedge.map(|w| w.alpha),
        })));
    }
    let disk = Disk { center, radius };
    Ok(BoundReport {
        theorem,
        t1: hyp.t1,
        t2: hyp.t2,
        k,
        m,
        wedge: hyp.wedge,
        enclosing: disk.enclosing_radius(),
        disk,
        hypothesis: hyp,
    })
}

fn require_index(mut hyp: HypothesisReport, k: Option<usize>, m: Option<usize>) -> Result<HypothesisReport> {
    hyp = hyp.into_result()?;
    if let Some(k) = k {
        if !hyp.feasible_k.contains(&k) {
            hyp.violations
                .push(format!("k = {k} is not admissible (admissible: {:?})", hyp.feasible_k));
        }
    }
    if let Some(m) = m {
        if !hyp.feasible_m.contains(&m) {
            hyp.violations
                .push(format!("m = {m} is not admissible (admissible: {:?})", hyp.feasible_m));
        }
    }
    if !hyp.violations.is_empty() {
        hyp.ok = false;
        return Err(Error::Hypothesis(Box::new(hyp)));
    }
    hyp.k = k.or(hyp.k);
    hyp.m = m.or(hyp.m);
    Ok(hyp)
}

pub fn bound_ek(p: &Polynomial, tol: f64) -> Result<BoundReport> {
    let hyp = hypotheses::ek_report(p, tol).into_result()?;
    package(p, hyp, None, None)
}

pub fn bound_aziz_real(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> Result<BoundReport> {
    let hyp = hypotheses::check_aziz_real(p, t1, t2, tol).into_result()?;
    package(p, hyp, None, None)
}

pub fn bound_govil_rahman(p: &Polynomial, tol: f64) -> Result<BoundReport> {
    let hyp = hypotheses::govil_rahman_report(p, tol).into_result()?;
    package(p, hyp, None, None)
}

pub fn bound_aziz_t(p: &Polynomial, t: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_aziz_t(p, t, tol), Some(k), None)?;
    package(p, hyp, Some(k), None)
}

pub fn bound_rsm_complex(p: &Polynomial, t1: f64, t2: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_rsm_complex(p, t1, t2, tol), Some(k), None)?;
    package(p, hyp, Some(k), None)
}

pub fn bound_rsm_parts(p: &Polynomial, t1: f64, t2: f64, k: usize, m: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_rsm_parts(p, t1, t2, tol), Some(k), Some(m))?;
    package(p, hyp, Some(k), Some(m))
}

pub fn bound_thm17(p: &Polynomial, t1: f64, t2: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_thm17(p, t1, t2, tol), Some(k), None)?;
    package(p, hyp, Some(k), None)
}

pub fn bound_cor19(p: &Polynomial, t: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_cor19(p, t, tol), Some(k), None)?;
    package(p, hyp, Some(k), None)
}

pub fn bound_thm110(p: &Polynomial, t1: f64, t2: f64, k: usize, m: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_thm110(p, t1, t2, tol), Some(k), Some(m))?;
    package(p, hyp, Some(k), Some(m))
}

pub fn bound_cor112(p: &Polynomial, t1: f64, t2: f64, k: usize, tol: f64) -> Result<BoundReport> {
    let hyp = require_index(hypotheses::check_cor112(p, t1, t2, tol), Some(k), None)?;
    package(p, hyp, Some(k), None)
}

/// Evaluates `theorem` at `(t1, t2)`. Missing `k` / `m` are chosen from the
/// admissible ranges to minimize the enclosing radius (smallest index wins
/// ties). Single-parameter bounds read `t1` as `t`.
pub fn bound(
    p: &Polynomial,
    theorem: Theorem,
    t1: f64,
    t2: f64,
    k: Option<usize>,
    m: Option<usize>,
    tol: f64,
) -> Result<BoundReport> {
    let hyp = hypotheses::check(p, theorem, t1, t2, tol);
    if !theorem.is_parameterized() || matches!(theorem, Theorem::AzizReal) {
        return package(p, hyp.into_result()?, None, None);
    }
    let hyp = require_index(hyp, k, if theorem.uses_m() { m } else { None })?;
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => hyp.feasible_k.clone(),
    };
    let ms: Vec<Option<usize>> = if !theorem.uses_m() {
        vec![None]
    } else {
        match m {
            Some(m) => vec![Some(m)],
            None => hyp.feasible_m.iter().map(|&m| Some(m)).collect(),
        }
    };
    let mut best: Option<BoundReport> = None;
    for &k in &ks {
        for &m in &ms {
            let mut h = hyp.clone();
            h.k = Some(k);
            h.m = m;
            let rep = package(p, h, Some(k), m)?;
            if best.as_ref().is_none_or(|b| rep.enclosing < b.enclosing) {
                best = Some(rep);
            }
        }
    }
    best.ok_or(Error::NoReports)
}

/// The report with the smallest enclosing radius; ties go to the earlier
/// theorem.
pub fn best_bound(reports: &[BoundReport]) -> Result<BoundReport> {
    reports
        .iter()
        .min_by(|a, b| a.enclosing.total_cmp(&b.enclosing).then(a.theorem.cmp(&b.theorem)))
        .cloned()
        .ok_or(Error::NoReports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    const TOL: f64 = 1e-10;

    fn real(c: &[f64]) -> Polynomial {
        Polynomial::from_real(c).unwrap()
    }

    fn fixture() -> Polynomial {
        real(&[4.0, 1.0, 1.0, 1.0])
    }

    #[test]
    fn theorem_names_round_trip() {
        for th in Theorem::ALL {
            assert_eq!(th.name().parse::<Theorem>().unwrap(), th);
            assert_eq!(serde_json::to_value(th).unwrap(), th.name());
        }
        assert!("thm99".parse::<Theorem>().is_err());
    }

    #[test]
    fn ek_examples() {
        let r = bound_ek(&real(&[1.0, 2.0, 3.0]), 0.0).unwrap();
        assert_eq!(r.disk, Disk::origin(1.0).unwrap());
        assert!(bound_ek(&real(&[1.0, 1.0, 1.0]), 0.0).is_ok());
        assert!(matches!(
            bound_ek(&real(&[3.0, 2.0, 1.0]), 0.0),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn aziz_real_examples() {
        let p = real(&[1.0, 1.0, 1.0]);
        assert_eq!(bound_aziz_real(&p, 1.0, 0.0, 0.0).unwrap().disk.radius, 1.0);
        assert_eq!(bound_aziz_real(&p, 2.0, 0.0, 0.0).unwrap().disk.radius, 2.0);
        let p = real(&[6.0, 5.0, 1.0]);
        assert!(bound_aziz_real(&p, 3.0, 0.0, 0.0).is_err());
        assert_eq!(bound_aziz_real(&p, 5.0, 0.0, 0.0).unwrap().disk.radius, 5.0);
    }

    #[test]
    fn govil_rahman_examples() {
        assert_eq!(
            bound_govil_rahman(&real(&[1.0, 2.0, 3.0]), 0.0).unwrap().disk.radius,
            1.0
        );
        let p = Polynomial::new(vec![C64::new(1.0, 1.0), C64::new(2.0, 2.0), C64::new(3.0, 3.0)]).unwrap();
        assert_eq!(bound_govil_rahman(&p, 1e-12).unwrap().disk.radius, 1.0);

        let p = Polynomial::new(vec![
            C64::new(1.0, 0.0),
            C64::from_polar(2.0, FRAC_PI_6),
            C64::new(3.0, 0.0),
        ])
        .unwrap();
        let r = bound_govil_rahman(&p, 1e-12).unwrap();
        let w = r.wedge.unwrap();
        assert!((w.beta - FRAC_PI_6 / 2.0).abs() < 1e-14);
        assert!((w.alpha - FRAC_PI_6 / 2.0).abs() < 1e-14);
        let a = FRAC_PI_6 / 2.0;
        let expect = a.cos() + a.sin() + 2.0 * a.sin() / 3.0 * 6.0;
        assert!((r.disk.radius - expect).abs() < 1e-14);
    }

    #[test]
    fn aziz_t_examples() {
        let r = bound_aziz_t(&fixture(), 1.0, 0, TOL).unwrap();
        assert_eq!(r.disk.radius, 7.0);
        // k = n, t = 1, |a_n| = |a_k|, alpha = 0: radius t
        let p = real(&[1.0, 2.0, 2.0]);
        assert_eq!(bound_aziz_t(&p, 1.0, 2, TOL).unwrap().disk.radius, 1.0);
        assert!(bound_aziz_t(&fixture(), 1.0, 2, TOL).is_err());
    }

    #[test]
    fn rsm_complex_examples() {
        assert_eq!(
            bound_rsm_complex(&fixture(), 1.0, 0.0, 0, TOL).unwrap().disk.radius,
            7.0
        );
        assert_eq!(
            bound_rsm_complex(&real(&[1.0, 1.0, 1.0, 1.0]), 1.0, 0.0, 0, TOL)
                .unwrap()
                .disk
                .radius,
            1.0
        );
        let p = real(&[2.0, 3.0, 1.0, 2.0]);
        let (t1, an) = (1.5f64, 2.0);
        let expect = t1 + 2.0 / an * (2.0 / t1.powi(2) + 3.0 / t1 + 1.0);
        assert!((rsm_complex_radius(&p, t1, 0.3, 1, FRAC_PI_2) - expect).abs() < 1e-12);
    }

    #[test]
    fn rsm_parts_examples() {
        let r = bound_rsm_parts(&fixture(), 1.0, 0.0, 0, 0, TOL).unwrap();
        assert_eq!(r.disk.radius, 7.0);
    }

    #[test]
    fn thm17_examples() {
        let r = bound_thm17(&fixture(), 1.0, 0.0, 0, TOL).unwrap();
        assert_eq!(r.disk, Disk::origin(7.0).unwrap());
        assert_eq!(r.enclosing, 7.0);

        // hypothetical α = π/2: cosine terms vanish
        let p = fixture();
        let (_, radius) = thm17_disk(&p, 1.0, 0.0, 0, FRAC_PI_2);
        let expect = 2.0 * (4.0 + 1.0) + (0.0 + 1.0);
        assert!((radius - expect).abs() < 1e-12);

        assert!(bound_thm17(&real(&[1.0, 1.0, 1.0]), 1.0, 0.0, 0, TOL).is_err());
        assert!(bound_thm17(&fixture(), 1.0, 0.0, 1, TOL).is_err());
    }

    #[test]
    fn cor19_is_thm17_at_zero_t2() {
        let a = bound_cor19(&fixture(), 1.0, 0, TOL).unwrap();
        let b = bound_thm17(&fixture(), 1.0, 0.0, 0, TOL).unwrap();
        assert_eq!(a.disk, b.disk);
        assert_eq!(a.disk.radius, 7.0);
    }

    #[test]
    fn thm110_examples() {
        let r = bound_thm110(&fixture(), 1.0, 0.0, 0, 0, TOL).unwrap();
        assert_eq!(r.disk, Disk::origin(7.0).unwrap());
        let parts = bound_rsm_parts(&fixture(), 1.0, 0.0, 0, 0, TOL).unwrap();
        assert!(r.enclosing <= parts.disk.radius);
    }

    #[test]
    fn cor112_examples() {
        let r = bound_cor112(&fixture(), 1.0, 0.0, 0, TOL).unwrap();
        assert_eq!(r.disk.center, C64::new(0.0, 0.0));
        assert_eq!(r.disk.radius, 9.0);
        assert!(bound_cor112(&real(&[4.0, -1.0, 1.0, 1.0]), 1.0, 0.0, 0, TOL).is_err());
    }

    #[test]
    fn scanning_picks_smallest_enclosing() {
        // all-equal moduli: k ∈ {0, 1, 2} admissible for the complex bound
        let p = real(&[1.0, 1.0, 1.0]);
        let r = bound(&p, Theorem::RsmComplex, 1.0, 0.0, None, None, TOL).unwrap();
        let all: Vec<f64> = (0..=2)
            .map(|k| bound_rsm_complex(&p, 1.0, 0.0, k, TOL).unwrap().enclosing)
            .collect();
        let min = all.iter().copied().fold(f64::INFINITY, f64::min);
        assert_eq!(r.enclosing, min);
    }

    #[test]
    fn best_bound_examples() {
        let a = bound_rsm_complex(&fixture(), 1.0, 0.0, 0, TOL).unwrap();
        let mut b = a.clone();
        b.disk = Disk::origin(5.0).unwrap();
        b.enclosing = 5.0;
        assert_eq!(best_bound(&[a.clone(), b.clone()]).unwrap().enclosing, 5.0);

        let mut off = a.clone();
        off.disk = Disk::new(C64::new(1.0, 0.0), 3.0).unwrap();
        off.enclosing = 4.0;
        let mut wide = a.clone();
        wide.disk = Disk::origin(4.5).unwrap();
        wide.enclosing = 4.5;
        assert_eq!(best_bound(&[wide, off.clone()]).unwrap(), off);

        assert_eq!(best_bound(std::slice::from_ref(&a)).unwrap(), a);
        assert!(matches!(best_bound(&[]), Err(Error::NoReports)));

        // ties go to the earlier theorem
        let mut later = a.clone();
        later.theorem = Theorem::Thm17;
        assert_eq!(best_bound(&[later, a.clone()]).unwrap().theorem, Theorem::RsmComplex);
    }

    #[test]
    fn report_json_fields() {
        let r = bound_thm17(&fixture(), 1.0, 0.0, 0, TOL).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "thm17");
        assert_eq!(v["center"], serde_json::json!([0.0, 0.0]));
        assert_eq!(v["radius"], 7.0);
        assert_eq!(v["enclosing"], 7.0);
        assert_eq!(v["ok"], true);
        assert!(v["m"].is_null());
    }

    #[test]
    fn div_pow_survives_extreme_exponents() {
        assert_eq!(div_pow(3.0, 2.0, 2), 0.75);
        // t^e underflows but the quotient is representable
        let q = div_pow(1e-300, 1e-3, 110);
        assert!((q / 1e30 - 1.0).abs() < 1e-9, "{q}");
        // t^e overflows but the quotient is representable
        let q = div_pow(1e300, 1e5, 70);
        assert!((q / 1e-50 - 1.0).abs() < 1e-9, "{q}");
        assert!(div_pow(-1e300, 1e5, 70) < 0.0);
        assert_eq!(div_pow(0.0, 1e-3, 500), 0.0);
    }
}
