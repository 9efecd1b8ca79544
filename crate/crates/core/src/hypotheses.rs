//! Coefficient hypotheses of each bound.
//!
//! Every chain condition is expressed through the condition sequence
//! `s_r = t1 t2 c_r + (t1 - t2) c_{r-1} - c_{r-2}`, `r = 1..=n+1`, with
//! `c_{-1} = c_{n+1} = 0`, and a split index `k` such that `s_r >= 0` for
//! `r <= k + 1` and `s_r <= 0` for `r >= k + 2`. The classical decreasing
//! chain and the `t`-scaled unimodal chain are the `t2 = 0` case of the same
//! form (`s_r = t c_{r-1} - c_{r-2}`), so one split routine serves all.

use serde::{Serialize, Serializer};

use crate::bounds::Theorem;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::wedge::{fit_wedge, Wedge};

/// Default sign tolerance: `1e-10 * max_j |a_j|`.
pub fn default_tol(p: &Polynomial) -> f64 {
    1e-10 * p.max_modulus()
}

/// `s_1..=s_{n+1}` for a coefficient sequence `c_0..=c_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionSeq {
    values: Vec<f64>,
}

impl ConditionSeq {
    /// Values in order `s_1, s_2, ..., s_{n+1}`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `s_r` for `1 <= r <= n + 1`.
    pub fn get(&self, r: usize) -> f64 {
        self.values[r - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn condition_seq(c: &[f64], t1: f64, t2: f64) -> Result<ConditionSeq> {
    if c.is_empty() {
        return Err(Error::Empty);
    }
    if !(t1 > 0.0 && t1 >= t2 && t2 >= 0.0 && t1.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "condition sequence needs t1 > 0 and t1 >= t2 >= 0, got t1 = {t1}, t2 = {t2}"
        )));
    }
    Ok(condition_seq_uv(c, t1 * t2, t1 - t2))
}

/// The condition sequence in the coordinates `u = t1 t2`, `v = t1 - t2`, in
/// which every `s_r = u c_r + v c_{r-1} - c_{r-2}` is linear.
pub fn condition_seq_uv(c: &[f64], u: f64, v: f64) -> ConditionSeq {
    let n = c.len() - 1;
    let at = |j: isize| -> f64 {
        if j < 0 || j as usize > n {
            0.0
        } else {
            c[j as usize]
        }
    };
    let values = (1..=n as isize + 1)
        .map(|r| u * at(r) + v * at(r - 1) - at(r - 2))
        .collect();
    ConditionSeq { values }
}

/// Admissible split indices of a condition sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitIndices {
    /// Canonical (smallest) admissible index.
    pub k: usize,
    /// Every admissible index, ascending.
    pub feasible: Vec<usize>,
}

impl SplitIndices {
    /// Restricts to `k <= cap`; `None` when nothing survives.
    pub fn capped(&self, cap: usize) -> Option<SplitIndices> {
        let feasible: Vec<usize> = self.feasible.iter().copied().filter(|&k| k <= cap).collect();
        feasible.first().map(|&k| SplitIndices {
            k,
            feasible: feasible.clone(),
        })
    }
}

/// Indices `k` in `0..=n` with `s_r >= -tol` for `r <= k + 1` and
/// `s_r <= tol` for `r >= k + 2`.
pub fn split_index(s: &ConditionSeq, tol: f64) -> Option<SplitIndices> {
    let len = s.len();
    // prefix_ok[i]: s_1..s_i all >= -tol
    let mut prefix_ok = vec![true; len + 1];
    for i in 1..=len {
        prefix_ok[i] = prefix_ok[i - 1] && s.get(i) >= -tol;
    }
    // suffix_ok[i]: s_i..s_len all <= tol (index len + 1 is the empty suffix)
    let mut suffix_ok = vec![true; len + 2];
    for i in (1..=len).rev() {
        suffix_ok[i] = suffix_ok[i + 1] && s.get(i) <= tol;
    }
    let feasible: Vec<usize> = (0..len).filter(|&k| prefix_ok[k + 1] && suffix_ok[k + 2]).collect();
    feasible.first().map(|&k| SplitIndices {
        k,
        feasible: feasible.clone(),
    })
}

/// Outcome of checking one theorem's hypotheses at given parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub ok: bool,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    /// Canonical split index when the hypotheses hold.
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub wedge: Option<Wedge>,
    /// All admissible `k` (after the theorem's own cap).
    pub feasible_k: Vec<usize>,
    pub feasible_m: Vec<usize>,
    pub violations: Vec<String>,
    /// Informational remarks, e.g. which index gate was applied.
    pub notes: Vec<String>,
}

impl HypothesisReport {
    fn new(theorem: Theorem, t1: Option<f64>, t2: Option<f64>) -> Self {
        HypothesisReport {
            theorem,
            ok: false,
            t1,
            t2,
            k: None,
            m: None,
            wedge: None,
            feasible_k: Vec::new(),
            feasible_m: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn violate(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }

    fn finish(mut self) -> Self {
        self.ok = self.violations.is_empty();
        if !self.ok {
            self.k = None;
            self.m = None;
        }
        self
    }

    pub fn into_result(self) -> Result<Self> {
        if self.ok {
            Ok(self)
        } else {
            Err(Error::Hypothesis(Box::new(self)))
        }
    }

    fn require_degree(&mut self, p: &Polynomial, need: usize) -> bool {
        if p.degree() < need {
            self.violate(format!("n ≥ {need} required"));
            false
        } else {
            true
        }
    }

    fn fit_wedge(&mut self, p: &Polynomial) {
        match fit_wedge(p) {
            Ok(w) => self.wedge = Some(w),
            Err(e) => self.violate(format!("wedge condition fails: {e}")),
        }
    }

    fn split_k(&mut self, s: &ConditionSeq, tol: f64, cap: usize, what: &str) {
        match split_index(s, tol).and_then(|sp| sp.capped(cap)) {
            Some(sp) => {
                self.k = Some(sp.k);
                self.feasible_k = sp.feasible;
            }
            None => self.violate(format!(
                "{what} condition sequence admits no split k with 0 ≤ k ≤ {cap}"
            )),
        }
    }

    fn split_m(&mut self, s: &ConditionSeq, tol: f64, cap: usize) {
        match split_index(s, tol).and_then(|sp| sp.capped(cap)) {
            Some(sp) => {
                self.m = Some(sp.k);
                self.feasible_m = sp.feasible;
            }
            None => self.violate(format!(
                "imaginary-part condition sequence admits no split m with 0 ≤ m ≤ {cap}"
            )),
        }
    }
}

impl Serialize for HypothesisReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            theorem: Theorem,
            ok: bool,
            t1: Option<f64>,
            t2: Option<f64>,
            k: Option<usize>,
            m: Option<usize>,
            alpha: Option<f64>,
            beta: Option<f64>,
            violations: &'a [String],
            notes: &'a [String],
        }
        Wire {
            theorem: self.theorem,
            ok: self.ok,
            t1: self.t1,
            t2: self.t2,
            k: self.k,
            m: self.m,
            alpha: self.wedge.map(|w| w.alpha),
            beta: self.wedge.map(|w| w.beta),
            violations: &self.violations,
            notes: &self.notes,
        }
        .serialize(serializer)
    }
}

/// Validates `t1 >= t2 >= 0`, `t1 != 0` (or the strict `t1 > t2` form).
fn check_params(rep: &mut HypothesisReport, t1: f64, t2: f64, strict: bool) -> bool {
    let before = rep.violations.len();
    if !(t1.is_finite() && t2.is_finite()) {
        rep.violate("t1 and t2 must be finite");
        return false;
    }
    if t2 < 0.0 {
        rep.violate("t2 ≥ 0 required");
    }
    if t1 == 0.0 {
        rep.violate("t1 ≠ 0 required");
    }
    if strict && !(t1 > t2) {
        rep.violate("t1 > t2 required");
    } else if !strict && t1 < t2 {
        rep.violate("t1 ≥ t2 required");
    }
    rep.violations.len() == before
}

fn all_real(p: &Polynomial, tol: f64) -> bool {
    p.coeffs().iter().all(|c| c.im.abs() <= tol)
}

/// Classical chain `a_n >= a_{n-1} >= ... >= a_0 > 0` with real coefficients.
pub fn check_ek(p: &Polynomial, tol: f64) -> bool {
    ek_report(p, tol).ok
}

pub fn ek_report(p: &Polynomial, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::Ek, None, None);
    if !all_real(p, tol) {
        rep.violate("real coefficients required");
    }
    let a = p.re_parts();
    if !(a[0] > 0.0) {
        rep.violate("a_0 > 0 required");
    }
    if let Some(j) = (0..p.degree()).find(|&j| a[j + 1] < a[j] - tol) {
        rep.violate(format!("chain a_n ≥ ... ≥ a_0 fails at a_{} < a_{}", j + 1, j));
    }
    rep.finish()
}

/// Wedge fit plus the modulus chain `|a_n| >= ... >= |a_0|`.
pub fn check_govil_rahman(p: &Polynomial, tol: f64) -> (Option<Wedge>, bool) {
    let m = p.moduli();
    let chain = (0..p.degree()).all(|j| m[j + 1] >= m[j] - tol);
    (fit_wedge(p).ok(), chain)
}

pub fn govil_rahman_report(p: &Polynomial, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::GovilRahman, None, None);
    let (wedge, chain) = check_govil_rahman(p, tol);
    rep.fit_wedge(p);
    debug_assert_eq!(wedge, rep.wedge);
    if !chain {
        rep.violate("modulus chain |a_n| ≥ ... ≥ |a_0| fails");
    }
    rep.finish()
}

/// Unimodal chain `t^j |a_j|` rising to a peak at `k` and falling toward
/// `j = n`, with `|a_0| > 0`. Returns every admissible peak.
pub fn check_monotone_t(p: &Polynomial, t: f64, tol: f64) -> Result<SplitIndices> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("t > 0 required, got {t}")));
    }
    let m = p.moduli();
    if !(m[0] > 0.0) {
        return Err(Error::Infeasible("|a_0| > 0 required".into()));
    }
    let s = condition_seq(&m, t, 0.0)?;
    split_index(&s, tol).ok_or_else(|| Error::Infeasible("t-scaled moduli t^j|a_j| are not unimodal".into()))
}

/// All conditions `s_r >= 0` on the (real) coefficients; no sign split.
pub fn check_aziz_real(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::AzizReal, Some(t1), Some(t2));
    rep.require_degree(p, 1);
    if !all_real(p, tol) {
        rep.violate("real coefficients required");
    }
    if check_params(&mut rep, t1, t2, true) {
        let s = condition_seq_uv(&p.re_parts(), t1 * t2, t1 - t2);
        if let Some(r) = (1..=s.len()).find(|&r| s.get(r) < -tol) {
            rep.violate(format!("s_{r} = {} < 0", s.get(r)));
        }
    }
    rep.finish()
}

pub fn check_aziz_t(p: &Polynomial, t: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::AzizT, Some(t), Some(0.0));
    rep.require_degree(p, 1);
    rep.fit_wedge(p);
    match check_monotone_t(p, t, tol) {
        Ok(sp) => {
            rep.k = Some(sp.k);
            rep.feasible_k = sp.feasible;
        }
        Err(e) => rep.violate(e.to_string()),
    }
    rep.finish()
}

pub fn check_rsm_complex(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::RsmComplex, Some(t1), Some(t2));
    let n = p.degree();
    rep.require_degree(p, 1);
    rep.fit_wedge(p);
    if check_params(&mut rep, t1, t2, true) {
        let s = condition_seq_uv(&p.moduli(), t1 * t2, t1 - t2);
        rep.split_k(&s, tol, n, "modulus");
        if rep.k.is_some_and(|k| k + 1 >= n) {
            rep.notes.push("edge-index: canonical k ∈ {n-1, n}".into());
        }
    }
    rep.finish()
}

pub fn check_rsm_parts(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::RsmParts, Some(t1), Some(t2));
    let n = p.degree();
    rep.require_degree(p, 1);
    if !(p.leading().re > 0.0) {
        rep.violate("α_n > 0 required");
    }
    if check_params(&mut rep, t1, t2, true) {
        let (u, v) = (t1 * t2, t1 - t2);
        rep.split_k(&condition_seq_uv(&p.re_parts(), u, v), tol, n, "real-part");
        rep.split_m(&condition_seq_uv(&p.im_parts(), u, v), tol, n);
    }
    rep.finish()
}

pub fn check_thm17(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::Thm17, Some(t1), Some(t2));
    let deg_ok = rep.require_degree(p, 3);
    rep.fit_wedge(p);
    if check_params(&mut rep, t1, t2, false) && deg_ok {
        let s = condition_seq_uv(&p.moduli(), t1 * t2, t1 - t2);
        rep.split_k(&s, tol, p.degree() - 3, "modulus");
    }
    rep.finish()
}

/// The `t2 = 0` case of [`check_thm17`] phrased through the `t`-scaled chain.
pub fn check_cor19(p: &Polynomial, t: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::Cor19, Some(t), Some(0.0));
    let deg_ok = rep.require_degree(p, 3);
    rep.fit_wedge(p);
    if deg_ok {
        match check_monotone_t(p, t, tol) {
            Ok(sp) => match sp.capped(p.degree() - 3) {
                Some(sp) => {
                    rep.k = Some(sp.k);
                    rep.feasible_k = sp.feasible;
                }
                None => rep.violate(format!("no unimodal peak k with 0 ≤ k ≤ {}", p.degree() - 3)),
            },
            Err(e) => rep.violate(e.to_string()),
        }
    }
    rep.finish()
}

pub fn check_thm110(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::Thm110, Some(t1), Some(t2));
    let n = p.degree();
    let deg_ok = rep.require_degree(p, 1);
    if !(p.leading().re > 0.0) {
        rep.violate("α_n > 0 required");
    }
    if check_params(&mut rep, t1, t2, false) && deg_ok {
        let (u, v) = (t1 * t2, t1 - t2);
        rep.split_k(&condition_seq_uv(&p.re_parts(), u, v), tol, n - 1, "real-part");
        rep.split_m(&condition_seq_uv(&p.im_parts(), u, v), tol, n - 1);
        rep.notes.push("index gates: 0 ≤ k ≤ n-1, 0 ≤ m ≤ n-1".into());
    }
    rep.finish()
}

pub fn check_cor112(p: &Polynomial, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    let mut rep = HypothesisReport::new(Theorem::Cor112, Some(t1), Some(t2));
    let n = p.degree();
    let deg_ok = rep.require_degree(p, 1);
    if !all_real(p, 0.0) || p.coeffs().iter().any(|c| !(c.re > 0.0)) {
        rep.violate("real and positive coefficients required");
    }
    if check_params(&mut rep, t1, t2, false) && deg_ok {
        let s = condition_seq_uv(&p.re_parts(), t1 * t2, t1 - t2);
        rep.split_k(&s, tol, n - 1, "coefficient");
    }
    rep.finish()
}

/// Dispatches to the checker of `theorem`. Single-parameter theorems read
/// `t1` as their `t`; parameter-free theorems ignore both.
pub fn check(p: &Polynomial, theorem: Theorem, t1: f64, t2: f64, tol: f64) -> HypothesisReport {
    match theorem {
        Theorem::Ek => ek_report(p, tol),
        Theorem::GovilRahman => govil_rahman_report(p, tol),
        Theorem::AzizReal => check_aziz_real(p, t1, t2, tol),
        Theorem::AzizT => check_aziz_t(p, t1, tol),
        Theorem::RsmComplex => check_rsm_complex(p, t1, t2, tol),
        Theorem::RsmParts => check_rsm_parts(p, t1, t2, tol),
        Theorem::Thm17 => check_thm17(p, t1, t2, tol),
        Theorem::Cor19 => check_cor19(p, t1, tol),
        Theorem::Thm110 => check_thm110(p, t1, t2, tol),
        Theorem::Cor112 => check_cor112(p, t1, t2, tol),
    }
}
