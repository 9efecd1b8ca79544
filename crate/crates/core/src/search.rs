//! Grid-and-refine search over the free parameters `(t1, t2)`.
//!
//! Points are laid out on a `(t1, λ)` grid with `t2 = λ·t1`, so the whole
//! triangle `0 <= t2 <= t1` is covered by a rectangle. The hypothesis checks
//! themselves work on the condition sequence, which is linear in
//! `u = t1·t2` and `v = t1 - t2`. Each refinement shrinks the window by 8
//! around the incumbent; a final bisection along `t1` pushes the incumbent
//! onto the feasibility boundary when that improves the radius. The
//! bisection only accepts points whose hypotheses hold with zero tolerance,
//! so it never drifts into the band admitted by the condition tolerance.

use std::cmp::Ordering;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::bounds::{self, BoundReport, Theorem};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::hypotheses::default_tol;
use crate::poly::{cauchy_bound, Polynomial};

const EPS_FACTOR: f64 = 1e-6;
const ZOOM: f64 = 8.0;
const POLISH_STEPS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchConfig {
    /// Upper end of the `t1` range as a multiple of the Cauchy bound.
    pub t1_max_factor: f64,
    /// Points per axis.
    pub grid_points: usize,
    pub refine_iterations: usize,
    /// Condition tolerance; `None` uses the polynomial's default.
    pub tol: Option<f64>,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            t1_max_factor: 2.0,
            grid_points: 64,
            refine_iterations: 3,
            tol: None,
            execution: Execution::default(),
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid_points must be >= 2, got {}",
                self.grid_points
            )));
        }
        if !(self.t1_max_factor > 0.0 && self.t1_max_factor.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "t1_max_factor must be positive, got {}",
                self.t1_max_factor
            )));
        }
        if self.tol.is_some_and(|t| !(t >= 0.0 && t.is_finite())) {
            return Err(Error::InvalidParameter(format!(
                "tol must be nonnegative, got {:?}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// A feasible point visited by the optimizer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub t1: f64,
    pub t2: f64,
    pub enclosing: f64,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub theorem: Theorem,
    /// `None` when no visited point satisfied the hypotheses.
    pub best: Option<BoundReport>,
    pub evaluations: usize,
    pub feasible_fraction: f64,
    pub trace: Vec<TracePoint>,
}

impl SearchResult {
    pub fn infeasible(&self) -> bool {
        self.best.is_none()
    }
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SearchResult", 5)?;
        st.serialize_field("theorem", &self.theorem)?;
        st.serialize_field("infeasible", &self.infeasible())?;
        st.serialize_field("best", &self.best)?;
        st.serialize_field("evaluations", &self.evaluations)?;
        st.serialize_field("feasible_fraction", &self.feasible_fraction)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy)]
struct Window {
    t1_lo: f64,
    t1_hi: f64,
    lam_lo: f64,
    lam_hi: f64,
}

struct Domain {
    eps: f64,
    t1_max: f64,
    lam_max: f64,
    single: bool,
}

impl Domain {
    fn new(p: &Polynomial, theorem: Theorem, cfg: &SearchConfig) -> Result<Domain> {
        let cb = cauchy_bound(p)?;
        Ok(Domain {
            eps: EPS_FACTOR * cb,
            t1_max: cfg.t1_max_factor * cb,
            lam_max: 1.0,
            single: theorem.is_single_parameter(),
        })
    }

    fn full(&self) -> Window {
        Window {
            t1_lo: self.eps,
            t1_hi: self.t1_max.max(self.eps),
            lam_lo: 0.0,
            lam_hi: if self.single { 0.0 } else { self.lam_max },
        }
    }

    fn points(&self, w: &Window, n: usize, strict: bool) -> Vec<(f64, f64)> {
        let axis = |lo: f64, hi: f64, count: usize| -> Vec<f64> {
            if count == 1 || hi <= lo {
                return vec![lo];
            }
            (0..count)
                .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
                .collect()
        };
        let t1s = axis(w.t1_lo, w.t1_hi, n);
        let lams: Vec<f64> = axis(w.lam_lo, w.lam_hi, if self.single { 1 } else { n })
            .into_iter()
            .filter(|&l| !(strict && l >= 1.0))
            .collect();
        let mut pts = Vec::with_capacity(t1s.len() * lams.len());
        for &t1 in &t1s {
            for &l in &lams {
                pts.push((t1, l * t1));
            }
        }
        pts
    }

    fn zoom(&self, w: &Window, t1: f64, t2: f64) -> Window {
        let lam = t2 / t1;
        let h1 = (w.t1_hi - w.t1_lo) / (2.0 * ZOOM);
        let hl = (w.lam_hi - w.lam_lo) / (2.0 * ZOOM);
        Window {
            t1_lo: (t1 - h1).max(self.eps),
            t1_hi: (t1 + h1).min(self.t1_max),
            lam_lo: (lam - hl).max(0.0),
            lam_hi: (lam + hl).min(self.lam_max),
        }
    }
}

fn check_pre(p: &Polynomial, theorem: Theorem, cfg: &SearchConfig) -> Result<()> {
    cfg.validate()?;
    if !theorem.is_parameterized() {
        return Err(Error::InvalidParameter(format!(
            "{theorem} has no free parameters to search"
        )));
    }
    if p.degree() == 0 {
        return Err(Error::Degree { got: 0, need: 1 });
    }
    Ok(())
}

/// The bound at one point, or `None` when the hypotheses fail there.
fn evaluate(p: &Polynomial, theorem: Theorem, t1: f64, t2: f64, tol: f64) -> Result<Option<BoundReport>> {
    match bounds::bound(p, theorem, t1, t2, None, None, tol) {
        Ok(r) => Ok(Some(r)),
        Err(e @ Error::Anomaly(_)) => Err(e),
        Err(_) => Ok(None),
    }
}

/// Smaller enclosing radius, then smaller `t1`, then smaller `t2`.
fn better(a: &BoundReport, b: &BoundReport) -> bool {
    let key = |r: &BoundReport| (r.enclosing, r.t1.unwrap_or(0.0), r.t2.unwrap_or(0.0));
    let (ka, kb) = (key(a), key(b));
    ka.0.total_cmp(&kb.0)
        .then(ka.1.total_cmp(&kb.1))
        .then(ka.2.total_cmp(&kb.2))
        == Ordering::Less
}

struct Run<'a> {
    p: &'a Polynomial,
    theorem: Theorem,
    tol: f64,
    exec: Execution,
    evaluations: usize,
    feasible: usize,
    trace: Vec<TracePoint>,
    best: Option<BoundReport>,
}

impl Run<'_> {
    fn offer(&mut self, r: BoundReport) {
        self.feasible += 1;
        self.trace.push(TracePoint {
            t1: r.t1.unwrap_or(0.0),
            t2: r.t2.unwrap_or(0.0),
            enclosing: r.enclosing,
        });
        if self.best.as_ref().is_none_or(|b| better(&r, b)) {
            self.best = Some(r);
        }
    }

    fn scan(&mut self, pts: &[(f64, f64)]) -> Result<()> {
        let (p, theorem, tol) = (self.p, self.theorem, self.tol);
        let results = self.exec.map(pts, |&(t1, t2)| evaluate(p, theorem, t1, t2, tol));
        self.evaluations += pts.len();
        // reduced in grid order, so the outcome does not depend on scheduling
        for r in results {
            if let Some(r) = r? {
                self.offer(r);
            }
        }
        Ok(())
    }

    fn exact(&mut self, t1: f64, t2: f64) -> Result<Option<BoundReport>> {
        self.evaluations += 1;
        evaluate(self.p, self.theorem, t1, t2, 0.0)
    }

    /// Bisect along `t1` (fixed `λ`) between the incumbent and `toward`,
    /// moving the incumbent end whenever the midpoint improves on it.
    fn polish(&mut self, toward: f64) -> Result<()> {
        let Some(inc) = self.best.clone() else { return Ok(()) };
        let (t1, t2) = (inc.t1.unwrap_or(0.0), inc.t2.unwrap_or(0.0));
        let lam = t2 / t1;
        let (mut near, mut far) = (t1, toward);
        for _ in 0..POLISH_STEPS {
            let mid = 0.5 * (near + far);
            if mid == near || mid == far {
                break;
            }
            let improved = match self.exact(mid, lam * mid)? {
                Some(r) if better(&r, self.best.as_ref().expect("incumbent exists")) => {
                    self.offer(r);
                    true
                }
                Some(r) => {
                    self.offer(r);
                    false
                }
                None => false,
            };
            if improved {
                near = mid;
            } else {
                far = mid;
            }
        }
        Ok(())
    }
}

pub fn optimize_params(p: &Polynomial, theorem: Theorem, cfg: &SearchConfig) -> Result<SearchResult> {
    check_pre(p, theorem, cfg)?;
    let dom = Domain::new(p, theorem, cfg)?;
    let mut run = Run {
        p,
        theorem,
        tol: cfg.tol.unwrap_or_else(|| default_tol(p)),
        exec: cfg.execution,
        evaluations: 0,
        feasible: 0,
        trace: Vec::new(),
        best: None,
    };
    let strict = theorem.strict_t();
    let mut window = dom.full();
    run.scan(&dom.points(&window, cfg.grid_points, strict))?;
    let step = |w: &Window| (w.t1_hi - w.t1_lo) / (cfg.grid_points - 1) as f64;
    let mut spacing = step(&window);
    for _ in 0..cfg.refine_iterations {
        let Some(inc) = run.best.as_ref() else { break };
        window = dom.zoom(&window, inc.t1.unwrap_or(dom.eps), inc.t2.unwrap_or(0.0));
        spacing = step(&window);
        run.scan(&dom.points(&window, cfg.grid_points, strict))?;
    }
    if let Some(inc) = run.best.as_ref() {
        let t1 = inc.t1.unwrap_or(dom.eps);
        let (below, above) = ((t1 - spacing).max(dom.eps), (t1 + spacing).min(dom.t1_max));
        run.polish(below)?;
        run.polish(above)?;
    }
    let feasible_fraction = if run.evaluations == 0 {
        0.0
    } else {
        run.feasible as f64 / run.evaluations as f64
    };
    Ok(SearchResult {
        theorem,
        best: run.best,
        evaluations: run.evaluations,
        feasible_fraction,
        trace: run.trace,
    })
}

/// A grid point where the hypotheses hold, with its canonical indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasiblePoint {
    pub t1: f64,
    pub t2: f64,
    pub k: Option<usize>,
    pub m: Option<usize>,
}

/// Feasible points of the initial grid.
pub fn feasible_region_sample(p: &Polynomial, theorem: Theorem, cfg: &SearchConfig) -> Result<Vec<FeasiblePoint>> {
    check_pre(p, theorem, cfg)?;
    let dom = Domain::new(p, theorem, cfg)?;
    let tol = cfg.tol.unwrap_or_else(|| default_tol(p));
    let pts = dom.points(&dom.full(), cfg.grid_points, theorem.strict_t());
    let hits = cfg.execution.map(&pts, |&(t1, t2)| {
        let h = crate::hypotheses::check(p, theorem, t1, t2, tol);
        h.ok.then_some(FeasiblePoint { t1, t2, k: h.k, m: h.m })
    });
    Ok(hits.into_iter().flatten().collect())
}
