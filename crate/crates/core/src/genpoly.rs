//! Seeded generators of polynomials that satisfy a bound's hypotheses.
//!
//! Instances are built from a unimodal family: weights `w_j` rise to a peak
//! at the target index and fall after it, with consecutive ratios drawn from
//! `[ratio_min, ratio_max]`, and the coefficient moduli are `w_j / t1^j`.
//! At `t2 = 0` this realizes the sign-split hypotheses exactly; for `t2 > 0`
//! the same family is rejection-sampled. Every instance is re-checked with
//! the corresponding checker before it is returned.

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypotheses::{self, condition_seq, default_tol, ConditionSeq};
use crate::poly::{Polynomial, C64};

const MAX_ATTEMPTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    /// Target split index (the peak of the real or modulus chain).
    pub k: usize,
    /// Peak of the imaginary-part chain; `None` gives real coefficients.
    pub m: Option<usize>,
    pub t1: f64,
    pub t2: f64,
    /// Largest argument deviation from the wedge axis.
    pub alpha: f64,
    /// Wedge axis; `None` means the positive real axis.
    #[serde(default)]
    pub axis: Option<f64>,
    pub seed: u64,
    #[serde(default = "default_ratio_min")]
    pub ratio_min: f64,
    #[serde(default = "default_ratio_max")]
    pub ratio_max: f64,
}

fn default_ratio_min() -> f64 {
    1.05
}

fn default_ratio_max() -> f64 {
    3.0
}

impl GenSpec {
    pub fn new(n: usize, k: usize, t1: f64, alpha: f64, seed: u64) -> Self {
        GenSpec {
            n,
            k,
            m: None,
            t1,
            t2: 0.0,
            alpha,
            axis: None,
            seed,
            ratio_min: default_ratio_min(),
            ratio_max: default_ratio_max(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if !(self.t1 > 0.0 && self.t1.is_finite()) || !(0.0..=self.t1).contains(&self.t2) {
            return bad(format!(
                "need t1 > 0 and 0 <= t2 <= t1, got {} and {}",
                self.t1, self.t2
            ));
        }
        if !(0.0..=FRAC_PI_2).contains(&self.alpha) || self.axis.is_some_and(|b| !b.is_finite()) {
            return bad(format!("alpha must lie in [0, pi/2], got {}", self.alpha));
        }
        if !(self.ratio_min >= 1.0 && self.ratio_max >= self.ratio_min && self.ratio_max.is_finite()) {
            return bad(format!("invalid ratio range [{}, {}]", self.ratio_min, self.ratio_max));
        }
        Ok(())
    }

    fn scale(&self) -> f64 {
        if self.t2 > 0.0 && self.t1 > self.t2 {
            self.t1 - self.t2
        } else {
            self.t1
        }
    }
}

/// Weights rising to 1 at `peak` and falling after it.
fn unimodal_weights(rng: &mut ChaCha8Rng, n: usize, peak: usize, lo: f64, hi: f64) -> Vec<f64> {
    let draw = |rng: &mut ChaCha8Rng| if hi > lo { rng.random_range(lo..=hi) } else { lo };
    let mut w = vec![0.0; n + 1];
    w[peak] = 1.0;
    for j in (0..peak).rev() {
        w[j] = w[j + 1] / draw(rng);
    }
    for j in peak + 1..=n {
        w[j] = w[j - 1] / draw(rng);
    }
    w
}

fn scaled_moduli(w: &[f64], tau: f64) -> Vec<f64> {
    w.iter().enumerate().map(|(j, x)| x / tau.powi(j as i32)).collect()
}

/// Whether `s` is within `margin` of zero on either side of the split.
fn marginal(s: &ConditionSeq, k: usize, margin: f64) -> bool {
    [k + 1, k + 2]
        .into_iter()
        .filter(|&r| r <= s.len())
        .any(|r| s.get(r).abs() < margin)
}

fn margin(p: &Polynomial) -> f64 {
    100.0 * default_tol(p)
}

/// Real positive coefficients with `a_n >= ... >= a_0 > 0`.
pub fn gen_ek_instance(n: usize, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = vec![rng.random_range(0.1..2.0)];
    for _ in 0..n {
        let last = c[c.len() - 1];
        // occasional exact ties exercise the non-strict chain
        let next = if rng.random_bool(0.15) {
            last
        } else {
            last * rng.random_range(1.0..2.5)
        };
        c.push(next);
    }
    Polynomial::from_real(&c).expect("positive coefficients")
}

/// An instance whose `t1`-scaled moduli peak at `spec.k` (no cap on `k`).
/// It satisfies the wedge/unimodal hypotheses used by the complex bounds.
pub fn gen_unimodal_instance(spec: &GenSpec) -> Result<Polynomial> {
    spec.validate()?;
    if spec.n == 0 || spec.k > spec.n {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and k <= n, got n = {}, k = {}",
            spec.n, spec.k
        )));
    }
    if spec.t2 >= spec.t1 {
        return Err(Error::InvalidParameter("need t2 < t1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let beta = spec.axis.unwrap_or(0.0);
    draw_modulus_family(spec, &mut rng, beta, |p| {
        let rep = hypotheses::check_rsm_complex(p, spec.t1, spec.t2, default_tol(p));
        rep.k.filter(|&k| k <= spec.k)
    })
}

fn draw_modulus_family<F>(spec: &GenSpec, rng: &mut ChaCha8Rng, beta: f64, accept: F) -> Result<Polynomial>
where
    F: Fn(&Polynomial) -> Option<usize>,
{
    for _ in 0..MAX_ATTEMPTS {
        let w = unimodal_weights(rng, spec.n, spec.k, spec.ratio_min, spec.ratio_max);
        let moduli = scaled_moduli(&w, spec.scale());
        let coeffs: Vec<C64> = moduli
            .iter()
            .map(|&r| {
                let dev = if spec.alpha > 0.0 {
                    rng.random_range(-spec.alpha..=spec.alpha)
                } else {
                    0.0
                };
                C64::from_polar(r, beta + dev)
            })
            .collect();
        let p = Polynomial::new(coeffs)?;
        if let Some(k) = accept(&p) {
            let s = condition_seq(&p.moduli(), spec.t1, spec.t2)?;
            if !marginal(&s, k, margin(&p)) {
                return Ok(p);
            }
        }
    }
    Err(Error::GenerationExhausted {
        attempts: MAX_ATTEMPTS,
        reason: format!("{spec:?}"),
    })
}

/// An instance satisfying the off-center modulus bound's hypotheses
/// (`n >= 3`, split `k <= n - 3`) at the given `t1`, `t2`.
pub fn gen_thm17_instance(spec: &GenSpec) -> Result<Polynomial> {
    spec.validate()?;
    if spec.n < 3 || spec.k + 3 > spec.n {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3 and k <= n - 3, got n = {}, k = {}",
            spec.n, spec.k
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let beta = spec.axis.unwrap_or(0.0);
    draw_modulus_family(spec, &mut rng, beta, |p| {
        let rep = hypotheses::check_thm17(p, spec.t1, spec.t2, default_tol(p));
        rep.k.filter(|&k| k <= spec.k)
    })
}

/// An instance satisfying the real/imaginary-part bound's hypotheses: real
/// parts peak at `k`, imaginary parts (nonnegative) peak at `m`, `α_n > 0`.
pub fn gen_thm110_instance(spec: &GenSpec) -> Result<Polynomial> {
    spec.validate()?;
    let n = spec.n;
    if n == 0 || spec.k >= n || spec.m.is_some_and(|m| m >= n) {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and k, m <= n - 1, got n = {n}, k = {}, m = {:?}",
            spec.k, spec.m
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let tau = spec.scale();
    for _ in 0..MAX_ATTEMPTS {
        let re = scaled_moduli(
            &unimodal_weights(&mut rng, n, spec.k, spec.ratio_min, spec.ratio_max),
            tau,
        );
        let im = match spec.m {
            Some(m) => {
                let level = rng.random_range(0.1..2.0);
                scaled_moduli(&unimodal_weights(&mut rng, n, m, spec.ratio_min, spec.ratio_max), tau)
                    .into_iter()
                    .map(|x| x * level)
                    .collect()
            }
            None => vec![0.0; n + 1],
        };
        let p = Polynomial::new(re.iter().zip(&im).map(|(&a, &b)| C64::new(a, b)).collect())?;
        let tol = default_tol(&p);
        let rep = hypotheses::check_thm110(&p, spec.t1, spec.t2, tol);
        let (Some(k), Some(m)) = (rep.k, rep.m) else { continue };
        if k > spec.k || spec.m.is_some_and(|target| m > target) {
            continue;
        }
        let s_re = condition_seq(&p.re_parts(), spec.t1, spec.t2)?;
        let s_im = condition_seq(&p.im_parts(), spec.t1, spec.t2)?;
        if marginal(&s_re, k, margin(&p)) || (spec.m.is_some() && marginal(&s_im, m, margin(&p))) {
            continue;
        }
        return Ok(p);
    }
    Err(Error::GenerationExhausted {
        attempts: MAX_ATTEMPTS,
        reason: format!("{spec:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypotheses::{check_ek, check_thm110, check_thm17};

    #[test]
    fn thm17_small_real_instance() {
        let p = gen_thm17_instance(&GenSpec::new(3, 0, 1.0, 0.0, 7)).unwrap();
        assert!(p.is_real() && p.coeffs().iter().all(|c| c.re > 0.0));
        let m = p.moduli();
        assert!(m[0] >= m[1] && m[1] >= m[2] && m[2] >= m[3]);
        let rep = check_thm17(&p, 1.0, 0.0, default_tol(&p));
        assert!(rep.ok && rep.k == Some(0));
        assert!(rep.wedge.unwrap().alpha < 1e-12);
    }

    #[test]
    fn minimum_ratio_instance_is_feasible() {
        let mut spec = GenSpec::new(6, 2, 1.0, 0.0, 1);
        spec.ratio_max = spec.ratio_min;
        let p = gen_thm17_instance(&spec).unwrap();
        assert!(check_thm17(&p, 1.0, 0.0, default_tol(&p)).ok);
    }

    #[test]
    fn thm17_many_seeds_pass_checker() {
        for seed in 0..500u64 {
            let n = 3 + (seed as usize % 8);
            let k = (seed as usize / 8) % (n - 2);
            let alpha = (seed as f64 * 0.37) % FRAC_PI_2;
            let mut spec = GenSpec::new(n, k, 0.5 + (seed % 7) as f64 * 0.25, alpha, seed);
            spec.axis = Some((seed as f64 * 1.3) % 6.0 - 3.0);
            let p = gen_thm17_instance(&spec).unwrap();
            let rep = check_thm17(&p, spec.t1, 0.0, default_tol(&p));
            assert!(rep.ok, "seed {seed}: {:?}", rep.violations);
            assert!(rep.k.unwrap() <= k);
        }
    }

    #[test]
    fn thm17_with_positive_t2_uses_rejection() {
        let mut ok = 0;
        for seed in 0..50u64 {
            let mut spec = GenSpec::new(6, 1, 1.2, 0.3, seed);
            spec.t2 = 0.02;
            if let Ok(p) = gen_thm17_instance(&spec) {
                assert!(check_thm17(&p, 1.2, 0.02, default_tol(&p)).ok);
                ok += 1;
            }
        }
        assert!(ok > 40, "only {ok} of 50 succeeded");
    }

    #[test]
    fn thm110_examples() {
        let mut spec = GenSpec::new(4, 1, 1.0, 0.0, 3);
        spec.m = Some(2);
        let p = gen_thm110_instance(&spec).unwrap();
        let rep = check_thm110(&p, 1.0, 0.0, default_tol(&p));
        assert!(rep.ok);
        assert!(rep.k.unwrap() <= 1 && rep.m.unwrap() <= 2);

        spec.m = None;
        let p = gen_thm110_instance(&spec).unwrap();
        assert!(p.is_real());
        let rep = check_thm110(&p, 1.0, 0.0, default_tol(&p));
        assert_eq!(rep.feasible_m, (0..4).collect::<Vec<_>>());
    }

    #[test]
    fn thm110_many_seeds_pass_checker() {
        for seed in 0..500u64 {
            let n = 1 + (seed as usize % 10);
            let k = (seed as usize / 10) % n;
            let mut spec = GenSpec::new(n, k, 0.5 + (seed % 5) as f64 * 0.3, 0.0, seed);
            spec.m = Some((seed as usize / 3) % n);
            let p = gen_thm110_instance(&spec).unwrap();
            assert!(check_thm110(&p, spec.t1, 0.0, default_tol(&p)).ok, "seed {seed}");
        }
    }

    #[test]
    fn gates_are_enforced() {
        assert!(gen_thm17_instance(&GenSpec::new(2, 0, 1.0, 0.0, 0)).is_err());
        assert!(gen_thm17_instance(&GenSpec::new(5, 3, 1.0, 0.0, 0)).is_err());
        assert!(gen_thm110_instance(&GenSpec::new(3, 3, 1.0, 0.0, 0)).is_err());
        assert!(gen_thm17_instance(&GenSpec::new(5, 0, 1.0, 2.0, 0)).is_err());
    }

    #[test]
    fn seeds_are_deterministic() {
        let spec = GenSpec::new(7, 2, 1.3, 0.4, 99);
        assert_eq!(gen_thm17_instance(&spec).unwrap(), gen_thm17_instance(&spec).unwrap());
        assert_eq!(gen_ek_instance(5, 4), gen_ek_instance(5, 4));
        assert_ne!(gen_ek_instance(5, 4), gen_ek_instance(5, 5));
    }

    #[test]
    fn ek_instances_pass_checker() {
        for seed in 0..200 {
            assert!(check_ek(&gen_ek_instance(2 + seed as usize % 11, seed), 0.0));
        }
    }

    #[test]
    fn unimodal_instances_allow_any_peak() {
        for seed in 0..100u64 {
            let n = 1 + seed as usize % 8;
            let spec = GenSpec::new(n, seed as usize % (n + 1), 0.8, 0.5, seed);
            let p = gen_unimodal_instance(&spec).unwrap();
            assert!(hypotheses::check_aziz_t(&p, 0.8, default_tol(&p)).ok);
        }
    }
}
