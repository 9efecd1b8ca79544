use thiserror::Error;

use crate::bounds::Theorem;
use crate::hypotheses::HypothesisReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Inputs attached to a negative or non-finite radius computed under
/// satisfied hypotheses.
#[derive(Debug, Clone, PartialEq)]
pub struct Anomaly {
    pub theorem: Theorem,
    pub radius: f64,
    pub coeffs: Vec<(f64, f64)>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub alpha: Option<f64>,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("leading coefficient is zero (or below the configured threshold)")]
    ZeroLeading,
    #[error("all coefficients are zero")]
    AllZero,
    #[error("coefficient {0} is not finite")]
    NonFinite(usize),
    #[error("degree {got} is too small: at least {need} required")]
    Degree { got: usize, need: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("hypotheses of {} not satisfied: {}", .0.theorem, .0.violations.join("; "))]
    Hypothesis(Box<HypothesisReport>),
    #[error("anomaly: {} produced radius {} under satisfied hypotheses", .0.theorem, .0.radius)]
    Anomaly(Box<Anomaly>),
    #[error("root finder did not converge")]
    Unconverged,
    #[error("no bound reports to choose from")]
    NoReports,
    #[error("enclosing radius is zero but the polynomial has nonzero roots")]
    ZeroEnclosing,
    #[error("instance generation failed after {attempts} attempts: {reason}")]
    GenerationExhausted { attempts: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
