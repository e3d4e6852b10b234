//! Growth-class fitting over `(n, cost)` measurements.
//!
//! Each candidate model is `cost = c · f(n)`. In log space that is
//! `log cost = log c + log f(n)`, so the least-squares `log c` is the mean of
//! `log cost - log f(n)` and the residual is the sum of squared deviations
//! around that mean. The class with the smallest residual wins.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrowthClass {
    Constant,
    Linear,
    Linearithmic,
    Quadratic,
}

impl GrowthClass {
    /// Candidates, slowest-growing first.
    pub const ALL: [GrowthClass; 4] = [
        GrowthClass::Constant,
        GrowthClass::Linear,
        GrowthClass::Linearithmic,
        GrowthClass::Quadratic,
    ];

    fn log_model(self, n: f64) -> f64 {
        match self {
            GrowthClass::Constant => 0.0,
            GrowthClass::Linear => n.ln(),
            GrowthClass::Linearithmic => n.ln() + n.log2().ln(),
            GrowthClass::Quadratic => 2.0 * n.ln(),
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            GrowthClass::Constant => "Θ(1)",
            GrowthClass::Linear => "Θ(n)",
            GrowthClass::Linearithmic => "Θ(nlogn)",
            GrowthClass::Quadratic => "Θ(n²)",
        }
    }
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.notation())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthFit {
    pub class: GrowthClass,
    pub fit_residual: f64,
    /// Fitted constant `c` of the winning model.
    pub constant: f64,
}

/// Relative slack under which two residuals count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

pub fn growth_fit(points: &[(u64, f64)]) -> Result<GrowthFit> {
    if points.len() < 4 {
        return Err(Error::InsufficientData(format!(
            "need at least 4 points, got {}",
            points.len()
        )));
    }
    if let Some(&(n, _)) = points.iter().find(|(n, _)| *n < 4) {
        return Err(Error::InsufficientData(format!("n = {n} is below 4")));
    }
    if let Some(&(n, c)) = points.iter().find(|(_, c)| !(c.is_finite() && *c > 0.0)) {
        return Err(Error::InsufficientData(format!(
            "cost at n = {n} must be positive and finite, got {c}"
        )));
    }
    let lo = points.iter().map(|p| p.0).min().unwrap_or(0);
    let hi = points.iter().map(|p| p.0).max().unwrap_or(0);
    if hi < lo.saturating_mul(8) {
        return Err(Error::InsufficientData(format!(
            "n spans {lo}..{hi}, fewer than 3 doublings"
        )));
    }

    let mut best: Option<GrowthFit> = None;
    for class in GrowthClass::ALL {
        let offsets: Vec<f64> = points
            .iter()
            .map(|&(n, cost)| cost.ln() - class.log_model(n as f64))
            .collect();
        let mean = offsets.iter().sum::<f64>() / offsets.len() as f64;
        let residual: f64 = offsets.iter().map(|o| (o - mean).powi(2)).sum();
        let candidate = GrowthFit {
            class,
            fit_residual: residual,
            constant: mean.exp(),
        };
        best = match best {
            Some(b) if b.fit_residual <= residual * (1.0 + TIE_TOLERANCE) + f64::EPSILON => Some(b),
            _ => Some(candidate),
        };
    }
    Ok(best.expect("four candidates"))
}
