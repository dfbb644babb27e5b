//! Rasterized stability map over the `(α, β)` plane.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::format::fmt_num;
use crate::classifier::{classify_archetype, classify_stability};
use crate::model::ModelParams;

pub const SWEEP_HEADER: &str = "alpha,beta,lambda2,behavioral_class,archetype";

/// Label used for the `α = β = 0` cell, which is not a valid model.
pub const DEGENERATE_LABEL: &str = "degenerate";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub gamma: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub beta_min: f64,
    pub beta_max: f64,
    pub alpha_steps: usize,
    pub beta_steps: usize,
    pub epsilon: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub alpha: f64,
    pub beta: f64,
    pub lambda2: f64,
    /// `None` for the degenerate cell.
    pub behavioral: Option<&'static str>,
    pub archetype: Option<&'static str>,
}

/// `n` points from `lo` to `hi` inclusive.
fn axis(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    let span = hi - lo;
    let last = (n - 1) as f64;
    (0..n).map(move |i| {
        if i == n - 1 {
            hi
        } else {
            lo + span * (i as f64) / last
        }
    })
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), String> {
        let all = [
            self.gamma,
            self.alpha_min,
            self.alpha_max,
            self.beta_min,
            self.beta_max,
            self.epsilon,
        ];
        if all.iter().any(|x| !x.is_finite()) {
            return Err("sweep bounds must be finite".into());
        }
        if self.gamma <= 0.0 {
            return Err(format!(
                "gamma must be strictly positive (got {})",
                self.gamma
            ));
        }
        if self.alpha_min >= self.alpha_max {
            return Err("alpha-min must be below alpha-max".into());
        }
        if self.beta_min >= self.beta_max {
            return Err("beta-min must be below beta-max".into());
        }
        if self.alpha_steps < 2 || self.beta_steps < 2 {
            return Err("alpha-steps and beta-steps must be at least 2".into());
        }
        if self.epsilon <= 0.0 {
            return Err("epsilon must be positive".into());
        }
        Ok(())
    }

    pub fn alphas(&self) -> Vec<f64> {
        axis(self.alpha_min, self.alpha_max, self.alpha_steps).collect()
    }

    pub fn betas(&self) -> Vec<f64> {
        axis(self.beta_min, self.beta_max, self.beta_steps).collect()
    }

    fn cell(&self, alpha: f64, beta: f64) -> SweepCell {
        let lambda2 = 1.0 - alpha * self.gamma - beta * self.gamma;
        match ModelParams::new(alpha, beta, self.gamma) {
            Ok(params) => SweepCell {
                alpha,
                beta,
                lambda2,
                behavioral: Some(classify_stability(&params, self.epsilon).1.as_str()),
                archetype: Some(
                    classify_archetype(&params, self.epsilon)
                        .case_label
                        .as_str(),
                ),
            },
            Err(_) => SweepCell {
                alpha,
                beta,
                lambda2,
                behavioral: None,
                archetype: None,
            },
        }
    }

    /// Cells in row-major order (α outer, β inner). Rows are evaluated in
    /// parallel; the output order does not depend on scheduling.
    pub fn cells(&self) -> Vec<SweepCell> {
        let betas = self.betas();
        self.alphas()
            .into_par_iter()
            .flat_map_iter(|alpha| {
                betas
                    .iter()
                    .map(move |&beta| self.cell(alpha, beta))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let cells = self.cells();
        let mut out = String::with_capacity(48 * (cells.len() + 1));
        out.push_str(SWEEP_HEADER);
        out.push('\n');
        for c in &cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                fmt_num(c.alpha),
                fmt_num(c.beta),
                fmt_num(c.lambda2),
                c.behavioral.unwrap_or(DEGENERATE_LABEL),
                c.archetype.unwrap_or(DEGENERATE_LABEL),
            );
        }
        out
    }
}
