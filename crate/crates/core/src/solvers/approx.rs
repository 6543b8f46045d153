//! A lower bound on the clique number from treewidth.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{clique_number, treewidth_exact_with};

/// How a width `t` is turned into a clique lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "formula", rename_all = "snake_case")]
pub enum CliqueBoundFormula {
    /// `(t + 1)^(1 / (c + eps))`, for bindings of degree `c`.
    Polynomial { c: f64, eps: f64 },
    /// `log_base(t + 1)`, at least 1, for bindings of order `base^k`.
    Logarithmic { base: f64 },
}

impl CliqueBoundFormula {
    fn check(&self) -> Result<()> {
        match *self {
            CliqueBoundFormula::Polynomial { c, eps } if c >= 1.0 && eps > 0.0 && (c + eps).is_finite() => Ok(()),
            CliqueBoundFormula::Logarithmic { base } if base > 1.0 && base.is_finite() => Ok(()),
            f => Err(Error::arg(format!("invalid clique bound formula {f:?}"))),
        }
    }

    fn real_bound(&self, t: u64) -> f64 {
        match *self {
            CliqueBoundFormula::Polynomial { c, eps } => ((t + 1) as f64).powf(1.0 / (c + eps)),
            CliqueBoundFormula::Logarithmic { base } => ((t + 1) as f64).log(base).max(1.0),
        }
    }
}

/// Largest `m` with `m^(c + eps) <= t + 1`.
///
/// Integral exponents are verified in exact integer arithmetic; other
/// exponents start from the floating-point root and are corrected by
/// comparing powers.
pub fn clique_lower_bound_from_width(t: u64, c: f64, eps: f64) -> Result<u64> {
    CliqueBoundFormula::Polynomial { c, eps }.check()?;
    let s = c + eps;
    let target = t as u128 + 1;
    let fits = |m: u64| -> bool {
        if s.fract() == 0.0 && s <= 127.0 {
            (m as u128).checked_pow(s as u32).is_some_and(|p| p <= target)
        } else {
            (m as f64).powf(s) <= target as f64
        }
    };
    let mut m = (target as f64).powf(1.0 / s).floor() as u64;
    while m > 1 && !fits(m) {
        m -= 1;
    }
    while fits(m + 1) {
        m += 1;
    }
    Ok(m.max(1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueApproximation {
    pub treewidth: usize,
    /// The bound rounded down to an integer.
    pub lower_bound: u64,
    /// The unrounded bound; the approximation guarantee is stated for it.
    pub real_bound: f64,
    pub omega: usize,
    /// `omega / real_bound`.
    pub realized_ratio: f64,
    /// `omega^(1 - 1/(c + eps))` for the polynomial formula.
    pub guarantee: Option<f64>,
}

impl CliqueApproximation {
    /// The bound is a lower bound and the realized ratio is within the
    /// guarantee (up to floating-point slack).
    pub fn holds(&self) -> bool {
        let lower = self.lower_bound as usize <= self.omega.max(1);
        let ratio = self.guarantee.is_none_or(|g| self.realized_ratio <= g * (1.0 + 1e-9));
        lower && ratio
    }
}

pub fn approx_clique(g: &Graph, c: f64, eps: f64) -> Result<CliqueApproximation> {
    approx_clique_with(g, CliqueBoundFormula::Polynomial { c, eps }, &Budget::default())
}

/// Exact treewidth stands in for an approximate decomposition width; the
/// exact clique number is computed alongside for the ratio.
pub fn approx_clique_with(g: &Graph, formula: CliqueBoundFormula, budget: &Budget) -> Result<CliqueApproximation> {
    formula.check()?;
    let (tw, _) = treewidth_exact_with(g, budget)?;
    let t = tw as u64;
    let lower_bound = match formula {
        CliqueBoundFormula::Polynomial { c, eps } => clique_lower_bound_from_width(t, c, eps)?,
        CliqueBoundFormula::Logarithmic { .. } => formula.real_bound(t).floor() as u64,
    };
    let real_bound = formula.real_bound(t);
    let (omega, _) = clique_number(g);
    let guarantee = match formula {
        CliqueBoundFormula::Polynomial { c, eps } => Some((omega.max(1) as f64).powf(1.0 - 1.0 / (c + eps))),
        CliqueBoundFormula::Logarithmic { .. } => None,
    };
    Ok(CliqueApproximation {
        treewidth: tw,
        lower_bound,
        real_bound,
        omega,
        realized_ratio: omega.max(1) as f64 / real_bound,
        guarantee,
    })
}
