//! The empirical exponent d̂ = log(|G|/α) / log ω: the smallest `d` with
//! `α·ω^d ≥ |G|`. Floating point is used for reporting only.

use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::clique::{alpha, omega};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalExponent {
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub value: f64,
    /// `value` to 12 significant digits.
    pub decimal: String,
}

/// `None` when ω ≤ 1 or |G| ≤ α, where the inequality holds for every d.
pub fn empirical_exponent(g: &Graph) -> Option<EmpiricalExponent> {
    exponent_from_triple(g.n(), alpha(g), omega(g))
}

pub fn exponent_from_triple(n: usize, alpha: usize, omega: usize) -> Option<EmpiricalExponent> {
    if omega <= 1 || n <= alpha {
        return None;
    }
    let value = ((n as f64) / (alpha as f64)).ln() / (omega as f64).ln();
    Some(EmpiricalExponent {
        n,
        alpha,
        omega,
        value,
        decimal: significant_digits(value, 12),
    })
}

pub(crate) fn significant_digits(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64 + 1;
    let decimals = (digits as i64 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
