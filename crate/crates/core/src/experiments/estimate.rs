//! Maximum empirical exponent over a corpus.

use serde::Serialize;

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::exponent::{empirical_exponent, EmpiricalExponent};
use crate::structure::p5::find_induced_p5;

/// Width of the histogram buckets over `d̂`.
pub const BUCKET_WIDTH: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Skipped {
    pub id: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentMax {
    pub id: usize,
    pub graph6: String,
    pub exponent: EmpiricalExponent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bucket {
    /// Lower edge; the bucket is `[lo, lo + 0.1)`.
    pub lo: f64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentSummary {
    pub instances: usize,
    /// Instances with `ω ≥ 2` and `|G| > α`.
    pub nontrivial: usize,
    pub max: Option<ExponentMax>,
    pub histogram: Vec<Bucket>,
    pub skipped: Vec<Skipped>,
    pub message: String,
}

/// Skips non-P5-free graphs with a reason; the maximum keeps the first
/// instance attaining it.
pub fn estimate_d<'a>(graphs: impl IntoIterator<Item = (usize, &'a Graph)>) -> ExponentSummary {
    let mut instances = 0;
    let mut nontrivial = 0;
    let mut max: Option<ExponentMax> = None;
    let mut counts: Vec<u64> = Vec::new();
    let mut skipped = Vec::new();
    for (id, g) in graphs {
        instances += 1;
        if let Some(p) = find_induced_p5(g) {
            skipped.push(Skipped {
                id,
                reason: format!("not P5-free: induced P5 {p:?}"),
            });
            continue;
        }
        let Some(e) = empirical_exponent(g) else {
            continue;
        };
        nontrivial += 1;
        let b = (e.value / BUCKET_WIDTH + 1e-9).floor() as usize;
        if counts.len() <= b {
            counts.resize(b + 1, 0);
        }
        counts[b] += 1;
        if max.as_ref().is_none_or(|m| e.value > m.exponent.value) {
            max = Some(ExponentMax {
                id,
                graph6: to_graph6(g),
                exponent: e,
            });
        }
    }
    let histogram = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(i, count)| Bucket {
            lo: (i as f64 * BUCKET_WIDTH * 10.0).round() / 10.0,
            count,
        })
        .collect();
    let message = match &max {
        None => "no nontrivial instances".to_string(),
        Some(m) => format!("max d_hat = {} at line {}", m.exponent.decimal, m.id),
    };
    ExponentSummary {
        instances,
        nontrivial,
        max,
        histogram,
        skipped,
        message,
    }
}
