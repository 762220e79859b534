//! Certificate search and validation over a corpus.

use serde::Serialize;

use crate::decomposition::anti::{anti_decompose, AntiDecomposition};
use crate::decomposition::certificate::{validate_certificate, Certificate, Verdict};
use crate::decomposition::pq::pq_sparsity_threshold;
use crate::decomposition::trichotomy::{trichotomy_search_with, TrichotomyReport, MAX_TRICHOTOMY_VERTICES};
use crate::error::Result;
use crate::experiments::{ordered_map, pool, Caps};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::rational::Rational;
use crate::structure::p5::find_induced_p5;

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    pub eps: Rational,
    pub d: Rational,
    /// Also run the anticomplete decomposition and keep its trace.
    pub trace: bool,
    pub jobs: usize,
    /// Graphs above the pair or blockade cap are skipped.
    pub caps: Caps,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            eps: Rational::new(1, 2),
            d: Rational::integer(9),
            trace: false,
            jobs: 0,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecomposeStatus {
    Certified,
    Skipped,
    /// No valid certificate: a counterexample to the trichotomy, or a bug.
    Failure,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecomposeRecord {
    pub id: usize,
    pub graph6: String,
    pub status: DecomposeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<TrichotomyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<AntiDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_note: Option<String>,
}

impl DecomposeRecord {
    fn skipped(id: usize, g: &Graph, reason: String) -> Self {
        DecomposeRecord {
            id,
            graph6: to_graph6(g),
            status: DecomposeStatus::Skipped,
            reason: Some(reason),
            certificate: None,
            verdict: None,
            search: None,
            decomposition: None,
            decomposition_note: None,
        }
    }
}

fn skip_reason(g: &Graph, caps: &Caps) -> Option<String> {
    if g.n() < 2 {
        return Some("fewer than two vertices".to_string());
    }
    let cap = caps.pair.min(caps.blockade).min(MAX_TRICHOTOMY_VERTICES);
    if g.n() > cap {
        return Some(format!("{} vertices exceed the search cap {cap}", g.n()));
    }
    if let Some(p) = find_induced_p5(g) {
        return Some(format!("not P5-free: induced P5 {p:?}"));
    }
    if !g.is_connected() {
        return Some("disconnected".to_string());
    }
    None
}

/// The decomposition with `q = (1−ε²)ρ(G)` and the largest `p` for which the
/// graph is (p,q)-sparse.
fn traced(g: &Graph, eps: &Rational, rho_g: &Rational) -> std::result::Result<AntiDecomposition, String> {
    let q = (Rational::one() - eps.pow(2)) * rho_g;
    if !q.is_positive() {
        return Err("q = (1 - eps^2) rho(G) is not positive".to_string());
    }
    let p = match pq_sparsity_threshold(g, &q).map_err(|e| e.to_string())? {
        None => q.clone(),
        Some(p) if p.is_positive() => p.min(q.clone()),
        Some(_) => return Err(format!("not (p,q)-sparse for any p > 0 at q = {q}")),
    };
    anti_decompose(g, eps, &p, &q).map_err(|e| e.to_string())
}

pub fn decompose_one(id: usize, g: &Graph, opts: &DecomposeOptions) -> Result<DecomposeRecord> {
    if let Some(reason) = skip_reason(g, &opts.caps) {
        return Ok(DecomposeRecord::skipped(id, g, reason));
    }
    let report = trichotomy_search_with(g, &opts.eps, &opts.d)?;
    let (status, reason, verdict) = match &report.chosen {
        None => (
            DecomposeStatus::Failure,
            Some("no certificate of any shape exists; see the search summary".to_string()),
            None,
        ),
        Some(c) => {
            let v = validate_certificate(g, c, &report.rho_g, &opts.d);
            if v.all_pass() {
                (DecomposeStatus::Certified, None, Some(v))
            } else {
                (
                    DecomposeStatus::Failure,
                    Some("chosen certificate fails validation".to_string()),
                    Some(v),
                )
            }
        }
    };
    let (decomposition, decomposition_note) = if opts.trace {
        match traced(g, &opts.eps, &report.rho_g) {
            Ok(d) => (Some(d), None),
            Err(e) => (None, Some(e)),
        }
    } else {
        (None, None)
    };
    Ok(DecomposeRecord {
        id,
        graph6: to_graph6(g),
        status,
        reason,
        certificate: report.chosen.clone(),
        verdict,
        search: Some(report),
        decomposition,
        decomposition_note,
    })
}

pub fn decompose_corpus(graphs: &[(usize, Graph)], opts: &DecomposeOptions) -> Result<Vec<DecomposeRecord>> {
    opts.caps.validate()?;
    let pool = pool(opts.jobs)?;
    ordered_map(&pool, graphs, |(id, g)| decompose_one(*id, g, opts))
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_and_skips() {
        let opts = DecomposeOptions {
            trace: true,
            jobs: 1,
            ..Default::default()
        };
        let gs = vec![
            (1, Graph::cycle(5)),
            (2, Graph::complete(3).disjoint_union(&Graph::complete(3))),
            (3, Graph::path(5)),
        ];
        let recs = decompose_corpus(&gs, &opts).unwrap();
        assert_eq!(recs[0].status, DecomposeStatus::Certified);
        assert_eq!(recs[0].certificate.as_ref().unwrap().kind(), "complete_pair");
        assert_eq!(recs[1].status, DecomposeStatus::Skipped);
        assert_eq!(recs[1].reason.as_deref(), Some("disconnected"));
        assert!(recs[2].reason.as_ref().unwrap().contains("P5"));
        // at eps = 1/2 an edge of C5 already reaches q = 15/8 with no split
        assert!(recs[0].decomposition_note.is_some());
    }
}
