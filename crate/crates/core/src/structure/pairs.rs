//! Anticomplete pairs with Hall-ratio lower bounds on both sides.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::clique::max_clique_within;
use crate::invariants::hall::{hall_ratio, DEFAULT_HALL_CAP};
use crate::invariants::subsets::SubsetTable;
use crate::rational::Rational;

pub const MAX_EXHAUSTIVE_PAIR_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Heuristic,
}

/// Result of a pair search. When `complete` is false a `None` pair does not
/// rule out existence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSearch {
    pub pair: Option<(VertexSet, VertexSet)>,
    pub complete: bool,
}

impl PairSearch {
    pub fn label(&self) -> &'static str {
        if self.complete {
            "exhaustive search"
        } else {
            "incomplete search"
        }
    }
}

/// Finds disjoint anticomplete `A`, `B` with `ρ(A) ≥ min_rho_a` and
/// `ρ(B) ≥ min_rho_b`.
///
/// Exhaustive mode returns the pair whose `A` comes first in ascending mask
/// order, with `B` the first qualifying subset of `V ∖ N[A]` in the same order.
pub fn find_anticomplete_pair(
    g: &Graph,
    min_rho_a: &Rational,
    min_rho_b: &Rational,
    mode: SearchMode,
) -> Result<PairSearch> {
    match mode {
        SearchMode::Exhaustive => {
            if g.n() > MAX_EXHAUSTIVE_PAIR_VERTICES {
                return Err(Error::cap(
                    "exhaustive pair search vertices",
                    MAX_EXHAUSTIVE_PAIR_VERTICES,
                    g.n(),
                ));
            }
            let t = SubsetTable::new(g)?;
            let pair = exhaustive_pair(&t, min_rho_a, min_rho_b)
                .map(|(a, b)| (t.to_set(a), t.to_set(b)));
            Ok(PairSearch {
                pair,
                complete: true,
            })
        }
        SearchMode::Heuristic => Ok(PairSearch {
            pair: heuristic_pair(g, min_rho_a, min_rho_b),
            complete: false,
        }),
    }
}

pub(crate) fn exhaustive_pair(
    t: &SubsetTable,
    min_rho_a: &Rational,
    min_rho_b: &Rational,
) -> Option<(u64, u64)> {
    let full = t.full();
    for a in 1..=full {
        if !t.rho_at_least_rational(a, min_rho_a) {
            continue;
        }
        let w = full & !(a | t.neighbourhood(a));
        if w == 0 || !t.rho_at_least_rational(w, min_rho_b) {
            continue;
        }
        // Ascending submasks of w: sub ← (sub − w) & w.
        let mut sub = w & w.wrapping_neg();
        loop {
            if t.rho_at_least_rational(sub, min_rho_b) {
                return Some((a, sub));
            }
            if sub == w {
                break;
            }
            sub = sub.wrapping_sub(w) & w;
        }
    }
    None
}

/// Lower bound on ρ(G[s]): exact when small, otherwise the clique number.
fn rho_lower(g: &Graph, s: &VertexSet) -> Rational {
    if s.len() <= DEFAULT_HALL_CAP {
        hall_ratio(&g.induced(s)).expect("within cap").0
    } else {
        Rational::from(max_clique_within(g, s).len())
    }
}

/// For each vertex `v`, tries `B` = a component of `G − N[v]` and
/// `A = V ∖ N[B]`.
fn heuristic_pair(g: &Graph, min_rho_a: &Rational, min_rho_b: &Rational) -> Option<(VertexSet, VertexSet)> {
    let all = g.vertex_set();
    for v in 0..g.n() {
        let outside = all.difference(&g.closed_neighborhood(v));
        for comp in g.components_within(&outside) {
            if rho_lower(g, &comp) < *min_rho_b {
                continue;
            }
            let a = all.difference(&comp.union(&g.set_neighborhood(&comp)));
            if !a.is_empty() && rho_lower(g, &a) >= *min_rho_a {
                return Some((a, comp));
            }
        }
    }
    None
}
