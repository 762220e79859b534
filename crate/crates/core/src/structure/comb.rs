//! The comb procedure: given anchors `A` and a set `B` dominated by `A`,
//! either certify `|B|² < 400ΓΔ` or find anchors `a_1..a_k` with private
//! blocks `B_i ⊆ B` of size at least `Γ/k²`.
//!
//! Reverse deletion: keep a live anchor set `A''` and let `P(a)` be the
//! vertices of `B` whose only live anchor neighbour is `a`. If every live
//! anchor has `|P(a)|·k² ≥ Γ` the `P(a)` are the teeth. Otherwise the anchor
//! with the smallest `P(a)` is deleted, orphaning exactly `P(a)`, which has
//! fewer than `Γ/k²` and at most `Δ` vertices. If every anchor gets deleted,
//! each vertex of `B` was orphaned once, so
//! `|B| < Σ_k min(Γ/k², Δ) ≤ 3√(ΓΔ)`.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, PairRelation};
use crate::rational::Rational;

static COMB_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of comb outcomes validated in this process.
pub fn comb_checks() -> u64 {
    COMB_CHECKS.load(Ordering::Relaxed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CombOutcome {
    SmallB,
    Teeth {
        anchors: Vec<usize>,
        blocks: Vec<VertexSet>,
    },
}

pub fn comb(g: &Graph, anchors: &VertexSet, b: &VertexSet, delta: &Rational, gamma: &Rational) -> Result<CombOutcome> {
    if anchors.is_empty() || b.is_empty() || anchors.intersects(b) {
        return Err(Error::arg("anchors and B must be nonempty and disjoint"));
    }
    if !delta.is_positive() || !gamma.is_positive() {
        return Err(Error::arg("delta and gamma must be positive"));
    }
    for a in anchors {
        if Rational::from(g.neighbors(a).intersection_len(b)) > *delta {
            return Err(Error::arg(format!("anchor {a} has more than delta neighbours in B")));
        }
    }
    if let Some(x) = b.iter().find(|&x| !g.neighbors(x).intersects(anchors)) {
        return Err(Error::arg(format!("vertex {x} of B has no anchor neighbour")));
    }

    let mut live = anchors.clone();
    let outcome = loop {
        if live.is_empty() {
            break None;
        }
        let private: Vec<(usize, VertexSet)> = live
            .iter()
            .map(|a| {
                let p = VertexSet::from_vertices(
                    g.n(),
                    g.neighbors(a)
                        .intersection(b)
                        .iter()
                        .filter(|&x| g.neighbors(x).intersection_len(&live) == 1),
                );
                (a, p)
            })
            .collect();
        let k = live.len();
        let k2 = Rational::from(k * k);
        let (weakest, smallest) = private
            .iter()
            .min_by_key(|(a, p)| (p.len(), *a))
            .map(|(a, p)| (*a, p.len()))
            .expect("live nonempty");
        if Rational::from(smallest) * &k2 >= *gamma {
            let (anchors, blocks) = private.into_iter().unzip();
            break Some(CombOutcome::Teeth { anchors, blocks });
        }
        live.remove(weakest);
    };
    let outcome = match outcome {
        Some(t) => t,
        None => {
            let nb = Rational::from(b.len());
            if &nb * &nb < Rational::integer(400) * gamma * delta {
                CombOutcome::SmallB
            } else {
                return Err(Error::invariant("comb pruning failed although |B|² ≥ 400ΓΔ"));
            }
        }
    };
    validate_comb(g, b, delta, gamma, &outcome)?;
    Ok(outcome)
}

/// Checks the outcome contract: SmallB only below the bound; teeth complete to
/// their anchor, anticomplete to the other anchors, disjoint, inside `b`, and
/// of size at least `Γ/k²`.
pub fn validate_comb(g: &Graph, b: &VertexSet, delta: &Rational, gamma: &Rational, outcome: &CombOutcome) -> Result<()> {
    COMB_CHECKS.fetch_add(1, Ordering::Relaxed);
    match outcome {
        CombOutcome::SmallB => {
            let nb = Rational::from(b.len());
            if &nb * &nb >= Rational::integer(400) * gamma * delta {
                return Err(Error::invariant("SmallB reported although |B|² ≥ 400ΓΔ"));
            }
        }
        CombOutcome::Teeth { anchors, blocks } => {
            let k = anchors.len();
            if k == 0 || blocks.len() != k {
                return Err(Error::invariant("teeth need one block per anchor"));
            }
            let k2 = Rational::from(k * k);
            let mut seen = VertexSet::empty(g.n());
            for (i, (&a, bi)) in anchors.iter().zip(blocks).enumerate() {
                if bi.intersects(&seen) || !bi.is_subset(b) {
                    return Err(Error::invariant(format!("block {i} overlaps or leaves B")));
                }
                seen.union_with(bi);
                if Rational::from(bi.len()) * &k2 < *gamma {
                    return Err(Error::invariant(format!("block {i} smaller than gamma/k^2")));
                }
                let single = VertexSet::singleton(g.n(), a);
                if g.pair_relation(&single, bi)? != PairRelation::Complete {
                    return Err(Error::invariant(format!("anchor {a} not complete to block {i}")));
                }
                for (j, &other) in anchors.iter().enumerate() {
                    if j != i && g.pair_relation(&VertexSet::singleton(g.n(), other), bi)? != PairRelation::Anticomplete {
                        return Err(Error::invariant(format!("anchor {other} touches block {i}")));
                    }
                }
            }
        }
    }
    Ok(())
}
