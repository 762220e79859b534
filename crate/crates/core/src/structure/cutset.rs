//! Minimal cutsets between anticomplete sets and the attachment pattern of
//! cutset vertices.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, PairRelation};
use crate::structure::p5::find_induced_p5;

static CUTSET_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of cutsets whose postconditions have been re-verified in this process.
pub fn cutset_checks() -> u64 {
    CUTSET_CHECKS.load(Ordering::Relaxed)
}

fn separates(g: &Graph, s: &VertexSet, a: &VertexSet, b: &VertexSet) -> bool {
    let allowed = s.complement();
    !g.reach_set_within(a, &allowed).intersects(b)
}

/// An inclusion-minimal nonempty `S`, disjoint from `a ∪ b`, with no path
/// from `a` to `b` in `G ∖ S`.
///
/// Starts from `N(a)` (which separates because `a` is anticomplete to `b`)
/// and drops vertices in ascending order whenever separation survives.
pub fn minimal_cutset(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::arg("cutset sides must be nonempty"));
    }
    if a.intersects(b) {
        return Err(Error::arg("cutset sides must be disjoint"));
    }
    if g.pair_relation_unchecked(a, b) != PairRelation::Anticomplete {
        return Err(Error::arg("cutset sides must be anticomplete"));
    }
    if !g.is_connected() {
        return Err(Error::arg("cutset requires a connected graph"));
    }
    let mut s = g.set_neighborhood(a);
    for v in s.clone().iter() {
        s.remove(v);
        if !separates(g, &s, a, b) {
            s.insert(v);
        }
    }
    verify_minimal_cutset(g, &s, a, b)?;
    Ok(s)
}

/// Re-checks that `s` separates `a` from `b` and that no single vertex of `s`
/// can be dropped.
pub fn verify_minimal_cutset(g: &Graph, s: &VertexSet, a: &VertexSet, b: &VertexSet) -> Result<()> {
    CUTSET_CHECKS.fetch_add(1, Ordering::Relaxed);
    if s.is_empty() || s.intersects(a) || s.intersects(b) {
        return Err(Error::invariant("cutset is empty or meets a side"));
    }
    if !separates(g, s, a, b) {
        return Err(Error::invariant(format!("{:?} does not separate the sides", s.to_vec())));
    }
    for v in s.iter() {
        let mut t = s.clone();
        t.remove(v);
        if separates(g, &t, a, b) {
            return Err(Error::invariant(format!("cutset {:?} is not minimal at {v}", s.to_vec())));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Attachment {
    CompleteToA,
    /// Has a neighbour in A without being complete to it, and is complete to B.
    MixedOnA,
    /// No neighbour in A, complete to B.
    CompleteToB,
    /// Complete to neither side.
    MixedOnBoth,
}

/// Classifies each vertex of `s`; complete-to-A takes precedence.
pub fn classify_attachments(g: &Graph, s: &VertexSet, a: &VertexSet, b: &VertexSet) -> Vec<(usize, Attachment)> {
    s.iter()
        .map(|v| {
            let na = g.neighbors(v).intersection_len(a);
            let to_b = b.is_subset(g.neighbors(v));
            let kind = if na == a.len() {
                Attachment::CompleteToA
            } else if to_b && na > 0 {
                Attachment::MixedOnA
            } else if to_b {
                Attachment::CompleteToB
            } else {
                Attachment::MixedOnBoth
            };
            (v, kind)
        })
        .collect()
}

/// Classification for a cutset between connected anticomplete sides. In a
/// P5-free graph no cutset vertex is complete to neither side; if one is, the
/// error carries an induced P5 of `g`.
pub fn cutset_attachment_split(
    g: &Graph,
    s: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Vec<(usize, Attachment)>> {
    if a.is_empty() || b.is_empty() || a.intersects(b) || s.intersects(a) || s.intersects(b) {
        return Err(Error::arg("cutset and sides must be nonempty and pairwise disjoint"));
    }
    if !g.induces_connected(a) || !g.induces_connected(b) {
        return Err(Error::arg("both sides must induce connected subgraphs"));
    }
    let split = classify_attachments(g, s, a, b);
    if let Some(&(v, _)) = split.iter().find(|(_, k)| *k == Attachment::MixedOnBoth) {
        return Err(Error::Invariant {
            message: format!("cutset vertex {v} is complete to neither side"),
            p5: find_induced_p5(g),
        });
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn worked_examples() {
        let p3 = Graph::path(3);
        assert_eq!(minimal_cutset(&p3, &set(3, &[0]), &set(3, &[2])).unwrap().to_vec(), vec![1]);
        let c4 = Graph::cycle(4);
        assert_eq!(minimal_cutset(&c4, &set(4, &[0]), &set(4, &[2])).unwrap().to_vec(), vec![1, 3]);
        let p5 = Graph::path(5);
        assert_eq!(minimal_cutset(&p5, &set(5, &[0]), &set(5, &[4])).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn precondition_errors() {
        let p3 = Graph::path(3);
        assert!(minimal_cutset(&p3, &set(3, &[0]), &set(3, &[1])).is_err());
        assert!(minimal_cutset(&p3, &set(3, &[]), &set(3, &[2])).is_err());
        let g = Graph::empty(2);
        assert!(minimal_cutset(&g, &set(2, &[0]), &set(2, &[1])).is_err());
    }

    #[test]
    fn attachment_examples() {
        use Attachment::*;
        let p3 = Graph::path(3);
        let split = cutset_attachment_split(&p3, &set(3, &[1]), &set(3, &[0]), &set(3, &[2])).unwrap();
        assert_eq!(split, vec![(1, CompleteToA)]);
        let c4 = Graph::cycle(4);
        let split = cutset_attachment_split(&c4, &set(4, &[1, 3]), &set(4, &[0]), &set(4, &[2])).unwrap();
        assert_eq!(split, vec![(1, CompleteToA), (3, CompleteToA)]);
        let c5 = Graph::cycle(5);
        let split = cutset_attachment_split(&c5, &set(5, &[1, 4]), &set(5, &[0]), &set(5, &[2, 3])).unwrap();
        assert_eq!(split, vec![(1, CompleteToA), (4, CompleteToA)]);
    }

    #[test]
    fn mixed_on_both_reports_p5() {
        // 0-1-2-3-4 with a = {0,1}, b = {3,4}: vertex 2 sees only 1 and 3.
        let p5 = Graph::path(5);
        let err = cutset_attachment_split(&p5, &set(5, &[2]), &set(5, &[0, 1]), &set(5, &[3, 4])).unwrap_err();
        assert_eq!(
            err,
            Error::Invariant {
                message: "cutset vertex 2 is complete to neither side".into(),
                p5: Some([0, 1, 2, 3, 4])
            }
        );
    }
}
