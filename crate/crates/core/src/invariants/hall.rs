//! ψ and the Hall ratio ρ.
//!
//! ρ(G) is attained on a connected induced subgraph (ψ of a disconnected
//! graph is at most the largest ψ of its components), so the search walks
//! connected vertex sets only, each exactly once (ESU-style extension by
//! exclusive neighbours). A set is skipped without computing α when its
//! greedy bound `|S| / greedy_α(S)` already fails to beat the incumbent.

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::bitset::{mask_bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::clique::alpha;
use crate::rational::{cmp_small_ratio, Rational};

pub const DEFAULT_HALL_CAP: usize = 16;
/// Hard ceiling for the mask-based search.
pub const MAX_HALL_VERTICES: usize = 64;

/// ψ(G) = |G|/α(G), and 0 for the null graph.
pub fn psi(g: &Graph) -> Rational {
    if g.n() == 0 {
        return Rational::zero();
    }
    Rational::new(g.n() as i64, alpha(g) as i64)
}

#[derive(Clone, Debug)]
pub struct HallOptions {
    pub cap: usize,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for HallOptions {
    fn default() -> Self {
        HallOptions {
            cap: DEFAULT_HALL_CAP,
            cancel: None,
        }
    }
}

/// ρ(G) with a connected witness set, under the default cap.
pub fn hall_ratio(g: &Graph) -> Result<(Rational, VertexSet)> {
    hall_ratio_with(g, &HallOptions::default())
}

pub fn hall_ratio_with(g: &Graph, opts: &HallOptions) -> Result<(Rational, VertexSet)> {
    let n = g.n();
    let cap = opts.cap.min(MAX_HALL_VERTICES);
    if n > cap {
        return Err(Error::cap("hall ratio vertices", cap, n));
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let mut search = Search {
        adj: &adj,
        best: 0,
        best_size: 0,
        best_alpha: 1,
        cancel: opts.cancel.as_deref(),
        steps: 0,
    };
    for v in 0..n {
        let higher = if v == 63 { 0 } else { !0u64 << (v + 1) };
        search.extend(1 << v, adj[v] & higher, adj[v] | 1 << v, higher)?;
    }
    let value = if search.best == 0 {
        Rational::zero()
    } else {
        Rational::new(search.best_size as i64, search.best_alpha as i64)
    };
    Ok((value, VertexSet::from_mask(n, search.best)))
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u64,
    best_alpha: u64,
    cancel: Option<&'a AtomicBool>,
    steps: u64,
}

impl Search<'_> {
    /// `sub` is connected, `ext` are candidate additions, `closed` is
    /// `sub ∪ N(sub)`, `allowed` the vertices above the root.
    fn extend(&mut self, sub: u64, mut ext: u64, closed: u64, allowed: u64) -> Result<()> {
        self.steps += 1;
        if self.steps & 0xfff == 0 {
            if let Some(c) = self.cancel {
                if c.load(AtomicOrdering::Relaxed) {
                    return Err(Error::Cancelled);
                }
            }
        }
        self.consider(sub);
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.adj[w] & !closed & allowed;
            self.extend(sub | 1 << w, ext | exclusive, closed | self.adj[w], allowed)?;
        }
        Ok(())
    }

    fn consider(&mut self, s: u64) {
        let size = s.count_ones() as u64;
        let greedy = greedy_alpha_mask(self.adj, s) as u64;
        // |S|/greedy is an upper bound on ψ(S); ties keep the earlier witness.
        if cmp_small_ratio(size, greedy, self.best_size, self.best_alpha).is_le() {
            return;
        }
        let a = alpha_mask(self.adj, s) as u64;
        if cmp_small_ratio(size, a, self.best_size, self.best_alpha).is_gt() {
            self.best = s;
            self.best_size = size;
            self.best_alpha = a;
        }
    }
}

/// Minimum-degree greedy stable set size inside `s`.
pub(crate) fn greedy_alpha_mask(adj: &[u64], mut s: u64) -> u32 {
    let mut size = 0;
    while s != 0 {
        let v = mask_bits(s)
            .min_by_key(|&v| (adj[v] & s).count_ones())
            .expect("nonempty");
        s &= !(adj[v] | 1 << v);
        size += 1;
    }
    size
}

/// Exact α(G[s]) by branching on a maximum-degree vertex.
pub(crate) fn alpha_mask(adj: &[u64], s: u64) -> u32 {
    let mut lone = 0u64;
    let mut leaf = None;
    let mut best_v = 0;
    let mut best_d = 0;
    for v in mask_bits(s) {
        let d = (adj[v] & s).count_ones();
        if d == 0 {
            lone |= 1 << v;
        } else if d == 1 && leaf.is_none() {
            leaf = Some(v);
        }
        if d > best_d {
            best_v = v;
            best_d = d;
        }
    }
    match best_d {
        0 => return s.count_ones(),
        // disjoint edges plus isolated vertices
        1 => return (s.count_ones() + lone.count_ones()) / 2,
        _ => {}
    }
    if lone != 0 {
        return lone.count_ones() + alpha_mask(adj, s & !lone);
    }
    // a vertex of degree 1 is always in some maximum stable set
    if let Some(v) = leaf {
        return 1 + alpha_mask(adj, s & !(adj[v] | 1 << v));
    }
    let without = alpha_mask(adj, s & !(1 << best_v));
    let with = 1 + alpha_mask(adj, s & !(adj[best_v] | 1 << best_v));
    without.max(with)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::subsets::SubsetTable;

    #[test]
    fn named_values() {
        assert_eq!(psi(&Graph::empty(0)), Rational::zero());
        assert_eq!(psi(&Graph::complete(4)), Rational::integer(4));
        assert_eq!(psi(&Graph::cycle(5)), Rational::new(5, 2));

        let (r, w) = hall_ratio(&Graph::complete(4)).unwrap();
        assert_eq!((r, w.len()), (Rational::integer(4), 4));
        let (r, w) = hall_ratio(&Graph::cycle(5)).unwrap();
        assert_eq!((r, w.len()), (Rational::new(5, 2), 5));
        let u = Graph::cycle(5).disjoint_union(&Graph::complete(1));
        assert_eq!(hall_ratio(&u).unwrap().0, Rational::new(5, 2));
        assert_eq!(hall_ratio(&Graph::complete(1)).unwrap().0, Rational::one());
        assert_eq!(hall_ratio(&Graph::empty(0)).unwrap().0, Rational::zero());
    }

    #[test]
    fn cap_and_cancel() {
        let g = Graph::cycle(17);
        assert!(matches!(hall_ratio(&g), Err(Error::Capability { cap: 16, got: 17, .. })));
        let opts = HallOptions {
            cap: 17,
            cancel: None,
        };
        assert_eq!(hall_ratio_with(&g, &opts).unwrap().0, Rational::new(17, 8));
        let flag = Arc::new(AtomicBool::new(true));
        let opts = HallOptions {
            cap: 40,
            cancel: Some(flag),
        };
        assert_eq!(hall_ratio_with(&Graph::complete(30), &opts), Err(Error::Cancelled));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(96))]
        #[test]
        fn agrees_with_subset_table(n in 0usize..11, bits in proptest::collection::vec(proptest::bool::ANY, 55)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n { for i in 0..j { if bits[k] { edges.push((i, j)); } k += 1; } }
            let g = Graph::from_edges(n, &edges).unwrap();
            let (r, w) = hall_ratio(&g).unwrap();
            let t = SubsetTable::new(&g).unwrap();
            proptest::prop_assert_eq!(&r, &t.rho(t.full()));
            proptest::prop_assert_eq!(psi(&g.induced(&w)), r.clone());
            proptest::prop_assert!(g.induces_connected(&w));
            proptest::prop_assert!(psi(&g) <= r);
            let adj = g.adjacency_masks().unwrap();
            for s in 0u64..1 << n {
                proptest::prop_assert_eq!(alpha_mask(&adj, s) as usize, t.alpha(s));
            }
        }
    }
}
