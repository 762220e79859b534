//! Maximal stable set enumeration (Bron–Kerbosch with pivoting, run on the
//! complement's adjacency implicitly).

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_STABLE_SETS: usize = 50_000;

struct Enum<'a> {
    g: &'a Graph,
    out: Vec<VertexSet>,
    cap: usize,
    overflow: bool,
}

impl Enum<'_> {
    /// Non-neighbours of `v` in `p`, excluding `v`.
    fn co_neighbors(&self, v: usize, p: &VertexSet) -> VertexSet {
        let mut s = p.difference(self.g.neighbors(v));
        s.remove(v);
        s
    }

    fn run(&mut self, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet) {
        if self.overflow {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() == self.cap {
                    self.overflow = true;
                    return;
                }
                self.out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (self.co_neighbors(u, &p).len(), std::cmp::Reverse(u)))
            .expect("p nonempty");
        // P minus the pivot's complement-neighbours = P ∩ N_G[pivot].
        let mut branch = p.intersection(self.g.neighbors(pivot));
        if p.contains(pivot) {
            branch.insert(pivot);
        }
        for v in branch.iter() {
            r.insert(v);
            let np = self.co_neighbors(v, &p);
            let nx = self.co_neighbors(v, &x);
            self.run(r, np, nx);
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
    }
}

/// All maximal stable sets of `g`, sorted lexicographically by vertex list.
/// The null graph has the single maximal stable set ∅.
pub fn maximal_stable_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let mut e = Enum {
        g,
        out: Vec::new(),
        cap,
        overflow: false,
    };
    e.run(&mut VertexSet::empty(n), VertexSet::full(n), VertexSet::empty(n));
    if e.overflow {
        return Err(Error::cap("maximal stable sets", cap, cap + 1));
    }
    let mut out = e.out;
    out.sort_by(|a, b| a.cmp_lex(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (0u64..1 << n)
            .map(|m| VertexSet::from_mask(n, m))
            .filter(|s| g.is_stable(s))
            .filter(|s| {
                (0..n)
                    .filter(|&v| !s.contains(v))
                    .all(|v| g.neighbors(v).intersects(s))
            })
            .collect();
        out.sort_by(|a, b| a.cmp_lex(b));
        out
    }

    #[test]
    fn c5_has_five_maximal_stable_sets() {
        let sets = maximal_stable_sets(&Graph::cycle(5), 100).unwrap();
        assert_eq!(sets.len(), 5);
        assert_eq!(sets, brute(&Graph::cycle(5)));
    }

    #[test]
    fn complete_graph_gives_singletons() {
        let sets = maximal_stable_sets(&Graph::complete(4), 100).unwrap();
        assert_eq!(sets.len(), 4);
        assert!(sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            maximal_stable_sets(&Graph::cycle(7), 3),
            Err(Error::Capability { .. })
        ));
    }

    proptest::proptest! {
        #[test]
        fn matches_brute_force(n in 0usize..9, bits in proptest::collection::vec(proptest::bool::ANY, 36)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n { for i in 0..j { if bits[k] { edges.push((i, j)); } k += 1; } }
            let g = Graph::from_edges(n, &edges).unwrap();
            proptest::prop_assert_eq!(maximal_stable_sets(&g, 10_000).unwrap(), brute(&g));
        }
    }
}
