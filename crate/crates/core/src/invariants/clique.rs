//! Maximum clique / maximum stable set by bitset branch and bound.
//!
//! Candidates are colour-sorted greedily at every node; a branch is cut as
//! soon as `|current| + colour bound <= |best|`. Vertices are first relabelled
//! by descending degree (ties by index) so the search order is deterministic.

use crate::bitset::VertexSet;
use crate::graph::Graph;

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy colour classes over `cand`; returns vertices in class order with
    /// the class number of each.
    fn colour_sort(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut colours = Vec::with_capacity(cand.len());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.min() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut cand: VertexSet) {
        let (order, colours) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// A maximum clique of `g` (empty for the null graph).
pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, &g.vertex_set())
}

/// A maximum clique of G[s], as a subset of V(G).
pub fn max_clique_within(g: &Graph, s: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut verts = s.to_vec();
    if verts.is_empty() {
        return VertexSet::empty(n);
    }
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).intersection_len(s)), v));
    let m = verts.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<VertexSet> = verts
        .iter()
        .map(|&v| {
            VertexSet::from_vertices(
                m,
                g.neighbors(v).iter().filter(|&u| s.contains(u)).map(|u| pos[u]),
            )
        })
        .collect();
    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(VertexSet::full(m));
    VertexSet::from_vertices(n, search.best.iter().map(|&i| verts[i]))
}

/// A maximum stable set of `g`.
pub fn max_stable_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

/// A maximum stable set of G[s], as a subset of V(G).
pub fn max_stable_set_within(g: &Graph, s: &VertexSet) -> VertexSet {
    max_clique_within(&g.complement(), s)
}

/// ω(G); 0 for the null graph.
pub fn omega(g: &Graph) -> usize {
    max_clique(g).len()
}

/// α(G); 0 for the null graph.
pub fn alpha(g: &Graph) -> usize {
    max_stable_set(g).len()
}
