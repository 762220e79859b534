//! Induced P5 detection.
//!
//! Walks `v1 < …` in ascending order with `v2 ∈ N(v1)`, `v3 ∈ N(v2)∖N[v1]`,
//! `v4 ∈ N(v3)∖(N[v1] ∪ N[v2])`, `v5 ∈ N(v4)∖(N[v1] ∪ N[v2] ∪ N[v3])`, so the
//! first hit is the lexicographically least witness. Graphs above 64 vertices
//! are first reduced to one vertex per twin class: an induced P5 never uses
//! two twins, and swapping each vertex for the least of its class keeps the
//! path induced.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub fn find_induced_p5(g: &Graph) -> Option<[usize; 5]> {
    match g.adjacency_masks() {
        Some(adj) => find_in_masks(&adj, if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 }),
        None => find_in_sets(g, &twin_representatives(g)),
    }
}

pub fn is_p5_free(g: &Graph) -> bool {
    find_induced_p5(g).is_none()
}

/// Checks that `p` is an induced P5 of `g` in the given order.
pub fn is_induced_p5(g: &Graph, p: &[usize; 5]) -> bool {
    for i in 0..5 {
        for j in i + 1..5 {
            if p[i] == p[j] || g.has_edge(p[i], p[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn find_in_masks(adj: &[u64], allowed: u64) -> Option<[usize; 5]> {
    let bits = |m: u64| crate::bitset::mask_bits(m);
    // v2, v3, v4 are interior and need two neighbours.
    let inner = bits(allowed)
        .filter(|&v| (adj[v] & allowed).count_ones() >= 2)
        .fold(0u64, |acc, v| acc | 1 << v);
    for v1 in bits(allowed) {
        let c1 = adj[v1] | 1 << v1;
        for v2 in bits(adj[v1] & inner) {
            let c2 = c1 | adj[v2];
            for v3 in bits(adj[v2] & inner & !c1) {
                let c3 = c2 | adj[v3];
                for v4 in bits(adj[v3] & inner & allowed & !c2) {
                    let end = adj[v4] & allowed & !c3;
                    if end != 0 {
                        return Some([v1, v2, v3, v4, end.trailing_zeros() as usize]);
                    }
                }
            }
        }
    }
    None
}

fn find_in_sets(g: &Graph, allowed: &VertexSet) -> Option<[usize; 5]> {
    let nbr = |v: usize| g.neighbors(v).intersection(allowed);
    for v1 in allowed.iter() {
        let mut c1 = nbr(v1);
        c1.insert(v1);
        for v2 in nbr(v1).iter() {
            let c2 = c1.union(&nbr(v2));
            for v3 in nbr(v2).difference(&c1).iter() {
                let c3 = c2.union(&nbr(v3));
                for v4 in nbr(v3).difference(&c2).iter() {
                    if let Some(v5) = nbr(v4).difference(&c3).min() {
                        return Some([v1, v2, v3, v4, v5]);
                    }
                }
            }
        }
    }
    None
}

/// The least vertex of every class of false twins (equal open
/// neighbourhoods) and true twins (equal closed neighbourhoods).
fn twin_representatives(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut reps = VertexSet::empty(n);
    let mut open: HashMap<&VertexSet, usize> = HashMap::new();
    let mut closed: HashMap<VertexSet, usize> = HashMap::new();
    let mut parent: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if let Some(&u) = open.get(g.neighbors(v)) {
            parent[v] = u;
        } else {
            open.insert(g.neighbors(v), v);
        }
        let cn = g.closed_neighborhood(v);
        if let Some(&u) = closed.get(&cn) {
            parent[v] = parent[v].min(u);
        } else {
            closed.insert(cn, v);
        }
    }
    // Twin relations of either kind are transitive within their kind, and a
    // vertex cannot have both a false and a true twin, so one hop suffices.
    for (v, &p) in parent.iter().enumerate() {
        if p == v {
            reps.insert(v);
        }
    }
    reps
}
