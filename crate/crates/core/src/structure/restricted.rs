//! Largest ε-restricted (ε-sparse or (1−ε)-dense) induced subgraph.

use crate::bitset::{mask_bits, mask_cmp_lex, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, SparsityClass};
use crate::rational::Rational;

pub const MAX_EXHAUSTIVE_RESTRICTED_VERTICES: usize = 18;

/// Exhaustive up to 18 vertices: the largest restricted set, lexicographically
/// least among those. Above that, greedy peeling of the worst vertex in `g`
/// and in its complement, keeping the larger result.
pub fn find_eps_restricted_subgraph(g: &Graph, eps: &Rational) -> Result<(VertexSet, SparsityClass)> {
    if !eps.is_positive() || *eps > Rational::new(1, 2) {
        return Err(Error::arg(format!("eps must lie in (0, 1/2], got {eps}")));
    }
    let set = if g.n() == 0 {
        VertexSet::empty(0)
    } else if g.n() <= MAX_EXHAUSTIVE_RESTRICTED_VERTICES {
        exhaustive(g, eps)
    } else {
        let sparse = peel(g, eps);
        let dense = peel(&g.complement(), eps);
        if dense.len() > sparse.len() {
            dense
        } else {
            sparse
        }
    };
    let class = g.induced(&set).sparsity_class_unchecked(eps);
    Ok((set, class))
}

fn restricted_mask(adj: &[u64], s: u64, num: u128, den: u128) -> bool {
    let size = s.count_ones() as u128;
    let bound = |d: u32| (d as u128) * den <= num * size;
    let max_deg = mask_bits(s).map(|v| (adj[v] & s).count_ones()).max().unwrap_or(0);
    let max_co = mask_bits(s)
        .map(|v| size as u32 - 1 - (adj[v] & s).count_ones())
        .max()
        .unwrap_or(0);
    bound(max_deg) || bound(max_co)
}

fn exhaustive(g: &Graph, eps: &Rational) -> VertexSet {
    use num_traits::ToPrimitive;
    let adj = g.adjacency_masks().expect("n <= 18");
    let num = eps.numer().to_u128().expect("eps <= 1/2");
    let den = eps.denom().to_u128().unwrap_or(u128::MAX);
    let full = (1u64 << g.n()) - 1;
    let mut best = 1u64;
    for s in 1..=full {
        let better = s.count_ones() > best.count_ones()
            || (s.count_ones() == best.count_ones() && mask_cmp_lex(s, best).is_lt());
        if better && restricted_mask(&adj, s, num, den) {
            best = s;
        }
    }
    VertexSet::from_mask(g.n(), best)
}

/// Deletes a maximum-degree vertex (least index on ties) until ε-sparse.
fn peel(g: &Graph, eps: &Rational) -> VertexSet {
    let mut s = g.vertex_set();
    loop {
        let (worst, deg) = s
            .iter()
            .map(|v| (v, g.neighbors(v).intersection_len(&s)))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("nonempty");
        if Rational::from(deg) <= eps * Rational::from(s.len()) {
            return s;
        }
        s.remove(worst);
    }
}
