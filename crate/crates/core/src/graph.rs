//! Immutable simple graphs on vertices `0..n` with bitset adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Simple undirected graph. Adjacency rows are symmetric and loopless.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Largest graph [`Graph::blow_up`] will build.
pub const MAX_BLOWUP_VERTICES: usize = 100_000;

/// Non-negative integer vertex weights, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunction(pub Vec<u64>);

impl WeightFunction {
    pub fn uniform(n: usize, w: u64) -> Self {
        WeightFunction(vec![w; n])
    }

    /// Sum of the weights, saturating at `u64::MAX`.
    pub fn total(&self) -> u64 {
        self.0.iter().fold(0u64, |a, &w| a.saturating_add(w))
    }

    pub fn of(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.0[v]).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairRelation {
    Complete,
    Anticomplete,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SparsityClass {
    Sparse,
    Dense,
    Neither,
    Both,
}

impl SparsityClass {
    /// ε-restricted means sparse or dense.
    pub fn is_restricted(self) -> bool {
        self != SparsityClass::Neither
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph { n, adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex adjacency rows, validating symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let g = Graph { n: adj.len(), adj };
        g.validate()?;
        Ok(g)
    }

    /// Builds from low-bit masks; requires `n <= 64`. Panics on asymmetric input.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let adj = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
        let g = Graph { n, adj };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("valid petersen")
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Copy of this graph with one edge toggled.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n && v < self.n);
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
        g
    }

    /// Checks symmetry, looplessness and the universe of every row.
    pub fn validate(&self) -> Result<()> {
        for (v, row) in self.adj.iter().enumerate() {
            if row.universe() != self.n {
                return Err(Error::invariant(format!("row {v} has wrong universe")));
            }
            if row.contains(v) {
                return Err(Error::invariant(format!("loop at vertex {v}")));
            }
            for u in row {
                if !self.adj[u].contains(v) {
                    return Err(Error::invariant(format!("asymmetric edge {v}->{u}")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// N(v) as an owned set.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].clone()
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Union of N(v) over `s`, minus `s`.
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Vertices outside `s` adjacent to every vertex of `s`.
    pub fn common_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for v in s {
            out.intersect_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adj.iter().map(|r| r.mask()).collect())
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// G[s], relabelled to `0..|s|` in ascending order of `s`.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let verts = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let m = verts.len();
        let adj = verts
            .iter()
            .map(|&v| {
                let mut row = VertexSet::empty(m);
                for u in self.adj[v].iter().filter(|&u| s.contains(u)) {
                    row.insert(index[u]);
                }
                row
            })
            .collect();
        Graph { n: m, adj }
    }

    /// Replaces each vertex `v` by a stable set of size `f(v)`; new vertices are
    /// ordered by (original vertex, copy index).
    pub fn blow_up(&self, f: &WeightFunction) -> Result<Graph> {
        if f.len() != self.n {
            return Err(Error::arg(format!(
                "weight function has length {} but graph has {} vertices",
                f.len(),
                self.n
            )));
        }
        let total = f.total();
        if total > MAX_BLOWUP_VERTICES as u64 {
            return Err(Error::cap(
                "blow-up vertices",
                MAX_BLOWUP_VERTICES,
                usize::try_from(total).unwrap_or(usize::MAX),
            ));
        }
        let total = total as usize;
        let mut start = Vec::with_capacity(self.n);
        let mut acc = 0usize;
        for &w in &f.0 {
            start.push(acc);
            acc += w as usize;
        }
        let mut blocks = Vec::with_capacity(self.n);
        for v in 0..self.n {
            blocks.push(VertexSet::from_vertices(
                total,
                start[v]..start[v] + f.0[v] as usize,
            ));
        }
        let mut adj = vec![VertexSet::empty(total); total];
        for v in 0..self.n {
            let mut row = VertexSet::empty(total);
            for u in self.adj[v].iter() {
                row.union_with(&blocks[u]);
            }
            for copy in start[v]..start[v] + f.0[v] as usize {
                adj[copy] = row.clone();
            }
        }
        Ok(Graph { n: total, adj })
    }

    /// Disjoint union: `self` on `0..n1`, `other` on `n1..n1+n2`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let n1 = self.n;
        let n = n1 + other.n;
        let left = VertexSet::from_vertices(n, 0..n1);
        let right = VertexSet::from_vertices(n, n1..n);
        let mut adj = Vec::with_capacity(n);
        for v in 0..n1 {
            let mut row = VertexSet::from_vertices(n, self.adj[v].iter());
            if cross {
                row.union_with(&right);
            }
            adj.push(row);
        }
        for v in 0..other.n {
            let mut row = VertexSet::from_vertices(n, other.adj[v].iter().map(|u| u + n1));
            if cross {
                row.union_with(&left);
            }
            adj.push(row);
        }
        Graph { n, adj }
    }

    /// Connected components, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Components of G[s] as subsets of V(G), ordered by minimum vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach_within(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn reach_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Vertices reachable from any vertex of `from` inside `allowed`.
    pub fn reach_set_within(&self, from: &VertexSet, allowed: &VertexSet) -> VertexSet {
        let mut seen = from.intersection(allowed);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, &self.vertex_set()).len() == self.n
    }

    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.reach_within(v, s).len() == s.len(),
        }
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut need = s.clone();
            need.remove(v);
            need.is_subset(&self.adj[v])
        })
    }

    /// Relation between disjoint nonempty sets `a` and `b`.
    pub fn pair_relation(&self, a: &VertexSet, b: &VertexSet) -> Result<PairRelation> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::arg("pair_relation requires nonempty sides"));
        }
        if a.intersects(b) {
            return Err(Error::arg("pair_relation requires disjoint sides"));
        }
        Ok(self.pair_relation_unchecked(a, b))
    }

    pub(crate) fn pair_relation_unchecked(&self, a: &VertexSet, b: &VertexSet) -> PairRelation {
        let mut any = false;
        let mut all = true;
        for v in a {
            let k = self.adj[v].intersection_len(b);
            any |= k > 0;
            all &= k == b.len();
        }
        match (any, all) {
            (_, true) => PairRelation::Complete,
            (false, _) => PairRelation::Anticomplete,
            _ => PairRelation::Mixed,
        }
    }

    /// ε-sparse iff max degree ≤ ε|G|; dense iff the complement is ε-sparse.
    pub fn sparsity_class(&self, eps: &Rational) -> Result<SparsityClass> {
        if !eps.is_positive() || *eps > Rational::new(1, 2) {
            return Err(Error::arg(format!("eps must lie in (0, 1/2], got {eps}")));
        }
        Ok(self.sparsity_class_unchecked(eps))
    }

    pub(crate) fn sparsity_class_unchecked(&self, eps: &Rational) -> SparsityClass {
        let bound = eps * Rational::from(self.n);
        let sparse = Rational::from(self.max_degree()) <= bound;
        let co_max = (0..self.n)
            .map(|v| self.n - 1 - self.degree(v))
            .max()
            .unwrap_or(0);
        let dense = Rational::from(co_max) <= bound;
        match (sparse, dense) {
            (true, true) => SparsityClass::Both,
            (true, false) => SparsityClass::Sparse,
            (false, true) => SparsityClass::Dense,
            (false, false) => SparsityClass::Neither,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().edge_count(), 5);
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced(&c5.vertex_set()), c5);
        assert_eq!(c5.induced(&vs(5, &[0, 1, 2])), Graph::path(3));
        assert_eq!(Graph::path(5).induced(&vs(5, &[0, 2, 4])), Graph::empty(3));
    }

    #[test]
    fn blow_up_examples() {
        let k2 = Graph::complete(2);
        let j = k2.blow_up(&WeightFunction(vec![2, 3])).unwrap();
        assert_eq!(j.n(), 5);
        assert_eq!(j.edge_count(), 6);
        assert!(j.is_stable(&vs(5, &[0, 1])));
        assert!(j.is_stable(&vs(5, &[2, 3, 4])));

        let c5 = Graph::cycle(5);
        assert_eq!(c5.blow_up(&WeightFunction::uniform(5, 1)).unwrap(), c5);
        assert_eq!(
            c5.blow_up(&WeightFunction(vec![0, 0, 0, 0, 0])).unwrap().n(),
            0
        );
        assert!(c5.blow_up(&WeightFunction(vec![1, 2])).is_err());
        let huge = WeightFunction(vec![u64::MAX, 1, 1, 1, 1]);
        assert!(matches!(c5.blow_up(&huge), Err(Error::Capability { .. })));
        let over = WeightFunction(vec![MAX_BLOWUP_VERTICES as u64 - 3, 1, 1, 1, 1]);
        assert!(matches!(c5.blow_up(&over), Err(Error::Capability { .. })));
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.disjoint_union(&k1), Graph::empty(2));
        // join(K1, edgeless-2) is P3 with the centre relabelled to 0.
        let j = k1.join(&Graph::empty(2));
        assert_eq!(j.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn neighbourhoods_and_components() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.neighborhood(0).to_vec(), vec![1, 4]);
        let g = Graph::complete(2).disjoint_union(&Graph::complete(3));
        assert_eq!(g.components(), vec![vs(5, &[0, 1]), vs(5, &[2, 3, 4])]);
        assert!(!g.is_connected());
        assert_eq!(Graph::path(5).max_degree(), 2);
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn pair_relation_examples() {
        let c5 = Graph::cycle(5);
        let r = |a: &[usize], b: &[usize]| c5.pair_relation(&vs(5, a), &vs(5, b)).unwrap();
        assert_eq!(r(&[0], &[1]), PairRelation::Complete);
        assert_eq!(r(&[0], &[2, 3]), PairRelation::Anticomplete);
        assert_eq!(r(&[0], &[1, 2]), PairRelation::Mixed);
        assert!(c5.pair_relation(&vs(5, &[0]), &vs(5, &[0, 1])).is_err());
        assert!(c5.pair_relation(&vs(5, &[]), &vs(5, &[1])).is_err());
    }

    #[test]
    fn sparsity_examples() {
        let half = Rational::new(1, 2);
        let quarter = Rational::new(1, 4);
        assert_eq!(
            Graph::empty(4).sparsity_class(&half).unwrap(),
            SparsityClass::Sparse
        );
        assert_eq!(
            Graph::complete(4).sparsity_class(&half).unwrap(),
            SparsityClass::Dense
        );
        assert_eq!(
            Graph::cycle(5).sparsity_class(&quarter).unwrap(),
            SparsityClass::Neither
        );
        assert_eq!(
            Graph::complete(1).sparsity_class(&quarter).unwrap(),
            SparsityClass::Both
        );
        assert!(Graph::cycle(5).sparsity_class(&Rational::new(3, 4)).is_err());
        assert!(Graph::cycle(5).sparsity_class(&Rational::zero()).is_err());
    }

    #[test]
    fn validation_catches_asymmetry() {
        let mut rows = vec![VertexSet::empty(2); 2];
        rows[0].insert(1);
        assert!(Graph::from_adjacency(rows).is_err());
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
    }
}
