//! Every labelled graph on `n` vertices, in lexicographic order of the
//! graph6 bit string.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::p5::find_in_masks;

pub const MAX_ALL_GRAPHS_VERTICES: usize = 8;
pub const MAX_EXHAUSTIVE_P5_FREE_VERTICES: usize = 7;

/// Pairs `(i, j)`, `i < j`, in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
pub(crate) fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Iterator over adjacency masks of all labelled graphs on `n ≤ 8` vertices.
#[derive(Clone, Debug)]
pub struct AllMasks {
    n: usize,
    /// Pair for each bit of the code, most significant first in the graph6 string.
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl AllMasks {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ALL_GRAPHS_VERTICES {
            return Err(Error::cap("exhaustive graph enumeration vertices", MAX_ALL_GRAPHS_VERTICES, n));
        }
        let pairs = pair_order(n);
        Ok(AllMasks {
            n,
            end: 1u64 << pairs.len(),
            pairs,
            next: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        self.end == 0
    }

    fn masks_of(&self, code: u64) -> Vec<u64> {
        let m = self.pairs.len();
        let mut adj = vec![0u64; self.n];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if code >> (m - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        adj
    }
}

impl Iterator for AllMasks {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.next >= self.end {
            return None;
        }
        let adj = self.masks_of(self.next);
        self.next += 1;
        Some(adj)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// All `2^(n choose 2)` labelled graphs on `n ≤ 8` vertices.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(AllMasks::new(n)?.map(|m| Graph::from_masks(&m)))
}

/// All labelled P5-free graphs on `n ≤ 7` vertices, in the order of
/// [`all_graphs`].
pub fn exhaustive_p5_free(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_EXHAUSTIVE_P5_FREE_VERTICES {
        return Err(Error::cap(
            "exhaustive P5-free enumeration vertices",
            MAX_EXHAUSTIVE_P5_FREE_VERTICES,
            n,
        ));
    }
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    Ok(AllMasks::new(n)?
        .filter(move |m| find_in_masks(m, full).is_none())
        .map(|m| Graph::from_masks(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;
    use crate::structure::p5::find_induced_p5;

    #[test]
    fn counts() {
        assert_eq!(all_graphs(0).unwrap().count(), 1);
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert_eq!(exhaustive_p5_free(4).unwrap().count(), 64);
        assert!(all_graphs(9).is_err());
        assert!(exhaustive_p5_free(8).is_err());
    }

    #[test]
    fn lexicographic_and_distinct() {
        let codes: Vec<String> = all_graphs(4).unwrap().map(|g| to_graph6(&g)).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(codes[0], "C?");
        assert_eq!(codes[63], "C~");
    }

    #[test]
    fn n5_filter_agrees_with_detector() {
        let all: Vec<Graph> = all_graphs(5).unwrap().collect();
        let free: Vec<Graph> = exhaustive_p5_free(5).unwrap().collect();
        let expect: Vec<Graph> = all.into_iter().filter(|g| find_induced_p5(g).is_none()).collect();
        assert_eq!(free, expect);
        assert!(free.contains(&Graph::cycle(5)));
        assert!(!free.contains(&Graph::path(5)));
    }
}
