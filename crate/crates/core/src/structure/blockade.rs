//! Blockades and the complete-blockade search.

use serde::Serialize;

use crate::bitset::{mask_bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, PairRelation};
use crate::invariants::clique::max_clique;
use crate::invariants::hall::{hall_ratio, DEFAULT_HALL_CAP};
use crate::invariants::subsets::SubsetTable;
use crate::rational::Rational;
use crate::structure::pairs::SearchMode;

pub const MAX_EXHAUSTIVE_BLOCKADE_VERTICES: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockadeKind {
    Complete,
    Anticomplete,
}

/// Pairwise disjoint nonempty blocks, every pair of which has relation `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Blockade {
    pub blocks: Vec<VertexSet>,
    pub kind: BlockadeKind,
}

impl Blockade {
    /// Builds a blockade after checking disjointness and every pair relation.
    pub fn new(g: &Graph, blocks: Vec<VertexSet>, kind: BlockadeKind) -> Result<Self> {
        let want = match kind {
            BlockadeKind::Complete => PairRelation::Complete,
            BlockadeKind::Anticomplete => PairRelation::Anticomplete,
        };
        for (i, bi) in blocks.iter().enumerate() {
            if bi.is_empty() {
                return Err(Error::arg(format!("block {i} is empty")));
            }
            for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
                if bi.intersects(bj) {
                    return Err(Error::arg(format!("blocks {i} and {j} overlap")));
                }
                if g.pair_relation_unchecked(bi, bj) != want {
                    return Err(Error::arg(format!("blocks {i} and {j} are not {kind:?}")));
                }
            }
        }
        Ok(Blockade { blocks, kind })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockadeSearch {
    pub blockade: Option<Blockade>,
    pub complete: bool,
}

/// Finds a complete blockade with at least `k_min` blocks, each of Hall ratio
/// at least `min_rho`.
///
/// Exhaustive mode searches inclusion-minimal blocks (any qualifying block
/// contains one), ordered by their least vertex, and returns the first
/// blockade of exactly `k_min` blocks in that order.
pub fn find_complete_blockade(g: &Graph, k_min: usize, min_rho: &Rational, mode: SearchMode) -> Result<BlockadeSearch> {
    if k_min == 0 {
        return Err(Error::arg("k_min must be at least 1"));
    }
    match mode {
        SearchMode::Exhaustive => {
            if g.n() > MAX_EXHAUSTIVE_BLOCKADE_VERTICES {
                return Err(Error::cap(
                    "exhaustive blockade search vertices",
                    MAX_EXHAUSTIVE_BLOCKADE_VERTICES,
                    g.n(),
                ));
            }
            let t = SubsetTable::new(g)?;
            let blockade = exhaustive_blockade(&t, k_min, min_rho).map(|masks| Blockade {
                blocks: masks.into_iter().map(|m| t.to_set(m)).collect(),
                kind: BlockadeKind::Complete,
            });
            Ok(BlockadeSearch {
                blockade,
                complete: true,
            })
        }
        SearchMode::Heuristic => Ok(BlockadeSearch {
            blockade: heuristic_blockade(g, k_min, min_rho),
            complete: false,
        }),
    }
}

pub(crate) fn exhaustive_blockade(t: &SubsetTable, k_min: usize, min_rho: &Rational) -> Option<Vec<u64>> {
    let mut blocks = Vec::new();
    dfs(t, t.full(), 0, k_min, min_rho, &mut blocks).then_some(blocks)
}

/// Inclusion-minimal blocks inside `pool` whose least vertex is `m`, in
/// ascending mask order.
pub(crate) fn minimal_blocks_from(t: &SubsetTable, pool: u64, m: usize, min_rho: &Rational) -> Vec<u64> {
    let rest = pool & !(1u64 << m) & !((1u64 << m) - 1);
    let mut out = Vec::new();
    let mut sub = 0u64;
    loop {
        let blk = sub | 1 << m;
        if t.rho_at_least_rational(blk, min_rho)
            && mask_bits(blk).all(|v| !t.rho_at_least_rational(blk & !(1 << v), min_rho))
        {
            out.push(blk);
        }
        if sub == rest {
            break;
        }
        sub = sub.wrapping_sub(rest) & rest;
    }
    out
}

fn dfs(t: &SubsetTable, cand: u64, from: usize, k_min: usize, min_rho: &Rational, blocks: &mut Vec<u64>) -> bool {
    if blocks.len() >= k_min {
        return true;
    }
    let avail = cand & !((1u64 << from) - 1);
    for m in mask_bits(avail) {
        let pool = avail & !((1u64 << m) - 1);
        if !t.rho_at_least_rational(pool, min_rho) {
            break;
        }
        for blk in minimal_blocks_from(t, pool, m, min_rho) {
            blocks.push(blk);
            let next = cand & t.common_neighbourhood(blk);
            if dfs(t, next, m + 1, k_min, min_rho, blocks) {
                return true;
            }
            blocks.pop();
        }
    }
    false
}

fn rho_lower(g: &Graph, s: &VertexSet) -> Rational {
    if s.len() <= DEFAULT_HALL_CAP {
        hall_ratio(&g.induced(s)).expect("within cap").0
    } else {
        Rational::from(crate::invariants::clique::max_clique_within(g, s).len())
    }
}

/// Components of the complement are pairwise complete in `g`; falls back to
/// the singletons of a maximum clique when `min_rho ≤ 1`.
fn heuristic_blockade(g: &Graph, k_min: usize, min_rho: &Rational) -> Option<Blockade> {
    let blocks: Vec<VertexSet> = g
        .complement()
        .components()
        .into_iter()
        .filter(|c| rho_lower(g, c) >= *min_rho)
        .collect();
    if blocks.len() >= k_min {
        return Some(Blockade {
            blocks: blocks.into_iter().take(k_min).collect(),
            kind: BlockadeKind::Complete,
        });
    }
    let clique = max_clique(g);
    if *min_rho <= Rational::one() && clique.len() >= k_min {
        return Some(Blockade {
            blocks: clique.iter().take(k_min).map(|v| VertexSet::singleton(g.n(), v)).collect(),
            kind: BlockadeKind::Complete,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(g: &Graph, k: usize, r: Rational) -> Option<Vec<Vec<usize>>> {
        find_complete_blockade(g, k, &r, SearchMode::Exhaustive)
            .unwrap()
            .blockade
            .map(|b| b.blocks.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn worked_examples() {
        assert_eq!(run(&Graph::complete(4), 4, Rational::one()), Some(vec![vec![0], vec![1], vec![2], vec![3]]));
        assert_eq!(run(&Graph::empty(4), 2, Rational::one()), None);
        let jj = Graph::cycle(5).join(&Graph::cycle(5));
        assert_eq!(
            run(&jj, 2, Rational::new(5, 2)),
            Some(vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]])
        );
    }

    #[test]
    fn heuristic_and_cap() {
        let jj = Graph::cycle(5).join(&Graph::cycle(5)).join(&Graph::cycle(5));
        assert!(find_complete_blockade(&jj, 2, &Rational::one(), SearchMode::Exhaustive).is_err());
        let res = find_complete_blockade(&jj, 3, &Rational::new(5, 2), SearchMode::Heuristic).unwrap();
        assert!(!res.complete);
        let b = res.blockade.unwrap();
        assert_eq!(b.len(), 3);
        assert!(Blockade::new(&jj, b.blocks, BlockadeKind::Complete).is_ok());
    }

    #[test]
    fn constructor_validates() {
        let p3 = Graph::path(3);
        let s = |v: &[usize]| VertexSet::from_vertices(3, v.iter().copied());
        assert!(Blockade::new(&p3, vec![s(&[0]), s(&[1])], BlockadeKind::Complete).is_ok());
        assert!(Blockade::new(&p3, vec![s(&[0]), s(&[2])], BlockadeKind::Anticomplete).is_ok());
        assert!(Blockade::new(&p3, vec![s(&[0]), s(&[1, 2])], BlockadeKind::Complete).is_err());
        assert!(Blockade::new(&p3, vec![s(&[0]), s(&[0])], BlockadeKind::Complete).is_err());
    }

    fn brute_exists(g: &Graph, k: usize, r: &Rational) -> bool {
        // Assign each vertex to one of k blocks or to none.
        let n = g.n();
        let total = (k + 1).pow(n as u32);
        (0..total).any(|mut code| {
            let mut blocks = vec![VertexSet::empty(n); k];
            for v in 0..n {
                let c = code % (k + 1);
                code /= k + 1;
                if c > 0 {
                    blocks[c - 1].insert(v);
                }
            }
            blocks.iter().all(|b| !b.is_empty() && hall_ratio(&g.induced(b)).unwrap().0 >= *r)
                && Blockade::new(g, blocks, BlockadeKind::Complete).is_ok()
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(50))]
        #[test]
        fn exhaustive_is_complete(n in 1usize..7, bits in proptest::collection::vec(proptest::bool::ANY, 21), k in 2usize..4, r in 1i64..3) {
            let mut edges = Vec::new();
            let mut i = 0;
            for b in 1..n { for a in 0..b { if bits[i] { edges.push((a, b)); } i += 1; } }
            let g = Graph::from_edges(n, &edges).unwrap();
            let r = Rational::integer(r);
            let found = find_complete_blockade(&g, k, &r, SearchMode::Exhaustive).unwrap().blockade;
            proptest::prop_assert_eq!(found.is_some(), brute_exists(&g, k, &r));
            if let Some(b) = found {
                proptest::prop_assert_eq!(b.len(), k);
                for blk in &b.blocks {
                    proptest::prop_assert!(hall_ratio(&g.induced(blk)).unwrap().0 >= r);
                }
                proptest::prop_assert!(Blockade::new(&g, b.blocks, BlockadeKind::Complete).is_ok());
            }
        }
    }
}
