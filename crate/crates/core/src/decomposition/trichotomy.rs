//! Exhaustive search for the three certificate shapes: a large anticomplete
//! pair, a complete pair with the `y⁹ / (1−3y)` trade-off, or a complete
//! blockade with `ρ(B_i) ≥ k^{−d}ρ(G)`.

use serde::Serialize;

use crate::bitset::mask_cmp_lex;
use crate::decomposition::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::subsets::SubsetTable;
use crate::rational::Rational;
use crate::structure::blockade::{exhaustive_blockade, Blockade, BlockadeKind};
use crate::structure::p5::find_in_masks;

pub const MAX_TRICHOTOMY_VERTICES: usize = 14;

/// Default blockade exponent.
pub const DEFAULT_D: i64 = 9;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub subsets: u64,
    pub anticomplete_pairs: u64,
    pub complete_pairs: u64,
    pub feasible_complete_pairs: u64,
    pub blockade_thresholds: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrichotomyReport {
    pub rho_g: Rational,
    /// Anticomplete pair maximising `min(|A|, |B|)`.
    pub anticomplete_pair: Option<Certificate>,
    /// `min(|A|, |B|) / |G|` for that pair.
    pub size_fraction: Option<Rational>,
    /// Best complete pair valid for some `y ∈ (0, 1/4]`.
    pub complete_pair: Option<Certificate>,
    /// Complete blockade minimising the exponent it needs.
    pub complete_blockade: Option<Certificate>,
    /// Smallest `d` with `min_i ρ(B_i) ≥ k^{−d}ρ(G)` for that blockade.
    pub blockade_exponent: Option<f64>,
    pub blockade_valid: bool,
    /// Highest-priority valid certificate: complete pair, then blockade, then
    /// anticomplete pair. `None` is a counterexample to the trichotomy.
    pub chosen: Option<Certificate>,
    pub summary: SearchSummary,
}

pub fn trichotomy_search(g: &Graph, eps: &Rational) -> Result<TrichotomyReport> {
    trichotomy_search_with(g, eps, &Rational::integer(DEFAULT_D))
}

/// As [`trichotomy_search`] with blockades judged at exponent `d`.
pub fn trichotomy_search_with(g: &Graph, eps: &Rational, d: &Rational) -> Result<TrichotomyReport> {
    if g.n() < 2 {
        return Err(Error::arg("trichotomy search needs at least two vertices"));
    }
    if g.n() > MAX_TRICHOTOMY_VERTICES {
        return Err(Error::cap("trichotomy search vertices", MAX_TRICHOTOMY_VERTICES, g.n()));
    }
    if !eps.is_positive() || *eps > Rational::new(1, 2) {
        return Err(Error::arg(format!("eps must lie in (0, 1/2], got {eps}")));
    }
    if !d.is_positive() {
        return Err(Error::arg(format!("d must be positive, got {d}")));
    }
    let t = SubsetTable::new(g)?;
    if let Some(p) = find_in_masks(&(0..g.n()).map(|v| t.adj(v)).collect::<Vec<_>>(), t.full()) {
        return Err(Error::arg(format!("input is not P5-free: induced P5 {p:?}")));
    }
    let rho_g = t.rho(t.full());
    let mut summary = SearchSummary {
        subsets: t.full(),
        ..Default::default()
    };

    let anticomplete_pair = best_anticomplete_pair(&t, &mut summary);
    let size_fraction = anticomplete_pair.map(|(a, b)| {
        Rational::new(a.count_ones().min(b.count_ones()) as i64, g.n() as i64)
    });
    let anticomplete_pair = anticomplete_pair.map(|(a, b)| Certificate::AnticompletePair {
        a: t.to_set(a),
        b: t.to_set(b),
        rho_a: t.rho(a),
        rho_b: t.rho(b),
    });

    let complete_pair = best_complete_pair(&t, &rho_g, &mut summary).map(|(x, y, y_param)| Certificate::CompletePair {
        x: t.to_set(x),
        y: t.to_set(y),
        rho_x: t.rho(x),
        rho_y: t.rho(y),
        y_param,
    });

    let k_min = std::cmp::max(2, ceil(&eps.recip()));
    let blockade = best_blockade(&t, k_min, &rho_g, &mut summary);
    let blockade_valid = blockade
        .as_ref()
        .is_some_and(|(blocks, _)| blocks_valid_at(&t, blocks, &rho_g, d));
    let blockade_exponent = blockade.as_ref().map(|(_, e)| *e);
    let complete_blockade = blockade.map(|(blocks, _)| Certificate::CompleteBlockade {
        per_block_rho: blocks.iter().map(|&b| t.rho(b)).collect(),
        blockade: Blockade {
            blocks: blocks.iter().map(|&b| t.to_set(b)).collect(),
            kind: BlockadeKind::Complete,
        },
    });

    let chosen = complete_pair
        .clone()
        .or_else(|| complete_blockade.clone().filter(|_| blockade_valid))
        .or_else(|| anticomplete_pair.clone());
    Ok(TrichotomyReport {
        rho_g,
        anticomplete_pair,
        size_fraction,
        complete_pair,
        complete_blockade,
        blockade_exponent,
        blockade_valid,
        chosen,
        summary,
    })
}

fn ceil(r: &Rational) -> usize {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    r.numer().div_ceil(r.denom()).to_usize().unwrap_or(usize::MAX)
}

/// `A` ranges over nonempty sets, `B` is everything anticomplete to it.
/// Maximises `min(|A|, |B|)`, then prefers the lexicographically least `A`.
fn best_anticomplete_pair(t: &SubsetTable, summary: &mut SearchSummary) -> Option<(u64, u64)> {
    let mut best: Option<(u32, u64, u64)> = None;
    for a in 1..=t.full() {
        let b = t.full() & !a & !t.neighbourhood(a);
        if b == 0 {
            continue;
        }
        summary.anticomplete_pairs += 1;
        let m = a.count_ones().min(b.count_ones());
        let better = match best {
            None => true,
            Some((bm, ba, _)) => m > bm || (m == bm && mask_cmp_lex(a, ba).is_lt()),
        };
        if better {
            best = Some((m, a, b));
        }
    }
    best.map(|(_, a, b)| (a, b))
}

/// The `y` at which `(x, y)` certifies, if any: `1/4` when it works, otherwise
/// the least `y` allowed by `ρ(Y) ≥ (1−3y)ρ(G)`; when that bound is vacuous,
/// `1/4` is halved until `y⁹ρ(G) ≤ ρ(X)`.
pub(crate) fn complete_pair_y(rho_x: &Rational, rho_y: &Rational, rho_g: &Rational) -> Option<Rational> {
    let one = Rational::one();
    let three = Rational::integer(3);
    let x_ok = |y: &Rational| y.pow(9) * rho_g <= *rho_x;
    let y_ok = |y: &Rational| (&one - &three * y) * rho_g <= *rho_y;
    let quarter = Rational::new(1, 4);
    if x_ok(&quarter) && y_ok(&quarter) {
        return Some(quarter);
    }
    let y_lo = (&one - rho_y / rho_g) / &three;
    if y_lo.is_positive() {
        return (y_lo <= quarter && x_ok(&y_lo)).then_some(y_lo);
    }
    let mut y = quarter;
    let half = Rational::new(1, 2);
    while !x_ok(&y) {
        y = y * &half;
    }
    Some(y)
}

/// `X` ranges over nonempty sets with `Y = ` common neighbourhood nonempty.
/// Ranks feasible pairs by `ρ(Y)`, then `ρ(X)`, then the first `X` in mask order.
fn best_complete_pair(t: &SubsetTable, rho_g: &Rational, summary: &mut SearchSummary) -> Option<(u64, u64, Rational)> {
    let mut best: Option<(u64, u64, Rational)> = None;
    for x in 1..=t.full() {
        let y = t.common_neighbourhood(x);
        if y == 0 {
            continue;
        }
        summary.complete_pairs += 1;
        if let Some((bx, by, _)) = &best {
            let rank = t.rho_cmp(y, *by).then(t.rho_cmp(x, *bx));
            if rank.is_le() {
                continue;
            }
        }
        if let Some(yp) = complete_pair_y(&t.rho(x), &t.rho(y), rho_g) {
            summary.feasible_complete_pairs += 1;
            best = Some((x, y, yp));
        }
    }
    best
}

fn exponent_needed(rho_g: &Rational, min_rho: &Rational, k: usize) -> f64 {
    let e = (rho_g.to_f64() / min_rho.to_f64()).ln() / (k as f64).ln();
    e.max(0.0)
}

/// For each distinct value `τ` of `ρ` over subsets, the largest `k ≥ k_min`
/// admitting a complete blockade with all blocks of `ρ ≥ τ`. Keeps the one
/// needing the smallest exponent, preferring larger `k` on ties.
fn best_blockade(t: &SubsetTable, k_min: usize, rho_g: &Rational, summary: &mut SearchSummary) -> Option<(Vec<u64>, f64)> {
    let mut values: Vec<(u64, u64)> = (1..=t.full()).map(|s| t.rho_pair(s)).collect();
    values.sort_by(|a, b| crate::rational::cmp_small_ratio(a.0, a.1, b.0, b.1));
    values.dedup_by(|a, b| crate::rational::cmp_small_ratio(a.0, a.1, b.0, b.1).is_eq());
    let mut best: Option<(Vec<u64>, f64, usize)> = None;
    for (num, den) in values {
        summary.blockade_thresholds += 1;
        let tau = Rational::new(num as i64, den as i64);
        let Some(mut blocks) = exhaustive_blockade(t, k_min, &tau) else {
            continue;
        };
        while let Some(more) = exhaustive_blockade(t, blocks.len() + 1, &tau) {
            blocks = more;
        }
        let min_rho = blocks.iter().map(|&b| t.rho(b)).min().expect("k >= 2");
        let k = blocks.len();
        let e = exponent_needed(rho_g, &min_rho, k);
        let better = match &best {
            None => true,
            Some((_, be, bk)) => e < *be - 1e-12 || ((e - be).abs() <= 1e-12 && k > *bk),
        };
        if better {
            best = Some((blocks, e, k));
        }
    }
    best.map(|(b, e, _)| (b, e))
}

fn blocks_valid_at(t: &SubsetTable, blocks: &[u64], rho_g: &Rational, d: &Rational) -> bool {
    use num_traits::ToPrimitive;
    let k = Rational::from(blocks.len());
    let (Some(a), Some(b)) = (d.numer().to_i32(), d.denom().to_i32()) else {
        return false;
    };
    let rhs = rho_g.pow(b);
    let scale = k.pow(a);
    blocks.iter().all(|&blk| t.rho(blk).pow(b) * &scale >= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::certificate::validate_certificate;

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn c5_complete_pair() {
        let g = Graph::cycle(5);
        let rep = trichotomy_search(&g, &half()).unwrap();
        assert_eq!(rep.rho_g, Rational::new(5, 2));
        match rep.chosen.as_ref().unwrap() {
            Certificate::CompletePair { x, y, y_param, .. } => {
                assert_eq!(x.to_vec(), vec![0]);
                assert_eq!(y.to_vec(), vec![1, 4]);
                assert_eq!(*y_param, Rational::new(1, 4));
            }
            c => panic!("unexpected {c:?}"),
        }
        let v = validate_certificate(&g, rep.chosen.as_ref().unwrap(), &rep.rho_g, &Rational::integer(9));
        assert!(v.all_pass());
    }

    #[test]
    fn two_triangles_anticomplete_half() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let rep = trichotomy_search(&g, &half()).unwrap();
        assert_eq!(rep.size_fraction, Some(half()));
        match rep.anticomplete_pair.unwrap() {
            Certificate::AnticompletePair { a, b, .. } => {
                assert_eq!(a.to_vec(), vec![0, 1, 2]);
                assert_eq!(b.to_vec(), vec![3, 4, 5]);
            }
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn star_centre_and_leaves() {
        let g = Graph::complete(1).join(&Graph::empty(3));
        let rep = trichotomy_search(&g, &half()).unwrap();
        assert_eq!(rep.rho_g, Rational::integer(2));
        match rep.chosen.unwrap() {
            Certificate::CompletePair { x, y, rho_y, .. } => {
                assert_eq!(x.to_vec(), vec![0]);
                assert_eq!(y.to_vec(), vec![1, 2, 3]);
                assert_eq!(rho_y, Rational::one());
            }
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn complete_graph_blockade() {
        let rep = trichotomy_search(&Graph::complete(5), &half()).unwrap();
        assert!(rep.blockade_valid);
        assert_eq!(rep.blockade_exponent, Some(1.0));
        match rep.complete_blockade.unwrap() {
            Certificate::CompleteBlockade { blockade, .. } => assert_eq!(blockade.len(), 5),
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn rejects_p5_and_bad_arguments() {
        match trichotomy_search(&Graph::path(5), &half()) {
            Err(Error::Argument(m)) => assert!(m.contains("[0, 1, 2, 3, 4]"), "{m}"),
            r => panic!("unexpected {r:?}"),
        }
        assert!(trichotomy_search(&Graph::complete(1), &half()).is_err());
        assert!(trichotomy_search(&Graph::cycle(5), &Rational::one()).is_err());
        assert!(trichotomy_search(&Graph::complete(15), &half()).is_err());
    }

    #[test]
    fn y_choice() {
        let r = Rational::new;
        assert_eq!(complete_pair_y(&r(1, 1), &r(1, 1), &r(5, 2)), Some(r(1, 4)));
        // rho(Y) = rho(G) makes the Y bound vacuous; y shrinks for tiny rho(X)
        let y = complete_pair_y(&r(1, 1), &r(1000, 1), &r(1000, 1)).unwrap();
        assert!(y.pow(9) * r(1000, 1) <= r(1, 1));
        assert!(y <= r(1, 4));
        assert_eq!(complete_pair_y(&r(1, 1), &r(1, 10), &r(1, 1)), None);
        // 1/4 fails on X since 4^-9 * 2 * 4^9 > 1; the Y bound then forces 1/6
        assert_eq!(complete_pair_y(&r(1, 1), &r(262144, 1), &r(524288, 1)), Some(r(1, 6)));
    }
}
