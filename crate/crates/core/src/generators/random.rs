//! Seeded random graph models.

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::exhaustive::pair_order;
use crate::graph::{Graph, WeightFunction};
use crate::rational::Rational;
use crate::structure::p5::find_induced_p5;

pub const MAX_GNP_VERTICES: usize = 62;

/// The generator for instance `stream` of a run seeded with `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn check_p(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::arg(format!("edge probability must lie in [0, 1], got {p}")));
    }
    Ok(())
}

/// `⌊p·2⁶⁴⌋`, so that a uniform `u64` falls below it with probability exactly `p`.
fn threshold(p: &Rational) -> u128 {
    let scaled = p.numer() * (num_bigint::BigInt::from(1u8) << 64u32) / p.denom();
    scaled.to_u128().expect("p <= 1")
}

pub(crate) fn gnp_from(n: usize, p: &Rational, rng: &mut impl RngCore) -> Graph {
    let cut = threshold(p);
    let mut edges = Vec::new();
    for (i, j) in pair_order(n) {
        if (rng.next_u64() as u128) < cut {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

fn check_gnp(n: usize, p: &Rational) -> Result<()> {
    if n > MAX_GNP_VERTICES {
        return Err(Error::cap("random graph vertices", MAX_GNP_VERTICES, n));
    }
    check_p(p)
}

/// `G(n, p)`: each pair, in graph6 order, is an edge when the next draw of
/// ChaCha8 (stream 0 of `seed`) falls below `p·2⁶⁴`.
pub fn random_gnp(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    check_gnp(n, p)?;
    Ok(gnp_from(n, p, &mut rng_for(seed, 0)))
}

pub(crate) fn rejection_with(n: usize, p: &Rational, max_tries: usize, rng: &mut impl RngCore) -> Result<Graph> {
    check_gnp(n, p)?;
    if max_tries == 0 {
        return Err(Error::arg("max_tries must be at least 1"));
    }
    for _ in 0..max_tries {
        let g = gnp_from(n, p, rng);
        if find_induced_p5(&g).is_none() {
            return Ok(g);
        }
    }
    Err(Error::cap("P5-free rejection sampling tries", max_tries, max_tries))
}

/// Draws `G(n, p)` samples until one is P5-free.
pub fn rejection_p5_free(n: usize, p: &Rational, seed: u64, max_tries: usize) -> Result<Graph> {
    rejection_with(n, p, max_tries, &mut rng_for(seed, 0))
}

pub(crate) fn cograph_with(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let k = rng.random_range(1..n);
    let join = rng.random_bool(0.5);
    let left = cograph_with(k, rng);
    let right = cograph_with(n - k, rng);
    if join {
        left.join(&right)
    } else {
        left.disjoint_union(&right)
    }
}

fn verified(g: Graph, what: &str) -> Result<Graph> {
    g.validate()?;
    match find_induced_p5(&g) {
        None => Ok(g),
        Some(p) => Err(Error::Invariant {
            message: format!("{what} produced a graph with an induced P5"),
            p5: Some(p),
        }),
    }
}

/// A random cotree: split the vertex count at a uniform point, recurse, and
/// combine the halves by disjoint union or join with equal probability.
pub fn random_cograph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::arg("a cograph needs at least one vertex"));
    }
    verified(cograph_with(n, &mut rng_for(seed, 0)), "cograph generator")
}

pub(crate) fn triangle_free_complement_with(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut order = pair_order(n);
    order.shuffle(rng);
    let mut adj = vec![0u64; n];
    let mut big = Graph::empty(n);
    let small = n <= 64;
    for (i, j) in order {
        // Edges are only ever added, so a pair rejected once stays rejected;
        // one pass over a random order is the greedy triangle-free process.
        let closes = if small {
            adj[i] & adj[j] != 0
        } else {
            big.neighbors(i).intersects(big.neighbors(j))
        };
        if !closes {
            if small {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            } else {
                big = big.with_edge_toggled(i, j);
            }
        }
    }
    let base = if small { Graph::from_masks(&adj) } else { big };
    let g = base.complement();
    let alpha = crate::invariants::alpha(&g);
    if alpha > 2 {
        return Err(Error::invariant(format!("complement of a triangle-free graph has alpha {alpha}")));
    }
    verified(g, "triangle-free complement generator")
}

/// Complement of the random greedy triangle-free graph on `n` vertices;
/// `α ≤ 2` is checked on every output.
pub fn triangle_free_complement(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::arg("need at least one vertex"));
    }
    triangle_free_complement_with(n, &mut rng_for(seed, 0))
}

pub(crate) fn blowup_closure_with(base: &Graph, size_cap: usize, rng: &mut impl Rng) -> Result<Graph> {
    if let Some(p) = find_induced_p5(base) {
        return Err(Error::arg(format!("base graph is not P5-free: induced P5 {p:?}")));
    }
    if base.n() > size_cap {
        return Err(Error::arg(format!("base has {} vertices, above the size cap {size_cap}", base.n())));
    }
    let mut g = base.clone();
    let ops = rng.random_range(1..=3);
    for _ in 0..ops {
        let room = size_cap - g.n();
        match rng.random_range(0..3) {
            0 if g.n() > 0 => {
                let w = WeightFunction((0..g.n()).map(|_| rng.random_range(1..=3)).collect());
                if w.total() as usize <= size_cap {
                    g = g.blow_up(&w)?;
                }
            }
            1 if room > 0 => {
                let piece = cograph_with(rng.random_range(1..=room.min(4)), rng);
                g = g.disjoint_union(&piece);
            }
            2 if room > 0 => {
                let piece = cograph_with(rng.random_range(1..=room.min(4)), rng);
                g = g.join(&piece);
            }
            _ => {}
        }
    }
    verified(g, "blow-up closure")
}

/// One to three random steps, each a blow-up by weights in `1..=3`, a
/// disjoint union with a small random cograph, or a join with one. Steps that
/// would exceed `size_cap` vertices are skipped.
pub fn blowup_closure(base: &Graph, seed: u64, size_cap: usize) -> Result<Graph> {
    blowup_closure_with(base, size_cap, &mut rng_for(seed, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::to_graph6;
    use crate::invariants::{alpha, omega};

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn gnp_extremes_and_caps() {
        assert_eq!(random_gnp(8, &Rational::zero(), 1).unwrap(), Graph::empty(8));
        assert_eq!(random_gnp(8, &Rational::one(), 1).unwrap(), Graph::complete(8));
        assert!(random_gnp(63, &r(1, 2), 1).is_err());
        assert!(random_gnp(5, &r(3, 2), 1).is_err());
        assert_eq!(rejection_p5_free(9, &Rational::one(), 5, 1).unwrap(), Graph::complete(9));
    }

    #[test]
    fn gnp_is_deterministic_and_seed_sensitive() {
        let a = random_gnp(20, &r(1, 2), 42).unwrap();
        assert_eq!(a, random_gnp(20, &r(1, 2), 42).unwrap());
        assert_ne!(a, random_gnp(20, &r(1, 2), 43).unwrap());
        assert_ne!(rng_for(1, 0).next_u64(), rng_for(1, 1).next_u64());
    }

    #[test]
    fn rejection_reports_exhaustion() {
        // P5 appears in almost every sparse 40-vertex sample
        let err = rejection_p5_free(40, &r(1, 10), 3, 2).unwrap_err();
        assert!(err.to_string().contains("tries"), "{err}");
    }

    #[test]
    fn cographs() {
        assert_eq!(random_cograph(1, 9).unwrap(), Graph::empty(1));
        for seed in 0..50 {
            let g = random_cograph(12, seed).unwrap();
            assert_eq!(g.n(), 12);
            assert!(find_induced_p5(&g).is_none());
        }
        assert_eq!(to_graph6(&random_cograph(10, 7).unwrap()), to_graph6(&random_cograph(10, 7).unwrap()));
    }

    #[test]
    fn triangle_free_complements() {
        let pc = Graph::petersen().complement();
        assert_eq!((alpha(&pc), omega(&pc)), (2, 4));
        for seed in 0..20 {
            let g = triangle_free_complement(14, seed).unwrap();
            assert!(alpha(&g) <= 2);
            // a maximal triangle-free base has edges, so this is not complete
            assert!(g.edge_count() < 14 * 13 / 2);
        }
        assert!(triangle_free_complement(70, 1).is_ok());
    }

    #[test]
    fn blowup_closures() {
        let c5 = Graph::cycle(5);
        let b = c5.blow_up(&WeightFunction::uniform(5, 2)).unwrap();
        assert_eq!((b.n(), alpha(&b)), (10, 4));
        let k1 = Graph::complete(1);
        assert_eq!(k1.blow_up(&WeightFunction(vec![3])).unwrap(), Graph::empty(3));
        let u = c5.disjoint_union(&Graph::complete(1).join(&Graph::complete(1)));
        assert!(find_induced_p5(&u).is_none());
        for seed in 0..30 {
            let g = blowup_closure(&c5, seed, 30).unwrap();
            assert!(g.n() <= 30 && g.n() >= 5);
        }
        assert!(blowup_closure(&Graph::path(5), 1, 30).is_err());
    }
}
