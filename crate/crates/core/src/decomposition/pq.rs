//! Exhaustive (p,q)-sparsity checks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::subsets::SubsetTable;
use crate::rational::Rational;

pub const MAX_PQ_VERTICES: usize = 14;

pub(crate) fn pq_table(g: &Graph) -> Result<SubsetTable> {
    if g.n() > MAX_PQ_VERTICES {
        return Err(Error::cap("(p,q)-sparsity check vertices", MAX_PQ_VERTICES, g.n()));
    }
    SubsetTable::new(g)
}

/// Connected nonempty subsets of `t` with `ρ ≥ q`, ascending.
fn heavy_connected<'a>(t: &'a SubsetTable, q: &Rational) -> impl Iterator<Item = u64> + 'a {
    let q = q.clone();
    (1..=t.full()).filter(move |&f| t.rho_at_least_rational(f, &q) && t.is_connected(f))
}

/// Submasks `x` of `f` paired with the part of `f` anticomplete to them.
fn splits(t: &SubsetTable, f: u64) -> impl Iterator<Item = (u64, u64)> + '_ {
    let mut sub = f;
    std::iter::from_fn(move || {
        if sub == 0 {
            return None;
        }
        let x = sub;
        sub = (sub - 1) & f;
        Some((x, f & !x & !t.neighbourhood(x)))
    })
}

pub(crate) fn pq_sparse_table(t: &SubsetTable, p: &Rational, q: &Rational) -> bool {
    heavy_connected(t, q).all(|f| {
        splits(t, f).any(|(x, rest)| t.rho_at_least_rational(x, p) && t.rho_at_least_rational(rest, p))
    })
}

fn check_pq(p: &Rational, q: &Rational) -> Result<()> {
    if !p.is_positive() || p > q {
        return Err(Error::arg(format!("need 0 < p <= q, got p={p}, q={q}")));
    }
    Ok(())
}

/// Whether every induced subgraph with `ρ ≥ q` has an anticomplete pair with
/// both sides of `ρ ≥ p`. Only connected subgraphs are inspected: `ρ` of a
/// graph is the largest `ρ` of its components.
pub fn check_pq_sparse(g: &Graph, p: &Rational, q: &Rational) -> Result<bool> {
    check_pq(p, q)?;
    Ok(pq_sparse_table(&pq_table(g)?, p, q))
}

/// The largest `p` for which `g` is (p,q)-sparse: the minimum over connected
/// `F` with `ρ(F) ≥ q` of `max_X min(ρ(X), ρ(F ∖ N[X]))`. `None` when no such
/// `F` exists, so every `p` works.
pub fn pq_sparsity_threshold(g: &Graph, q: &Rational) -> Result<Option<Rational>> {
    if !q.is_positive() {
        return Err(Error::arg(format!("q must be positive, got {q}")));
    }
    let t = pq_table(g)?;
    let mut best: Option<(u64, u64)> = None;
    for f in heavy_connected(&t, q) {
        let mut local = (0u64, 1u64);
        for (x, rest) in splits(&t, f) {
            let m = std::cmp::min_by(t.rho_pair(x), t.rho_pair(rest), |a, b| {
                crate::rational::cmp_small_ratio(a.0, a.1, b.0, b.1)
            });
            if crate::rational::cmp_small_ratio(m.0, m.1, local.0, local.1).is_gt() {
                local = m;
            }
        }
        if best.is_none_or(|b| crate::rational::cmp_small_ratio(local.0, local.1, b.0, b.1).is_lt()) {
            best = Some(local);
        }
    }
    Ok(best.map(|(a, b)| Rational::new(a as i64, b as i64)))
}

/// Connected `x ⊆ f` with `ρ(x) ≥ p` leaving a component of `ρ ≥ p` in
/// `f ∖ N[x]`; used to seed the decomposition.
pub(crate) fn anticomplete_components(t: &SubsetTable, x: u64, f: u64, p: &Rational) -> Vec<u64> {
    let rest = f & !x & !t.neighbourhood(x);
    t.components(rest)
        .into_iter()
        .filter(|&c| t.rho_at_least_rational(c, p))
        .collect()
}
