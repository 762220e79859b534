//! Certificates for the three structural outcomes and an independent validator.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::invariants::hall::{hall_ratio_with, HallOptions, MAX_HALL_VERTICES};
use crate::rational::Rational;
use crate::structure::blockade::Blockade;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    AnticompletePair {
        a: VertexSet,
        b: VertexSet,
        rho_a: Rational,
        rho_b: Rational,
    },
    CompletePair {
        x: VertexSet,
        y: VertexSet,
        rho_x: Rational,
        rho_y: Rational,
        y_param: Rational,
    },
    CompleteBlockade {
        blockade: Blockade,
        per_block_rho: Vec<Rational>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::AnticompletePair { .. } => "anticomplete_pair",
            Certificate::CompletePair { .. } => "complete_pair",
            Certificate::CompleteBlockade { .. } => "complete_blockade",
        }
    }
}

/// One required inequality with both sides evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub inequality: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub(crate) fn ge(&mut self, inequality: impl Into<String>, lhs: Rational, rhs: Rational) {
        let pass = lhs >= rhs;
        self.push(inequality, lhs, rhs, pass);
    }

    pub(crate) fn same(&mut self, inequality: impl Into<String>, lhs: Rational, rhs: Rational) {
        let pass = lhs == rhs;
        self.push(inequality, lhs, rhs, pass);
    }

    pub(crate) fn lt(&mut self, inequality: impl Into<String>, lhs: Rational, rhs: Rational) {
        let pass = lhs < rhs;
        self.push(inequality, lhs, rhs, pass);
    }

    fn push(&mut self, inequality: impl Into<String>, lhs: Rational, rhs: Rational, pass: bool) {
        self.checks.push(Check {
            inequality: inequality.into(),
            lhs,
            rhs,
            pass,
        });
    }
}

/// ρ(G[s]) from scratch; `None` if `s` is too large for the exact search.
pub(crate) fn rho_of(g: &Graph, s: &VertexSet) -> Option<Rational> {
    let opts = HallOptions {
        cap: MAX_HALL_VERTICES,
        cancel: None,
    };
    hall_ratio_with(&g.induced(s), &opts).ok().map(|(r, _)| r)
}

fn count(n: usize) -> Rational {
    Rational::from(n)
}

/// Records `rho(name) = claimed` and returns the recomputed value.
pub(crate) fn claimed_rho(v: &mut Verdict, g: &Graph, name: &str, s: &VertexSet, claimed: &Rational) -> Rational {
    match rho_of(g, s) {
        Some(r) => {
            v.same(format!("claimed rho({name}) = rho({name})"), claimed.clone(), r.clone());
            r
        }
        None => {
            v.same(
                format!("rho({name}) computable (size {} within cap {MAX_HALL_VERTICES})", s.len()),
                count(s.len()),
                count(MAX_HALL_VERTICES),
            );
            claimed.clone()
        }
    }
}

fn first_pair(g: &Graph, a: &VertexSet, b: &VertexSet, want_edge: bool) -> Option<(usize, usize)> {
    a.iter()
        .flat_map(|u| b.iter().map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v) != want_edge)
}

pub(crate) fn relation(v: &mut Verdict, g: &Graph, an: &str, a: &VertexSet, bn: &str, b: &VertexSet, complete: bool) {
    let bad = a
        .iter()
        .map(|u| {
            let hits = g.neighbors(u).intersection_len(b);
            if complete {
                b.len() - hits
            } else {
                hits
            }
        })
        .sum::<usize>();
    let what = if complete { "non-edges" } else { "edges" };
    let text = match first_pair(g, a, b, complete) {
        Some((x, y)) => format!("cross {what} between {an} and {bn} = 0 (offending pair {x}-{y})"),
        None => format!("cross {what} between {an} and {bn} = 0"),
    };
    v.same(text, count(bad), Rational::zero());
}

/// Returns whether all of these checks passed.
pub(crate) fn disjoint_nonempty(v: &mut Verdict, g: &Graph, sets: &[(&str, &VertexSet)]) -> bool {
    let before = v.checks.len();
    for (name, s) in sets {
        v.ge(format!("|{name}| >= 1"), count(s.len()), Rational::one());
        if s.universe() != g.n() {
            v.same(format!("universe of {name} = |G|"), count(s.universe()), count(g.n()));
        }
    }
    for (i, (an, a)) in sets.iter().enumerate() {
        for (bn, b) in &sets[i + 1..] {
            v.same(format!("|{an} ∩ {bn}| = 0"), count(a.intersection_len(b)), Rational::zero());
        }
    }
    v.checks[before..].iter().all(|c| c.pass)
}

/// `ρ(B) ≥ k^{−d}·ρ(G)` decided exactly. For `d = a/b` this is
/// `ρ(B)^b · k^a ≥ ρ(G)^b`, all quantities being positive.
fn blockade_bound(v: &mut Verdict, name: &str, rho_b: &Rational, k: usize, rho_g: &Rational, d: &Rational) {
    use num_traits::ToPrimitive;
    let (Some(a), Some(b)) = (d.numer().to_i32(), d.denom().to_i32()) else {
        v.same("exponent d fits in 32-bit parts", Rational::zero(), Rational::one());
        return;
    };
    let k = Rational::from(k);
    if b == 1 {
        v.ge(format!("rho({name}) >= k^-d * rho(G)"), rho_b.clone(), k.pow(-a) * rho_g);
    } else {
        v.ge(
            format!("rho({name})^{b} * k^{a} >= rho(G)^{b}"),
            rho_b.pow(b) * k.pow(a),
            rho_g.pow(b),
        );
    }
}

/// Recomputes every relation and Hall ratio of `c` and lists each required
/// inequality. Complete pairs are held to `ρ(X) ≥ y⁹ρ(G)`,
/// `ρ(Y) ≥ (1−3y)ρ(G)` with `y ∈ (0, 1/4]`; blockades to `k ≥ 2` and
/// `ρ(B_i) ≥ k^{−d}ρ(G)`.
pub fn validate_certificate(g: &Graph, c: &Certificate, rho_g: &Rational, d: &Rational) -> Verdict {
    let mut v = Verdict::default();
    match rho_of(g, &g.vertex_set()) {
        Some(r) => v.same("claimed rho(G) = rho(G)", rho_g.clone(), r),
        None => v.same(
            format!("rho(G) computable (|G| = {} within cap {MAX_HALL_VERTICES})", g.n()),
            count(g.n()),
            count(MAX_HALL_VERTICES),
        ),
    }
    match c {
        Certificate::AnticompletePair { a, b, rho_a, rho_b } => {
            if disjoint_nonempty(&mut v, g, &[("A", a), ("B", b)]) {
                relation(&mut v, g, "A", a, "B", b, false);
                claimed_rho(&mut v, g, "A", a, rho_a);
                claimed_rho(&mut v, g, "B", b, rho_b);
            }
        }
        Certificate::CompletePair {
            x,
            y,
            rho_x,
            rho_y,
            y_param,
        } => {
            if disjoint_nonempty(&mut v, g, &[("X", x), ("Y", y)]) {
                relation(&mut v, g, "X", x, "Y", y, true);
                let rx = claimed_rho(&mut v, g, "X", x, rho_x);
                let ry = claimed_rho(&mut v, g, "Y", y, rho_y);
                v.lt("0 < y", Rational::zero(), y_param.clone());
                v.ge("1/4 >= y", Rational::new(1, 4), y_param.clone());
                v.ge("rho(X) >= y^9 * rho(G)", rx, y_param.pow(9) * rho_g);
                let one = Rational::one();
                v.ge("rho(Y) >= (1 - 3y) * rho(G)", ry, (one - Rational::integer(3) * y_param) * rho_g);
            }
        }
        Certificate::CompleteBlockade { blockade, per_block_rho } => {
            let k = blockade.blocks.len();
            v.ge("k >= 2", count(k), Rational::integer(2));
            v.same("per-block values listed = k", count(per_block_rho.len()), count(k));
            let names: Vec<String> = (1..=k).map(|i| format!("B{i}")).collect();
            let sets: Vec<(&str, &VertexSet)> = names.iter().map(|s| s.as_str()).zip(&blockade.blocks).collect();
            if disjoint_nonempty(&mut v, g, &sets) {
                for i in 0..k {
                    for j in i + 1..k {
                        relation(&mut v, g, sets[i].0, sets[i].1, sets[j].0, sets[j].1, true);
                    }
                }
                for (i, claimed) in per_block_rho.iter().enumerate() {
                    let r = claimed_rho(&mut v, g, sets[i].0, sets[i].1, claimed);
                    blockade_bound(&mut v, sets[i].0, &r, k, rho_g, d);
                }
            }
        }
    }
    v
}
