//! Fractional chromatic number and its LP-dual vertex weights.
//!
//! The covering LP `min Σ x_S  s.t.  Σ_{S ∋ v} x_S ≥ 1` is taken over the
//! maximal stable sets only; the solver works on its dual packing LP
//! `max Σ y_v  s.t.  y(S) ≤ 1`, and both optimal vectors come out of the same
//! tableau.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightFunction};
use crate::invariants::simplex::PackingLp;
use crate::invariants::stable_sets::{maximal_stable_sets, DEFAULT_MAX_STABLE_SETS};
use crate::rational::Rational;

/// Exact optimum of the stable-set covering LP together with its dual.
#[derive(Clone, Debug)]
pub struct FractionalSolution {
    pub value: Rational,
    pub stable_sets: Vec<VertexSet>,
    /// `x_S` for each maximal stable set, aligned with `stable_sets`.
    pub set_weights: Vec<Rational>,
    /// Optimal dual `y_v`.
    pub vertex_weights: Vec<Rational>,
}

/// An optimal fractional colouring: the stable sets with positive weight.
#[derive(Clone, Debug, Serialize)]
pub struct FractionalColouring {
    pub value: Rational,
    pub weights: Vec<(Vec<usize>, Rational)>,
}

/// Integer dual weights `f` with `f(V) ≥ value · f(I)` for every stable set `I`,
/// tight at `s_star`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub f: WeightFunction,
    pub s_star: VertexSet,
    pub value: Rational,
}

pub fn solve_fractional(g: &Graph) -> Result<FractionalSolution> {
    solve_fractional_capped(g, DEFAULT_MAX_STABLE_SETS)
}

pub fn solve_fractional_capped(g: &Graph, max_columns: usize) -> Result<FractionalSolution> {
    let n = g.n();
    if n == 0 {
        return Ok(FractionalSolution {
            value: Rational::zero(),
            stable_sets: Vec::new(),
            set_weights: Vec::new(),
            vertex_weights: Vec::new(),
        });
    }
    let sets = maximal_stable_sets(g, max_columns)?;
    let a: Vec<Vec<i64>> = sets
        .iter()
        .map(|s| (0..n).map(|v| i64::from(s.contains(v))).collect())
        .collect();
    let lp = PackingLp::new(a, vec![1; sets.len()], vec![1; n])?;
    let opt = lp.solve()?;
    Ok(FractionalSolution {
        value: opt.value,
        stable_sets: sets,
        set_weights: opt.dual,
        vertex_weights: opt.primal,
    })
}

/// χ*(G) with an optimal fractional colouring.
pub fn chi_star(g: &Graph) -> Result<FractionalColouring> {
    let sol = solve_fractional(g)?;
    let weights = sol
        .stable_sets
        .iter()
        .zip(&sol.set_weights)
        .filter(|(_, w)| w.is_positive())
        .map(|(s, w)| (s.to_vec(), w.clone()))
        .collect();
    Ok(FractionalColouring {
        value: sol.value,
        weights,
    })
}

/// Scales the optimal dual by the LCM of its denominators.
pub fn dual_weights(g: &Graph) -> Result<DualWitness> {
    if g.n() == 0 {
        return Err(Error::arg("dual_weights requires a non-null graph"));
    }
    dual_weights_from(&solve_fractional(g)?)
}

pub fn dual_weights_from(sol: &FractionalSolution) -> Result<DualWitness> {
    let lcm = sol
        .vertex_weights
        .iter()
        .fold(BigInt::one(), |acc, y| acc.lcm(y.denom()));
    let mut f = Vec::with_capacity(sol.vertex_weights.len());
    for y in &sol.vertex_weights {
        let scaled = y.numer() * (&lcm / y.denom());
        let w = scaled
            .to_u64()
            .ok_or_else(|| Error::cap("dual weight magnitude", u64::MAX as usize, usize::MAX))?;
        f.push(w);
    }
    let f = WeightFunction(f);
    // Complementary slackness: sets with positive x_S are tight. Pick the
    // first tight set in enumeration order.
    let max_weight = sol.stable_sets.iter().map(|s| f.of(s)).max().unwrap_or(0);
    let s_star = sol
        .stable_sets
        .iter()
        .find(|s| f.of(s) == max_weight)
        .cloned()
        .ok_or_else(|| Error::invariant("no stable set attains the dual maximum"))?;
    let witness = DualWitness {
        value: sol.value.clone(),
        f,
        s_star,
    };
    witness.check(&sol.stable_sets)?;
    Ok(witness)
}

impl DualWitness {
    /// Verifies `f(V) ≥ value · f(I)` for every given stable set and equality at `s_star`.
    pub fn check(&self, stable_sets: &[VertexSet]) -> Result<()> {
        let total = Rational::from(self.f.total() as usize);
        if !total.is_positive() {
            return Err(Error::invariant("dual weights have zero total"));
        }
        for s in stable_sets {
            if total < &self.value * Rational::from(self.f.of(s) as usize) {
                return Err(Error::invariant(format!(
                    "dual inequality fails on stable set {:?}",
                    s.to_vec()
                )));
            }
        }
        if total != &self.value * Rational::from(self.f.of(&self.s_star) as usize) {
            return Err(Error::invariant("dual inequality not tight at s_star"));
        }
        Ok(())
    }
}
