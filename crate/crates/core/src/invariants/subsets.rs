//! α and ρ for every vertex subset of a small graph, by dynamic programming
//! over bitmasks.
//!
//! `α(S) = max(α(S−v), 1 + α(S∖N[v]))` with `v` the lowest vertex of `S`, and
//! `ρ(S) = max(ψ(S), max_v ρ(S−v))`. The table stores, for each `S`, a subset
//! of `S` attaining `ρ(S)`; exhaustive searches then compare ratios in
//! constant time.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::bitset::{mask_bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{cmp_small_ratio, Rational};

/// Largest graph a [`SubsetTable`] accepts.
pub const MAX_TABLE_VERTICES: usize = 20;

pub struct SubsetTable {
    n: usize,
    adj: Vec<u64>,
    alpha: Vec<u8>,
    witness: Vec<u32>,
}

impl SubsetTable {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > MAX_TABLE_VERTICES {
            return Err(Error::cap("subset table vertices", MAX_TABLE_VERTICES, n));
        }
        let adj = g.adjacency_masks().expect("n <= 20");
        let size = 1usize << n;
        let mut alpha = vec![0u8; size];
        for s in 1..size {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let take = 1 + alpha[rest & !(adj[v] as usize)];
            alpha[s] = alpha[rest].max(take);
        }
        let mut witness = vec![0u32; size];
        for s in 1..size {
            let mut best = s as u32;
            let mut m = s;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                m ^= bit;
                let w = witness[s ^ bit];
                if ratio_cmp(&alpha, w, best) == Ordering::Greater {
                    best = w;
                }
            }
            witness[s] = best;
        }
        Ok(SubsetTable {
            n,
            adj,
            alpha,
            witness,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Union of the neighbourhoods of the vertices of `s`, minus `s`.
    pub fn neighbourhood(&self, s: u64) -> u64 {
        mask_bits(s).fold(0, |acc, v| acc | self.adj[v]) & !s
    }

    /// Vertices outside `s` adjacent to every vertex of `s`.
    pub fn common_neighbourhood(&self, s: u64) -> u64 {
        mask_bits(s).fold(self.full(), |acc, v| acc & self.adj[v]) & !s
    }

    pub fn alpha(&self, s: u64) -> usize {
        self.alpha[s as usize] as usize
    }

    pub fn psi(&self, s: u64) -> Rational {
        if s == 0 {
            return Rational::zero();
        }
        Rational::new(s.count_ones() as i64, self.alpha(s) as i64)
    }

    /// `(|W|, α(W))` for a subset `W ⊆ s` attaining `ρ(s)`; `(0, 1)` for ∅.
    pub fn rho_pair(&self, s: u64) -> (u64, u64) {
        let w = self.witness[s as usize] as usize;
        if w == 0 {
            (0, 1)
        } else {
            (w.count_ones() as u64, self.alpha[w] as u64)
        }
    }

    pub fn rho(&self, s: u64) -> Rational {
        let (a, b) = self.rho_pair(s);
        Rational::new(a as i64, b as i64)
    }

    pub fn rho_witness(&self, s: u64) -> u64 {
        self.witness[s as usize] as u64
    }

    pub fn rho_cmp(&self, s: u64, t: u64) -> Ordering {
        let (a, b) = self.rho_pair(s);
        let (c, d) = self.rho_pair(t);
        cmp_small_ratio(a, b, c, d)
    }

    /// `ρ(s) ≥ num/den` for a non-negative fraction with small parts.
    pub fn rho_at_least(&self, s: u64, num: u64, den: u64) -> bool {
        let (a, b) = self.rho_pair(s);
        cmp_small_ratio(a, b, num, den) != Ordering::Less
    }

    /// `ρ(s) ≥ r` for an arbitrary rational.
    pub fn rho_at_least_rational(&self, s: u64, r: &Rational) -> bool {
        if !r.is_positive() {
            return true;
        }
        match (r.numer().to_u64(), r.denom().to_u64()) {
            (Some(num), Some(den)) => self.rho_at_least(s, num, den),
            _ => {
                let (a, b) = self.rho_pair(s);
                Rational::new(a as i64, b as i64) >= *r
            }
        }
    }

    /// Vertices reachable from `from` inside `allowed`.
    pub fn reach(&self, from: u64, allowed: u64) -> u64 {
        let mut seen = from & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let next = mask_bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self, s: u64) -> bool {
        s == 0 || self.reach(s & s.wrapping_neg(), s) == s
    }

    /// Components of G[s], ordered by least vertex.
    pub fn components(&self, mut s: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while s != 0 {
            let c = self.reach(s & s.wrapping_neg(), s);
            out.push(c);
            s &= !c;
        }
        out
    }

    pub fn to_set(&self, s: u64) -> VertexSet {
        VertexSet::from_mask(self.n, s)
    }
}

fn ratio_cmp(alpha: &[u8], s: u32, t: u32) -> Ordering {
    let pair = |w: u32| {
        if w == 0 {
            (0, 1)
        } else {
            (w.count_ones() as u64, alpha[w as usize] as u64)
        }
    };
    let (a, b) = pair(s);
    let (c, d) = pair(t);
    cmp_small_ratio(a, b, c, d)
}
