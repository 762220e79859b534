//! Deterministic corpus generation: exhaustive small graphs, random models
//! and constructions closed under P5-freeness.

pub mod exhaustive;
pub mod random;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

pub use exhaustive::{all_graphs, exhaustive_p5_free, AllMasks};
pub use random::{
    blowup_closure, random_cograph, random_gnp, rejection_p5_free, rng_for, triangle_free_complement,
};

/// Samples drawn before rejection sampling gives up.
pub const DEFAULT_MAX_TRIES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    AllGraphs,
    Gnp,
    Cograph,
    TriangleFreeComplement,
    BlowupClosure,
    RejectionP5Free,
}

impl GenKind {
    pub const NAMES: [&'static str; 6] = ["all", "gnp", "cograph", "tfc", "blowup", "rejection"];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::AllGraphs => "all",
            GenKind::Gnp => "gnp",
            GenKind::Cograph => "cograph",
            GenKind::TriangleFreeComplement => "tfc",
            GenKind::BlowupClosure => "blowup",
            GenKind::RejectionP5Free => "rejection",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" | "all-graphs" => GenKind::AllGraphs,
            "gnp" => GenKind::Gnp,
            "cograph" => GenKind::Cograph,
            "tfc" | "triangle-free-complement" => GenKind::TriangleFreeComplement,
            "blowup" | "blowup-closure" => GenKind::BlowupClosure,
            "rejection" | "rejection-p5-free" => GenKind::RejectionP5Free,
            _ => {
                return Err(Error::arg(format!(
                    "unknown generator kind {s:?}; expected one of {}",
                    GenKind::NAMES.join(", ")
                )))
            }
        })
    }
}

/// What to generate. Random kinds produce `count` graphs; graph `i` draws
/// from stream `i` of `seed`. Blow-up closures start from C5 (K1 below five
/// vertices) and treat `n` as the size cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub p: Option<Rational>,
    pub seed: u64,
    pub count: usize,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Vec<Graph>> {
        if self.kind == GenKind::AllGraphs {
            return Ok(all_graphs(self.n)?.collect());
        }
        if self.count == 0 {
            return Err(Error::arg("count must be at least 1 for random generators"));
        }
        let p = match self.kind {
            GenKind::Gnp | GenKind::RejectionP5Free => Some(
                self.p
                    .clone()
                    .ok_or_else(|| Error::arg(format!("generator {} needs an edge probability", self.kind)))?,
            ),
            _ => None,
        };
        if matches!(self.kind, GenKind::Cograph | GenKind::TriangleFreeComplement) && self.n == 0 {
            return Err(Error::arg(format!("generator {} needs n >= 1", self.kind)));
        }
        if matches!(self.kind, GenKind::Gnp | GenKind::RejectionP5Free) && self.n > random::MAX_GNP_VERTICES {
            return Err(Error::cap("random graph vertices", random::MAX_GNP_VERTICES, self.n));
        }
        (0..self.count as u64)
            .map(|i| {
                let mut rng = rng_for(self.seed, i);
                match self.kind {
                    GenKind::Gnp => Ok(random::gnp_from(self.n, p.as_ref().expect("checked"), &mut rng)),
                    GenKind::RejectionP5Free => {
                        random::rejection_with(self.n, p.as_ref().expect("checked"), DEFAULT_MAX_TRIES, &mut rng)
                    }
                    GenKind::Cograph => Ok(random::cograph_with(self.n, &mut rng)),
                    GenKind::TriangleFreeComplement => random::triangle_free_complement_with(self.n, &mut rng),
                    GenKind::BlowupClosure => random::blowup_closure_with(&closure_base(self.n), self.n, &mut rng),
                    GenKind::AllGraphs => unreachable!(),
                }
            })
            .collect()
    }
}

fn closure_base(cap: usize) -> Graph {
    if cap >= 5 {
        Graph::cycle(5)
    } else {
        Graph::complete(cap.min(1))
    }
}

/// `count` P5-free graphs on `1..=n_max` vertices, cycling through cographs,
/// triangle-free complements, blow-up closures of C5 and rejection-sampled
/// `G(n, 1/2)`. Graph `i` uses stream `i` of `seed`.
pub fn random_p5_free_corpus(count: usize, n_max: usize, seed: u64) -> Result<Vec<Graph>> {
    if n_max == 0 || n_max > random::MAX_GNP_VERTICES {
        return Err(Error::arg(format!("n_max must lie in 1..={}", random::MAX_GNP_VERTICES)));
    }
    (0..count as u64)
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let n = rng.random_range(1..=n_max);
            match i % 4 {
                0 => Ok(random::cograph_with(n, &mut rng)),
                1 => random::triangle_free_complement_with(n, &mut rng),
                2 => random::blowup_closure_with(&closure_base(n), n, &mut rng),
                _ => random::rejection_with(n, &Rational::new(1, 2), DEFAULT_MAX_TRIES, &mut rng),
            }
        })
        .collect()
}
