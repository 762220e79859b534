//! Corpus runners, verification suites and report types shared by the CLI.

pub mod decompose;
pub mod estimate;
pub mod report;
pub mod suites;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::hall::{DEFAULT_HALL_CAP, MAX_HALL_VERTICES};
use crate::invariants::stable_sets::DEFAULT_MAX_STABLE_SETS;
use crate::structure::blockade::MAX_EXHAUSTIVE_BLOCKADE_VERTICES;
use crate::structure::pairs::MAX_EXHAUSTIVE_PAIR_VERTICES;

pub use decompose::{decompose_corpus, DecomposeOptions, DecomposeRecord, DecomposeStatus};
pub use estimate::{estimate_d, ExponentSummary};
pub use report::{invariants_record, run_invariants, write_csv, InstanceRecord, Report, RunHeader, CSV_COLUMNS};
pub use suites::{run_suite, Suite, SuiteFailure, SuiteOptions, SuiteOutcome};

/// Size caps for the exponential searches; each may be lowered or raised up
/// to its hard ceiling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub hall: usize,
    pub pair: usize,
    pub blockade: usize,
    pub corpus: usize,
    pub stable_sets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            hall: DEFAULT_HALL_CAP,
            pair: MAX_EXHAUSTIVE_PAIR_VERTICES,
            blockade: MAX_EXHAUSTIVE_BLOCKADE_VERTICES,
            corpus: crate::generators::exhaustive::MAX_EXHAUSTIVE_P5_FREE_VERTICES,
            stable_sets: DEFAULT_MAX_STABLE_SETS,
        }
    }
}

impl Caps {
    /// Rejects values above the hard ceilings.
    pub fn validate(&self) -> Result<()> {
        let ceilings = [
            ("hall ratio cap", self.hall, MAX_HALL_VERTICES),
            ("pair search cap", self.pair, MAX_EXHAUSTIVE_PAIR_VERTICES),
            ("blockade search cap", self.blockade, MAX_EXHAUSTIVE_BLOCKADE_VERTICES),
            (
                "exhaustive corpus cap",
                self.corpus,
                crate::generators::exhaustive::MAX_EXHAUSTIVE_P5_FREE_VERTICES,
            ),
        ];
        for (what, got, cap) in ceilings {
            if got > cap {
                return Err(Error::cap(what, cap, got));
            }
        }
        if self.stable_sets == 0 {
            return Err(Error::arg("stable set cap must be positive"));
        }
        Ok(())
    }
}

/// A worker pool of `jobs` threads; 0 means one per available core.
pub fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::arg(format!("cannot start worker pool: {e}")))
}

/// Maps `f` over `items` on `pool`; results stay in input order.
pub(crate) fn ordered_map<T, R, F>(pool: &rayon::ThreadPool, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    pool.install(|| items.par_iter().map(f).collect())
}

/// Graphs of `corpus` in chunks, so the n = 7 stream never sits in memory.
pub(crate) fn for_each_chunk(
    corpus: impl Iterator<Item = Graph>,
    chunk: usize,
    mut f: impl FnMut(Vec<Graph>),
) {
    let mut buf = Vec::with_capacity(chunk);
    for g in corpus {
        buf.push(g);
        if buf.len() == chunk {
            f(std::mem::replace(&mut buf, Vec::with_capacity(chunk)));
        }
    }
    if !buf.is_empty() {
        f(buf);
    }
}
