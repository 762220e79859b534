//! Verification suites over the exhaustive corpus and seeded random instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::decomposition::certificate::validate_certificate;
use crate::decomposition::phi::{induction_step_inequality, phi, phi_lower_bound_check, y_grid};
use crate::decomposition::trichotomy::trichotomy_search_with;
use crate::error::{Error, Result};
use crate::experiments::report::invariants_record;
use crate::experiments::{for_each_chunk, ordered_map, pool, Caps};
use crate::generators::{exhaustive_p5_free, random_p5_free_corpus, rng_for};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::fractional::{dual_weights_from, solve_fractional_capped};
use crate::invariants::{alpha, omega};
use crate::rational::Rational;
use crate::structure::comb::{comb, validate_comb, CombOutcome};
use crate::structure::cutset::{cutset_attachment_split, cutset_checks, minimal_cutset};
use crate::structure::p5::find_induced_p5;

/// Largest vertex count of the random graphs mixed into corpus suites.
pub const RANDOM_N_MAX: usize = 10;
/// Exhaustive part of the blow-up suite stops here.
pub const BLOWUP_EXHAUSTIVE_N_MAX: usize = 6;
const CHUNK: usize = 4096;
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Chain,
    Trichotomy,
    Comb,
    BlowupEquiv,
    Phi,
    InductionStep,
    Cutset,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Chain,
        Suite::Trichotomy,
        Suite::Comb,
        Suite::BlowupEquiv,
        Suite::Phi,
        Suite::InductionStep,
        Suite::Cutset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chain => "chain",
            Suite::Trichotomy => "trichotomy",
            Suite::Comb => "comb",
            Suite::BlowupEquiv => "blowup-equiv",
            Suite::Phi => "phi",
            Suite::InductionStep => "induction-step",
            Suite::Cutset => "cutset",
        }
    }

    /// Random instances used when none are requested.
    pub fn default_random(self) -> usize {
        match self {
            Suite::Comb => 500,
            Suite::Chain | Suite::Trichotomy | Suite::BlowupEquiv => 200,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::arg(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest order of the exhaustive corpus.
    pub n_max: usize,
    /// Seeded random instances; `None` uses the suite default.
    pub random: Option<usize>,
    pub seed: u64,
    pub eps: Rational,
    pub d: Rational,
    pub jobs: usize,
    pub caps: Caps,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: 7,
            random: None,
            seed: 0,
            eps: Rational::new(1, 2),
            d: Rational::integer(9),
            jobs: 0,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub graph6: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    /// Instances checked (not counting skipped ones).
    pub instances: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<SuiteFailure>,
    /// Suite-specific tallies.
    pub counts: BTreeMap<String, u64>,
}

impl SuiteOutcome {
    fn new(suite: Suite) -> Self {
        SuiteOutcome {
            suite: suite.name().to_string(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, graph6: Option<String>, message: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(SuiteFailure { graph6, message });
        }
    }

    fn tally(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn absorb(&mut self, g: &Graph, r: Verdict) {
        match r {
            Verdict::Skip => self.tally("skipped", 1),
            Verdict::Pass(tags) => {
                self.instances += 1;
                for (k, v) in tags {
                    self.tally(k, v);
                }
            }
            Verdict::Fail(msg) => {
                self.instances += 1;
                self.fail(Some(to_graph6(g)), msg);
            }
        }
    }
}

/// Per-instance result of a corpus check.
enum Verdict {
    Skip,
    Pass(Vec<(&'static str, u64)>),
    Fail(String),
}

fn pass(tag: &'static str) -> Verdict {
    Verdict::Pass(vec![(tag, 1)])
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteOutcome> {
    opts.caps.validate()?;
    let exhaustive = match suite {
        Suite::BlowupEquiv => opts.n_max.min(BLOWUP_EXHAUSTIVE_N_MAX),
        Suite::Comb | Suite::Phi | Suite::InductionStep => 0,
        _ => opts.n_max,
    };
    if exhaustive > opts.caps.corpus {
        return Err(Error::cap("exhaustive corpus order", opts.caps.corpus, exhaustive));
    }
    let random = opts.random.unwrap_or(suite.default_random());
    let pool = pool(opts.jobs)?;
    let mut out = SuiteOutcome::new(suite);
    match suite {
        Suite::Chain => corpus(&pool, opts.n_max, random, opts.seed, &mut out, |g| chain_check(g, &opts.caps))?,
        Suite::Trichotomy => corpus(&pool, opts.n_max, random, opts.seed, &mut out, |g| {
            trichotomy_check(g, &opts.eps, &opts.d)
        })?,
        Suite::BlowupEquiv => corpus(&pool, exhaustive, random, opts.seed, &mut out, |g| {
            blowup_check(g, &opts.caps)
        })?,
        Suite::Cutset => {
            let before = cutset_checks();
            corpus(&pool, opts.n_max, random, opts.seed, &mut out, cutset_check)?;
            let calls = out.counts.get("cutsets").copied().unwrap_or(0);
            let verified = cutset_checks() - before;
            out.tally("postcondition_checks", verified);
            if verified < calls {
                out.fail(None, format!("{calls} cutsets computed but only {verified} re-verified"));
            }
        }
        Suite::Comb => {
            let items: Vec<u64> = (0..random as u64).collect();
            for (i, r) in ordered_map(&pool, &items, |&i| comb_check(opts.seed, i)).into_iter().enumerate() {
                out.instances += 1;
                match r {
                    Ok(tag) => out.tally(tag, 1),
                    Err(m) => out.fail(None, format!("instance {i} (seed {}, stream {i}): {m}", opts.seed)),
                }
            }
        }
        Suite::Phi => phi_suite(&mut out)?,
        Suite::InductionStep => {
            for y in y_grid(1000) {
                out.instances += 1;
                if !induction_step_inequality(&y)? {
                    out.fail(None, format!("1 - 3y < (1 - y)^9 at y = {y}"));
                }
            }
        }
    }
    Ok(out)
}

/// Runs `check` over the exhaustive corpus on `0..=n_max` vertices followed by
/// `random` seeded P5-free graphs on at most [`RANDOM_N_MAX`] vertices.
fn corpus<F>(
    pool: &rayon::ThreadPool,
    n_max: usize,
    random: usize,
    seed: u64,
    out: &mut SuiteOutcome,
    check: F,
) -> Result<()>
where
    F: Fn(&Graph) -> Verdict + Sync + Send,
{
    for n in 0..=n_max {
        let before = out.instances;
        for_each_chunk(exhaustive_p5_free(n)?, CHUNK, |chunk| {
            for (g, r) in chunk.iter().zip(ordered_map(pool, &chunk, &check)) {
                out.absorb(g, r);
            }
        });
        out.tally(&format!("exhaustive_n{n}"), out.instances - before);
    }
    if random > 0 {
        let gs = random_p5_free_corpus(random, RANDOM_N_MAX, seed)?;
        let before = out.instances;
        for (g, r) in gs.iter().zip(ordered_map(pool, &gs, &check)) {
            out.absorb(g, r);
        }
        out.tally("random", out.instances - before);
    }
    Ok(())
}

fn chain_check(g: &Graph, caps: &Caps) -> Verdict {
    if g.n() == 0 {
        return Verdict::Skip;
    }
    match invariants_record(0, g, caps) {
        Ok(r) if r.hall_ratio.is_some() && r.chi_star.is_some() => pass("checked"),
        Ok(r) => Verdict::Fail(format!("chain not fully computed: {:?}", r.notes)),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn trichotomy_check(g: &Graph, eps: &Rational, d: &Rational) -> Verdict {
    if g.n() < 2 || !g.is_connected() || omega(g) < 2 {
        return Verdict::Skip;
    }
    let report = match trichotomy_search_with(g, eps, d) {
        Ok(r) => r,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let Some(c) = &report.chosen else {
        return Verdict::Fail(format!("no certificate; search summary {:?}", report.summary));
    };
    let v = validate_certificate(g, c, &report.rho_g, d);
    if !v.all_pass() {
        let failed: Vec<String> = v.failures().map(|c| c.inequality.clone()).collect();
        return Verdict::Fail(format!("{} fails validation: {failed:?}", c.kind()));
    }
    let mut tags = vec![(c.kind(), 1)];
    if report.blockade_valid {
        tags.push(("blockade_valid", 1));
    }
    if report.complete_blockade.is_some() {
        tags.push(("blockade_found", 1));
    }
    Verdict::Pass(tags)
}

fn blowup_check(g: &Graph, caps: &Caps) -> Verdict {
    if g.n() == 0 {
        return Verdict::Skip;
    }
    let run = || -> Result<Option<String>> {
        let sol = solve_fractional_capped(g, caps.stable_sets)?;
        let w = dual_weights_from(&sol)?;
        let j = g.blow_up(&w.f)?;
        if let Some(p) = find_induced_p5(&j) {
            return Ok(Some(format!("blow-up contains an induced P5 {p:?}")));
        }
        let psi = Rational::new(j.n() as i64, alpha(&j) as i64);
        if psi != sol.value {
            return Ok(Some(format!("psi(blow-up) = {psi} but chi* = {}", sol.value)));
        }
        Ok(None)
    };
    match run() {
        Ok(None) => pass("checked"),
        Ok(Some(m)) => Verdict::Fail(m),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

/// Every vertex `v` against every component of `G − N[v]`.
fn cutset_check(g: &Graph) -> Verdict {
    if g.n() == 0 || !g.is_connected() {
        return Verdict::Skip;
    }
    let mut calls = 0;
    let mut splits = 0;
    for v in 0..g.n() {
        let a = VertexSet::singleton(g.n(), v);
        let rest = g.closed_neighborhood(v).complement();
        for b in g.components_within(&rest) {
            calls += 1;
            let s = match minimal_cutset(g, &a, &b) {
                Ok(s) => s,
                Err(e) => return Verdict::Fail(format!("minimal_cutset({v}, {:?}): {e}", b.to_vec())),
            };
            if let Err(e) = cutset_attachment_split(g, &s, &a, &b) {
                return Verdict::Fail(format!("attachment split at {v} vs {:?}: {e}", b.to_vec()));
            }
            splits += 1;
        }
    }
    Verdict::Pass(vec![("cutsets", calls), ("attachment_splits", splits)])
}

/// A random instance satisfying the comb preconditions: anchors `0..k`, `B`
/// after them, every `B` vertex adjacent to some anchor.
fn comb_instance(seed: u64, i: u64) -> (Graph, VertexSet, VertexSet, Rational, Rational) {
    let mut rng = rng_for(seed, i);
    let k = rng.random_range(1..=6usize);
    let m = rng.random_range(1..=40usize);
    let n = k + m;
    let density = rng.random_range(1..=8u32) as f64 / 8.0;
    let mut edges = Vec::new();
    for x in k..n {
        let mut any = false;
        for a in 0..k {
            if rng.random_bool(density / k as f64) {
                edges.push((a, x));
                any = true;
            }
        }
        if !any {
            edges.push((rng.random_range(0..k), x));
        }
        for y in x + 1..n {
            if rng.random_bool(0.3) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("in range");
    let anchors = VertexSet::from_vertices(n, 0..k);
    let b = VertexSet::from_vertices(n, k..n);
    let max_deg = (0..k).map(|a| g.neighbors(a).intersection_len(&b)).max().unwrap_or(0);
    let delta = Rational::from(max_deg.max(1) + rng.random_range(0..=2usize));
    let gamma = Rational::new(rng.random_range(1..=400i64), rng.random_range(1..=8i64));
    (g, anchors, b, delta, gamma)
}

fn comb_check(seed: u64, i: u64) -> std::result::Result<&'static str, String> {
    let (g, anchors, b, delta, gamma) = comb_instance(seed, i);
    let out = comb(&g, &anchors, &b, &delta, &gamma).map_err(|e| e.to_string())?;
    validate_comb(&g, &b, &delta, &gamma, &out).map_err(|e| e.to_string())?;
    let nb = Rational::from(b.len());
    match out {
        CombOutcome::SmallB if &nb * &nb >= Rational::integer(400) * &gamma * &delta => {
            Err("SmallB with |B|^2 >= 400 Gamma Delta".to_string())
        }
        CombOutcome::SmallB => Ok("small_b"),
        CombOutcome::Teeth { .. } => Ok("teeth"),
    }
}

fn phi_suite(out: &mut SuiteOutcome) -> Result<()> {
    for r in 0..=8 {
        for s in r..=8 {
            out.instances += 1;
            if !phi_lower_bound_check(r, s)? {
                out.fail(None, format!("phi({r},{s}) < 1 - 2^(-1-2^{r})"));
            }
            for t in s..=8 {
                out.instances += 1;
                if phi(r, s)? * phi(s, t)? != phi(r, t)? {
                    out.fail(None, format!("phi({r},{s}) phi({s},{t}) != phi({r},{t})"));
                }
            }
        }
    }
    Ok(())
}
