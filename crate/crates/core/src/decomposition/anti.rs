//! Decomposition of a connected (p,q)-sparse P5-free graph along high-ρ
//! anticomplete pairs, ending in one of three certificates:
//!
//! 1. an anticomplete pair `(A, B)` with `ρ(A) ≥ q − 2ε⁸ρ(G)` and
//!    `ρ(B) ≥ (1−ε²)ρ(G)`;
//! 2. a complete pair `(X, Y)` with `ρ(X) ≥ ε⁸ρ(G)` and `ρ(Y) ≥ p`;
//! 3. a complete blockade of `ℓ ≥ 1/ε` blocks with `ρ(X_i) ≥ ℓ⁻⁸ρ(G)`.
//!
//! The engine maintains a partition `(A, D, B_1, …, B_k, E)` where `D`
//! separates the other parts, and shrinks `A` while `ρ(A) ≥ q`. Outcome 2 is
//! returned as soon as a cutset or attachment set is heavy enough for it.

use serde::Serialize;

use crate::bitset::{mask_bits, mask_cmp_lex, VertexSet};
use crate::decomposition::certificate::{claimed_rho, disjoint_nonempty, relation, Certificate, Verdict};
use crate::decomposition::pq::{anticomplete_components, pq_sparse_table, pq_table};
use crate::decomposition::trichotomy::complete_pair_y;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::subsets::SubsetTable;
use crate::rational::Rational;
use crate::structure::blockade::{Blockade, BlockadeKind};
use crate::structure::comb::{comb, CombOutcome};
use crate::structure::cutset::{cutset_attachment_split, verify_minimal_cutset, Attachment};
use crate::structure::p5::find_in_masks;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub a: VertexSet,
    pub d: VertexSet,
    pub b: Vec<VertexSet>,
    pub e: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// "initial" or "grow".
    pub step: String,
    /// Minimal cutset found inside the previous `A` (all of `G` initially).
    pub cutset: VertexSet,
    pub partition: Partition,
    pub rho_a: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntiDecomposition {
    /// 1, 2 or 3, matching the module documentation.
    pub outcome: u8,
    pub certificate: Certificate,
    /// The outcome's thresholds, recomputed from scratch.
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
    /// Vertices of `D` with a neighbour in the final `A`, when reached.
    pub attachment: Option<VertexSet>,
    pub rho_g: Rational,
}

struct Params {
    eps: Rational,
    p: Rational,
    q: Rational,
    rho_g: Rational,
    /// `ε⁸ρ(G)`.
    e8: Rational,
    /// `max(p, q − 2ε⁸ρ(G))`.
    thr_a: Rational,
}

#[derive(Clone, Debug)]
struct Part {
    a: u64,
    d: u64,
    b: Vec<u64>,
    e: u64,
}

struct Split {
    s: u64,
    a: u64,
    b: u64,
    /// Cutset vertices complete to `a`; the others are complete to `b`.
    s_a: u64,
}

pub fn anti_decompose(g: &Graph, eps: &Rational, p: &Rational, q: &Rational) -> Result<AntiDecomposition> {
    let t = pq_table(g)?;
    if !eps.is_positive() || *eps > Rational::new(1, 2) {
        return Err(Error::arg(format!("eps must lie in (0, 1/2], got {eps}")));
    }
    if !p.is_positive() || p > q {
        return Err(Error::arg(format!("need 0 < p <= q, got p={p}, q={q}")));
    }
    if g.n() == 0 || !t.is_connected(t.full()) {
        return Err(Error::arg("input graph must be nonempty and connected"));
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| t.adj(v)).collect();
    if let Some(w) = find_in_masks(&adj, t.full()) {
        return Err(Error::arg(format!("input is not P5-free: induced P5 {w:?}")));
    }
    let rho_g = t.rho(t.full());
    let one = Rational::one();
    let eps2 = eps.pow(2);
    let q_max = (&one - &eps2) * &rho_g;
    if *q > q_max {
        return Err(Error::arg(format!("need q <= (1 - eps^2) rho(G) = {q_max}, got q={q}")));
    }
    if !pq_sparse_table(&t, p, q) {
        return Err(Error::arg(format!("graph is not ({p},{q})-sparse")));
    }
    let e8 = eps.pow(8) * &rho_g;
    let thr_a = p.clone().max(q - Rational::integer(2) * &e8);
    let prm = Params {
        eps: eps.clone(),
        p: p.clone(),
        q: q.clone(),
        rho_g,
        e8,
        thr_a,
    };
    Engine { g, t: &t, prm: &prm, trace: Vec::new() }.run()
}

struct Engine<'a> {
    g: &'a Graph,
    t: &'a SubsetTable,
    prm: &'a Params,
    trace: Vec<TraceStep>,
}

impl Engine<'_> {
    fn run(mut self) -> Result<AntiDecomposition> {
        let t = self.t;
        let full = t.full();
        let first = self.split(full)?;
        if !t.rho_at_least_rational(first.a, &self.prm.thr_a) {
            return self.pair_from_split(&first);
        }
        let mut part = self.extend(Part { a: 0, d: 0, b: vec![], e: 0 }, &first, full);
        self.record("initial", first.s, &part)?;

        while t.rho_at_least_rational(part.a, &self.prm.q) {
            let sp = self.split(part.a)?;
            if !t.rho_at_least_rational(sp.a, &self.prm.thr_a) {
                return self.pair_from_split(&sp);
            }
            let region = part.a;
            part = self.extend(part, &sp, region);
            self.record("grow", sp.s, &part)?;
        }
        self.finish(part)
    }

    /// The new partition after cutting `region` (the old `A`) at `sp.s`.
    fn extend(&self, old: Part, sp: &Split, region: u64) -> Part {
        let t = self.t;
        let mut b = old.b;
        let mut e = old.e;
        for c in t.components(region & !sp.a & !sp.s) {
            if t.rho_at_least_rational(c, &self.prm.p) {
                b.push(c);
            } else {
                e |= c;
            }
        }
        b.sort_by_key(|m| m.trailing_zeros());
        Part {
            a: sp.a,
            d: old.d | sp.s,
            b,
            e,
        }
    }

    /// Inside connected `f` with `ρ(f) ≥ q`: the connected `A` of largest `ρ`
    /// (lexicographically least on ties) with a component `B` of `f ∖ N[A]`
    /// of `ρ ≥ p`, the minimal cutset between them, and both sides enlarged
    /// to their components of `f ∖ S`.
    fn split(&self, f: u64) -> Result<Split> {
        let t = self.t;
        let p = &self.prm.p;
        let mut best: Option<(u64, u64)> = None;
        let mut x = f;
        while x != 0 {
            if t.rho_at_least_rational(x, p) && t.is_connected(x) {
                let better = match best {
                    None => true,
                    Some((bx, _)) => match t.rho_cmp(x, bx) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Equal => mask_cmp_lex(x, bx).is_lt(),
                        std::cmp::Ordering::Less => false,
                    },
                };
                if better {
                    if let Some(&b) = anticomplete_components(t, x, f, p).first() {
                        best = Some((x, b));
                    }
                }
            }
            x = (x - 1) & f;
        }
        let (a, b) = best.ok_or_else(|| {
            Error::invariant(format!(
                "no anticomplete pair with both sides of rho >= {p} inside {:?}",
                t.to_set(f).to_vec()
            ))
        })?;

        let sep = |s: u64| t.reach(a, f & !s) & b == 0;
        let mut s = t.neighbourhood(a) & f;
        for v in mask_bits(s) {
            if sep(s & !(1 << v)) {
                s &= !(1 << v);
            }
        }
        let h = self.restricted(f);
        let (ss, sa, sb) = (t.to_set(s), t.to_set(a), t.to_set(b));
        verify_minimal_cutset(&h, &ss, &sa, &sb)?;
        let a = t.reach(a, f & !s);
        let b = t.reach(b, f & !s);
        let s_a = cutset_attachment_split(&h, &ss, &t.to_set(a), &t.to_set(b))?
            .into_iter()
            .filter(|(_, k)| *k == Attachment::CompleteToA)
            .fold(0u64, |m, (v, _)| m | 1 << v);
        Ok(Split { s, a, b, s_a })
    }

    /// `G[f]` on the original vertex labels, other vertices isolated.
    fn restricted(&self, f: u64) -> Graph {
        let masks: Vec<u64> = (0..self.g.n())
            .map(|v| if f >> v & 1 == 1 { self.t.adj(v) & f } else { 0 })
            .collect();
        Graph::from_masks(&masks)
    }

    fn heavy(&self, x: u64) -> bool {
        x != 0 && self.t.rho_at_least_rational(x, &self.prm.e8)
    }

    /// A light side forces a heavy cutset half, which is complete to its side.
    fn pair_from_split(self, sp: &Split) -> Result<AntiDecomposition> {
        let s_b = sp.s & !sp.s_a;
        if self.heavy(sp.s_a) {
            return self.complete_pair(sp.s_a, sp.a, None);
        }
        if self.heavy(s_b) {
            return self.complete_pair(s_b, sp.b, None);
        }
        Err(Error::invariant(format!(
            "side {:?} has rho below {} yet both cutset halves have rho below {}",
            self.t.to_set(sp.a).to_vec(),
            self.prm.thr_a,
            self.prm.e8
        )))
    }

    fn finish(self, part: Part) -> Result<AntiDecomposition> {
        let t = self.t;
        let prm = self.prm;
        let s = mask_bits(part.d)
            .filter(|&v| t.adj(v) & part.a != 0)
            .fold(0u64, |m, v| m | 1 << v);
        let rest = t.full() & !part.a & !s;
        let one = Rational::one();
        let eps2 = prm.eps.pow(2);
        if t.rho_at_least_rational(part.a, &(&prm.q - Rational::integer(2) * &prm.e8))
            && t.rho_at_least_rational(rest, &((&one - &eps2) * &prm.rho_g))
        {
            let cert = Certificate::AnticompletePair {
                a: t.to_set(part.a),
                b: t.to_set(rest),
                rho_a: t.rho(part.a),
                rho_b: t.rho(rest),
            };
            return self.done(1, cert, Some(s));
        }

        let mixed = mask_bits(s)
            .filter(|&v| t.adj(v) & part.a != part.a)
            .fold(0u64, |m, v| m | 1 << v);
        if self.heavy(s & !mixed) {
            return self.complete_pair(s & !mixed, part.a, Some(s));
        }
        let s0 = t.rho_witness(mixed);
        let mut anchors = 0u64;
        for &bi in &part.b {
            let si = mask_bits(s0)
                .filter(|&v| t.adj(v) & bi == bi)
                .fold(0u64, |m, v| m | 1 << v);
            if let Some(v) = mask_bits(s0).find(|&v| t.adj(v) & bi != 0 && t.adj(v) & bi != bi) {
                return Err(Error::Invariant {
                    message: format!("attachment vertex {v} is mixed on both A and a B block"),
                    p5: find_in_masks(&(0..self.g.n()).map(|u| t.adj(u)).collect::<Vec<_>>(), t.full()),
                });
            }
            if self.heavy(si) {
                return self.complete_pair(si, bi, Some(s));
            }
            anchors |= bi & bi.wrapping_neg();
        }
        if s0 == 0 {
            return Err(Error::invariant(format!(
                "final pair fails outcome 1 but the attachment set {:?} has no mixed vertex",
                t.to_set(s).to_vec()
            )));
        }

        let size = Rational::from(s0.count_ones() as usize);
        let eps6 = prm.eps.pow(6);
        let delta = Rational::new(16, 15) * &eps6 * &size;
        let gamma = Rational::new(3, 1280) * eps6.recip() * &size;
        let outcome = comb(self.g, &t.to_set(anchors), &t.to_set(s0), &delta, &gamma)?;
        let CombOutcome::Teeth { blocks, .. } = outcome else {
            return Err(Error::invariant(format!(
                "comb returned a small attachment set although |S0|^2 = 400 Gamma Delta (|S0| = {})",
                s0.count_ones()
            )));
        };
        let l = blocks.len();
        let l_min = Rational::from(l) >= prm.eps.recip();
        let per_block_rho: Vec<Rational> = blocks.iter().map(|b| t.rho(b.mask())).collect();
        let bound = Rational::from(l).pow(-8) * &prm.rho_g;
        if !l_min || per_block_rho.iter().any(|r| *r < bound) {
            return Err(Error::invariant(format!("comb teeth give {l} blocks below the blockade thresholds")));
        }
        let blockade = Blockade::new(self.g, blocks, BlockadeKind::Complete)
            .map_err(|e| Error::invariant(format!("comb teeth are not a complete blockade: {e}")))?;
        self.done(3, Certificate::CompleteBlockade { blockade, per_block_rho }, Some(s))
    }

    fn complete_pair(self, x: u64, y: u64, attachment: Option<u64>) -> Result<AntiDecomposition> {
        let t = self.t;
        let (rho_x, rho_y) = (t.rho(x), t.rho(y));
        let y_param = complete_pair_y(&rho_x, &rho_y, &self.prm.rho_g).unwrap_or_else(|| Rational::new(1, 4));
        let cert = Certificate::CompletePair {
            x: t.to_set(x),
            y: t.to_set(y),
            rho_x,
            rho_y,
            y_param,
        };
        self.done(2, cert, attachment)
    }

    fn done(self, outcome: u8, certificate: Certificate, attachment: Option<u64>) -> Result<AntiDecomposition> {
        let verdict = lemma_verdict(self.g, &certificate, self.prm);
        if !verdict.all_pass() {
            let failed: Vec<_> = verdict.failures().map(|c| c.inequality.clone()).collect();
            return Err(Error::invariant(format!("outcome {outcome} certificate fails: {failed:?}")));
        }
        Ok(AntiDecomposition {
            outcome,
            certificate,
            verdict,
            trace: self.trace,
            attachment: attachment.map(|s| self.t.to_set(s)),
            rho_g: self.prm.rho_g.clone(),
        })
    }

    fn record(&mut self, step: &str, cutset: u64, part: &Part) -> Result<()> {
        validate_partition(self.t, part, self.prm)?;
        let t = self.t;
        self.trace.push(TraceStep {
            step: step.to_string(),
            cutset: t.to_set(cutset),
            partition: Partition {
                a: t.to_set(part.a),
                d: t.to_set(part.d),
                b: part.b.iter().map(|&m| t.to_set(m)).collect(),
                e: t.to_set(part.e),
            },
            rho_a: t.rho(part.a),
        });
        Ok(())
    }
}

fn violated(what: &str) -> Error {
    Error::invariant(format!("partition property violated: {what}"))
}

/// Checks a partition `(A, D, B_1, …, B_k, E)` against every defining property.
fn validate_partition(t: &SubsetTable, part: &Part, prm: &Params) -> Result<()> {
    if part.a == 0 || part.d == 0 || part.b.is_empty() || part.b.contains(&0) {
        return Err(violated("A, D and every B_i are nonempty, k >= 1"));
    }
    let mut seen = 0u64;
    for m in std::iter::once(part.a).chain([part.d, part.e]).chain(part.b.iter().copied()) {
        if seen & m != 0 {
            return Err(violated("parts are pairwise disjoint"));
        }
        seen |= m;
    }
    if seen != t.full() {
        return Err(violated("parts cover V(G)"));
    }
    let parts: Vec<u64> = std::iter::once(part.a).chain(part.b.iter().copied()).chain([part.e]).collect();
    for c in t.components(t.full() & !part.d) {
        if parts.iter().filter(|&&m| m & c != 0).count() != 1 {
            return Err(violated("D separates A, B_1..B_k and E"));
        }
    }
    if !t.is_connected(part.a) || part.b.iter().any(|&b| !t.is_connected(b)) {
        return Err(violated("A and every B_i induce connected subgraphs"));
    }
    let all_b = part.b.iter().fold(0u64, |m, &b| m | b);
    if mask_bits(part.d).any(|v| t.adj(v) & all_b == 0) {
        return Err(violated("every vertex of D has a neighbour in B_1..B_k"));
    }
    if part.e != 0 && t.rho_at_least_rational(part.e, &prm.p) {
        return Err(violated("rho(E) < p"));
    }
    if part.b.iter().any(|&b| !t.rho_at_least_rational(b, &prm.p)) {
        return Err(violated("rho(B_i) >= p"));
    }
    if !t.rho_at_least_rational(part.a, &prm.thr_a) {
        return Err(violated("rho(A) >= max(p, q - 2 eps^8 rho(G))"));
    }
    Ok(())
}

/// The thresholds of the three outcomes, with relations and `ρ` values
/// recomputed on induced subgraphs.
fn lemma_verdict(g: &Graph, c: &Certificate, prm: &Params) -> Verdict {
    let mut v = Verdict::default();
    let one = Rational::one();
    match c {
        Certificate::AnticompletePair { a, b, rho_a, rho_b } => {
            let _ = disjoint_nonempty(&mut v, g, &[("A", a), ("B", b)]);
            relation(&mut v, g, "A", a, "B", b, false);
            let ra = claimed_rho(&mut v, g, "A", a, rho_a);
            let rb = claimed_rho(&mut v, g, "B", b, rho_b);
            v.ge("rho(A) >= q - 2 eps^8 rho(G)", ra, &prm.q - Rational::integer(2) * &prm.e8);
            v.ge("rho(B) >= (1 - eps^2) rho(G)", rb, (&one - prm.eps.pow(2)) * &prm.rho_g);
        }
        Certificate::CompletePair { x, y, rho_x, rho_y, .. } => {
            let _ = disjoint_nonempty(&mut v, g, &[("X", x), ("Y", y)]);
            relation(&mut v, g, "X", x, "Y", y, true);
            let rx = claimed_rho(&mut v, g, "X", x, rho_x);
            let ry = claimed_rho(&mut v, g, "Y", y, rho_y);
            v.ge("rho(X) >= eps^8 rho(G)", rx, prm.e8.clone());
            v.ge("rho(Y) >= p", ry, prm.p.clone());
        }
        Certificate::CompleteBlockade { blockade, per_block_rho } => {
            let l = blockade.blocks.len();
            v.ge("l >= 1/eps", Rational::from(l), prm.eps.recip());
            let names: Vec<String> = (1..=l).map(|i| format!("X{i}")).collect();
            let sets: Vec<(&str, &VertexSet)> = names.iter().map(|s| s.as_str()).zip(&blockade.blocks).collect();
            let _ = disjoint_nonempty(&mut v, g, &sets);
            for i in 0..l {
                for j in i + 1..l {
                    relation(&mut v, g, sets[i].0, sets[i].1, sets[j].0, sets[j].1, true);
                }
            }
            let bound = Rational::from(l).pow(-8) * &prm.rho_g;
            for ((name, s), claimed) in sets.iter().zip(per_block_rho) {
                let r = claimed_rho(&mut v, g, name, s, claimed);
                v.ge(format!("rho({name}) >= l^-8 rho(G)"), r, bound.clone());
            }
        }
    }
    v
}
