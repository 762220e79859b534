//! Per-instance invariant records, the JSON report and its CSV projection.

use std::io::Write;

use serde::Serialize;

use crate::decomposition::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::experiments::{ordered_map, pool, Caps};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::fractional::solve_fractional_capped;
use crate::invariants::hall::{hall_ratio_with, HallOptions};
use crate::invariants::{alpha, chi, exponent::exponent_from_triple, omega};
use crate::rational::Rational;

pub const CSV_COLUMNS: [&str; 9] = [
    "id", "graph6", "n", "alpha", "omega", "chi", "chi_star", "hall_ratio", "d_hat",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunHeader {
    pub tool: String,
    pub version: String,
    pub seed: Option<u64>,
    pub suite: String,
    pub caps: Caps,
    pub wall_time_s: f64,
}

impl RunHeader {
    pub fn new(suite: &str, seed: Option<u64>, caps: &Caps) -> Self {
        RunHeader {
            tool: "p5lab".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            suite: suite.to_string(),
            caps: caps.clone(),
            wall_time_s: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceRecord {
    /// 1-based input line number.
    pub id: usize,
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub chi_star: Option<Rational>,
    pub hall_ratio: Option<Rational>,
    pub d_hat: Option<f64>,
    pub certificates: Vec<Certificate>,
    pub verdicts: Vec<Verdict>,
    /// Why a field is null.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report<R> {
    pub header: RunHeader,
    pub records: Vec<R>,
}

/// Exact invariants of one graph. Capped quantities become `None` with a
/// note; a broken `ω ≤ ρ ≤ χ* ≤ χ` chain is an error.
pub fn invariants_record(id: usize, g: &Graph, caps: &Caps) -> Result<InstanceRecord> {
    let (a, w, c) = (alpha(g), omega(g), chi(g));
    let mut notes = Vec::new();
    let opts = HallOptions {
        cap: caps.hall,
        cancel: None,
    };
    let rho = match hall_ratio_with(g, &opts) {
        Ok((r, _)) => Some(r),
        Err(e) => {
            notes.push(format!("hall_ratio: {e}"));
            None
        }
    };
    let chi_star = match solve_fractional_capped(g, caps.stable_sets) {
        Ok(sol) => Some(sol.value),
        Err(e @ Error::Capability { .. }) => {
            notes.push(format!("chi_star: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let chain: Vec<Rational> = [Some(Rational::from(w)), rho.clone(), chi_star.clone(), Some(Rational::from(c))]
        .into_iter()
        .flatten()
        .collect();
    if g.n() > 0 && chain.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::invariant(format!(
            "chain omega <= rho <= chi* <= chi fails on line {id} ({}): omega={w}, rho={rho:?}, chi*={chi_star:?}, chi={c}",
            to_graph6(g)
        )));
    }
    Ok(InstanceRecord {
        id,
        graph6: to_graph6(g),
        n: g.n(),
        alpha: a,
        omega: w,
        chi: c,
        chi_star,
        hall_ratio: rho,
        d_hat: exponent_from_triple(g.n(), a, w).map(|e| e.value),
        certificates: Vec::new(),
        verdicts: Vec::new(),
        notes,
    })
}

/// [`invariants_record`] over `(id, graph)` pairs on `jobs` workers; records
/// come back in input order and the first error in that order is returned.
pub fn run_invariants(graphs: &[(usize, Graph)], caps: &Caps, jobs: usize) -> Result<Vec<InstanceRecord>> {
    caps.validate()?;
    let pool = pool(jobs)?;
    ordered_map(&pool, graphs, |(id, g)| invariants_record(*id, g, caps))
        .into_iter()
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

/// Writes the fixed CSV columns; null fields are empty.
pub fn write_csv<W: Write>(records: &[InstanceRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::arg(format!("cannot write CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in records {
        w.write_record([
            r.id.to_string(),
            r.graph6.clone(),
            r.n.to_string(),
            r.alpha.to_string(),
            r.omega.to_string(),
            r.chi.to_string(),
            opt(&r.chi_star),
            opt(&r.hall_ratio),
            r.d_hat.map(|d| crate::invariants::exponent::significant_digits(d, 12)).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::arg(format!("cannot write CSV: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_and_k1() {
        let caps = Caps::default();
        let r = invariants_record(1, &Graph::cycle(5), &caps).unwrap();
        assert_eq!((r.alpha, r.omega, r.chi), (2, 2, 3));
        assert_eq!(r.chi_star, Some(Rational::new(5, 2)));
        assert_eq!(r.hall_ratio, Some(Rational::new(5, 2)));
        assert!((r.d_hat.unwrap() - 1.3219280948873).abs() < 1e-12);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["chi_star"], "5/2");
        let k1 = invariants_record(2, &Graph::complete(1), &caps).unwrap();
        assert_eq!(k1.chi_star, Some(Rational::one()));
        assert_eq!(serde_json::to_value(&k1).unwrap()["chi_star"], "1/1");
        assert_eq!(k1.d_hat, None);
    }

    #[test]
    fn hall_cap_marks_null() {
        let caps = Caps {
            hall: 4,
            ..Caps::default()
        };
        let r = invariants_record(1, &Graph::cycle(5), &caps).unwrap();
        assert_eq!(r.hall_ratio, None);
        assert!(r.notes[0].contains("hall_ratio"));
    }

    #[test]
    fn csv_columns_and_order() {
        let gs: Vec<(usize, Graph)> = vec![(3, Graph::cycle(5)), (7, Graph::complete(1))];
        let recs = run_invariants(&gs, &Caps::default(), 2).unwrap();
        assert_eq!(recs.iter().map(|r| r.id).collect::<Vec<_>>(), vec![3, 7]);
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "id,graph6,n,alpha,omega,chi,chi_star,hall_ratio,d_hat");
        assert_eq!(lines[1], "3,Dhc,5,2,2,3,5/2,5/2,1.32192809489");
        assert_eq!(lines[2], "7,@,1,1,1,1,1/1,1/1,");
    }
}
