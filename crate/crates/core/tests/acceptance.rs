//! Acceptance criteria 1 to 9, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use p5lab::experiments::{run_suite, Suite, SuiteOptions, SuiteOutcome};
use p5lab::generators::{exhaustive_p5_free, GenKind, GenSpec};
use p5lab::graph6::{from_graph6, to_graph6};
use p5lab::invariants::{chi, chi_star, empirical_exponent, hall_ratio};
use p5lab::invariants::{alpha, omega};
use p5lab::{Graph, Rational};

const CHAIN_BUDGET: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn suite(s: Suite, n_max: usize, random: Option<usize>) -> Result<SuiteOutcome, String> {
    let opts = SuiteOptions {
        n_max,
        random,
        seed: 2024,
        ..Default::default()
    };
    let out = run_suite(s, &opts).map_err(|e| e.to_string())?;
    if out.passed() {
        Ok(out)
    } else {
        Err(format!("{} failures, first: {:?}", out.failure_count, out.failures.first()))
    }
}

fn expected_corpus_size(n_max: usize) -> u64 {
    common::golden("p5_free_counts.txt")
        .lines()
        .map(|l| l.split_whitespace().map(|x| x.parse::<u64>().unwrap()).collect::<Vec<_>>())
        .filter(|v| v[0] as usize <= n_max && v[0] > 0)
        .map(|v| v[1])
        .sum()
}

fn ac1_chain() -> Outcome {
    let t = Instant::now();
    let out = suite(Suite::Chain, 7, Some(0))?;
    let took = t.elapsed();
    let want = expected_corpus_size(7);
    if out.instances != want {
        return Err(format!("checked {} graphs, corpus has {want}", out.instances));
    }
    if took > CHAIN_BUDGET {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{want} graphs on n <= 7, 0 violations, {:.1}s", took.as_secs_f64()))
}

fn ac2_blowup() -> Outcome {
    let out = suite(Suite::BlowupEquiv, 6, Some(200))?;
    let random = out.counts.get("random").copied().unwrap_or(0);
    let want = expected_corpus_size(6) + 200;
    if random != 200 || out.instances != want {
        return Err(format!("checked {} instances ({random} random), expected {want}", out.instances));
    }
    Ok(format!("{} instances (n <= 6 exhaustive + 200 random n <= 10), psi = chi* exactly", out.instances))
}

fn ac3_named() -> Outcome {
    let mut bad = Vec::new();
    let mut check = |what: &str, got: Rational, want: Rational| {
        if got != want {
            bad.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    let c5 = Graph::cycle(5);
    let c7 = Graph::cycle(7);
    let (a5, a7) = (common::adj(&c5), common::adj(&c7));
    // vertex-transitive, so chi* = n / alpha
    check("chi*(C5)", chi_star(&c5).unwrap().value, Rational::new(5, common::alpha(&a5) as i64));
    check("chi*(C7)", chi_star(&c7).unwrap().value, Rational::new(7, common::alpha(&a7) as i64));
    let (num, den) = common::hall_ratio(&a5);
    check("rho(C5)", hall_ratio(&c5).unwrap().0, Rational::new(num as i64, den as i64));
    check("chi(C5)", Rational::from(chi(&c5)), Rational::from(common::chi(&a5)));
    let pc = Graph::petersen().complement();
    let kc = common::complement(&common::kneser_petersen());
    check("alpha(Petersen complement)", Rational::from(alpha(&pc)), Rational::from(common::alpha(&kc)));
    check("omega(Petersen complement)", Rational::from(omega(&pc)), Rational::from(common::omega(&kc)));
    let literal = [
        (chi_star(&c5).unwrap().value, Rational::new(5, 2)),
        (chi_star(&c7).unwrap().value, Rational::new(7, 3)),
        (hall_ratio(&c5).unwrap().0, Rational::new(5, 2)),
        (Rational::from(chi(&c5)), Rational::integer(3)),
        (Rational::from(alpha(&pc)), Rational::integer(2)),
        (Rational::from(omega(&pc)), Rational::integer(4)),
    ];
    for (i, (got, want)) in literal.into_iter().enumerate() {
        check(&format!("stated value {i}"), got, want);
    }
    if bad.is_empty() {
        Ok("chi*(C5)=5/2, chi*(C7)=7/3, rho(C5)=5/2, chi(C5)=3, Petersen complement (2,4)".to_string())
    } else {
        Err(bad.join("; "))
    }
}

fn ac4_trichotomy() -> Outcome {
    let out = suite(Suite::Trichotomy, 7, Some(0))?;
    let want = out.counts.get("complete_pair").copied().unwrap_or(0)
        + out.counts.get("complete_blockade").copied().unwrap_or(0)
        + out.counts.get("anticomplete_pair").copied().unwrap_or(0);
    if want != out.instances || out.instances == 0 {
        return Err(format!("{} instances but {want} certificates", out.instances));
    }
    Ok(format!("{} connected graphs with omega >= 2 certified and validated, 0 failures", out.instances))
}

fn ac5_exponent() -> Outcome {
    let mut max: Option<(f64, String)> = None;
    let mut count = 0u64;
    for n in 1..=7 {
        for g in exhaustive_p5_free(n).map_err(|e| e.to_string())? {
            if let Some(e) = empirical_exponent(&g) {
                count += 1;
                if max.as_ref().is_none_or(|(m, _)| e.value > *m) {
                    max = Some((e.value, to_graph6(&g)));
                }
            }
        }
    }
    let (dmax, witness) = max.ok_or("no nontrivial instances")?;
    if dmax > 2.0 {
        return Err(format!("max d_hat {dmax} > 2 at {witness}"));
    }
    let spec = GenSpec {
        kind: GenKind::TriangleFreeComplement,
        n: 16,
        p: None,
        seed: 2024,
        count: 20,
    };
    let family = spec.generate().map_err(|e| e.to_string())?;
    let mut best = 0f64;
    for g in &family {
        let a = common::adj(g);
        if common::alpha(&a) > 2 {
            return Err(format!("alpha > 2 on {}", to_graph6(g)));
        }
        best = best.max(empirical_exponent(g).map_or(0.0, |e| e.value));
    }
    if best < 1.1 {
        return Err(format!("tightness family reaches only d_hat = {best:.4}"));
    }
    Ok(format!(
        "max d_hat over {count} nontrivial n <= 7 graphs = {dmax:.6} ({witness}); triangle-free complements reach {best:.4}"
    ))
}

fn ac6_comb() -> Outcome {
    let out = suite(Suite::Comb, 0, Some(500))?;
    if out.instances != 500 {
        return Err(format!("{} instances", out.instances));
    }
    Ok(format!(
        "500 instances: {} SmallB, {} Teeth, 0 violations",
        out.counts.get("small_b").copied().unwrap_or(0),
        out.counts.get("teeth").copied().unwrap_or(0)
    ))
}

fn ac7_arithmetic() -> Outcome {
    let phi = suite(Suite::Phi, 0, None)?;
    let step = suite(Suite::InductionStep, 0, None)?;
    if step.instances != 1000 {
        return Err(format!("grid has {} points", step.instances));
    }
    Ok(format!("{} phi checks, {} grid points", phi.instances, step.instances))
}

fn ac8_cutsets() -> Outcome {
    let out = suite(Suite::Cutset, 7, Some(0))?;
    let calls = out.counts.get("cutsets").copied().unwrap_or(0);
    let checks = out.counts.get("postcondition_checks").copied().unwrap_or(0);
    if calls == 0 || checks < calls {
        return Err(format!("{calls} cutsets, {checks} verified"));
    }
    Ok(format!("{calls} minimal cutsets re-verified, 0 MixedOnBoth vertices"))
}

fn ac9_determinism() -> Outcome {
    let mut count = 0u64;
    for n in 0..=7 {
        for g in exhaustive_p5_free(n).map_err(|e| e.to_string())? {
            let s = to_graph6(&g);
            let back = from_graph6(&s).map_err(|e| format!("{s}: {e}"))?;
            if back != g || to_graph6(&back) != s {
                return Err(format!("round trip changed {s}"));
            }
            count += 1;
        }
    }
    let specs = [
        ("gnp_n8_p1-4_seed42.g6", GenKind::Gnp, 8, Some(Rational::new(1, 4)), 42, 1),
        ("cograph_n10_seed7.g6", GenKind::Cograph, 10, None, 7, 5),
        ("tfc_n12_seed3.g6", GenKind::TriangleFreeComplement, 12, None, 3, 1),
    ];
    for (file, kind, n, p, seed, count) in specs {
        let spec = GenSpec { kind, n, p, seed, count };
        let render = || -> Result<String, String> {
            Ok(spec
                .generate()
                .map_err(|e| e.to_string())?
                .iter()
                .map(|g| to_graph6(g) + "\n")
                .collect())
        };
        let (a, b) = (render()?, render()?);
        if a != b || a != common::golden(file) {
            return Err(format!("{file} differs"));
        }
    }
    Ok(format!("{count} graph6 round trips bit-exact; 3 golden files reproduced twice"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("chain inequality", ac1_chain),
        ("fractional colouring equivalence", ac2_blowup),
        ("named values", ac3_named),
        ("trichotomy existence", ac4_trichotomy),
        ("empirical exponent", ac5_exponent),
        ("comb procedure", ac6_comb),
        ("arithmetic lemmas", ac7_arithmetic),
        ("structural soundness", ac8_cutsets),
        ("determinism and formats", ac9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
