mod common;

use proptest::prelude::*;

use p5lab::decomposition::{trichotomy_search, validate_certificate, DEFAULT_D};
use p5lab::experiments::{decompose_corpus, DecomposeOptions, DecomposeStatus};
use p5lab::generators::{exhaustive_p5_free, random_p5_free_corpus};
use p5lab::graph6::{from_graph6, to_graph6};
use p5lab::invariants::{alpha, chi, chi_star, hall_ratio, omega};
use p5lab::structure::find_induced_p5;
use p5lab::{Graph, Rational, WeightFunction};

fn ratio((num, den): (usize, usize)) -> Rational {
    Rational::new(num as i64, den as i64)
}

#[test]
fn complement_of_c5_is_c5() {
    let c5 = Graph::cycle(5);
    assert!(common::isomorphic(&common::adj(&c5.complement()), &common::adj(&c5)));
    assert_eq!(from_graph6(&to_graph6(&c5.complement())).unwrap(), c5.complement());
}

#[test]
fn petersen_matches_kneser_construction() {
    let k = common::kneser_petersen();
    let p = common::adj(&Graph::petersen());
    assert!(common::isomorphic(&p, &k));
    let pc = Graph::petersen().complement();
    let kc = common::complement(&k);
    assert_eq!((alpha(&pc), omega(&pc)), (common::alpha(&kc), common::omega(&kc)));
    assert_eq!((alpha(&pc), omega(&pc)), (2, 4));
}

#[test]
fn invariants_agree_with_oracles_on_n5_corpus() {
    for g in exhaustive_p5_free(5).unwrap() {
        let a = common::adj(&g);
        assert_eq!(alpha(&g), common::alpha(&a));
        assert_eq!(omega(&g), common::omega(&a));
        assert_eq!(chi(&g), common::chi(&a));
        assert_eq!(hall_ratio(&g).unwrap().0, ratio(common::hall_ratio(&a)));
    }
}

#[test]
fn vertex_transitive_fractional_values() {
    // chi* = n / alpha on vertex-transitive graphs
    for g in [Graph::cycle(5), Graph::cycle(7), Graph::petersen().complement()] {
        let a = common::adj(&g);
        assert_eq!(chi_star(&g).unwrap().value, ratio((g.n(), common::alpha(&a))));
    }
}

#[test]
fn blowup_of_c5_by_two() {
    let j = Graph::cycle(5).blow_up(&WeightFunction::uniform(5, 2)).unwrap();
    let a = common::adj(&j);
    assert_eq!(j.n(), 10);
    assert_eq!(common::alpha(&a), 4);
    assert!(!common::has_induced_p5(&a));
    assert!(find_induced_p5(&j).is_none());
}

#[test]
fn random_corpus_is_p5_free_and_certified() {
    let gs = random_p5_free_corpus(40, 9, 11).unwrap();
    for g in &gs {
        assert!(!common::has_induced_p5(&common::adj(g)), "{}", to_graph6(g));
    }
    let ids: Vec<(usize, Graph)> = gs.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect();
    let recs = decompose_corpus(&ids, &DecomposeOptions::default()).unwrap();
    assert!(recs.iter().all(|r| r.status != DecomposeStatus::Failure));
    assert!(recs.iter().any(|r| r.status == DecomposeStatus::Certified));
}

#[test]
fn trichotomy_certificates_revalidate() {
    let eps = Rational::new(1, 2);
    let d = Rational::integer(DEFAULT_D);
    for g in exhaustive_p5_free(5).unwrap().filter(|g| g.is_connected() && omega(g) >= 2) {
        let r = trichotomy_search(&g, &eps).unwrap();
        let c = r.chosen.as_ref().expect("a certificate");
        assert!(validate_certificate(&g, c, &r.rho_g, &d).all_pass());
        assert_eq!(r.rho_g, ratio(common::hall_ratio(&common::adj(&g))));
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn p5_detector_matches_oracle(g in arb_graph(8)) {
        let found = find_induced_p5(&g);
        prop_assert_eq!(found.is_some(), common::has_induced_p5(&common::adj(&g)));
        if let Some(p) = found {
            for i in 0..5 {
                for j in i + 1..5 {
                    prop_assert_eq!(g.has_edge(p[i], p[j]), j == i + 1);
                }
            }
        }
    }

    #[test]
    fn chain_holds(g in arb_graph(8)) {
        prop_assume!(g.n() > 0);
        let rho = hall_ratio(&g).unwrap().0;
        let cs = chi_star(&g).unwrap().value;
        prop_assert!(Rational::from(omega(&g)) <= rho);
        prop_assert!(rho <= cs);
        prop_assert!(cs <= Rational::from(chi(&g)));
        prop_assert_eq!(rho, ratio(common::hall_ratio(&common::adj(&g))));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }
}
