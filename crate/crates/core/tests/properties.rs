use proptest::prelude::*;

use toric_face::betti::{hochster_sr, BettiContext, SimplicialComplex};
use toric_face::complex::MonoidalComplex;
use toric_face::document::ComplexDocument;
use toric_face::exact::{rat, Field};
use toric_face::grobner::{groebner_basis, normal_form, Monomial, Order, Polynomial};
use toric_face::ring::presentation_ideal;

const CORPUS: [&str; 4] = ["e1.json", "e2.json", "moebius.json", "cycle4.json"];

fn text(name: &str) -> String {
    std::fs::read_to_string(format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn corpus(name: &str) -> MonoidalComplex {
    MonoidalComplex::from_json(&text(name)).unwrap()
}

fn monomials(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut layer = vec![Monomial::one(n)];
    for _ in 0..degree {
        let mut next: Vec<Monomial> = layer.iter().flat_map(|m| (0..n).map(move |e| m.mul(&Monomial::var(n, e)))).collect();
        next.sort();
        next.dedup();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn documents_round_trip() {
    for name in CORPUS {
        let doc = ComplexDocument::from_json(&text(name)).unwrap();
        let again = ComplexDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again, "{name}");
        let mc = MonoidalComplex::from_document(&doc).unwrap();
        assert_eq!(mc.to_document(), doc, "{name}");
    }
}

#[test]
fn grading_monoid_is_positive() {
    for name in CORPUS {
        let mc = corpus(name);
        let n = mc.num_generators();
        let order = Order::degrevlex();
        let b = groebner_basis(&presentation_ideal(&mc).binomial_generators(), &order);
        for m in monomials(n, 3).into_iter().filter(|m| !m.is_one()) {
            let f = Polynomial::monomial(m.clone()).sub(&Polynomial::constant(n, rat(1)));
            assert!(!normal_form(&f, &b, &order).is_zero(), "{name}: {m:?}");
        }
    }
}

#[test]
fn classes_are_homogeneous() {
    for name in ["e1.json", "e2.json", "cycle4.json"] {
        let mc = corpus(name);
        let ctx = BettiContext::new(&mc, 10_000);
        let n = mc.num_generators();
        let degree = |m: &Monomial| -> Vec<i64> {
            let dim = mc.vector(0).unwrap().len();
            (0..dim).map(|k| (0..n).map(|e| m.0[e] as i64 * mc.vector(e).unwrap()[k]).sum()).collect()
        };
        for h in monomials(n, 4) {
            let class = ctx.class_of(&h).unwrap();
            assert!(class.members.iter().all(|m| degree(m) == degree(&h)), "{name}: {h:?}");
        }
    }
}

#[test]
fn koszul_agrees_with_relative_homology_on_fans() {
    for name in ["e1.json", "e2.json", "cycle4.json"] {
        let mc = corpus(name);
        let ctx = BettiContext::new(&mc, 10_000);
        for h in monomials(mc.num_generators(), 4) {
            let rel = ctx.relative_betti(&h, Field::Rationals).unwrap();
            let kos = ctx.koszul_component(&h, Field::Rationals).unwrap();
            assert_eq!(rel, kos.betti_table(), "{name}: {h:?}");
            let cx = ctx.koszul_complex(&h).unwrap();
            assert!(cx.is_complex());
            let euler_h: i64 =
                kos.betti.iter().map(|&(i, d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
            assert_eq!(cx.euler_characteristic(), euler_h, "{name}: {h:?}");
        }
    }
}

#[test]
fn moebius_euler_characteristic() {
    let mc = corpus("moebius.json");
    let ctx = BettiContext::new(&mc, 10_000);
    let mut e = vec![0; 6];
    for s in ["u", "v", "z"] {
        e[mc.generator_index(s).unwrap()] = 1;
    }
    let cx = ctx.koszul_complex(&Monomial(e)).unwrap();
    assert_eq!(cx.euler_characteristic(), -1);
}

#[test]
fn stanley_reisner_consistency() {
    let mc = corpus("cycle4.json");
    let delta = SimplicialComplex::from_monoidal(&mc);
    let ctx = BettiContext::new(&mc, 10_000);
    for h in monomials(4, 3) {
        let g = ctx.graded_betti(&h, Field::Rationals).unwrap();
        if h.is_squarefree() {
            assert_eq!(g.betti, hochster_sr(&delta, &h.support(), Field::Rationals), "{h:?}");
        } else {
            assert!(g.betti.is_empty(), "{h:?}");
        }
    }
}

fn arb_complex() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (3usize..=5).prop_flat_map(|n| {
        let facet = prop::collection::btree_set(0..n, 1..=3).prop_map(|s| s.into_iter().collect::<Vec<_>>());
        (Just(n), prop::collection::vec(facet, 1..=4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // for free complexes the Koszul strands reproduce Hochster's formula
    #[test]
    fn hochster_matches_koszul((n, facets) in arb_complex()) {
        let one_based: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| v + 1).collect()).collect();
        let mc = MonoidalComplex::from_simplicial_complex(&one_based, n).unwrap();
        let delta = SimplicialComplex::from_facets(n, &facets);
        prop_assert_eq!(&SimplicialComplex::from_monoidal(&mc), &delta);
        let ctx = BettiContext::new(&mc, 10_000);
        for mask in 0u32..(1 << n) {
            let w: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let k = ctx.koszul_component(&Monomial::from_support(n, &w), Field::Rationals).unwrap();
            prop_assert_eq!(k.betti_table(), hochster_sr(&delta, &w, Field::Rationals));
        }
    }

    #[test]
    fn homology_is_field_independent_for_graphs((n, facets) in arb_complex()) {
        // complexes of dimension at most 2 on at most 5 vertices have torsion-free homology
        let delta = SimplicialComplex::from_facets(n, &facets);
        let void = SimplicialComplex::void(n);
        let q = toric_face::betti::relative_homology(&delta, &void, Field::Rationals).unwrap();
        let p = toric_face::betti::relative_homology(&delta, &void, Field::Prime(2)).unwrap();
        prop_assert_eq!(q, p);
    }
}
