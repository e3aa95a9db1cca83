//! Acceptance suite: each criterion prints one PASS/FAIL line with its runtime.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_face::betti::{check_cancel, hochster_sr, relative_chain_complex, BettiContext, SimplicialComplex};
use toric_face::complex::MonoidalComplex;
use toric_face::exact::{rat, rat_frac, Field, Rational};
use toric_face::grobner::{
    eliminate, groebner_basis, ideal_contains, ideal_equal, ideal_member, initial_ideal_weight, Monomial, Order,
    Polynomial,
};
use toric_face::ring::{check_prime_identities, decompose_check, presentation_ideal};
use toric_face::subdiv::{classify, convexity_holds, j_ideal, monoid_points, subdivision, HeightFunction};

fn corpus(name: &str) -> MonoidalComplex {
    let path = format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    MonoidalComplex::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn degree(mc: &MonoidalComplex, names: &[&str]) -> Monomial {
    let mut e = vec![0; mc.num_generators()];
    for n in names {
        e[mc.generator_index(n).unwrap()] += 1;
    }
    Monomial(e)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn criterion_1() -> Result<(), String> {
    let m = corpus("moebius.json");
    let ctx = BettiContext::new(&m, 100_000);
    let h = degree(&m, &["u", "v", "z"]);
    let k = ctx.koszul_component(&h, Field::Rationals).map_err(|e| e.to_string())?;
    let dims: BTreeMap<usize, usize> = k.dims.iter().copied().collect();
    ensure(dims.get(&3) == Some(&4) && dims.get(&2) == Some(&12) && dims.get(&1) == Some(&9), || {
        format!("koszul dims {dims:?}")
    })?;
    ensure(dims.iter().all(|(i, d)| (1..=3).contains(i) || *d == 0), || format!("koszul dims {dims:?}"))?;
    let betti = k.betti_table();
    ensure(betti == [(1, 1)].into_iter().collect(), || format!("koszul homology {betti:?}"))?;
    let (delta, sub) = ctx.divisor_complexes(&h).map_err(|e| e.to_string())?;
    let cx = relative_chain_complex(&delta, &sub).map_err(|e| e.to_string())?;
    // degrees -1, 0, 1, 2
    ensure(cx.dims == vec![0, 6, 12, 4], || format!("relative chain dims {:?}", cx.dims))?;
    ensure(cx.is_complex(), || "boundary maps do not compose to zero".into())?;
    let hom: BTreeMap<i64, usize> = cx.homology(Field::Rationals).into_iter().collect();
    let h1 = hom.get(&1).copied().unwrap_or(0);
    ensure(h1 >= 2, || format!("H~_1 = {h1} < 2"))?;
    ensure(h1 == 3, || format!("H~_1 = {h1}, expected 3"))?;
    let g = ctx.graded_betti(&h, Field::Rationals).map_err(|e| e.to_string())?;
    ensure(g.method == "koszul" && g.disagreements == vec![2], || format!("{g:?}"))
}

fn criterion_2() -> Result<(), String> {
    let m = corpus("moebius.json");
    let p = presentation_ideal(&m);
    let n = m.num_generators();
    let var = |s: &str| m.generator_index(s).unwrap();
    let mono = |names: &[&str]| {
        let mut e = vec![0u32; n];
        for s in names {
            e[var(s)] += 1;
        }
        Monomial(e)
    };
    let expected: BTreeSet<(Monomial, Monomial)> = [
        (["x", "z"], ["u", "w"]),
        (["y", "w"], ["v", "z"]),
        (["x", "v"], ["u", "y"]),
    ]
    .iter()
    .map(|(a, b)| {
        let (a, b) = (mono(a), mono(b));
        if a < b { (a, b) } else { (b, a) }
    })
    .collect();
    let got: BTreeSet<(Monomial, Monomial)> = p
        .binomials
        .iter()
        .map(|b| if b.lhs < b.rhs { (b.lhs.clone(), b.rhs.clone()) } else { (b.rhs.clone(), b.lhs.clone()) })
        .collect();
    ensure(got == expected && p.binomials.len() == 3, || format!("binomials {:?}", p.to_strings().binomials))?;

    // oracle: triples of generators not contained in any listed square
    let squares: Vec<BTreeSet<usize>> = m.facets().iter().map(|&f| m.faces()[f].members.iter().copied().collect()).collect();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !squares.iter().any(|s| s.contains(&a) && s.contains(&b) && s.contains(&c)) {
                    triples.push(Polynomial::monomial(Monomial::from_support(n, &[a, b, c])));
                }
            }
        }
    }
    ensure(triples.len() == 8, || format!("{} non-face triples", triples.len()))?;
    ensure(ideal_equal(&p.monomial_generators(), &triples), || format!("monomials {:?}", p.to_strings().monomials))?;
    let uyz = Polynomial::monomial(mono(&["u", "y", "z"]));
    ensure(ideal_member(&uyz, &p.generators()), || "X_u X_y X_z not in I_M".into())
}

fn criterion_3() -> Result<(), String> {
    let cyc = corpus("cycle4.json");
    let delta = SimplicialComplex::from_monoidal(&cyc);
    let ctx = BettiContext::new(&cyc, 100_000);
    let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
    let mut nonzero: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for mask in 0u32..16 {
        let w: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let hoch = hochster_sr(&delta, &w, Field::Rationals);
        let kos = ctx.koszul_component(&Monomial::from_support(4, &w), Field::Rationals).map_err(|e| e.to_string())?.betti_table();
        ensure(hoch == kos, || format!("W = {w:?}: hochster {hoch:?} koszul {kos:?}"))?;
        for (&i, &b) in &hoch {
            *totals.entry(i).or_insert(0) += b;
            nonzero.push((w.clone(), i, b));
        }
    }
    let expected = vec![(vec![], 0, 1), (vec![0, 2], 1, 1), (vec![1, 3], 1, 1), (vec![0, 1, 2, 3], 2, 1)];
    nonzero.sort();
    let mut exp_sorted = expected.clone();
    exp_sorted.sort();
    ensure(nonzero == exp_sorted, || format!("nonzero entries {nonzero:?}"))?;
    ensure(totals.get(&1) == Some(&2) && totals.get(&2) == Some(&1), || format!("totals {totals:?}"))
}

fn power_in(g: &Polynomial, ini: &[Polynomial], cap: u32) -> bool {
    let gb = groebner_basis(ini, &Order::degrevlex());
    let mut p = g.clone();
    for _ in 0..cap {
        if toric_face::grobner::normal_form(&p, &gb, &Order::degrevlex()).is_zero() {
            return true;
        }
        p = p.mul(g);
    }
    false
}

fn criterion_4() -> Result<(), String> {
    for name in ["e1.json", "e2.json"] {
        let mc = corpus(name);
        let gens = presentation_ideal(&mc).generators();
        let n = mc.num_generators();
        for code in 0..3u64.pow(n as u32) {
            let w: Vec<u64> = (0..n).map(|i| code / 3u64.pow(i as u32) % 3).collect();
            let ini = initial_ideal_weight(&gens, &w).map_err(|e| e.to_string())?;
            let j = j_ideal(&subdivision(&mc, &w).map_err(|e| e.to_string())?).generators();
            ensure(ideal_contains(&j, &ini), || format!("{name} w={w:?}: ini not in J"))?;
            for g in &j {
                ensure(power_in(g, &ini, 20), || format!("{name} w={w:?}: no power of {g:?} in ini"))?;
            }
            let c = classify(&mc, &w).map_err(|e| e.to_string())?;
            ensure(c.classification.is_radical == ideal_equal(&ini, &j), || format!("{name} w={w:?}: is_radical mismatch"))?;
        }
    }
    Ok(())
}

fn facet_initial_sum(mc: &MonoidalComplex, w: &[u64]) -> Result<(Vec<Polynomial>, Vec<(String, Vec<bool>, Vec<Polynomial>)>), String> {
    let n = mc.num_generators();
    let mut sum = presentation_ideal(mc).monomial_generators();
    let mut per_face = Vec::new();
    for (fi, face) in mc.faces().iter().enumerate() {
        let sub = mc.restrict(&face.id).map_err(|e| e.to_string())?;
        let map: Vec<usize> = sub.names().iter().map(|s| mc.generator_index(s).unwrap()).collect();
        let ws: Vec<u64> = map.iter().map(|&e| w[e]).collect();
        let ini_c = initial_ideal_weight(&presentation_ideal(&sub).generators(), &ws).map_err(|e| e.to_string())?;
        let ini_c: Vec<Polynomial> = ini_c.iter().map(|g| g.embed(n, &map)).collect();
        if mc.facets().contains(&fi) {
            sum.extend(ini_c.iter().cloned());
        }
        let keep: Vec<bool> = (0..n).map(|e| map.contains(&e)).collect();
        per_face.push((face.id.clone(), keep, ini_c));
    }
    Ok((sum, per_face))
}

fn criterion_5() -> Result<(), String> {
    for name in ["e1.json", "e2.json", "moebius.json"] {
        let r = decompose_check(&corpus(name));
        ensure(r.passed, || format!("{name}: {r:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["e2.json", "e1.json"] {
        let mc = corpus(name);
        let gens = presentation_ideal(&mc).generators();
        for _ in 0..10 {
            let w: Vec<u64> = (0..mc.num_generators()).map(|_| rng.gen_range(0..6)).collect();
            let ini = initial_ideal_weight(&gens, &w).map_err(|e| e.to_string())?;
            let (sum, per_face) = facet_initial_sum(&mc, &w)?;
            ensure(ideal_equal(&ini, &sum), || format!("{name} w={w:?}: ini != A + sum of facet initial ideals"))?;
            for (id, keep, ini_c) in per_face {
                let el = eliminate(&ini, &keep);
                ensure(ideal_equal(&el, &ini_c), || format!("{name} w={w:?}: elimination onto {id}"))?;
            }
        }
    }
    Ok(())
}

fn random_alpha(rng: &mut ChaCha8Rng) -> Rational {
    rat_frac(rng.gen_range(1..=12), rng.gen_range(1..=7))
}

fn criterion_6() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for name in ["e1.json", "e2.json", "moebius.json", "cycle4.json"] {
        let mc = corpus(name);
        let n = mc.num_generators();
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..4)).collect();
        let hf = HeightFunction::new(&mc, &w).map_err(|e| e.to_string())?;
        let facets = mc.facets();
        let points: Vec<Vec<Vec<i64>>> = facets
            .iter()
            .map(|&f| {
                let face = &mc.faces()[f];
                monoid_points(&face.coords, face.coords[0].len(), 4)
            })
            .collect();
        for s in 0..200 {
            let k = rng.gen_range(0..facets.len());
            let m = rng.gen_range(1..=4);
            let sample: Vec<Vec<i64>> = (0..m).map(|_| points[k][rng.gen_range(0..points[k].len())].clone()).collect();
            let alphas: Vec<Rational> = (0..m).map(|_| random_alpha(&mut rng)).collect();
            let (holds, _) = convexity_holds(&hf, facets[k], &sample, &alphas).map_err(|e| e.to_string())?;
            ensure(holds, || format!("{name} w={w:?} sample {s}: convexity fails at {sample:?} {alphas:?}"))?;
        }
        let sub = subdivision(&mc, &w).map_err(|e| e.to_string())?;
        let cells: Vec<_> = sub.maximal_cells().filter(|c| !c.coords.is_empty()).collect();
        for s in 0..50 {
            let c = cells[rng.gen_range(0..cells.len())];
            let m = rng.gen_range(1..=4);
            let sample: Vec<Vec<i64>> = (0..m)
                .map(|_| {
                    let mut p = vec![0i64; c.coords[0].len()];
                    for g in &c.coords {
                        let t = rng.gen_range(0..3);
                        for (x, y) in p.iter_mut().zip(g) {
                            *x += t * y;
                        }
                    }
                    p
                })
                .collect();
            let alphas: Vec<Rational> = (0..m).map(|_| random_alpha(&mut rng)).collect();
            let (holds, equal) = convexity_holds(&hf, c.host, &sample, &alphas).map_err(|e| e.to_string())?;
            ensure(holds && equal, || format!("{name} w={w:?} cell sample {s}: no equality at {sample:?}"))?;
        }
        // heights at generators never exceed the weights
        for (e, h) in sub.heights.iter().enumerate() {
            if let Some(h) = h {
                ensure(*h <= rat(w[e] as i64), || format!("{name}: height of generator {e} exceeds its weight"))?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Result<(), String> {
    for name in ["e2.json", "moebius.json"] {
        let r = check_prime_identities(&corpus(name));
        ensure(r.passed && r.intersection_equals_ideal && r.triples_checked > 0, || format!("{name}: {r:?}"))?;
    }
    Ok(())
}

fn criterion_8() -> Result<(), String> {
    for name in ["e1.json", "e2.json"] {
        let r = check_cancel(&corpus(name), 100_000).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("{name}: {r:?}"))?;
    }
    let m = corpus("moebius.json");
    let r = check_cancel(&m, 100_000).map_err(|e| e.to_string())?;
    let v = r.violation.as_ref().ok_or_else(|| "no violation on the Möbius strip".to_string())?;
    // the triple is a genuine violation: i+j ~ i+k while X^j - X^k is not in I_M
    let parse = |s: &str| {
        let mut e = vec![0u32; m.num_generators()];
        for f in s.split('*') {
            e[m.generator_index(&f[1..]).unwrap()] += 1;
        }
        Monomial(e)
    };
    let (i, j, k) = (parse(&v.i), parse(&v.j), parse(&v.k));
    let ctx = BettiContext::new(&m, 100_000);
    let class = ctx.class_of(&i.mul(&j)).map_err(|e| e.to_string())?;
    ensure(class.members.contains(&i.mul(&k)), || format!("{v:?}: i+j and i+k differ"))?;
    let diff = Polynomial::binomial(j, k);
    ensure(!ideal_member(&diff, &presentation_ideal(&m).generators()), || format!("{v:?}: X^j - X^k lies in I_M"))?;
    ensure((v.i.as_str(), v.j.as_str(), v.k.as_str()) == ("Xx", "Xv*Xw", "Xy*Xz"), || format!("{v:?}"))
}

fn main() {
    let criteria: [(u8, fn() -> Result<(), String>, u64); 8] = [
        (1, criterion_1, 10),
        (2, criterion_2, 5),
        (3, criterion_3, 5),
        (4, criterion_4, 60),
        (5, criterion_5, 30),
        (6, criterion_6, 30),
        (7, criterion_7, 30),
        (8, criterion_8, 10),
    ];
    let mut failed = Vec::new();
    for (n, f, limit) in criteria {
        let t = Instant::now();
        let r = f();
        let elapsed = t.elapsed();
        let r = r.and_then(|()| {
            ensure(elapsed < Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit} s"))
        });
        match &r {
            Ok(()) => println!("ACCEPTANCE {n}: PASS ({:.2} s)", elapsed.as_secs_f64()),
            Err(e) => {
                println!("ACCEPTANCE {n}: FAIL ({:.2} s): {e}", elapsed.as_secs_f64());
                failed.push(n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
