//! The presentation ideal `I_M = A + B` of a toric face ring and its face primes.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::complex::{ComplexError, MonoidalComplex};
use crate::exact::{integer_kernel, IntMatrix};
use crate::grobner::{eliminate, groebner_basis, intersect, Monomial, Order, Polynomial};

pub const DEFAULT_DEGREE_BOUND: u64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lhs: Monomial,
    pub rhs: Monomial,
}

impl Binomial {
    /// Orients the pair so that `lhs` is the degrevlex-larger side.
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        use std::cmp::Ordering::*;
        match Order::degrevlex().cmp(&a, &b) {
            Equal => None,
            Greater => Some(Binomial { lhs: a, rhs: b }),
            Less => Some(Binomial { lhs: b, rhs: a }),
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::binomial(self.lhs.clone(), self.rhs.clone())
    }

    pub fn degree(&self) -> u64 {
        self.lhs.degree().max(self.rhs.degree())
    }
}

/// Generators of an ideal split into squarefree monomials and binomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedIdeal {
    pub names: Vec<String>,
    pub monomials: Vec<Monomial>,
    pub binomials: Vec<Binomial>,
    pub degree_bound: u64,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentedStrings {
    pub monomials: Vec<String>,
    pub binomials: Vec<String>,
}

impl PresentedIdeal {
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        let mut g: Vec<Polynomial> = self.monomials.iter().cloned().map(Polynomial::monomial).collect();
        g.extend(self.binomials.iter().map(Binomial::to_polynomial));
        g
    }

    pub fn binomial_generators(&self) -> Vec<Polynomial> {
        self.binomials.iter().map(Binomial::to_polynomial).collect()
    }

    pub fn monomial_generators(&self) -> Vec<Polynomial> {
        self.monomials.iter().cloned().map(Polynomial::monomial).collect()
    }

    pub fn to_strings(&self) -> PresentedStrings {
        PresentedStrings {
            monomials: self.monomials.iter().map(|m| m.format(&self.names)).collect(),
            binomials: self.binomials.iter().map(|b| b.to_polynomial().format(&self.names)).collect(),
        }
    }
}

/// Binomial generators of the toric ideal of the columns `coords`
/// (one per generator), as exponent vectors over the given variables.
pub fn toric_ideal(coords: &[Vec<i64>]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let k = coords.len();
    if k == 0 {
        return Vec::new();
    }
    let d = coords[0].len();
    let a = IntMatrix::from_columns(coords, d).expect("columns of equal length");
    let kernel = integer_kernel(&a);
    if kernel.is_empty() {
        return Vec::new();
    }
    // lattice ideal, then saturation by the product of all variables
    let mut gens: Vec<Polynomial> = kernel
        .iter()
        .map(|v| {
            let plus: Vec<u32> = v.iter().map(|&x| x.max(0) as u32).collect();
            let minus: Vec<u32> = v.iter().map(|&x| (-x).max(0) as u32).collect();
            let mut p = plus;
            p.push(0);
            let mut m = minus;
            m.push(0);
            Polynomial::binomial(Monomial(p), Monomial(m))
        })
        .collect();
    let all = vec![1u32; k + 1];
    gens.push(Polynomial::constant(k + 1, crate::exact::rat(1)).sub(&Polynomial::monomial(Monomial(all))));
    let mut keep = vec![true; k];
    keep.push(false);
    let back: Vec<usize> = (0..=k).map(|i| i.min(k - 1)).collect();
    let sat: Vec<Polynomial> = eliminate(&gens, &keep).iter().map(|g| g.embed(k, &back)).collect();
    groebner_basis(&sat, &Order::degrevlex())
        .into_iter()
        .map(|g| {
            let ts: Vec<(&Monomial, _)> = g.terms().collect();
            assert!(g.is_binomial(), "toric ideal generator must be a binomial");
            let (a, b) = (ts[0].0.clone(), ts[1].0.clone());
            (a.0, b.0)
        })
        .collect()
}

/// The presentation ideal of the toric face ring over the generator family
/// `names`, given the member sets and member coordinates of the maximal faces.
pub fn presentation_from_facets(
    names: &[String],
    facets: &[(Vec<usize>, Vec<Vec<i64>>)],
    degree_bound: u64,
) -> PresentedIdeal {
    let n = names.len();
    let in_face = |s: &[usize]| facets.iter().any(|(m, _)| s.iter().all(|e| m.contains(e)));

    // minimal squarefree non-faces, by increasing size
    let max_size = facets.iter().map(|(m, _)| m.len()).max().unwrap_or(0) + 1;
    let mut monomials: Vec<Monomial> = Vec::new();
    let mut non_faces: Vec<Vec<usize>> = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn walk(
        start: usize,
        n: usize,
        size: usize,
        subset: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if subset.len() == size {
            f(subset);
            return;
        }
        for e in start..n {
            subset.push(e);
            walk(e + 1, n, size, subset, f);
            subset.pop();
        }
    }
    for size in 1..=max_size.min(n) {
        let mut found = Vec::new();
        walk(0, n, size, &mut subset, &mut |s: &[usize]| {
            if !in_face(s) && !non_faces.iter().any(|h| h.iter().all(|e| s.contains(e))) {
                found.push(s.to_vec());
            }
        });
        non_faces.extend(found);
    }
    for h in &non_faces {
        monomials.push(Monomial::from_support(n, h));
    }
    monomials.sort();

    let mut binomials: BTreeSet<Binomial> = BTreeSet::new();
    for (members, coords) in facets {
        for (a, b) in toric_ideal(coords) {
            let lift = |x: &[u32]| {
                let mut e = vec![0u32; n];
                for (i, &m) in members.iter().enumerate() {
                    e[m] = x[i];
                }
                Monomial(e)
            };
            if let Some(bin) = Binomial::new(lift(&a), lift(&b)) {
                binomials.insert(bin);
            }
        }
    }
    let mut warnings = Vec::new();
    if let Some(b) = binomials.iter().find(|b| b.degree() > degree_bound) {
        warnings.push(format!(
            "binomial generator of degree {} exceeds the degree bound {degree_bound}",
            b.degree()
        ));
    }
    PresentedIdeal { names: names.to_vec(), monomials, binomials: binomials.into_iter().collect(), degree_bound, warnings }
}

fn facet_table(mc: &MonoidalComplex) -> Vec<(Vec<usize>, Vec<Vec<i64>>)> {
    mc.facets().into_iter().map(|f| (mc.faces()[f].members.clone(), mc.faces()[f].coords.clone())).collect()
}

pub fn presentation_ideal(mc: &MonoidalComplex) -> PresentedIdeal {
    presentation_ideal_with(mc, DEFAULT_DEGREE_BOUND)
}

pub fn presentation_ideal_with(mc: &MonoidalComplex, degree_bound: u64) -> PresentedIdeal {
    presentation_from_facets(mc.names(), &facet_table(mc), degree_bound)
}

/// Whether `X^m` lies in `I_M`: its support lies in no single face monoid.
pub fn monomial_in_ideal(mc: &MonoidalComplex, m: &Monomial) -> bool {
    !mc.in_common_face(&m.support())
}

/// `p_c = (X_e : a_e ∉ M_c) + B`.
pub fn face_prime(mc: &MonoidalComplex, id: &str) -> Result<PresentedIdeal, ComplexError> {
    let c = mc.face(id)?;
    Ok(face_prime_of(mc, &presentation_ideal(mc), c))
}

fn face_prime_of(mc: &MonoidalComplex, im: &PresentedIdeal, c: usize) -> PresentedIdeal {
    let n = mc.num_generators();
    let face = &mc.faces()[c];
    PresentedIdeal {
        names: mc.names().to_vec(),
        monomials: (0..n).filter(|&e| !face.contains_generator(e)).map(|e| Monomial::var(n, e)).collect(),
        binomials: im.binomials.clone(),
        degree_bound: im.degree_bound,
        warnings: Vec::new(),
    }
}

/// Interns ideals by reduced Gröbner basis and memoizes sums and intersections.
struct IdealCache {
    nvars: usize,
    ideals: Vec<Vec<Polynomial>>,
    index: HashMap<Vec<Polynomial>, usize>,
    sums: HashMap<(usize, usize), usize>,
    meets: HashMap<(usize, usize), usize>,
}

impl IdealCache {
    fn new(nvars: usize) -> IdealCache {
        IdealCache { nvars, ideals: Vec::new(), index: HashMap::new(), sums: HashMap::new(), meets: HashMap::new() }
    }

    fn intern(&mut self, gens: &[Polynomial]) -> usize {
        let gb = groebner_basis(gens, &Order::degrevlex());
        if let Some(&i) = self.index.get(&gb) {
            return i;
        }
        self.ideals.push(gb.clone());
        self.index.insert(gb, self.ideals.len() - 1);
        self.ideals.len() - 1
    }

    fn sum(&mut self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        if let Some(&r) = self.sums.get(&key) {
            return r;
        }
        let mut gens = self.ideals[a].clone();
        gens.extend(self.ideals[b].iter().cloned());
        let r = self.intern(&gens);
        self.sums.insert(key, r);
        r
    }

    fn meet(&mut self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        if let Some(&r) = self.meets.get(&key) {
            return r;
        }
        let gens = intersect(&self.ideals[a].clone(), &self.ideals[b].clone(), self.nvars);
        let r = self.intern(&gens);
        self.meets.insert(key, r);
        r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeIdentityReport {
    pub passed: bool,
    pub triples_checked: usize,
    /// First failing `(identity, c, d, e)`, identities numbered 1 to 3.
    pub failure: Option<(u8, String, String, String)>,
    pub intersection_equals_ideal: bool,
}

/// Checks, for all faces `c, d, e`:
/// `p_c + p_d = p_{c∩d}`, `p_c ∩ (p_d + p_e) = p_c ∩ p_d + p_c ∩ p_e`,
/// `p_c + p_d ∩ p_e = (p_c + p_d) ∩ (p_c + p_e)`, and that the intersection
/// of all face primes is `I_M`.
pub fn check_prime_identities(mc: &MonoidalComplex) -> PrimeIdentityReport {
    let im = presentation_ideal(mc);
    let nf = mc.faces().len();
    let mut cache = IdealCache::new(mc.num_generators());
    let p: Vec<usize> = (0..nf).map(|c| cache.intern(&face_prime_of(mc, &im, c).generators())).collect();
    let id = |c: usize| mc.faces()[c].id.clone();
    let mut failure = None;
    let mut checked = 0;
    'outer: for c in 0..nf {
        for d in 0..nf {
            if cache.sum(p[c], p[d]) != p[mc.meet(c, d)] {
                failure = Some((1, id(c), id(d), String::new()));
                break 'outer;
            }
            for e in d..nf {
                checked += 1;
                let de = cache.sum(p[d], p[e]);
                let lhs = cache.meet(p[c], de);
                let (cd, ce) = (cache.meet(p[c], p[d]), cache.meet(p[c], p[e]));
                if lhs != cache.sum(cd, ce) {
                    failure = Some((2, id(c), id(d), id(e)));
                    break 'outer;
                }
                let dme = cache.meet(p[d], p[e]);
                let lhs = cache.sum(p[c], dme);
                let (cpd, cpe) = (cache.sum(p[c], p[d]), cache.sum(p[c], p[e]));
                if lhs != cache.meet(cpd, cpe) {
                    failure = Some((3, id(c), id(d), id(e)));
                    break 'outer;
                }
            }
        }
    }
    let mut all = p[0];
    for &q in &p[1..] {
        all = cache.meet(all, q);
    }
    let intersection_equals_ideal = all == cache.intern(&im.generators());
    PrimeIdentityReport {
        passed: failure.is_none() && intersection_equals_ideal,
        triples_checked: checked,
        failure,
        intersection_equals_ideal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub passed: bool,
    /// `I_M = A + Σ S·I_{M_i}` over the maximal faces.
    pub sum_identity: bool,
    /// Faces `c` for which `S_c ∩ I_M ≠ I_{M_c}`.
    pub elimination_failures: Vec<String>,
}

/// Generators of `I_{M_c}` computed on the restricted complex, placed in the
/// full polynomial ring.
fn face_ideal_in_full_ring(mc: &MonoidalComplex, id: &str) -> Result<Vec<Polynomial>, ComplexError> {
    let sub = mc.restrict(id)?;
    let map: Vec<usize> = sub.names().iter().map(|n| mc.generator_index(n).expect("same names")).collect();
    Ok(presentation_ideal(&sub).generators().iter().map(|g| g.embed(mc.num_generators(), &map)).collect())
}

pub fn decompose_check(mc: &MonoidalComplex) -> DecomposeReport {
    let im = presentation_ideal(mc);
    let order = Order::degrevlex();
    let gb = groebner_basis(&im.generators(), &order);
    let mut sum = im.monomial_generators();
    for f in mc.facets() {
        sum.extend(face_ideal_in_full_ring(mc, &mc.faces()[f].id).expect("face exists"));
    }
    let sum_identity = groebner_basis(&sum, &order) == gb;
    let mut elimination_failures = Vec::new();
    for face in mc.faces() {
        let keep: Vec<bool> = (0..mc.num_generators()).map(|e| face.contains_generator(e)).collect();
        let el = groebner_basis(&eliminate(&gb, &keep), &order);
        let own = groebner_basis(&face_ideal_in_full_ring(mc, &face.id).expect("face exists"), &order);
        if el != own {
            elimination_failures.push(face.id.clone());
        }
    }
    DecomposeReport { passed: sum_identity && elimination_failures.is_empty(), sum_identity, elimination_failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::ideal_equal;

    fn corpus(name: &str) -> MonoidalComplex {
        let path = format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
        MonoidalComplex::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    #[test]
    fn e2_presentation() {
        let p = presentation_ideal(&corpus("e2.json"));
        let s = p.to_strings();
        assert_eq!(s.monomials, vec!["X1*X3"]);
        assert!(s.binomials.is_empty());
    }

    #[test]
    fn e1_presentation() {
        let p = presentation_ideal(&corpus("e1.json"));
        assert!(p.monomials.is_empty());
        assert_eq!(p.to_strings().binomials, vec!["X2^2 - X1*X3"]);
    }

    #[test]
    fn toric_ideal_of_twisted_cubic() {
        // the toric ideal of the twisted cubic is generated by the 2x2 minors
        let coords = vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]];
        let gens = toric_ideal(&coords);
        let polys: Vec<Polynomial> =
            gens.iter().map(|(a, b)| Polynomial::binomial(Monomial(a.clone()), Monomial(b.clone()))).collect();
        let minors = vec![
            Polynomial::binomial(Monomial(vec![1, 0, 1, 0]), Monomial(vec![0, 2, 0, 0])),
            Polynomial::binomial(Monomial(vec![1, 0, 0, 1]), Monomial(vec![0, 1, 1, 0])),
            Polynomial::binomial(Monomial(vec![0, 1, 0, 1]), Monomial(vec![0, 0, 2, 0])),
        ];
        assert!(ideal_equal(&polys, &minors));
    }

    #[test]
    fn monomial_membership() {
        let e2 = corpus("e2.json");
        assert!(monomial_in_ideal(&e2, &Monomial(vec![1, 0, 1])));
        assert!(!monomial_in_ideal(&e2, &Monomial(vec![2, 3, 0])));
        assert!(!monomial_in_ideal(&e2, &Monomial(vec![0, 0, 0])));
    }

    #[test]
    fn face_primes_of_e2() {
        let e2 = corpus("e2.json");
        assert_eq!(face_prime(&e2, "c1").unwrap().to_strings().monomials, vec!["X3"]);
        let zero = e2.faces()[e2.zero_face()].id.clone();
        assert_eq!(face_prime(&e2, &zero).unwrap().monomials.len(), 3);
        assert!(face_prime(&e2, "nope").is_err());
        let r = check_prime_identities(&e2);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn decompositions() {
        assert!(decompose_check(&corpus("e1.json")).passed);
        assert!(decompose_check(&corpus("e2.json")).passed);
        let e2 = corpus("e2.json");
        let gb = groebner_basis(&presentation_ideal(&e2).generators(), &Order::degrevlex());
        assert!(eliminate(&gb, &[true, true, false]).is_empty());
    }

    #[test]
    fn moebius_presentation() {
        let m = corpus("moebius.json");
        let p = presentation_ideal(&m);
        let s = p.to_strings();
        assert_eq!(p.monomials.len(), 8);
        assert!(p.monomials.iter().all(|x| x.degree() == 3));
        assert_eq!(s.binomials.len(), 3, "{s:?}");
        let t = std::time::Instant::now();
        let r = check_prime_identities(&m);
        assert!(r.passed, "{r:?}");
        eprintln!("moebius prime identities: {:?} {:?}", t.elapsed(), r);
        assert!(decompose_check(&m).passed);
    }

    #[test]
    fn binomials_vanish_at_ones() {
        for name in ["e1.json", "e2.json", "moebius.json", "cycle4.json"] {
            for b in presentation_ideal(&corpus(name)).binomials {
                assert!(num_traits::Zero::is_zero(&b.to_polynomial().eval_at_ones()));
                assert_ne!(b.lhs, b.rhs);
            }
        }
    }
}
