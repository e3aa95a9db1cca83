//! The grading monoid `H_M`, squarefree divisor complexes and multigraded
//! Betti numbers of toric face rings.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::complex::MonoidalComplex;
use crate::exact::{rank_in, rat, Field, RatMatrix};
use crate::grobner::{groebner_basis, normal_form, Monomial, Order, Polynomial};
use crate::ring::{presentation_ideal, PresentedIdeal};

pub const DEFAULT_CLASS_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiError {
    #[error("congruence class has more than {cap} members")]
    ClassOverflow { cap: usize },
    #[error("the second complex is not a subcomplex of the first")]
    NotSubcomplex,
    #[error("degree has {got} entries, expected {expected}")]
    DegreeLength { expected: usize, got: usize },
}

/// A class of `N^E` modulo the congruence generated by the binomials of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HClass {
    pub representative: Monomial,
    /// All members in increasing lexicographic order.
    pub members: Vec<Monomial>,
}

/// Exponent-vector moves `a <-> b` of the binomial generators.
#[derive(Clone, Debug)]
pub struct Congruence {
    moves: Vec<(Vec<u32>, Vec<u32>)>,
    cap: usize,
}

impl Congruence {
    pub fn new(ideal: &PresentedIdeal, cap: usize) -> Congruence {
        Congruence { moves: ideal.binomials.iter().map(|b| (b.lhs.0.clone(), b.rhs.0.clone())).collect(), cap }
    }

    pub fn class_of(&self, h: &Monomial) -> Result<HClass, BettiError> {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(h.0.clone());
        queue.push_back(h.0.clone());
        while let Some(m) = queue.pop_front() {
            for (a, b) in &self.moves {
                for (from, to) in [(a, b), (b, a)] {
                    if from.iter().zip(&m).all(|(x, y)| x <= y) {
                        let next: Vec<u32> = m.iter().zip(from).zip(to).map(|((x, f), t)| x - f + t).collect();
                        if seen.insert(next.clone()) {
                            if seen.len() > self.cap {
                                return Err(BettiError::ClassOverflow { cap: self.cap });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        let members: Vec<Monomial> = seen.into_iter().map(Monomial).collect();
        Ok(HClass { representative: members[0].clone(), members })
    }
}

pub fn class_enumerate(mc: &MonoidalComplex, h: &Monomial, cap: usize) -> Result<HClass, BettiError> {
    check_degree(mc, h)?;
    Congruence::new(&presentation_ideal(mc), cap).class_of(h)
}

fn check_degree(mc: &MonoidalComplex, h: &Monomial) -> Result<(), BettiError> {
    if h.nvars() != mc.num_generators() {
        return Err(BettiError::DegreeLength { expected: mc.num_generators(), got: h.nvars() });
    }
    Ok(())
}

/// A simplicial complex on the vertices `0..n`, given by all of its faces.
/// The void complex has no faces; `{∅}` has exactly the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    pub n: usize,
    pub faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, faces: BTreeSet::new() }
    }

    /// Downward closure of `facets`.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for mask in 0u64..(1 << f.len()) {
                faces.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        SimplicialComplex { n, faces }
    }

    /// The complex of generator sets of faces of a free monoidal complex.
    pub fn from_monoidal(mc: &MonoidalComplex) -> SimplicialComplex {
        SimplicialComplex {
            n: mc.num_generators(),
            faces: mc.faces().iter().map(|f| f.members.clone()).collect(),
        }
    }

    pub fn restrict(&self, w: &[usize]) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().filter(|f| f.iter().all(|v| w.contains(v))).cloned().collect(),
        }
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v))))
            .cloned()
            .collect()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }

    pub fn count_by_size(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for f in &self.faces {
            *out.entry(f.len()).or_insert(0) += 1;
        }
        out
    }
}

/// A bounded chain complex of finite-dimensional vector spaces;
/// `boundaries[t]` maps degree `lowest + t` to degree `lowest + t - 1`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub lowest: i64,
    pub dims: Vec<usize>,
    pub boundaries: Vec<RatMatrix>,
}

impl ChainComplex {
    pub fn dim_at(&self, degree: i64) -> usize {
        let t = degree - self.lowest;
        if t < 0 {
            0
        } else {
            self.dims.get(t as usize).copied().unwrap_or(0)
        }
    }

    /// Consecutive boundaries compose to zero.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// `(degree, dim H_degree)` for every degree with a nonzero chain group or
    /// between two such degrees.
    pub fn homology(&self, field: Field) -> Vec<(i64, usize)> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| rank_in(b, field)).collect();
        (0..self.dims.len())
            .map(|t| {
                let out = ranks[t];
                let inc = ranks.get(t + 1).copied().unwrap_or(0);
                (self.lowest + t as i64, self.dims[t] - out - inc)
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(t, &d)| if (self.lowest + t as i64) % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// Builds a chain complex from graded bases and a boundary rule giving the
/// signed images of each basis element.
fn assemble<B: Ord + Clone>(
    lowest: i64,
    bases: Vec<Vec<B>>,
    boundary: impl Fn(&B) -> Vec<(B, i64)>,
) -> ChainComplex {
    let index: Vec<BTreeMap<B, usize>> =
        bases.iter().map(|b| b.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect()).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut boundaries = Vec::new();
    for t in 0..bases.len() {
        let rows = if t == 0 { 0 } else { dims[t - 1] };
        let mut m = RatMatrix::zeros(rows, dims[t]);
        if t > 0 {
            for (j, b) in bases[t].iter().enumerate() {
                for (img, s) in boundary(b) {
                    if let Some(&i) = index[t - 1].get(&img) {
                        m[(i, j)] += rat(s);
                    }
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { lowest, dims, boundaries }
}

/// The relative augmented chain complex `C̃(Δ)/C̃(Δ')`, with `∅` in degree -1
/// and sign `(-1)^k` for removing the k-th smallest vertex.
pub fn relative_chain_complex(delta: &SimplicialComplex, sub: &SimplicialComplex) -> Result<ChainComplex, BettiError> {
    if !sub.is_subcomplex_of(delta) {
        return Err(BettiError::NotSubcomplex);
    }
    let top = delta.faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut bases: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    for f in delta.faces.difference(&sub.faces) {
        bases[f.len()].push(f.clone());
    }
    Ok(assemble(-1, bases, |f: &Vec<usize>| {
        (0..f.len())
            .map(|k| {
                let mut g = f.clone();
                g.remove(k);
                (g, if k % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }))
}

/// `(i, dim H̃_i(Δ, Δ'))` for degrees `i >= -1`.
pub fn relative_homology(
    delta: &SimplicialComplex,
    sub: &SimplicialComplex,
    field: Field,
) -> Result<Vec<(i64, usize)>, BettiError> {
    Ok(relative_chain_complex(delta, sub)?.homology(field))
}

/// Shared data for Betti computations on one complex.
pub struct BettiContext<'a> {
    mc: &'a MonoidalComplex,
    ideal: PresentedIdeal,
    congruence: Congruence,
    reps: std::cell::RefCell<HashMap<Monomial, Monomial>>,
}

impl<'a> BettiContext<'a> {
    pub fn new(mc: &'a MonoidalComplex, cap: usize) -> BettiContext<'a> {
        let ideal = presentation_ideal(mc);
        let congruence = Congruence::new(&ideal, cap);
        BettiContext { mc, ideal, congruence, reps: Default::default() }
    }

    pub fn ideal(&self) -> &PresentedIdeal {
        &self.ideal
    }

    fn in_ideal(&self, m: &Monomial) -> bool {
        !self.mc.in_common_face(&m.support())
    }

    pub fn class_of(&self, h: &Monomial) -> Result<HClass, BettiError> {
        check_degree(self.mc, h)?;
        self.congruence.class_of(h)
    }

    fn representative(&self, g: &Monomial) -> Result<Monomial, BettiError> {
        if let Some(r) = self.reps.borrow().get(g) {
            return Ok(r.clone());
        }
        let class = self.congruence.class_of(g)?;
        let mut reps = self.reps.borrow_mut();
        for m in &class.members {
            reps.insert(m.clone(), class.representative.clone());
        }
        Ok(class.representative)
    }

    /// `(Δ_h, Δ_h^M)`.
    pub fn divisor_complexes(&self, h: &Monomial) -> Result<(SimplicialComplex, SimplicialComplex), BettiError> {
        let class = self.class_of(h)?;
        let n = self.mc.num_generators();
        let mut delta = SimplicialComplex::void(n);
        let mut sub = SimplicialComplex::void(n);
        for m in &class.members {
            let supp = m.support();
            for mask in 0u64..(1 << supp.len()) {
                let f: Vec<usize> = supp.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                let g = m.div(&Monomial::from_support(n, &f));
                if self.in_ideal(&g) {
                    sub.faces.insert(f.clone());
                }
                delta.faces.insert(f);
            }
        }
        Ok((delta, sub))
    }

    /// The same complexes via ideal membership: `F ∈ Δ_h` iff `X^h ∈ B + (X^F)`,
    /// and `F ∈ Δ_h^M` iff `X^h ∈ B + X^F·A`.
    pub fn divisor_complexes_by_groebner(&self, h: &Monomial) -> (SimplicialComplex, SimplicialComplex) {
        let n = self.mc.num_generators();
        let order = Order::degrevlex();
        let b = self.ideal.binomial_generators();
        let xh = Polynomial::monomial(h.clone());
        let mut delta = SimplicialComplex::void(n);
        let mut sub = SimplicialComplex::void(n);
        let supp = h.support();
        for mask in 0u64..(1 << supp.len()) {
            let f: Vec<usize> = supp.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let xf = Monomial::from_support(n, &f);
            let mut gens = b.clone();
            gens.push(Polynomial::monomial(xf.clone()));
            if normal_form(&xh, &groebner_basis(&gens, &order), &order).is_zero() {
                delta.faces.insert(f.clone());
            }
            let mut gens = b.clone();
            gens.extend(self.ideal.monomials.iter().map(|a| Polynomial::monomial(a.mul(&xf))));
            if normal_form(&xh, &groebner_basis(&gens, &order), &order).is_zero() {
                sub.faces.insert(f);
            }
        }
        // faces outside supp(h) can only appear through other class members
        let class = self.class_of(h).ok();
        if let Some(class) = class {
            let all: BTreeSet<usize> = class.members.iter().flat_map(|m| m.support()).collect();
            if all.len() > supp.len() {
                let extra: Vec<usize> = all.into_iter().collect();
                for mask in 0u64..(1 << extra.len()) {
                    let f: Vec<usize> =
                        extra.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                    if delta.faces.contains(&f) {
                        continue;
                    }
                    let xf = Monomial::from_support(n, &f);
                    let mut gens = b.clone();
                    gens.push(Polynomial::monomial(xf.clone()));
                    if normal_form(&xh, &groebner_basis(&gens, &order), &order).is_zero() {
                        delta.faces.insert(f.clone());
                    }
                    let mut gens = b.clone();
                    gens.extend(self.ideal.monomials.iter().map(|a| Polynomial::monomial(a.mul(&xf))));
                    if normal_form(&xh, &groebner_basis(&gens, &order), &order).is_zero() {
                        sub.faces.insert(f);
                    }
                }
            }
        }
        (delta, sub)
    }

    /// The degree-`h` strand of the Koszul complex of `K[M]`: basis pairs
    /// `(F, class of g)` with `g + χ_F ~ h` and `X^g ∉ I_M`.
    pub fn koszul_complex(&self, h: &Monomial) -> Result<ChainComplex, BettiError> {
        let class = self.class_of(h)?;
        let n = self.mc.num_generators();
        let mut bases: Vec<BTreeSet<(Vec<usize>, Monomial)>> = vec![BTreeSet::new(); n + 1];
        for m in &class.members {
            let supp = m.support();
            for mask in 0u64..(1 << supp.len()) {
                let f: Vec<usize> = supp.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                let g = m.div(&Monomial::from_support(n, &f));
                if !self.in_ideal(&g) {
                    let r = self.representative(&g)?;
                    bases[f.len()].insert((f, r));
                }
            }
        }
        let top = bases.iter().rposition(|b| !b.is_empty()).unwrap_or(0);
        bases.truncate(top + 1);
        let bases: Vec<Vec<(Vec<usize>, Monomial)>> = bases.into_iter().map(|b| b.into_iter().collect()).collect();
        // representatives of all targets are needed before assembling
        let mut images: BTreeMap<(Vec<usize>, Monomial), Vec<((Vec<usize>, Monomial), i64)>> = BTreeMap::new();
        for b in bases.iter().flatten() {
            let (f, g) = b;
            let mut out = Vec::new();
            for k in 0..f.len() {
                let target = g.mul(&Monomial::var(n, f[k]));
                if self.in_ideal(&target) {
                    continue;
                }
                let mut rest = f.clone();
                rest.remove(k);
                out.push(((rest, self.representative(&target)?), if k % 2 == 0 { 1 } else { -1 }));
            }
            images.insert(b.clone(), out);
        }
        Ok(assemble(0, bases, |b| images[b].clone()))
    }

    /// `(i, β_i)` from the homology of the Koszul strand.
    pub fn koszul_component(&self, h: &Monomial, field: Field) -> Result<KoszulComponent, BettiError> {
        let cx = self.koszul_complex(h)?;
        debug_assert!(cx.is_complex());
        let homology = cx.homology(field);
        Ok(KoszulComponent {
            dims: cx.dims.iter().enumerate().map(|(i, &d)| (i, d)).collect(),
            betti: homology.into_iter().map(|(i, d)| (i as usize, d)).collect(),
        })
    }

    /// `β_i = dim H̃_{i-1}(Δ_h, Δ_h^M)`, nonzero entries only.
    pub fn relative_betti(&self, h: &Monomial, field: Field) -> Result<BTreeMap<usize, usize>, BettiError> {
        let (delta, sub) = self.divisor_complexes(h)?;
        Ok(relative_homology(&delta, &sub, field)?
            .into_iter()
            .filter(|&(_, d)| d > 0)
            .map(|(i, d)| ((i + 1) as usize, d))
            .collect())
    }

    pub fn graded_betti(&self, h: &Monomial, field: Field) -> Result<GradedBetti, BettiError> {
        let relative = self.relative_betti(h, field)?;
        if self.mc.is_embedded() {
            return Ok(GradedBetti { method: "hochster", betti: relative.clone(), relative, koszul: None, disagreements: Vec::new() });
        }
        let koszul: BTreeMap<usize, usize> =
            self.koszul_component(h, field)?.betti.into_iter().filter(|&(_, d)| d > 0).collect();
        let idx: BTreeSet<usize> = relative.keys().chain(koszul.keys()).copied().collect();
        let disagreements = idx.into_iter().filter(|i| relative.get(i) != koszul.get(i)).collect();
        Ok(GradedBetti { method: "koszul", betti: koszul.clone(), relative, koszul: Some(koszul), disagreements })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulComponent {
    /// `(i, dim K_i)` in degree `h`.
    pub dims: Vec<(usize, usize)>,
    /// `(i, dim H_i)`.
    pub betti: Vec<(usize, usize)>,
}

impl KoszulComponent {
    pub fn betti_table(&self) -> BTreeMap<usize, usize> {
        self.betti.iter().filter(|&&(_, d)| d > 0).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBetti {
    /// "hochster" for embedded fans, "koszul" otherwise.
    pub method: &'static str,
    /// Nonzero `β_i` reported by `method`.
    pub betti: BTreeMap<usize, usize>,
    /// Nonzero `dim H̃_{i-1}(Δ_h, Δ_h^M)`.
    pub relative: BTreeMap<usize, usize>,
    pub koszul: Option<BTreeMap<usize, usize>>,
    /// Indices where the relative and Koszul numbers differ.
    pub disagreements: Vec<usize>,
}

pub fn divisor_complexes(
    mc: &MonoidalComplex,
    h: &Monomial,
    cap: usize,
) -> Result<(SimplicialComplex, SimplicialComplex), BettiError> {
    BettiContext::new(mc, cap).divisor_complexes(h)
}

pub fn koszul_component(mc: &MonoidalComplex, h: &Monomial, field: Field, cap: usize) -> Result<KoszulComponent, BettiError> {
    BettiContext::new(mc, cap).koszul_component(h, field)
}

pub fn graded_betti(mc: &MonoidalComplex, h: &Monomial, field: Field, cap: usize) -> Result<GradedBetti, BettiError> {
    BettiContext::new(mc, cap).graded_betti(h, field)
}

/// `β_{i,W}` of the Stanley–Reisner ring of `delta`, nonzero entries only.
/// For `W = ∅` this is the unit `β_{0,∅} = 1`.
pub fn hochster_sr(delta: &SimplicialComplex, w: &[usize], field: Field) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    if w.is_empty() {
        out.insert(0, 1);
        return out;
    }
    let restricted = delta.restrict(w);
    let homology = relative_homology(&restricted, &SimplicialComplex::void(delta.n), field).expect("void is a subcomplex");
    for (j, d) in homology {
        if d > 0 {
            let i = w.len() as i64 - 1 - j;
            if i >= 0 {
                out.insert(i as usize, d);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancelViolation {
    pub i: String,
    pub j: String,
    pub k: String,
    pub h: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancelReport {
    pub passed: bool,
    pub max_degree: u32,
    pub classes_checked: usize,
    pub violations_found: usize,
    pub violation: Option<CancelViolation>,
}

fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut layer = vec![Monomial::one(n)];
    for _ in 0..degree {
        let mut next = BTreeSet::new();
        for m in &layer {
            for e in 0..n {
                next.insert(m.mul(&Monomial::var(n, e)));
            }
        }
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Checks that `ī + j̄ = ī + k̄` implies `X^j - X^k ∈ I_M` over all classes
/// of degree at most 3.
pub fn check_cancel(mc: &MonoidalComplex, cap: usize) -> Result<CancelReport, BettiError> {
    const MAX_DEGREE: u32 = 3;
    let ctx = BettiContext::new(mc, cap);
    let n = mc.num_generators();
    let order = Order::degrevlex();
    let gb = groebner_basis(&ctx.ideal.generators(), &order);
    let names = mc.names();
    let mut done: BTreeSet<Monomial> = BTreeSet::new();
    let mut violations: Vec<(Monomial, Monomial, Monomial, Monomial)> = Vec::new();
    let mut classes = 0;
    for h in monomials_up_to(n, MAX_DEGREE) {
        if done.contains(&h) {
            continue;
        }
        let class = ctx.class_of(&h)?;
        classes += 1;
        done.extend(class.members.iter().cloned());
        for (a, m1) in class.members.iter().enumerate() {
            for m2 in &class.members[a + 1..] {
                let common = Monomial(m1.0.iter().zip(&m2.0).map(|(x, y)| *x.min(y)).collect());
                for i in divisors(&common).into_iter().filter(|i| !i.is_one()) {
                    let (j, k) = (m1.div(&i), m2.div(&i));
                    let diff = Polynomial::binomial(j.clone(), k.clone());
                    if !normal_form(&diff, &gb, &order).is_zero() {
                        let (j, k) = if j < k { (j, k) } else { (k, j) };
                        violations.push((i, j, k, class.representative.clone()));
                    }
                }
            }
        }
    }
    violations.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| b.0.cmp(&a.0)).then_with(|| (&a.1, &a.2).cmp(&(&b.1, &b.2))));
    let violation = violations.first().map(|(i, j, k, h)| CancelViolation {
        i: i.format(names),
        j: j.format(names),
        k: k.format(names),
        h: h.format(names),
    });
    Ok(CancelReport {
        passed: violations.is_empty(),
        max_degree: MAX_DEGREE,
        classes_checked: classes,
        violations_found: violations.len(),
        violation,
    })
}

fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &e in &m.0 {
        out = out.into_iter().flat_map(|p: Vec<u32>| (0..=e).map(move |k| {
            let mut q = p.clone();
            q.push(k);
            q
        })).collect();
    }
    out.into_iter().map(Monomial).collect()
}
