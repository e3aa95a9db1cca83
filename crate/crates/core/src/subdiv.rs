//! Regular subdivisions induced by weights, the height function, the
//! complex `M_w` with its ideal `J`, and classification of `ini_w(I_M)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::complex::MonoidalComplex;
use crate::exact::{format_rational, in_monoid, rank_over_field, rat, IntMatrix, Rational};
use crate::geom::{dual_description, is_unimodular, l1_norm, positive_grading, Cone, Lattice};
use crate::grobner::{groebner_basis, ideal_contains, ideal_equal, initial_ideal_weight, normal_form, Order, Polynomial};
use crate::ring::{presentation_from_facets, presentation_ideal_with, PresentedIdeal, DEFAULT_DEGREE_BOUND};

pub const DEFAULT_RADICAL_CAP: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubdivError {
    #[error("weight vector has {got} entries, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("point {0} lies outside the support of the complex")]
    PointOutsideSupport(String),
    #[error("no power up to {cap} of {generator} lies in the initial ideal")]
    RadicalCapExceeded { generator: String, cap: u32 },
}

/// `C'_c = R_+((a_e, w_e) : e ∈ M_c)` for one face, with the linear forms
/// bounding it from below.
#[derive(Clone, Debug)]
struct Lifted {
    cone: Cone,
    /// `(n_a, n_h)` with `n_h > 0`: `h >= -n_a·a / n_h` on the face.
    lower: Vec<(Vec<i64>, i64)>,
    /// Whether the lifted cone has the same dimension as the face (linear lift).
    flat: bool,
}

fn lift(coords: &[Vec<i64>], weights: &[i64]) -> Lifted {
    let d = coords.first().map_or(0, |v| v.len());
    let gens: Vec<Vec<i64>> = coords
        .iter()
        .zip(weights)
        .map(|(a, &w)| {
            let mut v = a.clone();
            v.push(w);
            v
        })
        .collect();
    let cone = dual_description(&gens, d + 1).expect("lifted generators have equal length");
    let base = dual_description(coords, d).expect("equal length");
    let flat = cone.dim() == base.dim();
    let mut lower: Vec<(Vec<i64>, i64)> = Vec::new();
    for e in cone.equations() {
        let h = e[d];
        if h != 0 {
            let s = h.signum();
            lower.push((e[..d].iter().map(|x| x * s).collect(), h * s));
        }
    }
    for n in cone.inequalities() {
        if n[d] > 0 {
            lower.push((n[..d].to_vec(), n[d]));
        }
    }
    Lifted { cone, lower, flat }
}

impl Lifted {
    fn height(&self, a: &[Rational]) -> Rational {
        self.lower
            .iter()
            .map(|(na, nh)| -na.iter().zip(a).map(|(&x, y)| rat(x) * y).sum::<Rational>() / rat(*nh))
            .max()
            .expect("a lifted cone over a pointed cone has a lower boundary")
    }

    /// Generators tight on each lower facet, as index sets.
    fn lower_facets(&self, ngens: usize) -> Vec<Vec<usize>> {
        if self.flat {
            return vec![(0..ngens).collect()];
        }
        let d = self.cone.ambient_dim() - 1;
        let mut out: Vec<Vec<usize>> = self
            .cone
            .inequalities()
            .iter()
            .filter(|n| n[d] > 0)
            .map(|n| {
                (0..ngens)
                    .filter(|&i| self.cone.generators()[i].iter().zip(n).map(|(a, b)| a * b).sum::<i64>() == 0)
                    .collect()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn check_weights(mc: &MonoidalComplex, w: &[u64]) -> Result<Vec<i64>, SubdivError> {
    if w.len() != mc.num_generators() {
        return Err(SubdivError::WeightLength { expected: mc.num_generators(), got: w.len() });
    }
    Ok(w.iter().map(|&x| x as i64).collect())
}

/// The height function `htt_w` on every face of a complex.
#[derive(Clone, Debug)]
pub struct HeightFunction {
    lifted: Vec<Lifted>,
    faces: Vec<Cone>,
}

impl HeightFunction {
    pub fn new(mc: &MonoidalComplex, w: &[u64]) -> Result<HeightFunction, SubdivError> {
        let wi = check_weights(mc, w)?;
        let mut lifted = Vec::new();
        let mut faces = Vec::new();
        for f in mc.faces() {
            let ws: Vec<i64> = f.members.iter().map(|&e| wi[e]).collect();
            lifted.push(lift(&f.coords, &ws));
            faces.push(f.cone.clone());
        }
        Ok(HeightFunction { lifted, faces })
    }

    /// `htt_w(a)` for a point `a` given in the coordinates of face `face`.
    pub fn at(&self, face: usize, a: &[Rational]) -> Result<Rational, SubdivError> {
        if !self.faces[face].contains_rational(a) {
            return Err(SubdivError::PointOutsideSupport(fmt_point(a)));
        }
        Ok(self.lifted[face].height(a))
    }

    /// `htt_w(a)` for a point of the ambient space of an embedded complex,
    /// evaluated on the smallest face containing it.
    pub fn at_point(&self, a: &[Rational]) -> Result<Rational, SubdivError> {
        let face = (0..self.faces.len())
            .filter(|&i| self.faces[i].ambient_dim() == a.len() && self.faces[i].contains_rational(a))
            .min_by_key(|&i| self.faces[i].dim())
            .ok_or_else(|| SubdivError::PointOutsideSupport(fmt_point(a)))?;
        Ok(self.lifted[face].height(a))
    }
}

fn fmt_point(a: &[Rational]) -> String {
    format!("({})", a.iter().map(format_rational).collect::<Vec<_>>().join(","))
}

/// `htt_w(a)` for an embedded complex.
pub fn height(mc: &MonoidalComplex, w: &[u64], a: &[Rational]) -> Result<Rational, SubdivError> {
    HeightFunction::new(mc, w)?.at_point(a)
}

#[derive(Clone, Debug)]
pub struct Cell {
    /// Index of the maximal face of the complex containing the cell.
    pub host: usize,
    pub dim: usize,
    /// `N_{d,w}`: generators in the cell lifted onto the bottom.
    pub bottom: Vec<usize>,
    pub coords: Vec<Vec<i64>>,
    pub cone: Cone,
    pub maximal: bool,
}

#[derive(Clone, Debug)]
pub struct WeightedSubdivision {
    pub names: Vec<String>,
    pub weights: Vec<u64>,
    /// All cells of `Γ_w`, ordered by dimension and bottom generators.
    pub cells: Vec<Cell>,
    /// `htt_w(a_e)` for generators lying in some face.
    pub heights: Vec<Option<Rational>>,
    /// Generators `e` with `a_e ∉ |M_w|`.
    pub vanishing: Vec<usize>,
    /// Generators of each maximal cell's monoid that survive in `K[M_w]`.
    facet_members: Vec<(Vec<usize>, Vec<Vec<i64>>)>,
}

impl WeightedSubdivision {
    pub fn maximal_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.maximal)
    }
}

pub fn subdivision(mc: &MonoidalComplex, w: &[u64]) -> Result<WeightedSubdivision, SubdivError> {
    let wi = check_weights(mc, w)?;
    let n = mc.num_generators();
    let hf = HeightFunction::new(mc, w)?;

    let mut heights: Vec<Option<Rational>> = vec![None; n];
    for (fi, f) in mc.faces().iter().enumerate() {
        for (&e, v) in f.members.iter().zip(&f.coords) {
            if heights[e].is_none() {
                let a: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
                heights[e] = Some(hf.lifted[fi].height(&a));
            }
        }
    }

    // maximal cells from the lower facets over each maximal face
    let mut cells: BTreeMap<Vec<usize>, Cell> = BTreeMap::new();
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for fi in mc.facets() {
        let f = &mc.faces()[fi];
        let ws: Vec<i64> = f.members.iter().map(|&e| wi[e]).collect();
        let lifted = lift(&f.coords, &ws);
        for tight in lifted.lower_facets(f.members.len()) {
            let coords: Vec<Vec<i64>> = tight.iter().map(|&i| f.coords[i].clone()).collect();
            let bottom: Vec<usize> = tight.iter().map(|&i| f.members[i]).collect();
            let cone = dual_description(&coords, f.coords[0].len()).expect("equal length");
            if cone.dim() != f.dim {
                continue;
            }
            maximal.push(bottom.clone());
            // faces of the cell, including itself
            for g in cone.face_lattice().faces {
                let members: Vec<usize> = g.generator_indices.iter().map(|&i| bottom[i]).collect();
                cells.entry(members.clone()).or_insert_with(|| Cell {
                    host: fi,
                    dim: g.cone.dim(),
                    bottom: members,
                    coords: g.generator_indices.iter().map(|&i| coords[i].clone()).collect(),
                    cone: g.cone,
                    maximal: false,
                });
            }
        }
    }
    for m in &maximal {
        cells.get_mut(m).expect("inserted").maximal = true;
    }
    if cells.is_empty() {
        let z = &mc.faces()[mc.zero_face()];
        cells.insert(
            Vec::new(),
            Cell { host: mc.zero_face(), dim: 0, bottom: Vec::new(), coords: Vec::new(), cone: z.cone.clone(), maximal: true },
        );
    }
    let mut cells: Vec<Cell> = cells.into_values().collect();
    cells.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.bottom.cmp(&b.bottom)));

    // generators in the monoid of some maximal cell survive
    let mut facet_members: Vec<(Vec<usize>, Vec<Vec<i64>>)> = Vec::new();
    let mut survives = vec![false; n];
    for c in cells.iter().filter(|c| c.maximal) {
        let host = &mc.faces()[c.host];
        let space = host.coords.first().map_or(0, |v| v.len());
        let mut members = Vec::new();
        let mut coords = Vec::new();
        for (&e, v) in host.members.iter().zip(&host.coords) {
            let inside = c.bottom.contains(&e) || (c.cone.contains(v) && in_monoid_cols(&c.coords, v, space));
            if inside {
                survives[e] = true;
                members.push(e);
                coords.push(v.clone());
            }
        }
        facet_members.push((members, coords));
    }
    let vanishing = (0..n).filter(|&e| !survives[e]).collect();

    Ok(WeightedSubdivision { names: mc.names().to_vec(), weights: w.to_vec(), cells, heights, vanishing, facet_members })
}

fn in_monoid_cols(gens: &[Vec<i64>], v: &[i64], space: usize) -> bool {
    if gens.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let a = IntMatrix::from_columns(gens, space).expect("equal length");
    in_monoid(&a, v)
}

/// The presentation ideal of `K[M_w]` over the full generator family.
pub fn j_ideal(sub: &WeightedSubdivision) -> PresentedIdeal {
    presentation_from_facets(&sub.names, &sub.facet_members, DEFAULT_DEGREE_BOUND)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCrossCheck {
    /// Whether the bounded enumeration agrees with the algebraic radical test.
    pub agrees: bool,
    /// Coordinate-sum bound used for the enumeration.
    pub bound: i64,
    /// A point of `M_c ∩ D_d` outside the monoid generated by `N_{d,w}`.
    pub missing_point: Option<MissingPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingPoint {
    pub face: String,
    pub cell: Vec<String>,
    pub point: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialClassification {
    pub is_monomial: bool,
    pub is_radical: bool,
    pub is_triangulation: bool,
    pub is_unimodular: bool,
    pub is_free: bool,
    pub certificates: Vec<String>,
    pub radical_cross_check: RadicalCrossCheck,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Classified {
    pub initial_ideal: Vec<Polynomial>,
    pub j: PresentedIdeal,
    pub subdivision: WeightedSubdivision,
    pub classification: InitialClassification,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub radical_cap: u32,
    pub degree_bound: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { radical_cap: DEFAULT_RADICAL_CAP, degree_bound: DEFAULT_DEGREE_BOUND }
    }
}

pub fn classify(mc: &MonoidalComplex, w: &[u64]) -> Result<Classified, SubdivError> {
    classify_with(mc, w, ClassifyOptions::default())
}

fn names_of(sub: &WeightedSubdivision, es: &[usize]) -> Vec<String> {
    es.iter().map(|&e| sub.names[e].clone()).collect()
}

fn rank_of(rows: &[Vec<i64>]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => rank_over_field(&IntMatrix::from_rows(rows, r.len()).expect("equal rows").to_rational()),
    }
}

pub fn classify_with(mc: &MonoidalComplex, w: &[u64], opts: ClassifyOptions) -> Result<Classified, SubdivError> {
    let im = presentation_ideal_with(mc, opts.degree_bound);
    let gens = im.generators();
    let ini = initial_ideal_weight(&gens, w).expect("presentation ideals are monomial-binomial");
    let sub = subdivision(mc, w)?;
    let j = j_ideal(&sub);
    let jg = j.generators();
    let names = mc.names();
    let mut certificates = Vec::new();

    let order = Order::degrevlex();
    let ini_gb = groebner_basis(&ini, &order);
    let is_monomial = ini_gb.iter().all(|g| g.is_monomial());
    if !is_monomial {
        if let Some(g) = ini_gb.iter().find(|g| !g.is_monomial()) {
            certificates.push(format!("initial ideal has the non-monomial basis element {}", g.format(names)));
        }
    }

    // ini ⊆ J and J ⊆ rad(ini)
    assert!(ideal_contains(&jg, &ini), "initial ideal must lie in J");
    for g in &jg {
        let found = (1..=opts.radical_cap).find(|&k| normal_form(&g.pow(k), &ini_gb, &order).is_zero());
        if found.is_none() {
            return Err(SubdivError::RadicalCapExceeded { generator: g.format(names), cap: opts.radical_cap });
        }
    }
    let is_radical = ideal_equal(&ini, &jg);
    if !is_radical {
        if let Some(g) = jg.iter().find(|g| !normal_form(g, &ini_gb, &order).is_zero()) {
            let k = (2..=opts.radical_cap).find(|&k| normal_form(&g.pow(k), &ini_gb, &order).is_zero()).unwrap_or(1);
            certificates.push(format!(
                "{} lies in J but not in the initial ideal, while its power {k} does",
                g.format(names)
            ));
        }
    }

    let cross = radical_cross_check(mc, &sub, is_radical);
    if let Some(m) = &cross.missing_point {
        certificates.push(format!(
            "N-generators {{{}}} miss the point {:?} of M_{}",
            m.cell.join(","),
            m.point,
            m.face
        ));
    }

    let mut is_triangulation = true;
    let mut is_unimodular_all = true;
    let mut is_free = true;
    for c in sub.maximal_cells() {
        let cell_names = names_of(&sub, &c.bottom).join(",");
        let independent = c.bottom.len() == c.dim && rank_of(&c.coords) == c.dim;
        if !independent {
            if is_triangulation {
                certificates.push(format!("cell {{{cell_names}}} has {} bottom generators in dimension {}", c.bottom.len(), c.dim));
            }
            is_triangulation = false;
        }
        let host = &mc.faces()[c.host];
        let space = host.coords.first().map_or(0, |v| v.len());
        let lattice = Lattice::spanned_by(&host.coords, space).expect("equal length");
        let uni = independent && is_unimodular(&c.cone, &lattice).unwrap_or(false);
        if !uni {
            if is_unimodular_all {
                certificates.push(format!("cell {{{cell_names}}} is not unimodular with respect to the group of {}", host.id));
            }
            is_unimodular_all = false;
        }
        let minimal: Vec<Vec<i64>> = (0..c.coords.len())
            .filter(|&i| {
                let others: Vec<Vec<i64>> =
                    c.coords.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, v)| v.clone()).collect();
                !in_monoid_cols(&others, &c.coords[i], space)
            })
            .map(|i| c.coords[i].clone())
            .collect();
        if rank_of(&minimal) != minimal.len() {
            if is_free {
                certificates.push(format!("the monoid of cell {{{cell_names}}} is not free"));
            }
            is_free = false;
        }
    }
    let mut notes = Vec::new();
    if is_monomial && is_radical {
        notes.push("certifies normality of all M_c".to_string());
    }
    if !cross.agrees {
        notes.push(format!("bounded enumeration at coordinate sum {} disagrees with the radical test", cross.bound));
    } else if cross.missing_point.is_none() {
        notes.push(format!("monoid comparison consistent at bound {}", cross.bound));
    }

    let classification = InitialClassification {
        is_monomial,
        is_radical,
        is_triangulation,
        is_unimodular: is_unimodular_all,
        is_free,
        certificates,
        radical_cross_check: cross,
        notes,
    };
    Ok(Classified { initial_ideal: ini, j, subdivision: sub, classification })
}

/// Compares `N_{d,w}` with `M_c ∩ D_d` on points of coordinate sum at most
/// `6·max |a_e|_1`.
fn radical_cross_check(mc: &MonoidalComplex, sub: &WeightedSubdivision, is_radical: bool) -> RadicalCrossCheck {
    let max_norm = mc.faces().iter().flat_map(|f| f.coords.iter()).map(|v| l1_norm(v)).max().unwrap_or(0);
    let bound = 6 * max_norm;
    let mut missing = None;
    'cells: for c in sub.maximal_cells() {
        let host = &mc.faces()[c.host];
        let space = host.coords.first().map_or(0, |v| v.len());
        for p in monoid_points(&host.coords, space, bound) {
            if c.cone.contains(&p) && !in_monoid_cols(&c.coords, &p, space) {
                missing = Some(MissingPoint { face: host.id.clone(), cell: names_of(sub, &c.bottom), point: p });
                break 'cells;
            }
        }
    }
    // a missing point certifies a non-radical initial ideal
    let agrees = missing.is_none() == is_radical;
    RadicalCrossCheck { agrees, bound, missing_point: missing }
}

/// Points of the monoid generated by `gens` with coordinate sum at most `bound`.
pub fn monoid_points(gens: &[Vec<i64>], space: usize, bound: i64) -> Vec<Vec<i64>> {
    let Some(y) = positive_grading(gens, space) else {
        return Vec::new();
    };
    let ymax = y.iter().map(|x| x.abs()).max().unwrap_or(0);
    let limit = ymax * bound;
    let grade = |v: &[i64]| v.iter().zip(&y).map(|(a, b)| a * b).sum::<i64>();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let zero = vec![0; space];
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
            if grade(&q) <= limit && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().filter(|p| l1_norm(p) <= bound).collect()
}

/// True when `htt` on the sample `Σ α_i b_i` is at most `Σ α_i htt(b_i)`.
pub fn convexity_holds(hf: &HeightFunction, face: usize, points: &[Vec<i64>], alphas: &[Rational]) -> Result<(bool, bool), SubdivError> {
    let space = points.first().map_or(0, |p| p.len());
    let mut combo = vec![Rational::zero(); space];
    let mut rhs = Rational::zero();
    for (p, a) in points.iter().zip(alphas) {
        let pr: Vec<Rational> = p.iter().map(|&x| rat(x)).collect();
        rhs += a * hf.at(face, &pr)?;
        for (c, x) in combo.iter_mut().zip(&pr) {
            *c += a * x;
        }
    }
    let lhs = hf.at(face, &combo)?;
    debug_assert!(!alphas.iter().any(|a| a.is_negative()));
    Ok((lhs <= rhs, lhs == rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;
    use crate::grobner::Monomial;

    fn corpus(name: &str) -> MonoidalComplex {
        let path = format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
        MonoidalComplex::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn heights_on_e1() {
        let e1 = corpus("e1.json");
        assert_eq!(height(&e1, &[0, 1, 0], &pt(&[1, 1])).unwrap(), rat(0));
        assert_eq!(height(&e1, &[1, 0, 1], &pt(&[2, 2])).unwrap(), rat(0));
        assert_eq!(height(&e1, &[1, 0, 1], &pt(&[1, 0])).unwrap(), rat(1));
        assert_eq!(height(&e1, &[1, 0, 1], &[rat(1), rat_frac(1, 2)]).unwrap(), rat_frac(1, 2));
        assert!(matches!(height(&e1, &[1, 0, 1], &pt(&[0, 1])), Err(SubdivError::PointOutsideSupport(_))));
        assert!(matches!(height(&e1, &[1, 0], &pt(&[1, 1])), Err(SubdivError::WeightLength { .. })));
    }

    #[test]
    fn heights_bounded_by_weights() {
        for name in ["e1.json", "e2.json", "moebius.json"] {
            let mc = corpus(name);
            let n = mc.num_generators();
            for seed in 0..5u64 {
                let w: Vec<u64> = (0..n as u64).map(|i| (i * 7 + seed * 3) % 4).collect();
                let sub = subdivision(&mc, &w).unwrap();
                for e in 0..n {
                    assert!(sub.heights[e].clone().unwrap() <= rat(w[e] as i64));
                }
            }
        }
    }

    #[test]
    fn subdivisions_of_e1() {
        let e1 = corpus("e1.json");
        let s = subdivision(&e1, &[1, 0, 1]).unwrap();
        let max: Vec<Vec<usize>> = s.maximal_cells().map(|c| c.bottom.clone()).collect();
        assert_eq!(max, vec![vec![0, 1], vec![1, 2]]);
        assert!(s.vanishing.is_empty());

        let s = subdivision(&e1, &[0, 1, 0]).unwrap();
        let max: Vec<Vec<usize>> = s.maximal_cells().map(|c| c.bottom.clone()).collect();
        assert_eq!(max, vec![vec![0, 2]]);
        assert_eq!(s.vanishing, vec![1]);

        let s = subdivision(&e1, &[1, 1, 1]).unwrap();
        let max: Vec<Vec<usize>> = s.maximal_cells().map(|c| c.bottom.clone()).collect();
        assert_eq!(max, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn j_ideals_of_e1() {
        let e1 = corpus("e1.json");
        let names = e1.names().to_vec();
        let j = |w: &[u64]| j_ideal(&subdivision(&e1, w).unwrap());
        assert_eq!(j(&[0, 1, 0]).to_strings().monomials, vec!["X2"]);
        assert_eq!(j(&[1, 0, 1]).to_strings().monomials, vec!["X1*X3"]);
        let triv = j(&[1, 1, 1]);
        assert!(triv.monomials.is_empty());
        assert_eq!(triv.binomials[0].to_polynomial().format(&names), "X2^2 - X1*X3");
    }

    #[test]
    fn classification_of_e1() {
        let e1 = corpus("e1.json");
        let c = classify(&e1, &[1, 0, 1]).unwrap().classification;
        assert!(c.is_monomial && c.is_radical && c.is_triangulation && c.is_unimodular && c.is_free);
        assert!(c.radical_cross_check.agrees);

        let c = classify(&e1, &[0, 1, 0]).unwrap().classification;
        assert!(c.is_monomial);
        assert!(!c.is_radical);
        let m = c.radical_cross_check.missing_point.clone().unwrap();
        assert_eq!(m.point, vec![1, 1]);
        assert!(c.radical_cross_check.agrees);

        let r = classify(&e1, &[1, 1, 1]).unwrap();
        let c = r.classification;
        assert!(!c.is_monomial && c.is_radical && !c.is_triangulation);
        assert_eq!(r.initial_ideal.len(), 1);
    }

    #[test]
    fn radical_power_witness() {
        let e1 = corpus("e1.json");
        let r = classify(&e1, &[0, 1, 0]).unwrap();
        let x2 = Polynomial::monomial(Monomial(vec![0, 1, 0]));
        let gb = groebner_basis(&r.initial_ideal, &Order::degrevlex());
        assert!(!normal_form(&x2, &gb, &Order::degrevlex()).is_zero());
        assert!(normal_form(&x2.pow(2), &gb, &Order::degrevlex()).is_zero());
    }

    #[test]
    fn monoid_enumeration() {
        let pts = monoid_points(&[vec![1, 0], vec![1, 2]], 2, 4);
        assert!(pts.contains(&vec![2, 2]));
        assert!(!pts.contains(&vec![1, 1]));
        assert!(pts.iter().all(|p| l1_norm(p) <= 4));
        assert_eq!(pts.len(), 7);
    }
}
