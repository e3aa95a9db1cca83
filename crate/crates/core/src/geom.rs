//! Rational polyhedral cones over integer generators.
//!
//! Cones are built from generators; the inequality description is computed
//! by the double description method and sealed at construction.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::exact::{
    dot, lattice_basis, primitive, primitive_integer, rank_over_field, rat, smith_normal_form, solve_rational,
    IntMatrix, RatMatrix, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("vector of length {got} in a space of dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone is not simplicial: {rays} extreme rays in dimension {dim}")]
    NotSimplicial { rays: usize, dim: usize },
    #[error("ray direction {0:?} does not lie in the span of the lattice")]
    OutsideLattice(Vec<i64>),
    #[error("dual description failed its consistency check: {0}")]
    Inconsistent(String),
}

/// A cone `R_+ generators` together with its sealed inequality description
/// `{x : equations·x = 0, inequalities·x >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
    dim: usize,
}

fn rank_of(rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank_over_field(&IntMatrix::from_rows(rows, cols).expect("rows of equal length").to_rational())
}

fn combine(a: i64, u: &[i64], b: i64, v: &[i64]) -> Vec<i64> {
    let w: Vec<i64> = u
        .iter()
        .zip(v)
        .map(|(x, y)| {
            let s = a as i128 * *x as i128 + b as i128 * *y as i128;
            i64::try_from(s).expect("double description entry overflow")
        })
        .collect();
    primitive(&w)
}

struct Ray {
    v: Vec<i64>,
    zeros: BTreeSet<usize>,
}

/// Double description of the polar `{a : a·g >= 0 for every generator g}`:
/// returns (lineality basis, extreme rays).
fn polar_double_description(gens: &[Vec<i64>], d: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| gens[a].cmp(&gens[b]));

    let mut lin: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<usize> = Vec::new();

    for &gi in &order {
        let h = &gens[gi];
        if let Some(pos) = lin.iter().position(|l| dot(h, l) != 0) {
            let mut l0 = lin.remove(pos);
            if dot(h, &l0) < 0 {
                l0.iter_mut().for_each(|x| *x = -*x);
            }
            let hl0 = dot(h, &l0);
            lin = lin
                .iter()
                .map(|l| combine(hl0, l, -dot(h, l), &l0))
                .filter(|l| l.iter().any(|&x| x != 0))
                .collect();
            for r in &mut rays {
                let hr = dot(h, &r.v);
                r.v = combine(hl0, &r.v, -hr, &l0);
                r.zeros.insert(gi);
            }
            rays.push(Ray { v: l0, zeros: processed.iter().copied().collect() });
        } else {
            let mut next = Vec::new();
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for r in rays {
                let s = dot(h, &r.v);
                if s > 0 {
                    pos.push(r);
                } else if s < 0 {
                    neg.push(r);
                } else {
                    let mut r = r;
                    r.zeros.insert(gi);
                    next.push(r);
                }
            }
            let target = d - lin.len();
            for p in &pos {
                for n in &neg {
                    let common: Vec<usize> = p.zeros.intersection(&n.zeros).copied().collect();
                    if target < 2 || common.len() + 2 < target {
                        continue;
                    }
                    let rows: Vec<Vec<i64>> = common.iter().map(|&k| gens[k].clone()).collect();
                    if rank_of(&rows, d) != target - 2 {
                        continue;
                    }
                    let hp = dot(h, &p.v);
                    let hn = dot(h, &n.v);
                    let v = combine(hp, &n.v, -hn, &p.v);
                    let mut zeros: BTreeSet<usize> = common.into_iter().collect();
                    zeros.insert(gi);
                    next.push(Ray { v, zeros });
                }
            }
            next.extend(pos);
            rays = next;
        }
        processed.push(gi);
    }
    (lin, rays.into_iter().map(|r| r.v).collect())
}

/// Canonical integer basis of the row space: reduced echelon form over Q,
/// each row scaled to a primitive integer vector.
fn canonical_rows(rows: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        m[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let src = m[r].clone();
                for (x, s) in m[i].iter_mut().zip(&src) {
                    *x -= &f * s;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.iter().map(|row| primitive_integer(row)).collect()
}

/// Projects `v` onto the orthogonal complement of the span of `basis`.
fn project_out(v: &[i64], basis: &[Vec<i64>]) -> Vec<i64> {
    if basis.is_empty() {
        return primitive(v);
    }
    let k = basis.len();
    let gram = RatMatrix::from_rows(
        basis.iter().map(|a| basis.iter().map(|b| rat(dot(a, b))).collect()).collect(),
        k,
    )
    .expect("square gram matrix");
    let rhs: Vec<Rational> = basis.iter().map(|a| rat(dot(a, v))).collect();
    let c = solve_rational(&gram, &rhs).expect("gram matrix of a basis is invertible");
    let mut out: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
    for (ci, b) in c.iter().zip(basis) {
        for (o, &bj) in out.iter_mut().zip(b) {
            *o -= ci * rat(bj);
        }
    }
    primitive_integer(&out)
}

/// Computes the inequality description of `R_+ generators` in `R^ambient_dim`.
pub fn dual_description(generators: &[Vec<i64>], ambient_dim: usize) -> Result<Cone, GeomError> {
    for g in generators {
        if g.len() != ambient_dim {
            return Err(GeomError::DimensionMismatch { expected: ambient_dim, got: g.len() });
        }
    }
    let d = ambient_dim;
    let (lin, rays) = polar_double_description(generators, d);
    let equations = canonical_rows(&lin, d);
    let mut inequalities: Vec<Vec<i64>> = rays.iter().map(|r| project_out(r, &equations)).collect();
    inequalities.sort();
    inequalities.dedup();
    inequalities.retain(|r| r.iter().any(|&x| x != 0));
    let dim = d - equations.len();

    let cone = Cone { ambient_dim, generators: generators.to_vec(), equations, inequalities, dim };
    cone.check_sealed()?;
    Ok(cone)
}

impl Cone {
    /// Every generator satisfies the description and every inequality is a
    /// genuine facet (tight on generators of rank dim - 1).
    fn check_sealed(&self) -> Result<(), GeomError> {
        for g in &self.generators {
            if !self.contains(g) {
                return Err(GeomError::Inconsistent(format!("generator {g:?} violates the description")));
            }
        }
        for ineq in &self.inequalities {
            let tight: Vec<Vec<i64>> = self.generators.iter().filter(|g| dot(ineq, g) == 0).cloned().collect();
            if rank_of(&tight, self.ambient_dim) + 1 != self.dim {
                return Err(GeomError::Inconsistent(format!("inequality {ineq:?} is not a facet")));
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.inequalities
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.ambient_dim
            && self.equations.iter().all(|e| dot(e, x) == 0)
            && self.inequalities.iter().all(|h| dot(h, x) >= 0)
    }

    pub fn contains_rational(&self, x: &[Rational]) -> bool {
        let eval = |h: &[i64]| -> Rational { h.iter().zip(x).map(|(&a, b)| rat(a) * b).sum() };
        x.len() == self.ambient_dim
            && self.equations.iter().all(|e| eval(e).is_zero())
            && self.inequalities.iter().all(|h| !eval(h).is_negative())
    }

    /// Pointed iff the inequalities together with the equations have full rank.
    pub fn is_pointed(&self) -> bool {
        let mut rows = self.equations.clone();
        rows.extend(self.inequalities.iter().cloned());
        rank_of(&rows, self.ambient_dim) == self.ambient_dim
    }

    /// Same point set (mutual containment of generators).
    pub fn same_as(&self, other: &Cone) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Indices of generators lying on the face cut out by inequality `i`.
    fn facet_support(&self, i: usize) -> BTreeSet<usize> {
        let h = &self.inequalities[i];
        (0..self.generators.len()).filter(|&g| dot(h, &self.generators[g]) == 0).collect()
    }

    /// All faces, from the minimal face up to the cone itself.
    pub fn face_lattice(&self) -> FaceLattice {
        let all: BTreeSet<usize> = (0..self.generators.len()).collect();
        let mut family: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        family.insert(all.clone());
        let mut frontier = vec![all];
        let facets: Vec<BTreeSet<usize>> = (0..self.inequalities.len()).map(|i| self.facet_support(i)).collect();
        while let Some(f) = frontier.pop() {
            for s in &facets {
                let g: BTreeSet<usize> = f.intersection(s).copied().collect();
                if family.insert(g.clone()) {
                    frontier.push(g);
                }
            }
        }
        let mut faces: Vec<ConeFace> = family
            .into_iter()
            .map(|gs| {
                let gens: Vec<usize> = gs.into_iter().collect();
                let vecs: Vec<Vec<i64>> = gens.iter().map(|&i| self.generators[i].clone()).collect();
                let cone = dual_description(&vecs, self.ambient_dim).expect("face generators have ambient length");
                let tight = (0..self.inequalities.len())
                    .filter(|&i| gens.iter().all(|&g| dot(&self.inequalities[i], &self.generators[g]) == 0))
                    .collect();
                ConeFace { generator_indices: gens, tight_inequalities: tight, cone }
            })
            .collect();
        faces.sort_by(|a, b| a.cone.dim.cmp(&b.cone.dim).then_with(|| a.generator_indices.cmp(&b.generator_indices)));
        let mut inclusions = Vec::new();
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && a.generator_indices.iter().all(|g| b.generator_indices.contains(g)) {
                    inclusions.push((i, j));
                }
            }
        }
        FaceLattice { faces, inclusions }
    }

    /// Primitive direction vectors of the extreme rays (pointed cones only).
    pub fn extreme_rays(&self) -> Result<Vec<Vec<i64>>, GeomError> {
        if !self.is_pointed() {
            return Err(GeomError::NotPointed);
        }
        let lattice = self.face_lattice();
        Ok(lattice
            .faces
            .iter()
            .filter(|f| f.cone.dim == 1)
            .map(|f| {
                let g = f
                    .generator_indices
                    .iter()
                    .map(|&i| &self.generators[i])
                    .find(|v| v.iter().any(|&x| x != 0))
                    .expect("a ray has a nonzero generator");
                primitive(g)
            })
            .collect())
    }

    /// Simplicial: pointed with exactly dim extreme rays.
    pub fn is_simplicial(&self) -> bool {
        self.extreme_rays().map(|r| r.len() == self.dim).unwrap_or(false)
    }

    /// The smallest face containing every one of `points` (generator indices).
    pub fn minimal_face_containing(&self, points: &[Vec<i64>]) -> BTreeSet<usize> {
        let mut face: BTreeSet<usize> = (0..self.generators.len()).collect();
        for i in 0..self.inequalities.len() {
            if points.iter().all(|p| dot(&self.inequalities[i], p) == 0) {
                let s = self.facet_support(i);
                face = face.intersection(&s).copied().collect();
            }
        }
        face
    }
}

#[derive(Clone, Debug)]
pub struct ConeFace {
    /// Indices into the parent cone's generators lying on this face.
    pub generator_indices: Vec<usize>,
    pub tight_inequalities: Vec<usize>,
    pub cone: Cone,
}

#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<ConeFace>,
    /// Pairs `(i, j)` with face `i` strictly contained in face `j`.
    pub inclusions: Vec<(usize, usize)>,
}

/// The cone intersection `{x in a} ∩ {x in b}` as a new cone.
pub fn intersect(a: &Cone, b: &Cone) -> Result<Cone, GeomError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(GeomError::DimensionMismatch { expected: a.ambient_dim, got: b.ambient_dim });
    }
    let d = a.ambient_dim;
    // constraints of the intersection; generators are the dual description
    // of the constraint cone
    let mut cons: Vec<Vec<i64>> = Vec::new();
    for e in a.equations.iter().chain(&b.equations) {
        cons.push(e.clone());
        cons.push(e.iter().map(|x| -x).collect());
    }
    cons.extend(a.inequalities.iter().cloned());
    cons.extend(b.inequalities.iter().cloned());
    let polar = dual_description(&cons, d)?;
    let mut gens: Vec<Vec<i64>> = polar.inequalities.clone();
    for e in &polar.equations {
        gens.push(e.clone());
        gens.push(e.iter().map(|x| -x).collect());
    }
    dual_description(&gens, d)
}

/// An integer vector `y` with `y·c >= 1` for every column `c`, if one exists.
pub fn positive_grading(columns: &[Vec<i64>], dim: usize) -> Option<Vec<i64>> {
    if columns.iter().any(|c| c.iter().all(|&x| x == 0)) {
        return None;
    }
    if columns.is_empty() {
        return Some(vec![0; dim]);
    }
    let cone = dual_description(columns, dim).ok()?;
    if !cone.is_pointed() {
        return None;
    }
    let mut y = vec![0i64; dim];
    for h in &cone.inequalities {
        for (yi, hi) in y.iter_mut().zip(h) {
            *yi += hi;
        }
    }
    if columns.iter().all(|c| dot(&y, c) > 0) {
        Some(y)
    } else {
        None
    }
}

/// A full-rank subgroup of Z^n given by a row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    basis: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn standard(n: usize) -> Lattice {
        Lattice {
            ambient_dim: n,
            basis: (0..n)
                .map(|i| {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    e
                })
                .collect(),
        }
    }

    /// The group generated by `gens`, e.g. gp(M) for monoid generators.
    pub fn spanned_by(gens: &[Vec<i64>], ambient_dim: usize) -> Result<Lattice, GeomError> {
        if let Some(g) = gens.iter().find(|g| g.len() != ambient_dim) {
            return Err(GeomError::DimensionMismatch { expected: ambient_dim, got: g.len() });
        }
        Ok(Lattice { ambient_dim, basis: lattice_basis(gens, ambient_dim) })
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the basis, if `v` lies in the rational span.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<Rational>> {
        if self.basis.is_empty() {
            return v.iter().all(|&x| x == 0).then(Vec::new);
        }
        let bt = IntMatrix::from_rows(&self.basis, self.ambient_dim).ok()?.transpose().to_rational();
        let rhs: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
        solve_rational(&bt, &rhs)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coordinates(v).is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }

    fn from_coordinates(&self, c: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.ambient_dim];
        for (ci, b) in c.iter().zip(&self.basis) {
            for (o, bj) in out.iter_mut().zip(b) {
                *o += ci * bj;
            }
        }
        out
    }
}

/// For each extreme ray of `c`, the generator of the ray's intersection with `l`.
pub fn extreme_generators(c: &Cone, l: &Lattice) -> Result<Vec<Vec<i64>>, GeomError> {
    Ok(extreme_generator_coordinates(c, l)?.iter().map(|co| l.from_coordinates(co)).collect())
}

fn extreme_generator_coordinates(c: &Cone, l: &Lattice) -> Result<Vec<Vec<i64>>, GeomError> {
    c.extreme_rays()?
        .into_iter()
        .map(|r| {
            let co = l.coordinates(&r).ok_or_else(|| GeomError::OutsideLattice(r.clone()))?;
            Ok(primitive_integer(&co))
        })
        .collect()
}

/// Whether the extreme generators of the simplicial cone `c` span a direct
/// summand of `l` (all elementary divisors equal to one).
pub fn is_unimodular(c: &Cone, l: &Lattice) -> Result<bool, GeomError> {
    let coords = extreme_generator_coordinates(c, l)?;
    if coords.len() != c.dim {
        return Err(GeomError::NotSimplicial { rays: coords.len(), dim: c.dim });
    }
    if coords.is_empty() {
        return Ok(true);
    }
    let m = IntMatrix::from_rows(&coords, l.rank()).expect("coordinates have lattice rank");
    let snf = smith_normal_form(&m);
    let divs = snf.elementary_divisors();
    Ok(divs.len() == coords.len() && divs.iter().all(|&d| d == 1))
}

/// Absolute value of the largest coordinate sum, used for enumeration bounds.
pub fn l1_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orthant() {
        let c = dual_description(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(c.inequalities(), &[vec![0, 1], vec![1, 0]]);
        assert!(c.equations().is_empty());
        assert_eq!(c.dim(), 2);
        assert!(c.is_pointed());
    }

    #[test]
    fn two_dimensional_wedge() {
        let c = dual_description(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        let ineqs: BTreeSet<Vec<i64>> = c.inequalities().iter().cloned().collect();
        assert_eq!(ineqs, [vec![0, 1], vec![2, -1]].into_iter().collect());
    }

    /// Brute force: a facet normal is orthogonal to some pair of generators
    /// and nonnegative on all of them.
    fn brute_force_facets(gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let (a, b) = (&gens[i], &gens[j]);
                let n = vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
                if n.iter().all(|&x| x == 0) {
                    continue;
                }
                for s in [1, -1] {
                    let n: Vec<i64> = n.iter().map(|x| s * x).collect();
                    if gens.iter().all(|g| dot(&n, g) >= 0) {
                        out.insert(primitive(&n));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn lifted_triangle_matches_brute_force() {
        let gens = vec![vec![1, 0, 0], vec![1, 1, 1], vec![1, 2, 0]];
        let c = dual_description(&gens, 3).unwrap();
        let ineqs: BTreeSet<Vec<i64>> = c.inequalities().iter().cloned().collect();
        assert_eq!(ineqs.len(), 3);
        assert_eq!(ineqs, brute_force_facets(&gens));
        assert!(ineqs.contains(&vec![0, 0, 1]));
    }

    #[test]
    fn lower_dimensional_cone_has_equations() {
        let c = dual_description(&[vec![1, 1, 0], vec![0, 1, 1]], 3).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.equations().len(), 1);
        assert!(c.contains(&[1, 2, 1]));
        assert!(!c.contains(&[1, 0, 0]));
        assert!(c.is_pointed());
    }

    #[test]
    fn face_counts() {
        let orth = dual_description(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(orth.face_lattice().faces.len(), 4);
        let wedge = dual_description(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert_eq!(wedge.face_lattice().faces.len(), 4);
        let square =
            dual_description(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]], 3).unwrap();
        let lattice = square.face_lattice();
        let mut by_dim = [0; 4];
        for f in &lattice.faces {
            by_dim[f.cone.dim()] += 1;
        }
        assert_eq!(by_dim, [1, 4, 4, 1]);
    }

    #[test]
    fn face_round_trip_on_square() {
        let square =
            dual_description(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]], 3).unwrap();
        for f in square.face_lattice().faces {
            // the face is the set of cone points where its tight inequalities vanish
            for g in square.generators() {
                let on_face = f.tight_inequalities.iter().all(|&i| dot(&square.inequalities()[i], g) == 0);
                assert_eq!(on_face, f.cone.contains(g));
            }
        }
    }

    #[test]
    fn extreme_generators_and_unimodularity() {
        let z2 = Lattice::standard(2);
        let c = dual_description(&[vec![1, 0], vec![1, 1]], 2).unwrap();
        let mut eg = extreme_generators(&c, &z2).unwrap();
        eg.sort();
        assert_eq!(eg, vec![vec![1, 0], vec![1, 1]]);
        assert!(is_unimodular(&c, &z2).unwrap());

        let c = dual_description(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert!(!is_unimodular(&c, &z2).unwrap());

        let ray = dual_description(&[vec![2, 4]], 2).unwrap();
        assert_eq!(extreme_generators(&ray, &z2).unwrap(), vec![vec![1, 2]]);
    }

    #[test]
    fn unimodularity_depends_on_lattice() {
        // w.r.t. the lattice spanned by (1,0),(1,2) the wedge is unimodular
        let l = Lattice::spanned_by(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        let c = dual_description(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert!(is_unimodular(&c, &l).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(dual_description(&[vec![1, 0, 0]], 2), Err(GeomError::DimensionMismatch { .. })));
        let half = dual_description(&[vec![1, 0], vec![-1, 0], vec![0, 1]], 2).unwrap();
        assert!(!half.is_pointed());
        assert_eq!(half.extreme_rays(), Err(GeomError::NotPointed));
        let square =
            dual_description(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]], 3).unwrap();
        assert!(matches!(is_unimodular(&square, &Lattice::standard(3)), Err(GeomError::NotSimplicial { .. })));
    }

    #[test]
    fn intersection_of_adjacent_quadrants() {
        let a = dual_description(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        let b = dual_description(&[vec![0, 1], vec![-1, 0]], 2).unwrap();
        let i = intersect(&a, &b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 3]));
        assert!(!i.contains(&[1, 1]));
    }

    fn gens3() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..6)
    }

    proptest! {
        #[test]
        fn description_matches_generators(gens in gens3()) {
            let c = dual_description(&gens, 3).unwrap();
            for g in &gens {
                prop_assert!(c.contains(g));
            }
            prop_assert_eq!(c.dim(), rank_of(&gens, 3));
        }

        #[test]
        fn faces_round_trip(gens in gens3()) {
            let c = dual_description(&gens, 3).unwrap();
            let lattice = c.face_lattice();
            for f in &lattice.faces {
                let again = dual_description(f.cone.generators(), 3).unwrap();
                prop_assert!(again.same_as(&f.cone));
                for g in f.cone.generators() {
                    prop_assert!(c.contains(g));
                }
            }
            if c.is_pointed() && c.is_simplicial() {
                prop_assert_eq!(lattice.faces.len(), 1usize << c.dim());
            }
        }

        #[test]
        fn extreme_generators_are_primitive(gens in gens3()) {
            let c = dual_description(&gens, 3).unwrap();
            if c.is_pointed() {
                for v in extreme_generators(&c, &Lattice::standard(3)).unwrap() {
                    let g = v.iter().fold(0i64, |acc, &x| num_integer::Integer::gcd(&acc, &x));
                    prop_assert_eq!(g, 1);
                }
            }
        }
    }
}
