//! Monoidal complexes in embedded (fan) and abstract (glued) form.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::document::{ComplexDocument, FaceEntry, GeneratorEntry, Mode};
use crate::exact::{rank_over_field, IntMatrix};
use crate::geom::{dual_description, intersect, Cone, Lattice};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("malformed document: {0}")]
    Document(String),
    #[error("condition {} violated: {}", .0.condition, .0.message)]
    Invalid(Violation),
    #[error("unknown face {0}")]
    UnknownFace(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1 face closure, 2 intersections / gluings, 3 spanning, 4 positivity.
    pub condition: u8,
    pub message: String,
    pub faces: Vec<String>,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: String,
    pub dim: usize,
    /// Generator indices, increasing.
    pub members: Vec<usize>,
    /// Coordinates of each member in this face's lattice, aligned with `members`.
    pub coords: Vec<Vec<i64>>,
    pub cone: Cone,
    pub listed: bool,
}

impl Face {
    pub fn contains_generator(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn coords_of(&self, e: usize) -> Option<&[i64]> {
        self.members.binary_search(&e).ok().map(|i| self.coords[i].as_slice())
    }
}

#[derive(Clone, Debug)]
pub struct MonoidalComplex {
    doc: ComplexDocument,
    names: Vec<String>,
    faces: Vec<Face>,
    weights: Option<Vec<u64>>,
    vectors: Option<Vec<Vec<i64>>>,
}

fn doc_err<T>(msg: impl Into<String>) -> Result<T, ComplexError> {
    Err(ComplexError::Document(msg.into()))
}

fn violation(condition: u8, message: impl Into<String>, faces: &[&str], witness: Vec<String>) -> Violation {
    Violation {
        condition,
        message: message.into(),
        faces: faces.iter().map(|s| s.to_string()).collect(),
        witness,
    }
}

/// A listed face after structural parsing.
struct Listed {
    id: String,
    dim: usize,
    space: usize,
    cone: Cone,
    members: Vec<usize>,
    coords: Vec<Vec<i64>>,
}

struct Parsed {
    mode: Mode,
    names: Vec<String>,
    listed: Vec<Listed>,
    weights: Option<Vec<u64>>,
    vectors: Option<Vec<Vec<i64>>>,
    gluings: Vec<(usize, usize, IntMatrix)>,
}

fn parse(doc: &ComplexDocument) -> Result<Parsed, ComplexError> {
    let mut face_index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, f) in doc.faces.iter().enumerate() {
        if face_index.insert(&f.id, i).is_some() {
            return doc_err(format!("face id {} listed twice", f.id));
        }
    }
    let ambient = match doc.mode {
        Mode::Embedded => match doc.ambient_dim {
            Some(d) => Some(d),
            None => return doc_err("embedded mode requires ambient_dim"),
        },
        Mode::Abstract => None,
    };
    let space_of = |f: &FaceEntry| ambient.unwrap_or(f.dim);

    let mut names: Vec<String> = Vec::new();
    let mut name_index: BTreeMap<String, usize> = BTreeMap::new();
    for g in &doc.generators {
        if !name_index.contains_key(&g.name) {
            name_index.insert(g.name.clone(), names.len());
            names.push(g.name.clone());
        }
    }

    // weights: all or none, consistent per name
    let mut weights: Vec<Option<u64>> = vec![None; names.len()];
    let any_weight = doc.generators.iter().any(|g| g.weight.is_some());
    for g in &doc.generators {
        let e = name_index[&g.name];
        match (g.weight, weights[e]) {
            (None, _) if any_weight => return doc_err(format!("generator {} has no weight", g.name)),
            (Some(w), Some(v)) if w != v => return doc_err(format!("generator {} has two weights", g.name)),
            (Some(w), _) => weights[e] = Some(w),
            _ => {}
        }
    }
    let weights = any_weight.then(|| weights.into_iter().map(|w| w.expect("checked")).collect());

    // coordinates per (face, generator)
    let mut coords: BTreeMap<(usize, usize), Vec<i64>> = BTreeMap::new();
    let mut vectors: Option<Vec<Vec<i64>>> = None;
    match doc.mode {
        Mode::Embedded => {
            let d = ambient.expect("embedded");
            let mut v = vec![Vec::new(); names.len()];
            let mut seen = BTreeSet::new();
            for g in &doc.generators {
                if !seen.insert(&g.name) {
                    return doc_err(format!("generator name {} is not unique", g.name));
                }
                if g.vector.len() != d {
                    return doc_err(format!("generator {} has length {}, expected {d}", g.name, g.vector.len()));
                }
                if let Some(f) = &g.face {
                    if !face_index.contains_key(f.as_str()) {
                        return doc_err(format!("generator {} refers to unknown face {f}", g.name));
                    }
                }
                v[name_index[&g.name]] = g.vector.clone();
            }
            for (fi, f) in doc.faces.iter().enumerate() {
                for n in &f.monoid_generators {
                    let Some(&e) = name_index.get(n) else {
                        return doc_err(format!("face {} lists unknown generator {n}", f.id));
                    };
                    coords.insert((fi, e), v[e].clone());
                }
            }
            vectors = Some(v);
        }
        Mode::Abstract => {
            for g in &doc.generators {
                let Some(f) = &g.face else {
                    return doc_err(format!("generator {} needs a host face in abstract mode", g.name));
                };
                let Some(&fi) = face_index.get(f.as_str()) else {
                    return doc_err(format!("generator {} refers to unknown face {f}", g.name));
                };
                if g.vector.len() != doc.faces[fi].dim {
                    return doc_err(format!("generator {} has length {} in face {f}", g.name, g.vector.len()));
                }
                if !doc.faces[fi].monoid_generators.contains(&g.name) {
                    return doc_err(format!("generator {} is not a monoid generator of face {f}", g.name));
                }
                if coords.insert((fi, name_index[&g.name]), g.vector.clone()).is_some() {
                    return doc_err(format!("generator {} given twice for face {f}", g.name));
                }
            }
            for (fi, f) in doc.faces.iter().enumerate() {
                for n in &f.monoid_generators {
                    match name_index.get(n) {
                        Some(&e) if coords.contains_key(&(fi, e)) => {}
                        _ => return doc_err(format!("generator {n} has no coordinates in face {}", f.id)),
                    }
                }
            }
        }
    }

    let mut listed = Vec::new();
    for (fi, f) in doc.faces.iter().enumerate() {
        let space = space_of(f);
        if let Some(g) = f.cone_generators.iter().find(|g| g.len() != space) {
            return doc_err(format!("cone generator {g:?} of face {} does not have length {space}", f.id));
        }
        let cone = dual_description(&f.cone_generators, space).map_err(|e| ComplexError::Document(e.to_string()))?;
        let mut members: Vec<usize> = Vec::new();
        for n in &f.monoid_generators {
            let e = name_index[n];
            if members.contains(&e) {
                return doc_err(format!("face {} lists generator {n} twice", f.id));
            }
            members.push(e);
        }
        members.sort_unstable();
        let cs = members.iter().map(|&e| coords[&(fi, e)].clone()).collect();
        listed.push(Listed { id: f.id.clone(), dim: f.dim, space, cone, members, coords: cs });
    }

    let mut gluings = Vec::new();
    if doc.mode == Mode::Embedded && !doc.gluings.is_empty() {
        return doc_err("gluings are only meaningful in abstract mode");
    }
    for g in &doc.gluings {
        let (Some(&a), Some(&b)) = (face_index.get(g.face_a.as_str()), face_index.get(g.face_b.as_str())) else {
            return doc_err(format!("gluing refers to unknown face {} or {}", g.face_a, g.face_b));
        };
        let (da, db) = (listed[a].space, listed[b].space);
        if g.matrix.len() != db || g.matrix.iter().any(|r| r.len() != da) {
            return doc_err(format!("gluing matrix {} -> {} must be {db}x{da}", g.face_a, g.face_b));
        }
        gluings.push((a, b, IntMatrix::from_rows(&g.matrix, da).expect("shape checked")));
    }

    Ok(Parsed { mode: doc.mode, names, listed, weights, vectors, gluings })
}

fn rank_of(rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank_over_field(&IntMatrix::from_rows(rows, cols).expect("equal rows").to_rational())
}

/// Members of `f` lying on the smallest face of its cone containing `points`.
fn face_members_containing(f: &Listed, points: &[Vec<i64>]) -> Vec<usize> {
    let idx = f.cone.minimal_face_containing(points);
    let face_gens: Vec<Vec<i64>> = idx.iter().map(|&i| f.cone.generators()[i].clone()).collect();
    let face = dual_description(&face_gens, f.space).expect("same space");
    f.members.iter().zip(&f.coords).filter(|(_, c)| face.contains(c)).map(|(&e, _)| e).collect()
}

fn check(p: &Parsed) -> Result<(), Violation> {
    let names = |ms: &[usize]| ms.iter().map(|&e| p.names[e].clone()).collect::<Vec<_>>();

    // (1) face closure and consistency of listed faces
    for (i, d) in p.listed.iter().enumerate() {
        for (j, c) in p.listed.iter().enumerate() {
            if i == j {
                continue;
            }
            match p.mode {
                Mode::Embedded => {
                    if !d.cone.generators().iter().all(|g| c.cone.contains(g)) {
                        continue;
                    }
                    if c.cone.same_as(&d.cone) && i < j {
                        return Err(violation(1, "face listed twice", &[&d.id, &c.id], vec![]));
                    }
                    let lattice = c.cone.face_lattice();
                    let Some(face) = lattice.faces.iter().find(|f| f.cone.same_as(&d.cone)) else {
                        return Err(violation(
                            1,
                            format!("cone of {} lies in {} but is not one of its faces", d.id, c.id),
                            &[&d.id, &c.id],
                            vec![],
                        ));
                    };
                    let on: Vec<usize> = c
                        .members
                        .iter()
                        .zip(&c.coords)
                        .filter(|(_, v)| face.cone.contains(v))
                        .map(|(&e, _)| e)
                        .collect();
                    if on != d.members {
                        return Err(violation(
                            1,
                            format!("monoid generators of {} differ from those of {} on it", d.id, c.id),
                            &[&d.id, &c.id],
                            names(&on),
                        ));
                    }
                }
                Mode::Abstract => {
                    if d.members.iter().all(|e| c.members.contains(e)) {
                        if d.members == c.members && i < j {
                            return Err(violation(1, "face listed twice", &[&d.id, &c.id], names(&d.members)));
                        }
                        let pts: Vec<Vec<i64>> = d
                            .members
                            .iter()
                            .map(|e| c.coords[c.members.binary_search(e).unwrap()].clone())
                            .collect();
                        if face_members_containing(c, &pts) != d.members {
                            return Err(violation(
                                1,
                                format!("generators of {} do not form a face of {}", d.id, c.id),
                                &[&d.id, &c.id],
                                names(&d.members),
                            ));
                        }
                    }
                }
            }
        }
    }

    // (2) intersections (embedded) or gluings (abstract)
    match p.mode {
        Mode::Embedded => {
            for (i, c) in p.listed.iter().enumerate() {
                for d in &p.listed[i + 1..] {
                    let k = intersect(&c.cone, &d.cone).map_err(|e| violation(2, e.to_string(), &[&c.id, &d.id], vec![]))?;
                    let on = |f: &Listed| -> Option<Vec<usize>> {
                        let lattice = f.cone.face_lattice();
                        let face = lattice.faces.iter().find(|g| g.cone.same_as(&k))?;
                        Some(
                            f.members
                                .iter()
                                .zip(&f.coords)
                                .filter(|(_, v)| face.cone.contains(v))
                                .map(|(&e, _)| e)
                                .collect(),
                        )
                    };
                    match (on(c), on(d)) {
                        (Some(a), Some(b)) if a == b => {
                            let gens: Vec<Vec<i64>> =
                                a.iter().map(|&e| p.vectors.as_ref().unwrap()[e].clone()).collect();
                            let spanned = dual_description(&gens, c.space).expect("same space");
                            if !spanned.same_as(&k) {
                                return Err(violation(
                                    2,
                                    format!("common generators of {} and {} do not span the intersection", c.id, d.id),
                                    &[&c.id, &d.id],
                                    names(&a),
                                ));
                            }
                        }
                        (Some(a), Some(b)) => {
                            return Err(violation(
                                2,
                                format!("faces {} and {} disagree on the generators of their intersection", c.id, d.id),
                                &[&c.id, &d.id],
                                names(&a.iter().chain(&b).copied().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>()),
                            ))
                        }
                        _ => {
                            return Err(violation(
                                2,
                                format!("intersection of {} and {} is not a common face", c.id, d.id),
                                &[&c.id, &d.id],
                                vec![],
                            ))
                        }
                    }
                }
            }
        }
        Mode::Abstract => {
            for &(a, b, ref m) in &p.gluings {
                let (fa, fb) = (&p.listed[a], &p.listed[b]);
                let shared: Vec<usize> = fa.members.iter().filter(|e| fb.members.contains(e)).copied().collect();
                if shared.is_empty() {
                    return Err(violation(2, "gluing between faces with no common generators", &[&fa.id, &fb.id], vec![]));
                }
                let src: Vec<Vec<i64>> = shared.iter().map(|&e| fa.coords_of(e).to_vec()).collect();
                for (&e, s) in shared.iter().zip(&src) {
                    if m.mul_vec(s) != fb.coords_of(e) {
                        return Err(violation(
                            2,
                            format!("gluing {} -> {} does not carry generator {} to itself", fa.id, fb.id, p.names[e]),
                            &[&fa.id, &fb.id],
                            vec![p.names[e].clone()],
                        ));
                    }
                }
                let imgs: Vec<Vec<i64>> = src.iter().map(|s| m.mul_vec(s)).collect();
                if rank_of(&src, fa.space) != rank_of(&imgs, fb.space) {
                    return Err(violation(2, "gluing is not injective on the shared face", &[&fa.id, &fb.id], names(&shared)));
                }
            }
            for (i, c) in p.listed.iter().enumerate() {
                for d in &p.listed[i + 1..] {
                    let shared: Vec<usize> = c.members.iter().filter(|e| d.members.contains(e)).copied().collect();
                    if shared.is_empty() {
                        continue;
                    }
                    let in_c: Vec<Vec<i64>> = shared.iter().map(|&e| c.coords_of(e).to_vec()).collect();
                    let in_d: Vec<Vec<i64>> = shared.iter().map(|&e| d.coords_of(e).to_vec()).collect();
                    if face_members_containing(c, &in_c) != shared || face_members_containing(d, &in_d) != shared {
                        return Err(violation(
                            2,
                            format!("common generators of {} and {} do not form a face of both", c.id, d.id),
                            &[&c.id, &d.id],
                            names(&shared),
                        ));
                    }
                    let is_sub = shared.len() == c.members.len() || shared.len() == d.members.len();
                    let glued = p.gluings.iter().any(|&(a, b, _)| {
                        let (x, y) = (&p.listed[a].id, &p.listed[b].id);
                        (x == &c.id && y == &d.id) || (x == &d.id && y == &c.id)
                    });
                    if !glued && !is_sub {
                        return Err(violation(
                            2,
                            format!("faces {} and {} share generators but no gluing is given", c.id, d.id),
                            &[&c.id, &d.id],
                            names(&shared),
                        ));
                    }
                }
            }
        }
    }

    // (3) the monoid generators span the cone
    for f in &p.listed {
        if let Some((&e, _)) = f.members.iter().zip(&f.coords).find(|(_, v)| !f.cone.contains(v)) {
            return Err(violation(3, format!("generator {} lies outside the cone of {}", p.names[e], f.id), &[&f.id], vec![p.names[e].clone()]));
        }
        let spanned = dual_description(&f.coords, f.space).expect("same space");
        if let Some(g) = f.cone.generators().iter().find(|g| !spanned.contains(g)) {
            return Err(violation(3, format!("cone generator {g:?} of {} is not in the span of its monoid", f.id), &[&f.id], vec![format!("{g:?}")]));
        }
        if f.cone.dim() != f.dim {
            return Err(violation(3, format!("face {} declares dimension {} but its cone has dimension {}", f.id, f.dim, f.cone.dim()), &[&f.id], vec![]));
        }
        if let Some(vs) = &p.vectors {
            if let Some(e) = (0..vs.len()).find(|&e| f.cone.contains(&vs[e]) && !f.members.contains(&e)) {
                return Err(violation(3, format!("generator {} lies in {} but is not one of its monoid generators", p.names[e], f.id), &[&f.id], vec![p.names[e].clone()]));
            }
        }
    }

    // (4) positivity
    for f in &p.listed {
        if !f.cone.is_pointed() {
            return Err(violation(4, format!("cone of {} is not pointed", f.id), &[&f.id], vec![]));
        }
        if let Some((&e, _)) = f.members.iter().zip(&f.coords).find(|(_, v)| v.iter().all(|&x| x == 0)) {
            return Err(violation(4, format!("generator {} is zero in {}", p.names[e], f.id), &[&f.id], vec![p.names[e].clone()]));
        }
    }
    Ok(())
}

impl Listed {
    fn coords_of(&self, e: usize) -> &[i64] {
        &self.coords[self.members.binary_search(&e).expect("member")]
    }
}

/// Checks the complex axioms, reporting the first violated condition.
pub fn validate(doc: &ComplexDocument) -> Result<ValidationReport, ComplexError> {
    let p = parse(doc)?;
    Ok(match check(&p) {
        Ok(()) => ValidationReport { passed: true, violation: None },
        Err(v) => ValidationReport { passed: false, violation: Some(v) },
    })
}

fn derived_id(names: &[String], members: &[usize]) -> String {
    let parts: Vec<&str> = members.iter().map(|&e| names[e].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

impl MonoidalComplex {
    /// Parses and validates; every face of every listed cone becomes a face
    /// of the complex, identified by its set of monoid generators.
    pub fn from_document(doc: &ComplexDocument) -> Result<MonoidalComplex, ComplexError> {
        let p = parse(doc)?;
        check(&p).map_err(ComplexError::Invalid)?;

        let mut by_members: BTreeMap<Vec<usize>, Face> = BTreeMap::new();
        for l in &p.listed {
            let cone = dual_description(&l.coords, l.space).expect("same space");
            by_members.insert(
                l.members.clone(),
                Face {
                    id: l.id.clone(),
                    dim: cone.dim(),
                    members: l.members.clone(),
                    coords: l.coords.clone(),
                    cone,
                    listed: true,
                },
            );
        }
        for l in &p.listed {
            let cone = dual_description(&l.coords, l.space).expect("same space");
            for f in cone.face_lattice().faces {
                let members: Vec<usize> = f.generator_indices.iter().map(|&i| l.members[i]).collect();
                by_members.entry(members.clone()).or_insert_with(|| Face {
                    id: derived_id(&p.names, &members),
                    dim: f.cone.dim(),
                    coords: f.generator_indices.iter().map(|&i| l.coords[i].clone()).collect(),
                    members,
                    cone: f.cone,
                    listed: false,
                });
            }
        }
        if !by_members.contains_key(&Vec::new()) {
            let space = p.listed.first().map(|l| l.space).or(doc.ambient_dim).unwrap_or(0);
            by_members.insert(
                Vec::new(),
                Face {
                    id: derived_id(&p.names, &[]),
                    dim: 0,
                    members: Vec::new(),
                    coords: Vec::new(),
                    cone: dual_description(&[], space).expect("empty"),
                    listed: false,
                },
            );
        }
        let mut faces: Vec<Face> = by_members.into_values().collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.members.cmp(&b.members)));
        Ok(MonoidalComplex { doc: doc.clone(), names: p.names, faces, weights: p.weights, vectors: p.vectors })
    }

    pub fn from_json(s: &str) -> Result<MonoidalComplex, ComplexError> {
        let doc = ComplexDocument::from_json(s).map_err(|e| ComplexError::Document(e.to_string()))?;
        MonoidalComplex::from_document(&doc)
    }

    /// The fan of cones over the faces of a simplicial complex on `1..=n`,
    /// with free monoids generated by unit vectors.
    pub fn from_simplicial_complex(facets: &[Vec<usize>], n: usize) -> Result<MonoidalComplex, ComplexError> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let unit = |i: usize| -> Vec<i64> { (1..=n).map(|j| (i == j) as i64).collect() };
        let mut faces = Vec::new();
        for facet in facets {
            let mut vs: Vec<usize> = facet.clone();
            vs.sort_unstable();
            vs.dedup();
            if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > n) {
                return doc_err(format!("vertex {v} outside 1..={n}"));
            }
            let member_idx: Vec<usize> = vs.iter().map(|v| v - 1).collect();
            faces.push(FaceEntry {
                id: derived_id(&names, &member_idx),
                dim: vs.len(),
                cone_generators: vs.iter().map(|&v| unit(v)).collect(),
                monoid_generators: vs.iter().map(|v| v.to_string()).collect(),
            });
        }
        // facets contained in other facets are faces, not duplicates
        let mut kept: Vec<FaceEntry> = Vec::new();
        for f in &faces {
            let inside = faces.iter().any(|g| {
                g.monoid_generators.len() > f.monoid_generators.len()
                    && f.monoid_generators.iter().all(|x| g.monoid_generators.contains(x))
            });
            if !inside && !kept.iter().any(|k| k.id == f.id) {
                kept.push(f.clone());
            }
        }
        let doc = ComplexDocument {
            mode: Mode::Embedded,
            ambient_dim: Some(n),
            faces: kept,
            generators: (1..=n)
                .map(|i| GeneratorEntry { name: i.to_string(), face: None, vector: unit(i), weight: None })
                .collect(),
            gluings: Vec::new(),
        };
        MonoidalComplex::from_document(&doc)
    }

    pub fn to_document(&self) -> ComplexDocument {
        self.doc.clone()
    }

    pub fn mode(&self) -> Mode {
        self.doc.mode
    }

    pub fn is_embedded(&self) -> bool {
        self.doc.mode == Mode::Embedded
    }

    /// The generator family E in document order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// All faces, ordered by dimension and then by generator set.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: &str) -> Result<usize, ComplexError> {
        self.faces.iter().position(|f| f.id == id).ok_or_else(|| ComplexError::UnknownFace(id.to_string()))
    }

    pub fn face_with_members(&self, members: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.members == members)
    }

    pub fn zero_face(&self) -> usize {
        self.face_with_members(&[]).expect("zero face exists")
    }

    /// Whether face `inner` is a face of `outer`.
    pub fn is_subface(&self, inner: usize, outer: usize) -> bool {
        let o = &self.faces[outer];
        self.faces[inner].members.iter().all(|&e| o.contains_generator(e))
    }

    /// The face `c ∩ d`.
    pub fn meet(&self, c: usize, d: usize) -> usize {
        let m: Vec<usize> =
            self.faces[c].members.iter().filter(|&&e| self.faces[d].contains_generator(e)).copied().collect();
        self.face_with_members(&m).expect("intersection of faces is a face")
    }

    /// Maximal faces in face order.
    pub fn facets(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| !(0..self.faces.len()).any(|j| j != i && self.faces[j].members.len() > self.faces[i].members.len() && self.is_subface(i, j)))
            .collect()
    }

    /// Whether the generators `support` all lie in one face monoid.
    pub fn in_common_face(&self, support: &[usize]) -> bool {
        self.facets().iter().any(|&f| support.iter().all(|&e| self.faces[f].contains_generator(e)))
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// Generator vector in the ambient lattice (embedded mode only).
    pub fn vector(&self, e: usize) -> Option<&[i64]> {
        self.vectors.as_ref().map(|v| v[e].as_slice())
    }

    /// The subcomplex of faces of `c`, with generators `{e : a_e ∈ M_c}`.
    pub fn restrict(&self, id: &str) -> Result<MonoidalComplex, ComplexError> {
        let c = self.face(id)?;
        let face = &self.faces[c];
        let members = &face.members;
        let doc = match self.mode() {
            Mode::Embedded => {
                let listed_inside: Vec<FaceEntry> = self
                    .doc
                    .faces
                    .iter()
                    .filter(|f| f.id != face.id && f.monoid_generators.iter().all(|n| members.contains(&self.generator_index(n).unwrap())))
                    .cloned()
                    .collect();
                let mut faces = listed_inside;
                faces.push(FaceEntry {
                    id: face.id.clone(),
                    dim: face.dim,
                    cone_generators: face.coords.clone(),
                    monoid_generators: members.iter().map(|&e| self.names[e].clone()).collect(),
                });
                ComplexDocument {
                    mode: Mode::Embedded,
                    ambient_dim: self.doc.ambient_dim,
                    faces,
                    generators: members
                        .iter()
                        .map(|&e| GeneratorEntry {
                            name: self.names[e].clone(),
                            face: None,
                            vector: self.vectors.as_ref().unwrap()[e].clone(),
                            weight: self.weights.as_ref().map(|w| w[e]),
                        })
                        .collect(),
                    gluings: Vec::new(),
                }
            }
            Mode::Abstract => {
                let coords: Vec<Vec<i64>> = if face.coords.first().is_none_or(|v| v.len() == face.dim) {
                    face.coords.clone()
                } else {
                    let basis = Lattice::spanned_by(&face.coords, face.coords[0].len())
                        .map_err(|e| ComplexError::Document(e.to_string()))?;
                    face.coords
                        .iter()
                        .map(|v| primitive_integer_coords(&basis, v))
                        .collect()
                };
                ComplexDocument {
                    mode: Mode::Abstract,
                    ambient_dim: None,
                    faces: vec![FaceEntry {
                        id: face.id.clone(),
                        dim: face.dim,
                        cone_generators: coords.clone(),
                        monoid_generators: members.iter().map(|&e| self.names[e].clone()).collect(),
                    }],
                    generators: members
                        .iter()
                        .zip(&coords)
                        .map(|(&e, v)| GeneratorEntry {
                            name: self.names[e].clone(),
                            face: Some(face.id.clone()),
                            vector: v.clone(),
                            weight: self.weights.as_ref().map(|w| w[e]),
                        })
                        .collect(),
                    gluings: Vec::new(),
                }
            }
        };
        MonoidalComplex::from_document(&doc)
    }
}

/// Integer coordinates of a lattice vector in the given basis.
fn primitive_integer_coords(basis: &Lattice, v: &[i64]) -> Vec<i64> {
    let c = basis.coordinates(v).expect("member of the lattice");
    debug_assert!(c.iter().all(|x| x.is_integer()));
    c.iter().map(|x| i64::try_from(x.to_integer()).expect("coordinate fits")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e2_doc() -> ComplexDocument {
        ComplexDocument::from_json(
            r#"{
              "mode": "embedded", "ambient_dim": 2,
              "faces": [
                {"id": "c1", "dim": 2, "cone_generators": [[1,0],[0,1]], "monoid_generators": ["1","2"]},
                {"id": "c2", "dim": 2, "cone_generators": [[0,1],[-1,0]], "monoid_generators": ["2","3"]}
              ],
              "generators": [
                {"name": "1", "vector": [1,0]},
                {"name": "2", "vector": [0,1]},
                {"name": "3", "vector": [-1,0]}
              ]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn fan_passes() {
        assert!(validate(&e2_doc()).unwrap().passed);
        let mc = MonoidalComplex::from_document(&e2_doc()).unwrap();
        // zero face, three rays, two quadrants
        assert_eq!(mc.faces().len(), 6);
        assert_eq!(mc.facets().len(), 2);
        let c1 = mc.face("c1").unwrap();
        let c2 = mc.face("c2").unwrap();
        assert_eq!(mc.faces()[mc.meet(c1, c2)].members, vec![1]);
        assert!(mc.in_common_face(&[0, 1]));
        assert!(!mc.in_common_face(&[0, 2]));
    }

    #[test]
    fn overlapping_cones_fail_condition_two() {
        let mut doc = e2_doc();
        doc.faces[1].cone_generators = vec![vec![1, 1], vec![-1, 0]];
        doc.faces[1].monoid_generators = vec!["3".into(), "4".into()];
        doc.generators.push(GeneratorEntry { name: "4".into(), face: None, vector: vec![1, 1], weight: None });
        let r = validate(&doc).unwrap();
        assert!(!r.passed);
        // (1,1) lies in c1 without being one of its generators, and the cones overlap
        assert!(matches!(r.violation.unwrap().condition, 2 | 3));
    }

    #[test]
    fn missing_spanning_generator_fails_condition_three() {
        let mut doc = e2_doc();
        doc.faces[0].monoid_generators = vec!["2".into()];
        let r = validate(&doc).unwrap();
        assert_eq!(r.violation.unwrap().condition, 3);
    }

    #[test]
    fn non_pointed_fails_condition_four() {
        let doc = ComplexDocument::from_json(
            r#"{"mode": "embedded", "ambient_dim": 1,
                "faces": [{"id": "line", "dim": 1, "cone_generators": [[1],[-1]], "monoid_generators": ["a","b"]}],
                "generators": [{"name": "a", "vector": [1]}, {"name": "b", "vector": [-1]}]}"#,
        )
        .unwrap();
        assert_eq!(validate(&doc).unwrap().violation.unwrap().condition, 4);
    }

    #[test]
    fn malformed_documents() {
        let mut doc = e2_doc();
        doc.generators[0].vector = vec![1, 0, 0];
        assert!(matches!(validate(&doc), Err(ComplexError::Document(_))));
        let mut doc = e2_doc();
        doc.faces[0].monoid_generators.push("9".into());
        assert!(matches!(validate(&doc), Err(ComplexError::Document(_))));
    }

    #[test]
    fn simplicial_complexes() {
        let cycle = MonoidalComplex::from_simplicial_complex(&[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]], 4).unwrap();
        let by_dim = |mc: &MonoidalComplex, d: usize| mc.faces().iter().filter(|f| f.dim == d).count();
        assert_eq!((by_dim(&cycle, 0), by_dim(&cycle, 1), by_dim(&cycle, 2)), (1, 4, 4));

        let edge = MonoidalComplex::from_simplicial_complex(&[vec![1, 2]], 2).unwrap();
        assert_eq!(edge.facets().len(), 1);
        assert_eq!(edge.faces().len(), 4);

        let empty = MonoidalComplex::from_simplicial_complex(&[], 2).unwrap();
        assert_eq!(empty.faces().len(), 1);
        assert_eq!(empty.num_generators(), 2);
    }

    #[test]
    fn restriction() {
        let mc = MonoidalComplex::from_document(&e2_doc()).unwrap();
        let r = mc.restrict("c1").unwrap();
        assert_eq!(r.names(), &["1".to_string(), "2".to_string()]);
        assert_eq!(r.facets().len(), 1);
        let rr = r.restrict("c1").unwrap();
        assert_eq!(rr.to_document(), r.to_document());
        let z = mc.restrict(&mc.faces()[mc.zero_face()].id.clone()).unwrap();
        assert_eq!(z.num_generators(), 0);
        assert!(matches!(mc.restrict("nope"), Err(ComplexError::UnknownFace(_))));
    }

    #[test]
    fn round_trip() {
        let doc = e2_doc();
        assert_eq!(ComplexDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
