//! Polynomials over the rationals, weight orders refined by degrevlex,
//! Buchberger's algorithm and the ideal operations built on it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::exact::{format_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrobnerError {
    #[error("generator {0} is neither a monomial nor a binomial")]
    NotMonomialBinomialInput(String),
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree monomial on the given variables.
    pub fn from_support(n: usize, support: &[usize]) -> Monomial {
        let mut e = vec![0; n];
        for &i in support {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("X{}", names[i]) } else { format!("X{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A weight order: rows of weights compared lexicographically, ties broken by
/// degrevlex with `X1 > X2 > ... > Xn`. Rows shorter than the monomial are
/// padded with zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Order {
    rows: Vec<Vec<u64>>,
}

impl Order {
    pub fn degrevlex() -> Order {
        Order { rows: Vec::new() }
    }

    pub fn weight(w: &[u64]) -> Order {
        Order { rows: vec![w.to_vec()] }
    }

    /// An elimination order for the variables flagged in `discard`.
    pub fn elimination(discard: &[bool]) -> Order {
        Order { rows: vec![discard.iter().map(|&d| d as u64).collect()] }
    }

    fn key(&self, m: &Monomial) -> Vec<i64> {
        let mut k: Vec<i64> = self.rows.iter().map(|w| w_degree(m, w) as i64).collect();
        k.push(m.degree() as i64);
        k.extend(m.0.iter().rev().map(|&e| -(e as i64)));
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// `Σ m_i w_i`; missing weights count as zero.
pub fn w_degree(m: &Monomial, w: &[u64]) -> u64 {
    m.0.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum()
}

/// A polynomial with rational coefficients in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Polynomial {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Polynomial {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(m, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(nvars, i))
    }

    /// `X^a - X^b`.
    pub fn binomial(a: Monomial, b: Monomial) -> Polynomial {
        Polynomial::monomial(a).sub(&Polynomial::monomial(b))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exactly two terms with opposite coefficients.
    pub fn is_binomial(&self) -> bool {
        let mut it = self.terms.values();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a + b).is_zero(),
            _ => false,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        p
    }

    pub fn scale_shift(&self, c: &Rational, m: &Monomial) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(t, d)| (t.mul(m), c * d)))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut p = Polynomial::constant(self.nvars, Rational::one());
        for _ in 0..k {
            p = p.mul(self);
        }
        p
    }

    /// Value at the all-ones vector.
    pub fn eval_at_ones(&self) -> Rational {
        self.terms.values().cloned().sum()
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading(&self, order: &Order) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn monic(&self, order: &Order) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, d)| (m.clone(), d * &inv)))
            }
        }
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring with `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Variables occurring in the polynomial.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    /// Terms in descending degrevlex order.
    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let order = Order::degrevlex();
        let mut ts: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&format_rational(&a));
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{}*", format_rational(&a));
                }
                out.push_str(&m.format(names));
            }
        }
        out
    }
}

/// Polynomial with terms keyed by order position, for reduction.
struct Ordered<'a> {
    order: &'a Order,
    terms: BTreeMap<Vec<i64>, (Monomial, Rational)>,
}

impl<'a> Ordered<'a> {
    fn new(p: &Polynomial, order: &'a Order) -> Ordered<'a> {
        let terms = p.terms.iter().map(|(m, c)| (order.key(m), (m.clone(), c.clone()))).collect();
        Ordered { order, terms }
    }

    fn pop_lead(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last().map(|(_, v)| v)
    }

    fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last_key_value().map(|(_, v)| v)
    }

    /// `self -= c * m * g`.
    fn sub_multiple(&mut self, c: &Rational, m: &Monomial, g: &Polynomial) {
        for (t, d) in &g.terms {
            let tm = t.mul(m);
            let key = self.order.key(&tm);
            let delta = c * d;
            match self.terms.get_mut(&key) {
                Some(entry) => {
                    entry.1 -= delta;
                    if entry.1.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, (tm, -delta));
                }
            }
        }
    }

}

struct Basis<'a> {
    order: &'a Order,
    polys: Vec<Polynomial>,
    leads: Vec<(Monomial, Rational)>,
}

impl<'a> Basis<'a> {
    fn new(order: &'a Order) -> Basis<'a> {
        Basis { order, polys: Vec::new(), leads: Vec::new() }
    }

    fn push(&mut self, p: Polynomial) {
        let (m, c) = p.leading(self.order).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        self.polys.push(p);
        self.leads.push((m, c));
    }

    fn reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        (0..self.polys.len()).find(|&i| Some(i) != skip && self.leads[i].0.divides(m))
    }

    /// Full reduction of `f` by the basis (optionally skipping one element).
    fn reduce(&self, f: &Polynomial, skip: Option<usize>) -> Polynomial {
        let mut p = Ordered::new(f, self.order);
        let mut r = Polynomial::zero(f.nvars);
        while let Some((m, c)) = p.lead().cloned() {
            match self.reducer(&m, skip) {
                Some(i) => {
                    let (lm, lc) = &self.leads[i];
                    p.sub_multiple(&(&c / lc), &m.div(lm), &self.polys[i]);
                }
                None => {
                    p.pop_lead();
                    r.add_term(m, c);
                }
            }
        }
        r
    }
}

fn check_arity(gens: &[Polynomial]) -> Option<usize> {
    let n = gens.first().map(|g| g.nvars)?;
    assert!(gens.iter().all(|g| g.nvars == n), "polynomials from different rings");
    Some(n)
}

/// The reduced, monic Gröbner basis of the ideal generated by `gens`,
/// sorted by increasing leading monomial.
pub fn groebner_basis(gens: &[Polynomial], order: &Order) -> Vec<Polynomial> {
    if check_arity(gens).is_none() {
        return Vec::new();
    }
    let mut basis = Basis::new(order);
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let add = |basis: &mut Basis, pending: &mut BTreeSet<(usize, usize)>, p: Polynomial| {
        let p = p.monic(order);
        let j = basis.polys.len();
        basis.push(p);
        for i in 0..j {
            pending.insert((i, j));
        }
    };

    let mut sorted: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sorted.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    for g in sorted {
        let r = basis.reduce(&g, None);
        if !r.is_zero() {
            add(&mut basis, &mut pending, r);
        }
    }

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis.leads[a.0].0.lcm(&basis.leads[a.1].0);
                let lb = basis.leads[b.0].0.lcm(&basis.leads[b.1].0);
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (mi, ci) = basis.leads[i].clone();
        let (mj, cj) = basis.leads[j].clone();
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.polys.len()).any(|k| {
            k != i
                && k != j
                && basis.leads[k].0.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = basis.polys[i]
            .scale_shift(&cj, &l.div(&mi))
            .sub(&basis.polys[j].scale_shift(&ci, &l.div(&mj)));
        let r = basis.reduce(&s, None);
        if !r.is_zero() {
            add(&mut basis, &mut pending, r);
        }
    }

    // minimalize, then inter-reduce
    let n = basis.polys.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            !(0..n).any(|k| {
                k != i
                    && basis.leads[k].0.divides(&basis.leads[i].0)
                    && (basis.leads[k].0 != basis.leads[i].0 || k < i)
            })
        })
        .collect();
    let mut minimal = Basis::new(order);
    for i in keep {
        minimal.push(basis.polys[i].clone());
    }
    let mut out: Vec<Polynomial> =
        (0..minimal.polys.len()).map(|i| minimal.reduce(&minimal.polys[i], Some(i)).monic(order)).collect();
    out.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    out
}

/// Remainder of `f` on division by the Gröbner basis `gb`.
pub fn normal_form(f: &Polynomial, gb: &[Polynomial], order: &Order) -> Polynomial {
    let mut basis = Basis::new(order);
    for g in gb.iter().filter(|g| !g.is_zero()) {
        basis.push(g.clone());
    }
    basis.reduce(f, None)
}

/// The w-homogeneous component of highest w-degree.
pub fn initial_component(f: &Polynomial, w: &[u64]) -> Polynomial {
    let Some(top) = f.terms.keys().map(|m| w_degree(m, w)).max() else {
        return f.clone();
    };
    Polynomial::from_terms(
        f.nvars,
        f.terms.iter().filter(|(m, _)| w_degree(m, w) == top).map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Generators of `ini_w` of the ideal generated by the monomials and
/// binomials `gens`: the initial components of a Gröbner basis for `w`
/// refined by degrevlex.
pub fn initial_ideal_weight(gens: &[Polynomial], w: &[u64]) -> Result<Vec<Polynomial>, GrobnerError> {
    if let Some(g) = gens.iter().find(|g| g.num_terms() > 2) {
        return Err(GrobnerError::NotMonomialBinomialInput(format!("{g:?}")));
    }
    let order = Order::weight(w);
    let gb = groebner_basis(gens, &order);
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gb {
        let i = initial_component(&g, w);
        if !out.contains(&i) {
            out.push(i);
        }
    }
    Ok(out)
}

/// Equality of ideals via identical reduced degrevlex Gröbner bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let o = Order::degrevlex();
    groebner_basis(a, &o) == groebner_basis(b, &o)
}

pub fn ideal_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let o = Order::degrevlex();
    normal_form(f, &groebner_basis(gens, &o), &o).is_zero()
}

/// Whether every generator of `b` lies in the ideal generated by `a`.
pub fn ideal_contains(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let o = Order::degrevlex();
    let gb = groebner_basis(a, &o);
    b.iter().all(|f| normal_form(f, &gb, &o).is_zero())
}

/// Generators of the intersection of the ideal with the subring in the
/// variables flagged by `keep`.
pub fn eliminate(gens: &[Polynomial], keep: &[bool]) -> Vec<Polynomial> {
    let discard: Vec<bool> = keep.iter().map(|k| !k).collect();
    let gb = groebner_basis(gens, &Order::elimination(&discard));
    gb.into_iter().filter(|g| g.support().iter().all(|&i| keep[i])).collect()
}

/// Generators of `I ∩ J` in a ring with `nvars` variables.
pub fn intersect(a: &[Polynomial], b: &[Polynomial], nvars: usize) -> Vec<Polynomial> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let map: Vec<usize> = (0..nvars).collect();
    let t = Polynomial::var(nvars + 1, nvars);
    let one_minus_t = Polynomial::constant(nvars + 1, Rational::one()).sub(&t);
    let mut gens: Vec<Polynomial> = a.iter().map(|f| f.embed(nvars + 1, &map).mul(&t)).collect();
    gens.extend(b.iter().map(|g| g.embed(nvars + 1, &map).mul(&one_minus_t)));
    let mut keep = vec![true; nvars];
    keep.push(false);
    let back: Vec<usize> = (0..=nvars).map(|i| i.min(nvars - 1)).collect();
    let order = Order::degrevlex();
    let out: Vec<Polynomial> = eliminate(&gens, &keep).iter().map(|g| g.embed(nvars, &back)).collect();
    groebner_basis(&out, &order)
}

/// Reduced degrevlex basis of the sum of two ideals.
pub fn ideal_sum(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut gens = a.to_vec();
    gens.extend(b.iter().cloned());
    groebner_basis(&gens, &Order::degrevlex())
}

/// Convenience: integer-coefficient polynomial from `(coefficient, exponents)`.
pub fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(nvars, terms.iter().map(|(c, e)| (Monomial(e.to_vec()), rat(*c))))
}
