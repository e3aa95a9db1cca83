//! Exact integer and rational linear algebra.
//!
//! Everything here is dense and sized for small inputs: boundary maps of
//! divisor complexes, lattice maps between monoid generators, and the
//! bounded nonnegative solver used for monoid membership.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational; the coefficient field of every ideal.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("nonnegative search cut at total {cap}; solutions beyond the cap may exist ({} found so far)", found.len())]
    CapExceeded { cap: u64, found: Vec<Vec<u64>> },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Coefficient field used for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self, ExactError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(ExactError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(cols: &[Vec<i64>], rows: usize) -> Result<Self, ExactError> {
        Ok(Self::from_rows(cols, rows)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| rat(x)).collect(),
        }
    }

    /// Determinant by fraction-free elimination. Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, ExactError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(ExactError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(RatMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_over_field(m: &RatMatrix) -> usize {
    // clear denominators row by row; this does not change the rank
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    bareiss_rank(&mut a, m.cols)
}

fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over the requested field. Over `Prime(p)` every entry must have a
/// denominator prime to `p`.
pub fn rank_in(m: &RatMatrix, field: Field) -> usize {
    match field {
        Field::Rationals => rank_over_field(m),
        Field::Prime(p) => rank_mod_p(m, p),
    }
}

fn rank_mod_p(m: &RatMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let reduce = |x: &Rational| -> u64 {
        let n = x.numer().mod_floor(&pb).to_u64().unwrap();
        let d = x.denom().mod_floor(&pb).to_u64().unwrap();
        assert!(d != 0, "denominator divisible by the field characteristic");
        mul_mod(n, pow_mod(d, p - 2, p), p)
    };
    let mut a: Vec<Vec<u64>> = (0..m.rows).map(|i| m.row(i).iter().map(reduce).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for i in rank + 1..m.rows {
            if a[i][col] == 0 {
                continue;
            }
            let f = mul_mod(a[i][col], inv, p);
            for j in col..m.cols {
                let s = mul_mod(f, a[rank][j], p);
                a[i][j] = (a[i][j] + p - s) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Result of [`smith_normal_form`]: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn elementary_divisors(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).filter(|&x| x != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d, v };
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            let piv = d[(t, t)];
            for i in t + 1..rows {
                let q = d[(i, t)].div_euclid(piv);
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut u, i, t, -q);
                }
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_euclid(piv);
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[(i, j)] % piv != 0));
            match bad {
                Some(i) => {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            for j in 0..cols {
                d[(t, j)] = -d[(t, j)];
            }
            for j in 0..rows {
                u[(t, j)] = -u[(t, j)];
            }
        }
    }
    SmithForm { u, d, v }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols {
            m.data.swap(a * m.cols + j, b * m.cols + j);
        }
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for i in 0..m.rows {
            m.data.swap(i * m.cols + a, i * m.cols + b);
        }
    }
}

/// row[dst] += k * row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    for j in 0..m.cols {
        let s = m[(src, j)];
        m[(dst, j)] += k * s;
    }
}

/// col[dst] += k * col[src]
fn add_col(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    for i in 0..m.rows {
        let s = m[(i, src)];
        m[(i, dst)] += k * s;
    }
}

/// A Z-basis of `{x in Z^cols : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<i64>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols).map(|j| snf.v.column(j)).collect()
}

/// A Z-basis (in row echelon form) of the lattice spanned by `rows`.
pub fn lattice_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut pr = 0;
    for col in 0..cols {
        loop {
            let piv = (pr..m.len())
                .filter(|&i| m[i][col] != 0)
                .min_by_key(|&i| m[i][col].abs());
            let Some(piv) = piv else { break };
            m.swap(pr, piv);
            let mut clean = true;
            for i in pr + 1..m.len() {
                let q = m[i][col].div_euclid(m[pr][col]);
                if q != 0 {
                    let src = m[pr].clone();
                    for (x, s) in m[i].iter_mut().zip(&src) {
                        *x -= q * s;
                    }
                }
                clean &= m[i][col] == 0;
            }
            if clean {
                if m[pr][col] < 0 {
                    m[pr].iter_mut().for_each(|x| *x = -*x);
                }
                pr += 1;
                break;
            }
        }
        if pr == m.len() {
            break;
        }
    }
    m.truncate(pr);
    m
}

/// Some rational solution of `a x = b`, if one exists.
pub fn solve_rational(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows, b.len(), "right hand side length mismatch");
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let src = m[r].clone();
                for (x, s) in m[i].iter_mut().zip(&src) {
                    *x -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !m[i][cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Rational]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return vec![0; v.len()];
    }
    ints.iter().map(|x| (x / &g).to_i64().expect("primitive vector fits in i64")).collect()
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All `x` in N^cols with `a x = b` and `sum(x) <= cap`.
///
/// When the columns of `a` admit a strictly positive grading the search is
/// complete as soon as `cap` reaches the grading bound; otherwise, or when
/// the bound exceeds `cap`, the partial result is returned inside
/// [`ExactError::CapExceeded`].
pub fn solve_nonneg(a: &IntMatrix, b: &[i64], cap: u64) -> Result<Vec<Vec<u64>>, ExactError> {
    if b.len() != a.rows {
        return Err(ExactError::DimensionMismatch { expected: a.rows, got: b.len() });
    }
    let columns: Vec<Vec<i64>> = (0..a.cols).map(|j| a.column(j)).collect();
    let grading = crate::geom::positive_grading(&columns, a.rows);

    let (limit, complete) = match &grading {
        Some(y) => {
            let yb = dot(y, b);
            if yb < 0 {
                return Ok(Vec::new());
            }
            let min_step = columns.iter().map(|c| dot(y, c)).min().unwrap_or(1).max(1);
            let bound = (yb / min_step) as u64;
            (bound.min(cap), bound <= cap)
        }
        None => (cap, false),
    };

    let mut found = Vec::new();
    let mut x = vec![0u64; a.cols];
    let search = NonnegSearch { columns: &columns, grading: grading.as_deref() };
    search.dfs(0, b.to_vec(), limit, &mut x, &mut found);
    found.sort();
    if complete {
        Ok(found)
    } else {
        Err(ExactError::CapExceeded { cap, found })
    }
}

/// Whether `b` is a nonnegative integer combination of the columns of `a`.
/// The columns must admit a positive grading (pointed, no zero column).
pub fn in_monoid(a: &IntMatrix, b: &[i64]) -> bool {
    let columns: Vec<Vec<i64>> = (0..a.cols).map(|j| a.column(j)).collect();
    if b.iter().all(|&x| x == 0) {
        return true;
    }
    let y = crate::geom::positive_grading(&columns, a.rows).expect("monoid generators must be positively graded");
    let yb = dot(&y, b);
    if yb <= 0 {
        return false;
    }
    let search = NonnegSearch { columns: &columns, grading: Some(&y) };
    search.exists(0, b.to_vec(), yb as u64)
}

struct NonnegSearch<'a> {
    columns: &'a [Vec<i64>],
    grading: Option<&'a [i64]>,
}

impl NonnegSearch<'_> {
    fn max_take(&self, j: usize, residual: &[i64], remaining: u64) -> Option<u64> {
        match self.grading {
            Some(y) => {
                let yr = dot(y, residual);
                if yr < 0 {
                    return None;
                }
                let step = dot(y, &self.columns[j]).max(1);
                Some(((yr / step) as u64).min(remaining))
            }
            None => Some(remaining),
        }
    }

    fn dfs(&self, j: usize, residual: Vec<i64>, remaining: u64, x: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if j == self.columns.len() {
            if residual.iter().all(|&r| r == 0) {
                out.push(x.clone());
            }
            return;
        }
        let Some(max_k) = self.max_take(j, &residual, remaining) else {
            return;
        };
        let col = &self.columns[j];
        let mut r = residual;
        for k in 0..=max_k {
            x[j] = k;
            self.dfs(j + 1, r.clone(), remaining - k, x, out);
            for (ri, c) in r.iter_mut().zip(col) {
                *ri -= c;
            }
        }
        x[j] = 0;
    }

    fn exists(&self, j: usize, residual: Vec<i64>, remaining: u64) -> bool {
        if residual.iter().all(|&r| r == 0) {
            return true;
        }
        if j == self.columns.len() {
            return false;
        }
        let Some(max_k) = self.max_take(j, &residual, remaining) else {
            return false;
        };
        let col = &self.columns[j];
        let mut r = residual;
        for k in 0..=max_k {
            if self.exists(j + 1, r.clone(), remaining - k) {
                return true;
            }
            for (ri, c) in r.iter_mut().zip(col) {
                *ri -= c;
            }
        }
        false
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn abs_rational(x: &Rational) -> Rational {
    x.abs()
}
