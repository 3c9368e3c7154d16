//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything here is exact: scalars are [`BigRational`]s, and over a prime
//! field they are kept as canonical integer representatives in `0..p`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// The base field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarField {
    Rationals,
    Prime(u64),
}

impl ScalarField {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::NotPrime(p));
        }
        Ok(ScalarField::Prime(p))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ScalarField::Rationals)
    }

    /// Canonical representative of `x` in this field.
    pub fn reduce(&self, x: Q) -> Q {
        match self {
            ScalarField::Rationals => x,
            ScalarField::Prime(p) => {
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p).expect("denominator divisible by the characteristic");
                Q::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn inverse(&self, x: &Q) -> Q {
        match self {
            ScalarField::Rationals => x.recip(),
            ScalarField::Prime(_) => self.reduce(x.recip()),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(p))
}

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Integer entries, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Output of [`solve_and_reduce`].
#[derive(Debug, Clone)]
pub struct Reduction {
    pub rref: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub nullspace: Vec<Vec<Q>>,
}

/// Reduced row echelon form, rank, pivots and a nullspace basis.
pub fn solve_and_reduce(m: &Matrix, field: ScalarField) -> Reduction {
    let mut a = m.clone();
    for x in a.data.iter_mut() {
        *x = field.reduce(std::mem::take(x));
    }
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inverse(a.get(r, c));
        for j in c..cols {
            let v = field.reduce(a.get(r, j) * &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = field.reduce(a.get(i, j) - &f * a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut nullspace = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = field.reduce(-a.get(row, free).clone());
        }
        nullspace.push(v);
    }
    Reduction { rank: pivots.len(), rref: a, pivot_columns: pivots, nullspace }
}

pub fn rank(m: &Matrix) -> usize {
    solve_and_reduce(m, ScalarField::Rationals).rank
}

/// Exact determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn integer_determinant(m: &Matrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m
        .to_integers()
        .ok_or_else(|| Error::Parse("determinant needs integer entries".into()))?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Classification of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite { radical_rank: usize },
    Indefinite,
}

/// Exact definiteness test by symmetric Gaussian elimination.
///
/// A zero pivot is only admissible when its whole row vanishes; the number of
/// such pivots is the dimension of the radical.
pub fn definiteness(m: &Matrix) -> Result<Definiteness> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut radical = 0;
    for k in 0..n {
        let pivot = a.get(k, k).clone();
        if pivot.is_negative() {
            return Ok(Definiteness::Indefinite);
        }
        if pivot.is_zero() {
            if (k + 1..n).any(|j| !a.get(k, j).is_zero()) {
                return Ok(Definiteness::Indefinite);
            }
            radical += 1;
            continue;
        }
        for i in k + 1..n {
            let f = a.get(i, k) / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &f * a.get(k, j);
                a.set(i, j, v);
            }
        }
    }
    Ok(if radical == 0 {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::PositiveSemidefinite { radical_rank: radical }
    })
}

/// Incrementally maintained reduced echelon basis of a subspace of `Q^n`.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    /// Normal form of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut [Q]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in rest.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= c * r;
                }
            }
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Basis of a complement: unit vectors on the non-pivot coordinates.
    pub fn complement_units(&self) -> Vec<usize> {
        let mut used = vec![false; self.dim];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.dim).filter(|&i| !used[i]).collect()
    }
}

/// Coordinates with respect to a fixed linearly independent family of vectors.
#[derive(Debug, Clone)]
pub struct CoordinateSystem {
    count: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Q>>,
}

impl CoordinateSystem {
    /// Returns `None` if the family is linearly dependent.
    pub fn new(vectors: &[Vec<Q>]) -> Option<Self> {
        let count = vectors.len();
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(count);
        let mut pivots: Vec<usize> = Vec::with_capacity(count);
        let mut combos: Vec<Vec<Q>> = Vec::with_capacity(count);
        for (i, v) in vectors.iter().enumerate() {
            let mut v = v.clone();
            let mut combo = vec![Q::zero(); count];
            combo[i] = Q::one();
            for ((row, &p), c) in rows.iter().zip(&pivots).zip(&combos) {
                if v[p].is_zero() {
                    continue;
                }
                let f = v[p].clone();
                axpy(&mut v, &f, row);
                axpy(&mut combo, &f, c);
            }
            let p = v.iter().position(|x| !x.is_zero())?;
            let inv = v[p].recip();
            for x in v.iter_mut().chain(combo.iter_mut()) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            for (row, c) in rows.iter_mut().zip(combos.iter_mut()) {
                if row[p].is_zero() {
                    continue;
                }
                let f = row[p].clone();
                axpy(row, &f, &v);
                axpy(c, &f, &combo);
            }
            rows.push(v);
            pivots.push(p);
            combos.push(combo);
        }
        Some(CoordinateSystem { count, rows, pivots, combos })
    }

    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let mut out = vec![Q::zero(); self.count];
        let mut rest = v.to_vec();
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if rest[p].is_zero() {
                continue;
            }
            let f = rest[p].clone();
            axpy(&mut rest, &f, row);
            for (o, x) in out.iter_mut().zip(c) {
                if !x.is_zero() {
                    *o += &f * x;
                }
            }
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }
}

/// `y -= f * x`
fn axpy(y: &mut [Q], f: &Q, x: &[Q]) {
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a -= f * b;
        }
    }
}

/// Basis of the kernel of the linear map whose matrix has the given columns.
///
/// `columns[j]` is the image of the j-th unit vector; the result lives in `Q^columns.len()`.
pub fn kernel_of_columns(columns: &[Vec<Q>], target_dim: usize) -> Vec<Vec<Q>> {
    let n = columns.len();
    let mut m = Matrix::zeros(target_dim, n);
    for (j, col) in columns.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    solve_and_reduce(&m, ScalarField::Rationals).nullspace
}

/// Sparse echelon basis keyed by the largest column of each row.
///
/// Rows are only leading-term reduced on insertion; [`SparseEchelon::normal_form`]
/// reduces fully. Used for path spaces with thousands of columns.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: ScalarField,
    rows: BTreeMap<usize, BTreeMap<usize, Q>>,
}

impl SparseEchelon {
    pub fn new(field: ScalarField) -> Self {
        SparseEchelon { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn insert(&mut self, mut v: BTreeMap<usize, Q>) -> bool {
        let field = self.field;
        for x in v.values_mut() {
            *x = field.reduce(std::mem::take(x));
        }
        v.retain(|_, x| !x.is_zero());
        while let Some((&lead, coeff)) = v.iter().next_back() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let f = coeff.clone();
                    for (c, x) in row {
                        let e = v.entry(*c).or_insert_with(Q::zero);
                        *e = field.reduce(&*e - &f * x);
                        if e.is_zero() {
                            v.remove(c);
                        }
                    }
                }
                None => {
                    let inv = field.inverse(coeff);
                    for x in v.values_mut() {
                        *x = field.reduce(&*x * &inv);
                    }
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduced representative: supported on non-pivot columns only.
    pub fn normal_form(&self, mut v: BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let field = self.field;
        for x in v.values_mut() {
            *x = field.reduce(std::mem::take(x));
        }
        v.retain(|_, x| !x.is_zero());
        let mut upper = usize::MAX;
        loop {
            let next = v.range(..upper).rev().find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((col, f)) = next else { break };
            for (c, x) in &self.rows[&col] {
                let e = v.entry(*c).or_insert_with(Q::zero);
                *e = field.reduce(&*e - &f * x);
                if e.is_zero() {
                    v.remove(c);
                }
            }
            upper = col;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn identity_and_zero_reductions() {
        let r = solve_and_reduce(&Matrix::identity(3), ScalarField::Rationals);
        assert_eq!(r.rank, 3);
        assert!(r.nullspace.is_empty());
        let z = solve_and_reduce(&Matrix::zeros(2, 4), ScalarField::Rationals);
        assert_eq!(z.rank, 0);
        assert_eq!(z.nullspace.len(), 4);
    }

    #[test]
    fn gamma_one_cartan_facts() {
        let c = Matrix::from_ints(&[[2, 0, 1], [0, 2, 1], [1, 1, 3]]);
        assert_eq!(solve_and_reduce(&c, ScalarField::Rationals).rank, 3);
        assert_eq!(integer_determinant(&c).unwrap(), BigInt::from(8));
        assert_eq!(definiteness(&c).unwrap(), Definiteness::PositiveDefinite);
    }

    #[test]
    fn small_determinants_and_forms() {
        assert_eq!(integer_determinant(&Matrix::identity(5)).unwrap(), BigInt::one());
        let m = Matrix::from_ints(&[[1, 2], [2, 1]]);
        assert_eq!(integer_determinant(&m).unwrap(), BigInt::from(-3));
        assert_eq!(definiteness(&m).unwrap(), Definiteness::Indefinite);
        let k = Matrix::from_ints(&[[2, -2], [-2, 2]]);
        assert_eq!(definiteness(&k).unwrap(), Definiteness::PositiveSemidefinite { radical_rank: 1 });
        assert!(matches!(integer_determinant(&Matrix::zeros(2, 3)), Err(Error::NonSquare { .. })));
        assert_eq!(definiteness(&Matrix::from_ints(&[[1, 0], [1, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn prime_field_reduction() {
        let f = ScalarField::prime(5).unwrap();
        assert_eq!(f.reduce(qf(1, 2)), q(3));
        assert!(ScalarField::prime(9).is_err());
        let m = Matrix::from_ints(&[[1, 2], [3, 1]]);
        // det = -5 = 0 mod 5
        assert_eq!(solve_and_reduce(&m, f).rank, 1);
        assert_eq!(solve_and_reduce(&m, ScalarField::Rationals).rank, 2);
    }

    #[test]
    fn coordinate_system_roundtrip() {
        let vs = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let cs = CoordinateSystem::new(&vs).unwrap();
        assert_eq!(cs.coordinates(&[q(2), q(5), q(3)]), Some(vec![q(2), q(3)]));
        assert_eq!(cs.coordinates(&[q(1), q(0), q(0)]), None);
        assert!(CoordinateSystem::new(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn sparse_echelon_normal_form() {
        let mut e = SparseEchelon::new(ScalarField::Rationals);
        e.insert(BTreeMap::from([(3, q(1)), (1, q(-1))]));
        e.insert(BTreeMap::from([(2, q(2)), (0, q(2))]));
        let nf = e.normal_form(BTreeMap::from([(3, q(1)), (2, q(1))]));
        assert_eq!(nf, BTreeMap::from([(1, q(1)), (0, q(-1))]));
    }

    use proptest::prelude::*;

    fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n))
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in small_matrix(4)) {
            let det = integer_determinant(&Matrix::from_ints(&m)).unwrap();
            prop_assert_eq!(det, BigInt::from(cofactor_det(&m)));
        }

        #[test]
        fn nullspace_is_annihilated(rows in 1usize..4, m in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4)) {
            let _ = rows;
            let a = Matrix::from_ints(&m);
            let red = solve_and_reduce(&a, ScalarField::Rationals);
            prop_assert_eq!(red.nullspace.len(), a.cols() - red.rank);
            for v in &red.nullspace {
                prop_assert!(a.apply(v).iter().all(Zero::is_zero));
                prop_assert!(red.rref.apply(v).iter().all(Zero::is_zero));
            }
            let pivot_block = a.submatrix(&(0..a.rows()).collect::<Vec<_>>(), &red.pivot_columns);
            prop_assert_eq!(rank(&pivot_block), red.rank);
        }

        #[test]
        fn definite_implies_positive_minors(m in small_matrix(4)) {
            let n = m.len();
            let mut s = vec![vec![0i64; n]; n];
            for i in 0..n { for j in 0..n { s[i][j] = m[i][j] + m[j][i]; } }
            let s = Matrix::from_ints(&s);
            if definiteness(&s).unwrap() == Definiteness::PositiveDefinite {
                for k in 1..=n {
                    let idx: Vec<usize> = (0..k).collect();
                    prop_assert!(integer_determinant(&s.submatrix(&idx, &idx)).unwrap() > BigInt::zero());
                }
            }
        }
    }
}
