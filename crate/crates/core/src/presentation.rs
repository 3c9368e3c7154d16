//! Basic presentations of algebras given by structure constants.
//!
//! The radical is found with Dickson's trace criterion, the semisimple
//! quotient is split by the eigenvalues of a generic central element, and
//! idempotents are lifted through the radical with `e <- 3e² - 2e³`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{present_with_embedding, BoundQuiverAlgebra, GradedBasisElement, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_columns, q, CoordinateSystem, Echelon, Matrix, ScalarField, Q};

/// A unital algebra given on a basis, together with the traces of a faithful representation.
pub trait FiniteAlgebra {
    fn dim(&self) -> usize;
    fn one(&self) -> Vec<Q>;
    fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q>;
    /// Trace of each basis element in some faithful representation.
    fn traces(&self) -> Vec<Q>;
}

/// An algebra given by structure constants on a labeled basis.
#[derive(Debug, Clone)]
pub struct AbstractAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    one: Vec<Q>,
    field: ScalarField,
}

impl AbstractAlgebra {
    pub fn new(labels: Vec<String>, table: Vec<Vec<SparseVec>>, one: Vec<Q>, field: ScalarField) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) || one.len() != n {
            return Err(Error::NonSquare { rows: table.len(), cols: n });
        }
        Ok(AbstractAlgebra { labels, table, one, field })
    }

    pub fn from_fn(
        labels: Vec<String>,
        one: Vec<Q>,
        field: ScalarField,
        product: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|i| (0..n).map(|j| product(i, j)).collect()).collect();
        Self::new(labels, table, one, field)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.labels.len()];
        v[i] = Q::one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn check_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.mul(&self.unit(i), &self.unit(j));
                (0..n).all(|k| {
                    let uk = self.unit(k);
                    self.mul(&ij, &uk) == self.mul(&self.unit(i), &self.mul(&self.unit(j), &uk))
                })
            })
        })
    }
}

impl FiniteAlgebra for AbstractAlgebra {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn one(&self) -> Vec<Q> {
        self.one.clone()
    }

    fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        let nz: Vec<usize> = (0..y.len()).filter(|&j| !y[j].is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &j in &nz {
                let ab = a * &y[j];
                for (k, c) in &self.table[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Traces of the left regular representation.
    fn traces(&self) -> Vec<Q> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                let mut t = Q::zero();
                for i in 0..n {
                    for (idx, c) in &self.table[k][i] {
                        if *idx == i {
                            t += c;
                        }
                    }
                }
                t
            })
            .collect()
    }
}

/// A subalgebra of a full matrix algebra, spanned by the given matrices.
///
/// The span must contain the identity and be closed under products.
pub struct MatrixAlgebra {
    basis: Vec<Matrix>,
    coords: CoordinateSystem,
}

impl MatrixAlgebra {
    pub fn new(spanning: &[Matrix]) -> Option<Self> {
        let n = spanning.first()?.rows();
        let mut ech = Echelon::new(n * n);
        let mut basis = Vec::new();
        for m in std::iter::once(Matrix::identity(n)).chain(spanning.iter().cloned()) {
            if ech.insert(&flatten(&m)) {
                basis.push(m);
            }
        }
        let coords = CoordinateSystem::new(&basis.iter().map(flatten).collect::<Vec<_>>())?;
        Some(MatrixAlgebra { basis, coords })
    }

    pub fn matrix(&self, x: &[Q]) -> Matrix {
        let n = self.basis[0].rows();
        let mut m = Matrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for r in 0..n {
                for s in 0..n {
                    let v = b.get(r, s);
                    if !v.is_zero() {
                        let cur = m.get(r, s) + c * v;
                        m.set(r, s, cur);
                    }
                }
            }
        }
        m
    }
}

fn flatten(m: &Matrix) -> Vec<Q> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

impl FiniteAlgebra for MatrixAlgebra {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn one(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[0] = Q::one();
        v
    }

    fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let m = self.matrix(x).mul(&self.matrix(y));
        self.coords.coordinates(&flatten(&m)).expect("span is closed under products")
    }

    fn traces(&self) -> Vec<Q> {
        self.basis.iter().map(|b| (0..b.rows()).map(|i| b.get(i, i).clone()).sum()).collect()
    }
}

/// Radical and simple blocks of a split algebra.
#[derive(Debug, Clone)]
pub struct Wedderburn {
    pub radical: Vec<Vec<Q>>,
    /// One lifted idempotent per simple block, pairwise orthogonal and summing to one.
    pub blocks: Vec<SimpleBlock>,
}

#[derive(Debug, Clone)]
pub struct SimpleBlock {
    /// Lift of the central idempotent of the block.
    pub idempotent: Vec<Q>,
    /// The block is a full matrix algebra of this size.
    pub size: usize,
}

/// Radical by the trace criterion `{x : tr(xy) = 0 for all y}` (characteristic zero).
pub fn trace_radical(a: &dyn FiniteAlgebra) -> Vec<Vec<Q>> {
    let n = a.dim();
    let t = a.traces();
    let tau = |v: &[Q]| -> Q { v.iter().zip(&t).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum() };
    let units: Vec<Vec<Q>> = (0..n).map(|i| unit(n, i)).collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = tau(&a.mul(&units[i], &units[j]));
            gram.set(i, j, v.clone());
            gram.set(j, i, v);
        }
    }
    crate::linalg::solve_and_reduce(&gram, ScalarField::Rationals).nullspace
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn scale(c: &Q, x: &[Q]) -> Vec<Q> {
    x.iter().map(|a| c * a).collect()
}

fn sub(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Whether the span of `ideal` is nilpotent, by powering.
pub fn is_nilpotent_ideal(a: &dyn FiniteAlgebra, ideal: &[Vec<Q>]) -> bool {
    let mut power: Vec<Vec<Q>> = ideal.to_vec();
    for _ in 0..=a.dim() {
        if power.is_empty() {
            return true;
        }
        let mut next = Echelon::new(a.dim());
        for x in &power {
            for y in ideal {
                let p = a.mul(x, y);
                if p.iter().any(|c| !c.is_zero()) {
                    next.insert(&p);
                }
            }
        }
        power = next.rows().to_vec();
    }
    power.is_empty()
}

/// Lifts an idempotent modulo a nilpotent ideal to an idempotent.
pub fn lift_idempotent(a: &dyn FiniteAlgebra, x: &[Q]) -> Vec<Q> {
    let mut e = x.to_vec();
    loop {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = a.mul(&e2, &e);
        e = sub(&scale(&q(3), &e2), &scale(&q(2), &e3));
    }
}

/// Radical, simple blocks and lifted central idempotents.
///
/// Requires every simple quotient to be a full matrix algebra over ℚ.
pub fn wedderburn(a: &dyn FiniteAlgebra, seed: u64) -> Result<Wedderburn> {
    let n = a.dim();
    let radical = trace_radical(a);
    let mut rad_ech = Echelon::new(n);
    for r in &radical {
        rad_ech.insert(r);
    }
    let units: Vec<Vec<Q>> = (0..n).map(|i| unit(n, i)).collect();

    // Center modulo the radical, cut down one basis element at a time.
    let mut center: Vec<Vec<Q>> = units.clone();
    for b in &units {
        if center.is_empty() {
            break;
        }
        let images: Vec<Vec<Q>> =
            center.iter().map(|z| rad_ech.reduce(&sub(&a.mul(z, b), &a.mul(b, z)))).collect();
        let ker = kernel_of_columns(&images, n);
        center = ker
            .iter()
            .map(|k| {
                let mut v = vec![Q::zero(); n];
                for (c, z) in k.iter().zip(&center) {
                    if !c.is_zero() {
                        v = add(&v, &scale(c, z));
                    }
                }
                v
            })
            .collect();
    }
    let mut zech = Echelon::new(n);
    for r in &radical {
        zech.insert(r);
    }
    let center: Vec<Vec<Q>> = center.into_iter().filter(|z| zech.insert(z)).collect();
    let s = center.len();
    if s == 0 {
        return Err(Error::EverythingKilled);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots = Vec::new();
    let mut z = a.one();
    for attempt in 0..12 {
        z = vec![Q::zero(); n];
        for c in &center {
            let k: i64 = rng.gen_range(-(4 + 8 * attempt)..=(4 + 8 * attempt));
            z = add(&z, &scale(&q(k), c));
        }
        let poly = minimal_polynomial_mod(a, &z, &radical);
        roots = rational_roots(&poly);
        if roots.len() + 1 != poly.len() {
            return Err(Error::NonSplitSemisimpleQuotient);
        }
        if roots.len() == s {
            break;
        }
    }
    if roots.len() != s {
        return Err(Error::NonSplitSemisimpleQuotient);
    }

    // Lagrange idempotents in the quotient, then orthogonal lifting.
    let one = a.one();
    let mut rest = one.clone();
    let mut blocks = Vec::new();
    for j in 0..s {
        let e = if j + 1 == s {
            rest.clone()
        } else {
            let mut c = one.clone();
            for (i, li) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let factor = sub(&z, &scale(li, &one));
                c = scale(&(Q::one() / (&roots[j] - li)), &a.mul(&c, &factor));
            }
            lift_idempotent(a, &a.mul(&a.mul(&rest, &c), &rest))
        };
        rest = sub(&rest, &e);
        let mut span = rad_ech.clone();
        let mut d: usize = 0;
        for u in &units {
            if span.insert(&a.mul(&e, u)) {
                d += 1;
            }
        }
        let size = num_integer::Roots::sqrt(&d);
        if size * size != d {
            return Err(Error::NonSplitSemisimpleQuotient);
        }
        blocks.push(SimpleBlock { idempotent: e, size });
    }
    Ok(Wedderburn { radical, blocks })
}

/// Monic minimal polynomial of `z` modulo the span of `radical`, low degree first.
fn minimal_polynomial_mod(a: &dyn FiniteAlgebra, z: &[Q], radical: &[Vec<Q>]) -> Vec<Q> {
    let mut powers = vec![a.one()];
    loop {
        let next = a.mul(powers.last().unwrap(), z);
        let family: Vec<Vec<Q>> = radical.iter().chain(powers.iter()).cloned().collect();
        let cs = CoordinateSystem::new(&family).expect("powers below the degree are independent");
        if let Some(c) = cs.coordinates(&next) {
            let mut poly: Vec<Q> = c[radical.len()..].iter().map(|x| -x).collect();
            poly.push(Q::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Distinct rational roots of a polynomial (low degree first) that splits into simple linear factors.
///
/// Returns fewer roots than the degree when it does not.
pub fn rational_roots(poly: &[Q]) -> Vec<Q> {
    let d = poly.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    // Integer polynomial, then u = lead * t makes it monic with integer roots.
    let den = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
    let lead = ints[d].clone();
    let mut monic: Vec<BigInt> = (0..d).map(|i| &ints[i] * num_traits::pow(lead.clone(), d - 1 - i)).collect();
    monic.push(BigInt::one());
    let mut roots = Vec::new();
    while monic.len() > 1 {
        match smallest_integer_root(&monic) {
            Some(r) => {
                roots.push(Q::new(r.clone(), lead.clone()));
                monic = deflate(&monic, &r);
            }
            None => break,
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn deflate(p: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let d = p.len() - 1;
    let mut out = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for i in (0..d).rev() {
        carry = &p[i + 1] + carry * r;
        out[i] = carry.clone();
    }
    out
}

/// Smallest root of a monic real-rooted integer polynomial, assuming it is an integer.
///
/// Newton's method from the left of all roots increases monotonically towards
/// the smallest root; rounding down keeps the iterate on the left.
fn smallest_integer_root(p: &[BigInt]) -> Option<BigInt> {
    let bound = p.iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let dp = derivative(p);
    let mut x = -bound.clone() - BigInt::one();
    for _ in 0..100_000 {
        let v = eval(p, &x);
        if v.is_zero() {
            return Some(x);
        }
        if x > bound {
            return None;
        }
        let dv = eval(&dp, &x);
        if dv.is_zero() {
            x += 1;
            continue;
        }
        let step = Q::new(v, dv);
        let next = (Q::from_integer(x.clone()) - step).floor().to_integer();
        x = if next > x { next } else { x + 1 };
    }
    None
}

/// Complete orthogonal primitive idempotents of a basic split algebra.
pub fn primitive_idempotents(a: &AbstractAlgebra) -> Result<Vec<Vec<Q>>> {
    if !a.field().is_rational() {
        return Err(Error::CharPUnsupported);
    }
    let w = wedderburn(a, 0x5eed)?;
    if let Some(b) = w.blocks.iter().find(|b| b.size > 1) {
        return Err(Error::NotBasic(format!("simple block of size {}", b.size)));
    }
    Ok(w.blocks.into_iter().map(|b| b.idempotent).collect())
}

/// The radical of an algebra over ℚ, checked to be nilpotent when small.
pub fn radical_char0(a: &AbstractAlgebra) -> Result<Vec<Vec<Q>>> {
    if !a.field().is_rational() {
        return Err(Error::CharPUnsupported);
    }
    let rad = trace_radical(a);
    debug_assert!(a.dim() > 48 || is_nilpotent_ideal(a, &rad));
    Ok(rad)
}

/// A basic algebra presented by its Gabriel quiver, with the path basis embedded in the source.
#[derive(Debug, Clone)]
pub struct BasicPresentation {
    pub idempotents: Vec<Vec<Q>>,
    pub labels: Vec<String>,
    pub algebra: BoundQuiverAlgebra,
    /// Coordinates in the source algebra of each path basis element.
    pub embedding: Vec<Vec<Q>>,
}

/// Bound quiver presentation with idempotents found automatically and labeled by position.
pub fn to_bound_quiver(a: &AbstractAlgebra) -> Result<BasicPresentation> {
    let idem = primitive_idempotents(a)?;
    let labels = (1..=idem.len()).map(|i| i.to_string()).collect();
    to_bound_quiver_with(a, idem, labels)
}

/// Bound quiver presentation at a given complete set of primitive orthogonal idempotents.
pub fn to_bound_quiver_with(
    a: &AbstractAlgebra,
    idempotents: Vec<Vec<Q>>,
    labels: Vec<String>,
) -> Result<BasicPresentation> {
    let n = a.dim();
    let k = idempotents.len();
    let radical = radical_char0(a)?;
    let mut elements = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let mut span = Echelon::new(n);
            if i == j {
                span.insert(&idempotents[i]);
                elements.push(GradedBasisElement {
                    left: i,
                    right: i,
                    vector: idempotents[i].clone(),
                    idempotent: true,
                });
            }
            let candidates: Vec<Vec<Q>> = if i == j {
                radical.clone()
            } else {
                (0..n).map(|b| unit(n, b)).collect()
            };
            for x in candidates {
                let v = a.mul(&a.mul(&idempotents[i], &x), &idempotents[j]);
                if v.iter().any(|c| !c.is_zero()) && span.insert(&v) {
                    elements.push(GradedBasisElement { left: i, right: j, vector: v, idempotent: false });
                }
            }
        }
    }
    if elements.len() != n {
        return Err(Error::NotBasic(format!("Peirce blocks span {} of {} dimensions", elements.len(), n)));
    }
    let (algebra, embedding) = present_with_embedding(labels.clone(), &elements, &|x, y| a.mul(x, y), a.field())?;
    Ok(BasicPresentation { idempotents, labels, algebra, embedding })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual() -> AbstractAlgebra {
        AbstractAlgebra::from_fn(vec!["1".into(), "x".into()], vec![q(1), q(0)], ScalarField::Rationals, |i, j| {
            match i + j {
                0 => vec![(0, q(1))],
                1 => vec![(1, q(1))],
                _ => vec![],
            }
        })
        .unwrap()
    }

    fn split_pair() -> AbstractAlgebra {
        AbstractAlgebra::from_fn(vec!["a".into(), "b".into()], vec![q(1), q(1)], ScalarField::Rationals, |i, j| {
            if i == j {
                vec![(i, q(1))]
            } else {
                vec![]
            }
        })
        .unwrap()
    }

    /// Basis 1, T with T² = -T.
    fn hecke_a1() -> AbstractAlgebra {
        AbstractAlgebra::from_fn(vec!["1".into(), "T".into()], vec![q(1), q(0)], ScalarField::Rationals, |i, j| {
            match (i, j) {
                (0, k) | (k, 0) => vec![(k, q(1))],
                _ => vec![(1, q(-1))],
            }
        })
        .unwrap()
    }

    #[test]
    fn radicals_of_small_algebras() {
        assert!(radical_char0(&split_pair()).unwrap().is_empty());
        let r = radical_char0(&dual()).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0][0].is_zero());
    }

    #[test]
    fn idempotents_of_split_and_hecke() {
        let e = primitive_idempotents(&split_pair()).unwrap();
        let mut e: Vec<Vec<Q>> = e;
        e.sort();
        assert_eq!(e, vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        let h = hecke_a1();
        let mut e = primitive_idempotents(&h).unwrap();
        e.sort();
        // -T and 1 + T
        assert_eq!(e, vec![vec![q(0), q(-1)], vec![q(1), q(1)]]);
    }

    #[test]
    fn dual_numbers_present_as_a_loop() {
        let p = to_bound_quiver(&dual()).unwrap();
        assert_eq!(p.algebra.dim(), 2);
        assert_eq!(p.algebra.quiver().arrow_count(), 1);
        assert_eq!(p.algebra.relations().len(), 1);
    }

    #[test]
    fn matrix_blocks_are_detected() {
        // 2x2 matrices: one simple block of size two.
        let units: Vec<Matrix> = (0..4)
            .map(|k| {
                let mut m = Matrix::zeros(2, 2);
                m.set(k / 2, k % 2, q(1));
                m
            })
            .collect();
        let m = MatrixAlgebra::new(&units).unwrap();
        let w = wedderburn(&m, 1).unwrap();
        assert!(w.radical.is_empty());
        assert_eq!(w.blocks.len(), 1);
        assert_eq!(w.blocks[0].size, 2);
    }

    #[test]
    fn roots_of_split_polynomials() {
        // (t - 1/2)(t + 3)(t - 7) = t³ - 4.5t² - 19t + 10.5
        let p = vec![crate::linalg::qf(21, 2), q(-19), crate::linalg::qf(-9, 2), q(1)];
        assert_eq!(rational_roots(&p), vec![q(-3), crate::linalg::qf(1, 2), q(7)]);
        // t² + 1 has no rational roots
        assert!(rational_roots(&[q(1), q(0), q(1)]).is_empty());
    }
}
