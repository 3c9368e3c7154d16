//! Two-term complexes of projectives, presilting tests and silting mutation.
//!
//! A two-term complex `P⁻¹ -> P⁰` is stored as the vertices of its summands in
//! each degree and an [`AlgMatrix`] differential. Homotopy classes of chain
//! maps are computed exactly; mutation takes the cone of a minimal
//! approximation and strips contractible pieces by Gaussian elimination.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_columns, rank, Echelon, Matrix, Q};
use crate::presentation::{wedderburn, MatrixAlgebra};
use crate::projective::{local_inverse, AlgMatrix, HomCoordinates};
use crate::rep::{cokernel, min_proj_presentation, Representation};

#[derive(Debug, Clone, PartialEq)]
pub struct TwoTermComplex {
    /// Vertices of the summands in degree -1.
    pub neg: Vec<usize>,
    /// Vertices of the summands in degree 0.
    pub pos: Vec<usize>,
    /// `⊕ P_neg -> ⊕ P_pos`.
    pub diff: AlgMatrix,
}

impl TwoTermComplex {
    pub fn new(neg: Vec<usize>, pos: Vec<usize>, diff: AlgMatrix) -> Self {
        debug_assert_eq!(diff.rows, pos);
        debug_assert_eq!(diff.cols, neg);
        TwoTermComplex { neg, pos, diff }
    }

    /// `0 -> P_v`.
    pub fn stalk(a: &BoundQuiverAlgebra, v: usize) -> Self {
        Self::new(vec![], vec![v], AlgMatrix::zero(a, &[v], &[]))
    }

    /// `P_v -> 0`.
    pub fn shifted(a: &BoundQuiverAlgebra, v: usize) -> Self {
        Self::new(vec![v], vec![], AlgMatrix::zero(a, &[], &[v]))
    }

    pub fn is_zero(&self) -> bool {
        self.neg.is_empty() && self.pos.is_empty()
    }

    pub fn g_vector(&self, vertices: usize) -> Vec<i64> {
        let mut g = vec![0i64; vertices];
        for &v in &self.pos {
            g[v] += 1;
        }
        for &v in &self.neg {
            g[v] -= 1;
        }
        g
    }

    pub fn direct_sum(&self, a: &BoundQuiverAlgebra, other: &TwoTermComplex) -> TwoTermComplex {
        let top = self.diff.hstack(&AlgMatrix::zero(a, &self.pos, &other.neg));
        let bottom = AlgMatrix::zero(a, &other.pos, &self.neg).hstack(&other.diff);
        let mut neg = self.neg.clone();
        neg.extend(&other.neg);
        let mut pos = self.pos.clone();
        pos.extend(&other.pos);
        TwoTermComplex::new(neg, pos, top.vstack(&bottom))
    }

    /// `H⁰`, the cokernel of the differential.
    pub fn cohomology(&self, a: &BoundQuiverAlgebra) -> Representation {
        cokernel(a, &self.pos, &self.neg, &self.diff)
    }

    pub fn is_minimal(&self, a: &BoundQuiverAlgebra) -> bool {
        self.diff.is_radical(a)
    }

    fn into_complex(self) -> ProjComplex {
        ProjComplex { low: -1, terms: vec![self.neg, self.pos], diffs: vec![self.diff] }
    }
}

/// A bounded complex of projectives; `diffs[i]` maps `terms[i]` to `terms[i + 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjComplex {
    /// Degree of `terms[0]`.
    pub low: i32,
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<AlgMatrix>,
}

impl ProjComplex {
    /// The degrees carrying a nonzero term.
    pub fn support(&self) -> Vec<i32> {
        (0..self.terms.len()).filter(|&i| !self.terms[i].is_empty()).map(|i| self.low + i as i32).collect()
    }

    /// The two-term complex in degrees `d - 1, d`, if nothing lives elsewhere.
    pub fn two_term_at(&self, a: &BoundQuiverAlgebra, d: i32) -> Option<TwoTermComplex> {
        if self.support().iter().any(|&x| x != d && x != d - 1) {
            return None;
        }
        let idx = |deg: i32| -> Option<usize> {
            let i = deg - self.low;
            (i >= 0 && (i as usize) < self.terms.len()).then_some(i as usize)
        };
        let neg = idx(d - 1).map(|i| self.terms[i].clone()).unwrap_or_default();
        let pos = idx(d).map(|i| self.terms[i].clone()).unwrap_or_default();
        let diff = match idx(d - 1) {
            Some(i) if i < self.diffs.len() && idx(d).is_some() => self.diffs[i].clone(),
            _ => AlgMatrix::zero(a, &pos, &neg),
        };
        Some(TwoTermComplex::new(neg, pos, diff))
    }
}

/// Removes contractible summands `P --unit--> P` by Gaussian elimination.
pub fn minimize(a: &BoundQuiverAlgebra, mut c: ProjComplex) -> ProjComplex {
    'outer: loop {
        for n in 0..c.diffs.len() {
            let d = &c.diffs[n];
            for l in 0..d.rows.len() {
                for k in 0..d.cols.len() {
                    let v = d.rows[l];
                    if d.cols[k] != v || a.top_coefficient(&d.entries[l][k], v).is_zero() {
                        continue;
                    }
                    eliminate(a, &mut c, n, l, k);
                    continue 'outer;
                }
            }
        }
        return c;
    }
}

fn eliminate(a: &BoundQuiverAlgebra, c: &mut ProjComplex, n: usize, l: usize, k: usize) {
    let d = &c.diffs[n];
    let v = d.rows[l];
    let inv = local_inverse(a, &d.entries[l][k], v);
    let rows: Vec<usize> = (0..d.rows.len()).filter(|&r| r != l).collect();
    let cols: Vec<usize> = (0..d.cols.len()).filter(|&s| s != k).collect();
    let mut nd = d.select(&rows, &cols);
    // δ - γ φ⁻¹ β
    for (ri, &r) in rows.iter().enumerate() {
        let gamma = &d.entries[r][k];
        if gamma.iter().all(Zero::is_zero) {
            continue;
        }
        let g_inv = a.multiply(gamma, &inv);
        for (si, &s) in cols.iter().enumerate() {
            let beta = &d.entries[l][s];
            if beta.iter().all(Zero::is_zero) {
                continue;
            }
            let corr = a.multiply(&g_inv, beta);
            for (x, y) in nd.entries[ri][si].iter_mut().zip(corr) {
                *x -= y;
            }
        }
    }
    c.diffs[n] = nd;
    if n > 0 {
        let prev = &c.diffs[n - 1];
        let all: Vec<usize> = (0..prev.cols.len()).collect();
        c.diffs[n - 1] = prev.select(&cols, &all);
    }
    if n + 1 < c.diffs.len() {
        let next = &c.diffs[n + 1];
        let all: Vec<usize> = (0..next.rows.len()).collect();
        c.diffs[n + 1] = next.select(&all, &rows);
    }
    c.terms[n].remove(k);
    c.terms[n + 1].remove(l);
}

/// A chain map between two-term complexes.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainMap {
    pub neg: AlgMatrix,
    pub pos: AlgMatrix,
}

impl ChainMap {
    pub fn compose(&self, a: &BoundQuiverAlgebra, before: &ChainMap) -> ChainMap {
        ChainMap { neg: self.neg.compose(a, &before.neg), pos: self.pos.compose(a, &before.pos) }
    }
}

/// Coordinates of chain maps `X -> Y` and the null-homotopic subspace.
struct ChainSpace {
    neg: HomCoordinates,
    pos: HomCoordinates,
    basis: Vec<Vec<Q>>,
    homotopic: Echelon,
}

impl ChainSpace {
    fn new(a: &BoundQuiverAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> Self {
        let neg = HomCoordinates::new(a, &y.neg, &x.neg);
        let pos = HomCoordinates::new(a, &y.pos, &x.pos);
        let cross = HomCoordinates::new(a, &y.pos, &x.neg);
        let mut columns = Vec::with_capacity(neg.dim() + pos.dim());
        for s in 0..neg.dim() {
            columns.push(cross.coords(&y.diff.compose(a, &neg.unit(a, s))));
        }
        for s in 0..pos.dim() {
            columns.push(cross.coords(&pos.unit(a, s).compose(a, &x.diff).neg()));
        }
        let basis = if columns.is_empty() { Vec::new() } else { kernel_of_columns(&columns, cross.dim()) };
        let back = HomCoordinates::new(a, &y.neg, &x.pos);
        let mut homotopic = Echelon::new(neg.dim() + pos.dim());
        for s in 0..back.dim() {
            let h = back.unit(a, s);
            let mut v = neg.coords(&h.compose(a, &x.diff));
            v.extend(pos.coords(&y.diff.compose(a, &h)));
            homotopic.insert(&v);
        }
        ChainSpace { neg, pos, basis, homotopic }
    }

    fn coords(&self, f: &ChainMap) -> Vec<Q> {
        let mut v = self.neg.coords(&f.neg);
        v.extend(self.pos.coords(&f.pos));
        v
    }

    fn map(&self, a: &BoundQuiverAlgebra, v: &[Q]) -> ChainMap {
        let (n, p) = v.split_at(self.neg.dim());
        ChainMap { neg: self.neg.matrix(a, n), pos: self.pos.matrix(a, p) }
    }

    /// Chain maps representing a basis of the homotopy classes.
    fn classes(&self) -> Vec<Vec<Q>> {
        let mut ech = self.homotopic.clone();
        self.basis.iter().filter(|v| ech.insert(v)).cloned().collect()
    }
}

/// Basis of all chain maps `X -> Y`.
pub fn chain_maps(a: &BoundQuiverAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> Vec<ChainMap> {
    let cs = ChainSpace::new(a, x, y);
    cs.basis.iter().map(|v| cs.map(a, v)).collect()
}

/// Chain maps representing a basis of `Hom_K(X, Y)`.
pub fn homotopy_classes(a: &BoundQuiverAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> Vec<ChainMap> {
    let cs = ChainSpace::new(a, x, y);
    cs.classes().iter().map(|v| cs.map(a, v)).collect()
}

/// `dim Hom_K(X, Y[1])`: maps `X⁻¹ -> Y⁰` modulo those factoring through a differential.
pub fn hom_one_shift(a: &BoundQuiverAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> usize {
    let cross = HomCoordinates::new(a, &y.pos, &x.neg);
    if cross.dim() == 0 {
        return 0;
    }
    let mut span = Echelon::new(cross.dim());
    let h0 = HomCoordinates::new(a, &y.pos, &x.pos);
    for s in 0..h0.dim() {
        span.insert(&cross.coords(&h0.unit(a, s).compose(a, &x.diff)));
    }
    let h1 = HomCoordinates::new(a, &y.neg, &x.neg);
    for s in 0..h1.dim() {
        span.insert(&cross.coords(&y.diff.compose(a, &h1.unit(a, s))));
    }
    cross.dim() - span.rank()
}

/// `Hom(X, Y[1]) = 0` for every ordered pair of summands.
pub fn is_presilting(a: &BoundQuiverAlgebra, summands: &[TwoTermComplex]) -> bool {
    summands.iter().all(|x| summands.iter().all(|y| hom_one_shift(a, x, y) == 0))
}

/// Top matrices of a chain endomorphism, block diagonal over degrees.
fn top_of(a: &BoundQuiverAlgebra, f: &ChainMap) -> Matrix {
    let (tn, tp) = (f.neg.top(a), f.pos.top(a));
    let (n, p) = (tn.rows(), tp.rows());
    let mut m = Matrix::zeros(n + p, n + p);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, tn.get(r, c).clone());
        }
    }
    for r in 0..p {
        for c in 0..p {
            m.set(n + r, n + c, tp.get(r, c).clone());
        }
    }
    m
}

/// The residue of an endomorphism of an indecomposable complex: its unique top eigenvalue.
fn residue(a: &BoundQuiverAlgebra, f: &ChainMap) -> Q {
    let t = top_of(a, f);
    let n = t.rows();
    let tr: Q = (0..n).map(|i| t.get(i, i).clone()).sum();
    tr / Q::from_integer(n.into())
}

/// Seeded from the g-vector so that the choice does not depend on call order.
fn rng_for(g: &[i64], attempt: u64) -> ChaCha8Rng {
    let seed = g.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &x| (h ^ (x as u64)).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// The presilting complex with a given g-vector, as a generic differential.
///
/// Presilting complexes are determined by their g-vectors and have an open
/// orbit, so a random differential works; the result is verified.
pub fn generic_complex(a: &BoundQuiverAlgebra, g: &[i64]) -> Option<TwoTermComplex> {
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for (v, &x) in g.iter().enumerate() {
        let reps = x.unsigned_abs() as usize;
        let target = if x > 0 { &mut pos } else { &mut neg };
        target.extend(std::iter::repeat_n(v, reps));
    }
    let coords = HomCoordinates::new(a, &pos, &neg);
    for attempt in 0..12u64 {
        let mut rng = rng_for(g, attempt);
        let range = 3 + 8 * attempt as i64;
        let x: Vec<Q> = (0..coords.dim()).map(|_| Q::from_integer(rng.gen_range(-range..=range).into())).collect();
        let c = TwoTermComplex::new(neg.clone(), pos.clone(), coords.matrix(a, &x));
        if hom_one_shift(a, &c, &c) == 0 {
            return Some(c);
        }
    }
    None
}

/// Direct-sum decomposition of a two-term presilting complex: summands with multiplicities.
///
/// The endomorphism algebra acts on the tops of the terms; its simple blocks
/// give the summand types, and the ranks of the block idempotents give their
/// g-vectors. Each summand is then realized as the generic complex of its g-vector.
pub fn decompose(a: &BoundQuiverAlgebra, x: &TwoTermComplex) -> Result<Vec<(TwoTermComplex, usize)>> {
    if !a.field().is_rational() {
        return Err(Error::CharPUnsupported);
    }
    let x = minimize(a, x.clone().into_complex()).two_term_at(a, 0).expect("minimizing keeps degrees");
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let n = a.vertex_count();
    let tops: Vec<Matrix> = chain_maps(a, &x, &x).iter().map(|f| top_of(a, f)).collect();
    let alg = MatrixAlgebra::new(&tops).expect("identity is a chain map");
    let w = wedderburn(&alg, 7).map_err(|_| Error::NonSplitSummand)?;
    let mut out: Vec<(TwoTermComplex, usize)> = Vec::new();
    for b in &w.blocks {
        let e = alg.matrix(&b.idempotent);
        let mut g = vec![0i64; n];
        for v in 0..n {
            let nv: Vec<usize> = (0..x.neg.len()).filter(|&i| x.neg[i] == v).collect();
            let pv: Vec<usize> = (0..x.pos.len()).filter(|&i| x.pos[i] == v).map(|i| i + x.neg.len()).collect();
            g[v] = rank(&e.submatrix(&pv, &pv)) as i64 - rank(&e.submatrix(&nv, &nv)) as i64;
        }
        if g.iter().any(|c| c % b.size as i64 != 0) {
            return Err(Error::NonSplitSummand);
        }
        let g: Vec<i64> = g.iter().map(|c| c / b.size as i64).collect();
        let y = generic_complex(a, &g).ok_or_else(|| Error::NotSilting(format!("no presilting realization of {g:?}")))?;
        out.push((y, b.size));
    }
    out.sort_by_key(|(y, _)| y.g_vector(n));
    Ok(out)
}

/// A basic two-term silting complex, kept as its indecomposable summands.
#[derive(Debug, Clone, PartialEq)]
pub struct SiltingComplex {
    pub summands: Vec<TwoTermComplex>,
}

impl SiltingComplex {
    /// `A` in degree 0.
    pub fn top(a: &BoundQuiverAlgebra) -> Self {
        SiltingComplex { summands: (0..a.vertex_count()).map(|v| TwoTermComplex::stalk(a, v)).collect() }
    }

    /// `A` in degree -1.
    pub fn bottom(a: &BoundQuiverAlgebra) -> Self {
        SiltingComplex { summands: (0..a.vertex_count()).map(|v| TwoTermComplex::shifted(a, v)).collect() }
    }

    pub fn g_matrix(&self, vertices: usize) -> Vec<Vec<i64>> {
        self.summands.iter().map(|s| s.g_vector(vertices)).collect()
    }

    /// Sorted g-vectors: determines the complex up to isomorphism.
    pub fn key(&self, vertices: usize) -> Vec<Vec<i64>> {
        let mut k = self.g_matrix(vertices);
        k.sort();
        k
    }

    pub fn total(&self, a: &BoundQuiverAlgebra) -> TwoTermComplex {
        let mut it = self.summands.iter();
        let first = it.next().cloned().unwrap_or_else(|| TwoTermComplex::new(vec![], vec![], AlgMatrix::zero(a, &[], &[])));
        it.fold(first, |acc, s| acc.direct_sum(a, s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    /// The result is smaller.
    Left,
    /// The result is larger.
    Right,
}

/// Maps out of (or into) `x` that do not factor through radical maps of `add U`.
fn minimal_approximation(
    a: &BoundQuiverAlgebra,
    x: &TwoTermComplex,
    others: &[&TwoTermComplex],
    dir: Direction,
) -> Vec<(usize, ChainMap)> {
    let spaces: Vec<ChainSpace> = others
        .iter()
        .map(|u| match dir {
            Direction::Left => ChainSpace::new(a, x, u),
            Direction::Right => ChainSpace::new(a, u, x),
        })
        .collect();
    let classes: Vec<Vec<ChainMap>> =
        spaces.iter().map(|s| s.classes().iter().map(|v| s.map(a, v)).collect()).collect();
    let mut out = Vec::new();
    for (j, space) in spaces.iter().enumerate() {
        let mut rad = space.homotopic.clone();
        for (i, maps_i) in classes.iter().enumerate() {
            let radical_maps: Vec<ChainMap> = if i == j {
                let end = homotopy_classes(a, others[j], others[j]);
                let (units, mut nil): (Vec<ChainMap>, Vec<ChainMap>) =
                    end.into_iter().partition(|f| !residue(a, f).is_zero());
                // Shift units into the radical by subtracting their residue times the identity.
                let id = ChainMap {
                    neg: AlgMatrix::identity(a, &others[j].neg),
                    pos: AlgMatrix::identity(a, &others[j].pos),
                };
                for f in units {
                    let r = residue(a, &f);
                    let g = ChainMap { neg: f.neg.add(&id.neg.scale(&-&r)), pos: f.pos.add(&id.pos.scale(&-&r)) };
                    nil.push(g);
                }
                nil
            } else {
                match dir {
                    Direction::Left => homotopy_classes(a, others[i], others[j]),
                    Direction::Right => homotopy_classes(a, others[j], others[i]),
                }
            };
            for phi in maps_i {
                for psi in &radical_maps {
                    let comp = match dir {
                        Direction::Left => psi.compose(a, phi),
                        Direction::Right => phi.compose(a, psi),
                    };
                    rad.insert(&space.coords(&comp));
                }
            }
        }
        for f in &classes[j] {
            if rad.insert(&space.coords(f)) {
                out.push((j, f.clone()));
            }
        }
    }
    out
}

/// Cone of `f: X -> U` as a complex in degrees -2..0.
fn cone(x: &TwoTermComplex, u: &TwoTermComplex, f: &ChainMap) -> ProjComplex {
    let mut mid = x.pos.clone();
    mid.extend(&u.neg);
    let d2 = x.diff.neg().vstack(&f.neg);
    let d1 = f.pos.hstack(&u.diff);
    debug_assert_eq!(d2.rows, mid);
    ProjComplex { low: -2, terms: vec![x.neg.clone(), mid, u.pos.clone()], diffs: vec![d2, d1] }
}

/// Replaces the summand at `k` by the other completion of the remaining summands.
pub fn mutate(a: &BoundQuiverAlgebra, t: &SiltingComplex, k: usize) -> Result<(SiltingComplex, Direction)> {
    if k >= t.summands.len() {
        return Err(Error::NotSilting(format!("no summand {k}")));
    }
    let x = &t.summands[k];
    let others: Vec<&TwoTermComplex> = t.summands.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, s)| s).collect();
    let empty = TwoTermComplex::new(vec![], vec![], AlgMatrix::zero(a, &[], &[]));
    for dir in [Direction::Left, Direction::Right] {
        let approx = minimal_approximation(a, x, &others, dir);
        let mut target = empty.clone();
        let mut f = match dir {
            Direction::Left => ChainMap { neg: AlgMatrix::zero(a, &[], &x.neg), pos: AlgMatrix::zero(a, &[], &x.pos) },
            Direction::Right => ChainMap { neg: AlgMatrix::zero(a, &x.neg, &[]), pos: AlgMatrix::zero(a, &x.pos, &[]) },
        };
        for (j, g) in &approx {
            target = target.direct_sum(a, others[*j]);
            f = match dir {
                Direction::Left => ChainMap { neg: f.neg.vstack(&g.neg), pos: f.pos.vstack(&g.pos) },
                Direction::Right => ChainMap { neg: f.neg.hstack(&g.neg), pos: f.pos.hstack(&g.pos) },
            };
        }
        let (c, degree) = match dir {
            Direction::Left => (cone(x, &target, &f), 0),
            Direction::Right => (cone(&target, x, &f), -1),
        };
        if let Some(y) = minimize(a, c).two_term_at(a, degree) {
            if y.is_zero() {
                return Err(Error::NotSilting("mutation produced a zero summand".into()));
            }
            let mut summands = t.summands.clone();
            summands[k] = y;
            return Ok((SiltingComplex { summands }, dir));
        }
    }
    Err(Error::NotSilting(format!("summand {k} admits no two-term mutation")))
}

/// The support τ-tilting pair `(H⁰, P)` of a silting complex; `P` lists vertices.
pub fn pair_of(a: &BoundQuiverAlgebra, t: &SiltingComplex) -> Result<(Representation, Vec<usize>)> {
    let mut m = Representation::zero(a);
    let mut p = Vec::new();
    for s in &t.summands {
        if s.pos.is_empty() {
            if s.neg.len() != 1 {
                return Err(Error::NotTwoTermSilting("stalk in degree -1 is not indecomposable".into()));
            }
            p.push(s.neg[0]);
        } else {
            m = m.direct_sum(&s.cohomology(a));
        }
    }
    p.sort();
    Ok((m, p))
}

/// The complex of a pair: the minimal presentation of `M` plus `P` in degree -1.
pub fn complex_of_pair(a: &BoundQuiverAlgebra, m: &Representation, p: &[usize]) -> TwoTermComplex {
    let pres = min_proj_presentation(a, m);
    let x = TwoTermComplex::new(pres.p1, pres.p0, pres.diff);
    p.iter().fold(x, |acc, &v| acc.direct_sum(a, &TwoTermComplex::shifted(a, v)))
}

/// Distinct g-vectors among the summands.
pub fn distinct_g_vectors(t: &SiltingComplex, vertices: usize) -> usize {
    t.summands.iter().map(|s| s.g_vector(vertices)).collect::<BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, dual_numbers};
    use crate::linalg::q;
    use crate::rep::{projective_of, simple_of};

    fn s1_complex(a: &BoundQuiverAlgebra) -> TwoTermComplex {
        // P2 -> P1 given by the arrow.
        let mut d = AlgMatrix::zero(a, &[0], &[1]);
        d.entries[0][0] = a.arrow_element(0);
        TwoTermComplex::new(vec![1], vec![0], d)
    }

    #[test]
    fn shifts_between_stalks() {
        let a = a2();
        let p = TwoTermComplex::stalk(&a, 0);
        assert_eq!(hom_one_shift(&a, &p, &p), 0);
        assert_eq!(hom_one_shift(&a, &TwoTermComplex::shifted(&a, 0), &p), 1);
        let s = s1_complex(&a);
        assert_eq!(hom_one_shift(&a, &s, &s), 0);
        assert_eq!(s.cohomology(&a), simple_of(&a, 0));
    }

    #[test]
    fn minimize_strips_identity() {
        let a = a2();
        let c = TwoTermComplex::new(vec![0], vec![0], AlgMatrix::identity(&a, &[0])).into_complex();
        assert!(minimize(&a, c).support().is_empty());
        let s = s1_complex(&a).into_complex();
        assert_eq!(minimize(&a, s.clone()), s);
    }

    #[test]
    fn mutations_of_a2() {
        let a = a2();
        let t = SiltingComplex::top(&a);
        let (u, dir) = mutate(&a, &t, 1).unwrap();
        assert_eq!(dir, Direction::Left);
        assert_eq!(u.key(2), vec![vec![1, -1], vec![1, 0]]);
        let (pm, p) = pair_of(&a, &u).unwrap();
        assert!(p.is_empty());
        assert_eq!(pm, projective_of(&a, 0).direct_sum(&simple_of(&a, 0)));
        let (back, dir) = mutate(&a, &u, 1).unwrap();
        assert_eq!(dir, Direction::Right);
        assert_eq!(back.key(2), t.key(2));
    }

    #[test]
    fn local_algebra_mutates_to_shift() {
        let d = dual_numbers();
        let (u, dir) = mutate(&d, &SiltingComplex::top(&d), 0).unwrap();
        assert_eq!(dir, Direction::Left);
        assert_eq!(u.key(1), vec![vec![-1]]);
    }

    #[test]
    fn decomposition() {
        let a = a2();
        let parts = decompose(&a, &SiltingComplex::top(&a).total(&a)).unwrap();
        assert_eq!(parts.iter().map(|(x, m)| (x.g_vector(2), *m)).collect::<Vec<_>>(), vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
        let s = s1_complex(&a);
        let twice = decompose(&a, &s.direct_sum(&a, &s)).unwrap();
        assert_eq!(twice.len(), 1);
        assert_eq!(twice[0].1, 2);
        let mixed = TwoTermComplex::stalk(&a, 0).direct_sum(&a, &s);
        assert_eq!(decompose(&a, &mixed).unwrap().len(), 2);
        let _ = q(0);
    }

    #[test]
    fn pairs_round_trip() {
        let a = a2();
        let m = projective_of(&a, 0).direct_sum(&simple_of(&a, 0));
        let c = complex_of_pair(&a, &m, &[]);
        assert_eq!(c.g_vector(2), vec![2, -1]);
        assert_eq!(complex_of_pair(&a, &Representation::zero(&a), &[0, 1]).g_vector(2), vec![-1, -1]);
    }
}
