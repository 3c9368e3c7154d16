//! Bound quiver algebras `kQ/I` with an explicit path basis and structure constants.

mod construct;
mod format;
mod present;
mod quiver;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use construct::{
    idempotent_truncation, is_symmetric, quotient, quotient_factor, right_socle, socle_factor, tensor_product,
    trivial_extension, verify_algebra_map,
};
pub use format::{algebra_to_json, parse_algebra, parse_coefficient};
pub use present::{present, present_with_embedding, GradedBasisElement};
pub use quiver::{Arrow, Path, Quiver, Relation};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, ScalarField, SparseEchelon, Q};

pub type Element = Vec<Q>;
pub type SparseVec = Vec<(usize, Q)>;

pub const DEFAULT_CAP: usize = 30;

/// Paths enumerated while saturating before giving up.
const PATH_BUDGET: usize = 400_000;

/// How an algebra came about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Defined,
    Family(String),
    Quotient { parent: String, kill_vertices: Vec<String>, kill_arrows: Vec<String> },
    Truncation { parent: String, keep: Vec<String> },
    Tensor(String, String),
    TrivialExtension(String),
    SocleFactor(String),
    Presented(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    /// The canonical projection `Triv(B) -> B`.
    TrivialExtensionBase,
    /// `A ⊗ B -> A` through a vertex character of the other tensor factor.
    TensorFactor { other_vertex: String },
    Quotient { kill_vertices: Vec<String>, kill_arrows: Vec<String> },
}

/// A known surjection from this algebra onto `algebra`.
///
/// `map[i]` is the image of the i-th basis element, so the claim can be replayed.
#[derive(Debug, Clone)]
pub struct Factor {
    pub kind: FactorKind,
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub map: Vec<Element>,
}

/// A finite-dimensional algebra `kQ/I` presented by a basis of path representatives.
#[derive(Debug, Clone)]
pub struct BoundQuiverAlgebra {
    label: String,
    quiver: Quiver,
    relations: Vec<Relation>,
    field: ScalarField,
    basis: Vec<Path>,
    table: Vec<Vec<SparseVec>>,
    idempotents: Vec<usize>,
    nilpotency: usize,
    provenance: Provenance,
    factors: Vec<Factor>,
    blocks: Vec<Vec<Vec<usize>>>,
    arrow_basis: Vec<usize>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.field == other.field && self.basis == other.basis && self.table == other.table
    }
}

/// Builds `kQ/I` by saturation.
///
/// For N = 1, 2, ... the span of all relation translates `p·r·q` is taken modulo
/// paths longer than N. The first N at which every path of length N lies in that
/// span bounds the radical: then R^N ⊆ I and the basis is read off as the
/// non-pivot paths of length below N.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>, field: ScalarField, cap: usize) -> Result<BoundQuiverAlgebra> {
    let mut rels = Vec::new();
    for r in &relations {
        let mut r = r.normalized();
        for t in r.terms.iter_mut() {
            t.0 = field.reduce(std::mem::take(&mut t.0));
        }
        let r = r.normalized();
        if let Some((s, t, m)) = r.validate(&quiver)? {
            rels.push((r, s, t, m));
        }
    }

    let mut paths = PathTable::new(&quiver);
    for n in 1..=cap.max(1) {
        paths.extend_to(&quiver, n);
        if paths.all.len() > PATH_BUDGET {
            return Err(Error::InfiniteDimensional { cap: n });
        }
        let mut ech = SparseEchelon::new(field);
        for (r, s, t, m) in &rels {
            if *m > n {
                continue;
            }
            let budget = n - m;
            for &p in &paths.by_target[*s] {
                let lp = paths.all[p].len();
                if lp > budget {
                    break;
                }
                for &qq in &paths.by_source[*t] {
                    let lq = paths.all[qq].len();
                    if lp + lq > budget {
                        break;
                    }
                    let mut v = BTreeMap::new();
                    for (c, term) in &r.terms {
                        if lp + term.len() + lq > n {
                            continue;
                        }
                        let mut w = paths.all[p].arrows.clone();
                        w.extend_from_slice(term);
                        w.extend_from_slice(&paths.all[qq].arrows);
                        let col = paths.index[&(paths.all[p].source, w)];
                        *v.entry(col).or_insert_with(Q::zero) += c;
                    }
                    ech.insert(v);
                }
            }
        }
        let saturated = paths.by_len[n].iter().all(|&c| ech.normal_form(BTreeMap::from([(c, Q::one())])).is_empty());
        if !saturated {
            continue;
        }
        let basis_cols: Vec<usize> = (0..paths.all.len()).filter(|&c| paths.all[c].len() < n && !ech.is_pivot(c)).collect();
        let col_to_basis: HashMap<usize, usize> = basis_cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let basis: Vec<Path> = basis_cols.iter().map(|&c| paths.all[c].clone()).collect();
        let dim = basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let Some(w) = basis[i].concat(&basis[j]) else { continue };
                if w.len() >= n {
                    continue;
                }
                let col = paths.index[&(w.source, w.arrows)];
                let nf = ech.normal_form(BTreeMap::from([(col, Q::one())]));
                table[i][j] = nf.into_iter().map(|(c, x)| (col_to_basis[&c], x)).collect();
            }
        }
        let relations = rels.into_iter().map(|(r, ..)| r).collect();
        return Ok(BoundQuiverAlgebra::from_parts(quiver, relations, field, basis, table, n, Provenance::Defined));
    }
    Err(Error::InfiniteDimensional { cap })
}

/// All paths up to some length, indexed in (length, lexicographic) order.
struct PathTable {
    all: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    by_len: Vec<Vec<usize>>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
}

impl PathTable {
    fn new(q: &Quiver) -> Self {
        let mut t = PathTable {
            all: Vec::new(),
            index: HashMap::new(),
            by_len: vec![Vec::new()],
            by_source: vec![Vec::new(); q.vertex_count()],
            by_target: vec![Vec::new(); q.vertex_count()],
        };
        for v in 0..q.vertex_count() {
            t.push(Path::trivial(v));
        }
        t
    }

    fn push(&mut self, p: Path) {
        let id = self.all.len();
        self.index.insert((p.source, p.arrows.clone()), id);
        if self.by_len.len() <= p.len() {
            self.by_len.push(Vec::new());
        }
        self.by_len[p.len()].push(id);
        self.by_source[p.source].push(id);
        self.by_target[p.target].push(id);
        self.all.push(p);
    }

    fn extend_to(&mut self, q: &Quiver, n: usize) {
        while self.by_len.len() <= n {
            let last = self.by_len.len() - 1;
            let prev = self.by_len[last].clone();
            self.by_len.push(Vec::new());
            for id in prev {
                let p = self.all[id].clone();
                for a in 0..q.arrow_count() {
                    if q.arrow(a).source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        self.push(Path { source: p.source, target: q.arrow(a).target, arrows });
                    }
                }
                if self.all.len() > PATH_BUDGET {
                    return;
                }
            }
        }
    }
}

impl BoundQuiverAlgebra {
    /// Assembles an algebra from already computed data. The table is trusted.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: ScalarField,
        basis: Vec<Path>,
        table: Vec<Vec<SparseVec>>,
        nilpotency: usize,
        provenance: Provenance,
    ) -> Self {
        let idempotents = (0..quiver.vertex_count())
            .map(|v| basis.iter().position(|p| p.is_trivial() && p.source == v).expect("missing vertex idempotent"))
            .collect();
        let n = quiver.vertex_count();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (b, p) in basis.iter().enumerate() {
            blocks[p.source][p.target].push(b);
        }
        let arrow_basis = (0..quiver.arrow_count())
            .map(|a| basis.iter().position(|p| p.arrows == [a]).expect("arrow missing from basis"))
            .collect();
        BoundQuiverAlgebra {
            label: String::from("A"),
            blocks,
            arrow_basis,
            quiver,
            relations,
            field,
            basis,
            table,
            idempotents,
            nilpotency,
            provenance,
            factors: Vec::new(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn with_factor(mut self, f: Factor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.basis.iter().map(|p| p.label(&self.quiver)).collect()
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn vertex_idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].is_trivial()).collect()
    }

    /// Left vertex `i` of a basis element of `e_i A e_j`.
    pub fn left_vertex(&self, b: usize) -> usize {
        self.basis[b].source
    }

    pub fn right_vertex(&self, b: usize) -> usize {
        self.basis[b].target
    }

    /// Basis indices of `e_i A e_j`, i.e. paths from `i` to `j`.
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.blocks[i][j]
    }

    /// Basis index of an arrow.
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn zero(&self) -> Element {
        vec![Q::zero(); self.dim()]
    }

    pub fn unit(&self, b: usize) -> Element {
        let mut e = self.zero();
        e[b] = Q::one();
        e
    }

    pub fn one(&self) -> Element {
        let mut e = self.zero();
        for &i in &self.idempotents {
            e[i] = Q::one();
        }
        e
    }

    pub fn idempotent(&self, v: usize) -> Element {
        self.unit(self.idempotents[v])
    }

    /// The class of a path, reduced to basis coordinates.
    pub fn path_element(&self, arrows: &[usize]) -> Element {
        let mut acc: Option<Element> = None;
        for &a in arrows {
            let u = self.unit(self.arrow_basis[a]);
            acc = Some(match acc {
                None => u,
                Some(x) => self.multiply(&x, &u),
            });
        }
        acc.unwrap_or_else(|| self.one())
    }

    pub fn arrow_element(&self, a: usize) -> Element {
        self.path_element(&[a])
    }

    pub fn multiply(&self, a: &[Q], b: &[Q]) -> Element {
        assert_eq!(a.len(), self.dim());
        assert_eq!(b.len(), self.dim());
        let mut out = self.zero();
        let nz_b: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_zero()).collect();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = self.basis[i].target;
            for &j in &nz_b {
                if self.basis[j].source != t {
                    continue;
                }
                let xy = x * &b[j];
                for (k, c) in &self.table[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        if !self.field.is_rational() {
            for x in out.iter_mut() {
                *x = self.field.reduce(std::mem::take(x));
            }
        }
        out
    }

    /// Coefficient of the idempotent `e_v` in `x`.
    pub fn top_coefficient(&self, x: &[Q], v: usize) -> Q {
        x[self.idempotents[v]].clone()
    }

    pub fn is_radical(&self, x: &[Q]) -> bool {
        self.idempotents.iter().all(|&i| x[i].is_zero())
    }

    /// Entry (i, j) is dim Hom(P_i, P_j) = number of basis paths from j to i.
    pub fn cartan_matrix(&self) -> Matrix {
        let n = self.vertex_count();
        let mut c = vec![vec![0i64; n]; n];
        for p in &self.basis {
            c[p.target][p.source] += 1;
        }
        Matrix::from_ints(&c)
    }

    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let c = self.cartan_matrix().to_integers().expect("integral");
        let n = self.vertex_count();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * i64::try_from(&c[i][j]).expect("small entry") * y[j];
            }
        }
        s
    }

    /// Gabriel quiver read off from `rad/rad²` in each graded block.
    pub fn gabriel_quiver(&self) -> Quiver {
        let n = self.vertex_count();
        let rad2 = self.radical_square_blocks();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let rad_ij = self.block(i, j).iter().filter(|&&b| !self.basis[b].is_trivial()).count();
                let mult = rad_ij - rad2[i][j];
                let named: Vec<&Arrow> = self.quiver.arrows().iter().filter(|a| a.source == i && a.target == j).collect();
                for k in 0..mult {
                    let name = named.get(k).map_or_else(|| format!("x{}_{}_{}", i, j, k), |a| a.name.clone());
                    arrows.push(Arrow { name, source: i, target: j });
                }
            }
        }
        Quiver::new(self.quiver.vertices().to_vec(), arrows).expect("well-formed")
    }

    /// Dimensions of `e_i rad² e_j`.
    fn radical_square_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let rad = self.radical_basis();
        let mut spans: Vec<Vec<crate::linalg::Echelon>> =
            vec![vec![crate::linalg::Echelon::new(self.dim()); n]; n];
        for &a in &rad {
            for &b in &rad {
                if self.basis[a].target != self.basis[b].source {
                    continue;
                }
                let prod = &self.table[a][b];
                if prod.is_empty() {
                    continue;
                }
                let mut v = self.zero();
                for (k, c) in prod {
                    v[*k] = c.clone();
                }
                spans[self.basis[a].source][self.basis[b].target].insert(&v);
            }
        }
        spans.iter().map(|row| row.iter().map(|e| e.rank()).collect()).collect()
    }

    /// Checks (b_i b_j) b_k = b_i (b_j b_k) on every basis triple, or on a seeded sample above `exhaustive_limit`.
    pub fn check_associative(&self, exhaustive_limit: usize) -> bool {
        use rand::{Rng, SeedableRng};
        let d = self.dim();
        let check = |i: usize, j: usize, k: usize| {
            let l = self.multiply(&self.multiply(&self.unit(i), &self.unit(j)), &self.unit(k));
            let r = self.multiply(&self.unit(i), &self.multiply(&self.unit(j), &self.unit(k)));
            l == r
        };
        if d <= exhaustive_limit {
            (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| check(i, j, k))))
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
            (0..20_000).all(|_| check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::linalg::q;

    pub(crate) fn dual_numbers() -> BoundQuiverAlgebra {
        let qv = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::from_names(&qv, &[(q(1), vec!["x", "x"])]).unwrap();
        build_algebra(qv, vec![r], ScalarField::Rationals, DEFAULT_CAP).unwrap()
    }

    pub(crate) fn a2() -> BoundQuiverAlgebra {
        let qv = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        build_algebra(qv, vec![], ScalarField::Rationals, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn dual_numbers_basis() {
        let a = dual_numbers();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.basis_labels(), vec!["e_1", "x"]);
        let x = a.arrow_element(0);
        assert_eq!(a.multiply(&x, &x), a.zero());
        assert_eq!(a.nilpotency_bound(), 2);
    }

    #[test]
    fn path_algebra_a2() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.cartan_matrix(), Matrix::from_ints(&[[1, 0], [1, 1]]));
        let e1 = a.idempotent(0);
        let e2 = a.idempotent(1);
        assert_eq!(a.multiply(&e1, &e1), e1);
        assert_eq!(a.multiply(&e1, &e2), a.zero());
        assert_eq!(a.euler_form(&[0, 1], &[1, 0]), 1);
        assert_eq!(a.euler_form(&[1, 0], &[0, 1]), 0);
    }

    #[test]
    fn inhomogeneous_relation_saturates() {
        // x² = y³ on a single vertex with xy = yx = 0: basis e, x, y, y², y³.
        let qv = Quiver::from_names(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = vec![
            Relation::from_names(&qv, &[(q(1), vec!["x", "x"]), (q(-1), vec!["y", "y", "y"])]).unwrap(),
            Relation::from_names(&qv, &[(q(1), vec!["x", "y"])]).unwrap(),
            Relation::from_names(&qv, &[(q(1), vec!["y", "x"])]).unwrap(),
        ];
        let a = build_algebra(qv, rels, ScalarField::Rationals, DEFAULT_CAP).unwrap();
        assert_eq!(a.dim(), 5);
        assert!(a.check_associative(60));
        let x = a.arrow_element(0);
        let y = a.arrow_element(1);
        let y3 = a.multiply(&a.multiply(&y, &y), &y);
        assert_eq!(a.multiply(&x, &x), y3);
        assert!(!a.is_radical(&a.one()));
    }

    #[test]
    fn free_loop_is_infinite() {
        let qv = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
        assert_eq!(build_algebra(qv, vec![], ScalarField::Rationals, 8), Err(Error::InfiniteDimensional { cap: 8 }));
    }

    #[test]
    fn prime_field_collapses_coefficients() {
        // x² - 2y² with 2 = 0 in F_2 leaves the monomial relation x².
        let qv = Quiver::from_names(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = vec![
            Relation::from_names(&qv, &[(q(1), vec!["x", "x"]), (q(-2), vec!["y", "y"])]).unwrap(),
            Relation::from_names(&qv, &[(q(1), vec!["x", "y"])]).unwrap(),
            Relation::from_names(&qv, &[(q(1), vec!["y", "x"])]).unwrap(),
            Relation::from_names(&qv, &[(q(1), vec!["y", "y", "y"])]).unwrap(),
        ];
        let f2 = build_algebra(qv.clone(), rels.clone(), ScalarField::prime(2).unwrap(), DEFAULT_CAP).unwrap();
        let f0 = build_algebra(qv, rels, ScalarField::Rationals, DEFAULT_CAP).unwrap();
        assert_eq!(f0.dim(), 4);
        assert_eq!(f2.dim(), 4);
        assert_eq!(f2.basis_labels(), vec!["e_1", "x", "y", "y*y"]);
        assert_eq!(f0.basis_labels(), vec!["e_1", "x", "y", "x*x"]);
    }
}
