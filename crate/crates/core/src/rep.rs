//! Right modules as quiver representations, minimal projective presentations and τ.
//!
//! A right module `M` has fibers `M_v = M e_v`; an arrow `a: i -> j` acts as a
//! linear map `M_i -> M_j` stored as a `dim M_j × dim M_i` matrix.

use num_traits::{One, Zero};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{solve_and_reduce, Echelon, Matrix, ScalarField, Q};
use crate::projective::AlgMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(a: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = a.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::MalformedQuiver(
                "representation does not match the quiver".into(),
            ));
        }
        for (m, arr) in maps.iter().zip(q.arrows()) {
            if m.rows() != dims[arr.target] || m.cols() != dims[arr.source] {
                return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
            }
        }
        let r = Representation { dims, maps };
        if !r.satisfies_relations(a) {
            return Err(Error::MalformedRelation("representation violates a relation".into()));
        }
        Ok(r)
    }

    pub fn zero(a: &BoundQuiverAlgebra) -> Self {
        let q = a.quiver();
        Representation { dims: vec![0; q.vertex_count()], maps: vec![Matrix::zeros(0, 0); q.arrow_count()] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Right action of a path (first arrow first) on a vector of the source fiber.
    pub fn act(&self, arrows: &[usize], v: &[Q]) -> Vec<Q> {
        arrows.iter().fold(v.to_vec(), |acc, &a| self.maps[a].apply(&acc))
    }

    pub fn satisfies_relations(&self, a: &BoundQuiverAlgebra) -> bool {
        let q = a.quiver();
        a.relations().iter().all(|r| {
            let Some((s, _, _)) = r.validate(q).ok().flatten() else { return true };
            (0..self.dims[s]).all(|i| {
                let mut e = vec![Q::zero(); self.dims[s]];
                e[i] = Q::one();
                let mut total: Option<Vec<Q>> = None;
                for (c, p) in &r.terms {
                    let img: Vec<Q> = self.act(p, &e).into_iter().map(|x| x * c).collect();
                    total = Some(match total {
                        None => img,
                        Some(t) => t.iter().zip(&img).map(|(x, y)| x + y).collect(),
                    });
                }
                total.is_none_or(|t| t.iter().all(Zero::is_zero))
            })
        })
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims = self.dims.iter().zip(&other.dims).map(|(x, y)| x + y).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(x.rows() + y.rows(), x.cols() + y.cols());
                for r in 0..x.rows() {
                    for c in 0..x.cols() {
                        m.set(r, c, x.get(r, c).clone());
                    }
                }
                for r in 0..y.rows() {
                    for c in 0..y.cols() {
                        m.set(x.rows() + r, x.cols() + c, y.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Representation { dims, maps }
    }
}

/// `P_v = e_v A` on its path basis.
pub fn projective_of(a: &BoundQuiverAlgebra, v: usize) -> Representation {
    let id = AlgMatrix::identity(a, &[v]);
    cokernel(a, &[v], &[], &AlgMatrix { rows: id.rows, cols: vec![], entries: vec![vec![]] })
}

/// The simple top of `P_v`.
pub fn simple_of(a: &BoundQuiverAlgebra, v: usize) -> Representation {
    let mut dims = vec![0; a.vertex_count()];
    dims[v] = 1;
    let maps = a.quiver().arrows().iter().map(|arr| Matrix::zeros(dims[arr.target], dims[arr.source])).collect();
    Representation { dims, maps }
}

/// Fiber coordinates of `⊕_l P_{verts[l]}` at vertex `j`: pairs (summand, basis path).
fn fiber(a: &BoundQuiverAlgebra, verts: &[usize], j: usize) -> Vec<(usize, usize)> {
    verts.iter().enumerate().flat_map(|(l, &v)| a.block(v, j).iter().map(move |&b| (l, b))).collect()
}

/// The cokernel of `d: ⊕ P_{neg} -> ⊕ P_{pos}`.
pub fn cokernel(a: &BoundQuiverAlgebra, pos: &[usize], neg: &[usize], d: &AlgMatrix) -> Representation {
    let n = a.vertex_count();
    let fibers: Vec<Vec<(usize, usize)>> = (0..n).map(|j| fiber(a, pos, j)).collect();
    let index = |j: usize, l: usize, b: usize| fibers[j].iter().position(|&x| x == (l, b)).expect("fiber slot");
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        let mut ech = Echelon::new(fibers[j].len());
        for (k, &u) in neg.iter().enumerate() {
            for &b in a.block(u, j) {
                let mut v = vec![Q::zero(); fibers[j].len()];
                for l in 0..pos.len() {
                    let p = a.multiply(&d.entries[l][k], &a.unit(b));
                    for (c, x) in p.iter().enumerate() {
                        if !x.is_zero() {
                            v[index(j, l, c)] += x;
                        }
                    }
                }
                ech.insert(&v);
            }
        }
        images.push(ech);
    }
    let keep: Vec<Vec<usize>> = images.iter().map(Echelon::complement_units).collect();
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, arr)| {
            let (i, j) = (arr.source, arr.target);
            let ab = a.arrow_basis_index(ai);
            let mut m = Matrix::zeros(dims[j], dims[i]);
            for (col, &p) in keep[i].iter().enumerate() {
                let (l, b) = fibers[i][p];
                let mut v = vec![Q::zero(); fibers[j].len()];
                for (c, x) in a.basis_product(b, ab) {
                    v[index(j, l, *c)] += x;
                }
                let v = images[j].reduce(&v);
                for (row, &p2) in keep[j].iter().enumerate() {
                    if !v[p2].is_zero() {
                        m.set(row, col, v[p2].clone());
                    }
                }
            }
            m
        })
        .collect();
    Representation { dims, maps }
}

/// Basis of `Hom_A(M, N)`; each map is one matrix `M_v -> N_v` per vertex.
pub fn hom_space(a: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Vec<Vec<Matrix>> {
    let q = a.quiver();
    let mut offsets = Vec::new();
    let mut vars = 0;
    for v in 0..q.vertex_count() {
        offsets.push(vars);
        vars += n.dims[v] * m.dims[v];
    }
    if vars == 0 {
        return Vec::new();
    }
    let rows: usize = q.arrows().iter().map(|arr| n.dims[arr.target] * m.dims[arr.source]).sum();
    let mut sys = Matrix::zeros(rows.max(1), vars);
    let mut row0 = 0;
    for (ai, arr) in q.arrows().iter().enumerate() {
        let (i, j) = (arr.source, arr.target);
        let (na, ma) = (&n.maps[ai], &m.maps[ai]);
        // (N_a f_i - f_j M_a)[p][c] for p < dim N_j, c < dim M_i
        for p in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let row = row0 + p * m.dims[i] + c;
                for r in 0..n.dims[i] {
                    let coef = na.get(p, r);
                    if !coef.is_zero() {
                        let var = offsets[i] + r * m.dims[i] + c;
                        let cur = sys.get(row, var) + coef;
                        sys.set(row, var, cur);
                    }
                }
                for s in 0..m.dims[j] {
                    let coef = ma.get(s, c);
                    if !coef.is_zero() {
                        let var = offsets[j] + p * m.dims[j] + s;
                        let cur = sys.get(row, var) - coef;
                        sys.set(row, var, cur);
                    }
                }
            }
        }
        row0 += n.dims[j] * m.dims[i];
    }
    solve_and_reduce(&sys, ScalarField::Rationals)
        .nullspace
        .into_iter()
        .map(|x| {
            (0..q.vertex_count())
                .map(|v| {
                    let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f.set(r, c, x[offsets[v] + r * m.dims[v] + c].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect()
}

/// `P1 -> P0 -> M -> 0` with `P0 -> M` a projective cover and `P1` covering its kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePresentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    /// The map `P1 -> P0`; all entries lie in the radical.
    pub diff: AlgMatrix,
}

impl ProjectivePresentation {
    pub fn g_vector(&self, vertices: usize) -> Vec<i64> {
        let mut g = vec![0i64; vertices];
        for &v in &self.p0 {
            g[v] += 1;
        }
        for &v in &self.p1 {
            g[v] -= 1;
        }
        g
    }
}

/// Generators of a top: unit vectors of each fiber outside the image of the incoming arrows.
fn top_generators(a: &BoundQuiverAlgebra, m: &Representation) -> Vec<(usize, Vec<Q>)> {
    let q = a.quiver();
    let mut gens = Vec::new();
    for v in 0..q.vertex_count() {
        let mut rad = Echelon::new(m.dims[v]);
        for (ai, arr) in q.arrows().iter().enumerate() {
            if arr.target != v {
                continue;
            }
            for c in 0..m.dims[arr.source] {
                let col: Vec<Q> = (0..m.dims[v]).map(|r| m.maps[ai].get(r, c).clone()).collect();
                rad.insert(&col);
            }
        }
        for p in rad.complement_units() {
            let mut e = vec![Q::zero(); m.dims[v]];
            e[p] = Q::one();
            gens.push((v, e));
        }
    }
    gens
}

pub fn min_proj_presentation(a: &BoundQuiverAlgebra, m: &Representation) -> ProjectivePresentation {
    let n = a.vertex_count();
    let gens = top_generators(a, m);
    let p0: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    // Kernel of the cover, fiber by fiber.
    let fibers: Vec<Vec<(usize, usize)>> = (0..n).map(|j| fiber(a, &p0, j)).collect();
    let mut kernels: Vec<Vec<Vec<Q>>> = Vec::with_capacity(n);
    for j in 0..n {
        let cols: Vec<Vec<Q>> = fibers[j]
            .iter()
            .map(|&(l, b)| m.act(&a.basis()[b].arrows, &gens[l].1))
            .collect();
        kernels.push(crate::linalg::kernel_of_columns(&cols, m.dims[j]));
    }
    let index = |j: usize, l: usize, b: usize| fibers[j].iter().position(|&x| x == (l, b)).expect("fiber slot");
    let mut p1 = Vec::new();
    let mut columns: Vec<Vec<crate::algebra::Element>> = Vec::new();
    for j in 0..n {
        let mut span = Echelon::new(fibers[j].len());
        for (ai, arr) in a.quiver().arrows().iter().enumerate() {
            if arr.target != j {
                continue;
            }
            let ab = a.arrow_basis_index(ai);
            for k in &kernels[arr.source] {
                let mut v = vec![Q::zero(); fibers[j].len()];
                for (x, &(l, b)) in k.iter().zip(&fibers[arr.source]) {
                    if x.is_zero() {
                        continue;
                    }
                    for (c, y) in a.basis_product(b, ab) {
                        v[index(j, l, *c)] += x * y;
                    }
                }
                span.insert(&v);
            }
        }
        for k in &kernels[j] {
            if span.insert(k) {
                p1.push(j);
                let mut col = vec![a.zero(); p0.len()];
                for (x, &(l, b)) in k.iter().zip(&fibers[j]) {
                    col[l][b] += x;
                }
                columns.push(col);
            }
        }
    }
    let entries = (0..p0.len()).map(|l| columns.iter().map(|c| c[l].clone()).collect()).collect();
    ProjectivePresentation { diff: AlgMatrix { rows: p0.clone(), cols: p1.clone(), entries }, p1, p0 }
}

pub fn g_vector(a: &BoundQuiverAlgebra, m: &Representation) -> Vec<i64> {
    min_proj_presentation(a, m).g_vector(a.vertex_count())
}

/// `τM = D Tr M`, computed from the minimal presentation.
pub fn ar_translate(a: &BoundQuiverAlgebra, m: &Representation) -> Representation {
    let pres = min_proj_presentation(a, m);
    let n = a.vertex_count();
    // Left modules ⊕ A e_v; fiber at i is ⊕ e_i A e_v.
    let left_fiber = |verts: &[usize], i: usize| -> Vec<(usize, usize)> {
        verts.iter().enumerate().flat_map(|(l, &v)| a.block(i, v).iter().map(move |&b| (l, b))).collect()
    };
    let target: Vec<Vec<(usize, usize)>> = (0..n).map(|i| left_fiber(&pres.p1, i)).collect();
    let index = |i: usize, k: usize, b: usize| target[i].iter().position(|&x| x == (k, b)).expect("fiber slot");
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut ech = Echelon::new(target[i].len());
        for (l, &v) in pres.p0.iter().enumerate() {
            for &b in a.block(i, v) {
                let mut row = vec![Q::zero(); target[i].len()];
                for k in 0..pres.p1.len() {
                    let p = a.multiply(&a.unit(b), &pres.diff.entries[l][k]);
                    for (c, x) in p.iter().enumerate() {
                        if !x.is_zero() {
                            row[index(i, k, c)] += x;
                        }
                    }
                }
                ech.insert(&row);
            }
        }
        images.push(ech);
    }
    let keep: Vec<Vec<usize>> = images.iter().map(Echelon::complement_units).collect();
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, arr)| {
            let (i, j) = (arr.source, arr.target);
            let ab = a.arrow_basis_index(ai);
            // Left action a·: Tr_j -> Tr_i, then transpose.
            let mut left = Matrix::zeros(dims[i], dims[j]);
            for (col, &p) in keep[j].iter().enumerate() {
                let (k, b) = target[j][p];
                let mut v = vec![Q::zero(); target[i].len()];
                for (c, x) in a.basis_product(ab, b) {
                    v[index(i, k, *c)] += x;
                }
                let v = images[i].reduce(&v);
                for (row, &p2) in keep[i].iter().enumerate() {
                    if !v[p2].is_zero() {
                        left.set(row, col, v[p2].clone());
                    }
                }
            }
            left.transpose()
        })
        .collect();
    Representation { dims, maps }
}

/// `Hom(M, τM) = 0` and `Hom(P, M) = 0` for the projective `P = ⊕ P_v`.
pub fn tau_rigid_check(a: &BoundQuiverAlgebra, m: &Representation, p: &[usize]) -> bool {
    p.iter().all(|&v| m.dims[v] == 0) && hom_space(a, m, &ar_translate(a, m)).is_empty()
}

/// Whether `N` is a quotient of a direct sum of copies of `M`.
pub fn fac_order_geq(a: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> bool {
    let homs = hom_space(a, m, n);
    (0..a.vertex_count()).all(|v| {
        let mut span = Echelon::new(n.dims[v]);
        for f in &homs {
            for c in 0..m.dims[v] {
                let col: Vec<Q> = (0..n.dims[v]).map(|r| f[v].get(r, c).clone()).collect();
                span.insert(&col);
            }
        }
        span.rank() == n.dims[v]
    })
}
