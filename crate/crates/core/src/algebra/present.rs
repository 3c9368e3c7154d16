use num_traits::{One, Zero};

use super::{Arrow, BoundQuiverAlgebra, Path, Provenance, Quiver, Relation, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{CoordinateSystem, Echelon, ScalarField, Q};

/// One element of a graded basis of a basic algebra: a vector in `e_left A e_right`.
#[derive(Debug, Clone)]
pub struct GradedBasisElement {
    pub left: usize,
    pub right: usize,
    pub vector: Vec<Q>,
    pub idempotent: bool,
}

/// Bound quiver presentation of a basic algebra given by a graded basis.
///
/// The basis must contain exactly one idempotent per vertex; all other
/// elements must span the radical. Arrows are chosen as a complement of
/// `rad²` in `rad`, the path basis is grown greedily by length, and each
/// dependent monomial contributes the relation expressing it in that basis.
pub fn present(
    vertices: Vec<String>,
    elements: &[GradedBasisElement],
    mul: &dyn Fn(&[Q], &[Q]) -> Vec<Q>,
    field: ScalarField,
) -> Result<BoundQuiverAlgebra> {
    present_with_embedding(vertices, elements, mul, field).map(|(a, _)| a)
}

/// As [`present`], also returning each path basis element as a vector of the input space.
pub fn present_with_embedding(
    vertices: Vec<String>,
    elements: &[GradedBasisElement],
    mul: &dyn Fn(&[Q], &[Q]) -> Vec<Q>,
    field: ScalarField,
) -> Result<(BoundQuiverAlgebra, Vec<Vec<Q>>)> {
    if !field.is_rational() {
        return Err(Error::CharPUnsupported);
    }
    let n = vertices.len();
    let Some(ambient) = elements.first().map(|e| e.vector.len()) else {
        return Err(Error::EverythingKilled);
    };
    let mut idem = vec![None; n];
    for e in elements.iter().filter(|e| e.idempotent) {
        if e.left != e.right || idem[e.left].replace(e.vector.clone()).is_some() {
            return Err(Error::NotBasic("idempotents do not match the vertices".into()));
        }
    }
    let idem: Vec<Vec<Q>> = idem
        .into_iter()
        .map(|e| e.ok_or_else(|| Error::NotBasic("vertex without idempotent".into())))
        .collect::<Result<_>>()?;

    let mut rad: Vec<Vec<Vec<&Vec<Q>>>> = vec![vec![Vec::new(); n]; n];
    for e in elements.iter().filter(|e| !e.idempotent) {
        rad[e.left][e.right].push(&e.vector);
    }
    let mut arrows = Vec::new();
    let mut arrow_vecs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rad[i][j].is_empty() {
                continue;
            }
            let mut span = Echelon::new(ambient);
            for k in 0..n {
                for x in &rad[i][k] {
                    for y in &rad[k][j] {
                        let p = mul(x, y);
                        if p.iter().any(|c| !c.is_zero()) {
                            span.insert(&p);
                        }
                    }
                }
            }
            for x in &rad[i][j] {
                if span.insert(x) {
                    arrows.push(Arrow { name: format!("a{}", arrows.len() + 1), source: i, target: j });
                    arrow_vecs.push((*x).clone());
                }
            }
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;

    let mut span = Echelon::new(ambient);
    let mut basis: Vec<(Path, Vec<Q>)> = Vec::new();
    let mut dependent: Vec<(Path, Vec<Q>)> = Vec::new();
    for (v, e) in idem.iter().enumerate() {
        span.insert(e);
        basis.push((Path::trivial(v), e.clone()));
    }
    let mut level: Vec<usize> = (0..n).collect();
    let mut length = 0;
    while !level.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for b in level {
            let (path, vec) = basis[b].clone();
            for a in quiver.arrows_from(path.target).collect::<Vec<_>>() {
                let mut arrows = path.arrows.clone();
                arrows.push(a);
                let p = Path { source: path.source, target: quiver.arrow(a).target, arrows };
                let m = mul(&vec, &arrow_vecs[a]);
                if span.insert(&m) {
                    next.push(basis.len());
                    basis.push((p, m));
                } else {
                    dependent.push((p, m));
                }
            }
        }
        level = next;
    }
    if basis.len() != elements.len() {
        return Err(Error::NotBasic(format!(
            "arrows generate {} of {} dimensions",
            basis.len(),
            elements.len()
        )));
    }
    let vectors: Vec<Vec<Q>> = basis.iter().map(|(_, v)| v.clone()).collect();
    let coords = CoordinateSystem::new(&vectors).expect("greedy basis is independent");
    let to_sparse = |v: &[Q]| -> SparseVec {
        coords
            .coordinates(v)
            .expect("basis spans the algebra")
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };

    let relations = dependent
        .iter()
        .map(|(p, v)| {
            let mut terms = vec![(Q::one(), p.arrows.clone())];
            for (k, c) in to_sparse(v) {
                terms.push((-c, basis[k].0.arrows.clone()));
            }
            Relation::new(terms)
        })
        .collect();

    let d = basis.len();
    let mut table = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            if basis[i].0.target == basis[j].0.source {
                table[i][j] = to_sparse(&mul(&basis[i].1, &basis[j].1));
            }
        }
    }
    let paths = basis.into_iter().map(|(p, _)| p).collect();
    let algebra = BoundQuiverAlgebra::from_parts(quiver, relations, field, paths, table, length, Provenance::Presented(String::new()));
    Ok((algebra, vectors))
}
