use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

use super::present::present_with_embedding;
use super::{
    build_algebra, Arrow, BoundQuiverAlgebra, Element, Factor, FactorKind, GradedBasisElement, Provenance, Quiver,
    Relation,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_columns, solve_and_reduce, Echelon, Matrix, Q};

/// `A/J` for the ideal generated by the given vertex idempotents and arrows.
///
/// Killed generators are substituted by zero in the relations; terms that
/// vanish are dropped and the algebra is rebuilt from the surviving relations.
pub fn quotient(a: &BoundQuiverAlgebra, kill_vertices: &[usize], kill_arrows: &[usize]) -> Result<BoundQuiverAlgebra> {
    let q = a.quiver();
    let dead_v: BTreeSet<usize> = kill_vertices.iter().copied().collect();
    let keep_v: Vec<usize> = (0..q.vertex_count()).filter(|v| !dead_v.contains(v)).collect();
    if keep_v.is_empty() {
        return Err(Error::EverythingKilled);
    }
    let mut dead_a: BTreeSet<usize> = kill_arrows.iter().copied().collect();
    for (i, arr) in q.arrows().iter().enumerate() {
        if dead_v.contains(&arr.source) || dead_v.contains(&arr.target) {
            dead_a.insert(i);
        }
    }
    let vpos: HashMap<usize, usize> = keep_v.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut apos = HashMap::new();
    let mut arrows = Vec::new();
    for (i, arr) in q.arrows().iter().enumerate() {
        if dead_a.contains(&i) {
            continue;
        }
        apos.insert(i, arrows.len());
        arrows.push(Arrow { name: arr.name.clone(), source: vpos[&arr.source], target: vpos[&arr.target] });
    }
    let quiver = Quiver::new(keep_v.iter().map(|&v| q.vertices()[v].clone()).collect(), arrows)?;
    let relations = a
        .relations()
        .iter()
        .filter_map(|r| {
            let terms: Vec<(Q, Vec<usize>)> = r
                .terms
                .iter()
                .filter(|(_, p)| p.iter().all(|x| !dead_a.contains(x)))
                .map(|(c, p)| (c.clone(), p.iter().map(|x| apos[x]).collect()))
                .collect();
            (!terms.is_empty()).then(|| Relation::new(terms))
        })
        .collect();
    let built = build_algebra(quiver, relations, a.field(), a.nilpotency_bound().max(1))?;
    Ok(built
        .with_label(format!("{}/J", a.label()))
        .with_provenance(Provenance::Quotient {
            parent: a.label().to_string(),
            kill_vertices: kill_vertices.iter().map(|&v| q.vertices()[v].clone()).collect(),
            kill_arrows: kill_arrows.iter().map(|&x| q.arrow(x).name.clone()).collect(),
        }))
}

/// The quotient together with the projection `A -> A/J` on basis elements.
pub fn quotient_factor(a: &BoundQuiverAlgebra, kill_vertices: &[usize], kill_arrows: &[usize]) -> Result<Factor> {
    let b = quotient(a, kill_vertices, kill_arrows)?;
    let q = a.quiver();
    let bq = b.quiver();
    let map = a
        .basis()
        .iter()
        .map(|p| {
            if p.is_trivial() {
                return match bq.vertex_index(&q.vertices()[p.source]) {
                    Some(v) => b.idempotent(v),
                    None => b.zero(),
                };
            }
            let mut img = Vec::new();
            for &x in &p.arrows {
                match bq.arrow_index(&q.arrow(x).name) {
                    Some(y) => img.push(y),
                    None => return b.zero(),
                }
            }
            b.path_element(&img)
        })
        .collect();
    let kind = FactorKind::Quotient {
        kill_vertices: kill_vertices.iter().map(|&v| q.vertices()[v].clone()).collect(),
        kill_arrows: kill_arrows.iter().map(|&x| q.arrow(x).name.clone()).collect(),
    };
    Ok(Factor { kind, algebra: Arc::new(b), map })
}

/// `eAe` for `e` the sum of the idempotents at `keep`, with its Gabriel quiver recomputed.
pub fn idempotent_truncation(a: &BoundQuiverAlgebra, keep: &[usize]) -> Result<BoundQuiverAlgebra> {
    if keep.is_empty() {
        return Err(Error::ParameterOutOfRange("truncation needs at least one vertex".into()));
    }
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let elements: Vec<GradedBasisElement> = (0..a.dim())
        .filter_map(|b| {
            let (l, r) = (*pos.get(&a.left_vertex(b))?, *pos.get(&a.right_vertex(b))?);
            Some(GradedBasisElement { left: l, right: r, vector: a.unit(b), idempotent: a.basis()[b].is_trivial() })
        })
        .collect();
    let labels: Vec<String> = keep.iter().map(|&v| a.quiver().vertices()[v].clone()).collect();
    let (t, _) = present_with_embedding(labels.clone(), &elements, &|x, y| a.multiply(x, y), a.field())?;
    Ok(t.with_label(format!("e{}e", a.label()))
        .with_provenance(Provenance::Truncation { parent: a.label().to_string(), keep: labels }))
}

/// `A ⊗_k B`, presented by its Gabriel quiver. Both factors are recorded as quotients.
pub fn tensor_product(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra) -> Result<BoundQuiverAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let nb = b.vertex_count();
    let mut elements = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            let mut v = vec![Q::zero(); da * db];
            v[i * db + j] = num_traits::One::one();
            elements.push(GradedBasisElement {
                left: a.left_vertex(i) * nb + b.left_vertex(j),
                right: a.right_vertex(i) * nb + b.right_vertex(j),
                vector: v,
                idempotent: a.basis()[i].is_trivial() && b.basis()[j].is_trivial(),
            });
        }
    }
    let mul = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); da * db];
        let nz_y: Vec<usize> = (0..y.len()).filter(|&k| !y[k].is_zero()).collect();
        for (ij, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            let (i, j) = (ij / db, ij % db);
            for &kl in &nz_y {
                let (k, l) = (kl / db, kl % db);
                let (pa, pb) = (a.basis_product(i, k), b.basis_product(j, l));
                if pa.is_empty() || pb.is_empty() {
                    continue;
                }
                let c = cx * &y[kl];
                for (u, cu) in pa {
                    for (w, cw) in pb {
                        out[u * db + w] += &c * cu * cw;
                    }
                }
            }
        }
        out
    };
    let mut labels = Vec::new();
    for u in a.quiver().vertices() {
        for w in b.quiver().vertices() {
            labels.push(format!("({u},{w})"));
        }
    }
    let (t, emb) = present_with_embedding(labels, &elements, &mul, a.field())?;
    let project = |first: bool| -> Vec<Element> {
        emb.iter()
            .map(|v| {
                if first {
                    let e = b.idempotent_index(0);
                    (0..da).map(|i| v[i * db + e].clone()).collect()
                } else {
                    let e = a.idempotent_index(0);
                    (0..db).map(|j| v[e * db + j].clone()).collect()
                }
            })
            .collect()
    };
    let fa = Factor {
        kind: FactorKind::TensorFactor { other_vertex: b.quiver().vertices()[0].clone() },
        algebra: Arc::new(a.clone()),
        map: project(true),
    };
    let fb = Factor {
        kind: FactorKind::TensorFactor { other_vertex: a.quiver().vertices()[0].clone() },
        algebra: Arc::new(b.clone()),
        map: project(false),
    };
    Ok(t.with_label(format!("{}⊗{}", a.label(), b.label()))
        .with_provenance(Provenance::Tensor(a.label().to_string(), b.label().to_string()))
        .with_factor(fa)
        .with_factor(fb))
}

/// `Triv(A) = A ⋉ D(A)`, with the projection onto `A` recorded as a factor.
pub fn trivial_extension(a: &BoundQuiverAlgebra) -> Result<BoundQuiverAlgebra> {
    let d = a.dim();
    let mut elements = Vec::with_capacity(2 * d);
    for k in 0..d {
        elements.push(GradedBasisElement {
            left: a.left_vertex(k),
            right: a.right_vertex(k),
            vector: unit(2 * d, k),
            idempotent: a.basis()[k].is_trivial(),
        });
    }
    // The dual basis element f_k lives in the opposite block of b_k.
    for k in 0..d {
        elements.push(GradedBasisElement {
            left: a.right_vertex(k),
            right: a.left_vertex(k),
            vector: unit(2 * d, d + k),
            idempotent: false,
        });
    }
    let mul = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); 2 * d];
        let nz = |v: &[Q], lo: usize| -> Vec<usize> { (lo..lo + d).filter(|&k| !v[k].is_zero()).collect() };
        let (xa, xf, ya, yf) = (nz(x, 0), nz(x, d), nz(y, 0), nz(y, d));
        for &i in &xa {
            for &j in &ya {
                for (k, c) in a.basis_product(i, j) {
                    out[*k] += &x[i] * &y[j] * c;
                }
            }
            // b_i · f_j = Σ_k [b_j](b_k b_i) f_k
            for &jf in &yf {
                let j = jf - d;
                let c0 = &x[i] * &y[jf];
                for k in 0..d {
                    if let Some((_, c)) = a.basis_product(k, i).iter().find(|(t, _)| *t == j) {
                        out[d + k] += &c0 * c;
                    }
                }
            }
        }
        // f_j · b_i = Σ_k [b_j](b_i b_k) f_k
        for &jf in &xf {
            let j = jf - d;
            for &i in &ya {
                let c0 = &x[jf] * &y[i];
                for k in 0..d {
                    if let Some((_, c)) = a.basis_product(i, k).iter().find(|(t, _)| *t == j) {
                        out[d + k] += &c0 * c;
                    }
                }
            }
        }
        out
    };
    let (t, emb) = present_with_embedding(a.quiver().vertices().to_vec(), &elements, &mul, a.field())?;
    let map = emb.iter().map(|v| v[..d].to_vec()).collect();
    let base = Factor { kind: FactorKind::TrivialExtensionBase, algebra: Arc::new(a.clone()), map };
    Ok(t.with_label(format!("Triv({})", a.label()))
        .with_provenance(Provenance::TrivialExtension(a.label().to_string()))
        .with_factor(base))
}

fn unit(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = num_traits::One::one();
    v
}

/// Whether `A` carries a nondegenerate form `λ` with `λ(ab) = λ(ba)`.
///
/// The admissible `λ` form a subspace; a seeded random member of it is tested
/// for nondegeneracy of `(a, b) ↦ λ(ab)` several times.
pub fn is_symmetric(a: &BoundQuiverAlgebra) -> bool {
    let d = a.dim();
    let mut constraints: Vec<Vec<Q>> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut row = vec![Q::zero(); d];
            for (k, c) in a.basis_product(i, j) {
                row[*k] += c;
            }
            for (k, c) in a.basis_product(j, i) {
                row[*k] -= c;
            }
            if row.iter().any(|x| !x.is_zero()) {
                constraints.push(row);
            }
        }
    }
    let forms = if constraints.is_empty() {
        (0..d).map(|k| unit(d, k)).collect()
    } else {
        solve_and_reduce(&Matrix::from_rows(constraints), a.field()).nullspace
    };
    if forms.is_empty() {
        return false;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a11);
    for _ in 0..6 {
        let mut lambda = vec![Q::zero(); d];
        for f in &forms {
            let c = Q::from_integer(BigInt::from(rng.gen_range(-1000i64..=1000)));
            for (l, x) in lambda.iter_mut().zip(f) {
                *l += &c * x;
            }
        }
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let v: Q = a.basis_product(i, j).iter().map(|(k, c)| c * &lambda[*k]).sum();
                gram.set(i, j, v);
            }
        }
        if solve_and_reduce(&gram, a.field()).rank == d {
            return true;
        }
    }
    false
}

/// Basis of the right socle `{x : x·rad = 0}`, block by block.
pub fn right_socle(a: &BoundQuiverAlgebra) -> Vec<Element> {
    let n = a.vertex_count();
    let q = a.quiver();
    let arrows: Vec<(usize, Element)> = (0..q.arrow_count()).map(|x| (q.arrow(x).source, a.arrow_element(x))).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let block = a.block(i, j);
            if block.is_empty() {
                continue;
            }
            let outgoing: Vec<&Element> = arrows.iter().filter(|(s, _)| *s == j).map(|(_, e)| e).collect();
            let cols: Vec<Vec<Q>> = block
                .iter()
                .map(|&b| outgoing.iter().flat_map(|e| a.multiply(&a.unit(b), e)).collect())
                .collect();
            let rows = cols[0].len();
            for k in kernel_of_columns(&cols, rows) {
                let mut v = a.zero();
                for (c, &b) in k.iter().zip(block) {
                    v[b] = c.clone();
                }
                out.push(v);
            }
        }
    }
    out
}

/// `A / soc(A)` for the right socle, which must be a two-sided ideal.
pub fn socle_factor(a: &BoundQuiverAlgebra) -> Result<BoundQuiverAlgebra> {
    if a.radical_basis().is_empty() {
        return Ok(a.clone());
    }
    let soc = right_socle(a);
    let mut ech = Echelon::new(a.dim());
    for s in &soc {
        ech.insert(s);
    }
    for s in &soc {
        for x in 0..a.quiver().arrow_count() {
            if !ech.contains(&a.multiply(&a.arrow_element(x), s)) {
                return Err(Error::SocleNotTwoSided);
            }
        }
    }
    let keep: Vec<usize> = (0..a.vertex_count()).filter(|&v| !ech.contains(&a.idempotent(v))).collect();
    if keep.is_empty() {
        return Err(Error::EverythingKilled);
    }
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut elements = Vec::new();
    let mut chosen = ech.clone();
    for b in 0..a.dim() {
        let (Some(&l), Some(&r)) = (pos.get(&a.left_vertex(b)), pos.get(&a.right_vertex(b))) else { continue };
        let u = a.unit(b);
        if chosen.insert(&u) {
            elements.push(GradedBasisElement { left: l, right: r, vector: ech.reduce(&u), idempotent: a.basis()[b].is_trivial() });
        }
    }
    let mul = |x: &[Q], y: &[Q]| ech.reduce(&a.multiply(x, y));
    let labels = keep.iter().map(|&v| a.quiver().vertices()[v].clone()).collect();
    let (t, _) = present_with_embedding(labels, &elements, &mul, a.field())?;
    Ok(t.with_label(format!("{}/soc", a.label())).with_provenance(Provenance::SocleFactor(a.label().to_string())))
}

/// Whether `map` (images of the basis of `source`) is a unital surjective algebra map onto `target`.
pub fn verify_algebra_map(source: &BoundQuiverAlgebra, target: &BoundQuiverAlgebra, map: &[Element]) -> bool {
    if map.len() != source.dim() || map.iter().any(|v| v.len() != target.dim()) {
        return false;
    }
    let image = |x: &[Q]| -> Element {
        let mut out = target.zero();
        for (c, v) in x.iter().zip(map) {
            if c.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(v) {
                *o += c * y;
            }
        }
        out
    };
    if image(&source.one()) != target.one() {
        return false;
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = image(&source.multiply(&source.unit(i), &source.unit(j)));
            if lhs != target.multiply(&map[i], &map[j]) {
                return false;
            }
        }
    }
    let mut span = Echelon::new(target.dim());
    for v in map {
        span.insert(v);
    }
    span.rank() == target.dim()
}
