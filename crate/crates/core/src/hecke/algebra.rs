//! 0-Hecke algebras on the `T_w` basis.
//!
//! Group elements are permutations generated by explicit Coxeter generators:
//! transpositions of adjacent points for type A and reflections of a regular
//! m-gon for dihedral groups. Breadth-first search from the identity gives
//! lengths and reduced words, and `T_s T_w` is `T_{sw}` when the length goes up
//! and `-T_w` otherwise.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{irreducible_components, subset_label, CoxeterSpec};
use crate::error::{Error, Result};
use crate::linalg::{ScalarField, Q};
use crate::presentation::{primitive_idempotents, to_bound_quiver_with, AbstractAlgebra, BasicPresentation, FiniteAlgebra};

/// Largest group handled at all.
pub const MAX_GROUP_ORDER: usize = 5040;
/// Largest group for which the structure-constant table is materialized.
pub const MAX_TABLE_ORDER: usize = 720;

#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    name: String,
    rank: usize,
    lengths: Vec<usize>,
    /// `words[w]` is a reduced word `s_1 ⋯ s_k` for `w`.
    words: Vec<Vec<usize>>,
    /// `left[s][w]` is the index of `s·w`.
    left: Vec<Vec<usize>>,
}

/// Permutation generators on a common point set, one per Coxeter generator.
fn generators(m: &[Vec<usize>], name: &str) -> Result<Vec<Vec<u16>>> {
    let n = m.len();
    let mut points: u16 = 0;
    let mut swaps: Vec<Vec<(u16, u16)>> = vec![Vec::new(); n];
    for comp in irreducible_components(m) {
        let unsupported = || Error::UnsupportedType(format!("{name}: only type A and dihedral factors have element models"));
        if comp.len() == 2 && m[comp[0]][comp[1]] >= 4 {
            // Reflections i -> -i and i -> 1 - i of the regular k-gon.
            let k = m[comp[0]][comp[1]] as u16;
            let refl = |shift: u16| -> Vec<(u16, u16)> {
                (0..k).map(|i| (points + i, points + (shift + k - i) % k)).collect()
            };
            swaps[comp[0]] = refl(0);
            swaps[comp[1]] = refl(1);
            points += k;
            continue;
        }
        // Type A: the Coxeter graph must be a path with simple bonds.
        let nbrs = |v: usize| comp.iter().copied().filter(move |&w| w != v && m[v][w] >= 3);
        if comp.iter().any(|&v| nbrs(v).count() > 2 || nbrs(v).any(|w| m[v][w] != 3)) {
            return Err(unsupported());
        }
        let Some(start) = comp.iter().copied().find(|&v| nbrs(v).count() <= 1) else {
            return Err(unsupported());
        };
        let mut order = vec![start];
        while order.len() < comp.len() {
            let last = *order.last().expect("nonempty");
            let Some(next) = nbrs(last).find(|w| !order.contains(w)) else {
                return Err(unsupported());
            };
            order.push(next);
        }
        for (p, &g) in order.iter().enumerate() {
            let (a, b) = (points + p as u16, points + p as u16 + 1);
            swaps[g] = vec![(a, b), (b, a)];
        }
        points += comp.len() as u16 + 1;
    }
    Ok(swaps
        .into_iter()
        .map(|moves| {
            let mut perm: Vec<u16> = (0..points).collect();
            for (from, to) in moves {
                perm[from as usize] = to;
            }
            perm
        })
        .collect())
}

impl HeckeAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the group.
    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    /// Index of the group element with the given word, reading left to right.
    pub fn element(&self, word: &[usize]) -> usize {
        word.iter().rev().fold(0, |w, &s| self.left[s][w])
    }

    /// `T_u T_v = ±T_x`, returned as `(x, sign)`.
    pub fn basis_product(&self, u: usize, v: usize) -> (usize, i32) {
        let mut cur = v;
        let mut sign = 1;
        for &s in self.words[u].iter().rev() {
            let next = self.left[s][cur];
            if self.lengths[next] > self.lengths[cur] {
                cur = next;
            } else {
                sign = -sign;
            }
        }
        (cur, sign)
    }

    pub fn labels(&self) -> Vec<String> {
        self.words
            .iter()
            .map(|w| {
                let letters: Vec<String> = w.iter().map(|s| (s + 1).to_string()).collect();
                format!("T[{}]", letters.join(""))
            })
            .collect()
    }

    /// Structure constants on the `T_w` basis.
    pub fn to_abstract(&self) -> Result<AbstractAlgebra> {
        if self.order() > MAX_TABLE_ORDER {
            return Err(Error::UnsupportedType(format!("{}: group of order {} is too large", self.name, self.order())));
        }
        let mut one = vec![Q::zero(); self.order()];
        one[0] = Q::one();
        AbstractAlgebra::from_fn(self.labels(), one, ScalarField::Rationals, |u, v| {
            let (x, sign) = self.basis_product(u, v);
            vec![(x, Q::from_integer(sign.into()))]
        })
    }

    /// Value of the one-dimensional character `T_s -> -1 (s ∈ J), 0 (s ∉ J)`.
    pub fn character(&self, mask: usize, x: &[Q]) -> Q {
        x.iter()
            .zip(&self.words)
            .filter(|(c, w)| !c.is_zero() && w.iter().all(|s| mask >> s & 1 == 1))
            .map(|(c, w)| if w.len() % 2 == 0 { c.clone() } else { -c.clone() })
            .sum()
    }
}

impl FiniteAlgebra for HeckeAlgebra {
    fn dim(&self) -> usize {
        self.order()
    }

    fn one(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.order()];
        v[0] = Q::one();
        v
    }

    fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.order()];
        let ys: Vec<usize> = (0..y.len()).filter(|&v| !y[v].is_zero()).collect();
        for (u, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for &v in &ys {
                let (w, sign) = self.basis_product(u, v);
                let c = a * &y[v];
                if sign > 0 {
                    out[w] += c;
                } else {
                    out[w] -= c;
                }
            }
        }
        out
    }

    /// Traces of the left regular representation.
    fn traces(&self) -> Vec<Q> {
        (0..self.order())
            .map(|u| {
                let t: i64 = (0..self.order())
                    .filter_map(|v| {
                        let (w, s) = self.basis_product(u, v);
                        (w == v).then_some(i64::from(s))
                    })
                    .sum();
                Q::from_integer(t.into())
            })
            .collect()
    }
}

/// The 0-Hecke algebra of `spec`, when every irreducible factor is of type A or dihedral.
pub fn hecke_algebra(spec: &CoxeterSpec) -> Result<HeckeAlgebra> {
    spec.validate()?;
    let m = spec.matrix();
    let gens = generators(&m, &spec.to_string())?;
    let identity: Vec<u16> = (0..gens.first().map_or(0, Vec::len) as u16).collect();
    let mut index: HashMap<Vec<u16>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut lengths = vec![0];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in gens.iter().enumerate() {
            let sw: Vec<u16> = elements[i].iter().map(|&p| g[p as usize]).collect();
            if !index.contains_key(&sw) {
                if elements.len() >= MAX_GROUP_ORDER {
                    return Err(Error::UnsupportedType(format!("{spec}: group order exceeds {MAX_GROUP_ORDER}")));
                }
                index.insert(sw.clone(), elements.len());
                let mut word = vec![s];
                word.extend(&words[i]);
                words.push(word);
                lengths.push(lengths[i] + 1);
                elements.push(sw);
            }
        }
        i += 1;
    }
    let left = gens
        .iter()
        .map(|g| elements.iter().map(|e| index[&e.iter().map(|&p| g[p as usize]).collect::<Vec<u16>>()]).collect())
        .collect();
    Ok(HeckeAlgebra { name: format!("H0({spec})"), rank: m.len(), lengths, words, left })
}

/// Basic presentation with vertex `v_J` at the idempotent on which the character of `J` is one.
pub fn hecke_basic(h: &HeckeAlgebra) -> Result<BasicPresentation> {
    let abs = h.to_abstract()?;
    let idempotents = primitive_idempotents(&abs)?;
    let size = 1usize << h.rank();
    if idempotents.len() != size {
        return Err(Error::NotBasic(format!("{} primitive idempotents, expected {size}", idempotents.len())));
    }
    let mut slots: Vec<Option<Vec<Q>>> = vec![None; size];
    for e in idempotents {
        let hits: Vec<usize> = (0..size).filter(|&mask| h.character(mask, &e).is_one()).collect();
        match hits.as_slice() {
            [mask] if slots[*mask].is_none() => slots[*mask] = Some(e),
            _ => return Err(Error::NotBasic("idempotent not matched by a unique character".into())),
        }
    }
    let idempotents: Vec<Vec<Q>> = slots.into_iter().map(|e| e.expect("all characters matched")).collect();
    let labels = (0..size).map(|mask| subset_label(mask, h.rank())).collect();
    let mut p = to_bound_quiver_with(&abs, idempotents, labels)?;
    p.algebra = p
        .algebra
        .with_label(h.name().to_string())
        .with_provenance(crate::algebra::Provenance::Presented(h.name().to_string()));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> CoxeterSpec {
        CoxeterSpec::parse(s).unwrap()
    }

    #[test]
    fn group_orders() {
        for (s, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("I2(5)", 10), ("B2", 8), ("A1xA2", 12), ("I2(7)xA1", 28)] {
            assert_eq!(hecke_algebra(&spec(s)).unwrap().order(), order, "{s}");
        }
        assert!(matches!(hecke_algebra(&spec("B3")), Err(Error::UnsupportedType(_))));
        assert!(matches!(hecke_algebra(&spec("D4")), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let h = hecke_algebra(&spec("A2")).unwrap();
        let s = h.element(&[0]);
        assert_eq!(h.basis_product(s, s), (s, -1));
        let sts = h.element(&[0, 1, 0]);
        let tst = h.element(&[1, 0, 1]);
        assert_eq!(sts, tst);
        assert_eq!(h.length(sts), 3);
        let (t, u) = (h.element(&[1]), h.element(&[0]));
        let (st, sign) = h.basis_product(u, t);
        assert_eq!(sign, 1);
        assert_eq!(h.basis_product(st, u), (sts, 1));
        let i5 = hecke_algebra(&spec("I2(5)")).unwrap();
        assert_eq!(i5.element(&[0, 1, 0, 1, 0]), i5.element(&[1, 0, 1, 0, 1]));
        assert_ne!(i5.element(&[0, 1, 0, 1]), i5.element(&[1, 0, 1, 0]));
    }

    #[test]
    fn structure_constants_are_associative() {
        for s in ["A1", "A2", "A3", "B2", "I2(5)", "A1xA1"] {
            let abs = hecke_algebra(&spec(s)).unwrap().to_abstract().unwrap();
            assert!(abs.check_associative(), "{s}");
        }
    }

    #[test]
    fn basic_presentation_of_a1() {
        let p = hecke_basic(&hecke_algebra(&spec("A1")).unwrap()).unwrap();
        assert_eq!(p.algebra.vertex_count(), 2);
        assert_eq!(p.algebra.dim(), 2);
        assert_eq!(p.labels, vec!["v{}".to_string(), "v{1}".to_string()]);
    }

    #[test]
    fn gabriel_quiver_matches_the_subset_quiver() {
        for rank in 1..=3 {
            let spec = CoxeterSpec::Named { letter: 'A', rank };
            let presented = hecke_basic(&hecke_algebra(&spec).unwrap()).unwrap().algebra;
            let combinatorial = super::super::hecke_quiver(&spec);
            assert_eq!(presented.quiver().vertices(), combinatorial.vertices(), "A{rank}");
            assert_eq!(presented.quiver().arrow_counts(), combinatorial.arrow_counts(), "A{rank}");
        }
    }
}
