//! Maps between direct sums of indecomposable projective right modules.
//!
//! `P_v = e_v A`. A map `P_u -> P_v` is left multiplication by an element of
//! `e_v A e_u`, so a map `⊕ P_{u_k} -> ⊕ P_{v_l}` is a matrix whose `(l, k)`
//! entry lies in `e_{v_l} A e_{u_k}`, and composition is matrix multiplication.

use num_traits::{One, Zero};

use crate::algebra::{BoundQuiverAlgebra, Element};
use crate::linalg::{Matrix, Q};

#[derive(Debug, Clone, PartialEq)]
pub struct AlgMatrix {
    /// Vertex of each codomain summand.
    pub rows: Vec<usize>,
    /// Vertex of each domain summand.
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<Element>>,
}

impl AlgMatrix {
    pub fn zero(a: &BoundQuiverAlgebra, rows: &[usize], cols: &[usize]) -> Self {
        AlgMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries: vec![vec![a.zero(); cols.len()]; rows.len()] }
    }

    pub fn identity(a: &BoundQuiverAlgebra, verts: &[usize]) -> Self {
        let mut m = Self::zero(a, verts, verts);
        for (i, &v) in verts.iter().enumerate() {
            m.entries[i][i] = a.idempotent(v);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.iter().all(Zero::is_zero))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, a: &BoundQuiverAlgebra, other: &AlgMatrix) -> AlgMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(a, &self.rows, &other.cols);
        for l in 0..self.rows.len() {
            for m in 0..self.cols.len() {
                let x = &self.entries[l][m];
                if x.iter().all(Zero::is_zero) {
                    continue;
                }
                for k in 0..other.cols.len() {
                    let y = &other.entries[m][k];
                    if y.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let p = a.multiply(x, y);
                    for (o, c) in out.entries[l][k].iter_mut().zip(p) {
                        *o += c;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &AlgMatrix) -> AlgMatrix {
        let mut out = self.clone();
        for (r, s) in out.entries.iter_mut().zip(&other.entries) {
            for (x, y) in r.iter_mut().zip(s) {
                for (u, v) in x.iter_mut().zip(y) {
                    *u += v;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> AlgMatrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut().flatten().flatten() {
            *x *= c;
        }
        out
    }

    pub fn neg(&self) -> AlgMatrix {
        self.scale(&-Q::one())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> AlgMatrix {
        AlgMatrix {
            rows: rows.iter().map(|&r| self.rows[r]).collect(),
            cols: cols.iter().map(|&c| self.cols[c]).collect(),
            entries: rows.iter().map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect()).collect(),
        }
    }

    /// `[self | other]`, sharing the codomain.
    pub fn hstack(&self, other: &AlgMatrix) -> AlgMatrix {
        debug_assert_eq!(self.rows, other.rows);
        let mut out = self.clone();
        out.cols.extend(&other.cols);
        for (r, s) in out.entries.iter_mut().zip(&other.entries) {
            r.extend(s.iter().cloned());
        }
        out
    }

    /// `[self ; other]`, sharing the domain.
    pub fn vstack(&self, other: &AlgMatrix) -> AlgMatrix {
        debug_assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.rows.extend(&other.rows);
        out.entries.extend(other.entries.iter().cloned());
        out
    }

    /// Coefficients of the vertex idempotents: the induced map on tops.
    pub fn top(&self, a: &BoundQuiverAlgebra) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.cols.len());
        for (l, &v) in self.rows.iter().enumerate() {
            for (k, &u) in self.cols.iter().enumerate() {
                if u == v {
                    m.set(l, k, a.top_coefficient(&self.entries[l][k], v));
                }
            }
        }
        m
    }

    /// Whether every entry lies in the radical.
    pub fn is_radical(&self, a: &BoundQuiverAlgebra) -> bool {
        self.top(a).is_zero()
    }
}

/// Coordinates for `Hom(⊕ P_{cols}, ⊕ P_{rows})`: one slot per entry and basis path.
#[derive(Debug, Clone)]
pub struct HomCoordinates {
    rows: Vec<usize>,
    cols: Vec<usize>,
    slots: Vec<(usize, usize, usize)>,
}

impl HomCoordinates {
    pub fn new(a: &BoundQuiverAlgebra, rows: &[usize], cols: &[usize]) -> Self {
        let mut slots = Vec::new();
        for (l, &v) in rows.iter().enumerate() {
            for (k, &u) in cols.iter().enumerate() {
                for &b in a.block(v, u) {
                    slots.push((l, k, b));
                }
            }
        }
        HomCoordinates { rows: rows.to_vec(), cols: cols.to_vec(), slots }
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn coords(&self, m: &AlgMatrix) -> Vec<Q> {
        self.slots.iter().map(|&(l, k, b)| m.entries[l][k][b].clone()).collect()
    }

    pub fn matrix(&self, a: &BoundQuiverAlgebra, x: &[Q]) -> AlgMatrix {
        let mut m = AlgMatrix::zero(a, &self.rows, &self.cols);
        for (&(l, k, b), c) in self.slots.iter().zip(x) {
            m.entries[l][k][b] = c.clone();
        }
        m
    }

    /// The map with a single basis path in one slot.
    pub fn unit(&self, a: &BoundQuiverAlgebra, s: usize) -> AlgMatrix {
        let (l, k, b) = self.slots[s];
        let mut m = AlgMatrix::zero(a, &self.rows, &self.cols);
        m.entries[l][k][b] = Q::one();
        m
    }
}

/// Inverse of a unit `c·e_v + r` of the local ring `e_v A e_v`.
pub fn local_inverse(a: &BoundQuiverAlgebra, x: &[Q], v: usize) -> Element {
    let c = a.top_coefficient(x, v);
    assert!(!c.is_zero(), "not a unit");
    let inv_c = c.recip();
    // x = c(e - n) with n nilpotent, so x^{-1} = c^{-1}(e + n + n² + ...).
    let e = a.idempotent(v);
    let n: Element = e.iter().zip(x).map(|(u, y)| u - &inv_c * y).collect();
    let mut sum = e.clone();
    let mut power = e;
    loop {
        power = a.multiply(&power, &n);
        if power.iter().all(Zero::is_zero) {
            break;
        }
        for (s, p) in sum.iter_mut().zip(&power) {
            *s += p;
        }
    }
    sum.into_iter().map(|s| s * &inv_c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, dual_numbers};
    use crate::linalg::q;

    #[test]
    fn local_inverse_of_unit() {
        let a = dual_numbers();
        let mut x = a.idempotent(0);
        x[0] = q(2);
        let loop_index = a.arrow_basis_index(0);
        x[loop_index] = q(3);
        let y = local_inverse(&a, &x, 0);
        assert_eq!(a.multiply(&x, &y), a.idempotent(0));
    }

    #[test]
    fn hom_coordinates_follow_cartan() {
        let a = a2();
        let c = a.cartan_matrix();
        for i in 0..2 {
            for j in 0..2 {
                // Hom(P_i, P_j) has the (i, j) Cartan entry as dimension.
                let h = HomCoordinates::new(&a, &[j], &[i]);
                assert_eq!(Q::from_integer(h.dim().into()), *c.get(i, j));
            }
        }
    }
}
