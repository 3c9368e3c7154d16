//! Finite Coxeter systems, their 0-Hecke algebras and 0-Schur truncations.

mod algebra;
mod classify;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use algebra::{hecke_algebra, hecke_basic, HeckeAlgebra, MAX_GROUP_ORDER, MAX_TABLE_ORDER};
pub use classify::{
    classify_hecke, classify_schur, schur_algebra, schur_truncation, HeckeClassification, SchurClassification,
    SingletonBlockCheck,
};

use crate::algebra::{Arrow, Quiver};
use crate::error::{Error, Result};

/// A finite Coxeter system, by name or by its Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoxeterSpec {
    /// `letter` ∈ {A, B, D, E, F, H}; `I2(m)` is [`CoxeterSpec::Dihedral`].
    Named { letter: char, rank: usize },
    Dihedral { m: usize },
    Matrix(Vec<Vec<usize>>),
    /// Commuting product of the factors.
    Product(Vec<CoxeterSpec>),
}

impl fmt::Display for CoxeterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterSpec::Named { letter, rank } => write!(f, "{letter}{rank}"),
            CoxeterSpec::Dihedral { m } => write!(f, "I2({m})"),
            CoxeterSpec::Matrix(m) => write!(f, "matrix{m:?}"),
            CoxeterSpec::Product(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                f.write_str(&names.join("x"))
            }
        }
    }
}

impl CoxeterSpec {
    /// Parses `A3`, `B2`, `I2(7)`, `A1xA2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(['x', 'X', '*']).map(str::trim).collect();
        if parts.len() > 1 {
            return Ok(CoxeterSpec::Product(parts.into_iter().map(Self::parse).collect::<Result<_>>()?));
        }
        let bad = || Error::Parse(format!("not a Coxeter type: {s:?}"));
        let spec = if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            CoxeterSpec::Dihedral { m: rest.trim().parse().map_err(|_| bad())? }
        } else {
            let mut chars = s.chars();
            let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
            let rank = chars.as_str().parse().map_err(|_| bad())?;
            CoxeterSpec::Named { letter, rank }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Reads a whitespace-separated square matrix, one row per line.
    pub fn parse_matrix(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = CoxeterSpec::Matrix(rows);
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let out_of_range = || Error::ParameterOutOfRange(self.to_string());
        match self {
            CoxeterSpec::Named { letter, rank } => {
                let ok = match letter {
                    'A' => *rank >= 1,
                    'B' | 'C' => *rank >= 2,
                    'D' => *rank >= 4,
                    'E' => (6..=8).contains(rank),
                    'F' => *rank == 4,
                    'H' => (3..=4).contains(rank),
                    _ => return Err(Error::Parse(format!("unknown Coxeter type {self}"))),
                };
                ok.then_some(()).ok_or_else(out_of_range)
            }
            CoxeterSpec::Dihedral { m } => (*m >= 3).then_some(()).ok_or_else(out_of_range),
            CoxeterSpec::Matrix(m) => {
                let n = m.len();
                let ok = n >= 1
                    && m.iter().all(|r| r.len() == n)
                    && (0..n).all(|i| m[i][i] == 1 && (0..n).all(|j| i == j || (m[i][j] == m[j][i] && m[i][j] >= 2)));
                ok.then_some(()).ok_or_else(|| Error::Parse("not a Coxeter matrix".into()))
            }
            CoxeterSpec::Product(parts) => parts.iter().try_for_each(Self::validate),
        }
    }

    /// The Coxeter matrix, generators numbered from 0.
    pub fn matrix(&self) -> Vec<Vec<usize>> {
        match self {
            CoxeterSpec::Named { letter, rank } => named_matrix(*letter, *rank),
            CoxeterSpec::Dihedral { m } => vec![vec![1, *m], vec![*m, 1]],
            CoxeterSpec::Matrix(m) => m.clone(),
            CoxeterSpec::Product(parts) => {
                let blocks: Vec<Vec<Vec<usize>>> = parts.iter().map(Self::matrix).collect();
                let n: usize = blocks.iter().map(Vec::len).sum();
                let mut out = vec![vec![2; n]; n];
                let mut at = 0;
                for b in blocks {
                    for i in 0..b.len() {
                        for j in 0..b.len() {
                            out[at + i][at + j] = b[i][j];
                        }
                    }
                    at += b.len();
                }
                out
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix().len()
    }
}

fn named_matrix(letter: char, rank: usize) -> Vec<Vec<usize>> {
    let mut m = vec![vec![2; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut bond = |i: usize, j: usize, v: usize| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match letter {
        'A' => (1..rank).for_each(|i| bond(i - 1, i, 3)),
        'B' | 'C' => {
            (1..rank).for_each(|i| bond(i - 1, i, 3));
            bond(rank - 2, rank - 1, 4);
        }
        'D' => {
            (1..rank - 1).for_each(|i| bond(i - 1, i, 3));
            bond(rank - 3, rank - 1, 3);
        }
        'E' => {
            // 1-3-4-5-..., with 2 attached to 4.
            bond(0, 2, 3);
            (3..rank).for_each(|i| bond(i - 1, i, 3));
            bond(1, 3, 3);
        }
        'F' => {
            bond(0, 1, 3);
            bond(1, 2, 4);
            bond(2, 3, 3);
        }
        'H' => {
            bond(0, 1, 5);
            (2..rank).for_each(|i| bond(i - 1, i, 3));
        }
        _ => {}
    }
    m
}

/// Connected components of the Coxeter graph (edges where `m ≥ 3`), each sorted.
pub fn irreducible_components(m: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for w in 0..n {
                if !seen[w] && m[v][w] >= 3 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Subset of generators as a bitmask; generator `i` is reported as `i + 1`.
pub fn subset_label(mask: usize, rank: usize) -> String {
    let members: Vec<String> = (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("v{{{}}}", members.join(","))
}

/// Vertices `v_J` for every `J ⊆ S` (indexed by bitmask) and an arrow `v_J -> v_K`
/// whenever `J`, `K` are incomparable and `m_jk ≥ 3` for all `j ∈ J\K`, `k ∈ K\J`.
pub fn hecke_quiver(spec: &CoxeterSpec) -> Quiver {
    let m = spec.matrix();
    let n = m.len();
    let size = 1usize << n;
    let members = |mask: usize| (0..n).filter(move |i| mask >> i & 1 == 1);
    let mut arrows = Vec::new();
    for j in 0..size {
        for k in 0..size {
            let (only_j, only_k) = (j & !k, k & !j);
            if only_j == 0 || only_k == 0 {
                continue;
            }
            if members(only_j).all(|a| members(only_k).all(|b| m[a][b] >= 3)) {
                arrows.push(Arrow { name: format!("x{j}_{k}"), source: j, target: k });
            }
        }
    }
    let vertices = (0..size).map(|mask| subset_label(mask, n)).collect();
    Quiver::new(vertices, arrows).expect("well-formed")
}

/// Vertex set of `Q_W` as subsets, in bitmask order.
pub fn subsets(rank: usize) -> Vec<BTreeSet<usize>> {
    (0..1usize << rank).map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label_set(q: &Quiver) -> BTreeSet<(String, String)> {
        q.arrows().iter().map(|a| (q.vertices()[a.source].clone(), q.vertices()[a.target].clone())).collect()
    }

    #[test]
    fn parses_types() {
        assert_eq!(CoxeterSpec::parse("A3").unwrap(), CoxeterSpec::Named { letter: 'A', rank: 3 });
        assert_eq!(CoxeterSpec::parse("I2(7)").unwrap(), CoxeterSpec::Dihedral { m: 7 });
        assert_eq!(
            CoxeterSpec::parse("A1xA2").unwrap(),
            CoxeterSpec::Product(vec![
                CoxeterSpec::Named { letter: 'A', rank: 1 },
                CoxeterSpec::Named { letter: 'A', rank: 2 }
            ])
        );
        assert!(CoxeterSpec::parse("D3").is_err());
        assert!(CoxeterSpec::parse("Q2").is_err());
        assert!(CoxeterSpec::parse("I2(x)").is_err());
        assert!(CoxeterSpec::parse_matrix("1 3\n3 1\n").is_ok());
        assert!(CoxeterSpec::parse_matrix("1 3\n2 1\n").is_err());
        assert!(CoxeterSpec::parse_matrix("2 3\n3 2\n").is_err());
    }

    #[test]
    fn named_matrices_are_coxeter_matrices() {
        for s in ["A1", "A4", "B3", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)"] {
            let spec = CoxeterSpec::parse(s).unwrap();
            CoxeterSpec::Matrix(spec.matrix()).validate().unwrap();
            assert_eq!(irreducible_components(&spec.matrix()).len(), 1, "{s}");
        }
        let p = CoxeterSpec::parse("A2xA1xI2(5)").unwrap();
        assert_eq!(irreducible_components(&p.matrix()), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn quiver_of_rank_one_and_two() {
        let q = hecke_quiver(&CoxeterSpec::parse("A1").unwrap());
        assert_eq!((q.vertex_count(), q.arrow_count()), (2, 0));
        let q = hecke_quiver(&CoxeterSpec::parse("A2").unwrap());
        assert_eq!(q.vertex_count(), 4);
        let expected: BTreeSet<(String, String)> =
            [("v{1}", "v{2}"), ("v{2}", "v{1}")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(label_set(&q), expected);
    }

    #[test]
    fn quiver_of_a3_has_three_components() {
        let q = hecke_quiver(&CoxeterSpec::parse("A3").unwrap());
        assert_eq!((q.vertex_count(), q.arrow_count()), (8, 10));
        let nontrivial: Vec<Vec<usize>> = q.components().into_iter().filter(|c| c.len() > 1).collect();
        assert_eq!(nontrivial.len(), 1);
        // Two isolated vertices and one six-vertex component.
        assert_eq!(q.components().len(), 3);
    }
}
