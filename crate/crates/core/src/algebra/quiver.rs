use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Loops and parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut seen = BTreeSet::new();
        for a in &arrows {
            if !seen.insert(&a.name) {
                return Err(Error::MalformedQuiver(format!("duplicate arrow {}", a.name)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::MalformedQuiver(format!("arrow {} has an undeclared endpoint", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from vertex labels and `(name, from, to)` triples.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex {v}")));
        let arrows = arrows
            .iter()
            .map(|(n, s, t)| Ok(Arrow { name: n.to_string(), source: lookup(s)?, target: lookup(t)? }))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices.iter().map(|v| v.to_string()).collect(), arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// `counts[i][j]` = number of arrows i → j.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for a in &self.arrows {
            c[a.source][a.target] += 1;
        }
        c
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    /// Full subquiver on `keep` (in the given order).
    pub fn full_subquiver(&self, keep: &[usize]) -> Quiver {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow { name: a.name.clone(), source: *pos.get(&a.source)?, target: *pos.get(&a.target)? })
            })
            .collect();
        Quiver { vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(), arrows }
    }

    pub fn without_arrows(&self, kill: &BTreeSet<usize>) -> Quiver {
        let arrows = self.arrows.iter().enumerate().filter(|(i, _)| !kill.contains(i)).map(|(_, a)| a.clone()).collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_oriented_cycle(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        seen < n
    }

    /// Number of paths (including trivial ones) in an acyclic quiver.
    pub fn path_count(&self) -> Option<usize> {
        if self.has_oriented_cycle() {
            return None;
        }
        let n = self.vertex_count();
        // from[v] = number of paths starting at v
        let mut memo = vec![None; n];
        fn count(q: &Quiver, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(c) = memo[v] {
                return c;
            }
            let targets: Vec<usize> = q.arrows.iter().filter(|a| a.source == v).map(|a| a.target).collect();
            let c = 1 + targets.into_iter().map(|t| count(q, t, memo)).sum::<usize>();
            memo[v] = Some(c);
            c
        }
        Some((0..n).map(|v| count(self, v, &mut memo)).sum())
    }

    /// Checks that `arrows` compose left to right and returns the endpoints.
    pub fn path_endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut at = first.target;
        for &a in &arrows[1..] {
            let a = self.arrows.get(a)?;
            if a.source != at {
                return None;
            }
            at = a.target;
        }
        Some((first.source, at))
    }
}

/// A path in a quiver. The trivial path at `v` has no arrows and `source == target == v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("e_{}", q.vertices()[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Q, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    /// Relation from `(coefficient, arrow names)` terms.
    pub fn from_names(q: &Quiver, terms: &[(Q, Vec<&str>)]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|(c, names)| {
                let path = names
                    .iter()
                    .map(|n| q.arrow_index(n).ok_or_else(|| Error::MalformedRelation(format!("unknown arrow {n}"))))
                    .collect::<Result<Vec<_>>>()?;
                Ok((c.clone(), path))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Relation { terms })
    }

    /// Drops zero terms and merges repeated paths.
    pub fn normalized(&self) -> Relation {
        let mut merged: Vec<(Q, Vec<usize>)> = Vec::new();
        for (c, p) in &self.terms {
            match merged.iter_mut().find(|(_, q)| q == p) {
                Some((d, _)) => *d += c,
                None => merged.push((c.clone(), p.clone())),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Relation { terms: merged }
    }

    /// Checks the admissibility shape and returns `(source, target, shortest term length)`.
    pub fn validate(&self, q: &Quiver) -> Result<Option<(usize, usize, usize)>> {
        let r = self.normalized();
        let mut ends = None;
        let mut min_len = usize::MAX;
        for (_, p) in &r.terms {
            if p.len() < 2 {
                return Err(Error::MalformedRelation("every term needs length at least two".into()));
            }
            let e = q
                .path_endpoints(p)
                .ok_or_else(|| Error::MalformedRelation("term is not a path".into()))?;
            match ends {
                None => ends = Some(e),
                Some(f) if f != e => return Err(Error::MalformedRelation("terms are not parallel".into())),
                _ => {}
            }
            min_len = min_len.min(p.len());
        }
        Ok(ends.map(|(s, t)| (s, t, min_len)))
    }

    pub fn describe(&self, q: &Quiver) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("({c}){}", p.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
