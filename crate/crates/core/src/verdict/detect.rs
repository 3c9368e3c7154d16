//! Obstruction detectors: forbidden full subquivers and hereditary quotients of non-Dynkin type.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{quotient, BoundQuiverAlgebra, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{definiteness, q, Definiteness, Matrix, Q};

/// The two quivers whose every bound quiver algebra is τ-tilting infinite.
///
/// Both are doubled graphs: each edge carries one arrow in each direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeltaPattern {
    /// Doubled square.
    Delta1,
    /// Doubled "H": two adjacent branch vertices, each with two further neighbours.
    Delta2,
}

impl DeltaPattern {
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            DeltaPattern::Delta1 => &[(0, 1), (0, 2), (1, 3), (2, 3)],
            DeltaPattern::Delta2 => &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)],
        }
    }

    pub fn size(self) -> usize {
        match self {
            DeltaPattern::Delta1 => 4,
            DeltaPattern::Delta2 => 6,
        }
    }
}

impl fmt::Display for DeltaPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeltaPattern::Delta1 => "Delta1",
            DeltaPattern::Delta2 => "Delta2",
        })
    }
}

/// Whether the full subquiver on `verts` (in pattern order) is exactly `pattern`.
pub fn matches_pattern(quiver: &Quiver, verts: &[usize], pattern: DeltaPattern) -> bool {
    if verts.len() != pattern.size() || verts.iter().collect::<BTreeSet<_>>().len() != verts.len() {
        return false;
    }
    let counts = quiver.arrow_counts();
    let adjacent = |i: usize, j: usize| pattern.edges().iter().any(|&(x, y)| (x, y) == (i, j) || (y, x) == (i, j));
    (0..verts.len()).all(|i| {
        (0..verts.len()).all(|j| {
            let want = usize::from(i != j && adjacent(i, j));
            counts[verts[i]][verts[j]] == want
        })
    })
}

/// Searches for a full subquiver isomorphic to `pattern`; returns its vertices in pattern order.
pub fn find_pattern(quiver: &Quiver, pattern: DeltaPattern) -> Option<Vec<usize>> {
    let n = quiver.vertex_count();
    let counts = quiver.arrow_counts();
    // Candidate vertices: no loops; doubled neighbours are the only admissible pattern edges.
    let doubled: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| w != v && counts[v][w] == 1 && counts[w][v] == 1).collect())
        .collect();
    let usable: Vec<bool> = (0..n).map(|v| counts[v][v] == 0).collect();
    let k = pattern.size();
    let mut adj = vec![vec![false; k]; k];
    for &(x, y) in pattern.edges() {
        adj[x][y] = true;
        adj[y][x] = true;
    }
    let fits = |assigned: &[usize], w: usize| {
        let i = assigned.len();
        usable[w]
            && !assigned.contains(&w)
            && assigned.iter().enumerate().all(|(j, &u)| {
                if adj[i][j] {
                    counts[u][w] == 1 && counts[w][u] == 1
                } else {
                    counts[u][w] == 0 && counts[w][u] == 0
                }
            })
    };
    fn extend(
        assigned: &mut Vec<usize>,
        k: usize,
        n: usize,
        adj: &[Vec<bool>],
        doubled: &[Vec<usize>],
        fits: &dyn Fn(&[usize], usize) -> bool,
    ) -> bool {
        let i = assigned.len();
        if i == k {
            return true;
        }
        // Pattern vertices are ordered so that each one after the first touches an earlier one.
        let candidates: Vec<usize> = match (0..i).find(|&j| adj[i][j]) {
            Some(j) => doubled[assigned[j]].clone(),
            None => (0..n).collect(),
        };
        for w in candidates {
            if fits(assigned, w) {
                assigned.push(w);
                if extend(assigned, k, n, adj, doubled, fits) {
                    return true;
                }
                assigned.pop();
            }
        }
        false
    }
    let mut assigned = Vec::with_capacity(k);
    extend(&mut assigned, k, n, &adj, &doubled, &fits).then_some(assigned)
}

/// A Dynkin or Euclidean type, e.g. `A3`, `~D4`, `~E8`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphType {
    pub letter: char,
    pub rank: usize,
    pub affine: bool,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.affine {
            f.write_str("~")?;
        }
        write!(f, "{}{}", self.letter, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphClass {
    Dynkin(GraphType),
    Euclidean(GraphType),
    Wild,
}

impl GraphClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, GraphClass::Dynkin(_))
    }
}

/// Classifies a connected multigraph given by its symmetric edge-count matrix (`m[i][i]` counts loops).
pub fn dynkin_classify(edges: &[Vec<usize>]) -> Result<GraphClass> {
    let n = edges.len();
    if n == 0 || !is_connected(edges) {
        return Err(Error::Disconnected);
    }
    let mut form = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let e = edges[i][j] as i64;
            let v = if i == j { q(2) - q(2 * e) } else { -q(e) };
            form.set(i, j, v);
        }
    }
    let shape = Shape::of(edges);
    Ok(match definiteness(&form)? {
        Definiteness::PositiveDefinite => GraphClass::Dynkin(shape.dynkin(n)),
        Definiteness::PositiveSemidefinite { .. } => GraphClass::Euclidean(shape.euclidean(n)),
        Definiteness::Indefinite => GraphClass::Wild,
    })
}

fn is_connected(edges: &[Vec<usize>]) -> bool {
    let n = edges.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if !seen[w] && (edges[v][w] > 0 || edges[w][v] > 0) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Coarse shape data used to name a graph already known to be Dynkin or Euclidean.
struct Shape {
    simple_tree: bool,
    branch_degrees: Vec<usize>,
    arms: Vec<usize>,
}

impl Shape {
    fn of(edges: &[Vec<usize>]) -> Self {
        let n = edges.len();
        let edge_total: usize = (0..n).map(|i| edges[i][i] + (i + 1..n).map(|j| edges[i][j]).sum::<usize>()).sum();
        let simple = (0..n).all(|i| edges[i][i] == 0 && (0..n).all(|j| edges[i][j] <= 1));
        let simple_tree = simple && edge_total + 1 == n;
        let degree = |v: usize| (0..n).filter(|&w| w != v).map(|w| edges[v][w]).sum::<usize>();
        let branches: Vec<usize> = (0..n).filter(|&v| degree(v) >= 3).collect();
        let mut arms = Vec::new();
        if simple_tree && branches.len() == 1 {
            let b = branches[0];
            for start in (0..n).filter(|&w| edges[b][w] == 1) {
                let (mut prev, mut cur, mut len) = (b, start, 1);
                loop {
                    let next: Vec<usize> = (0..n).filter(|&w| w != prev && w != cur && edges[cur][w] == 1).collect();
                    match next.as_slice() {
                        [w] => {
                            prev = cur;
                            cur = *w;
                            len += 1;
                        }
                        _ => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
        }
        Shape { simple_tree, branch_degrees: branches.iter().map(|&v| degree(v)).collect(), arms }
    }

    fn dynkin(&self, n: usize) -> GraphType {
        let letter = match self.arms.as_slice() {
            [1, 1, _] => 'D',
            [1, 2, 2..=4] => 'E',
            _ => 'A',
        };
        GraphType { letter, rank: n, affine: false }
    }

    fn euclidean(&self, n: usize) -> GraphType {
        let letter = if !self.simple_tree {
            'A'
        } else {
            match (self.arms.as_slice(), self.branch_degrees.as_slice()) {
                ([2, 2, 2], _) | ([1, 3, 3], _) | ([1, 2, 5], _) => 'E',
                _ => 'D',
            }
        };
        GraphType { letter, rank: n - 1, affine: true }
    }
}

/// Underlying undirected edge counts of a quiver.
pub fn underlying_graph(quiver: &Quiver) -> Vec<Vec<usize>> {
    let n = quiver.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for a in quiver.arrows() {
        if a.source == a.target {
            m[a.source][a.source] += 1;
        } else {
            m[a.source][a.target] += 1;
            m[a.target][a.source] += 1;
        }
    }
    m
}

/// A hereditary factor algebra of non-Dynkin type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditaryQuotient {
    pub kill_vertices: Vec<usize>,
    pub kill_arrows: Vec<usize>,
    pub class: GraphClass,
}

/// Checks the quotient by the given vertices and arrows: it must be a connected
/// path algebra of an acyclic non-Dynkin quiver.
pub fn check_hereditary_quotient(
    a: &BoundQuiverAlgebra,
    kill_vertices: &[usize],
    kill_arrows: &[usize],
) -> Result<GraphClass> {
    let b = quotient(a, kill_vertices, kill_arrows)?;
    let quiver = b.quiver();
    let paths = quiver.path_count().ok_or_else(|| Error::CertificateRejected("quotient quiver has a cycle".into()))?;
    if paths != b.dim() {
        return Err(Error::CertificateRejected(format!("quotient has dimension {} but {paths} paths", b.dim())));
    }
    if *quiver != b.gabriel_quiver() {
        return Err(Error::CertificateRejected("quotient quiver is not its Gabriel quiver".into()));
    }
    let class = dynkin_classify(&underlying_graph(quiver))?;
    if class.is_dynkin() {
        return Err(Error::CertificateRejected("quotient is of Dynkin type".into()));
    }
    Ok(class)
}

/// Number of candidate configurations examined before the search gives up.
const SEARCH_BUDGET: usize = 2_000_000;

/// Searches connected vertex sets of size at most `max_keep` and arrow sets of
/// size at most `max_kill` inside them, smallest first.
pub fn detect_hereditary_quotient(a: &BoundQuiverAlgebra, max_keep: usize, max_kill: usize) -> Option<HereditaryQuotient> {
    let quiver = a.quiver();
    let n = quiver.vertex_count();
    let graph = underlying_graph(quiver);
    let mut budget = SEARCH_BUDGET;
    let mut level: Vec<Vec<usize>> = Vec::new();
    for size in 1..=max_keep.min(n) {
        level = if size == 1 { (0..n).map(|v| vec![v]).collect() } else { grow_connected(&graph, &level) };
        for keep in &level {
            let keep = keep.as_slice();
            let inside: Vec<usize> = (0..quiver.arrow_count())
                .filter(|&x| keep.contains(&quiver.arrow(x).source) && keep.contains(&quiver.arrow(x).target))
                .collect();
            if inside.len() + 1 < size {
                continue;
            }
            for kills in 0..=max_kill.min(inside.len()) {
                if inside.len() - kills + 1 < size {
                    break;
                }
                let mut found = None;
                for_each_combination(inside.len(), kills, &mut |chosen| {
                    if budget == 0 {
                        return false;
                    }
                    budget -= 1;
                    let dead: Vec<usize> = chosen.iter().map(|&c| inside[c]).collect();
                    if survives(a, keep, &inside, &dead) {
                        let kill_vertices: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
                        if let Ok(class) = check_hereditary_quotient(a, &kill_vertices, &dead) {
                            found = Some(HereditaryQuotient { kill_vertices, kill_arrows: dead, class });
                            return false;
                        }
                    }
                    true
                });
                if found.is_some() {
                    return found;
                }
                if budget == 0 {
                    return None;
                }
            }
        }
    }
    None
}

/// Cheap necessary conditions: acyclic, connected, non-Dynkin surviving quiver, every relation killed.
fn survives(a: &BoundQuiverAlgebra, keep: &[usize], inside: &[usize], dead: &[usize]) -> bool {
    let quiver = a.quiver();
    let alive: Vec<usize> = inside.iter().copied().filter(|x| !dead.contains(x)).collect();
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let k = keep.len();
    let mut graph = vec![vec![0; k]; k];
    let mut out = vec![Vec::new(); k];
    for &x in &alive {
        let (s, t) = (pos[&quiver.arrow(x).source], pos[&quiver.arrow(x).target]);
        if s == t {
            return false;
        }
        graph[s][t] += 1;
        graph[t][s] += 1;
        out[s].push(t);
    }
    if has_cycle(&out) || !is_connected(&graph) {
        return false;
    }
    if !matches!(dynkin_classify(&graph), Ok(GraphClass::Euclidean(_) | GraphClass::Wild)) {
        return false;
    }
    a.relations().iter().all(|r| {
        let mut surviving: BTreeMap<&Vec<usize>, Q> = BTreeMap::new();
        for (c, p) in &r.terms {
            if p.iter().all(|x| alive.contains(x)) {
                *surviving.entry(p).or_insert_with(Q::zero) += c;
            }
        }
        surviving.values().all(Zero::is_zero)
    })
}

fn has_cycle(out: &[Vec<usize>]) -> bool {
    let n = out.len();
    let mut indeg = vec![0; n];
    for targets in out {
        for &t in targets {
            indeg[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &t in &out[v] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    seen < n
}

/// Connected vertex sets one larger than those in `level`, each sorted.
fn grow_connected(graph: &[Vec<usize>], level: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = graph.len();
    let mut next = BTreeSet::new();
    for set in level {
        for w in 0..n {
            if !set.contains(&w) && set.iter().any(|&v| graph[v][w] > 0) {
                let mut s = set.clone();
                s.push(w);
                s.sort_unstable();
                next.insert(s);
            }
        }
        if next.len() > LEVEL_LIMIT {
            break;
        }
    }
    next.into_iter().collect()
}

/// Connected vertex sets kept per size during the quotient search.
const LEVEL_LIMIT: usize = 200_000;

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it returns false.
fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};

    fn chain(n: usize) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; n]; n];
        for i in 1..n {
            m[i - 1][i] = 1;
            m[i][i - 1] = 1;
        }
        m
    }

    fn ty(letter: char, rank: usize, affine: bool) -> GraphType {
        GraphType { letter, rank, affine }
    }

    #[test]
    fn classifies_small_graphs() {
        assert_eq!(dynkin_classify(&chain(4)).unwrap(), GraphClass::Dynkin(ty('A', 4, false)));
        let mut star = vec![vec![0; 5]; 5];
        for v in 1..5 {
            star[0][v] = 1;
            star[v][0] = 1;
        }
        assert_eq!(dynkin_classify(&star).unwrap(), GraphClass::Euclidean(ty('D', 4, true)));
        assert_eq!(dynkin_classify(&[vec![0, 2], vec![2, 0]]).unwrap(), GraphClass::Euclidean(ty('A', 1, true)));
        assert_eq!(dynkin_classify(&[vec![0, 3], vec![3, 0]]).unwrap(), GraphClass::Wild);
        assert_eq!(dynkin_classify(&[vec![0, 0], vec![0, 0]]), Err(Error::Disconnected));
    }

    #[test]
    fn names_exceptional_types() {
        // Star with arms (a, b, c) counted in edges from the centre.
        fn star(arms: &[usize]) -> Vec<Vec<usize>> {
            let n = 1 + arms.iter().sum::<usize>();
            let mut m = vec![vec![0; n]; n];
            let mut next = 1;
            for &len in arms {
                let mut prev = 0;
                for _ in 0..len {
                    m[prev][next] = 1;
                    m[next][prev] = 1;
                    prev = next;
                    next += 1;
                }
            }
            m
        }
        assert_eq!(dynkin_classify(&star(&[1, 2, 2])).unwrap(), GraphClass::Dynkin(ty('E', 6, false)));
        assert_eq!(dynkin_classify(&star(&[1, 2, 4])).unwrap(), GraphClass::Dynkin(ty('E', 8, false)));
        assert_eq!(dynkin_classify(&star(&[1, 1, 3])).unwrap(), GraphClass::Dynkin(ty('D', 6, false)));
        assert_eq!(dynkin_classify(&star(&[2, 2, 2])).unwrap(), GraphClass::Euclidean(ty('E', 6, true)));
        assert_eq!(dynkin_classify(&star(&[1, 3, 3])).unwrap(), GraphClass::Euclidean(ty('E', 7, true)));
        assert_eq!(dynkin_classify(&star(&[1, 2, 5])).unwrap(), GraphClass::Euclidean(ty('E', 8, true)));
        assert_eq!(dynkin_classify(&star(&[1, 2, 6])).unwrap(), GraphClass::Wild);
        let mut cycle = chain(4);
        cycle[0][3] = 1;
        cycle[3][0] = 1;
        assert_eq!(dynkin_classify(&cycle).unwrap(), GraphClass::Euclidean(ty('A', 3, true)));
    }

    #[test]
    fn finds_the_doubled_square() {
        let q = Quiver::from_names(
            &["a", "b", "c", "d", "e"],
            &[
                ("x1", "a", "b"),
                ("y1", "b", "a"),
                ("x2", "b", "d"),
                ("y2", "d", "b"),
                ("x3", "d", "c"),
                ("y3", "c", "d"),
                ("x4", "c", "a"),
                ("y4", "a", "c"),
                ("z", "e", "a"),
            ],
        )
        .unwrap();
        let found = find_pattern(&q, DeltaPattern::Delta1).unwrap();
        assert!(matches_pattern(&q, &found, DeltaPattern::Delta1));
        assert_eq!(found.iter().copied().collect::<BTreeSet<_>>(), BTreeSet::from([0, 1, 2, 3]));
        assert!(find_pattern(&q, DeltaPattern::Delta2).is_none());
    }

    #[test]
    fn diagonal_spoils_the_square() {
        let q = Quiver::from_names(
            &["a", "b", "c", "d"],
            &[
                ("x1", "a", "b"),
                ("y1", "b", "a"),
                ("x2", "b", "d"),
                ("y2", "d", "b"),
                ("x3", "d", "c"),
                ("y3", "c", "d"),
                ("x4", "c", "a"),
                ("y4", "a", "c"),
                ("z", "a", "d"),
            ],
        )
        .unwrap();
        assert!(find_pattern(&q, DeltaPattern::Delta1).is_none());
    }

    #[test]
    fn kronecker_quotient_of_t11() {
        let a = build_family(FamilySpec::Tpq { p: 1, q: 1 }).unwrap();
        let h = detect_hereditary_quotient(&a, 6, 6).unwrap();
        assert_eq!(h.class, GraphClass::Euclidean(ty('A', 1, true)));
        assert_eq!(check_hereditary_quotient(&a, &h.kill_vertices, &h.kill_arrows).unwrap(), h.class);
    }

    #[test]
    fn finite_local_algebra_has_no_quotient() {
        let a = build_family(FamilySpec::Apq { p: 1, q: 1 }).unwrap();
        assert!(detect_hereditary_quotient(&a, 6, 6).is_none());
    }
}
