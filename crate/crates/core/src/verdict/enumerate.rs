//! Breadth-first enumeration of two-term silting complexes under mutation.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::tau_rigid_check;
use crate::silting::{is_presilting, mutate, pair_of, Direction, SiltingComplex};

/// Sorted g-vectors of the summands.
pub type NodeKey = Vec<Vec<i64>>;

/// Agreement of the complex-level and module-level rigidity tests over the visited nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualStack {
    pub checked: usize,
    pub mismatches: usize,
}

/// The explored part of the exchange graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeGraph {
    pub vertices: usize,
    /// Node keys in increasing order.
    pub nodes: Vec<NodeKey>,
    /// `(upper, lower)`: the lower node is a left mutation of the upper one.
    pub edges: Vec<(usize, usize)>,
    /// False when the cap stopped the search.
    pub complete: bool,
    pub dual_stack: Option<DualStack>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub cap: usize,
    /// Run both rigidity tests on every node.
    pub validate: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { cap: super::DEFAULT_ENUMERATION_CAP, validate: false }
    }
}

/// Explores the exchange graph from `A` in degree 0, stopping once more than `cap` nodes are known.
pub fn exchange_graph(a: &BoundQuiverAlgebra, opts: EnumerationOptions) -> Result<ExchangeGraph> {
    if !a.field().is_rational() {
        return Err(Error::CharPUnsupported);
    }
    let n = a.vertex_count();
    let top = SiltingComplex::top(a);
    let mut index: HashMap<NodeKey, usize> = HashMap::from([(top.key(n), 0)]);
    let mut complexes = vec![top];
    let mut edges = BTreeSet::new();
    let mut frontier = vec![0];
    let mut complete = true;
    'bfs: while !frontier.is_empty() {
        let mutations: Vec<Vec<(SiltingComplex, Direction)>> = frontier
            .par_iter()
            .map(|&i| (0..n).map(|k| mutate(a, &complexes[i], k)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (&i, found) in frontier.iter().zip(mutations) {
            for (t, dir) in found {
                let key = t.key(n);
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        if complexes.len() >= opts.cap {
                            complete = false;
                            break 'bfs;
                        }
                        index.insert(key, complexes.len());
                        complexes.push(t);
                        next.push(complexes.len() - 1);
                        complexes.len() - 1
                    }
                };
                edges.insert(match dir {
                    Direction::Left => (i, j),
                    Direction::Right => (j, i),
                });
            }
        }
        frontier = next;
    }
    let dual_stack = opts.validate.then(|| {
        let mismatches = complexes
            .par_iter()
            .filter(|t| {
                let complex_level = is_presilting(a, &t.summands);
                let module_level = pair_of(a, t).map(|(m, p)| tau_rigid_check(a, &m, &p)).unwrap_or(false);
                !(complex_level && module_level)
            })
            .count();
        DualStack { checked: complexes.len(), mismatches }
    });
    let mut order: Vec<usize> = (0..complexes.len()).collect();
    let keys: Vec<NodeKey> = complexes.iter().map(|t| t.key(n)).collect();
    order.sort_by(|&x, &y| keys[x].cmp(&keys[y]));
    let mut rank = vec![0; order.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, l)| (rank[u], rank[l])).collect();
    edges.sort_unstable();
    Ok(ExchangeGraph { vertices: n, nodes: order.into_iter().map(|i| keys[i].clone()).collect(), edges, complete, dual_stack })
}

/// Number of support τ-tilting pairs, or `None` if the cap was reached.
pub fn count(a: &BoundQuiverAlgebra, cap: usize) -> Result<Option<usize>> {
    let g = exchange_graph(a, EnumerationOptions { cap, validate: false })?;
    Ok(g.complete.then_some(g.nodes.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, dual_numbers};

    #[test]
    fn dual_numbers_have_two_nodes() {
        let g = exchange_graph(&dual_numbers(), EnumerationOptions { cap: 100, validate: true }).unwrap();
        assert!(g.complete);
        assert_eq!(g.nodes, vec![vec![vec![-1]], vec![vec![1]]]);
        assert_eq!(g.edges, vec![(1, 0)]);
        assert_eq!(g.dual_stack, Some(DualStack { checked: 2, mismatches: 0 }));
    }

    #[test]
    fn a2_is_a_pentagon() {
        let g = exchange_graph(&a2(), EnumerationOptions { cap: 100, validate: true }).unwrap();
        assert_eq!(g.nodes.len(), 5);
        assert_eq!(g.edges.len(), 5);
        assert_eq!(g.dual_stack.unwrap().mismatches, 0);
    }

    #[test]
    fn cap_stops_the_search() {
        let g = exchange_graph(&a2(), EnumerationOptions { cap: 3, validate: false }).unwrap();
        assert!(!g.complete);
        assert_eq!(g.nodes.len(), 3);
        assert_eq!(count(&a2(), 3).unwrap(), None);
    }
}
