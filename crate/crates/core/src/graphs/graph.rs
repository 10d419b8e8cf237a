use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple graph on the vertex labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    /// Edges are unordered; `(j, i)` and `(i, j)` are the same edge and
    /// giving both is an error.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a},{b}}}")));
            }
        }
        Ok(LabeledGraph { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adds an edge; fails on loops, duplicates or out-of-range labels.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        Self::new(self.n, self.edges().chain([(a, b)]))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// `adj[v]` lists the neighbors of `v`; index 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// A tree with maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The graph with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length differs from n".into()));
        }
        Self::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])))
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, (a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rules() {
        assert!(LabeledGraph::new(3, [(1, 1)]).is_err());
        assert!(LabeledGraph::new(3, [(1, 4)]).is_err());
        assert!(LabeledGraph::new(3, [(1, 2), (2, 1)]).is_err());
        let g = LabeledGraph::new(3, [(2, 1), (3, 2)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert!(g.is_tree() && g.is_path() && g.is_connected());
        assert_eq!(g.leaves(), vec![1, 3]);
        assert!(!LabeledGraph::new(4, [(1, 2), (3, 4)]).unwrap().is_connected());
    }
}
