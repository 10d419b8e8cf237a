//! Rooted labelings of trees: breadth-first, consecutive labels, root `1`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::graph::LabeledGraph;
use crate::error::{Error, Result};

/// Witness that a tree carries a rooted labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedLabelingCertificate {
    /// `parent[v - 2]` is the parent of vertex `v` for `v = 2..=n`.
    parent: Vec<usize>,
}

impl RootedLabelingCertificate {
    pub fn root(&self) -> usize {
        1
    }

    /// The unique smaller-labeled neighbor of `v >= 2`.
    pub fn parent(&self, v: usize) -> Option<usize> {
        v.checked_sub(2).and_then(|i| self.parent.get(i)).copied()
    }

    pub fn parents(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().map(|(i, &p)| (i + 2, p))
    }

    /// Neighbors of `v` with larger labels.
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.parents().filter(|&(_, p)| p == v).map(|(c, _)| c).collect()
    }
}

/// Checks the declarative form of a rooted labeling: every `v >= 2` has
/// exactly one smaller neighbor, and these parents are non-decreasing in `v`.
pub fn is_rooted_labeling(t: &LabeledGraph) -> Result<Option<RootedLabelingCertificate>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = t.adjacency();
    let mut parent = Vec::with_capacity(t.n().saturating_sub(1));
    for (v, nbrs) in adj.iter().enumerate().skip(2) {
        let smaller: Vec<usize> = nbrs.iter().copied().filter(|&w| w < v).collect();
        if smaller.len() != 1 {
            return Ok(None);
        }
        if parent.last().is_some_and(|&p| p > smaller[0]) {
            return Ok(None);
        }
        parent.push(smaller[0]);
    }
    Ok(Some(RootedLabelingCertificate { parent }))
}

/// Every rooted labeling of the tree `t` (whose own labels are ignored),
/// deduplicated as labeled graphs and sorted.
///
/// For each choice of root, vertices are processed in label order; each one
/// hands the next consecutive labels to its unlabeled neighbors, branching
/// over every order of those neighbors.
pub fn enumerate_rooted_labelings(t: &LabeledGraph) -> Result<Vec<LabeledGraph>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = t.adjacency();
    let mut found = BTreeSet::new();
    for root in 1..=t.n() {
        let mut label = vec![0usize; t.n() + 1];
        label[root] = 1;
        let mut by_label = vec![root];
        expand(t, &adj, 0, &mut label, &mut by_label, &mut found)?;
    }
    Ok(found.into_iter().collect())
}

fn expand(
    t: &LabeledGraph,
    adj: &[Vec<usize>],
    cursor: usize,
    label: &mut Vec<usize>,
    by_label: &mut Vec<usize>,
    found: &mut BTreeSet<LabeledGraph>,
) -> Result<()> {
    if cursor == by_label.len() {
        debug_assert_eq!(by_label.len(), t.n());
        let g = LabeledGraph::new(t.n(), t.edges().map(|(a, b)| (label[a], label[b])))?;
        found.insert(g);
        return Ok(());
    }
    let v = by_label[cursor];
    let fresh: Vec<usize> = adj[v].iter().copied().filter(|&w| label[w] == 0).collect();
    for order in permutations(&fresh) {
        for &w in &order {
            by_label.push(w);
            label[w] = by_label.len();
        }
        expand(t, adj, cursor + 1, label, by_label, found)?;
        for &w in &order {
            label[w] = 0;
        }
        by_label.truncate(by_label.len() - order.len());
    }
    Ok(())
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
