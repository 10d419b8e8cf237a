//! Labeled trees from Prüfer sequences and isomorphism classes of trees.

use std::collections::BTreeMap;

use super::graph::LabeledGraph;
use crate::error::{Error, Result};

/// Decodes a Prüfer sequence (labels `1..=n`, length `n - 2`) into a tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<LabeledGraph> {
    if n < 2 || seq.len() + 2 != n || seq.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidGraph(format!("not a Prüfer sequence for n = {n}")));
    }
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (1..=n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    LabeledGraph::new(n, edges)
}

/// All `n^(n-2)` labeled trees on `1..=n`, in Prüfer-sequence order.
pub fn all_labeled_trees(n: usize) -> Result<Vec<LabeledGraph>> {
    if n < 2 {
        return Err(Error::OutOfRange("trees need n >= 2".into()));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![1usize; len];
    for _ in 0..total {
        out.push(prufer_decode(&seq, n)?);
        for digit in seq.iter_mut().rev() {
            if *digit < n {
                *digit += 1;
                break;
            }
            *digit = 1;
        }
    }
    Ok(out)
}

/// Canonical string of a tree up to isomorphism: the AHU encoding rooted at
/// the center, minimized over the two centers when there are two.
pub fn canonical_form(t: &LabeledGraph) -> Result<String> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = t.adjacency();
    centers(t, &adj)
        .into_iter()
        .map(|c| encode(&adj, c, 0))
        .min()
        .ok_or(Error::NotATree)
}

fn centers(t: &LabeledGraph, adj: &[Vec<usize>]) -> Vec<usize> {
    if t.n() == 1 {
        return vec![1];
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (1..=t.n()).filter(|&v| degree[v] == 1).collect();
    let mut remaining = t.n();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical form.
pub fn tree_isomorphism_classes(n: usize) -> Result<Vec<LabeledGraph>> {
    let mut classes: BTreeMap<String, LabeledGraph> = BTreeMap::new();
    for t in all_labeled_trees(n)? {
        let key = canonical_form(&t)?;
        classes.entry(key).or_insert(t);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::standard;

    #[test]
    fn prufer_counts() {
        assert_eq!(all_labeled_trees(4).unwrap().len(), 16);
        assert!(all_labeled_trees(5).unwrap().iter().all(LabeledGraph::is_tree));
        let star = prufer_decode(&[1, 1], 4).unwrap();
        assert_eq!(star.degree(1), 3);
        assert!(prufer_decode(&[5], 3).is_err());
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (2..=7).map(|n| tree_isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = standard::t1(6).unwrap();
        let b = standard::path(6).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(
            canonical_form(&b).unwrap(),
            canonical_form(&prufer_decode(&[1, 1, 1, 1], 6).unwrap()).unwrap()
        );
    }
}
