use serde::Serialize;

use super::graph::LabeledGraph;

/// Which of the labeled graph classes a graph falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct LabelClass {
    /// Contains every edge `{i, i+1}` and the edge `{1, n}`.
    pub labeled_hamiltonian: bool,
    /// Contains every edge `{i, i+1}` but not `{1, n}`.
    pub labeled_semi_hamiltonian: bool,
    pub closed_labeling: bool,
    pub tree: bool,
    pub path: bool,
    pub connected: bool,
}

fn contains_standard_path(g: &LabeledGraph) -> bool {
    (1..g.n()).all(|i| g.has_edge(i, i + 1))
}

pub fn classify_labeling(g: &LabeledGraph) -> LabelClass {
    let spine = contains_standard_path(g);
    let closing = g.n() >= 2 && g.has_edge(1, g.n());
    LabelClass {
        labeled_hamiltonian: spine && closing,
        labeled_semi_hamiltonian: spine && !closing,
        closed_labeling: is_closed_labeling(g),
        tree: g.is_tree(),
        path: g.is_path(),
        connected: g.is_connected(),
    }
}

/// All maximal cliques, each as a sorted vertex list; Bron-Kerbosch with
/// pivoting over bitsets.
pub fn maximal_cliques(g: &LabeledGraph) -> Vec<Vec<usize>> {
    assert!(g.n() < 64, "clique enumeration supports n < 64");
    let mut nbr = vec![0u64; g.n() + 1];
    for (a, b) in g.edges() {
        nbr[a] |= 1 << b;
        nbr[b] |= 1 << a;
    }
    let all: u64 = (1..=g.n()).fold(0, |m, v| m | (1 << v));
    let mut out = Vec::new();
    bron_kerbosch(0, all, 0, &nbr, &mut out);
    let mut cliques: Vec<Vec<usize>> = out
        .into_iter()
        .map(|mask| (1..=g.n()).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    cliques.sort();
    cliques
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, nbr: &[u64], out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot: the vertex of P ∪ X with most neighbors in P
    let pivot = bits(p | x)
        .max_by_key(|&u| (nbr[u] & p).count_ones())
        .expect("P ∪ X is nonempty");
    for v in bits(p & !nbr[pivot]) {
        bron_kerbosch(r | 1 << v, p & nbr[v], x & nbr[v], nbr, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// Every maximal clique is an interval of consecutive labels.
pub fn is_closed_labeling(g: &LabeledGraph) -> bool {
    maximal_cliques(g)
        .iter()
        .all(|c| c.last().unwrap() - c.first().unwrap() + 1 == c.len())
}
