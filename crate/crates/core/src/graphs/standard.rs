//! Standard labeled graphs and named fixtures.

use super::graph::LabeledGraph;
use crate::error::{Error, Result};

fn need(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(Error::OutOfRange(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `L_n`: edges `{i, i+1}`.
pub fn path(n: usize) -> Result<LabeledGraph> {
    need(n, 2, "path")?;
    LabeledGraph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// `C_n`: `L_n` plus `{1, n}`.
pub fn cycle(n: usize) -> Result<LabeledGraph> {
    need(n, 3, "cycle")?;
    path(n)?.with_edge(1, n)
}

pub fn complete(n: usize) -> Result<LabeledGraph> {
    need(n, 2, "complete graph")?;
    LabeledGraph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

/// `K_n` without the edge `{1, n}`.
pub fn complete_minus_edge(n: usize) -> Result<LabeledGraph> {
    need(n, 3, "complete graph minus an edge")?;
    LabeledGraph::new(
        n,
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&e| e != (1, n)),
    )
}

/// `L_n` plus the chord `{t, t+s}`, `s >= 2`.
pub fn path_plus_edge(n: usize, t: usize, s: usize) -> Result<LabeledGraph> {
    if s < 2 || t == 0 || t + s > n {
        return Err(Error::OutOfRange(format!(
            "chord {{{t},{}}} needs 1 <= t, s >= 2, t + s <= n = {n}",
            t + s
        )));
    }
    path(n)?.with_edge(t, t + s)
}

/// The path `2 - 1 - 3 - 4 - ... - n`: rooted at 1 with leaf 2.
pub fn t1(n: usize) -> Result<LabeledGraph> {
    need(n, 3, "T1")?;
    LabeledGraph::new(n, [(1, 2), (1, 3)].into_iter().chain((3..n).map(|i| (i, i + 1))))
}

/// The path `3 - 1 - 2 - 4 - 5 - ... - n`: rooted at 1 with leaf 3.
pub fn t2(n: usize) -> Result<LabeledGraph> {
    need(n, 4, "T2")?;
    LabeledGraph::new(
        n,
        [(1, 2), (1, 3), (2, 4)]
            .into_iter()
            .chain((4..n).map(|i| (i, i + 1))),
    )
}

/// Labeled Hamiltonian graph on five vertices with chord `{2, 4}`.
pub fn figure1() -> LabeledGraph {
    LabeledGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 4)]).expect("valid fixture")
}

/// Labeled semi-Hamiltonian graph on six vertices that is not closed.
pub fn figure2() -> LabeledGraph {
    LabeledGraph::new(6, [(1, 2), (1, 3), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6)])
        .expect("valid fixture")
}

/// Labeled semi-Hamiltonian graph on five vertices: `L_5` plus `{2, 5}`.
pub fn figure3() -> LabeledGraph {
    LabeledGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)]).expect("valid fixture")
}

/// Rooted labeled tree on ten vertices.
pub fn figure4() -> LabeledGraph {
    LabeledGraph::new(
        10,
        [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (4, 7), (4, 8), (5, 9), (8, 10)],
    )
    .expect("valid fixture")
}

/// Resolves a built-in fixture name: `fig1`..`fig4`, `lN`, `cN`, `kN`,
/// `kN-e`, `t1-N`, `t2-N`.
pub fn builtin(name: &str) -> Result<LabeledGraph> {
    let unknown = || Error::InvalidGraph(format!("unknown builtin graph `{name}`"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    match name {
        "fig1" => return Ok(figure1()),
        "fig2" => return Ok(figure2()),
        "fig3" => return Ok(figure3()),
        "fig4" => return Ok(figure4()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("t1-") {
        return t1(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("t2-") {
        return t2(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('k') {
        if let Some(m) = rest.strip_suffix("-e") {
            return complete_minus_edge(num(m)?);
        }
        return complete(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('l') {
        return path(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('c') {
        return cycle(num(rest)?);
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(t1(4).unwrap().edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (3, 4)]);
        assert_eq!(t1(4).unwrap().degree(2), 1);
        assert_eq!(t2(5).unwrap().edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 4), (4, 5)]);
        assert_eq!(t2(5).unwrap().degree(3), 1);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert_eq!(complete_minus_edge(3).unwrap(), path(3).unwrap());
        assert!(path(1).is_err() && cycle(2).is_err() && t1(2).is_err() && t2(3).is_err());
        assert!(path_plus_edge(5, 4, 2).is_err());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("k4-e").unwrap(), complete_minus_edge(4).unwrap());
        assert_eq!(builtin("t2-6").unwrap(), t2(6).unwrap());
        assert_eq!(builtin("l3").unwrap(), path(3).unwrap());
        assert_eq!(builtin("c5").unwrap(), cycle(5).unwrap());
        assert_eq!(builtin("fig3").unwrap().edge_count(), 5);
        assert!(builtin("q5").is_err() && builtin("kx").is_err());
    }
}
