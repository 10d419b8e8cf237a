//! Graph text format:
//!
//! ```text
//! # comment
//! n 4
//! e 1 2
//! e 2 3
//! ```

use std::fmt::Write;

use super::graph::LabeledGraph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::GraphParse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("`{s}` is not a nonnegative integer")));
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(err("repeated `n` header".into()));
                }
                let count = num(count)?;
                if count == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                n = Some(count);
            }
            ["e", a, b] => {
                let Some(count) = n else {
                    return Err(err("edge before the `n` header".into()));
                };
                let (a, b) = (num(a)?, num(b)?);
                if a == b {
                    return Err(err(format!("loop at vertex {a}")));
                }
                if a == 0 || b == 0 || a > count || b > count {
                    return Err(err(format!("edge {a} {b} outside 1..={count}")));
                }
                let key = (a.min(b), a.max(b));
                if edges.contains(&key) {
                    return Err(err(format!("duplicate edge {a} {b}")));
                }
                edges.push(key);
            }
            _ => return Err(err(format!("expected `n <count>` or `e <i> <j>`, got `{line}`"))),
        }
    }
    let n = n.ok_or(Error::GraphParse {
        line: text.lines().count().max(1),
        message: "missing `n <count>` header".into(),
    })?;
    LabeledGraph::new(n, edges)
}

pub fn format_graph(g: &LabeledGraph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (a, b) in g.edges() {
        writeln!(s, "e {a} {b}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::standard;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# L3\nn 3\n\ne 1 2  # first\ne 3 2\n").unwrap();
        assert_eq!(g, standard::path(3).unwrap());
        assert_eq!(parse_graph(&format_graph(&standard::figure2())).unwrap(), standard::figure2());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("n 3\ne 1 2\ne 2 1\n", 3),
            ("e 1 2\n", 1),
            ("n 3\ne 1 4\n", 2),
            ("n 3\nn 3\n", 2),
            ("n 3\ne 1 1\n", 2),
            ("n 3\nx 1 2\n", 2),
            ("n three\n", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::GraphParse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::GraphParse { .. })));
    }
}
