use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::groebner::Ideal;
use crate::ring::{Field, Monomial, Polynomial, VariableContext};
use crate::{Poly, RatIdeal};

/// `g_ij = x_i*x_{j+1} - x_j*x_{i+1}`, the 2-minor of columns `i < j` of
/// the Hankel matrix `[[x1 .. xn], [x2 .. x{n+1}]]`. Labels are 1-based.
pub fn hankel_binomial<C: Field>(ctx: &Arc<VariableContext>, i: usize, j: usize) -> Polynomial<C> {
    assert!(i >= 1 && i < j && j < ctx.base_count(), "need 1 <= i < j <= n");
    let nv = ctx.total();
    let pos = Polynomial::term(ctx, C::one(), Monomial::from_powers(nv, &[(i - 1, 1), (j, 1)]));
    let neg = Polynomial::term(ctx, C::one(), Monomial::from_powers(nv, &[(j - 1, 1), (i, 1)]));
    &pos - &neg
}

/// The generators `g_ij` of a graph's edges, ordered by `(i, j)`, over any
/// coefficient field.
pub fn edge_binomials<C: Field>(g: &LabeledGraph) -> Result<Vec<Polynomial<C>>> {
    let ctx = VariableContext::for_graph(g.n())?;
    Ok(g.edges().map(|(i, j)| hankel_binomial(&ctx, i, j)).collect())
}

/// The Hankel edge ideal `I_G` of a labeled graph.
#[derive(Clone, Debug)]
pub struct HankelIdeal {
    graph: LabeledGraph,
    ideal: RatIdeal,
    generator_index: BTreeMap<(usize, usize), Poly>,
}

impl HankelIdeal {
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn ideal(&self) -> &RatIdeal {
        &self.ideal
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        self.ideal.context()
    }

    /// The generator of edge `{i, j}`, if it is an edge.
    pub fn generator(&self, i: usize, j: usize) -> Option<&Poly> {
        self.generator_index.get(&(i.min(j), i.max(j)))
    }

    pub fn generators(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        self.generator_index.iter().map(|(&e, p)| (e, p))
    }
}

pub fn hankel_edge_ideal(g: &LabeledGraph) -> Result<HankelIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let ctx = VariableContext::for_graph(g.n())?;
    let generator_index: BTreeMap<(usize, usize), Poly> = g
        .edges()
        .map(|(i, j)| ((i, j), hankel_binomial(&ctx, i, j)))
        .collect();
    let ideal = Ideal::new(generator_index.values().cloned().collect())?;
    Ok(HankelIdeal {
        graph: g.clone(),
        ideal,
        generator_index,
    })
}

/// All 2-minors of the `2 x n` Hankel matrix: the ideal of the rational
/// normal curve.
pub fn hankel_full_ideal(n: usize) -> Result<RatIdeal> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("the Hankel matrix needs n >= 2, got {n}")));
    }
    let ctx = VariableContext::for_graph(n)?;
    minors_ideal(&ctx, 1, n)
}

/// All `g_ij` with `a <= i < j <= b`, in the given context.
pub(crate) fn minors_ideal(ctx: &Arc<VariableContext>, a: usize, b: usize) -> Result<RatIdeal> {
    Ideal::new(minors(ctx, a, b))
}

pub(crate) fn minors(ctx: &Arc<VariableContext>, a: usize, b: usize) -> Vec<Poly> {
    (a..=b)
        .flat_map(|i| (i + 1..=b).map(move |j| (i, j)))
        .map(|(i, j)| hankel_binomial(ctx, i, j))
        .collect()
}
