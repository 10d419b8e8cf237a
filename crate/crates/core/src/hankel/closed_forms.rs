//! Closed-form initial ideals and Groebner sets of the rooted paths.

use std::sync::Arc;

use super::ideal::hankel_binomial;
use crate::error::Result;
use crate::graphs::standard;
use crate::groebner::MonomialIdeal;
use crate::ring::{Monomial, Polynomial, VariableContext};
use crate::Poly;

fn mono(ctx: &VariableContext, powers: &[(usize, u32)]) -> Monomial {
    let zero_based: Vec<(usize, u32)> = powers.iter().map(|&(v, e)| (v - 1, e)).collect();
    Monomial::from_powers(ctx.total(), &zero_based)
}

fn squares(ctx: &VariableContext, from: usize, to: usize) -> impl Iterator<Item = Monomial> + '_ {
    (from..=to).map(move |i| mono(ctx, &[(i + 1, 2)]))
}

/// `(x_{i+1}^2 : 1 <= i <= n-1)`, the initial ideal of `I_{L_n}` under revlex.
pub fn path_initial_ideal(n: usize) -> Result<MonomialIdeal> {
    standard::path(n)?;
    let ctx = VariableContext::for_graph(n)?;
    Ok(MonomialIdeal::new(ctx.total(), squares(&ctx, 1, n - 1).collect::<Vec<_>>()))
}

/// `(x2*x3, x1*x3^2, x2^2, x_{i+1}^2 : 3 <= i <= n-1)` for `standard::t1(n)`.
pub fn t1_initial_ideal(n: usize) -> Result<MonomialIdeal> {
    standard::t1(n)?;
    let ctx = VariableContext::for_graph(n)?;
    let mut gens = vec![mono(&ctx, &[(2, 1), (3, 1)]), mono(&ctx, &[(1, 1), (3, 2)]), mono(&ctx, &[(2, 2)])];
    gens.extend(squares(&ctx, 3, n - 1));
    Ok(MonomialIdeal::new(ctx.total(), gens))
}

/// `(x2*x3, x3*x4, x1*x3^2, x1*x4^2, x2^2, x_{i+1}^2 : 4 <= i <= n-1)` for
/// `standard::t2(n)`.
pub fn t2_initial_ideal(n: usize) -> Result<MonomialIdeal> {
    standard::t2(n)?;
    let ctx = VariableContext::for_graph(n)?;
    let mut gens = vec![
        mono(&ctx, &[(2, 1), (3, 1)]),
        mono(&ctx, &[(3, 1), (4, 1)]),
        mono(&ctx, &[(1, 1), (3, 2)]),
        mono(&ctx, &[(1, 1), (4, 2)]),
        mono(&ctx, &[(2, 2)]),
    ];
    gens.extend(squares(&ctx, 4, n - 1));
    Ok(MonomialIdeal::new(ctx.total(), gens))
}

fn binomial(ctx: &Arc<VariableContext>, plus: &[(usize, u32)], minus: &[(usize, u32)]) -> Poly {
    let one = num_traits::One::one();
    let p = Polynomial::term(ctx, one, mono(ctx, plus));
    let q = Polynomial::term(ctx, num_traits::One::one(), mono(ctx, minus));
    &p - &q
}

/// `f = x1*x2*x4 - x1*x3^2`.
pub fn cubic_f(ctx: &Arc<VariableContext>) -> Poly {
    binomial(ctx, &[(1, 1), (2, 1), (4, 1)], &[(1, 1), (3, 2)])
}

/// `h = x1*x3*x5 - x1*x4^2`.
pub fn cubic_h(ctx: &Arc<VariableContext>) -> Poly {
    binomial(ctx, &[(1, 1), (3, 1), (5, 1)], &[(1, 1), (4, 2)])
}

/// `{f, g12, g13, g_{i,i+1} : 3 <= i <= n-1}`, a Groebner basis of `I_{T1}`.
pub fn t1_groebner_set(n: usize) -> Result<Vec<Poly>> {
    standard::t1(n)?;
    let ctx = VariableContext::for_graph(n)?;
    let mut out = vec![cubic_f(&ctx), hankel_binomial(&ctx, 1, 2), hankel_binomial(&ctx, 1, 3)];
    out.extend((3..n).map(|i| hankel_binomial(&ctx, i, i + 1)));
    Ok(out)
}

/// `{f, h, g12, g13, g24, g_{i,i+1} : 4 <= i <= n-1}`, a Groebner basis of `I_{T2}`.
pub fn t2_groebner_set(n: usize) -> Result<Vec<Poly>> {
    standard::t2(n)?;
    let ctx = VariableContext::for_graph(n)?;
    let mut out = vec![
        cubic_f(&ctx),
        cubic_h(&ctx),
        hankel_binomial(&ctx, 1, 2),
        hankel_binomial(&ctx, 1, 3),
        hankel_binomial(&ctx, 2, 4),
    ];
    out.extend((4..n).map(|i| hankel_binomial(&ctx, i, i + 1)));
    Ok(out)
}
