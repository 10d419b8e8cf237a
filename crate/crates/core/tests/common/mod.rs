#![allow(dead_code)]

use std::sync::Arc;

use hankel_core::graphs::LabeledGraph;
use hankel_core::groebner::Ideal;
use hankel_core::ring::{Monomial, Polynomial, Term, VariableContext};
use hankel_core::{Budget, Field};
use proptest::prelude::*;

pub const VARS: usize = 3;

pub fn ctx() -> Arc<VariableContext> {
    VariableContext::new(VARS).unwrap()
}

pub fn budget() -> Budget {
    Budget::new(200_000)
}

pub fn exponents(nvars: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, nvars)
}

pub fn monomial(nvars: usize, max: u32) -> impl Strategy<Value = Monomial> {
    exponents(nvars, max).prop_map(Monomial::new)
}

/// Raw `(coefficient, exponents)` pairs; build with [`poly_from`].
pub type RawPoly = Vec<(i64, Vec<u32>)>;

pub fn raw_poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-4i64..=4, exponents(VARS, max_exp)), 1..=max_terms)
}

pub fn poly_from<C: Field>(ctx: &Arc<VariableContext>, raw: &RawPoly) -> Polynomial<C> {
    Polynomial::from_terms(
        ctx,
        raw.iter().map(|(c, e)| Term::new(C::int(*c), Monomial::new(e.clone()))),
    )
    .unwrap()
}

/// Small ideals: one to three nonzero generators of low degree.
pub fn raw_ideal() -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(raw_poly(3, 2), 1..=3).prop_filter("nonzero generators", |gens| {
        let c = ctx();
        gens.iter().all(|g| !poly_from::<hankel_core::Rational>(&c, g).is_zero())
    })
}

pub fn ideal_from<C: Field>(ctx: &Arc<VariableContext>, raw: &[RawPoly]) -> Ideal<C> {
    Ideal::new(raw.iter().map(|g| poly_from(ctx, g)).collect()).unwrap()
}

/// All edge subsets of the complete graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<LabeledGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            LabeledGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// Every permutation of `1..=n`, as `perm[old - 1] = new`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    heap(&mut cur, n, &mut out);
    out
}

fn heap(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(a, k - 1, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}
