//! Ideal-theoretic procedures on top of Groebner bases: intersection,
//! radical membership, heights and generation tests.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, initial_ideal, Ideal, MonomialIdeal};
use crate::ring::{same_ctx, AuxRole, Field, Monomial, MonomialOrder, Polynomial};

/// Generators of `I ∩ J`, by eliminating `t` from `t*I + (1 - t)*J`.
pub fn intersect_ideals<C: Field>(a: &Ideal<C>, b: &Ideal<C>, budget: &Budget) -> Result<Ideal<C>> {
    if !same_ctx(a.context(), b.context()) {
        return Err(Error::IncompatibleContexts);
    }
    let base = a.context();
    let ext = base.with_aux(AuxRole::Intersection);
    let t = Polynomial::var(&ext, ext.total() - 1);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a.generators() {
        gens.push(&t * &g.embed(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.embed(&ext)?);
    }
    let gb = buchberger(&Ideal::new(gens)?, MonomialOrder::BlockElim(1), budget)?;
    let kept: Vec<Polynomial<C>> = gb
        .elements()
        .iter()
        .filter(|g| !g.uses_var(ext.total() - 1))
        .map(|g| g.restrict(base))
        .collect::<Result<_>>()?;
    Ideal::new(kept)
}

/// Is `p` in the radical of `ideal`? Decided by `1 ∈ I + (1 - y*p)`.
pub fn radical_member<C: Field>(p: &Polynomial<C>, ideal: &Ideal<C>, budget: &Budget) -> Result<bool> {
    if !same_ctx(p.context(), ideal.context()) {
        return Err(Error::IncompatibleContexts);
    }
    if p.is_zero() {
        return Ok(true);
    }
    let ext = ideal.context().with_aux(AuxRole::Rabinowitsch);
    let y = Polynomial::var(&ext, ext.total() - 1);
    let extra = &Polynomial::one(&ext) - &(&y * &p.embed(&ext)?);
    let lifted = ideal.embed(&ext)?.sum(&Ideal::new(vec![extra])?)?;
    Ok(buchberger(&lifted, MonomialOrder::RevLex, budget)?.is_unit())
}

/// `rad(I) = rad(J)`, checked on generators in both directions.
pub fn radicals_equal<C: Field>(a: &Ideal<C>, b: &Ideal<C>, budget: &Budget) -> Result<bool> {
    if !same_ctx(a.context(), b.context()) {
        return Err(Error::IncompatibleContexts);
    }
    for g in a.generators() {
        if !radical_member(g, b, budget)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !radical_member(g, a, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const MAX_DIMENSION_VARS: usize = 24;

/// Krull dimension of `K[x_1..x_total]/M`: the largest variable set that
/// contains the support of no minimal generator. Exhaustive over subsets.
pub fn monomial_dim(m: &MonomialIdeal, total_vars: usize) -> Result<usize> {
    if m.is_unit() {
        return Err(Error::UnitIdeal("dimension of the zero ring"));
    }
    if total_vars > MAX_DIMENSION_VARS {
        return Err(Error::OutOfRange(format!(
            "monomial dimension supports at most {MAX_DIMENSION_VARS} variables"
        )));
    }
    if m.generators().iter().any(|g| g.nvars() != total_vars) {
        return Err(Error::IncompatibleContexts);
    }
    let supports: Vec<u64> = m.generators().iter().map(Monomial::support_mask).collect();
    let mut best = 0;
    for set in 0u64..(1 << total_vars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// `height I = #vars - dim S/in(I)`.
pub fn height<C: Field>(ideal: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<usize> {
    let ini = initial_ideal(ideal, ord, budget)?;
    if ini.is_unit() {
        return Err(Error::UnitIdeal("height of the unit ideal"));
    }
    let total = ideal.context().total();
    Ok(total - monomial_dim(&ini, total)?)
}

/// No generator lies in the ideal of the others.
pub fn is_minimal_generating_set<C: Field>(ideal: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<bool> {
    let gens = ideal.generators();
    if gens.len() == 1 {
        return Ok(true);
    }
    for k in 0..gens.len() {
        let others: Vec<Polynomial<C>> = gens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        if buchberger(&Ideal::new(others)?, ord, budget)?.contains(&gens[k]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A monomial ideal is a complete intersection iff its minimal generators
/// are pairwise coprime.
pub fn monomial_is_ci(m: &MonomialIdeal) -> bool {
    let g = m.generators();
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].is_coprime(&g[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_polynomial, VariableContext};
    use crate::Rational;
    use std::sync::Arc;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(gens: &[&str], c: &Arc<VariableContext>) -> Ideal<Rational> {
        Ideal::new(gens.iter().map(|g| parse_polynomial(g, c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        let m = MonomialIdeal::new(4, [mono(&[0, 2, 0, 0]), mono(&[0, 0, 2, 0])]);
        assert_eq!(monomial_dim(&m, 4).unwrap(), 2);
        // in(I_T1) for n = 4 in five variables
        let m = MonomialIdeal::new(
            5,
            [mono(&[0, 1, 1, 0, 0]), mono(&[1, 0, 2, 0, 0]), mono(&[0, 2, 0, 0, 0]), mono(&[0, 0, 0, 2, 0])],
        );
        assert_eq!(monomial_dim(&m, 5).unwrap(), 2);
        for k in 1..7 {
            let m = MonomialIdeal::new(k, [Monomial::var(k, 0)]);
            assert_eq!(monomial_dim(&m, k).unwrap(), k - 1);
        }
        assert!(monomial_dim(&MonomialIdeal::new(3, [Monomial::one(3)]), 3).is_err());
        assert_eq!(monomial_dim(&MonomialIdeal::new(3, []), 3).unwrap(), 3);
    }

    #[test]
    fn principal_monomial_intersection() {
        let c = VariableContext::new(2).unwrap();
        let b = Budget::default();
        let i = intersect_ideals(&ideal(&["x1"], &c), &ideal(&["x2"], &c), &b).unwrap();
        assert_eq!(i.generators(), &[parse_polynomial::<Rational>("x1*x2", &c).unwrap()]);
        assert_eq!(i.context().aux_count(), 0);
    }

    #[test]
    fn radical_examples() {
        let c = VariableContext::new(4).unwrap();
        let b = Budget::default();
        let sq = ideal(&["x3^2"], &c);
        assert!(radical_member(&parse_polynomial("x3", &c).unwrap(), &sq, &b).unwrap());
        let l3 = ideal(&["x1*x3 - x2^2", "x2*x4 - x3^2"], &c);
        assert!(!radical_member(&Polynomial::one(&c), &l3, &b).unwrap());
        assert!(radical_member(&Polynomial::zero(&c), &l3, &b).unwrap());
        assert!(!radical_member(&parse_polynomial("x1", &c).unwrap(), &l3, &b).unwrap());
    }

    #[test]
    fn generating_sets_and_monomial_ci() {
        let c = VariableContext::new(5).unwrap();
        let b = Budget::default();
        let ord = MonomialOrder::RevLex;
        assert!(!is_minimal_generating_set(&ideal(&["x1*x3 - x2^2", "x1*x3 - x2^2"], &c), ord, &b).unwrap());
        assert!(!is_minimal_generating_set(
            &ideal(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x1*x2*x4 - x1*x3^2"], &c),
            ord,
            &b
        )
        .unwrap());
        assert!(monomial_is_ci(&MonomialIdeal::new(2, [Monomial::var(2, 0)])));
        assert!(!monomial_is_ci(&MonomialIdeal::new(2, [mono(&[1, 1]), mono(&[2, 0])])));
    }

    #[test]
    fn unit_height_is_an_error() {
        let c = VariableContext::new(3).unwrap();
        let b = Budget::default();
        let i = ideal(&["x1", "1 - x1"], &c);
        assert_eq!(height(&i, MonomialOrder::RevLex, &b), Err(Error::UnitIdeal("height of the unit ideal")));
    }
}
