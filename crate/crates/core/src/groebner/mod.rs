//! Multivariate division, Buchberger's algorithm and the decision
//! procedures built on reduced Groebner bases.

mod buchberger;
mod division;
mod ideal;
mod monomial_ideal;

pub use buchberger::{buchberger, buchberger_with, is_groebner_basis, Criteria, ReducedGroebnerBasis};
pub use division::{normal_form, s_polynomial};
pub use ideal::Ideal;
pub use monomial_ideal::MonomialIdeal;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ring::{same_ctx, Field, MonomialOrder, Polynomial};

/// Is `p` in `ideal`?
pub fn ideal_member<C: Field>(p: &Polynomial<C>, ideal: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<bool> {
    if !same_ctx(p.context(), ideal.context()) {
        return Err(Error::IncompatibleContexts);
    }
    if p.is_zero() {
        return Ok(true);
    }
    Ok(buchberger(ideal, ord, budget)?.contains(p))
}

/// Equality of ideals by comparing reduced Groebner bases.
pub fn ideals_equal<C: Field>(a: &Ideal<C>, b: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<bool> {
    if !same_ctx(a.context(), b.context()) {
        return Err(Error::IncompatibleContexts);
    }
    let ga = buchberger(a, ord, budget)?;
    let gb = buchberger(b, ord, budget)?;
    Ok(ga.elements() == gb.elements())
}

/// `I ⊆ J`, generator by generator.
pub fn is_subideal<C: Field>(a: &Ideal<C>, b: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<bool> {
    if !same_ctx(a.context(), b.context()) {
        return Err(Error::IncompatibleContexts);
    }
    let gb = buchberger(b, ord, budget)?;
    Ok(a.generators().iter().all(|g| gb.contains(g)))
}

/// Minimal generators of the ideal of leading monomials.
pub fn initial_ideal<C: Field>(ideal: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<MonomialIdeal> {
    let gb = buchberger(ideal, ord, budget)?;
    Ok(initial_ideal_of(&gb))
}

pub fn initial_ideal_of<C: Field>(gb: &ReducedGroebnerBasis<C>) -> MonomialIdeal {
    MonomialIdeal::new(gb.source().context().total(), gb.leading_monomials())
}
