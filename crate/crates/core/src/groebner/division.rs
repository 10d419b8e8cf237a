use crate::error::{Error, Result};
use crate::ring::{Field, MonomialOrder, Polynomial, Term};

/// Full multivariate division remainder of `p` by `basis`.
///
/// The leading term of the running remainder is reduced first, always by the
/// first basis element (in list order) whose leading monomial divides it.
/// Every term of the result is irreducible by every leading monomial.
pub fn normal_form<C: Field>(p: &Polynomial<C>, basis: &[Polynomial<C>], ord: MonomialOrder) -> Polynomial<C> {
    let leads: Vec<(&Term<C>, &Polynomial<C>)> = basis
        .iter()
        .filter_map(|g| g.lt(ord).map(|t| (t, g)))
        .collect();
    let mut work = p.clone();
    let mut rest: Vec<Term<C>> = Vec::new();
    while let Some(t) = work.lt(ord).cloned() {
        let divisor = leads
            .iter()
            .find_map(|(lt, g)| lt.monomial.quotient_of(&t.monomial).map(|q| (q, &lt.coefficient, *g)));
        match divisor {
            Some((q, lc, g)) => {
                let c = t.coefficient.clone() / lc.clone();
                work = work.sub_mul_term(&c, &q, g);
            }
            None => {
                work.remove_monomial(&t.monomial);
                rest.push(t);
            }
        }
    }
    Polynomial::from_terms(p.context(), rest).expect("same context")
}

/// `S(f, g) = (L / lt(f)) * f - (L / lt(g)) * g` with `L` the lcm of the
/// leading monomials; `lt` includes the coefficient.
pub fn s_polynomial<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>, ord: MonomialOrder) -> Result<Polynomial<C>> {
    let (ft, gt) = match (f.lt(ord), g.lt(ord)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial("S-polynomial input")),
    };
    if !crate::ring::same_ctx(f.context(), g.context()) {
        return Err(Error::IncompatibleContexts);
    }
    let l = ft.monomial.lcm(&gt.monomial);
    let fq = ft.monomial.quotient_of(&l).expect("lcm is a multiple");
    let gq = gt.monomial.quotient_of(&l).expect("lcm is a multiple");
    let a = f.mul_term(&(C::one() / ft.coefficient.clone()), &fq);
    Ok(a.sub_mul_term(&(C::one() / gt.coefficient.clone()), &gq, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_polynomial, VariableContext};
    use crate::Rational;
    use std::sync::Arc;

    fn ctx(n: usize) -> Arc<VariableContext> {
        VariableContext::new(n).unwrap()
    }

    fn p(s: &str, c: &Arc<VariableContext>) -> Polynomial<Rational> {
        parse_polynomial(s, c).unwrap()
    }

    #[test]
    fn trivial_reductions() {
        let c = ctx(4);
        let g12 = p("x1*x3 - x2^2", &c);
        assert!(normal_form(&g12, std::slice::from_ref(&g12), MonomialOrder::RevLex).is_zero());
        let x1 = p("x1", &c);
        assert_eq!(normal_form(&x1, &[g12], MonomialOrder::RevLex), x1);
    }

    #[test]
    fn s_polynomials_of_the_first_hankel_path_shape() {
        let c = ctx(5);
        let g12 = p("x1*x3 - x2^2", &c);
        let g13 = p("x1*x4 - x2*x3", &c);
        let f = p("x1*x2*x4 - x1*x3^2", &c);
        let ord = MonomialOrder::RevLex;
        // the sign convention yields exactly +f here
        assert_eq!(s_polynomial(&g12, &g13, ord).unwrap(), f);
        let x1x4 = p("x1*x4", &c);
        let s = s_polynomial(&g13, &f, ord).unwrap();
        assert!(s == &x1x4 * &g12 || s == -&(&x1x4 * &g12), "S(g13,f) = {s}");
        assert!(s_polynomial(&f, &f, ord).unwrap().is_zero());
        assert_eq!(
            s_polynomial(&f, &Polynomial::zero(&c), ord),
            Err(Error::ZeroPolynomial("S-polynomial input"))
        );
    }

    #[test]
    fn remainder_is_irreducible() {
        let c = ctx(4);
        let basis = vec![p("x1*x3 - x2^2", &c), p("x2*x4 - x3^2", &c)];
        let q = p("x1^2*x3^2 + 5*x2*x3*x4 - x1", &c);
        let r = normal_form(&q, &basis, MonomialOrder::RevLex);
        for t in r.terms() {
            for g in &basis {
                let lm = g.leading_monomial(MonomialOrder::RevLex).unwrap();
                assert!(!lm.divides(&t.monomial));
            }
        }
    }
}
