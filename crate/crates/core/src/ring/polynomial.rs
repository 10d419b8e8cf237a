use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::context::{same_context, VariableContext};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<C> {
    pub coefficient: C,
    pub monomial: Monomial,
}

impl<C: Field> Term<C> {
    pub fn new(coefficient: C, monomial: Monomial) -> Self {
        Term {
            coefficient,
            monomial,
        }
    }
}

/// Sparse polynomial with exact coefficients.
///
/// Terms are kept in descending lex order of their monomials regardless of
/// the order used for computations, so equality is structural.
#[derive(Clone, Debug)]
pub struct Polynomial<C> {
    ctx: Arc<VariableContext>,
    terms: Vec<Term<C>>,
}

impl<C: Field> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl<C: Field> Eq for Polynomial<C> {}

impl<C: Field> Hash for Polynomial<C> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<VariableContext>, c: C) -> Self {
        Self::term(ctx, c, Monomial::one(ctx.total()))
    }

    pub fn one(ctx: &Arc<VariableContext>) -> Self {
        Self::constant(ctx, C::one())
    }

    /// The variable at zero-based `index`.
    pub fn var(ctx: &Arc<VariableContext>, index: usize) -> Self {
        Self::term(ctx, C::one(), Monomial::var(ctx.total(), index))
    }

    pub fn term(ctx: &Arc<VariableContext>, c: C, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ctx.total(), "monomial length must match context");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, m)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging equal monomials and
    /// dropping zeros.
    pub fn from_terms(
        ctx: &Arc<VariableContext>,
        terms: impl IntoIterator<Item = Term<C>>,
    ) -> Result<Self> {
        let mut terms: Vec<Term<C>> = terms.into_iter().collect();
        if terms.iter().any(|t| t.monomial.nvars() != ctx.total()) {
            return Err(Error::IncompatibleContexts);
        }
        terms.sort_by(|a, b| b.monomial.cmp(&a.monomial));
        let mut out: Vec<Term<C>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coefficient = last.coefficient.clone() + t.coefficient;
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coefficient.is_zero());
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: out,
        })
    }

    /// Re-normalizes this polynomial; the identity on valid values.
    pub fn normalized(&self) -> Self {
        Self::from_terms(&self.ctx, self.terms.iter().cloned()).expect("same context")
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// Terms in canonical (descending lex) order.
    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.monomial.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True when no term involves a variable at index `>= nvars`.
    pub fn only_uses_first(&self, nvars: usize) -> bool {
        self.terms
            .iter()
            .all(|t| t.monomial.exponents()[nvars..].iter().all(|&e| e == 0))
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponents()[index] > 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::IncompatibleContexts)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, |c| -c.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc = Self::zero(&self.ctx);
        for t in &other.terms {
            acc = acc.merge(&self.mul_term(&t.coefficient, &t.monomial), |c| c.clone());
        }
        Ok(acc)
    }

    /// `self + map(other)` termwise, where `map` transforms `other`'s
    /// coefficients. Both inputs are sorted so this is a linear merge.
    fn merge(&self, other: &Self, map: impl Fn(&C) -> C) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].monomial.cmp(&b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(map(&b[j].coefficient), b[j].monomial.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coefficient.clone() + map(&b[j].coefficient);
                    if !c.is_zero() {
                        out.push(Term::new(c, a[i].monomial.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|t| Term::new(map(&t.coefficient), t.monomial.clone())),
        );
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    /// `c * m * self`. Lex order is multiplicative, so term order is kept.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coefficient.clone() * c.clone(), t.monomial.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(c, &Monomial::one(self.ctx.total()))
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&self, c: &C, m: &Monomial, g: &Self) -> Self {
        self.merge(&g.mul_term(c, m), |x| -x.clone())
    }

    pub(crate) fn remove_monomial(&mut self, m: &Monomial) {
        if let Ok(i) = self.terms.binary_search_by(|t| m.cmp(&t.monomial)) {
            self.terms.remove(i);
        }
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Result<&Term<C>> {
        self.lt(ord).ok_or(Error::LeadingTermOfZero)
    }

    pub(crate) fn lt(&self, ord: MonomialOrder) -> Option<&Term<C>> {
        match ord {
            // descending lex storage: the first term is the lex leader
            MonomialOrder::Lex => self.terms.first(),
            _ => self
                .terms
                .iter()
                .reduce(|best, t| {
                    if ord.cmp(&t.monomial, &best.monomial) == Ordering::Greater {
                        t
                    } else {
                        best
                    }
                }),
        }
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Result<&Monomial> {
        self.leading_term(ord).map(|t| &t.monomial)
    }

    /// Scales so the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: MonomialOrder) -> Self {
        match self.lt(ord) {
            None => self.clone(),
            Some(t) if t.coefficient.is_one() => self.clone(),
            Some(t) => {
                let inv = C::one() / t.coefficient.clone();
                self.scale(&inv)
            }
        }
    }

    /// Re-embeds into a larger context that extends this one.
    pub fn embed(&self, ctx: &Arc<VariableContext>) -> Result<Self> {
        if ctx.base_count() != self.ctx.base_count() || ctx.total() < self.ctx.total() {
            return Err(Error::IncompatibleContexts);
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coefficient.clone(), t.monomial.extended(ctx.total())))
                .collect(),
        })
    }

    /// Moves into a smaller context; fails if a dropped variable occurs.
    pub fn restrict(&self, ctx: &Arc<VariableContext>) -> Result<Self> {
        if ctx.base_count() != self.ctx.base_count()
            || ctx.total() > self.ctx.total()
            || !self.only_uses_first(ctx.total())
        {
            return Err(Error::IncompatibleContexts);
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coefficient.clone(), t.monomial.truncated(ctx.total())))
                .collect(),
        })
    }

    /// Terms sorted descending by `ord`, as used for printing.
    pub fn terms_by(&self, ord: MonomialOrder) -> Vec<&Term<C>> {
        let mut v: Vec<&Term<C>> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        v
    }

    /// Text form with terms in descending order under `ord`.
    pub fn to_string_by(&self, ord: MonomialOrder) -> String {
        use fmt::Write;
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, t) in self.terms_by(ord).into_iter().enumerate() {
            let neg = t.coefficient.is_negative();
            let mag = t.coefficient.abs();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if t.monomial.is_one() {
                write!(s, "{mag}").unwrap();
            } else {
                if !mag.is_one() {
                    write!(s, "{mag}*").unwrap();
                }
                t.monomial
                    .fmt_with(&mut s, |i| self.ctx.var_name(i))
                    .unwrap();
            }
        }
        s
    }
}

impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_by(MonomialOrder::RevLex))
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("incompatible contexts")
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("incompatible contexts")
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("incompatible contexts")
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}
