//! Text form of polynomials: `x1*x3 - x2^2`, `3/2*x1^2*t1 + 4`.

use std::sync::Arc;

use super::context::VariableContext;
use super::monomial::Monomial;
use super::polynomial::{Polynomial, Term};
use super::scalar::Field;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::PolynomialParse {
            column: self.pos + 1,
            message: message.into(),
        })
    }
}

fn parse_index(cur: &mut Cursor<'_>, what: &str) -> Result<usize> {
    match cur.digits() {
        Some(d) => d.parse().or_else(|_| cur.err(format!("bad {what} index"))),
        None => cur.err(format!("expected {what} index")),
    }
}

fn parse_factor(cur: &mut Cursor<'_>, ctx: &VariableContext, exps: &mut [u32]) -> Result<()> {
    let index = match cur.peek() {
        Some(b'x') => {
            cur.pos += 1;
            let i = parse_index(cur, "variable")?;
            if i == 0 || i > ctx.base_count() {
                return cur.err(format!("x{i} is outside x1..x{}", ctx.base_count()));
            }
            i - 1
        }
        Some(b't') => {
            cur.pos += 1;
            let i = parse_index(cur, "auxiliary variable")?;
            if i == 0 || i > ctx.aux_count() {
                return cur.err(format!("t{i} is not an auxiliary variable of this context"));
            }
            ctx.base_count() + i - 1
        }
        _ => return cur.err("expected a variable"),
    };
    let mut e = 1u32;
    if cur.eat(b'^') {
        e = match cur.digits().map(str::parse) {
            Some(Ok(v)) => v,
            _ => return cur.err("expected an exponent"),
        };
    }
    exps[index] += e;
    Ok(())
}

fn parse_term<C: Field>(cur: &mut Cursor<'_>, ctx: &VariableContext, negative: bool) -> Result<Term<C>> {
    let mut coefficient = C::one();
    let mut exps = vec![0u32; ctx.total()];
    let mut have_coeff = false;
    if let Some(num) = cur.digits() {
        let mut text = num.to_string();
        if cur.eat(b'/') {
            match cur.digits() {
                Some(den) => {
                    text.push('/');
                    text.push_str(den);
                }
                None => return cur.err("expected a denominator"),
            }
        }
        coefficient = match text.parse::<C>() {
            Ok(c) => c,
            Err(_) => return cur.err(format!("bad coefficient `{text}`")),
        };
        have_coeff = true;
    }
    let starts_monomial = |c: Option<u8>| matches!(c, Some(b'x') | Some(b't'));
    if have_coeff && cur.eat(b'*') && !starts_monomial(cur.peek()) {
        return cur.err("expected a variable after `*`");
    }
    if starts_monomial(cur.peek()) {
        parse_factor(cur, ctx, &mut exps)?;
        while cur.eat(b'*') {
            parse_factor(cur, ctx, &mut exps)?;
        }
    } else if !have_coeff {
        return cur.err("expected a term");
    }
    if negative {
        coefficient = -coefficient;
    }
    Ok(Term::new(coefficient, Monomial::new(exps)))
}

/// Parses a polynomial in `ctx`. Whitespace is insignificant.
pub fn parse_polynomial<C: Field>(text: &str, ctx: &Arc<VariableContext>) -> Result<Polynomial<C>> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    loop {
        terms.push(parse_term::<C>(&mut cur, ctx, negative)?);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(c) => return cur.err(format!("unexpected `{}`", c as char)),
        }
    }
    Polynomial::from_terms(ctx, terms)
}
