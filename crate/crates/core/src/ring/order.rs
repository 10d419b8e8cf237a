use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Total order on monomials of a fixed context.
///
/// Variables are ranked `x1 > x2 > ... `, auxiliary variables last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    #[default]
    RevLex,
    Lex,
    /// Elimination order for the last `k` variables: those are compared
    /// first (degree, then lex), ties broken by `RevLex` on the rest.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::RevLex => "revlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::BlockElim(k) => format!("elim({k})"),
        }
    }

    /// Compares two monomials; both must have the same number of variables.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::RevLex => revlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::BlockElim(k) => {
                let split = a.len() - k;
                let (a_rest, a_elim) = a.split_at(split);
                let (b_rest, b_elim) = b.split_at(split);
                let da: u32 = a_elim.iter().sum();
                let db: u32 = b_elim.iter().sum();
                da.cmp(&db)
                    .then_with(|| a_elim.cmp(b_elim))
                    .then_with(|| revlex(a_rest, b_rest))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        // Smaller exponent in the last differing variable wins.
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Checked comparison of two monomials under `ord`.
pub fn cmp_monomials(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::IncompatibleContexts);
    }
    if let MonomialOrder::BlockElim(k) = ord {
        if k > a.nvars() {
            return Err(Error::IncompatibleContexts);
        }
    }
    Ok(ord.cmp(a, b))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn revlex_examples() {
        // x2^2 > x1*x3 in four variables
        assert_eq!(
            cmp_monomials(&m(&[0, 2, 0, 0]), &m(&[1, 0, 1, 0]), MonomialOrder::RevLex).unwrap(),
            Ordering::Greater
        );
        // x1*x3^2 > x1*x2*x4
        assert_eq!(
            cmp_monomials(&m(&[1, 0, 2, 0]), &m(&[1, 1, 0, 1]), MonomialOrder::RevLex).unwrap(),
            Ordering::Greater
        );
        for ord in [MonomialOrder::RevLex, MonomialOrder::Lex, MonomialOrder::BlockElim(1)] {
            assert_eq!(ord.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
        }
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // any power of the eliminated variable dominates the base block
        assert_eq!(
            MonomialOrder::BlockElim(1).cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::BlockElim(1).cmp(&m(&[0, 2, 1]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            cmp_monomials(&m(&[1]), &m(&[1, 0]), MonomialOrder::RevLex),
            Err(Error::IncompatibleContexts)
        );
    }
}
