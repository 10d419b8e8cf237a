use std::fmt;

use crate::ring::Monomial;

/// A monomial ideal given by its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` (drops every monomial divisible by another) and
    /// sorts the survivors descending lex.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        assert!(gens.iter().all(|m| m.nvars() == nvars), "monomial length must match");
        gens.sort_by_key(|m| m.degree());
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in gens {
            if !minimal.iter().any(|k| k.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by(|a, b| b.cmp(a));
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
