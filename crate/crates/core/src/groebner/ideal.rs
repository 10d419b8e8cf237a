use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{same_ctx, Field, Polynomial, VariableContext};

/// A finitely generated ideal of `K[x1..]`.
#[derive(Clone, Debug)]
pub struct Ideal<C> {
    ctx: Arc<VariableContext>,
    generators: Vec<Polynomial<C>>,
}

impl<C: Field> PartialEq for Ideal<C> {
    /// Structural equality of generator lists; see `ideals_equal` for
    /// equality as ideals.
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.generators == other.generators
    }
}

impl<C: Field> Ideal<C> {
    /// Zero generators are dropped; at least one nonzero generator must remain.
    pub fn new(generators: Vec<Polynomial<C>>) -> Result<Self> {
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let ctx = match generators.first() {
            Some(g) => g.context().clone(),
            None => return Err(Error::EmptyIdeal),
        };
        if generators.iter().any(|g| !same_ctx(g.context(), &ctx)) {
            return Err(Error::IncompatibleContexts);
        }
        Ok(Ideal { ctx, generators })
    }

    /// The ideal generated by the given variables (zero-based indices).
    pub fn variables(ctx: &Arc<VariableContext>, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(indices.into_iter().map(|i| Polynomial::var(ctx, i)).collect())
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Removes repeated generators, keeping first occurrences.
    pub fn normalized(&self) -> Self {
        let mut out: Vec<Polynomial<C>> = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if !out.contains(g) {
                out.push(g.clone());
            }
        }
        Ideal {
            ctx: self.ctx.clone(),
            generators: out,
        }
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::IncompatibleContexts);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal {
            ctx: self.ctx.clone(),
            generators: gens,
        })
    }

    pub fn embed(&self, ctx: &Arc<VariableContext>) -> Result<Self> {
        Ok(Ideal {
            ctx: ctx.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.embed(ctx))
                .collect::<Result<_>>()?,
        })
    }
}

impl<C: Field> fmt::Display for Ideal<C> {
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
