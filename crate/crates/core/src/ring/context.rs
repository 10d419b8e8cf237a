use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// What an auxiliary variable is used for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxRole {
    /// The `t` of `t*I + (1 - t)*J` in ideal intersection.
    Intersection,
    /// The `y` of `I + (1 - y*f)` in radical membership.
    Rabinowitsch,
}

/// Variable layout of a polynomial ring: base variables `x1..x{base}`
/// followed by auxiliary variables `t1..t{aux}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    base_count: usize,
    aux: Vec<AuxRole>,
}

impl VariableContext {
    pub fn new(base_count: usize) -> Result<Arc<Self>> {
        if base_count < 2 {
            return Err(Error::InvalidContext(format!(
                "base_count must be >= 2, got {base_count}"
            )));
        }
        Ok(Arc::new(Self {
            base_count,
            aux: Vec::new(),
        }))
    }

    /// The ring `K[x1..x{n+1}]` of a graph on `n` vertices.
    pub fn for_graph(n: usize) -> Result<Arc<Self>> {
        Self::new(n + 1)
    }

    /// A copy of this context with one more auxiliary variable appended last.
    pub fn with_aux(&self, role: AuxRole) -> Arc<Self> {
        let mut aux = self.aux.clone();
        aux.push(role);
        Arc::new(Self {
            base_count: self.base_count,
            aux,
        })
    }

    /// The context with all auxiliary variables dropped.
    pub fn base(&self) -> Arc<Self> {
        Arc::new(Self {
            base_count: self.base_count,
            aux: Vec::new(),
        })
    }

    pub fn base_count(&self) -> usize {
        self.base_count
    }

    pub fn aux_count(&self) -> usize {
        self.aux.len()
    }

    pub fn aux_roles(&self) -> &[AuxRole] {
        &self.aux
    }

    pub fn total(&self) -> usize {
        self.base_count + self.aux.len()
    }

    /// Display name of the variable at zero-based `index`.
    pub fn var_name(&self, index: usize) -> String {
        if index < self.base_count {
            format!("x{}", index + 1)
        } else {
            format!("t{}", index - self.base_count + 1)
        }
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[x1..x{}", self.base_count)?;
        if !self.aux.is_empty() {
            write!(f, "; t1..t{}", self.aux.len())?;
        }
        write!(f, "]")
    }
}

pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
