//! Exact sparse multivariate polynomials and monomial orders.

mod context;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod scalar;

pub use context::{AuxRole, VariableContext};
pub(crate) use context::same_context as same_ctx;
pub use monomial::Monomial;
pub use order::{cmp_monomials, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Term};
pub use scalar::Field;
