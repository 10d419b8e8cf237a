//! Hankel edge ideals of labeled graphs.
//!
//! The algebra layers ([`ring`], [`groebner`], [`ideal_ops`]) are generic
//! over an exact coefficient [`Field`]; the graph-facing layer ([`hankel`])
//! works over [`Rational`].

pub mod budget;
pub mod error;
pub mod graphs;
pub mod groebner;
pub mod hankel;
pub mod ideal_ops;
pub mod ring;

pub use budget::{Budget, DEFAULT_PAIR_BUDGET};
pub use error::{Error, Result};
pub use ring::Field;

/// Arbitrary-precision rational coefficients.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; exact but may overflow on large inputs.
pub type SmallRational = num_rational::Rational64;

pub type Poly = ring::Polynomial<Rational>;
pub type RatIdeal = groebner::Ideal<Rational>;
pub type RatGroebnerBasis = groebner::ReducedGroebnerBasis<Rational>;
