use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

/// Exact coefficient field.
///
/// Any exact signed number type from the `num` ecosystem qualifies. The
/// `Eq + Hash` bounds rule out `f32`/`f64`: certificates compare
/// coefficients for exact equality.
pub trait Field:
    Signed + FromPrimitive + Clone + Eq + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the coefficient field")
    }
}

impl<T> Field for T where
    T: Signed + FromPrimitive + Clone + Eq + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}
