//! Coefficient field abstraction.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssignRef, Signed};

/// A field of characteristic zero with exact arithmetic.
///
/// Nothing in the crate relies on approximate equality, so floating-point
/// types are deliberately not implementors.
pub trait Scalar:
    Signed + NumAssignRef + Clone + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Parses an unsigned decimal integer literal.
    fn from_decimal(digits: &str) -> Option<Self>;

    /// Lift of an arbitrary-precision integer.
    fn from_bigint(value: &BigInt) -> Self;
}

impl Scalar for Ratio<BigInt> {
    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse::<BigInt>().ok().map(Ratio::from_integer)
    }

    fn from_bigint(value: &BigInt) -> Self {
        Ratio::from_integer(value.clone())
    }
}

/// Machine-word rationals. Overflow panics, so only suitable for tiny inputs.
impl Scalar for Ratio<i64> {
    fn from_decimal(digits: &str) -> Option<Self> {
        digits.parse::<i64>().ok().map(Ratio::from_integer)
    }

    fn from_bigint(value: &BigInt) -> Self {
        use num_traits::ToPrimitive;
        Ratio::from_integer(value.to_i64().expect("integer does not fit in i64"))
    }
}
