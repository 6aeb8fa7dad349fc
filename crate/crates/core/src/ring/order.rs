use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order compatible with multiplication.
pub trait TermOrder {
    fn compare(a: &Monomial, b: &Monomial) -> Ordering;
}

/// Degree reverse lexicographic order with `x_1 > x_2 > ... > x_l`.
///
/// Higher total degree wins; on a tie, the monomial whose exponent vector
/// has the smaller entry at the last position where the two differ is the
/// larger one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DegRevLex;

impl TermOrder for DegRevLex {
    #[inline]
    fn compare(a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        a.degree().cmp(&b.degree()).then_with(|| {
            for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }
}

/// Presentation order for generator lists: increasing degree, and
/// decreasing degrevlex within a degree (`x^2, x*y, y^2, x*z`).
pub fn presentation_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| DegRevLex::compare(b, a))
}

/// Degrevlex comparison with a length check.
pub fn compare_degrevlex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.num_vars() != b.num_vars() {
        return Err(Error::DimensionMismatch { expected: a.num_vars(), found: b.num_vars() });
    }
    Ok(DegRevLex::compare(a, b))
}
