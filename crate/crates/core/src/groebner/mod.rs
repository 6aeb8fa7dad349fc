//! Multivariate division and Buchberger's algorithm under degrevlex.

mod buchberger;
mod ideal;
mod reduce;

pub use buchberger::{buchberger, buchberger_truncated, leading_term_ideal, s_polynomial, GroebnerBasis};
pub use ideal::Ideal;
pub use reduce::normal_form;

use crate::monomial::MonomialIdeal;
use crate::scalar::Scalar;

/// `HF(S/I, d)`, read off the leading-term ideal of a Gröbner basis
/// truncated at degree `d`.
pub fn hilbert_function_ideal<C: Scalar>(ideal: &Ideal<C>, degree: u32) -> u64 {
    let gb = buchberger_truncated(ideal, degree);
    leading_term_ideal(&gb).hilbert_function(degree)
}

/// The leading-term ideal `LT(I)` of a homogeneous ideal.
pub fn initial_ideal<C: Scalar>(ideal: &Ideal<C>) -> MonomialIdeal {
    leading_term_ideal(&buchberger(ideal))
}
