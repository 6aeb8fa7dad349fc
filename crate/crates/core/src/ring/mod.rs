//! Exact multivariate polynomial arithmetic over a field of characteristic
//! zero, in the standard grading.

mod context;
mod linear;
mod monomial;
mod order;
pub mod parse;
mod polynomial;

pub use context::RingContext;
pub use linear::LinearChange;
pub use monomial::Monomial;
pub use order::{compare_degrevlex, presentation_order, DegRevLex, TermOrder};
pub use polynomial::{Polynomial, Term};
