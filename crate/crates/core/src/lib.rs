//! Exact commutative-algebra toolkit for generic initial ideals, sectional
//! matrices and the k-weak / k-strong Lefschetz properties of graded
//! quotients `S/I`, with an application to the Jacobian ideals of central
//! hyperplane arrangements.
//!
//! All algebra is generic over the coefficient field through [`Scalar`];
//! the aliases at the crate root fix it to arbitrary-precision rationals,
//! which is what every pipeline in this crate is tested against.
//!
//! The layering is bottom-up:
//!
//! * [`ring`]: monomials, polynomials, degrevlex, linear changes, parsing.
//! * [`groebner`]: reduction, Buchberger, leading-term ideals.
//! * [`monomial`]: monomial ideal combinatorics (stability, Hilbert functions).
//! * [`gin`]: randomized generic initial ideal under degrevlex.
//! * [`lefschetz`]: sectional matrices and the Lefschetz decision procedures.
//! * [`arrangement`]: hyperplane arrangements, freeness, conjecture search.

pub mod arrangement;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod lefschetz;
pub mod monomial;
pub mod ring;
pub mod scalar;
pub mod seed;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use ring::{compare_degrevlex, DegRevLex, LinearChange, Monomial, Polynomial, RingContext, TermOrder};
pub use groebner::{buchberger, leading_term_ideal, normal_form, GroebnerBasis, Ideal};
pub use monomial::{MonomialIdeal, RegularityCertificate, RegularitySource};
pub use gin::{rgin, GinConfig, GinResult};
pub use lefschetz::{LefschetzMode, LefschetzReport, LefschetzVerdict, SectionalMatrix, Witness};
pub use arrangement::{Arrangement, ConjectureReport, FreenessVerdict};

/// Arbitrary-precision rational numbers, the coefficient field used throughout.
pub type Rational = num_rational::BigRational;

pub type QPolynomial = Polynomial<Rational>;
pub type QIdeal = Ideal<Rational>;
pub type QGroebnerBasis = GroebnerBasis<Rational>;
pub type QLinearChange = LinearChange<Rational>;
pub type QArrangement = Arrangement<Rational>;

