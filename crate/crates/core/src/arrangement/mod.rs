//! Central hyperplane arrangements and their Jacobian ideals.

mod analysis;
mod file;
mod random;
mod search;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Polynomial, RingContext};
use crate::scalar::Scalar;

pub use analysis::{
    check_conjecture, check_conjecture_rgin, is_free, is_free_rgin, rgin_shape_check, shape_check_rgin,
    ConjectureReport, FreenessVerdict, FreenessViolation, ShapeCheck,
};
pub use random::random_central_arrangement;
pub use search::{conjecture_search, SampleOutcome, SampleResult, SearchConfig, SearchSummary};

/// A finite set of distinct hyperplanes through the origin, each given by
/// a linear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement<C> {
    ring: Arc<RingContext>,
    forms: Vec<Polynomial<C>>,
}

impl<C: Scalar> Arrangement<C> {
    /// Rejects empty input, forms that are not homogeneous of degree one
    /// and pairs of proportional forms. Indices in errors are one-based.
    pub fn new(ring: Arc<RingContext>, forms: Vec<Polynomial<C>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Precondition("an arrangement needs at least one hyperplane".into()));
        }
        let mut normalized = Vec::with_capacity(forms.len());
        for (i, form) in forms.iter().enumerate() {
            if form.num_vars() != ring.num_vars() {
                return Err(Error::DimensionMismatch { expected: ring.num_vars(), found: form.num_vars() });
            }
            if form.degree() != Some(1) || !form.is_homogeneous() {
                return Err(Error::NonCentral { index: i + 1, form: form.display(&ring).to_string() });
            }
            let monic = form.monic();
            if let Some(first) = normalized.iter().position(|g| *g == monic) {
                return Err(Error::RepeatedHyperplane { first: first + 1, second: i + 1 });
            }
            normalized.push(monic);
        }
        Ok(Self { ring, forms })
    }

    /// One row of coefficients per hyperplane.
    pub fn from_matrix(ring: Arc<RingContext>, rows: Vec<Vec<C>>) -> Result<Self> {
        let l = ring.num_vars();
        let forms = rows
            .into_iter()
            .map(|row| {
                if row.len() != l {
                    return Err(Error::DimensionMismatch { expected: l, found: row.len() });
                }
                Polynomial::from_terms(
                    l,
                    row.into_iter().enumerate().map(|(j, c)| (c, crate::ring::Monomial::var(l, j))),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, forms)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn forms(&self) -> &[Polynomial<C>] {
        &self.forms
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// `Q = α_1 ⋯ α_n`.
    pub fn defining_polynomial(&self) -> Polynomial<C> {
        self.forms.iter().fold(Polynomial::one(self.num_vars()), |acc, f| &acc * f)
    }

    /// `<Q, ∂Q/∂x_1, ..., ∂Q/∂x_l>`.
    pub fn jacobian_ideal(&self) -> Result<Ideal<C>> {
        let q = self.defining_polynomial();
        let mut gens = vec![q.clone()];
        for i in 0..self.num_vars() {
            gens.push(q.partial_derivative(i)?);
        }
        Ideal::new(self.ring.clone(), gens)
    }
}

impl<C: Scalar> fmt::Display for Arrangement<C> {
    /// The file format read by [`Arrangement::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.ring.names().join(","))?;
        for form in &self.forms {
            writeln!(f, "{}", form.display(&self.ring))?;
        }
        Ok(())
    }
}
