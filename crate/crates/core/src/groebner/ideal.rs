use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{parse, LinearChange, Polynomial, RingContext};
use crate::scalar::Scalar;

/// A homogeneous ideal given by a (possibly redundant) list of generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal<C> {
    ring: Arc<RingContext>,
    gens: Vec<Polynomial<C>>,
}

impl<C: Scalar> Ideal<C> {
    /// Zero generators are dropped; every other generator must be
    /// homogeneous and live in `ring`.
    pub fn new(ring: Arc<RingContext>, gens: impl IntoIterator<Item = Polynomial<C>>) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if g.num_vars() != ring.num_vars() {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: format!("a polynomial in {} variables", g.num_vars()),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.display(&ring).to_string()));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Self { ring, gens: kept })
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    /// Parses a comma-separated generator list.
    pub fn parse(text: &str, ring: Arc<RingContext>) -> Result<Self> {
        let gens = parse::parse_polynomial_list(text, &ring)?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The ideal `g(I)`.
    pub fn apply_linear_change(&self, change: &LinearChange<C>) -> Result<Self> {
        let gens = self.gens.iter().map(|f| f.apply_linear_change(change)).collect::<Result<Vec<_>>>()?;
        Ok(Self { ring: self.ring.clone(), gens })
    }

    pub fn check_same_ring(&self, other: &RingContext) -> Result<()> {
        if *self.ring != *other {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.to_string() });
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Display for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ">")
    }
}
