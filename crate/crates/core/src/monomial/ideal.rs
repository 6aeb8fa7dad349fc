use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{parse, presentation_order, DegRevLex, Monomial, RingContext, TermOrder};

/// Removes every monomial divisible by another one of the set, and returns
/// the survivors in [`presentation_order`].
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    all.sort_by(DegRevLex::compare);
    all.dedup();
    // increasing degree, so a divisor always precedes its multiples
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(presentation_order);
    kept
}

/// A monomial ideal of `S`, stored by its minimal generators.
///
/// No generators encodes the zero ideal; the single generator `1` encodes `S`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Arc<RingContext>, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|m| m.num_vars() != ring.num_vars()) {
            return Err(Error::DimensionMismatch { expected: ring.num_vars(), found: bad.num_vars() });
        }
        Ok(Self { ring, gens: minimalize(gens) })
    }

    pub(crate) fn from_minimal(ring: Arc<RingContext>, gens: Vec<Monomial>) -> Self {
        debug_assert_eq!(gens, minimalize(gens.clone()));
        Self { ring, gens }
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<RingContext>) -> Self {
        let one = Monomial::one(ring.num_vars());
        Self { ring, gens: vec![one] }
    }

    /// The power `m^d` of the maximal ideal.
    pub fn maximal_power(ring: Arc<RingContext>, degree: u32) -> Self {
        let gens = minimalize(Monomial::all_of_degree(ring.num_vars(), degree));
        Self { ring, gens }
    }

    /// Parses a comma-separated list of monomials, e.g. `x^2, x*y, y^2, x*z`.
    /// An empty string or `0` gives the zero ideal.
    pub fn parse(text: &str, ring: Arc<RingContext>) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Self::zero(ring));
        }
        let gens = trimmed.split(',').map(|piece| parse::parse_monomial(piece, &ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    /// Minimal generators in [`presentation_order`].
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, t: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    /// Highest degree of a minimal generator (0 for the zero ideal).
    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when some power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        (0..self.num_vars()).all(|i| self.gens.iter().any(|g| g.exponent(i) == g.degree()))
    }

    /// `I + <m>`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> Self {
        Self { ring: self.ring.clone(), gens: minimalize(self.gens.iter().cloned().chain(extra)) }
    }

    /// `I + m^(reg+1)`.
    pub fn artinian_closure(&self, reg: u32) -> Self {
        self.with_generators(Monomial::all_of_degree(self.num_vars(), reg + 1))
    }

    /// `I + <x_index^power>`, with a zero-based variable index.
    pub fn add_variable_power(&self, index: usize, power: u32) -> Result<Self> {
        if index >= self.num_vars() {
            return Err(Error::VariableOutOfRange { index, num_vars: self.num_vars() });
        }
        if power == 0 {
            return Err(Error::Precondition("the power of the variable must be positive".into()));
        }
        Ok(self.with_generators([Monomial::var_power(self.num_vars(), index, power)]))
    }

    /// The ideal of `K[x_1..x_{l-count}]` generated by the minimal generators
    /// that avoid the last `count` variables, so that
    /// `S/(I + <x_l, ..., x_{l-count+1}>)` is its quotient ring.
    ///
    /// Requires a strongly stable ideal.
    pub fn restrict_drop_last(&self, count: usize) -> Result<Self> {
        if let Some(w) = self.strong_stability_witness() {
            return Err(w.into_error(&self.ring));
        }
        self.drop_last_variables(count)
    }

    /// [`MonomialIdeal::restrict_drop_last`] without the stability check.
    pub fn drop_last_variables(&self, count: usize) -> Result<Self> {
        let l = self.num_vars();
        if count >= l {
            return Err(Error::Precondition(format!("cannot drop {count} of {l} variables")));
        }
        let keep = l - count;
        let ring = Arc::new(self.ring.prefix(keep)?);
        let gens = self.gens.iter().filter(|g| !g.involves_from(keep)).map(|g| g.truncate(keep)).collect();
        Ok(Self::from_minimal(ring, gens))
    }

    /// Same ideal, different variable names (same count).
    pub fn with_ring(&self, ring: Arc<RingContext>) -> Result<Self> {
        if ring.num_vars() != self.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.num_vars(), found: ring.num_vars() });
        }
        Ok(Self { ring, gens: self.gens.clone() })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "<0>");
        }
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

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}
