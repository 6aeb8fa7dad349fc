use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{DegRevLex, LinearChange, Monomial, RingContext, TermOrder};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Monomial,
}

/// A polynomial in `num_vars` variables with terms kept strictly decreasing
/// in degrevlex and no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    num_vars: usize,
    terms: Vec<Term<C>>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: Vec::new() }
    }

    pub fn constant(num_vars: usize, c: C) -> Self {
        Self::monomial(c, Monomial::one(num_vars))
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, C::one())
    }

    pub fn monomial(coeff: C, mono: Monomial) -> Self {
        let num_vars = mono.num_vars();
        if coeff.is_zero() {
            return Self::zero(num_vars);
        }
        Self { num_vars, terms: vec![Term { coeff, mono }] }
    }

    /// The variable `x_{index+1}`.
    pub fn var(num_vars: usize, index: usize) -> Self {
        Self::monomial(C::one(), Monomial::var(num_vars, index))
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (C, Monomial)>) -> Result<Self> {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (c, m) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, found: m.num_vars() });
            }
            *acc.entry(m).or_insert_with(C::zero) += &c;
        }
        Ok(Self::from_map(num_vars, acc))
    }

    fn from_map(num_vars: usize, acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<Term<C>> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(mono, coeff)| Term { coeff, mono }).collect();
        terms.sort_by(|a, b| DegRevLex::compare(&b.mono, &a.mono));
        Self { num_vars, terms }
    }

    /// Wraps terms that already satisfy the ordering invariant.
    pub(crate) fn from_sorted_terms(num_vars: usize, terms: Vec<Term<C>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| DegRevLex::compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Self { num_vars, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degrevlex-largest term.
    pub fn leading_term(&self) -> Result<(&C, &Monomial)> {
        self.terms.first().map(|t| (&t.coeff, &t.mono)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree of the leading monomial, which is the maximal degree.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    /// True iff all monomials share one total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(lead) => self.terms.iter().all(|t| t.mono.degree() == lead.mono.degree()),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: other.num_vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let signed = |c: &C| if subtract { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match DegRevLex::compare(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: signed(&b.coeff), mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a.coeff.clone();
                    if subtract {
                        c -= &b.coeff;
                    } else {
                        c += &b.coeff;
                    }
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|b| Term { coeff: signed(&b.coeff), mono: b.mono.clone() }));
        Self { num_vars: self.num_vars, terms: out }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.num_vars));
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut c = a.coeff.clone();
                c *= &b.coeff;
                *acc.entry(a.mono.mul(&b.mono)).or_insert_with(C::zero) += &c;
            }
        }
        Ok(Self::from_map(self.num_vars, acc))
    }

    /// Multiplies by the single term `coeff * mono`, which preserves order.
    pub fn mul_term(&self, coeff: &C, mono: &Monomial) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.num_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut c = t.coeff.clone();
                c *= coeff;
                Term { coeff: c, mono: t.mono.mul(mono) }
            })
            .collect();
        Self { num_vars: self.num_vars, terms }
    }

    pub fn scale(&self, coeff: &C) -> Self {
        self.mul_term(coeff, &Monomial::one(self.num_vars))
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = C::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.num_vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the zero-based variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Self> {
        if index >= self.num_vars {
            return Err(Error::VariableOutOfRange { index, num_vars: self.num_vars });
        }
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.mono.exponent(index);
            (e > 0).then(|| {
                let mut c = t.coeff.clone();
                c *= &C::from_u32(e).expect("exponent fits in the field");
                let mut exps = t.mono.exponents().to_vec();
                exps[index] -= 1;
                (c, Monomial::new(exps))
            })
        });
        Self::from_terms(self.num_vars, terms)
    }

    /// Applies the substitution `x_i -> sum_j g[i][j] x_j`.
    pub fn apply_linear_change(&self, change: &LinearChange<C>) -> Result<Self> {
        if change.dim() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: change.dim() });
        }
        let images: Vec<Self> = (0..self.num_vars).map(|i| change.image_of_variable(i)).collect();
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(self.num_vars), p.clone()]).collect();
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for t in &self.terms {
            let mut prod = Self::constant(self.num_vars, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e as usize];
            }
            for term in prod.terms {
                *acc.entry(term.mono).or_insert_with(C::zero) += &term.coeff;
            }
        }
        Ok(Self::from_map(self.num_vars, acc))
    }

    /// Renders with the variable names of `ring`.
    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        PolynomialDisplay { poly: self, ring }
    }
}

struct PolynomialDisplay<'a, C> {
    poly: &'a Polynomial<C>,
    ring: &'a RingContext,
}

impl<C: Scalar> fmt::Display for PolynomialDisplay<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono.display(self.ring))?;
            } else {
                write!(f, "{abs}*{}", t.mono.display(self.ring))?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    /// Panics on a variable-count mismatch; see [`Polynomial::checked_add`].
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}
