use std::fmt;

use smallvec::SmallVec;

use super::{DegRevLex, RingContext, TermOrder};

type Exponents = SmallVec<[u32; 6]>;

/// A power-product `x_1^{a_1} ... x_l^{a_l}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn one(num_vars: usize) -> Self {
        Self { exps: SmallVec::from_elem(0, num_vars), degree: 0 }
    }

    /// `x_index^power`, zero-based index.
    pub fn var_power(num_vars: usize, index: usize, power: u32) -> Self {
        let mut exps: Exponents = SmallVec::from_elem(0, num_vars);
        exps[index] = power;
        Self { exps, degree: power }
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        Self::var_power(num_vars, index, 1)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiplies by `x_index^power`.
    pub fn mul_var(&self, index: usize, power: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[index] += power;
        m.degree += power;
        m
    }

    /// Divides by `x_index`, if it divides.
    pub fn div_var(&self, index: usize) -> Option<Monomial> {
        (self.exps[index] > 0).then(|| {
            let mut m = self.clone();
            m.exps[index] -= 1;
            m.degree -= 1;
            m
        })
    }

    /// True if some variable with zero-based index `>= first` occurs.
    pub fn involves_from(&self, first: usize) -> bool {
        self.exps[first..].iter().any(|&e| e > 0)
    }

    /// Zero-based index of the last variable that occurs.
    pub fn last_variable(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// The same power-product viewed in the ring of the first `num_vars`
    /// variables; the dropped exponents must be zero.
    pub fn truncate(&self, num_vars: usize) -> Monomial {
        debug_assert!(!self.involves_from(num_vars));
        Monomial { exps: self.exps[..num_vars].iter().copied().collect(), degree: self.degree }
    }

    /// All monomials of the given degree in `num_vars` variables, in
    /// decreasing degrevlex order.
    pub fn all_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current: Exponents = SmallVec::from_elem(0, num_vars);
        fill(&mut current, 0, degree, &mut out);
        out.sort_by(|a, b| DegRevLex::compare(b, a));
        out
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, ring }
    }
}

fn fill(current: &mut Exponents, index: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(Monomial::new(current.iter().copied()));
        current[index] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e;
        fill(current, index + 1, remaining - e, out);
    }
    current[index] = 0;
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
