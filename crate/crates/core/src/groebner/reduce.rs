use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{DegRevLex, Monomial, Polynomial, Term, TermOrder};
use crate::scalar::Scalar;

/// Monomial keyed by degrevlex, so that `BTreeMap::pop_last` yields the
/// leading term.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Key(pub Monomial);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        DegRevLex::compare(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Workspace<C> = BTreeMap<Key, C>;

/// `work -= factor * mono * g`, skipping the leading term of `g` (which the
/// caller has already cancelled).
pub(crate) fn subtract_tail<C: Scalar>(work: &mut Workspace<C>, factor: &C, mono: &Monomial, g: &Polynomial<C>) {
    for t in &g.terms()[1..] {
        let mut delta = t.coeff.clone();
        delta *= factor;
        let key = Key(t.mono.mul(mono));
        match work.get_mut(&key) {
            Some(c) => {
                *c -= &delta;
                if c.is_zero() {
                    work.remove(&key);
                }
            }
            None => {
                work.insert(key, -delta);
            }
        }
    }
}

/// A set of reducers ordered by increasing leading monomial, so the first
/// divisor found is the degrevlex-smallest one.
pub(crate) struct Reducers<'a, C> {
    polys: Vec<&'a Polynomial<C>>,
}

impl<'a, C: Scalar> Reducers<'a, C> {
    pub fn new(polys: impl IntoIterator<Item = &'a Polynomial<C>>) -> Self {
        let mut polys: Vec<&Polynomial<C>> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        polys.sort_by(|a, b| DegRevLex::compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        Self { polys }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial<C>> {
        let deg = m.degree();
        self.polys.iter().take_while(|g| g.degree().unwrap() <= deg).find(|g| g.leading_monomial().unwrap().divides(m)).copied()
    }

    /// Fully reduces the polynomial held in `work`.
    pub fn reduce(&self, num_vars: usize, mut work: Workspace<C>) -> Polynomial<C> {
        let mut rem: Vec<Term<C>> = Vec::new();
        while let Some((Key(mono), coeff)) = work.pop_last() {
            match self.find(&mono) {
                Some(g) => {
                    let (lc, lm) = g.leading_term().expect("nonzero reducer");
                    let q = mono.div(lm).expect("divides");
                    let factor = if lc.is_one() { coeff } else { coeff / lc.clone() };
                    subtract_tail(&mut work, &factor, &q, g);
                }
                None => rem.push(Term { coeff, mono }),
            }
        }
        Polynomial::from_sorted_terms(num_vars, rem)
    }
}

pub(crate) fn workspace_of<C: Scalar>(f: &Polynomial<C>) -> Workspace<C> {
    f.terms().iter().map(|t| (Key(t.mono.clone()), t.coeff.clone())).collect()
}

/// Remainder of `f` on division by `divisors`: `f - r` lies in the ideal
/// they generate and no term of `r` is divisible by a leading monomial.
///
/// Each term is reduced by the divisor with the degrevlex-smallest leading
/// monomial dividing it.
pub fn normal_form<C: Scalar>(f: &Polynomial<C>, divisors: &[Polynomial<C>]) -> Result<Polynomial<C>> {
    if let Some(bad) = divisors.iter().find(|g| g.num_vars() != f.num_vars()) {
        return Err(Error::DimensionMismatch { expected: f.num_vars(), found: bad.num_vars() });
    }
    Ok(Reducers::new(divisors).reduce(f.num_vars(), workspace_of(f)))
}
