use std::collections::HashMap;
use std::fmt;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::{DegRevLex, Monomial, RingContext, TermOrder};

/// A generator `t` with `x_j | t` but `x_i t / x_j` outside the ideal
/// (`i < j`, zero-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityWitness {
    pub generator: Monomial,
    pub i: usize,
    pub j: usize,
}

impl StabilityWitness {
    pub fn exchanged(&self) -> Monomial {
        self.generator.div_var(self.j).expect("x_j divides the generator").mul_var(self.i, 1)
    }

    pub(crate) fn into_error(self, ring: &RingContext) -> Error {
        Error::NotStronglyStable { generator: self.generator.display(ring).to_string(), i: self.i + 1, j: self.j + 1 }
    }
}

/// A minimal generator `t` and a same-degree monomial `t' > t` outside the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostRevlexWitness {
    pub generator: Monomial,
    pub missing: Monomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularitySource {
    StableMaxDegree,
    ViaRgin,
}

/// Castelnuovo–Mumford regularity together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RegularityCertificate {
    pub value: u32,
    pub source: RegularitySource,
}

impl fmt::Display for RegularityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl MonomialIdeal {
    /// Minimal generators in increasing degrevlex order, the scan order of
    /// the witness searches.
    fn scan_order(&self) -> Vec<&Monomial> {
        let mut gens: Vec<&Monomial> = self.generators().iter().collect();
        gens.sort_by(|a, b| DegRevLex::compare(a, b));
        gens
    }

    /// First failure of strong stability, scanning generators in increasing
    /// degrevlex order, then `j` ascending, then `i` ascending.
    pub fn strong_stability_witness(&self) -> Option<StabilityWitness> {
        for t in self.scan_order() {
            for j in 1..self.num_vars() {
                let Some(quotient) = t.div_var(j) else { continue };
                for i in 0..j {
                    if !self.contains(&quotient.mul_var(i, 1)) {
                        return Some(StabilityWitness { generator: t.clone(), i, j });
                    }
                }
            }
        }
        None
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strong_stability_witness().is_none()
    }

    /// First failure of the almost revlex condition, scanning generators in
    /// increasing degrevlex order and candidates `t'` from the top of the
    /// degree.
    pub fn almost_revlex_witness(&self) -> Option<AlmostRevlexWitness> {
        let mut by_degree: HashMap<u32, Vec<Monomial>> = HashMap::new();
        for t in self.scan_order() {
            let candidates = by_degree.entry(t.degree()).or_insert_with(|| Monomial::all_of_degree(self.num_vars(), t.degree()));
            for bigger in candidates.iter().take_while(|m| DegRevLex::compare(m, t).is_gt()) {
                if !self.contains(bigger) {
                    return Some(AlmostRevlexWitness { generator: t.clone(), missing: bigger.clone() });
                }
            }
        }
        None
    }

    pub fn is_almost_revlex(&self) -> bool {
        self.almost_revlex_witness().is_none()
    }

    /// Regularity of a strongly stable ideal: the highest degree of a
    /// minimal generator (0 for the zero and unit ideals).
    pub fn regularity_stable(&self) -> Result<RegularityCertificate> {
        if let Some(w) = self.strong_stability_witness() {
            return Err(w.into_error(self.ring()));
        }
        Ok(RegularityCertificate { value: self.max_generator_degree(), source: RegularitySource::StableMaxDegree })
    }
}
