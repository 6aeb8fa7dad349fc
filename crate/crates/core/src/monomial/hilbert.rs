//! Hilbert function of `S/I` for a monomial ideal `I`.

use std::collections::HashMap;

use super::MonomialIdeal;
use crate::ring::Monomial;

/// Counts the degree-`d` monomials outside `I` by listing them.
pub fn hilbert_function_enumerate(ideal: &MonomialIdeal, degree: u32) -> u64 {
    Monomial::all_of_degree(ideal.num_vars(), degree).iter().filter(|m| !ideal.contains(m)).count() as u64
}

type Gens = Vec<Vec<u32>>;

/// Splits on the exponent `e` of the last variable: a monomial `u * x_l^e`
/// (with `u` free of `x_l`) avoids `I` iff `u` avoids the ideal generated by
/// the generators whose `x_l`-exponent is at most `e`, with `x_l` erased.
struct Splitter {
    memo: HashMap<(Gens, u32), u64>,
}

impl Splitter {
    fn count(&mut self, gens: &Gens, num_vars: usize, degree: u32) -> u64 {
        if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
            return 0;
        }
        match num_vars {
            0 => return u64::from(degree == 0),
            1 => return u64::from(gens.iter().all(|g| g[0] > degree)),
            _ => {}
        }
        if gens.is_empty() {
            return binomial(degree as u64 + num_vars as u64 - 1, num_vars as u64 - 1);
        }
        let key = (gens.clone(), degree);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let last = num_vars - 1;
        let mut total = 0;
        for e in 0..=degree {
            let slice: Gens = minimal(gens.iter().filter(|g| g[last] <= e).map(|g| g[..last].to_vec()).collect());
            total += self.count(&slice, last, degree - e);
        }
        self.memo.insert(key, total);
        total
    }
}

fn minimal(mut gens: Gens) -> Gens {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Gens = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.iter().zip(&g).all(|(a, b)| a <= b)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts by recursive splitting on the last variable, with memoization.
pub fn hilbert_function_recursive(ideal: &MonomialIdeal, degree: u32) -> u64 {
    let gens: Gens = minimal(ideal.generators().iter().map(|g| g.exponents().to_vec()).collect());
    Splitter { memo: HashMap::new() }.count(&gens, ideal.num_vars(), degree)
}

impl MonomialIdeal {
    /// `HF(S/I, d)`: the number of degree-`d` monomials not in `I`.
    pub fn hilbert_function(&self, degree: u32) -> u64 {
        if self.num_vars() <= 3 {
            hilbert_function_enumerate(self, degree)
        } else {
            hilbert_function_recursive(self, degree)
        }
    }

    /// `HF(S/I, d)` for `d = 0..=max_degree`.
    pub fn hilbert_values(&self, max_degree: u32) -> Vec<u64> {
        if self.num_vars() <= 3 {
            return (0..=max_degree).map(|d| hilbert_function_enumerate(self, d)).collect();
        }
        let gens: Gens = minimal(self.generators().iter().map(|g| g.exponents().to_vec()).collect());
        let mut splitter = Splitter { memo: HashMap::new() };
        (0..=max_degree).map(|d| splitter.count(&gens, self.num_vars(), d)).collect()
    }
}
