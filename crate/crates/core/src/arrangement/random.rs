use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::ring::RingContext;
use crate::seed;
use crate::Rational;

const DRAWS_PER_FORM: usize = 1000;

/// Primitive representative of the line spanned by `v`, with a positive
/// first nonzero entry.
fn direction(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    v.iter().map(|&x| sign * x / g).collect()
}

/// `n` distinct central hyperplanes of `K^l` with integer coefficients in
/// `[-coeff_bound, coeff_bound]`, a pure function of the arguments.
pub fn random_central_arrangement(l: usize, n: usize, seed: u64, coeff_bound: i64) -> Result<Arrangement<Rational>> {
    if l < 2 || n < 1 || coeff_bound < 1 {
        return Err(Error::Precondition(format!(
            "need l >= 2, n >= 1 and a positive bound, got l = {l}, n = {n}, bound = {coeff_bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed::derive(seed, "arrangement", 0));
    let mut seen = HashSet::new();
    let mut rows = Vec::with_capacity(n);
    let mut draws = 0;
    while rows.len() < n {
        if draws == DRAWS_PER_FORM * n {
            return Err(Error::Generation(format!(
                "found only {} distinct hyperplanes in {draws} draws with coefficients bounded by {coeff_bound}",
                rows.len()
            )));
        }
        draws += 1;
        let v: Vec<i64> = (0..l).map(|_| rng.gen_range(-coeff_bound..=coeff_bound)).collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        if seen.insert(direction(&v)) {
            rows.push(v.into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect());
        }
    }
    Arrangement::from_matrix(Arc::new(RingContext::short(l)?), rows)
}
