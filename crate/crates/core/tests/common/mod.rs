//! Random inputs and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod suites;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use klp_core::{Monomial, MonomialIdeal, Polynomial, QIdeal, QPolynomial, Rational, RingContext};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ring(l: usize) -> Arc<RingContext> {
    Arc::new(RingContext::short(l).unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ideal(l: usize, text: &str) -> QIdeal {
    QIdeal::parse(text, ring(l)).unwrap()
}

pub fn monomial_ideal(l: usize, text: &str) -> MonomialIdeal {
    MonomialIdeal::parse(text, ring(l)).unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, l: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; l];
    for _ in 0..degree {
        exps[rng.gen_range(0..l)] += 1;
    }
    Monomial::new(exps)
}

/// A nonzero homogeneous polynomial with up to `max_terms` terms and small
/// integer coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, l: usize, degree: u32, max_terms: usize) -> QPolynomial {
    loop {
        let terms: Vec<(Rational, Monomial)> = (0..rng.gen_range(1..=max_terms))
            .map(|_| {
                let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (q(c), random_monomial(rng, l, degree))
            })
            .collect();
        let p = Polynomial::from_terms(l, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, l: usize, max_gens: usize, max_degree: u32) -> QIdeal {
    let gens: Vec<QPolynomial> = (0..rng.gen_range(1..=max_gens))
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            random_form(rng, l, d, 4)
        })
        .collect();
    QIdeal::new(ring(l), gens).unwrap()
}

pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, l: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..rng.gen_range(1..=max_gens))
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            random_monomial(rng, l, d)
        })
        .collect();
    MonomialIdeal::new(ring(l), gens).unwrap()
}

/// Pure powers of every variable plus a few monomials in at least two
/// variables, e.g. `<x^3, y^3, z^3, x*y*z>`. A family in which Lefschetz
/// properties often fail.
pub fn random_artinian_monomial(rng: &mut ChaCha8Rng, l: usize, max_power: u32) -> MonomialIdeal {
    let a = rng.gen_range(2..=max_power);
    let mut gens: Vec<Monomial> = (0..l).map(|i| Monomial::var_power(l, i, a)).collect();
    for _ in 0..rng.gen_range(1..=2) {
        loop {
            let d = rng.gen_range(a.saturating_sub(1).max(2)..=a);
            let m = random_monomial(rng, l, d);
            if m.exponents().iter().filter(|&&e| e > 0).count() >= 2 {
                gens.push(m);
                break;
            }
        }
    }
    MonomialIdeal::new(ring(l), gens).unwrap()
}

/// Smallest strongly stable ideal containing `gens`, by closing under
/// `x_j -> x_i` for `i < j`.
pub fn borel_closure(l: usize, gens: Vec<Monomial>) -> MonomialIdeal {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack = gens;
    let mut all = Vec::new();
    while let Some(t) = stack.pop() {
        if !seen.insert(t.exponents().to_vec()) {
            continue;
        }
        for j in 1..l {
            if t.exponent(j) == 0 {
                continue;
            }
            for i in 0..j {
                stack.push(t.div_var(j).unwrap().mul_var(i, 1));
            }
        }
        all.push(t);
    }
    MonomialIdeal::new(ring(l), all).unwrap()
}

pub fn random_strongly_stable(rng: &mut ChaCha8Rng, l: usize, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    borel_closure(l, random_monomial_ideal(rng, l, max_gens, max_degree).generators().to_vec())
}

/// Generated, degree by degree, by an initial degrevlex segment of the
/// monomials of that degree; such ideals are almost revlex.
pub fn random_almost_revlex(rng: &mut ChaCha8Rng, l: usize, max_degree: u32) -> MonomialIdeal {
    let mut gens = Vec::new();
    for d in 1..=max_degree {
        let all = Monomial::all_of_degree(l, d);
        let take = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..=all.len()) };
        gens.extend(all.into_iter().take(take));
    }
    MonomialIdeal::new(ring(l), gens).unwrap()
}

pub fn as_polynomial_ideal(ideal: &MonomialIdeal) -> QIdeal {
    let gens = ideal.generators().iter().map(|g| Polynomial::monomial(Rational::one(), g.clone()));
    QIdeal::new(ideal.ring().clone(), gens).unwrap()
}

/// Rank of a list of sparse rows by Gaussian elimination.
pub fn rank(mut rows: Vec<HashMap<usize, Rational>>) -> usize {
    let mut rank = 0;
    let mut pivots: Vec<(usize, HashMap<usize, Rational>)> = Vec::new();
    for row in rows.iter_mut() {
        for (col, pivot) in &pivots {
            if let Some(c) = row.get(col).cloned() {
                for (k, v) in pivot {
                    let e = row.entry(*k).or_insert_with(Rational::zero);
                    *e -= &c * v;
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if let Some((&col, lead)) = row.iter().min_by_key(|(k, _)| **k) {
            let inv = lead.recip();
            let normalized: HashMap<usize, Rational> = row.iter().map(|(k, v)| (*k, v * &inv)).collect();
            pivots.push((col, normalized));
            rank += 1;
        }
    }
    rank
}

/// `dim_K (S/I)_d` from the rank of the multiples of the generators in
/// degree `d`, with no Gröbner basis involved.
pub fn hilbert_function_by_rank(ideal: &QIdeal, d: u32) -> u64 {
    let l = ideal.num_vars();
    let basis = Monomial::all_of_degree(l, d);
    let index: HashMap<Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m.exponents().to_vec(), i)).collect();
    let mut rows = Vec::new();
    for f in ideal.generators() {
        let e = f.degree().unwrap();
        if e > d {
            continue;
        }
        for m in Monomial::all_of_degree(l, d - e) {
            let row: HashMap<usize, Rational> =
                f.terms().iter().map(|t| (index[t.mono.mul(&m).exponents()], t.coeff.clone())).collect();
            rows.push(row);
        }
    }
    (basis.len() - rank(rows)) as u64
}

/// The hyperplanes `x_i` and `x_i - x_j`, a free arrangement.
pub fn braid(l: usize) -> klp_core::QArrangement {
    let names = ring(l);
    let mut lines = vec![format!("vars: {}", names.names().join(","))];
    for i in 0..l {
        lines.push(names.name(i).to_string());
        for j in i + 1..l {
            lines.push(format!("{} - {}", names.name(i), names.name(j)));
        }
    }
    klp_core::QArrangement::parse(&lines.join("\n")).unwrap()
}
