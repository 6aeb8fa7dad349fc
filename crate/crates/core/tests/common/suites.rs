//! The randomized property suites. Each takes an instance count and a
//! seed, and returns a one-line summary or the first counterexample.

use klp_core::arrangement::{
    is_free_rgin, random_central_arrangement, shape_check_rgin, FreenessVerdict,
};
use klp_core::lefschetz::{
    check_growth_inequality, growth_equality_mismatches, has_k_slp_stable, has_k_slp_window, is_unimodal,
};
use klp_core::seed::derive;
use klp_core::{rgin, GinConfig, MonomialIdeal, QIdeal, SectionalMatrix};
use rand::Rng;

use super::*;

pub type SuiteResult = Result<String, String>;
pub type Suite = fn(usize, u64) -> SuiteResult;

fn gin(ideal: &QIdeal, seed: u64) -> Result<MonomialIdeal, String> {
    rgin(ideal, &GinConfig::with_seed(seed)).map(|g| g.ideal).map_err(|e| format!("{ideal}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// (a) `HF(S/I, d) = HF(S/rgin(I), d)` for `d <= reg + 2`, with the left
/// side from a rank computation.
pub fn hilbert_function_preserved(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    for k in 0..count {
        let l = r.gen_range(2..=3);
        let i = random_homogeneous_ideal(&mut r, l, 3, 3);
        let j = gin(&i, derive(seed, "a", k as u64))?;
        let reg = j.max_generator_degree();
        for d in 0..=reg + 2 {
            let lhs = hilbert_function_by_rank(&i, d);
            let rhs = j.hilbert_function(d);
            ensure(lhs == rhs, || format!("{i}: HF({d}) = {lhs} but rgin {j} gives {rhs}"))?;
        }
    }
    Ok(format!("{count} ideals"))
}

/// (b) rgin is strongly stable, and fixes strongly stable ideals.
pub fn rgin_stable_and_idempotent(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    for k in 0..count {
        let l = r.gen_range(2..=3);
        let i = random_homogeneous_ideal(&mut r, l, 3, 3);
        let j = gin(&i, derive(seed, "b", k as u64))?;
        ensure(j.is_strongly_stable(), || format!("rgin({i}) = {j} is not strongly stable"))?;
        let again = gin(&as_polynomial_ideal(&j), derive(seed, "b-again", k as u64))?;
        ensure(again == j, || format!("rgin({j}) = {again}"))?;
        let s = random_strongly_stable(&mut r, l, 3, 4);
        let fixed = gin(&as_polynomial_ideal(&s), derive(seed, "b-stable", k as u64))?;
        ensure(fixed == s, || format!("rgin({s}) = {fixed}"))?;
    }
    Ok(format!("{count} ideals"))
}

/// (c) almost revlex ideals are strongly stable.
pub fn almost_revlex_is_stable(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    let mut checked = 0;
    while checked < count {
        let l = r.gen_range(2..=3);
        let i = random_almost_revlex(&mut r, l, 5);
        if !i.is_almost_revlex() {
            return Err(format!("segment ideal {i} is not almost revlex"));
        }
        ensure(i.is_strongly_stable(), || format!("{i} is almost revlex but not strongly stable"))?;
        checked += 1;
    }
    // Also filter arbitrary monomial ideals through the predicate.
    let mut hits = 0;
    for _ in 0..count * 10 {
        let i = random_monomial_ideal(&mut r, 3, 4, 3);
        if i.is_almost_revlex() {
            hits += 1;
            ensure(i.is_strongly_stable(), || format!("{i} is almost revlex but not strongly stable"))?;
        }
    }
    Ok(format!("{count} segment ideals, {hits} filtered"))
}

/// (d) every homogeneous ideal in two variables has the 2-SLP.
pub fn two_variables_have_slp(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    for k in 0..count {
        let i = random_homogeneous_ideal(&mut r, 2, 3, 4);
        let j = gin(&i, derive(seed, "d", k as u64))?;
        let v = has_k_slp_stable(&j, 2).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("{i}: rgin {j} fails 2-SLP at {:?}", v.witness))?;
    }
    Ok(format!("{count} ideals"))
}

/// (e) in three variables, 1-SLP and 3-SLP agree (and likewise WLP).
pub fn slp_low_level_implies_full(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    let mut with_slp = 0;
    for k in 0..count {
        let i = match k % 4 {
            0 => random_homogeneous_ideal(&mut r, 3, 3, 3),
            1 => as_polynomial_ideal(&random_monomial_ideal(&mut r, 3, 7, 3)),
            _ => as_polynomial_ideal(&random_artinian_monomial(&mut r, 3, 5)),
        };
        let j = gin(&i, derive(seed, "e", k as u64))?;
        let one = has_k_slp_stable(&j, 1).map_err(|e| e.to_string())?.holds;
        let three = has_k_slp_stable(&j, 3).map_err(|e| e.to_string())?.holds;
        ensure(one == three, || format!("{i}: 1-SLP {one} but 3-SLP {three}"))?;
        let w1 = klp_core::lefschetz::has_k_wlp_stable(&j, 1).map_err(|e| e.to_string())?.holds;
        let w3 = klp_core::lefschetz::has_k_wlp_stable(&j, 3).map_err(|e| e.to_string())?.holds;
        ensure(w1 == w3, || format!("{i}: 1-WLP {w1} but 3-WLP {w3}"))?;
        with_slp += usize::from(one);
    }
    Ok(format!("{count} ideals, {with_slp} with SLP"))
}

/// (f) k-SLP of `S/I` and of `S/Î` agree, where the first is checked on a
/// window of `rgin(I)` without closing it up and the second on
/// `rgin(I + m^(reg+1))` computed from scratch. Random monomial ideals
/// are kept to `reg <= 4`; the Artinian family, where the property
/// actually fails, to `reg <= 6`.
pub fn artinian_closure_agrees(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    let mut done = 0;
    let mut attempts = 0u64;
    let mut failing = 0;
    while done < count {
        attempts += 1;
        let artinian = attempts % 2 == 1;
        let i = if artinian { random_artinian_monomial(&mut r, 3, 3) } else { random_monomial_ideal(&mut r, 3, 7, 3) };
        let j = gin(&as_polynomial_ideal(&i), derive(seed, "f", attempts))?;
        let reg = j.max_generator_degree();
        if reg > if artinian { 6 } else { 4 } {
            continue;
        }
        let closed_input = as_polynomial_ideal(&i.artinian_closure(reg));
        let j_hat = gin(&closed_input, derive(seed, "f-hat", attempts))?;
        failing += usize::from(!has_k_slp_stable(&j, 3).map_err(|e| e.to_string())?.holds);
        for k in 0..=3 {
            let direct = has_k_slp_window(&j, k, 2 * reg + 2).map_err(|e| e.to_string())?.holds;
            let via_closure = has_k_slp_stable(&j_hat, k).map_err(|e| e.to_string())?.holds;
            let library = has_k_slp_stable(&j, k).map_err(|e| e.to_string())?.holds;
            if direct != via_closure || library != via_closure {
                return Err(format!(
                    "{i} (rgin {j}, closure rgin {j_hat}), k = {k}: window {direct}, closure {via_closure}, library {library}"
                ));
            }
        }
        done += 1;
    }
    Ok(format!("{count} ideals in {attempts} draws, {failing} without 3-SLP"))
}

/// (g) growth inequality, with equality exactly where no generator of the
/// right degree ends in `x_i`.
pub fn growth_inequality(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    for k in 0..count {
        let l = r.gen_range(2..=3);
        let i = random_homogeneous_ideal(&mut r, l, 3, 3);
        let j = gin(&i, derive(seed, "g", k as u64))?;
        let m = SectionalMatrix::from_rgin(&j).map_err(|e| e.to_string())?;
        let check = check_growth_inequality(&m);
        ensure(check.holds(), || format!("{i}: growth violated at {:?}", check.violations))?;
        let mismatches = growth_equality_mismatches(&m, &j);
        ensure(mismatches.is_empty(), || format!("{i}: equality mismatch at {mismatches:?} for rgin {j}"))?;
        ensure(m.row(l) == j.hilbert_values(m.stored_degree()).as_slice(), || format!("{i}: last row is not HF"))?;
    }
    Ok(format!("{count} ideals"))
}

/// (h) rows `l - j`, `j < k`, are unimodal when the k-SLP holds.
pub fn slp_rows_unimodal(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    let mut with_slp = 0;
    for k in 0..count {
        let l = r.gen_range(2..=3);
        let i = if k % 2 == 0 {
            random_homogeneous_ideal(&mut r, l, 3, 3)
        } else {
            as_polynomial_ideal(&random_almost_revlex(&mut r, l, 4))
        };
        let j = gin(&i, derive(seed, "h", k as u64))?;
        let m = SectionalMatrix::from_rgin(&j).map_err(|e| e.to_string())?;
        for kk in 1..=l {
            if !has_k_slp_stable(&j, kk).map_err(|e| e.to_string())?.holds {
                break;
            }
            with_slp += 1;
            for level in 0..kk {
                let row = m.row(l - level);
                ensure(is_unimodal(row), || format!("{i}: {kk}-SLP but row {} = {row:?}", l - level))?;
            }
        }
    }
    Ok(format!("{count} ideals, {with_slp} SLP levels"))
}

/// (i) the structural shape of Jacobian generic initial ideals.
pub fn arrangement_shape(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    for k in 0..count {
        let l = r.gen_range(2..=3);
        let n = r.gen_range(1..=6);
        let a = random_central_arrangement(l, n, derive(seed, "i", k as u64), 5).map_err(|e| e.to_string())?;
        let j = gin(&a.jacobian_ideal().map_err(|e| e.to_string())?, derive(seed, "i-gin", k as u64))?;
        let shape = shape_check_rgin(&j, n);
        ensure(shape.passed, || format!("{a}: {:?}", shape.problems))?;
    }
    Ok(format!("{count} arrangements"))
}

/// (j) free arrangements have the l-SLP.
pub fn free_arrangements_have_slp(count: usize, seed: u64) -> SuiteResult {
    let mut r = rng(seed);
    let mut free = 0;
    let mut sampled = 0u64;
    while free < count {
        sampled += 1;
        if sampled > 50 * count as u64 {
            return Err(format!("only {free} free arrangements in {sampled} samples"));
        }
        let l = r.gen_range(2..=3);
        let n = if l == 2 { r.gen_range(1..=6) } else { r.gen_range(1..=4) };
        let a = random_central_arrangement(l, n, derive(seed, "j", sampled), 3).map_err(|e| e.to_string())?;
        let j = gin(&a.jacobian_ideal().map_err(|e| e.to_string())?, derive(seed, "j-gin", sampled))?;
        let verdict: FreenessVerdict = is_free_rgin(&j, a.len());
        if !verdict.free {
            continue;
        }
        free += 1;
        let v = has_k_slp_stable(&j, l).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("free arrangement {a} fails {l}-SLP at {:?}", v.witness))?;
    }
    Ok(format!("{count} free arrangements out of {sampled} samples"))
}

pub const ALL: [(&str, Suite); 10] = [
    ("a HF(I) = HF(rgin I)", hilbert_function_preserved),
    ("b rgin stable + idempotent", rgin_stable_and_idempotent),
    ("c almost revlex => stable", almost_revlex_is_stable),
    ("d 2 variables => 2-SLP", two_variables_have_slp),
    ("e (l-2)-SLP <=> l-SLP", slp_low_level_implies_full),
    ("f k-SLP(I) <=> k-SLP(I^)", artinian_closure_agrees),
    ("g growth inequality", growth_inequality),
    ("h SLP rows unimodal", slp_rows_unimodal),
    ("i arrangement rgin shape", arrangement_shape),
    ("j free => l-SLP", free_arrangements_have_slp),
];
