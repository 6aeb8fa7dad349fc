use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sectional::{check_level_count, SectionalMatrix};
use super::sequence::is_quasi_symmetric;
use crate::error::{Error, Result};
use crate::gin::{rgin, GinConfig};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzMode {
    Wlp,
    Slp,
}

impl fmt::Display for LefschetzMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LefschetzMode::Wlp => "wlp",
            LefschetzMode::Slp => "slp",
        })
    }
}

impl FromStr for LefschetzMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "wlp" | "weak" => Ok(LefschetzMode::Wlp),
            "slp" | "strong" => Ok(LefschetzMode::Slp),
            other => Err(Error::Precondition(format!("unknown Lefschetz mode `{other}`"))),
        }
    }
}

/// A violated rank identity: at level `level` (after quotienting by the
/// last `level` variables), multiplication by `x_{l-level}^shift` from
/// degree `source_degree` to `target_degree` leaves a cokernel of
/// dimension `lhs` where full rank would leave `rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub level: usize,
    pub source_degree: u32,
    pub target_degree: u32,
    pub shift: u32,
    pub lhs: u64,
    pub rhs: u64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} d={}->{} s={}: {} != {}",
            self.level, self.source_degree, self.target_degree, self.shift, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub mode: LefschetzMode,
    pub k: usize,
    pub holds: bool,
    /// First failure in the order level, degree, shift.
    pub witness: Option<Witness>,
    /// `x_l, x_{l-1}, ...`, `k` of them.
    pub elements: Vec<String>,
}

fn last_names(ideal: &MonomialIdeal, k: usize) -> Vec<String> {
    let names = ideal.ring().names();
    names.iter().rev().take(k).cloned().collect()
}

fn full_rank_defect(target: u64, source: u64) -> u64 {
    target.saturating_sub(source)
}

fn wlp_failure(m: &SectionalMatrix, k: usize) -> Option<Witness> {
    let l = m.num_vars();
    for j in 0..k {
        for d in 1..=m.stored_degree() {
            let lhs = m.entry(l - j - 1, d);
            let rhs = full_rank_defect(m.entry(l - j, d), m.entry(l - j, d - 1));
            if lhs != rhs {
                return Some(Witness { level: j, source_degree: d - 1, target_degree: d, shift: 1, lhs, rhs });
            }
        }
    }
    None
}

/// Runs the strong checks on `base` for levels `0..k`, with sources in
/// `0..=max_source` and shifts `1..=max_shift(d)`.
fn slp_failure(
    base: &MonomialIdeal,
    k: usize,
    max_source: u32,
    max_shift: impl Fn(u32) -> u32,
) -> Result<Option<Witness>> {
    let l = base.num_vars();
    for j in 0..k {
        let level = base.drop_last_variables(j)?;
        let last = l - j - 1;
        let top = (0..=max_source).map(|d| d + max_shift(d)).max().unwrap_or(0);
        let hf = level.hilbert_values(top);
        for d in 0..=max_source {
            for s in 1..=max_shift(d) {
                let t = d + s;
                let lhs = level.add_variable_power(last, s)?.hilbert_function(t);
                let rhs = full_rank_defect(hf[t as usize], hf[d as usize]);
                if lhs != rhs {
                    return Ok(Some(Witness { level: j, source_degree: d, target_degree: t, shift: s, lhs, rhs }));
                }
            }
        }
    }
    Ok(None)
}

fn verdict(mode: LefschetzMode, rgin: &MonomialIdeal, k: usize, witness: Option<Witness>) -> LefschetzVerdict {
    LefschetzVerdict { mode, k, holds: witness.is_none(), witness, elements: last_names(rgin, k) }
}

/// k-WLP of `S/J` with elements `x_l, ..., x_{l-k+1}`, for a strongly
/// stable `J`, read off its sectional matrix.
pub fn has_k_wlp_stable(rgin: &MonomialIdeal, k: usize) -> Result<LefschetzVerdict> {
    check_level_count(k, rgin.num_vars())?;
    let m = SectionalMatrix::from_rgin(rgin)?;
    Ok(verdict(LefschetzMode::Wlp, rgin, k, wlp_failure(&m, k)))
}

/// k-SLP of `S/J` for a strongly stable `J`, decided on its Artinian
/// closure `J + m^(reg+1)`.
pub fn has_k_slp_stable(rgin: &MonomialIdeal, k: usize) -> Result<LefschetzVerdict> {
    check_level_count(k, rgin.num_vars())?;
    let reg = rgin.regularity_stable()?.value;
    let closure = rgin.artinian_closure(reg);
    let witness = slp_failure(&closure, k, reg, |d| reg + 1 - d)?;
    Ok(verdict(LefschetzMode::Slp, rgin, k, witness))
}

/// k-SLP checks run directly on a strongly stable `J` (no Artinian
/// closure) for sources and shifts up to `window`. A bounded search: a
/// `true` verdict only covers the window.
pub fn has_k_slp_window(rgin: &MonomialIdeal, k: usize, window: u32) -> Result<LefschetzVerdict> {
    check_level_count(k, rgin.num_vars())?;
    if let Some(w) = rgin.strong_stability_witness() {
        return Err(w.into_error(rgin.ring()));
    }
    let witness = slp_failure(rgin, k, window, |_| window)?;
    Ok(verdict(LefschetzMode::Slp, rgin, k, witness))
}

pub fn has_k_wlp<C: Scalar>(ideal: &Ideal<C>, k: usize, config: &GinConfig) -> Result<LefschetzVerdict> {
    check_level_count(k, ideal.num_vars())?;
    has_k_wlp_stable(&rgin(ideal, config)?.ideal, k)
}

pub fn has_k_slp<C: Scalar>(ideal: &Ideal<C>, k: usize, config: &GinConfig) -> Result<LefschetzVerdict> {
    check_level_count(k, ideal.num_vars())?;
    has_k_slp_stable(&rgin(ideal, config)?.ideal, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub num_vars: usize,
    pub reg: u32,
    pub k_wlp_max: usize,
    pub k_slp_max: usize,
    pub wlp_witness: Option<Witness>,
    pub slp_witness: Option<Witness>,
    /// Variables certifying the largest weak level, `x_l` first.
    pub lefschetz_elements: Vec<String>,
}

impl LefschetzReport {
    pub fn from_rgin(rgin: &MonomialIdeal) -> Result<Self> {
        let l = rgin.num_vars();
        let reg = rgin.regularity_stable()?.value;
        let wlp = has_k_wlp_stable(rgin, l)?;
        let slp = has_k_slp_stable(rgin, l)?;
        let k_wlp_max = wlp.witness.as_ref().map_or(l, |w| w.level);
        let k_slp_max = slp.witness.as_ref().map_or(l, |w| w.level);
        Ok(Self {
            num_vars: l,
            reg,
            k_wlp_max,
            k_slp_max,
            wlp_witness: wlp.witness,
            slp_witness: slp.witness,
            lefschetz_elements: last_names(rgin, k_wlp_max),
        })
    }

    pub fn analyze<C: Scalar>(ideal: &Ideal<C>, config: &GinConfig) -> Result<Self> {
        Self::from_rgin(&rgin(ideal, config)?.ideal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostRevlexConclusion {
    /// l-SLP together with quasi-symmetry of rows `l-j`, `0 <= j <= l-4`.
    pub hypothesis: bool,
    pub almost_revlex: bool,
    pub rgin: MonomialIdeal,
}

fn row_is_quasi_symmetric(m: &SectionalMatrix, i: usize) -> bool {
    let mut row: Vec<u64> = (0..=m.reg).map(|d| m.entry(i, d)).collect();
    while row.last() == Some(&0) {
        row.pop();
    }
    is_quasi_symmetric(&row).unwrap_or(false)
}

/// When `S/J` has the l-SLP and the upper rows of its sectional matrix are
/// quasi-symmetric, `J` must be almost revlex; a counterexample is reported
/// as [`Error::InvariantViolation`].
pub fn almost_revlex_conclusion_stable(rgin: &MonomialIdeal) -> Result<AlmostRevlexConclusion> {
    let l = rgin.num_vars();
    let m = SectionalMatrix::from_rgin(rgin)?;
    let hypothesis = has_k_slp_stable(rgin, l)?.holds && (0..l.saturating_sub(3)).all(|j| row_is_quasi_symmetric(&m, l - j));
    let almost_revlex = rgin.is_almost_revlex();
    if hypothesis && !almost_revlex {
        return Err(Error::InvariantViolation(format!(
            "{rgin} satisfies the strong Lefschetz hypothesis but is not almost revlex"
        )));
    }
    Ok(AlmostRevlexConclusion { hypothesis, almost_revlex, rgin: rgin.clone() })
}

pub fn almost_revlex_conclusion<C: Scalar>(ideal: &Ideal<C>, config: &GinConfig) -> Result<AlmostRevlexConclusion> {
    almost_revlex_conclusion_stable(&rgin(ideal, config)?.ideal)
}
