use super::Arrangement;
use crate::error::{Error, Result};
use crate::gin::{rgin, GinConfig};
use crate::monomial::MonomialIdeal;
use crate::ring::{Monomial, RingContext};
use crate::scalar::Scalar;

/// Why a generic initial ideal is not the staircase of a free arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreenessViolation {
    /// A minimal generator involving a variable after the second, or a
    /// second generator with the same power of `x_1`.
    Generator(Monomial),
    /// No minimal generator of the form `x_1^a x_2^λ`.
    MissingPower { x1_exponent: u32 },
    /// Consecutive ladder exponents `λ_index`, `λ_{index+1}` differ by `gap`.
    Gap { index: usize, gap: u32 },
}

impl FreenessViolation {
    pub fn describe(&self, ring: &RingContext) -> String {
        match self {
            FreenessViolation::Generator(g) => format!("unexpected generator {}", g.display(ring)),
            FreenessViolation::MissingPower { x1_exponent } => {
                format!("no generator {}^{x1_exponent}*{}^k", ring.name(0), ring.name(1.min(ring.num_vars() - 1)))
            }
            FreenessViolation::Gap { index, gap } => format!("lambda_{} - lambda_{index} = {gap}", index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessVerdict {
    pub free: bool,
    /// `λ_1 < ... < λ_{n-1}`, so that the generators are
    /// `x_1^(n-1-i) x_2^(λ_i)` with `λ_0 = 0`. Empty unless free.
    pub ladder: Vec<u32>,
    pub violation: Option<FreenessViolation>,
    pub rgin: MonomialIdeal,
}

/// Matches `rgin(J(A))` for an arrangement of `n` hyperplanes against the
/// staircase `x_1^(n-1), x_1^(n-2) x_2^(λ_1), ..., x_2^(λ_(n-1))` with
/// steps of 1 or 2.
pub fn is_free_rgin(rgin: &MonomialIdeal, n: usize) -> FreenessVerdict {
    let verdict = |ladder: Vec<u32>, violation: Option<FreenessViolation>| FreenessVerdict {
        free: violation.is_none(),
        ladder: if violation.is_none() { ladder } else { Vec::new() },
        violation,
        rgin: rgin.clone(),
    };
    if rgin.is_unit() {
        return verdict(Vec::new(), None);
    }
    let top = n as u32 - 1;
    let mut by_x1: Vec<Option<u32>> = vec![None; n];
    for g in rgin.generators() {
        let a = g.exponent(0);
        if g.involves_from(2) || a > top || by_x1[a as usize].is_some() || g.degree() < top {
            return verdict(Vec::new(), Some(FreenessViolation::Generator(g.clone())));
        }
        by_x1[a as usize] = Some(g.degree() - a);
    }
    // Walk from x_1^(n-1) down to the pure power of x_2.
    let mut ladder = Vec::with_capacity(n);
    for a in (0..=top).rev() {
        match by_x1[a as usize] {
            Some(lambda) => ladder.push(lambda),
            None => return verdict(Vec::new(), Some(FreenessViolation::MissingPower { x1_exponent: a })),
        }
    }
    if ladder[0] != 0 {
        return verdict(Vec::new(), Some(FreenessViolation::MissingPower { x1_exponent: top }));
    }
    for (i, w) in ladder.windows(2).enumerate() {
        let gap = w[1].saturating_sub(w[0]);
        if !(1..=2).contains(&gap) {
            return verdict(Vec::new(), Some(FreenessViolation::Gap { index: i, gap }));
        }
    }
    ladder.remove(0);
    verdict(ladder, None)
}

pub fn is_free<C: Scalar>(arrangement: &Arrangement<C>, config: &GinConfig) -> Result<FreenessVerdict> {
    let gin = rgin(&arrangement.jacobian_ideal()?, config)?;
    Ok(is_free_rgin(&gin.ideal, arrangement.len()))
}

/// The structural facts every Jacobian generic initial ideal satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCheck {
    pub passed: bool,
    pub problems: Vec<String>,
}

pub fn shape_check_rgin(rgin: &MonomialIdeal, n: usize) -> ShapeCheck {
    let mut problems = Vec::new();
    if !rgin.is_unit() {
        let l = rgin.num_vars();
        let ring = rgin.ring();
        let corner = Monomial::var_power(l, 0, n as u32 - 1);
        if !rgin.generators().contains(&corner) {
            problems.push(format!("{} is not a minimal generator", corner.display(ring)));
        }
        if l >= 2 && !rgin.generators().iter().any(|g| g.exponent(1) > 0 && g.exponent(1) == g.degree()) {
            problems.push(format!("no power of {} among the generators", ring.name(1)));
        }
        for g in rgin.generators().iter().filter(|g| l >= 3 && g.exponent(0) == 0 && g.exponent(1) == 0) {
            problems.push(format!("generator {} avoids the first two variables", g.display(ring)));
        }
    }
    ShapeCheck { passed: problems.is_empty(), problems }
}

pub fn rgin_shape_check<C: Scalar>(arrangement: &Arrangement<C>, config: &GinConfig) -> Result<ShapeCheck> {
    let gin = rgin(&arrangement.jacobian_ideal()?, config)?;
    Ok(shape_check_rgin(&gin.ideal, arrangement.len()))
}

/// Compares the degrees of generators divisible by `x_3` with the first
/// power of `x_2` in the generic initial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    /// `min{d : x_2^d ∈ rgin}`; `None` when `rgin = S`.
    pub d0: Option<u32>,
    /// Minimal generators divisible by `x_3` of degree below `d0`.
    pub offenders: Vec<Monomial>,
    /// No generator is divisible by `x_3` (including `rgin = S`).
    pub vacuous: bool,
    pub holds: bool,
}

impl ConjectureReport {
    pub fn describe(&self, ring: &RingContext) -> String {
        let d0 = self.d0.map_or_else(|| "none".to_string(), |d| d.to_string());
        let offenders: Vec<String> = self.offenders.iter().map(|g| g.display(ring).to_string()).collect();
        format!("d0={d0} holds={} vacuous={} offenders=[{}]", self.holds, self.vacuous, offenders.join(", "))
    }
}

pub fn check_conjecture_rgin(rgin: &MonomialIdeal) -> Result<ConjectureReport> {
    if rgin.num_vars() < 3 {
        return Err(Error::Precondition("the conjecture concerns rings with at least three variables".into()));
    }
    if rgin.is_unit() {
        return Ok(ConjectureReport { d0: None, offenders: Vec::new(), vacuous: true, holds: true });
    }
    let d0 = rgin
        .generators()
        .iter()
        .find(|g| g.exponent(1) > 0 && g.exponent(1) == g.degree())
        .map(Monomial::degree)
        .ok_or_else(|| Error::InvariantViolation(format!("{rgin} contains no power of the second variable")))?;
    let involving: Vec<&Monomial> = rgin.generators().iter().filter(|g| g.exponent(2) > 0).collect();
    let offenders: Vec<Monomial> = involving.iter().filter(|g| g.degree() < d0).map(|g| (*g).clone()).collect();
    Ok(ConjectureReport { d0: Some(d0), vacuous: involving.is_empty(), holds: offenders.is_empty(), offenders })
}

pub fn check_conjecture<C: Scalar>(arrangement: &Arrangement<C>, config: &GinConfig) -> Result<ConjectureReport> {
    let gin = rgin(&arrangement.jacobian_ideal()?, config)?;
    check_conjecture_rgin(&gin.ideal)
}
