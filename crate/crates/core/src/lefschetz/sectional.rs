use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gin::{rgin, GinConfig};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::scalar::Scalar;

/// `M(i, d) = HF(S/(I + <l_1..l_{l-i}>), d)` for generic linear forms,
/// stored for `1 <= i <= l` and `0 <= d <= reg + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionalMatrix {
    pub reg: u32,
    /// `rows[i - 1][d]`.
    pub rows: Vec<Vec<u64>>,
}

impl SectionalMatrix {
    /// Sectional matrix of `S/I` through its generic initial ideal.
    pub fn of_ideal<C: Scalar>(ideal: &Ideal<C>, config: &GinConfig) -> Result<Self> {
        let gin = rgin(ideal, config)?;
        Self::from_rgin(&gin.ideal)
    }

    /// Sectional matrix of `S/J` for a strongly stable `J`, where the
    /// generic forms may be taken to be the last variables.
    pub fn from_rgin(rgin: &MonomialIdeal) -> Result<Self> {
        let reg = rgin.regularity_stable()?.value;
        let l = rgin.num_vars();
        let rows = (1..=l)
            .map(|i| Ok(rgin.drop_last_variables(l - i)?.hilbert_values(reg + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { reg, rows })
    }

    pub fn num_vars(&self) -> usize {
        self.rows.len()
    }

    /// Last stored column, `reg + 1`.
    pub fn stored_degree(&self) -> u32 {
        self.reg + 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i - 1]
    }

    /// `M(i, d)` for any `0 <= i <= l`, `d >= 0`.
    ///
    /// Row 0 is the quotient by all variables. Columns past the stored
    /// range follow `M(i, d) = M(i, d-1) + M(i-1, d)`, which holds because
    /// the generic initial ideal has no generators above `reg`.
    pub fn entry(&self, i: usize, d: u32) -> u64 {
        assert!(i <= self.num_vars(), "row {i} out of range");
        if i == 0 {
            return if d == 0 { self.rows.first().map_or(1, |r| r[0]) } else { 0 };
        }
        let top = self.stored_degree();
        if d <= top {
            return self.rows[i - 1][d as usize];
        }
        let mut column: Vec<u64> = self.rows.iter().map(|r| r[top as usize]).collect();
        for _ in top..d {
            let mut below = 0;
            for value in column.iter_mut() {
                *value += below;
                below = *value;
            }
        }
        column[i - 1]
    }

    /// Aligned table, one row per `i`, columns `0..=reg+1`.
    pub fn to_table(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SectionalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.num_vars()).map(|i| format!("M({i},d)")).collect();
        let label_width = labels.iter().map(String::len).max().unwrap_or(0).max(1);
        let cols = self.stored_degree() as usize + 1;
        let width = (0..cols)
            .map(|d| {
                let head = d.to_string().len();
                self.rows.iter().map(|r| r[d].to_string().len()).max().unwrap_or(0).max(head)
            })
            .collect::<Vec<_>>();
        write!(f, "{:>label_width$} |", "d")?;
        for (d, w) in width.iter().enumerate() {
            write!(f, " {d:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in labels.iter().zip(&self.rows) {
            write!(f, "{label:>label_width$} |")?;
            for (value, w) in row.iter().zip(&width) {
                write!(f, " {value:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of checking `M(i,d) - M(i,d-1) <= M(i-1,d)` for `2 <= i <= l`,
/// `1 <= d <= reg + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrowthCheck {
    /// Positions `(i, d)` where the inequality fails.
    pub violations: Vec<(usize, u32)>,
    /// Positions `(i, d)` where equality holds.
    pub tight: Vec<(usize, u32)>,
}

impl GrowthCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_growth_inequality(m: &SectionalMatrix) -> GrowthCheck {
    let mut out = GrowthCheck::default();
    for i in 2..=m.num_vars() {
        for d in 1..=m.stored_degree() {
            let lhs = m.entry(i, d) as i128 - m.entry(i, d - 1) as i128;
            let rhs = m.entry(i - 1, d) as i128;
            if lhs > rhs {
                out.violations.push((i, d));
            } else if lhs == rhs {
                out.tight.push((i, d));
            }
        }
    }
    out
}

/// Positions `(i, d)` where tightness of the growth inequality disagrees
/// with "no degree-`d` minimal generator of `rgin + <x_{i+1}..x_l>` is
/// divisible by `x_i`". Empty on correct input.
pub fn growth_equality_mismatches(m: &SectionalMatrix, rgin: &MonomialIdeal) -> Vec<(usize, u32)> {
    let check = check_growth_inequality(m);
    let mut out = Vec::new();
    for i in 2..=m.num_vars() {
        for d in 1..=m.stored_degree() {
            let tight = check.tight.contains(&(i, d));
            let divisible = rgin.generators().iter().any(|g| g.degree() == d && g.last_variable() == Some(i - 1));
            if tight == divisible {
                out.push((i, d));
            }
        }
    }
    out
}

/// Smallest `k` such that row `l-k-1` equals the first difference of row
/// `l-k` at every degree; `S/I` then has the `(k+1)`-WLP.
pub fn wlp_shortcut_level(m: &SectionalMatrix) -> Option<usize> {
    let l = m.num_vars();
    (0..l).find(|&k| {
        (1..=m.stored_degree()).all(|d| {
            m.entry(l - k - 1, d) as i128 == m.entry(l - k, d) as i128 - m.entry(l - k, d - 1) as i128
        })
    })
}

pub(crate) fn check_level_count(k: usize, l: usize) -> Result<()> {
    if k > l {
        return Err(Error::Precondition(format!("k = {k} exceeds the number of variables {l}")));
    }
    Ok(())
}
