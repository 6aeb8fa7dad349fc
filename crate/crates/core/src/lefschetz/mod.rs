//! Sectional matrices and the k-WLP / k-SLP decision procedures.
//!
//! Every decision runs on `J = rgin(I)` with the last variables
//! `x_l, x_{l-1}, ...` as Lefschetz elements, which turns rank questions
//! about generic linear forms into exact monomial counting.

mod decide;
mod sectional;
mod sequence;

pub use decide::{
    almost_revlex_conclusion, almost_revlex_conclusion_stable, has_k_slp, has_k_slp_stable, has_k_slp_window,
    has_k_wlp, has_k_wlp_stable, AlmostRevlexConclusion, LefschetzMode, LefschetzReport, LefschetzVerdict, Witness,
};
pub use sectional::{
    check_growth_inequality, growth_equality_mismatches, wlp_shortcut_level, GrowthCheck, SectionalMatrix,
};
pub use sequence::{is_quasi_symmetric, is_unimodal};
