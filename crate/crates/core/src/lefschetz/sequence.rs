use crate::error::{Error, Result};

/// True iff the sequence weakly increases and then weakly decreases.
pub fn is_unimodal(seq: &[u64]) -> bool {
    let mut falling = false;
    for w in seq.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// With `i` the first index attaining the maximum, true iff every later
/// entry already occurs among `h_0..=h_i`.
///
/// The input must be unimodal with positive entries.
pub fn is_quasi_symmetric(seq: &[u64]) -> Result<bool> {
    if !is_unimodal(seq) {
        return Err(Error::Precondition(format!("{seq:?} is not unimodal")));
    }
    if seq.contains(&0) {
        return Err(Error::Precondition(format!("{seq:?} has a zero entry")));
    }
    let Some(&max) = seq.iter().max() else { return Ok(true) };
    let peak = seq.iter().position(|&h| h == max).unwrap();
    let prefix = &seq[..=peak];
    Ok(seq[peak + 1..].iter().all(|h| prefix.contains(h)))
}
