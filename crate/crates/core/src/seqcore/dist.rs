use num_bigint::BigUint;
use num_traits::Zero;

use super::IntegerSequence;
use crate::error::{Error, Result};

/// `d_{A,B}(x)`: the largest `|a_t - b_t|` over positions `t` with
/// `a_t <= x` or `b_t <= x`, and the first position attaining it.
///
/// Returns `(0, None)` when no position qualifies. Both sequences must be
/// certified up to `x`, and every qualifying position must exist in both.
pub fn dist_witness(
    a: &IntegerSequence,
    b: &IntegerSequence,
    x: &BigUint,
) -> Result<(BigUint, Option<usize>)> {
    a.require_horizon(x)?;
    b.require_horizon(x)?;
    let qualifying = a.count_le(x).max(b.count_le(x));
    for seq in [a, b] {
        if seq.len() < qualifying {
            return Err(Error::AlignmentIncomplete {
                index: seq.len(),
                x: x.clone(),
                missing_in: seq.label().to_string(),
            });
        }
    }
    let mut best = (BigUint::zero(), None);
    for t in 0..qualifying {
        let (p, q) = (&a.elements()[t], &b.elements()[t]);
        let diff = if p >= q { p - q } else { q - p };
        if best.1.is_none() || diff > best.0 {
            best = (diff, Some(t));
        }
    }
    Ok(best)
}

/// `d_{A,B}(x)`.
pub fn dist(a: &IntegerSequence, b: &IntegerSequence, x: &BigUint) -> Result<BigUint> {
    dist_witness(a, b, x).map(|(d, _)| d)
}
