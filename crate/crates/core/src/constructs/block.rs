use num_bigint::BigUint;

use super::plan::{pow10, BlockPlan};
use crate::error::{Error, Result};
use crate::seqcore::IntegerSequence;

/// Block `n` of both sets, each of size `2 max(a(n), b(n))`, sorted
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPair {
    pub n: usize,
    pub a_elems: Vec<BigUint>,
    pub b_elems: Vec<BigUint>,
}

/// Block `n` in construction order: position `i - 1` holds the element
/// with in-block index `i`, `1 <= i <= 2 max(a(n), b(n))`.
///
/// The side whose count equals `M = max(a(n), b(n))` (ties go to `A`) gets
/// pure powers `d 10^{e + i}` in its first half and their complements
/// `d 10^{n + T(n)} - d 10^{e + i - M}` in the second, with
/// `e = n - 1 + T(n - 1)`. The other side, with count `s`, is the same
/// pattern shifted down by `d + 1` and back up by `ceil(i / 2s)` resp.
/// `ceil((i - M + s) / 2s)`, which groups its complementary sums into runs
/// of at most `s`.
pub fn block_indexed(plan: &BlockPlan, n: usize) -> Result<BlockPair> {
    plan.require_depth(n)?;
    if n == 0 {
        return Err(Error::PlanPrecondition("blocks are indexed from 1".into()));
    }
    let (a, b, d) = (plan.a(n), plan.b(n), plan.d(n));
    let m = a.max(b);
    let e0 = n as u64 - 1 + plan.t(n - 1);
    let dd = BigUint::from(d);
    let top = &dd * pow10(n as u64 + plan.t(n));

    let heavy: Vec<BigUint> = (1..=2 * m)
        .map(|i| {
            if i <= m {
                &dd * pow10(e0 + i)
            } else {
                &top - &dd * pow10(e0 + i - m)
            }
        })
        .collect();
    let light_count = a.min(b);
    let light: Vec<BigUint> = heavy
        .iter()
        .zip(1..=2 * m)
        .map(|(h, i)| {
            let lift = if i <= m {
                i.div_ceil(2 * light_count)
            } else {
                (i - m + light_count).div_ceil(2 * light_count)
            };
            // h - d - 1 + lift, with lift >= 1
            h - &dd - 1u32 + lift
        })
        .collect();

    let (a_elems, b_elems) = if a >= b {
        (heavy, light)
    } else {
        (light, heavy)
    };
    Ok(BlockPair {
        n,
        a_elems,
        b_elems,
    })
}

/// Block `n`, sorted ascending.
pub fn block(plan: &BlockPlan, n: usize) -> Result<BlockPair> {
    let mut p = block_indexed(plan, n)?;
    p.a_elems.sort();
    p.b_elems.sort();
    Ok(p)
}

/// Unions of blocks `1..=depth`, certified up to `c_depth + 2 d(depth)`.
pub fn assemble(plan: &BlockPlan, depth: usize) -> Result<(IntegerSequence, IntegerSequence)> {
    plan.require_depth(depth)?;
    if depth == 0 {
        return Ok((IntegerSequence::empty("A"), IntegerSequence::empty("B")));
    }
    let mut a_all: Vec<BigUint> = Vec::new();
    let mut b_all: Vec<BigUint> = Vec::new();
    for n in 1..=depth {
        let blk = block(plan, n)?;
        for (all, elems) in [(&mut a_all, &blk.a_elems), (&mut b_all, &blk.b_elems)] {
            if let (Some(last), Some(first)) = (all.last(), elems.first()) {
                if first <= last {
                    return Err(Error::BlockOverlap { n: n - 1, next: n });
                }
            }
            if elems.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BlockOverlap { n, next: n });
            }
            all.extend(elems.iter().cloned());
        }
    }
    let horizon = plan.c(depth) + 2 * plan.d(depth);
    Ok((
        IntegerSequence::new("A", a_all, horizon.clone())?,
        IntegerSequence::new("B", b_all, horizon)?,
    ))
}
