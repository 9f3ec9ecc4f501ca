use std::fmt;

use num_bigint::BigUint;

use super::block::assemble;
use super::plan::BlockPlan;
use crate::error::Result;
use crate::par::{self, ExecMode};
use crate::seqcore::{counting, dist, s_max, IntegerSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `s_A(c_n - 2d(n)) = s_A(c_n + 2d(n)) = a(n)`
    MaxA,
    /// `s_B(c_n - 2d(n)) = s_B(c_n + 2d(n)) = b(n)`
    MaxB,
    /// `d_{A,B}(c_n) = d(n)`
    Distance,
    /// `A(c_n) = B(c_n) = 2T(n) >= 2n`
    Counting,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::MaxA => "i",
            Property::MaxB => "ii",
            Property::Distance => "iii",
            Property::Counting => "iv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub n: usize,
    pub property: Property,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Report {
    pub depth: usize,
    pub checks: Vec<BlockCheck>,
}

impl Lemma2Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&BlockCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Assembles blocks `1..=depth` and checks all four block properties at
/// every `n <= depth`.
pub fn lemma2_verify(plan: &BlockPlan, depth: usize) -> Result<Lemma2Report> {
    lemma2_verify_with(plan, depth, ExecMode::default())
}

pub fn lemma2_verify_with(plan: &BlockPlan, depth: usize, mode: ExecMode) -> Result<Lemma2Report> {
    let (a, b) = assemble(plan, depth)?;
    let per_block = par::map_range(mode, depth, |k| check_block(plan, &a, &b, k + 1));
    let mut checks = Vec::with_capacity(4 * depth);
    for r in per_block {
        checks.extend(r?);
    }
    Ok(Lemma2Report { depth, checks })
}

fn check_block(
    plan: &BlockPlan,
    a: &IntegerSequence,
    b: &IntegerSequence,
    n: usize,
) -> Result<Vec<BlockCheck>> {
    let c = plan.c(n);
    let two_d = BigUint::from(2 * plan.d(n));
    let below = &c - &two_d;
    let above = &c + &two_d;

    let max_pair = |s: &IntegerSequence, want: u64, property: Property| -> Result<BlockCheck> {
        let lo = s_max(s, &below)?.value;
        let hi = s_max(s, &above)?.value;
        Ok(BlockCheck {
            n,
            property,
            expected: format!("{want},{want}"),
            observed: format!("{lo},{hi}"),
            pass: lo == want && hi == want,
        })
    };
    let d_obs = dist(a, b, &c)?;
    let ca = counting(a, &c)?;
    let cb = counting(b, &c)?;
    let two_t = 2 * plan.t(n);
    Ok(vec![
        max_pair(a, plan.a(n), Property::MaxA)?,
        max_pair(b, plan.b(n), Property::MaxB)?,
        BlockCheck {
            n,
            property: Property::Distance,
            expected: plan.d(n).to_string(),
            observed: d_obs.to_string(),
            pass: d_obs == BigUint::from(plan.d(n)),
        },
        BlockCheck {
            n,
            property: Property::Counting,
            expected: format!("{two_t},{two_t}"),
            observed: format!("{ca},{cb}"),
            pass: ca as u64 == two_t && cb as u64 == two_t && two_t >= 2 * n as u64,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::super::plan::make_plan;
    use super::*;

    #[test]
    fn unit_plan_passes() {
        let p = make_plan(&[1, 1], &[1, 1], &[1, 1]).unwrap();
        let r = lemma2_verify(&p, 2).unwrap();
        assert_eq!(r.checks.len(), 8);
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }

    #[test]
    fn two_one_one_values() {
        let p = make_plan(&[2], &[1], &[1]).unwrap();
        let r = lemma2_verify(&p, 1).unwrap();
        let obs: Vec<&str> = r.checks.iter().map(|c| c.observed.as_str()).collect();
        assert_eq!(obs, vec!["2,2", "1,1", "1", "4,4"]);
        assert!(r.all_pass());
    }

    #[test]
    fn five_one_one_values() {
        let p = make_plan(&[5], &[1], &[1]).unwrap();
        let r = lemma2_verify(&p, 1).unwrap();
        let obs: Vec<&str> = r.checks.iter().map(|c| c.observed.as_str()).collect();
        assert_eq!(obs, vec!["5,5", "1,1", "1", "10,10"]);
    }

    #[test]
    fn modes_agree() {
        let p = make_plan(&[1, 2, 3], &[2, 2, 3], &[1, 1, 2]).unwrap();
        let s = lemma2_verify_with(&p, 3, ExecMode::Sequential).unwrap();
        let q = lemma2_verify_with(&p, 3, ExecMode::Parallel).unwrap();
        assert_eq!(s, q);
        assert!(s.all_pass(), "{:?}", s.first_failure());
    }
}
