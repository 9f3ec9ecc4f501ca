use num_bigint::BigUint;
use num_traits::CheckedSub;

use super::rep::{s_max, s_max_signed};
use super::{dist, IntegerSequence};
use crate::error::Result;

/// Both sides of `s_A(x-2d)/(4d+1) <= s_B(x) <= s_A(x+2d)(4d+1)` with
/// `d = d_{A,B}(x)`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    pub x: BigUint,
    pub d: BigUint,
    /// `s_A(x - 2d)`, zero when `x < 2d`.
    pub s_a_minus: u64,
    /// `s_A(x + 2d)`.
    pub s_a_plus: u64,
    pub s_b: u64,
    /// The lower bound is the fraction `lower_num / lower_den`.
    pub lower_num: u64,
    pub lower_den: BigUint,
    pub upper: BigUint,
    pub holds: bool,
}

impl SandwichReport {
    pub fn lower_holds(&self) -> bool {
        BigUint::from(self.lower_num) <= BigUint::from(self.s_b) * &self.lower_den
    }

    pub fn upper_holds(&self) -> bool {
        BigUint::from(self.s_b) <= self.upper
    }
}

/// Evaluates the sandwich bound for `B` around `A` at `x`. Requires
/// `A` certified up to `x + 2d` and `B` up to `x`.
pub fn sandwich_check(
    a: &IntegerSequence,
    b: &IntegerSequence,
    x: &BigUint,
) -> Result<SandwichReport> {
    let d = dist(a, b, x)?;
    let two_d = &d * 2u32;
    let s_a_plus = s_max(a, &(x + &two_d))?.value;
    let s_a_minus = s_max_signed(a, x.checked_sub(&two_d).as_ref())?.value;
    let s_b = s_max(b, x)?.value;
    let den = &d * 4u32 + 1u32;
    let upper = &den * s_a_plus;
    let mut report = SandwichReport {
        x: x.clone(),
        d,
        s_a_minus,
        s_a_plus,
        s_b,
        lower_num: s_a_minus,
        lower_den: den,
        upper,
        holds: false,
    };
    report.holds = report.lower_holds() && report.upper_holds();
    Ok(report)
}
