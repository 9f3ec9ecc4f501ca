//! Paired block constructions with prescribed representation maxima and
//! distance.
//!
//! A [`BlockPlan`] tabulates three nondecreasing positive sequences
//! `a(n)`, `b(n)`, `d(n)`. Block `n` of `A` and `B` lives at scale
//! `10^{n + T(n)}` where `T(n) = sum_{k <= n} max(a(k), b(k))`, and the
//! assembled sets satisfy, for every tabulated `n` and
//! `c_n = d(n) (2 + 10^{n + T(n)})`:
//!
//! * `s_A(c_n - 2d(n)) = s_A(c_n + 2d(n)) = a(n)`,
//! * `s_B(c_n - 2d(n)) = s_B(c_n + 2d(n)) = b(n)`,
//! * `d_{A,B}(c_n) = d(n)`,
//! * `A(c_n) = B(c_n) = 2T(n)`.
//!
//! [`lemma2_verify`] checks all four by brute force on the assembled prefix.

mod block;
mod plan;
mod theorems;
mod verify;

pub use block::{assemble, block, block_indexed, BlockPair};
pub use plan::{make_plan, BlockPlan, DEFAULT_DIGIT_BUDGET};
pub use theorems::{
    theorem3_plan, theorem4_plan, theorem4_ratios, theorem5_distances, theorem5_plan, RatioSample,
    Theorem4Plan,
};
pub use verify::{lemma2_verify, lemma2_verify_with, BlockCheck, Lemma2Report, Property};
