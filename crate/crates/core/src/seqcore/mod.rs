//! Representation functions over certified sequence prefixes.
//!
//! All counts follow the unordered convention: `R_A(n)` counts pairs
//! `i <= j`, so `n = 2a` contributes exactly one representation through
//! `a + a`.

mod dist;
mod rep;
mod sandwich;
mod sequence;

pub use dist::{dist, dist_witness};
pub use rep::{
    counting, is_sidon, rep_count, rep_profile, rep_profile_with, s_max, s_max_with,
    ProfileOptions, RepReport, SMax, SMaxStrategy, SidonCheck, DEFAULT_PROFILE_LIMIT,
};
pub use sandwich::{sandwich_check, SandwichReport};
pub use sequence::IntegerSequence;
