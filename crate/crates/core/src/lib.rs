//! Exact additive representation functions over finite, certified prefixes
//! of integer sequences, together with the explicit sequence families that
//! realise prescribed representation and distance behaviour:
//!
//! * [`seqcore`]: `R_A(n)`, `s_A(x)`, `A(x)`, `d_{A,B}(x)`, Sidon checks and
//!   the two-sided sandwich bound relating `s_A`, `s_B` and `d_{A,B}`.
//! * [`constructs`]: paired block constructions with prescribed
//!   `(s_A, s_B, d_{A,B})` and their verification.
//! * [`sidon`]: a greedy Sidon set `A` with a companion `B` whose
//!   representation counts grow like `n^{1/3}`.
//! * [`special`]: sums of two squares at products of primes `≡ 1 (mod 4)`
//!   and iterated Vieta chains for sums of two cubes.
//! * [`randomsets`]: seeded random sets with `P(n ∈ A) = n^{-2/3} / 3`.
//!
//! Every count is exact. Range computations run on rayon when the
//! `parallel` feature is enabled (the default); see [`par::ExecMode`].

pub mod constructs;
pub mod error;
pub mod par;
pub mod randomsets;
pub mod seqcore;
pub mod sidon;
pub mod special;

pub use error::{Error, Result};
pub use par::ExecMode;
pub use seqcore::IntegerSequence;
