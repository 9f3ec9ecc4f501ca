//! Sums of two squares and of two cubes.
//!
//! * Products `Q_K` of the first `K` primes `≡ 1 (mod 4)` have exactly
//!   `2^{K-1}` representations as an unordered sum of two positive squares.
//! * Iterating the Vieta map on `x^3 + y^3 = a z^3` stacks `k` distinct
//!   representations on one target `(64^{k-1} + 1) w_k^3`.

mod cubes;
mod primes;
mod squares;

pub use cubes::{
    cube_chain, cube_chain_capped, estimated_w_digits, theorem8_verify, theorem8_verify_with,
    vieta_step, CubeChain, Theorem8Report, DEFAULT_CHAIN_CAP,
};
pub use primes::{primes_one_mod_four, sieve};
pub use squares::{
    primorial_targets, squares_lower_bound_check, squares_lower_bound_check_with, squares_rep,
    squares_rep_with, PrimorialSample, PrimorialTarget, DEFAULT_SQUARES_BUDGET,
};
