use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, ToPrimitive};

use super::primes::primes_one_mod_four;
use crate::error::{Error, Result};
use crate::par::{self, ExecMode};

/// Default cap on the number of trial values `x` in [`squares_rep`].
pub const DEFAULT_SQUARES_BUDGET: u64 = 50_000_000;

const SWEEP_CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimorialTarget {
    pub k: usize,
    pub primes: Vec<u64>,
    pub q: BigUint,
}

/// `Q_K`, the product of the first `K` primes `≡ 1 (mod 4)`.
pub fn primorial_targets(k: usize) -> PrimorialTarget {
    let primes = primes_one_mod_four(k);
    let q = primes
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * BigUint::from(p));
    PrimorialTarget { k, primes, q }
}

/// Number of unordered pairs `1 <= x <= y` with `x^2 + y^2 = n`.
pub fn squares_rep(n: &BigUint) -> Result<u64> {
    squares_rep_with(n, DEFAULT_SQUARES_BUDGET, ExecMode::default())
}

pub fn squares_rep_with(n: &BigUint, budget: u64, mode: ExecMode) -> Result<u64> {
    let too_large = || Error::RangeTooLarge {
        requested: n.clone(),
        limit: budget,
    };
    let nv = n.to_u128().ok_or_else(too_large)?;
    // x runs over 1..=sqrt(n/2)
    let xmax = (nv / 2).sqrt();
    if xmax > budget as u128 {
        return Err(too_large());
    }
    let xmax = xmax as u64;
    let chunks = xmax.div_ceil(SWEEP_CHUNK) as usize;
    let counts = par::map_range(mode, chunks, |c| {
        let lo = c as u64 * SWEEP_CHUNK + 1;
        let hi = (lo + SWEEP_CHUNK - 1).min(xmax);
        (lo..=hi)
            .filter(|&x| {
                let rest = nv - (x as u128) * (x as u128);
                let y = rest.sqrt();
                y * y == rest && y >= x as u128
            })
            .count() as u64
    });
    Ok(counts.into_iter().sum())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrimorialSample {
    pub k: usize,
    pub q: BigUint,
    pub reps: u64,
    pub expected: u64,
    /// `log R(Q_K) · log log Q_K / log Q_K`, which tends to `log 2`.
    pub exponent: f64,
}

impl PrimorialSample {
    pub fn exact(&self) -> bool {
        self.reps == self.expected
    }
}

/// `squares_rep(Q_K)` against `2^{K-1}` for `K = 1..=k_max`.
pub fn squares_lower_bound_check(k_max: usize) -> Result<Vec<PrimorialSample>> {
    squares_lower_bound_check_with(k_max, DEFAULT_SQUARES_BUDGET, ExecMode::default())
}

pub fn squares_lower_bound_check_with(
    k_max: usize,
    budget: u64,
    mode: ExecMode,
) -> Result<Vec<PrimorialSample>> {
    let full = primorial_targets(k_max);
    let mut q = BigUint::one();
    let mut out = Vec::with_capacity(k_max);
    for (idx, &p) in full.primes.iter().enumerate() {
        q *= p;
        let k = idx + 1;
        let reps = squares_rep_with(&q, budget, mode)?;
        let lq = q.to_f64().expect("finite").ln();
        let exponent = (reps as f64).ln() * lq.ln() / lq;
        out.push(PrimorialSample {
            k,
            q: q.clone(),
            reps,
            expected: 1u64 << (k - 1),
            exponent,
        });
    }
    Ok(out)
}
