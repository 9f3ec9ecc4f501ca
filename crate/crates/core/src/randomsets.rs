//! The random model `P(n ∈ A) = n^{-2/3} / 3`: seeded sampling, counting
//! deviation against a Chernoff-style band and the `r₂` profile.
//!
//! Each `n` owns the 64-bit word pair at position `2(n-1)` of a ChaCha8
//! stream keyed by the seed, so a sample does not depend on how the range is
//! split between threads.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::par::{self, ExecMode};
use crate::seqcore::{IntegerSequence, DEFAULT_PROFILE_LIMIT};

/// Default constant in `|a_n^{1/3} - n| <= C sqrt(n log n)`.
pub const DEFAULT_DEVIATION_CONSTANT: f64 = 10.0;

/// Samples up to this size are reported without asserting the growth bound.
pub const LOW_SAMPLE_LIMIT: u64 = 100;

/// `B(1/3, 1/3) / 18`, an upper bound for `n^{1/3} E[r₂(n)]`.
pub const R2_ENVELOPE: f64 = 0.294_439_791_714_241_7;

const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomModel {
    pub seed: u64,
    pub x_max: u64,
}

impl RandomModel {
    pub fn new(seed: u64, x_max: u64) -> Self {
        RandomModel { seed, x_max }
    }
}

pub fn inclusion_probability(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (n as f64).powf(-2.0 / 3.0) / 3.0
}

/// Whether the draw `u` (read as `u / 2^64`) falls below `p(n)`, i.e.
/// whether `27 n^2 u^3 < 2^192`. The float comparison only settles clear
/// cases; anything close to the threshold is decided in exact arithmetic.
pub fn draw_includes(n: u64, u: u64) -> bool {
    if n == 0 {
        return false;
    }
    let threshold = inclusion_probability(n) * 18_446_744_073_709_551_616.0;
    let uf = u as f64;
    if uf < threshold * (1.0 - 1e-9) {
        return true;
    }
    if uf > threshold * (1.0 + 1e-9) {
        return false;
    }
    let n = BigUint::from(n);
    let u = BigUint::from(u);
    &n * &n * &u * &u * &u * 27u32 < BigUint::from(1u32) << 192
}

pub fn sample(model: &RandomModel) -> IntegerSequence {
    sample_with(model, ExecMode::default())
}

pub fn sample_with(model: &RandomModel, mode: ExecMode) -> IntegerSequence {
    let chunks = model.x_max.div_ceil(CHUNK) as usize;
    let parts = par::map_range(mode, chunks, |c| {
        let lo = 1 + c as u64 * CHUNK;
        let hi = (lo + CHUNK - 1).min(model.x_max);
        let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
        rng.set_word_pos(2 * (lo as u128 - 1));
        (lo..=hi)
            .filter(|&n| draw_includes(n, rng.next_u64()))
            .collect::<Vec<u64>>()
    });
    let elements: Vec<u64> = parts.concat();
    IntegerSequence::from_u64s(
        format!("random(seed={})", model.seed),
        &elements,
        model.x_max,
    )
    .expect("sampled elements are increasing and within x_max")
}

/// `Σ_{n <= x} p(n)`, summed term by term.
pub fn expected_count(x: u64) -> f64 {
    (1..=x).map(inclusion_probability).sum()
}

/// `Σ_{n <= x} p(n)(1 - p(n))`.
pub fn count_variance(x: u64) -> f64 {
    (1..=x)
        .map(|n| {
            let p = inclusion_probability(n);
            p * (1.0 - p)
        })
        .sum()
}

/// `δ = 3 x^{-1/6} sqrt(log x)`.
pub fn band_delta(x: u64) -> f64 {
    let xf = x as f64;
    3.0 * xf.powf(-1.0 / 6.0) * xf.ln().max(0.0).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationReport {
    pub x: u64,
    pub a_x: usize,
    pub expected: f64,
    pub band: f64,
    pub within: bool,
    /// `expected - x^{1/3}`.
    pub cube_root_gap: f64,
}

pub fn counting_deviation(
    a: &IntegerSequence,
    checkpoints: &[u64],
) -> Result<Vec<DeviationReport>> {
    for &x in checkpoints {
        a.require_horizon(&BigUint::from(x))?;
    }
    let mut order: Vec<usize> = (0..checkpoints.len()).collect();
    order.sort_by_key(|&i| checkpoints[i]);
    let mut expected = vec![0.0; checkpoints.len()];
    let (mut acc, mut done) = (0.0, 0u64);
    for &i in &order {
        let x = checkpoints[i];
        acc += ((done + 1)..=x).map(inclusion_probability).sum::<f64>();
        done = done.max(x);
        expected[i] = acc;
    }
    Ok(checkpoints
        .iter()
        .zip(expected)
        .map(|(&x, expected)| {
            let a_x = a.count_le(&BigUint::from(x));
            let band = band_delta(x) * expected;
            DeviationReport {
                x,
                a_x,
                expected,
                band,
                within: (a_x as f64 - expected).abs() <= band,
                cube_root_gap: expected - (x as f64).cbrt(),
            }
        })
        .collect())
}

fn small_elements(a: &IntegerSequence, x: u64) -> Result<Vec<u64>> {
    let xb = BigUint::from(x);
    a.require_horizon(&xb)?;
    if x > DEFAULT_PROFILE_LIMIT {
        return Err(Error::RangeTooLarge {
            requested: xb,
            limit: DEFAULT_PROFILE_LIMIT,
        });
    }
    let upto = a.count_le(&xb);
    Ok(match a.small() {
        Some(s) => s[..upto].to_vec(),
        None => a.elements()[..upto]
            .iter()
            .map(|e| e.to_u64().expect("bounded by x"))
            .collect(),
    })
}

/// `r₂(A, n) = #{j : 1 <= j < n/2, j ∈ A, n - j ∈ A}` for `n = 0..=x`,
/// together with its maximum.
pub fn r2_profile(a: &IntegerSequence, x: u64) -> Result<(Vec<u32>, u32)> {
    let elems = small_elements(a, x)?;
    let mut counts = vec![0u32; x as usize + 1];
    for (i, &lo) in elems.iter().enumerate() {
        if lo == 0 {
            continue;
        }
        for &hi in &elems[i + 1..] {
            let n = lo + hi;
            if n > x {
                break;
            }
            counts[n as usize] += 1;
        }
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    Ok((counts, max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct R2Tail {
    /// Largest `n` with `r₂(n) > 3`, or 0 if there is none.
    pub n0: u64,
    pub max_overall: u32,
    /// Maximum of `r₂` over `(n0, x]`.
    pub max_beyond: u32,
}

pub fn r2_tail(profile: &[u32]) -> R2Tail {
    let n0 = profile.iter().rposition(|&r| r > 3).unwrap_or(0);
    let max_beyond = profile.iter().skip(n0 + 1).copied().max().unwrap_or(0);
    R2Tail {
        n0: n0 as u64,
        max_overall: profile.iter().copied().max().unwrap_or(0),
        max_beyond,
    }
}

/// `E[r₂(n)] = Σ_{1 <= j < n/2} p(j) p(n - j)`.
pub fn expected_r2(n: u64) -> f64 {
    (1..n.div_ceil(2))
        .map(|j| inclusion_probability(j) * inclusion_probability(n - j))
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeReport {
    /// `(n, n^{1/3} E[r₂(n)])`.
    pub samples: Vec<(u64, f64)>,
    pub fitted_c: f64,
    pub bound: f64,
    pub ok: bool,
}

pub fn r2_envelope(ns: &[u64]) -> EnvelopeReport {
    let samples: Vec<(u64, f64)> = ns
        .iter()
        .map(|&n| (n, expected_r2(n) * (n as f64).cbrt()))
        .collect();
    let fitted_c = samples.iter().map(|s| s.1).fold(0.0, f64::max);
    EnvelopeReport {
        ok: fitted_c <= R2_ENVELOPE,
        samples,
        fitted_c,
        bound: R2_ENVELOPE,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem9Report {
    pub x_max: u64,
    pub elements: usize,
    pub deviations: Vec<DeviationReport>,
    pub r2: R2Tail,
    pub constant: f64,
    /// Largest `|a_n^{1/3} - n| / sqrt(n max(log n, 1))` and its index.
    pub max_ratio: f64,
    pub worst_index: usize,
    pub low_sample: bool,
    /// `None` when the sample is too small to assert anything.
    pub bound_ok: Option<bool>,
}

impl Theorem9Report {
    pub fn all_pass(&self) -> bool {
        self.bound_ok != Some(false) && self.r2.max_beyond <= 3
    }

    pub fn first_failure(&self) -> Option<String> {
        if self.bound_ok == Some(false) {
            return Some(format!(
                "growth bound at index {}: ratio {:.3} > C = {}",
                self.worst_index, self.max_ratio, self.constant
            ));
        }
        if self.r2.max_beyond > 3 {
            return Some(format!("r2 exceeds 3 beyond n0 = {}", self.r2.n0));
        }
        None
    }
}

/// Runs the counting, `r₂` and growth checks on a sample whose horizon is
/// the model's `x_max`.
pub fn theorem9_verify(
    a: &IntegerSequence,
    checkpoints: &[u64],
    constant: f64,
) -> Result<Theorem9Report> {
    let x_max = a.horizon().to_u64().ok_or_else(|| Error::RangeTooLarge {
        requested: a.horizon().clone(),
        limit: DEFAULT_PROFILE_LIMIT,
    })?;
    let deviations = counting_deviation(a, checkpoints)?;
    let (profile, _) = r2_profile(a, x_max)?;
    let r2 = r2_tail(&profile);
    let elems = small_elements(a, x_max)?;
    let (mut max_ratio, mut worst_index) = (0.0f64, 0usize);
    for (t, &e) in elems.iter().enumerate() {
        let n = (t + 1) as f64;
        let ratio = ((e as f64).cbrt() - n).abs() / (n * n.ln().max(1.0)).sqrt();
        if ratio > max_ratio {
            max_ratio = ratio;
            worst_index = t + 1;
        }
    }
    let low_sample = x_max <= LOW_SAMPLE_LIMIT;
    Ok(Theorem9Report {
        x_max,
        elements: elems.len(),
        deviations,
        r2,
        constant,
        max_ratio,
        worst_index,
        low_sample,
        bound_ok: (!low_sample).then_some(max_ratio <= constant),
    })
}
