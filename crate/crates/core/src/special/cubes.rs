use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::par::{self, ExecMode};

/// Default longest chain built; `w_5` already has about 1.6·10^5 digits.
pub const DEFAULT_CHAIN_CAP: usize = 5;

/// One application of the doubled Vieta map to `(u, v, w)`:
///
/// ```text
/// u' = u (u^3 + 2v^3) (u^3 (u^3 + 2v^3)^3 - 2 v^3 (2u^3 + v^3)^3)
/// v' = v (2u^3 + v^3) (2 u^3 (u^3 + 2v^3)^3 - v^3 (2u^3 + v^3)^3)
/// w' = (u^3 - v^3) (u^3 (u^3 + 2v^3)^3 + v^3 (2u^3 + v^3)^3) w
/// ```
///
/// so that `u'^3 + v'^3 = ((u^3 + v^3) / w^3) w'^3` whenever `w^3`
/// divides `u^3 + v^3`. Fails when a factor of `u'`, `v'` or `w'` is not
/// positive.
pub fn vieta_step(u: &BigUint, v: &BigUint, w: &BigUint) -> Result<(BigUint, BigUint, BigUint)> {
    vieta_step_at(1, u, v, w)
}

fn vieta_step_at(
    step: usize,
    u: &BigUint,
    v: &BigUint,
    w: &BigUint,
) -> Result<(BigUint, BigUint, BigUint)> {
    let cube = |x: &BigInt| -> BigInt { x * x * x };
    let (ui, vi) = (BigInt::from(u.clone()), BigInt::from(v.clone()));
    let (u3, v3) = (cube(&ui), cube(&vi));
    let p = &u3 + 2 * &v3;
    let q = 2 * &u3 + &v3;
    let (p3, q3) = (cube(&p), cube(&q));
    let bracket_u = &u3 * &p3 - 2 * &v3 * &q3;
    let bracket_v = 2 * &u3 * &p3 - &v3 * &q3;
    let diff = &u3 - &v3;
    for (factor, value) in [
        ("u bracket", &bracket_u),
        ("v bracket", &bracket_v),
        ("u^3 - v^3", &diff),
    ] {
        if !value.is_positive() {
            return Err(Error::NonpositiveBracket { step, factor });
        }
    }
    if u.is_zero() || v.is_zero() || w.is_zero() {
        return Err(Error::NonpositiveBracket {
            step,
            factor: "input",
        });
    }
    let un = ui * p * bracket_u;
    let vn = vi * q * bracket_v;
    let wn = diff * (u3 * p3 + v3 * q3) * BigInt::from(w.clone());
    let to_u = |x: BigInt| x.to_biguint().expect("positive by construction");
    Ok((to_u(un), to_u(vn), to_u(wn)))
}

/// `k` representations of `n = (64^{k-1} + 1) w_k^3` as `x_i^3 + y_i^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeChain {
    pub k: usize,
    pub u: Vec<BigUint>,
    pub v: Vec<BigUint>,
    pub w: Vec<BigUint>,
    pub x: Vec<BigUint>,
    pub y: Vec<BigUint>,
    pub n: BigUint,
}

impl CubeChain {
    /// `z_i = w_i`.
    pub fn z(&self) -> &[BigUint] {
        &self.w
    }
}

/// Rough decimal digit count of `w_k`: the chain raises degrees by 16 per
/// step starting from `u_1 = 4^{k-1}`.
pub fn estimated_w_digits(k: usize) -> u64 {
    if k <= 1 {
        return 1;
    }
    let est = 0.602 * (k - 1) as f64 * (16f64.powi(k as i32 - 1) - 1.0);
    if est >= u64::MAX as f64 {
        u64::MAX
    } else {
        est as u64 + 1
    }
}

pub fn cube_chain(k: usize) -> Result<CubeChain> {
    cube_chain_capped(k, DEFAULT_CHAIN_CAP)
}

pub fn cube_chain_capped(k: usize, cap: usize) -> Result<CubeChain> {
    if k == 0 {
        return Err(Error::PlanPrecondition("a cube chain needs k >= 1".into()));
    }
    if k > cap {
        return Err(Error::DigitBudget {
            requested: k,
            cap,
            estimated_digits: estimated_w_digits(k),
        });
    }
    let mut u = vec![Pow::pow(BigUint::from(4u32), (k - 1) as u32)];
    let mut v = vec![BigUint::one()];
    let mut w = vec![BigUint::one()];
    for i in 1..k {
        let (un, vn, wn) = vieta_step_at(i, &u[i - 1], &v[i - 1], &w[i - 1])?;
        u.push(un);
        v.push(vn);
        w.push(wn);
    }
    let wk = w[k - 1].clone();
    let scale: Vec<BigUint> = w.iter().map(|wi| &wk / wi).collect();
    let x = u.iter().zip(&scale).map(|(a, s)| a * s).collect();
    let y = v.iter().zip(&scale).map(|(a, s)| a * s).collect();
    let n = (Pow::pow(BigUint::from(64u32), (k - 1) as u32) + 1u32) * Pow::pow(&wk, 3u32);
    Ok(CubeChain {
        k,
        u,
        v,
        w,
        x,
        y,
        n,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem8Report {
    pub k: usize,
    pub distinct_pairs: usize,
    pub n_digits: usize,
    /// `2·100^k`; `n < 100^{100^k}` iff `n` has at most this many digits.
    pub digit_bound: BigUint,
    pub within_digit_bound: bool,
    /// Per index `i`: whether `u_i >= 4^{k-i} v_i`.
    pub ratio_claim: Vec<bool>,
    /// Per step `i`: whether `w_{i+1} <= 54 u_i^15 w_i`.
    pub w_growth_claim: Vec<bool>,
    /// Whether `u_{i+1}/v_{i+1} < u_i/v_i` at every step.
    pub ratios_decreasing: bool,
}

/// Checks the identity, pairwise distinctness and size bound of a chain.
/// Identity and distinctness failures are errors; the remaining claims are
/// reported.
pub fn theorem8_verify(chain: &CubeChain) -> Result<Theorem8Report> {
    theorem8_verify_with(chain, ExecMode::default())
}

pub fn theorem8_verify_with(chain: &CubeChain, mode: ExecMode) -> Result<Theorem8Report> {
    let k = chain.k;
    let identity = par::map_range(mode, k, |i| {
        Pow::pow(&chain.x[i], 3u32) + Pow::pow(&chain.y[i], 3u32) == chain.n
    });
    if let Some(i) = identity.iter().position(|ok| !ok) {
        return Err(Error::IdentityBroken(i + 1));
    }
    let mut seen: HashSet<(&BigUint, &BigUint)> = HashSet::new();
    let mut first_of = Vec::with_capacity(k);
    for i in 0..k {
        let (a, b) = (&chain.x[i], &chain.y[i]);
        let key = if a <= b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            let j = first_of
                .iter()
                .position(|&p| p == key)
                .expect("seen implies recorded");
            return Err(Error::DuplicatePair(j + 1, i + 1));
        }
        first_of.push(key);
    }
    let n_digits = chain.n.to_string().len();
    let digit_bound = Pow::pow(BigUint::from(100u32), k as u32) * 2u32;
    let ratio_claim = (0..k)
        .map(|i| {
            let pow = Pow::pow(BigUint::from(4u32), (k - 1 - i) as u32);
            chain.u[i] >= pow * &chain.v[i]
        })
        .collect();
    let w_growth_claim = (0..k.saturating_sub(1))
        .map(|i| chain.w[i + 1] <= Pow::pow(&chain.u[i], 15u32) * &chain.w[i] * 54u32)
        .collect();
    let ratios_decreasing = (0..k.saturating_sub(1))
        .all(|i| &chain.u[i + 1] * &chain.v[i] < &chain.u[i] * &chain.v[i + 1]);
    Ok(Theorem8Report {
        k,
        distinct_pairs: seen.len(),
        within_digit_bound: BigUint::from(n_digits) <= digit_bound,
        n_digits,
        digit_bound,
        ratio_claim,
        w_growth_claim,
        ratios_decreasing,
    })
}

// Signed helper for tests: x^3 + y^3 with y possibly negative.
#[cfg(test)]
fn signed_cube_sum(x: &BigInt, y: &BigInt) -> BigInt {
    x * x * x + y * y * y
}
