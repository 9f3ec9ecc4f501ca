use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};

/// Digit count of `c_N` above which plan construction logs a warning.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;

/// Tabulated block parameters, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlan {
    a: Vec<u64>,
    b: Vec<u64>,
    d: Vec<u64>,
    // t[n] = T(n), t[0] = 0
    t: Vec<u64>,
}

/// Validates and tabulates a plan of depth `a.len()`.
pub fn make_plan(a: &[u64], b: &[u64], d: &[u64]) -> Result<BlockPlan> {
    let depth = a.len();
    if b.len() != depth || d.len() != depth {
        return Err(Error::PlanPrecondition(format!(
            "sequence tables differ in length: a = {}, b = {}, d = {}",
            a.len(),
            b.len(),
            d.len()
        )));
    }
    for (which, seq) in [("a", a), ("b", b), ("d", d)] {
        for n in 1..=depth {
            let v = seq[n - 1];
            if v == 0 || (n > 1 && v < seq[n - 2]) {
                return Err(Error::NotMonotone { which, n });
            }
        }
    }
    for n in 1..=depth {
        let (an, bn, dn) = (a[n - 1] as u128, b[n - 1] as u128, d[n - 1] as u128);
        let k = 4 * dn + 1;
        if an > k * bn || bn > k * an {
            return Err(Error::HypothesisViolated {
                n,
                a: a[n - 1],
                b: b[n - 1],
                d: d[n - 1],
            });
        }
    }
    let mut t = Vec::with_capacity(depth + 1);
    t.push(0u64);
    for n in 1..=depth {
        let step = a[n - 1].max(b[n - 1]);
        let next = t[n - 1]
            .checked_add(step)
            .ok_or_else(|| Error::PlanPrecondition(format!("T({n}) overflows a machine word")))?;
        t.push(next);
    }
    let plan = BlockPlan {
        a: a.to_vec(),
        b: b.to_vec(),
        d: d.to_vec(),
        t,
    };
    if depth > 0 {
        let digits = plan.c_digits(depth);
        if digits > DEFAULT_DIGIT_BUDGET {
            log::warn!(
                "c_{depth} has about {digits} decimal digits, above the budget of {DEFAULT_DIGIT_BUDGET}"
            );
        }
    }
    Ok(plan)
}

impl BlockPlan {
    pub fn depth(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, n: usize) -> u64 {
        self.a[n - 1]
    }

    pub fn b(&self, n: usize) -> u64 {
        self.b[n - 1]
    }

    pub fn d(&self, n: usize) -> u64 {
        self.d[n - 1]
    }

    /// `T(n)`; `T(0) = 0`.
    pub fn t(&self, n: usize) -> u64 {
        self.t[n]
    }

    pub fn max_ab(&self, n: usize) -> u64 {
        self.a(n).max(self.b(n))
    }

    /// `c_n = d(n) (2 + 10^{n + T(n)})`.
    pub fn c(&self, n: usize) -> BigUint {
        let e = n as u64 + self.t(n);
        BigUint::from(self.d(n)) * (pow10(e) + 2u32)
    }

    /// Upper estimate of the decimal digit count of `c_n`.
    pub fn c_digits(&self, n: usize) -> u64 {
        n as u64 + self.t(n) + 1 + (self.d(n) as f64).log10().floor() as u64 + 1
    }

    pub(crate) fn require_depth(&self, n: usize) -> Result<()> {
        if n > self.depth() {
            Err(Error::DepthExceeded {
                requested: n,
                depth: self.depth(),
            })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn pow10(e: u64) -> BigUint {
    Pow::pow(BigUint::from(10u32), e)
}
