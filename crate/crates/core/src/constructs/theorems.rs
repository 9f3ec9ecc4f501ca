use num_bigint::BigUint;

use super::plan::{make_plan, BlockPlan};
use crate::error::{Error, Result};
use crate::seqcore::{s_max, IntegerSequence};

/// Constant plan `a(n) = a`, `b(n) = b`, `d(n) = d`.
pub fn theorem3_plan(a: u64, b: u64, d: u64, depth: usize) -> Result<BlockPlan> {
    make_plan(&vec![a; depth], &vec![b; depth], &vec![d; depth])
}

/// A plan interleaving two monotone sequences so that the ratio
/// `s_B / s_A` alternates between samples of `u_n / v_n` and
/// `u_{n+1} / v_n`.
#[derive(Debug, Clone)]
pub struct Theorem4Plan {
    pub plan: BlockPlan,
    pub u: Vec<u64>,
    pub v: Vec<u64>,
    pub d: u64,
}

/// `b(2n-1) = u_n`, `b(2n) = u_{n+1}`, `a(2n-1) = a(2n) = v_n`, `d(n) = d`
/// for block indices up to `depth`. Needs `u` tabulated to
/// `floor(depth/2) + 1` and `v` to `ceil(depth/2)`.
pub fn theorem4_plan(u: &[u64], v: &[u64], d: u64, depth: usize) -> Result<Theorem4Plan> {
    let need_u = depth / 2 + 1;
    let need_v = depth.div_ceil(2);
    if u.len() < need_u || v.len() < need_v {
        return Err(Error::PlanPrecondition(format!(
            "depth {depth} needs u_1..u_{need_u} and v_1..v_{need_v}"
        )));
    }
    for (which, seq) in [("u", u), ("v", v)] {
        for n in 1..=seq.len() {
            if seq[n - 1] == 0 || (n > 1 && seq[n - 1] < seq[n - 2]) {
                return Err(Error::NotMonotone { which, n });
            }
        }
    }
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth);
    for k in 1..=depth {
        let n = k.div_ceil(2);
        a.push(v[n - 1]);
        b.push(if k % 2 == 1 { u[n - 1] } else { u[n] });
    }
    let plan = make_plan(&a, &b, &vec![d; depth])?;
    Ok(Theorem4Plan {
        plan,
        u: u.to_vec(),
        v: v.to_vec(),
        d,
    })
}

/// One finite ratio sample `s_B(c_k) / s_A(c_k ± 2d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSample {
    pub block: usize,
    pub observed: (u64, u64),
    pub expected: (u64, u64),
}

impl RatioSample {
    pub fn matches(&self) -> bool {
        self.observed.0 as u128 * self.expected.1 as u128
            == self.expected.0 as u128 * self.observed.1 as u128
    }
}

/// Ratio samples on the assembled prefix: at odd blocks `2n-1` the sample
/// `s_B(c) / s_A(c - 2d)` against `u_n / v_n`, at even blocks `2n` the
/// sample `s_B(c) / s_A(c + 2d)` against `u_{n+1} / v_n`.
pub fn theorem4_ratios(
    t4: &Theorem4Plan,
    a: &IntegerSequence,
    b: &IntegerSequence,
    depth: usize,
) -> Result<Vec<RatioSample>> {
    let two_d = BigUint::from(2 * t4.d);
    let mut out = Vec::with_capacity(depth);
    for k in 1..=depth {
        let c = t4.plan.c(k);
        let n = k.div_ceil(2);
        let sb = s_max(b, &c)?.value;
        let (sa, expected) = if k % 2 == 1 {
            (s_max(a, &(&c - &two_d))?.value, (t4.u[n - 1], t4.v[n - 1]))
        } else {
            (s_max(a, &(&c + &two_d))?.value, (t4.u[n], t4.v[n - 1]))
        };
        out.push(RatioSample {
            block: k,
            observed: (sb, sa),
            expected,
        });
    }
    Ok(out)
}

/// Plan with `s_A = a`, `s_B = b` (or unbounded for `b = None`) and
/// `d(n) = f(n)`.
///
/// Finite `b`: with `a <= b`, `b(n) = a` while `f(n) < ceil(b/a)` and `b`
/// afterwards; for `a > b` the roles of the two sets are exchanged.
/// Unbounded `b`: `b(n) = a f(n)`. The table `f` must be positive,
/// nondecreasing and must actually grow.
pub fn theorem5_plan(a: u64, b: Option<u64>, f: &[u64]) -> Result<BlockPlan> {
    if a == 0 || b == Some(0) {
        return Err(Error::PlanPrecondition("a and b must be positive".into()));
    }
    for n in 1..=f.len() {
        if f[n - 1] == 0 || (n > 1 && f[n - 1] < f[n - 2]) {
            return Err(Error::NotMonotone { which: "f", n });
        }
    }
    match (f.first(), f.last()) {
        (Some(first), Some(last)) if last > first => {}
        _ => {
            return Err(Error::PlanPrecondition(
                "f must be nondecreasing and tend to infinity; the table never grows".into(),
            ))
        }
    }
    let depth = f.len();
    let (a_seq, b_seq) = match b {
        Some(b) => {
            let (lo, hi) = (a.min(b), a.max(b));
            let threshold = hi.div_ceil(lo);
            let switching: Vec<u64> = f
                .iter()
                .map(|&fv| if fv < threshold { lo } else { hi })
                .collect();
            if a <= b {
                (vec![a; depth], switching)
            } else {
                (switching, vec![b; depth])
            }
        }
        None => (
            vec![a; depth],
            f.iter()
                .map(|&fv| {
                    a.checked_mul(fv).ok_or_else(|| {
                        Error::PlanPrecondition("a f(n) overflows a machine word".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    make_plan(&a_seq, &b_seq, f)
}

/// `|a_k - b_k| <= f(k)` for every 1-based index `k` present in both
/// prefixes and in the table. Returns the first offending `k`, if any.
pub fn theorem5_distances(a: &IntegerSequence, b: &IntegerSequence, f: &[u64]) -> Option<usize> {
    let upto = a.len().min(b.len()).min(f.len());
    (1..=upto).find(|&k| {
        let (x, y) = (&a.elements()[k - 1], &b.elements()[k - 1]);
        let diff = if x >= y { x - y } else { y - x };
        diff > BigUint::from(f[k - 1])
    })
}

#[cfg(test)]
mod tests {
    use super::super::{assemble, lemma2_verify};
    use super::*;

    #[test]
    fn theorem3_cases() {
        for (a, b, d) in [(1, 1, 1), (5, 1, 1), (1, 5, 1)] {
            let p = theorem3_plan(a, b, d, 2).unwrap();
            assert!(lemma2_verify(&p, 2).unwrap().all_pass(), "{a} {b} {d}");
        }
        assert!(matches!(
            theorem3_plan(1, 6, 1, 1),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn theorem4_identity_sequences() {
        let t4 = theorem4_plan(&[1, 2], &[1], 1, 2).unwrap();
        assert_eq!((t4.plan.a(1), t4.plan.a(2)), (1, 1));
        assert_eq!((t4.plan.b(1), t4.plan.b(2)), (1, 2));
        let (a, b) = assemble(&t4.plan, 2).unwrap();
        let r = theorem4_ratios(&t4, &a, &b, 2).unwrap();
        assert_eq!(r[0].observed, (1, 1));
        assert_eq!(r[1].observed, (2, 1));
        assert!(r.iter().all(RatioSample::matches));
    }

    #[test]
    fn theorem4_longer() {
        let u = [1, 2, 3, 4];
        let v = [1, 2, 3];
        let t4 = theorem4_plan(&u, &v, 1, 4).unwrap();
        let (a, b) = assemble(&t4.plan, 4).unwrap();
        let r = theorem4_ratios(&t4, &a, &b, 4).unwrap();
        assert!(r.iter().all(RatioSample::matches), "{r:?}");
        assert!(lemma2_verify(&t4.plan, 4).unwrap().all_pass());
    }

    #[test]
    fn theorem4_constant_reduces_to_theorem3() {
        let t4 = theorem4_plan(&[2, 2], &[3], 1, 2).unwrap();
        assert_eq!(t4.plan, theorem3_plan(3, 2, 1, 2).unwrap());
    }

    #[test]
    fn theorem4_rejects_bad_ratio() {
        assert!(matches!(
            theorem4_plan(&[1, 6], &[1], 1, 2),
            Err(Error::HypothesisViolated { n: 2, .. })
        ));
    }

    #[test]
    fn theorem5_switch() {
        let f = [1, 2, 3, 4];
        let p = theorem5_plan(1, Some(3), &f).unwrap();
        let bs: Vec<u64> = (1..=4).map(|n| p.b(n)).collect();
        assert_eq!(bs, vec![1, 1, 3, 3]);
        let (a, b) = assemble(&p, 4).unwrap();
        assert_eq!(theorem5_distances(&a, &b, &f), None);
        assert!(lemma2_verify(&p, 3).unwrap().all_pass());

        let p = theorem5_plan(3, Some(1), &f).unwrap();
        let as_: Vec<u64> = (1..=4).map(|n| p.a(n)).collect();
        assert_eq!(as_, vec![1, 1, 3, 3]);
    }

    #[test]
    fn theorem5_unbounded() {
        let f = [1, 2, 3];
        let p = theorem5_plan(2, None, &f).unwrap();
        let bs: Vec<u64> = (1..=3).map(|n| p.b(n)).collect();
        assert_eq!(bs, vec![2, 4, 6]);
        let (a, b) = assemble(&p, 3).unwrap();
        assert_eq!(theorem5_distances(&a, &b, &f), None);
    }

    #[test]
    fn theorem5_rejects_constant_f() {
        assert!(matches!(
            theorem5_plan(1, Some(2), &[2, 2, 2]),
            Err(Error::PlanPrecondition(_))
        ));
        assert!(matches!(
            theorem5_plan(1, Some(2), &[2, 1, 3]),
            Err(Error::NotMonotone { which: "f", n: 2 })
        ));
    }
}
