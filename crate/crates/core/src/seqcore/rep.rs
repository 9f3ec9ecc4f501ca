use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::IntegerSequence;
use crate::error::{Error, Result};
use crate::par::{self, ExecMode};

/// Default cap on the number of positions in a dense profile.
pub const DEFAULT_PROFILE_LIMIT: u64 = 100_000_000;

const PROFILE_CHUNK: usize = 1 << 16;

/// `R_A(n)` together with the pairs realising it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepReport {
    pub n: BigUint,
    pub count: u64,
    /// 0-based positions `(i, j)`, `i <= j`, with `a_i + a_j = n`, in
    /// increasing `i`.
    pub witnesses: Vec<(usize, usize)>,
}

/// Number of unordered pairs `i <= j` with `a_i + a_j = n`.
pub fn rep_count(a: &IntegerSequence, n: &BigUint) -> Result<RepReport> {
    a.require_horizon(n)?;
    let witnesses = match (a.small(), n.to_u64()) {
        (Some(s), Some(n)) => two_pointer(s, n),
        _ => big_pairs(a.elements(), n),
    };
    Ok(RepReport {
        n: n.clone(),
        count: witnesses.len() as u64,
        witnesses,
    })
}

fn two_pointer(s: &[u64], n: u64) -> Vec<(usize, usize)> {
    let k = s.partition_point(|&e| e <= n);
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let (mut i, mut j) = (0usize, k - 1);
    while i <= j {
        let sum = s[i] as u128 + s[j] as u128;
        match sum.cmp(&(n as u128)) {
            std::cmp::Ordering::Equal => {
                out.push((i, j));
                i += 1;
                if j == 0 {
                    break;
                }
                j -= 1;
            }
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => {
                if j == 0 {
                    break;
                }
                j -= 1;
            }
        }
    }
    out
}

fn big_pairs(s: &[BigUint], n: &BigUint) -> Vec<(usize, usize)> {
    let k = s.partition_point(|e| e <= n);
    let mut out = Vec::new();
    for i in 0..k {
        let rest = n - &s[i];
        if rest < s[i] {
            break;
        }
        if let Ok(j) = s[i..k].binary_search(&rest) {
            out.push((i, i + j));
        }
    }
    out
}

/// Dense profile settings.
#[derive(Debug, Clone, Copy)]
pub struct ProfileOptions {
    pub limit: u64,
    pub mode: ExecMode,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            limit: DEFAULT_PROFILE_LIMIT,
            mode: ExecMode::default(),
        }
    }
}

/// `[R_A(0), R_A(1), ..., R_A(x)]`.
pub fn rep_profile(a: &IntegerSequence, x: &BigUint) -> Result<Vec<u32>> {
    rep_profile_with(a, x, ProfileOptions::default())
}

pub fn rep_profile_with(
    a: &IntegerSequence,
    x: &BigUint,
    opts: ProfileOptions,
) -> Result<Vec<u32>> {
    a.require_horizon(x)?;
    let x = match x.to_u64() {
        Some(v) if v <= opts.limit && v < usize::MAX as u64 => v,
        _ => {
            return Err(Error::RangeTooLarge {
                requested: x.clone(),
                limit: opts.limit,
            })
        }
    };
    let k = a.count_le(&BigUint::from(x));
    // Every element <= x <= limit fits a machine word.
    let vals: Vec<u64> = a.elements()[..k]
        .iter()
        .map(|e| e.to_u64().expect("element below dense limit"))
        .collect();
    let mut profile = vec![0u32; x as usize + 1];
    par::for_each_chunk_mut(opts.mode, &mut profile, PROFILE_CHUNK, |offset, chunk| {
        fill_chunk(&vals, offset as u64, chunk)
    });
    Ok(profile)
}

// Adds every pair sum that lands in [lo, lo + chunk.len()).
fn fill_chunk(vals: &[u64], lo: u64, chunk: &mut [u32]) {
    let hi = lo + chunk.len() as u64;
    for (i, &vi) in vals.iter().enumerate() {
        if vi + vi >= hi {
            break;
        }
        let from = lo.saturating_sub(vi).max(vi);
        let to = hi - vi;
        let tail = &vals[i..];
        let start = tail.partition_point(|&v| v < from);
        let end = tail.partition_point(|&v| v < to);
        for &vj in &tail[start..end] {
            chunk[(vi + vj - lo) as usize] += 1;
        }
    }
}

/// `s_A(x)` and the smallest `n <= x` attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SMax {
    pub value: u64,
    pub argmax: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SMaxStrategy {
    /// Dense profile when it is cheap relative to pair enumeration,
    /// otherwise pair sums.
    Auto,
    /// Always tabulate the dense profile.
    Profile,
    /// Enumerate and sort all pair sums `<= x`.
    PairSums,
}

/// `s_A(x) = max_{n <= x} R_A(n)`.
pub fn s_max(a: &IntegerSequence, x: &BigUint) -> Result<SMax> {
    s_max_with(a, x, SMaxStrategy::Auto, ExecMode::default())
}

pub fn s_max_with(
    a: &IntegerSequence,
    x: &BigUint,
    strategy: SMaxStrategy,
    mode: ExecMode,
) -> Result<SMax> {
    a.require_horizon(x)?;
    let use_profile = match strategy {
        SMaxStrategy::Profile => true,
        SMaxStrategy::PairSums => false,
        SMaxStrategy::Auto => {
            let k = a.count_le(x) as u128;
            x.to_u64()
                .is_some_and(|v| v <= DEFAULT_PROFILE_LIMIT && (v as u128) <= 4 * k * k)
        }
    };
    if use_profile {
        let profile = rep_profile_with(
            a,
            x,
            ProfileOptions {
                limit: DEFAULT_PROFILE_LIMIT,
                mode,
            },
        )?;
        let mut best = (0u32, 0usize);
        for (n, &c) in profile.iter().enumerate() {
            if c > best.0 {
                best = (c, n);
            }
        }
        return Ok(SMax {
            value: best.0 as u64,
            argmax: BigUint::from(best.1),
        });
    }
    let k = a.count_le(x);
    match (a.small(), x.to_u64()) {
        (Some(s), Some(xv)) => {
            let s = &s[..k];
            let mut sums: Vec<u128> = Vec::new();
            for i in 0..k {
                for j in i..k {
                    let v = s[i] as u128 + s[j] as u128;
                    if v > xv as u128 {
                        break;
                    }
                    sums.push(v);
                }
            }
            par::sort_unstable(mode, &mut sums);
            let (value, arg) = longest_run(&sums);
            Ok(SMax {
                value,
                argmax: arg.map(BigUint::from).unwrap_or_default(),
            })
        }
        _ => {
            let s = &a.elements()[..k];
            let mut sums: Vec<BigUint> = Vec::new();
            for i in 0..k {
                for j in i..k {
                    let v = &s[i] + &s[j];
                    if v > *x {
                        break;
                    }
                    sums.push(v);
                }
            }
            par::sort_unstable(mode, &mut sums);
            let (value, arg) = longest_run(&sums);
            Ok(SMax {
                value,
                argmax: arg.unwrap_or_default(),
            })
        }
    }
}

// Length and value of the first longest run in a sorted slice.
fn longest_run<T: PartialEq + Clone>(sorted: &[T]) -> (u64, Option<T>) {
    let mut best: (u64, Option<T>) = (0, None);
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let run = (j - i) as u64;
        if run > best.0 {
            best = (run, Some(sorted[i].clone()));
        }
        i = j;
    }
    best
}

/// `s_A(x)` extended by `s_A(x) = 0` for negative `x` (empty maximum).
pub(crate) fn s_max_signed(a: &IntegerSequence, x: Option<&BigUint>) -> Result<SMax> {
    match x {
        Some(x) => s_max(a, x),
        None => Ok(SMax {
            value: 0,
            argmax: BigUint::zero(),
        }),
    }
}

/// `A(x)`: number of elements `<= x`.
pub fn counting(a: &IntegerSequence, x: &BigUint) -> Result<usize> {
    a.require_horizon(x)?;
    Ok(a.count_le(x))
}

/// Result of a Sidon test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidonCheck {
    pub ok: bool,
    /// 0-based `(i, j, k, l)` with `a_i + a_j = a_k + a_l`, `i <= j`,
    /// `k <= l` and `(i, j) != (k, l)`.
    pub violation: Option<(usize, usize, usize, usize)>,
}

/// Whether all sums `a + b`, `a <= b`, from `A` are distinct.
pub fn is_sidon(a: &IntegerSequence) -> SidonCheck {
    let n = a.len();
    let hit = match a.small() {
        Some(s) => first_collision(n, |i, j| s[i] as u128 + s[j] as u128),
        None => {
            let e = a.elements();
            first_collision(n, |i, j| &e[i] + &e[j])
        }
    };
    SidonCheck {
        ok: hit.is_none(),
        violation: hit,
    }
}

fn first_collision<K, F>(n: usize, sum: F) -> Option<(usize, usize, usize, usize)>
where
    K: std::hash::Hash + Eq,
    F: Fn(usize, usize) -> K,
{
    let mut seen: HashMap<K, (usize, usize)> = HashMap::with_capacity(n * (n + 1) / 2);
    for j in 0..n {
        for i in 0..=j {
            if let Some(&(k, l)) = seen.get(&sum(i, j)) {
                return Some((i, j, k, l));
            }
            seen.insert(sum(i, j), (i, j));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Oracle: double loop over all pairs.
    fn brute_rep(s: &[u64], n: u64) -> u64 {
        let mut c = 0;
        for i in 0..s.len() {
            for j in i..s.len() {
                if s[i] + s[j] == n {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn squares_rep_counts() {
        let sq = IntegerSequence::squares(200);
        assert_eq!(rep_count(&sq, &big(5)).unwrap().count, 1);
        assert_eq!(rep_count(&sq, &big(3)).unwrap().count, 0);
        let r = rep_count(&sq, &big(65)).unwrap();
        assert_eq!(r.count, 2);
        // 1 + 64 and 16 + 49, positions of 1, 4, 8, 7
        assert_eq!(r.witnesses, vec![(0, 7), (3, 6)]);
        let r = rep_count(&sq, &big(50)).unwrap();
        assert_eq!(r.witnesses, vec![(0, 6), (4, 4)]);
    }

    #[test]
    fn horizon_enforced() {
        let sq = IntegerSequence::squares(10);
        assert!(matches!(
            rep_count(&sq, &big(11)),
            Err(Error::HorizonExceeded { .. })
        ));
        assert!(counting(&sq, &big(11)).is_err());
        assert!(s_max(&sq, &big(11)).is_err());
        assert!(rep_profile(&sq, &big(11)).is_err());
    }

    #[test]
    fn profile_examples() {
        let zero = IntegerSequence::from_u64s("z", &[0], 0).unwrap();
        assert_eq!(rep_profile(&zero, &big(0)).unwrap(), vec![1]);
        let sq = IntegerSequence::squares(10);
        assert_eq!(
            rep_profile(&sq, &big(10)).unwrap(),
            vec![0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1]
        );
        let s = IntegerSequence::from_u64s("s", &[1, 2, 3], 6).unwrap();
        let p = rep_profile(&s, &big(6)).unwrap();
        assert_eq!(p.iter().map(|&c| c as u64).sum::<u64>(), 6);
    }

    #[test]
    fn profile_limit() {
        let s = IntegerSequence::from_u64s("s", &[1], 1000).unwrap();
        let opts = ProfileOptions {
            limit: 100,
            mode: ExecMode::Sequential,
        };
        assert!(matches!(
            rep_profile_with(&s, &big(101), opts),
            Err(Error::RangeTooLarge { .. })
        ));
        assert_eq!(rep_profile_with(&s, &big(100), opts).unwrap().len(), 101);
    }

    #[test]
    fn s_max_examples() {
        let sq = IntegerSequence::squares(2000);
        let m = s_max(&sq, &big(100)).unwrap();
        assert_eq!((m.value, m.argmax), (2, big(50)));
        let m = s_max(&sq, &big(1105)).unwrap();
        assert_eq!((m.value, m.argmax), (4, big(1105)));
        let s = IntegerSequence::from_u64s("s", &[1, 2], 4).unwrap();
        let m = s_max(&s, &big(4)).unwrap();
        assert_eq!((m.value, m.argmax), (1, big(2)));
        let m = s_max(&s, &big(1)).unwrap();
        assert_eq!((m.value, m.argmax), (0, big(0)));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            counting(&IntegerSequence::squares(10), &big(10)).unwrap(),
            3
        );
        let five = IntegerSequence::from_u64s("f", &[5], 5).unwrap();
        assert_eq!(counting(&five, &big(4)).unwrap(), 0);
        let sq = IntegerSequence::squares(1_000_000);
        assert_eq!(counting(&sq, &big(1_000_000)).unwrap(), 1000);
    }

    #[test]
    fn sidon_examples() {
        let s = IntegerSequence::from_u64s("s", &[1, 2, 5, 11], 11).unwrap();
        assert!(is_sidon(&s).ok);
        let s = IntegerSequence::from_u64s("s", &[1, 2, 3, 4], 4).unwrap();
        let c = is_sidon(&s);
        assert!(!c.ok);
        let (i, j, k, l) = c.violation.unwrap();
        let e = s.small().unwrap();
        assert_eq!(e[i] + e[j], e[k] + e[l]);
        assert_ne!((i, j), (k, l));
        assert!(is_sidon(&IntegerSequence::empty("e")).ok);
        assert!(is_sidon(&IntegerSequence::from_u64s("one", &[7], 7).unwrap()).ok);
        // a doubled element colliding with a distinct pair: 2 + 2 = 1 + 3
        let s = IntegerSequence::from_u64s("s", &[1, 2, 3], 3).unwrap();
        assert!(!is_sidon(&s).ok);
    }

    #[test]
    fn big_path_matches_small_path() {
        let shift: BigUint = BigUint::from(1u8) << 80;
        let vals: Vec<BigUint> = [0u64, 3, 5, 8, 13]
            .iter()
            .map(|&v| &shift * 2u32 + v)
            .collect();
        let horizon = &shift * 4u32 + 100u32;
        let s = IntegerSequence::new("b", vals, horizon).unwrap();
        let target = &shift * 4u32 + 13u32;
        let r = rep_count(&s, &target).unwrap();
        // 0+13 and 5+8
        assert_eq!(r.witnesses, vec![(0, 4), (2, 3)]);
        assert_eq!(s_max(&s, &target).unwrap().value, 2);
        assert!(!is_sidon(&s).ok);
    }

    fn arb_set() -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::btree_set(0u64..300, 0..40).prop_map(|s| s.into_iter().collect())
    }

    proptest! {
        #[test]
        fn profile_matches_point_counts(v in arb_set(), extra in 0u64..50) {
            let h = v.last().copied().unwrap_or(0) * 2 + extra;
            let s = IntegerSequence::from_u64s("p", &v, h).unwrap();
            for mode in [ExecMode::Sequential, ExecMode::Parallel] {
                let p = rep_profile_with(&s, &big(h), ProfileOptions { limit: 1 << 20, mode }).unwrap();
                for (n, &c) in p.iter().enumerate() {
                    prop_assert_eq!(c as u64, brute_rep(&v, n as u64));
                    prop_assert_eq!(rep_count(&s, &big(n as u64)).unwrap().count, c as u64);
                }
                // sum of profile = number of pairs with sum <= h
                let mut pairs = 0u64;
                for i in 0..v.len() { for j in i..v.len() { if v[i] + v[j] <= h { pairs += 1; } } }
                prop_assert_eq!(p.iter().map(|&c| c as u64).sum::<u64>(), pairs);
            }
        }

        #[test]
        fn s_max_strategies_agree_and_monotone(v in arb_set()) {
            let h = v.last().copied().unwrap_or(0) * 2;
            let s = IntegerSequence::from_u64s("p", &v, h).unwrap();
            let mut prev = 0;
            for x in (0..=h).step_by(7) {
                let a = s_max_with(&s, &big(x), SMaxStrategy::Profile, ExecMode::Sequential).unwrap();
                let b = s_max_with(&s, &big(x), SMaxStrategy::PairSums, ExecMode::Parallel).unwrap();
                prop_assert_eq!(&a, &b);
                prop_assert!(a.value >= prev);
                prev = a.value;
                let oracle = (0..=x).map(|n| brute_rep(&v, n)).max().unwrap_or(0);
                prop_assert_eq!(a.value, oracle);
            }
        }

        #[test]
        fn sidon_implies_unit_representations(v in arb_set()) {
            let h = v.last().copied().unwrap_or(0) * 2;
            let s = IntegerSequence::from_u64s("p", &v, h).unwrap();
            let c = is_sidon(&s);
            let smax = s_max(&s, &big(h)).unwrap().value;
            prop_assert_eq!(c.ok, smax <= 1);
            if let Some((i, j, k, l)) = c.violation {
                prop_assert_eq!(v[i] + v[j], v[k] + v[l]);
                prop_assert!(i <= j && k <= l && (i, j) != (k, l));
            }
        }
    }
}
