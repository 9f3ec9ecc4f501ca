//! Greedy construction of a Sidon set `A` with a companion set `B` that
//! stays within `O(n^{1/3})` of `A` index by index while
//! `R_B(1000^{m+1}) >= 10^m`.
//!
//! Block `m` holds `2·10^m` elements. For `1 <= i <= 10^m` the greedy scan
//! picks the smallest `c` in `[200·1000^m + i, 300·1000^m + i]` such that
//! `c` and its mirror `1000^{m+1} + i - c` keep `A` a Sidon set and create
//! no sum `1000^{m+1} + j` for `i < j <= 10^m`. Then `b_i = c - i` and `B`
//! shares the mirrors, so `b_i + mirror_i = 1000^{m+1}` for every `i`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::seqcore::{is_sidon, rep_count, IntegerSequence, SidonCheck};

/// Default largest block index built.
pub const DEFAULT_BLOCK_CAP: u32 = 3;
/// Hard limit: all pair sums of block 5 still fit in a u64.
pub const MAX_BLOCKS: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SidonRow {
    pub m: u32,
    pub i: u64,
    pub a: u64,
    pub b: u64,
    pub mirror: u64,
}

/// Partial construction: all accepted elements and their pair sums.
#[derive(Debug, Clone)]
pub struct GreedyState {
    m: u32,
    i: u64,
    chosen: Vec<u64>,
    pair_sums: HashSet<u64>,
    block_b: HashSet<u64>,
    rows: Vec<SidonRow>,
    max_failures: u64,
}

fn thousand_pow(m: u32) -> u64 {
    1000u64.pow(m)
}

fn ten_pow(m: u32) -> u64 {
    10u64.pow(m)
}

/// The seed block `A_0 = {201, 800}`, `B_0 = {200, 800}`, ready for block 1.
pub fn seed_state() -> GreedyState {
    let chosen = vec![201u64, 800];
    let pair_sums = [402u64, 1001, 1600].into_iter().collect();
    GreedyState {
        m: 1,
        i: 1,
        chosen,
        pair_sums,
        block_b: HashSet::new(),
        rows: vec![SidonRow {
            m: 0,
            i: 1,
            a: 201,
            b: 200,
            mirror: 800,
        }],
        max_failures: 0,
    }
}

impl GreedyState {
    pub fn block(&self) -> u32 {
        self.m
    }

    /// 1-based index of the next pair to choose in the current block.
    pub fn next_index(&self) -> u64 {
        self.i
    }

    /// Accepted elements in acceptance order.
    pub fn chosen(&self) -> &[u64] {
        &self.chosen
    }

    pub fn pair_sums(&self) -> &HashSet<u64> {
        &self.pair_sums
    }

    pub fn rows(&self) -> &[SidonRow] {
        &self.rows
    }

    /// Largest number of rejected candidates in any single step so far.
    pub fn max_failures(&self) -> u64 {
        self.max_failures
    }

    /// Sums `1000^{m+1} + j`, `next_index <= j <= 10^m`, that no pair sum
    /// may hit, as an inclusive range.
    pub fn forbidden_window(&self) -> (u64, u64) {
        let target = thousand_pow(self.m + 1);
        (target + self.i, target + ten_pow(self.m))
    }

    fn admissible(&self, c: u64, mirror: u64, scratch: &mut Vec<u64>) -> bool {
        if self.block_b.contains(&(c - self.i)) {
            return false;
        }
        let target = thousand_pow(self.m + 1);
        let (win_lo, win_hi) = (target + self.i + 1, target + ten_pow(self.m));
        let fresh = |s: u64| !self.pair_sums.contains(&s) && !(win_lo..=win_hi).contains(&s);
        scratch.clear();
        for &x in &self.chosen {
            let s = c + x;
            if !fresh(s) {
                return false;
            }
            scratch.push(s);
        }
        for &x in &self.chosen {
            let s = mirror + x;
            if !fresh(s) {
                return false;
            }
            scratch.push(s);
        }
        for s in [2 * c, 2 * mirror, c + mirror] {
            if !fresh(s) {
                return false;
            }
            scratch.push(s);
        }
        scratch.sort_unstable();
        scratch.windows(2).all(|w| w[0] != w[1])
    }

    /// Chooses `a_i^{(m)}` and its mirror, advancing to the next block when
    /// the current one is full. Returns the accepted row.
    pub fn next_element(&mut self) -> Result<SidonRow> {
        let (m, i) = (self.m, self.i);
        let scale = thousand_pow(m);
        let target = thousand_pow(m + 1);
        let bound = 100 * scale;
        let mut scratch = Vec::with_capacity(2 * self.chosen.len() + 3);
        let mut failures = 0u64;
        let mut accepted = None;
        for c in 200 * scale + i..=300 * scale + i {
            let mirror = target + i - c;
            if self.admissible(c, mirror, &mut scratch) {
                accepted = Some((c, mirror));
                break;
            }
            failures += 1;
            if failures >= bound {
                return Err(Error::ScanBoundExceeded {
                    m,
                    i,
                    failures,
                    bound,
                });
            }
        }
        let (c, mirror) = accepted.ok_or(Error::Exhausted { m, i })?;
        self.pair_sums.extend(scratch.iter().copied());
        self.chosen.push(c);
        self.chosen.push(mirror);
        self.block_b.insert(c - i);
        self.max_failures = self.max_failures.max(failures);
        let row = SidonRow {
            m,
            i,
            a: c,
            b: c - i,
            mirror,
        };
        self.rows.push(row);
        if i == ten_pow(m) {
            self.m += 1;
            self.i = 1;
            self.block_b.clear();
            self.check_window_on_entry()?;
        } else {
            self.i += 1;
        }
        Ok(row)
    }

    fn check_window_on_entry(&self) -> Result<()> {
        if self.m > MAX_BLOCKS {
            return Ok(());
        }
        let (lo, hi) = self.forbidden_window();
        if self.pair_sums.iter().any(|s| (lo..=hi).contains(s)) {
            return Err(Error::Exhausted {
                m: self.m,
                i: self.i,
            });
        }
        Ok(())
    }
}

/// The constructed pair of sets with the per-pair table.
#[derive(Debug, Clone)]
pub struct SidonPairResult {
    pub a: IntegerSequence,
    pub b: IntegerSequence,
    pub rows: Vec<SidonRow>,
    pub blocks: u32,
    pub max_failures: u64,
}

/// Builds blocks `1..=m_max` on top of the seed, refusing `m_max` above `cap`.
pub fn build_capped(m_max: u32, cap: u32) -> Result<SidonPairResult> {
    let cap = cap.min(MAX_BLOCKS);
    if m_max > cap {
        return Err(Error::BlockCapExceeded {
            requested: m_max,
            cap,
        });
    }
    let mut state = seed_state();
    while state.block() <= m_max {
        state.next_element()?;
    }
    // The next block starts at 200·1000^{m_max+1}, so both prefixes are
    // complete below it.
    let horizon: BigUint = Pow::pow(BigUint::from(1000u32), m_max + 1) * 200u32 - 1u32;
    let mut a_vals = state.chosen.clone();
    let mut b_vals: Vec<u64> = state.rows.iter().flat_map(|r| [r.b, r.mirror]).collect();
    a_vals.sort_unstable();
    b_vals.sort_unstable();
    let to_big = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect::<Vec<_>>();
    Ok(SidonPairResult {
        a: IntegerSequence::new("A", to_big(a_vals), horizon.clone())?,
        b: IntegerSequence::new("B", to_big(b_vals), horizon)?,
        rows: state.rows,
        blocks: m_max,
        max_failures: state.max_failures,
    })
}

pub fn build(m_max: u32) -> Result<SidonPairResult> {
    build_capped(m_max, DEFAULT_BLOCK_CAP)
}

#[derive(Debug, Clone)]
pub struct RepTarget {
    pub m: u32,
    pub target: BigUint,
    pub count: u64,
    pub required: u64,
}

#[derive(Debug, Clone)]
pub struct Theorem6Report {
    pub sidon: SidonCheck,
    pub targets: Vec<RepTarget>,
    /// First 1-based `N` with `|a_N - b_N| > N`.
    pub distance_violation: Option<usize>,
    pub max_distance: u64,
    /// Extremes of `a_N / N^3` over the prefix; `None` when empty.
    pub cube_ratio: Option<(f64, f64)>,
    /// Structural problems with the per-block table, if any.
    pub table_faults: Vec<String>,
}

impl Theorem6Report {
    pub fn all_pass(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<String> {
        if !self.sidon.ok {
            return Some(format!("sidon: violation {:?}", self.sidon.violation));
        }
        if let Some(t) = self.targets.iter().find(|t| t.count < t.required) {
            return Some(format!(
                "rep_target: R_B({}) = {} < {}",
                t.target, t.count, t.required
            ));
        }
        if let Some(n) = self.distance_violation {
            return Some(format!("distance: |a_N - b_N| > N at N = {n}"));
        }
        self.table_faults.first().map(|f| format!("table: {f}"))
    }
}

pub fn theorem6_verify(result: &SidonPairResult) -> Result<Theorem6Report> {
    let sidon = is_sidon(&result.a);
    let mut targets = Vec::new();
    for m in 0..=result.blocks {
        let target: BigUint = Pow::pow(BigUint::from(1000u32), m + 1);
        let count = rep_count(&result.b, &target)?.count;
        targets.push(RepTarget {
            m,
            target,
            count,
            required: ten_pow(m),
        });
    }
    let a = result
        .a
        .small()
        .expect("sidon construction fits machine words");
    let b = result
        .b
        .small()
        .expect("sidon construction fits machine words");
    let mut distance_violation = None;
    let mut max_distance = 0;
    let mut lo = f64::INFINITY;
    let mut hi = 0f64;
    for (k, (&x, &y)) in a.iter().zip(b).enumerate() {
        let n = k + 1;
        let diff = x.abs_diff(y);
        max_distance = max_distance.max(diff);
        if diff > n as u64 && distance_violation.is_none() {
            distance_violation = Some(n);
        }
        let r = x as f64 / (n as f64).powi(3);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    let cube_ratio = (!a.is_empty()).then_some((lo, hi));

    let mut table_faults = Vec::new();
    for m in 0..=result.blocks {
        let scale = thousand_pow(m);
        let target = thousand_pow(m + 1);
        let rows: Vec<&SidonRow> = result.rows.iter().filter(|r| r.m == m).collect();
        if rows.len() as u64 != ten_pow(m) {
            table_faults.push(format!("block {m} has {} pairs", rows.len()));
        }
        let mut seen = HashSet::new();
        for r in rows {
            if !(200 * scale..=300 * scale).contains(&r.b) {
                table_faults.push(format!("b out of range at m = {m}, i = {}", r.i));
            }
            if r.a != r.b + r.i || r.mirror != target - r.b {
                table_faults.push(format!("mirror identity fails at m = {m}, i = {}", r.i));
            }
            if !seen.insert(r.b) {
                table_faults.push(format!("repeated b at m = {m}, i = {}", r.i));
            }
        }
    }
    Ok(Theorem6Report {
        sidon,
        targets,
        distance_violation,
        max_distance,
        cube_ratio,
        table_faults,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed() {
        let s = seed_state();
        assert_eq!(s.chosen(), &[201, 800]);
        let mut sums: Vec<u64> = s.pair_sums().iter().copied().collect();
        sums.sort_unstable();
        assert_eq!(sums, vec![402, 1001, 1600]);
        assert_eq!(s.forbidden_window(), (1_000_001, 1_000_010));
    }

    // Oracle for a single step: the smallest c that keeps the enlarged set
    // Sidon (checked by full pair enumeration) and respects the window and
    // b-distinctness.
    fn brute_next(chosen: &[u64], used_b: &[u64], m: u32, i: u64) -> u64 {
        let (scale, target) = (thousand_pow(m), thousand_pow(m + 1));
        'cand: for c in 200 * scale + i..=300 * scale + i {
            if used_b.contains(&(c - i)) {
                continue;
            }
            let mut set = chosen.to_vec();
            set.push(c);
            set.push(target + i - c);
            let mut sums = Vec::new();
            for x in 0..set.len() {
                for y in x..set.len() {
                    let s = set[x] + set[y];
                    if s > target + i && s <= target + ten_pow(m) {
                        continue 'cand;
                    }
                    sums.push(s);
                }
            }
            sums.sort_unstable();
            if sums.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            return c;
        }
        panic!("no candidate");
    }

    #[test]
    fn first_block_matches_brute_force_scan() {
        let mut s = seed_state();
        let mut used_b = Vec::new();
        for i in 1..=10u64 {
            let expect = brute_next(s.chosen(), &used_b, 1, i);
            let row = s.next_element().unwrap();
            assert_eq!(row.a, expect, "i = {i}");
            assert_eq!(row.a + row.mirror, 1_000_000 + i);
            used_b.push(row.b);
            let all = IntegerSequence::from_unsorted(
                "A",
                s.chosen().iter().map(|&v| BigUint::from(v)).collect(),
                BigUint::from(10u64.pow(7)),
            )
            .unwrap();
            assert!(is_sidon(&all).ok);
            if s.block() == 1 {
                let (lo, hi) = s.forbidden_window();
                assert!(s.pair_sums().iter().all(|v| !(lo..=hi).contains(v)));
            }
        }
        assert_eq!(s.block(), 2);
        assert_eq!(s.rows()[1].a, 200_001);
    }

    #[test]
    fn block_sizes() {
        let r = build(0).unwrap();
        assert_eq!(r.a.len(), 2);
        assert_eq!(r.b.small().unwrap(), &[200, 800]);
        let r = build(1).unwrap();
        assert_eq!((r.a.len(), r.b.len()), (22, 22));
        let rep = theorem6_verify(&r).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.first_failure());
        assert!(rep.targets[1].count >= 10);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            build(4),
            Err(Error::BlockCapExceeded {
                requested: 4,
                cap: 3
            })
        ));
        assert!(matches!(
            build_capped(6, 9),
            Err(Error::BlockCapExceeded { cap: 5, .. })
        ));
    }

    #[test]
    fn seed_only_verifies() {
        let r = build(0).unwrap();
        let rep = theorem6_verify(&r).unwrap();
        assert!(rep.sidon.ok);
        assert!(rep.all_pass());
    }
}
