use addrep::constructs::{assemble, make_plan, theorem3_plan};
use addrep::randomsets::{counting_deviation, r2_profile, sample, sample_with, RandomModel};
use addrep::seqcore::{counting, dist, rep_count, s_max, sandwich_check};
use addrep::special::{squares_rep, squares_rep_with, DEFAULT_SQUARES_BUDGET};
use addrep::{ExecMode, IntegerSequence};
use num_bigint::BigUint;
use proptest::prelude::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_counting_matches_sample(seed in any::<u64>(), x_max in 1u64..20_000) {
        let a = sample(&RandomModel::new(seed, x_max));
        let mut last = 0;
        for x in (0..=x_max).step_by(97) {
            let c = counting(&a, &big(x)).unwrap();
            prop_assert!(c >= last);
            last = c;
        }
        prop_assert_eq!(counting(&a, &big(x_max)).unwrap(), a.len());
        let reps = counting_deviation(&a, &[x_max]).unwrap();
        prop_assert_eq!(reps[0].a_x, a.len());
    }

    #[test]
    fn sampling_modes_agree(seed in any::<u64>()) {
        let m = RandomModel::new(seed, 150_000);
        prop_assert_eq!(sample_with(&m, ExecMode::Sequential), sample_with(&m, ExecMode::Parallel));
    }

    #[test]
    fn r2_bounded_by_rep(seed in any::<u64>()) {
        let a = sample(&RandomModel::new(seed, 30_000));
        let (r2, _) = r2_profile(&a, 30_000).unwrap();
        for n in (0..=30_000u64).step_by(11) {
            let c = rep_count(&a, &big(n)).unwrap().count;
            let r = r2[n as usize] as u64;
            prop_assert!(r <= c && c <= r + 1);
        }
    }

    #[test]
    fn squares_modes_agree(n in 0u64..5_000_000) {
        let n = big(n);
        prop_assert_eq!(
            squares_rep_with(&n, DEFAULT_SQUARES_BUDGET, ExecMode::Sequential).unwrap(),
            squares_rep_with(&n, DEFAULT_SQUARES_BUDGET, ExecMode::Parallel).unwrap()
        );
    }

    #[test]
    fn block_outputs_sandwich_everywhere(
        (a, b, d) in (1u64..=6, 1u64..=6, 1u64..=3)
            .prop_filter("hypothesis", |&(a, b, d)| a <= (4 * d + 1) * b && b <= (4 * d + 1) * a),
        xs in proptest::collection::vec(0u64..1_000_000, 10),
    ) {
        let plan = theorem3_plan(a, b, d, 2).unwrap();
        let (sa, sb) = assemble(&plan, 2).unwrap();
        let top = plan.c(2);
        for x in xs {
            let x = big(x) % &top;
            prop_assert!(sandwich_check(&sa, &sb, &x).unwrap().holds);
            prop_assert!(sandwich_check(&sb, &sa, &x).unwrap().holds);
            prop_assert!(dist(&sa, &sb, &x).unwrap() <= big(d));
        }
    }
}

#[test]
fn block_maxima_at_the_critical_points() {
    let plan = make_plan(&[1, 2, 3], &[2, 2, 5], &[1, 1, 1]).unwrap();
    let (a, b) = assemble(&plan, 3).unwrap();
    for n in 1..=3 {
        let c = plan.c(n);
        let two_d = big(2 * plan.d(n));
        for x in [&c - &two_d, &c + &two_d] {
            assert_eq!(s_max(&a, &x).unwrap().value, plan.a(n));
            assert_eq!(s_max(&b, &x).unwrap().value, plan.b(n));
        }
        assert_eq!(dist(&a, &b, &c).unwrap(), big(plan.d(n)));
    }
}

#[test]
fn squares_rep_matches_builtin_squares_at_primorials() {
    let sq = IntegerSequence::squares(32045);
    for q in [5u64, 65, 1105, 32045] {
        assert_eq!(
            squares_rep(&big(q)).unwrap(),
            rep_count(&sq, &big(q)).unwrap().count
        );
    }
}
