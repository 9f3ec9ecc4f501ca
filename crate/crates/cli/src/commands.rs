use std::fmt::Display;
use std::path::PathBuf;

use addrep::constructs::{
    assemble, lemma2_verify_with, make_plan, theorem3_plan, theorem4_plan, theorem4_ratios,
    theorem5_distances, theorem5_plan, BlockPlan,
};
use addrep::randomsets::{self, RandomModel};
use addrep::seqcore::{
    counting, dist_witness, is_sidon, rep_count, rep_profile_with, s_max, sandwich_check,
    ProfileOptions,
};
use addrep::sidon::{build_capped, theorem6_verify};
use addrep::special::{
    cube_chain_capped, squares_lower_bound_check_with, squares_rep_with, theorem8_verify_with,
    DEFAULT_SQUARES_BUDGET,
};
use addrep::{ExecMode, IntegerSequence};
use num_bigint::BigUint;

use crate::args::{
    Cli, Command, Common, KArgs, Lemma2Args, PairAt, RandomArgs, SidonArgs, Target, Theorem3Args,
    Theorem4Args, Theorem5Args,
};
use crate::input::{parse_table, with_pair, Builtin, Source, SQUARES_LIMIT};
use crate::outcome::{check, input, Failure, Outcome};

/// One line of space separated `key=value` fields.
fn record(fields: &[(&str, &dyn Display)]) {
    let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
    println!("{}", line.join(" "));
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn run(cli: Cli) -> Outcome {
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    match cli.command {
        Command::Rep { seq, n } => rep(&seq, &n, mode),
        Command::Profile { seq, x } => {
            let s = Source::parse(&seq)?.at(&x)?;
            let profile = rep_profile_with(
                &s,
                &x,
                ProfileOptions {
                    mode,
                    ..Default::default()
                },
            )?;
            println!("n,r");
            for (n, r) in profile.iter().enumerate() {
                println!("{n},{r}");
            }
            Ok(())
        }
        Command::Smax { seq, x } => {
            let s = Source::parse(&seq)?.at(&x)?;
            let m = s_max(&s, &x)?;
            record(&[("x", &x), ("value", &m.value), ("argmax", &m.argmax)]);
            Ok(())
        }
        Command::Count { seq, x } => {
            let s = Source::parse(&seq)?.at(&x)?;
            record(&[("x", &x), ("count", &counting(&s, &x)?)]);
            Ok(())
        }
        Command::Dist(p) => {
            let (a, b) = (Source::parse(&p.a)?, Source::parse(&p.b)?);
            for x in points(&p)? {
                let (d, t) = with_pair(&a, &b, &x, |a, b| dist_witness(a, b, &x))?;
                let position = t.map_or("none".to_string(), |t| (t + 1).to_string());
                record(&[("x", &x), ("d", &d), ("position", &position)]);
            }
            Ok(())
        }
        Command::SidonCheck { seq, x } => {
            let src = Source::parse(&seq)?;
            let s = match (&src, x) {
                (Source::File(s), _) => s.clone(),
                (Source::Builtin(_), Some(x)) => src.at(&x)?,
                (Source::Builtin(_), None) => return Err(input("a builtin sequence needs --x")),
            };
            let c = is_sidon(&s);
            match c.violation {
                None => record(&[("sidon", &true), ("elements", &s.len())]),
                Some((i, j, k, l)) => {
                    let e = |t: usize| s.elements()[t].clone();
                    let v = format!("{}+{}={}+{}", e(i), e(j), e(k), e(l));
                    record(&[("sidon", &false), ("elements", &s.len()), ("violation", &v)]);
                }
            }
            check(c.ok, || "sidon-check: repeated pair sum".into())
        }
        Command::Sandwich(p) => sandwich(&p),
        Command::Construct { target } => construct(target, mode),
        Command::Verify { target } => match target.into_target() {
            Ok(t) => construct(t, mode),
            Err(p) => sandwich(&p),
        },
    }
}

fn rep(seq: &str, n: &BigUint, mode: ExecMode) -> Outcome {
    let src = Source::parse(seq)?;
    if matches!(src, Source::Builtin(Builtin::Squares)) && *n > BigUint::from(SQUARES_LIMIT) {
        let count = squares_rep_with(n, DEFAULT_SQUARES_BUDGET, mode)?;
        record(&[("n", n), ("count", &count)]);
        return Ok(());
    }
    let s = src.at(n)?;
    let r = rep_count(&s, n)?;
    record(&[("n", n), ("count", &r.count)]);
    for (i, j) in r.witnesses {
        let pair = format!("{}+{}", s.elements()[i], s.elements()[j]);
        record(&[("pair", &pair)]);
    }
    Ok(())
}

fn points(p: &PairAt) -> Result<Vec<BigUint>, Failure> {
    let mut pts: Vec<BigUint> = p.x.iter().cloned().collect();
    pts.extend(p.checkpoints.iter().flatten().cloned());
    if pts.is_empty() {
        return Err(input("give --x or --checkpoints"));
    }
    Ok(pts)
}

fn sandwich(p: &PairAt) -> Outcome {
    let (a, b) = (Source::parse(&p.a)?, Source::parse(&p.b)?);
    let mut first_bad = None;
    for x in points(p)? {
        let r = with_pair(&a, &b, &x, |a, b| sandwich_check(a, b, &x))?;
        let lower = format!("{}/{}", r.lower_num, r.lower_den);
        record(&[
            ("x", &r.x),
            ("d", &r.d),
            ("s_a_minus", &r.s_a_minus),
            ("s_b", &r.s_b),
            ("s_a_plus", &r.s_a_plus),
            ("lower", &lower),
            ("upper", &r.upper),
            ("holds", &r.holds),
        ]);
        if !r.holds && first_bad.is_none() {
            let side = if r.lower_holds() { "upper" } else { "lower" };
            first_bad = Some(format!("sandwich: {side} bound fails at x = {}", r.x));
        }
    }
    match first_bad {
        Some(msg) => Err(Failure::Check(msg)),
        None => Ok(()),
    }
}

fn write_pair(out: &[PathBuf], a: &IntegerSequence, b: &IntegerSequence) -> Outcome {
    match out {
        [] => {
            println!("A={}", join(a.elements()));
            println!("B={}", join(b.elements()));
            Ok(())
        }
        [pa, pb] => {
            a.write_file(pa)?;
            b.write_file(pb)?;
            Ok(())
        }
        _ => Err(input("--out needs two paths for a pair of sequences")),
    }
}

fn construct(target: Target, mode: ExecMode) -> Outcome {
    match target {
        Target::Lemma2(args) => lemma2(args, mode),
        Target::Theorem3(args) => theorem3(args, mode),
        Target::Theorem4(args) => theorem4(args, mode),
        Target::Theorem5(args) => theorem5(args, mode),
        Target::Sidon(args) => sidon(args),
        Target::SquaresPrimorial(args) => squares_primorial(args, mode),
        Target::Cubes(args) => cubes(args, mode),
        Target::Random(args) => random(args, mode),
    }
}

/// Assembles `plan` to `depth`, writes or prints the sets, and runs the
/// block checks when asked.
fn run_plan(
    plan: &BlockPlan,
    depth: usize,
    common: &Common,
    mode: ExecMode,
) -> Result<(IntegerSequence, IntegerSequence), Failure> {
    let (a, b) = assemble(plan, depth)?;
    let c_n = if depth > 0 {
        plan.c(depth)
    } else {
        BigUint::default()
    };
    record(&[
        ("depth", &depth),
        ("t", &if depth > 0 { plan.t(depth) } else { 0 }),
        ("c_n", &c_n),
        ("horizon", a.horizon()),
        ("len_a", &a.len()),
        ("len_b", &b.len()),
    ]);
    write_pair(&common.out, &a, &b)?;
    if common.verify {
        let report = lemma2_verify_with(plan, depth, mode)?;
        if common.table {
            println!("n,property,expected,observed,pass");
            for c in &report.checks {
                println!(
                    "{},{},\"{}\",\"{}\",{}",
                    c.n, c.property, c.expected, c.observed, c.pass
                );
            }
        }
        record(&[
            ("lemma2", &if report.all_pass() { "pass" } else { "fail" }),
            ("checks", &report.checks.len()),
        ]);
        if let Some(f) = report.first_failure() {
            return Err(Failure::Check(format!(
                "lemma2 block {} property ({}): expected {}, observed {}",
                f.n, f.property, f.expected, f.observed
            )));
        }
    }
    Ok((a, b))
}

fn lemma2(args: Lemma2Args, mode: ExecMode) -> Outcome {
    let depth = args.depth;
    let plan = make_plan(
        &parse_table(&args.a, depth, "a")?,
        &parse_table(&args.b, depth, "b")?,
        &parse_table(&args.d, depth, "d")?,
    )?;
    run_plan(&plan, depth, &args.common, mode).map(|_| ())
}

fn theorem3(args: Theorem3Args, mode: ExecMode) -> Outcome {
    let plan = theorem3_plan(args.a, args.b, args.d, args.depth)?;
    run_plan(&plan, args.depth, &args.common, mode).map(|_| ())
}

fn theorem4(args: Theorem4Args, mode: ExecMode) -> Outcome {
    let depth = args.depth;
    let u = parse_table(&args.u, depth / 2 + 1, "u")?;
    let v = parse_table(&args.v, depth.div_ceil(2), "v")?;
    let t4 = theorem4_plan(&u, &v, args.d, depth)?;
    let (a, b) = run_plan(&t4.plan, depth, &args.common, mode)?;
    let samples = theorem4_ratios(&t4, &a, &b, depth)?;
    println!("block,observed,expected,match");
    for s in &samples {
        println!(
            "{},{}/{},{}/{},{}",
            s.block,
            s.observed.0,
            s.observed.1,
            s.expected.0,
            s.expected.1,
            s.matches()
        );
    }
    if args.common.verify {
        if let Some(s) = samples.iter().find(|s| !s.matches()) {
            return Err(Failure::Check(format!(
                "theorem4 ratio at block {}: {}/{} != {}/{}",
                s.block, s.observed.0, s.observed.1, s.expected.0, s.expected.1
            )));
        }
    }
    Ok(())
}

fn theorem5(args: Theorem5Args, mode: ExecMode) -> Outcome {
    let f = parse_table(&args.f, args.depth, "f")?;
    let plan = theorem5_plan(args.a, args.b, &f)?;
    let (a, b) = run_plan(&plan, args.depth, &args.common, mode)?;
    let bad = theorem5_distances(&a, &b, &f);
    let checked = a.len().min(b.len()).min(f.len());
    let first = bad.map_or("none".to_string(), |k| k.to_string());
    record(&[
        ("indices_checked", &checked),
        ("first_distance_violation", &first),
    ]);
    if args.common.verify {
        check(bad.is_none(), || {
            format!("theorem5 distance |a_k - b_k| > f(k) at k = {first}")
        })?;
    }
    Ok(())
}

fn sidon(args: SidonArgs) -> Outcome {
    let result = build_capped(args.blocks, args.cap)?;
    record(&[
        ("blocks", &result.blocks),
        ("len_a", &result.a.len()),
        ("len_b", &result.b.len()),
        ("horizon", result.a.horizon()),
        ("max_scan_failures", &result.max_failures),
    ]);
    if args.common.table {
        println!("m,i,a_i,b_i,mirror");
        for r in &result.rows {
            println!("{},{},{},{},{}", r.m, r.i, r.a, r.b, r.mirror);
        }
    }
    write_pair(&args.common.out, &result.a, &result.b)?;
    if args.common.verify {
        let report = theorem6_verify(&result)?;
        let ratio = report
            .cube_ratio
            .map_or("none".to_string(), |(lo, hi)| format!("{lo:.6}..{hi:.6}"));
        record(&[
            ("sidon", &report.sidon.ok),
            ("max_distance", &report.max_distance),
            ("cube_ratio", &ratio),
        ]);
        for t in &report.targets {
            record(&[
                ("m", &t.m),
                ("target", &t.target),
                ("r_b", &t.count),
                ("required", &t.required),
            ]);
        }
        if let Some(f) = report.first_failure() {
            return Err(Failure::Check(format!("theorem6 {f}")));
        }
    }
    Ok(())
}

fn squares_primorial(args: KArgs, mode: ExecMode) -> Outcome {
    let samples = squares_lower_bound_check_with(args.k, DEFAULT_SQUARES_BUDGET, mode)?;
    println!("K,Q_K,reps,expected,exponent");
    for s in &samples {
        println!(
            "{},{},{},{},{:.6}",
            s.k, s.q, s.reps, s.expected, s.exponent
        );
    }
    if args.common.verify {
        if let Some(s) = samples.iter().find(|s| !s.exact()) {
            return Err(Failure::Check(format!(
                "squares-primorial K = {}: R(Q_K) = {} != {}",
                s.k, s.reps, s.expected
            )));
        }
    }
    Ok(())
}

fn cubes(args: KArgs, mode: ExecMode) -> Outcome {
    let chain = cube_chain_capped(args.k, args.cap)?;
    let w_digits = chain.w[chain.k - 1].to_string().len();
    record(&[
        ("k", &chain.k),
        ("w_digits", &w_digits),
        ("n_digits", &chain.n.to_string().len()),
    ]);
    if args.common.table {
        println!("n={}", chain.n);
        println!("i,u_i,v_i,w_i,x_i,y_i");
        for i in 0..chain.k {
            println!(
                "{},{},{},{},{},{}",
                i + 1,
                chain.u[i],
                chain.v[i],
                chain.w[i],
                chain.x[i],
                chain.y[i]
            );
        }
    }
    if args.common.verify {
        let r = theorem8_verify_with(&chain, mode)?;
        let flags = |v: &[bool]| {
            join(
                v.iter()
                    .enumerate()
                    .map(|(i, ok)| format!("{}:{ok}", i + 1)),
            )
        };
        record(&[
            ("identity", &"ok"),
            ("distinct_pairs", &r.distinct_pairs),
            ("within_digit_bound", &r.within_digit_bound),
            ("digit_bound", &r.digit_bound),
            ("ratios_decreasing", &r.ratios_decreasing),
            ("ratio_claim", &flags(&r.ratio_claim)),
            ("w_growth_claim", &flags(&r.w_growth_claim)),
        ]);
        check(r.within_digit_bound, || {
            format!(
                "cubes: N has {} digits, above {}",
                r.n_digits, r.digit_bound
            )
        })?;
    }
    Ok(())
}

fn default_checkpoints(xmax: u64) -> Vec<u64> {
    let mut pts: Vec<u64> = std::iter::successors(Some(10u64), |p| p.checked_mul(10))
        .take_while(|&p| p <= xmax)
        .collect();
    if pts.last() != Some(&xmax) && xmax > 0 {
        pts.push(xmax);
    }
    pts
}

fn random(args: RandomArgs, mode: ExecMode) -> Outcome {
    let model = RandomModel::new(args.seed, args.xmax);
    let a = randomsets::sample_with(&model, mode);
    record(&[
        ("seed", &args.seed),
        ("xmax", &args.xmax),
        ("elements", &a.len()),
    ]);
    match args.common.out.as_slice() {
        [] => {}
        [p] => a.write_file(p)?,
        _ => return Err(input("--out takes one path for a single sequence")),
    }
    let checkpoints = args
        .checkpoints
        .clone()
        .unwrap_or_else(|| default_checkpoints(args.xmax));
    if args.common.verify {
        let r = randomsets::theorem9_verify(&a, &checkpoints, args.c)?;
        let bound = r
            .bound_ok
            .map_or("LOW-SAMPLE".to_string(), |ok| ok.to_string());
        record(&[
            ("n0", &r.r2.n0),
            ("max_r2", &r.r2.max_overall),
            ("max_r2_beyond_n0", &r.r2.max_beyond),
            ("max_ratio", &format!("{:.4}", r.max_ratio)),
            ("worst_index", &r.worst_index),
            ("c", &r.constant),
            ("bound", &bound),
        ]);
        let envelope = randomsets::r2_envelope(&checkpoints);
        record(&[
            ("r2_envelope_c", &format!("{:.6}", envelope.fitted_c)),
            ("r2_envelope_bound", &format!("{:.6}", envelope.bound)),
            ("r2_envelope_ok", &envelope.ok),
        ]);
        print_deviations(&r.deviations);
        if let Some(f) = r.first_failure() {
            return Err(Failure::Check(format!("theorem9 {f}")));
        }
        check(envelope.ok, || "theorem9 expected r2 envelope".into())?;
    } else {
        print_deviations(&randomsets::counting_deviation(&a, &checkpoints)?);
    }
    Ok(())
}

fn print_deviations(rows: &[randomsets::DeviationReport]) {
    println!("x,A_x,expected,band,within");
    for d in rows {
        println!(
            "{},{},{:.6},{:.6},{}",
            d.x, d.a_x, d.expected, d.band, d.within
        );
    }
}
