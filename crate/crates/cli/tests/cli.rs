use std::path::Path;
use std::process::{Command, Output};

use addrep::IntegerSequence;

fn addrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_addrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn rep_on_builtin_squares() {
    let o = addrep(&["rep", "--seq", "squares", "--n", "1105"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("n=1105 count=4\n"), "{out}");
    assert!(out.contains("pair=529+576"));
}

#[test]
fn rep_beyond_dense_limit_uses_the_sweep() {
    let o = addrep(&["rep", "--seq", "squares", "--n", "2576450045"]);
    assert!(stdout(&o).contains("count=64"));
    let o = addrep(&["rep", "--seq", "squares", "--n", "157163452745"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count=128"), "{}", stdout(&o));
}

#[test]
fn lemma2_output_satisfies_sandwich() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "A.seq"), path(dir.path(), "B.seq"));
    let o = addrep(&[
        "construct",
        "lemma2",
        "--a",
        "2",
        "--b",
        "1",
        "--d",
        "1",
        "--depth",
        "2",
        "--out",
        &a,
        &b,
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = addrep(&["verify", "sandwich", "--a", &a, "--b", &b, "--x", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds=true"));
    let o = addrep(&[
        "verify",
        "sandwich",
        "--a",
        &a,
        "--b",
        &b,
        "--checkpoints",
        "0,9,10,99,1000002",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn out_round_trip_keeps_horizon() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "A.seq"), path(dir.path(), "B.seq"));
    let o = addrep(&[
        "construct",
        "theorem3",
        "--a",
        "1",
        "--b",
        "3",
        "--d",
        "1",
        "--depth",
        "2",
        "--out",
        &a,
        &b,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let first = IntegerSequence::read_file(&a).unwrap();
    let again = path(dir.path(), "A2.seq");
    first.write_file(&again).unwrap();
    assert_eq!(IntegerSequence::read_file(&again).unwrap(), first);
    assert_eq!(first.horizon().to_string(), "100000004");

    let r = path(dir.path(), "R.seq");
    let o = addrep(&[
        "construct",
        "random",
        "--seed",
        "5",
        "--xmax",
        "5000",
        "--out",
        &r,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = IntegerSequence::read_file(&r).unwrap();
    assert_eq!(s.horizon().to_string(), "5000");
    let again = path(dir.path(), "R2.seq");
    s.write_file(&again).unwrap();
    assert_eq!(std::fs::read(&r).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn cube_cap_is_a_usage_error() {
    let o = addrep(&["construct", "cubes", "--k", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(addrep(&["rep", "--seq", "squares"]).status.code(), Some(2));
    assert_eq!(
        addrep(&["rep", "--seq", "squares", "--n", "-3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        addrep(&["rep", "--seq", "squares", "--n", "5", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        addrep(&["count", "--seq", "/nonexistent/file", "--x", "5"])
            .status
            .code(),
        Some(2)
    );
    // hypothesis b <= (4d+1)a fails
    let o = addrep(&[
        "construct",
        "lemma2",
        "--a",
        "1",
        "--b",
        "6",
        "--d",
        "1",
        "--depth",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failing_checks_exit_one() {
    let o = addrep(&["sidon-check", "--seq", "squares", "--x", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("sidon=false"));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("FAIL: sidon-check"));

    // horizon past the last element
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.seq");
    std::fs::write(&a, "#horizon 100\n1\n2\n4\n8\n16\n32\n64\n").unwrap();
    let o = addrep(&["sidon-check", "--seq", &a]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn small_queries() {
    let o = addrep(&["smax", "--seq", "squares", "--x", "50"]);
    assert_eq!(stdout(&o).trim(), "x=50 value=2 argmax=50");
    let o = addrep(&["count", "--seq", "cubes", "--x", "30"]);
    assert_eq!(stdout(&o).trim(), "x=30 count=3");
    let o = addrep(&["profile", "--seq", "squares", "--x", "5"]);
    assert_eq!(stdout(&o), "n,r\n0,0\n1,0\n2,1\n3,0\n4,0\n5,1\n");
    let o = addrep(&["dist", "--a", "squares", "--b", "cubes", "--x", "10"]);
    assert_eq!(o.status.code(), Some(0));
    // squares 1,4,9 against cubes 1,8,27: the largest gap is |9 - 27|
    assert_eq!(stdout(&o).trim(), "x=10 d=18 position=3");
}

#[test]
fn verify_targets_pass() {
    for args in [
        &[
            "verify", "lemma2", "--a", "n", "--b", "2*n", "--d", "1", "--depth", "3",
        ][..],
        &[
            "verify", "theorem4", "--u", "1,2,3", "--v", "1,1", "--d", "1", "--depth", "3",
        ],
        &[
            "verify", "theorem5", "--a", "1", "--b", "3", "--f", "1,1,2,3", "--depth", "4",
        ],
        &["verify", "squares-primorial", "--k", "5"],
        &["verify", "cubes", "--k", "3"],
        &["verify", "theorem9", "--seed", "11", "--xmax", "100000"],
        &["verify", "random", "--seed", "11", "--xmax", "50"],
    ] {
        let o = addrep(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}{}",
            stdout(&o),
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let o = addrep(&["verify", "random", "--seed", "11", "--xmax", "50"]);
    assert!(stdout(&o).contains("bound=LOW-SAMPLE"));
}

#[test]
fn sequential_flag_gives_same_output() {
    let par = addrep(&["construct", "random", "--seed", "3", "--xmax", "200000"]);
    let seq = addrep(&[
        "--sequential",
        "construct",
        "random",
        "--seed",
        "3",
        "--xmax",
        "200000",
    ]);
    assert_eq!(stdout(&par), stdout(&seq));
}
