use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

fn big(s: &str) -> Result<BigUint, String> {
    s.trim()
        .parse::<BigUint>()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

#[derive(Parser, Debug)]
#[command(
    name = "addrep",
    version,
    about = "Additive representation functions and block constructions"
)]
pub struct Cli {
    /// Run every kernel on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// R_A(n) with witnesses.
    Rep {
        #[arg(long)]
        seq: String,
        #[arg(long, value_parser = big)]
        n: BigUint,
    },
    /// R_A(n) for n = 0..=x as CSV.
    Profile {
        #[arg(long)]
        seq: String,
        #[arg(long, value_parser = big)]
        x: BigUint,
    },
    /// s_A(x) = max over n <= x of R_A(n).
    Smax {
        #[arg(long)]
        seq: String,
        #[arg(long, value_parser = big)]
        x: BigUint,
    },
    /// A(x) = #{a in A : a <= x}.
    Count {
        #[arg(long)]
        seq: String,
        #[arg(long, value_parser = big)]
        x: BigUint,
    },
    /// d_{A,B}(x).
    Dist(PairAt),
    /// Whether all pairwise sums are distinct.
    SidonCheck {
        #[arg(long)]
        seq: String,
        /// Horizon for a builtin sequence.
        #[arg(long, value_parser = big)]
        x: Option<BigUint>,
    },
    /// The two-sided bound on s_B(x) in terms of s_A near x.
    Sandwich(PairAt),
    /// Build a construction, optionally verifying it.
    Construct {
        #[command(subcommand)]
        target: Target,
    },
    /// Build a construction and verify it.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Args, Debug)]
pub struct PairAt {
    /// Sequence file or builtin (`squares`, `cubes`).
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long, value_parser = big)]
    pub x: Option<BigUint>,
    /// Comma separated evaluation points, in addition to `--x`.
    #[arg(long, value_parser = big, value_delimiter = ',')]
    pub checkpoints: Option<Vec<BigUint>>,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Also run the verifier.
    #[arg(long)]
    pub verify: bool,
    /// Print the per-item table as CSV.
    #[arg(long)]
    pub table: bool,
    /// Output sequence files (one per produced set).
    #[arg(long, num_args = 1..=2)]
    pub out: Vec<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Lemma2Args {
    /// `a(n)`: a constant, `k*n+c`, a comma list or a file of integers.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub d: String,
    #[arg(long)]
    pub depth: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Theorem3Args {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub depth: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Theorem4Args {
    /// Table for `u_n` (same forms as the block plan tables).
    #[arg(long)]
    pub u: String,
    #[arg(long)]
    pub v: String,
    #[arg(long, default_value_t = 1)]
    pub d: u64,
    #[arg(long)]
    pub depth: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Theorem5Args {
    #[arg(long)]
    pub a: u64,
    /// Omit for an unbounded `s_B`.
    #[arg(long)]
    pub b: Option<u64>,
    /// Distance table `f(n)`.
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub depth: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SidonArgs {
    #[arg(long, default_value_t = 2)]
    pub blocks: u32,
    /// Largest block count allowed.
    #[arg(long, default_value_t = addrep::sidon::DEFAULT_BLOCK_CAP)]
    pub cap: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct KArgs {
    #[arg(long)]
    pub k: usize,
    /// Largest cube chain length allowed.
    #[arg(long, default_value_t = addrep::special::DEFAULT_CHAIN_CAP)]
    pub cap: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub xmax: u64,
    /// Comma separated checkpoints; defaults to powers of ten up to xmax.
    #[arg(long, value_delimiter = ',')]
    pub checkpoints: Option<Vec<u64>>,
    /// Constant C in |a_n^{1/3} - n| <= C sqrt(n log n).
    #[arg(long, default_value_t = addrep::randomsets::DEFAULT_DEVIATION_CONSTANT)]
    pub c: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Subcommand, Debug)]
pub enum Target {
    Lemma2(Lemma2Args),
    Theorem3(Theorem3Args),
    Theorem4(Theorem4Args),
    Theorem5(Theorem5Args),
    Sidon(SidonArgs),
    SquaresPrimorial(KArgs),
    Cubes(KArgs),
    Random(RandomArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    Lemma2(Lemma2Args),
    Theorem3(Theorem3Args),
    Theorem4(Theorem4Args),
    Theorem5(Theorem5Args),
    Sidon(SidonArgs),
    SquaresPrimorial(KArgs),
    Cubes(KArgs),
    #[command(alias = "theorem9")]
    Random(RandomArgs),
    Sandwich(PairAt),
}

impl VerifyTarget {
    /// The construct target with verification switched on, or the pair of
    /// inputs for a sandwich check.
    pub fn into_target(self) -> Result<Target, PairAt> {
        let on = |mut c: Common| {
            c.verify = true;
            c
        };
        Ok(match self {
            VerifyTarget::Lemma2(mut a) => {
                a.common = on(a.common);
                Target::Lemma2(a)
            }
            VerifyTarget::Theorem3(mut a) => {
                a.common = on(a.common);
                Target::Theorem3(a)
            }
            VerifyTarget::Theorem4(mut a) => {
                a.common = on(a.common);
                Target::Theorem4(a)
            }
            VerifyTarget::Theorem5(mut a) => {
                a.common = on(a.common);
                Target::Theorem5(a)
            }
            VerifyTarget::Sidon(mut a) => {
                a.common = on(a.common);
                Target::Sidon(a)
            }
            VerifyTarget::SquaresPrimorial(mut a) => {
                a.common = on(a.common);
                Target::SquaresPrimorial(a)
            }
            VerifyTarget::Cubes(mut a) => {
                a.common = on(a.common);
                Target::Cubes(a)
            }
            VerifyTarget::Random(mut a) => {
                a.common = on(a.common);
                Target::Random(a)
            }
            VerifyTarget::Sandwich(p) => return Err(p),
        })
    }
}
