use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("query at {requested} exceeds the certified horizon {horizon} of sequence `{label}`")]
    HorizonExceeded {
        label: String,
        requested: BigUint,
        horizon: BigUint,
    },
    #[error("range {requested} exceeds the dense limit {limit}")]
    RangeTooLarge { requested: BigUint, limit: u64 },
    #[error("index {index} qualifies for the distance at x = {x} but has no counterpart in `{missing_in}`")]
    AlignmentIncomplete {
        index: usize,
        x: BigUint,
        missing_in: String,
    },
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("block hypothesis a(n)/(4d(n)+1) <= b(n) <= (4d(n)+1)a(n) fails at n = {n}: a = {a}, b = {b}, d = {d}")]
    HypothesisViolated { n: usize, a: u64, b: u64, d: u64 },
    #[error("plan sequence `{which}` is not monotone nondecreasing (or not positive) at n = {n}")]
    NotMonotone { which: &'static str, n: usize },
    #[error("plan precondition failed: {0}")]
    PlanPrecondition(String),
    #[error("depth {requested} exceeds the tabulated plan depth {depth}")]
    DepthExceeded { requested: usize, depth: usize },
    #[error("blocks {n} and {next} share or interleave values")]
    BlockOverlap { n: usize, next: usize },
    #[error("no admissible candidate for block {m}, index {i}")]
    Exhausted { m: u32, i: u64 },
    #[error("greedy scan at block {m}, index {i} rejected {failures} candidates, at the counting bound {bound}")]
    ScanBoundExceeded {
        m: u32,
        i: u64,
        failures: u64,
        bound: u64,
    },
    #[error("block count {requested} exceeds the cap {cap}")]
    BlockCapExceeded { requested: u32, cap: u32 },
    #[error("Vieta step {step}: factor `{factor}` is not positive")]
    NonpositiveBracket { step: usize, factor: &'static str },
    #[error("cube chain length {requested} exceeds the cap {cap} (w_k would have about {} digits)", digits_estimate(*estimated_digits))]
    DigitBudget {
        requested: usize,
        cap: usize,
        estimated_digits: u64,
    },
    #[error("cube identity broken at pair {0}")]
    IdentityBroken(usize),
    #[error("cube chain pairs {0} and {1} coincide")]
    DuplicatePair(usize, usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

fn digits_estimate(d: u64) -> String {
    if d == u64::MAX {
        "more than 10^19".to_string()
    } else {
        d.to_string()
    }
}
