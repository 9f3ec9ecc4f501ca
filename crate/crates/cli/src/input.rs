use std::path::Path;

use addrep::{Error, IntegerSequence};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::outcome::{input, Failure};

/// Largest horizon at which the builtin squares are materialized.
pub const SQUARES_LIMIT: u64 = 100_000_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Squares,
    Cubes,
}

impl Builtin {
    pub fn named(name: &str) -> Option<Builtin> {
        match name {
            "squares" => Some(Builtin::Squares),
            "cubes" => Some(Builtin::Cubes),
            _ => None,
        }
    }

    fn limit(self) -> u64 {
        match self {
            Builtin::Squares => SQUARES_LIMIT,
            Builtin::Cubes => u64::MAX,
        }
    }
}

/// Positive squares or cubes up to `horizon`.
pub fn builtin_sequence(which: Builtin, horizon: &BigUint) -> Result<IntegerSequence, Failure> {
    let h = horizon
        .to_u64()
        .filter(|&h| h <= which.limit())
        .ok_or_else(|| {
            input(format!(
                "horizon {horizon} is beyond the builtin limit {}",
                which.limit()
            ))
        })?;
    Ok(match which {
        Builtin::Squares => IntegerSequence::squares(h),
        Builtin::Cubes => IntegerSequence::cubes(h),
    })
}

pub fn read_sequence(path: &str) -> Result<IntegerSequence, Failure> {
    IntegerSequence::read_file(path).map_err(|e| input(format!("{path}: {e}")))
}

/// A `--seq` argument: a builtin name or a sequence file read once.
pub enum Source {
    Builtin(Builtin),
    File(IntegerSequence),
}

impl Source {
    pub fn parse(spec: &str) -> Result<Source, Failure> {
        match Builtin::named(spec) {
            Some(b) => Ok(Source::Builtin(b)),
            None => read_sequence(spec).map(Source::File),
        }
    }

    pub fn at(&self, horizon: &BigUint) -> Result<IntegerSequence, Failure> {
        match self {
            Source::Builtin(b) => builtin_sequence(*b, horizon),
            Source::File(s) => Ok(s.clone()),
        }
    }

    fn is_builtin(&self) -> bool {
        matches!(self, Source::Builtin(_))
    }
}

/// Runs `f` on a pair of sources, re-materializing builtins at larger
/// horizons while `f` reports that it needs more of them.
pub fn with_pair<T>(
    a: &Source,
    b: &Source,
    start: &BigUint,
    f: impl Fn(&IntegerSequence, &IntegerSequence) -> addrep::Result<T>,
) -> Result<T, Failure> {
    let cap = BigUint::from(SQUARES_LIMIT);
    let mut h = start.clone().max(BigUint::from(1u32));
    loop {
        let (sa, sb) = (a.at(&h)?, b.at(&h)?);
        match f(&sa, &sb) {
            Err(Error::HorizonExceeded { ref requested, .. })
                if (a.is_builtin() || b.is_builtin()) && h < cap =>
            {
                h = requested.clone().max(&h * 2u32);
            }
            Err(Error::AlignmentIncomplete { .. })
                if (a.is_builtin() || b.is_builtin()) && h < cap =>
            {
                h *= 4u32;
            }
            other => return other.map_err(Failure::from),
        }
    }
}

/// A plan table `t(1..=depth)`: a constant, an affine `k*n+c`, a comma
/// separated list, or a file of whitespace or comma separated integers.
pub fn parse_table(spec: &str, depth: usize, name: &str) -> Result<Vec<u64>, Failure> {
    let bad = |why: &str| input(format!("--{name} `{spec}`: {why}"));
    let list = |text: &str| -> Result<Vec<u64>, Failure> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| bad("not an integer list")))
            .collect()
    };
    let values = if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| bad(&e.to_string()))?;
        list(&text)?
    } else if spec.contains(',') {
        list(spec)?
    } else if let Some((coef, rest)) = spec.replace(' ', "").split_once('n') {
        let coef = coef.trim_end_matches('*');
        let k: u64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| bad("bad coefficient"))?
        };
        let c: u64 = match rest.strip_prefix('+') {
            Some(c) => c.parse().map_err(|_| bad("bad offset"))?,
            None if rest.is_empty() => 0,
            None => return Err(bad("expected `k*n+c`")),
        };
        (1..=depth as u64)
            .map(|n| {
                k.checked_mul(n)
                    .and_then(|v| v.checked_add(c))
                    .ok_or_else(|| bad("overflow"))
            })
            .collect::<Result<_, _>>()?
    } else {
        let v: u64 = spec.trim().parse().map_err(|_| bad("not an integer"))?;
        vec![v; depth]
    };
    if values.len() < depth {
        return Err(bad(&format!("{} values for depth {depth}", values.len())));
    }
    Ok(values[..depth].to_vec())
}
