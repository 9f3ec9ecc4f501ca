use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A strictly increasing prefix of a sequence of nonnegative integers.
///
/// The prefix is certified complete up to `horizon`: every member of the
/// underlying (possibly infinite) set that is `<= horizon` is stored, and no
/// stored element exceeds the horizon. Queries that would need information
/// beyond the horizon fail with [`Error::HorizonExceeded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSequence {
    elements: Vec<BigUint>,
    // Mirror of `elements` when every element fits in a u64.
    small: Option<Vec<u64>>,
    horizon: BigUint,
    label: String,
}

impl IntegerSequence {
    pub fn new(label: impl Into<String>, elements: Vec<BigUint>, horizon: BigUint) -> Result<Self> {
        let label = label.into();
        if let Some(pos) = elements.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "`{label}` is not strictly increasing at position {}",
                pos + 1
            )));
        }
        if let Some(last) = elements.last() {
            if *last > horizon {
                return Err(Error::InvalidSequence(format!(
                    "`{label}` has element {last} beyond its horizon {horizon}"
                )));
            }
        }
        let small = elements.iter().map(|e| e.to_u64()).collect();
        Ok(IntegerSequence {
            elements,
            small,
            horizon,
            label,
        })
    }

    /// A finite set given in full; the horizon is its largest element.
    pub fn finite(label: impl Into<String>, elements: Vec<BigUint>) -> Result<Self> {
        let horizon = elements.last().cloned().unwrap_or_default();
        Self::new(label, elements, horizon)
    }

    pub fn from_u64s(label: impl Into<String>, elements: &[u64], horizon: u64) -> Result<Self> {
        Self::new(
            label,
            elements.iter().map(|&e| BigUint::from(e)).collect(),
            BigUint::from(horizon),
        )
    }

    /// Sorts and deduplicates before building.
    pub fn from_unsorted(
        label: impl Into<String>,
        mut elements: Vec<BigUint>,
        horizon: BigUint,
    ) -> Result<Self> {
        elements.sort();
        elements.dedup();
        Self::new(label, elements, horizon)
    }

    pub fn empty(label: impl Into<String>) -> Self {
        IntegerSequence {
            elements: Vec::new(),
            small: Some(Vec::new()),
            horizon: BigUint::zero(),
            label: label.into(),
        }
    }

    /// Positive squares `1, 4, 9, ...` up to `horizon`.
    pub fn squares(horizon: u64) -> Self {
        Self::powers("squares", 2, horizon)
    }

    /// Positive cubes `1, 8, 27, ...` up to `horizon`.
    pub fn cubes(horizon: u64) -> Self {
        Self::powers("cubes", 3, horizon)
    }

    fn powers(label: &str, exp: u32, horizon: u64) -> Self {
        let elems: Vec<u64> = (1u64..)
            .map(|k| k.checked_pow(exp))
            .take_while(|v| v.is_some_and(|v| v <= horizon))
            .flatten()
            .collect();
        Self::from_u64s(label, &elems, horizon).expect("powers are strictly increasing")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn horizon(&self) -> &BigUint {
        &self.horizon
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    /// The elements as machine words, when they all fit.
    pub fn small(&self) -> Option<&[u64]> {
        self.small.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The element at 0-based position `t`.
    pub fn get(&self, t: usize) -> Option<&BigUint> {
        self.elements.get(t)
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        self.elements.binary_search(n).is_ok()
    }

    /// Number of stored elements `<= x`, without a horizon check.
    pub(crate) fn count_le(&self, x: &BigUint) -> usize {
        match (&self.small, x.to_u64()) {
            (Some(s), Some(x)) => s.partition_point(|&e| e <= x),
            (Some(s), None) => s.len(),
            _ => self.elements.partition_point(|e| e <= x),
        }
    }

    pub(crate) fn require_horizon(&self, x: &BigUint) -> Result<()> {
        if *x > self.horizon {
            Err(Error::HorizonExceeded {
                label: self.label.clone(),
                requested: x.clone(),
                horizon: self.horizon.clone(),
            })
        } else {
            Ok(())
        }
    }

    /// Parses the line-oriented sequence format.
    ///
    /// Blank lines and lines starting with `#` are ignored, except for the
    /// directives `#horizon <decimal>` and `#label <text>`, which must appear
    /// before the first element. Without a horizon directive the horizon is
    /// the last element.
    pub fn parse(text: &str, default_label: &str) -> Result<Self> {
        let mut horizon: Option<BigUint> = None;
        let mut label = default_label.to_string();
        let mut elements = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if elements.is_empty() {
                    if let Some(h) = rest.strip_prefix("horizon") {
                        let h = h.trim();
                        horizon = Some(h.parse().map_err(|_| Error::Parse {
                            line: idx + 1,
                            message: format!("bad horizon `{h}`"),
                        })?);
                    } else if let Some(l) = rest.strip_prefix("label") {
                        label = l.trim().to_string();
                    }
                }
                continue;
            }
            let v: BigUint = line.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("not a nonnegative decimal integer: `{line}`"),
            })?;
            elements.push(v);
        }
        let horizon = horizon.unwrap_or_else(|| elements.last().cloned().unwrap_or_default());
        Self::new(label, elements, horizon)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "#horizon {}", self.horizon);
        if !self.label.is_empty() {
            let _ = writeln!(out, "#label {}", self.label);
        }
        for e in &self.elements {
            let _ = writeln!(out, "{e}");
        }
        out
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Self::parse(&text, &stem)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}
