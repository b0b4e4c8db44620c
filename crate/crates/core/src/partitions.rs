//! Integer partitions with a bounded number of parts and a bounded largest
//! part, and the dimension coefficient `d_lambda(m)`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::ExactCount;

/// A weakly decreasing list of positive parts. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_row(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `r`, 0 past the last row.
    pub fn row(&self, r: usize) -> u32 {
        self.parts.get(r).copied().unwrap_or(0)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// At most `max_parts` parts, each at most `max_part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionBounds {
    pub max_parts: u32,
    pub max_part: u32,
}

impl PartitionBounds {
    pub fn new(max_parts: u32, max_part: u32) -> Self {
        PartitionBounds {
            max_parts,
            max_part,
        }
    }

    /// No partition inside the bounds weighs more than this.
    pub fn max_weight(&self) -> u64 {
        u64::from(self.max_parts) * u64::from(self.max_part)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() <= self.max_parts as usize && p.first_row() <= self.max_part
    }
}

/// All partitions of `weight` inside `bounds`, in reverse-lexicographic order
/// (largest first part first).
pub fn enumerate_partitions(weight: u64, bounds: PartitionBounds) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill(
        weight,
        bounds.max_part,
        bounds.max_parts,
        &mut prefix,
        &mut out,
    );
    out
}

fn fill(remaining: u64, cap: u32, slots: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    // Every remaining slot holds at most `cap`.
    if slots == 0 || u64::from(cap) * u64::from(slots) < remaining {
        return;
    }
    let top = u64::from(cap).min(remaining) as u32;
    for part in (1..=top).rev() {
        prefix.push(part);
        fill(remaining - u64::from(part), part, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// `0! 1! ... (m-1)!`
pub fn superfactorial(m: u32) -> BigUint {
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for k in 1..m {
        fact *= k;
        acc *= &fact;
    }
    acc
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=m`,
/// from the product over pairs of rows of `lambda_i - i - lambda_j + j`
/// divided by `0! 1! ... (m-1)!`. Returns 0 when `lambda` has more than `m` rows.
pub fn d_lambda(lambda: &Partition, m: u32) -> ExactCount {
    if lambda.len() > m as usize {
        return ExactCount::zero();
    }
    let m = m as usize;
    let mut num = BigUint::one();
    for i in 0..m {
        let li = i64::from(lambda.row(i));
        for j in (i + 1)..m {
            let lj = i64::from(lambda.row(j));
            let factor = li - lj + (j - i) as i64;
            debug_assert!(factor > 0);
            num *= factor as u64;
        }
    }
    let (q, r) = num.div_rem(&superfactorial(m as u32));
    assert!(
        r.is_zero(),
        "d_lambda: inexact division for {lambda} with m = {m}"
    );
    ExactCount(q)
}
