//! Integer partitions and partitions with equal sums of squares.
//!
//! Two partitions of the same integer with the same sum of squares also share
//! the sum of pairwise part products, since
//! `(Σ a)² = Σ a² + 2 Σ_{i<j} a_i a_j`. Those two sums are exactly the
//! multiplicities that differ between gluings by different partitions, which
//! is why such pairs produce graphs with equal resistance spectra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts parts in any order and sorts them descending.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// `[1, 1, ..., 1]` with `k` parts.
    pub fn ones(k: usize) -> Result<Self> {
        Self::new(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&a| (a as u64) * (a as u64)).sum()
    }

    /// `Σ_{i<j} a_i a_j`.
    pub fn pairwise_product_sum(&self) -> u64 {
        let mut acc = 0u64;
        let mut prefix = 0u64;
        for &a in &self.0 {
            acc += prefix * a as u64;
            prefix += a as u64;
        }
        acc
    }

    /// `Σ a_i (a_i - 1) / 2`, the number of pairs of pieces sharing a block.
    pub fn within_block_pairs(&self) -> u64 {
        self.0
            .iter()
            .map(|&a| (a as u64) * (a as u64 - 1) / 2)
            .sum()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `{3,1,1}`, `3,1,1` or `3 1 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("`{t}` is not a part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Iterator over the partitions of `t` in reverse-lexicographic order,
/// starting with `{t}` and ending with `{1,...,1}`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        // Strip trailing ones, decrement the last part > 1, then refill with
        // copies of the new value followed by the remainder.
        let mut ones = 0;
        while cur.last() == Some(&1) {
            cur.pop();
            ones += 1;
        }
        match cur.pop() {
            None => self.current = None,
            Some(largest_tail) => {
                let m = largest_tail - 1;
                cur.push(m);
                let mut rest = ones + 1;
                while rest > m {
                    cur.push(m);
                    rest -= m;
                }
                cur.push(rest);
            }
        }
        Some(Partition(out))
    }
}

/// Enumerates the partitions of `t ≥ 1`.
pub fn partitions(t: usize) -> Result<Partitions> {
    if t == 0 {
        return Err(Error::InvalidParameter("partitions need t ≥ 1".into()));
    }
    Ok(Partitions {
        current: Some(vec![t]),
    })
}

/// `p(t)` by Euler's pentagonal-number recurrence, independent of the
/// enumerator. `p(0) = 1`.
pub fn partition_count(t: usize) -> u128 {
    let mut table = vec![0i128; t + 1];
    table[0] = 1;
    for i in 1..=t {
        let mut sum = 0i128;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * table[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                sum += sign * table[i - g2];
            }
        }
        table[i] = sum;
    }
    table[t] as u128
}

/// All unordered pairs of distinct partitions of `t` with equal sums of
/// squares. Within a pair, and across pairs, enumeration order is kept.
pub fn equal_sos_pairs(t: usize) -> Result<Vec<(Partition, Partition)>> {
    let all: Vec<Partition> = partitions(t)?.collect();
    let sos: Vec<u64> = all.iter().map(Partition::sum_of_squares).collect();
    let mut pairs = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if sos[i] == sos[j] {
                pairs.push((all[i].clone(), all[j].clone()));
            }
        }
    }
    Ok(pairs)
}
