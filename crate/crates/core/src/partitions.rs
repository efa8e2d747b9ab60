//! Integer partitions and their elementary operations.
//!
//! A [`Partition`] is a nonempty finite multiset of positive integers,
//! stored weakly decreasing. The decreasing storage order is the single
//! canonical form used everywhere in this crate, so partition equality is
//! plain structural equality.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// An integer partition: a nonempty weakly decreasing sequence of positive
/// integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from entries in any order (the multiset is what
    /// matters; storage is canonicalized to weakly decreasing).
    ///
    /// Errors on an empty sequence or on a zero entry.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; partitions are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest part.
    pub fn first_part(&self) -> u32 {
        self.parts[0]
    }

    /// Sum of the parts.
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate partition, obtained by reflecting the Ferrers diagram.
    ///
    /// The result has length equal to the largest part, and conjugation is
    /// an involution.
    pub fn transpose(&self) -> Partition {
        let largest = self.parts[0] as usize;
        let mut mult = vec![0u32; largest + 1];
        for &p in &self.parts {
            mult[p as usize] += 1;
        }
        // conjugate part j = #{i : parts[i] >= j} = suffix sum of multiplicities
        let mut out = Vec::with_capacity(largest);
        let mut running = 0u32;
        for j in (1..=largest).rev() {
            running += mult[j];
            out.push(running);
        }
        out.reverse();
        Partition { parts: out }
    }

    /// Multiplicity of the value `j` among the parts.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// The set of distinct part values, ascending.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut vals: Vec<u32> = self.parts.clone();
        vals.dedup();
        vals.reverse();
        vals
    }

    /// Whether this partition indexes a basis vector under `c`: length
    /// exactly `c.k` and every part at most `c.n`.
    pub fn satisfies(&self, c: &PartitionConstraint) -> bool {
        self.parts.len() == c.k && self.parts[0] <= c.n
    }

    fn check(&self, c: &PartitionConstraint) -> Result<()> {
        if self.parts.len() != c.k {
            return Err(Error::LengthMismatch {
                expected: c.k,
                actual: self.parts.len(),
            });
        }
        if self.parts[0] > c.n {
            return Err(Error::PartTooLarge {
                part: self.parts[0],
                max: c.n,
            });
        }
        Ok(())
    }

    /// Like [`Partition::satisfies`] but reporting which condition failed.
    pub fn check_constraint(&self, c: &PartitionConstraint) -> Result<()> {
        self.check(c)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// Shape constraint for basis indices of `V^⊠k`: length exactly `k`, parts
/// at most `n`. The bound on parts is equivalent to the conjugate having
/// length at most `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionConstraint {
    /// Required number of parts.
    pub k: usize,
    /// Maximum part value.
    pub n: u32,
}

impl PartitionConstraint {
    /// Builds a constraint; errors unless `k >= 1` and `n >= 1`.
    pub fn new(k: usize, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidConstraint);
        }
        Ok(PartitionConstraint { k, n })
    }
}

/// All partitions of length exactly `c.k` with parts in `{1..c.n}`, listed
/// in ascending lexicographic order of the decreasing part tuples:
/// (1,1) < (2,1) < (2,2) < (3,1) < ... This order is the index order of the
/// multiset basis of `V^⊠k`.
pub fn enumerate_constrained(c: &PartitionConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(c.k);
    fn rec(current: &mut Vec<u32>, k: usize, n: u32, out: &mut Vec<Partition>) {
        if current.len() == k {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let max = current.last().copied().unwrap_or(n);
        for v in 1..=max {
            current.push(v);
            rec(current, k, n, out);
            current.pop();
        }
    }
    rec(&mut current, c.k, c.n, &mut out);
    out
}

/// All partitions of the integer `k` (sum of parts equals `k`), listed in
/// descending lexicographic order: (k), (k-1,1), ..., (1,...,1).
pub fn enumerate_partitions_of(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(k, k, &mut current, &mut out);
    out
}

/// Binomial coefficient `C(n, r)` as an exact big integer.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
