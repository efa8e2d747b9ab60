//! Set-partitions of `{1..k, 1'..k'}` and their classification under
//! independent relabelings of the top and bottom vertices.
//!
//! The canonical invariant of a class is its [`BlockShapeMultiset`]: the
//! multiset of `(top size, bottom size)` profiles of the blocks. Relabeling
//! the top row by one permutation and the bottom row by another preserves
//! exactly these profiles, and any two diagrams with equal profiles are
//! related by such relabelings, so the invariant is complete.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::centralizer::{canonical_pair_shape, PairShape};
use crate::partitions::{Partition, PartitionConstraint};
use crate::{Error, Result};

/// Hard ceiling for whole-diagram enumeration: Bell(2k) diagrams, and
/// Bell(8) = 4140 is the intended oracle scale.
pub const SET_PARTITION_ENUMERATION_MAX_K: usize = 4;

/// One block of a diagram: its top vertices (unprimed, as indices in
/// `1..=k`) and bottom vertices (primed, as indices in `1..=k`), each
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Block {
    /// The least vertex of the block in the order
    /// `1 < ... < k < 1' < ... < k'`, encoded as `(is_bottom, index)`.
    fn min_vertex(&self) -> (bool, u32) {
        match self.top.first() {
            Some(&t) => (false, t),
            None => (true, self.bottom[0]),
        }
    }
}

/// A set-partition of the `2k` vertices `{1..k, 1'..k'}`, stored with
/// block elements ascending and blocks ordered by least vertex (which, for
/// disjoint blocks, is their lexicographic order with respect to
/// `1 < ... < k < 1' < ... < k'`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartitionDiagram {
    k: usize,
    blocks: Vec<Block>,
}

impl SetPartitionDiagram {
    /// Builds a diagram from blocks given as `(top, bottom)` vertex lists,
    /// validating that the blocks are nonempty, disjoint, and cover all of
    /// `{1..k, 1'..k'}`. Block and element order in the input is irrelevant.
    pub fn new(k: usize, blocks: Vec<(Vec<u32>, Vec<u32>)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDiagram("k must be at least 1".into()));
        }
        let mut seen_top = vec![false; k + 1];
        let mut seen_bottom = vec![false; k + 1];
        let mut canonical = Vec::with_capacity(blocks.len());
        for (mut top, mut bottom) in blocks {
            if top.is_empty() && bottom.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            for &v in &top {
                if v == 0 || v as usize > k {
                    return Err(Error::InvalidDiagram(format!(
                        "top vertex {v} outside 1..={k}"
                    )));
                }
                if seen_top[v as usize] {
                    return Err(Error::InvalidDiagram(format!(
                        "top vertex {v} appears in two blocks"
                    )));
                }
                seen_top[v as usize] = true;
            }
            for &v in &bottom {
                if v == 0 || v as usize > k {
                    return Err(Error::InvalidDiagram(format!(
                        "bottom vertex {v}' outside 1..={k}"
                    )));
                }
                if seen_bottom[v as usize] {
                    return Err(Error::InvalidDiagram(format!(
                        "bottom vertex {v}' appears in two blocks"
                    )));
                }
                seen_bottom[v as usize] = true;
            }
            top.sort_unstable();
            bottom.sort_unstable();
            canonical.push(Block { top, bottom });
        }
        for v in 1..=k {
            if !seen_top[v] || !seen_bottom[v] {
                return Err(Error::InvalidDiagram(format!(
                    "vertex {v} or {v}' is not covered"
                )));
            }
        }
        canonical.sort_by_key(|b| b.min_vertex());
        Ok(SetPartitionDiagram {
            k,
            blocks: canonical,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks in canonical order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The canonical invariant of the diagram's relabeling class: the
    /// multiset of `(top size, bottom size)` block profiles, sorted
    /// descending.
    pub fn block_shape(&self) -> BlockShapeMultiset {
        let mut shape: Vec<(u32, u32)> = self
            .blocks
            .iter()
            .map(|b| (b.top.len() as u32, b.bottom.len() as u32))
            .collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        BlockShapeMultiset { shape, k: self.k }
    }

    /// The 2×k component-label matrix: blocks are numbered in order of
    /// first appearance along `1 < ... < k < 1' < ... < k'`, and entry
    /// `(0, j-1)` (resp. `(1, j-1)`) is the label of the block containing
    /// the top vertex `j` (resp. bottom vertex `j'`).
    pub fn component_matrix(&self) -> [Vec<u32>; 2] {
        // canonical block order is first-appearance order
        let mut top_row = vec![0u32; self.k];
        let mut bottom_row = vec![0u32; self.k];
        for (label0, block) in self.blocks.iter().enumerate() {
            let label = label0 as u32 + 1;
            for &v in &block.top {
                top_row[v as usize - 1] = label;
            }
            for &v in &block.bottom {
                bottom_row[v as usize - 1] = label;
            }
        }
        [top_row, bottom_row]
    }

    /// The pair of partitions obtained by sorting the rows of the
    /// component-label matrix; both have length `k`.
    pub fn row_partitions(&self) -> (Partition, Partition) {
        let [top, bottom] = self.component_matrix();
        (
            Partition::new(top).expect("k >= 1 top labels"),
            Partition::new(bottom).expect("k >= 1 bottom labels"),
        )
    }

    /// The class-level bijection onto orbit classes of basis-index pairs:
    /// the canonical pair shape of the row partitions. Requires the stable
    /// range `2k <= n`, where it is constant on relabeling classes and a
    /// bijection onto the orbit classes.
    pub fn to_pair_shape(&self, n: u32) -> Result<PairShape> {
        if (n as usize) < 2 * self.k {
            return Err(Error::StableRangeRequired { k: self.k, n });
        }
        let (lambda, mu) = self.row_partitions();
        let c = PartitionConstraint::new(self.k, n)?;
        canonical_pair_shape(&lambda, &mu, &c)
    }

    /// JSON form: `{"k":…, "blocks":[{"top":[…], "bottom":[…]}…]}` with
    /// blocks in canonical order.
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "blocks": self.blocks,
        })
    }

    /// Parses the JSON form accepted by [`SetPartitionDiagram::to_json`],
    /// revalidating the block structure.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            k: usize,
            blocks: Vec<Block>,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| Error::InvalidDiagram(format!("malformed diagram JSON: {e}")))?;
        SetPartitionDiagram::new(
            raw.k,
            raw.blocks.into_iter().map(|b| (b.top, b.bottom)).collect(),
        )
    }
}

impl fmt::Display for SetPartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for b in &self.blocks {
            let mut elems: Vec<String> = b.top.iter().map(|v| v.to_string()).collect();
            elems.extend(b.bottom.iter().map(|v| format!("{v}'")));
            parts.push(format!("{{{}}}", elems.join(",")));
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Canonical invariant of a relabeling class of diagrams: the multiset of
/// `(top size, bottom size)` block profiles, sorted descending. Both
/// coordinate sums equal `k` and no entry is `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockShapeMultiset {
    shape: Vec<(u32, u32)>,
    k: usize,
}

impl BlockShapeMultiset {
    /// The block profiles, descending lexicographic.
    pub fn entries(&self) -> &[(u32, u32)] {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The partition of `k` formed by the nonzero top sizes.
    pub fn top_partition(&self) -> Partition {
        Partition::new(self.shape.iter().map(|t| t.0).filter(|&u| u > 0).collect())
            .expect("top sizes sum to k >= 1")
    }

    /// The partition of `k` formed by the nonzero bottom sizes.
    pub fn bottom_partition(&self) -> Partition {
        Partition::new(self.shape.iter().map(|t| t.1).filter(|&l| l > 0).collect())
            .expect("bottom sizes sum to k >= 1")
    }

    /// The same multiset read as an orbit-class invariant at a given `n`.
    /// Requires the stable range `2k <= n` (below it, not every profile
    /// multiset is realizable by at most `n` values).
    pub fn as_pair_shape(&self, n: u32) -> Result<PairShape> {
        if (n as usize) < 2 * self.k {
            return Err(Error::StableRangeRequired { k: self.k, n });
        }
        let nu = Partition::new(
            self.shape
                .iter()
                .enumerate()
                .flat_map(|(i, &(u, _))| std::iter::repeat_n(i as u32 + 1, u as usize))
                .collect(),
        )
        .expect("top sizes sum to k >= 1");
        let gamma = Partition::new(
            self.shape
                .iter()
                .enumerate()
                .flat_map(|(i, &(_, l))| std::iter::repeat_n(i as u32 + 1, l as usize))
                .collect(),
        )
        .expect("bottom sizes sum to k >= 1");
        let c = PartitionConstraint::new(self.k, n)?;
        canonical_pair_shape(&nu, &gamma, &c)
    }
}

impl Serialize for BlockShapeMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.shape.len()))?;
        for pair in &self.shape {
            seq.serialize_element(&[pair.0, pair.1])?;
        }
        seq.end()
    }
}

/// All relabeling classes for a given `k`: every multiset of profiles
/// `(u, l) != (0, 0)` with `Σu = Σl = k`, sorted ascending by the canonical
/// (descending) profile list. Generated directly, without touching the
/// Bell-sized set of diagrams.
pub fn enumerate_block_shapes(k: usize) -> Vec<BlockShapeMultiset> {
    let kk = k as u32;
    let mut out = Vec::new();
    let mut current: Vec<(u32, u32)> = Vec::new();
    // choose profiles in descending order; bound is the largest profile
    // still allowed
    fn rec(
        remaining: (u32, u32),
        bound: (u32, u32),
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        let (ru, rl) = remaining;
        if ru == 0 && rl == 0 {
            out.push(current.clone());
            return;
        }
        if bound.0 == 0 && ru > 0 {
            return; // profiles below the bound all have top size 0
        }
        let u_hi = bound.0.min(ru);
        for u in (0..=u_hi).rev() {
            let l_hi = if u == bound.0 { bound.1.min(rl) } else { rl };
            for l in (0..=l_hi).rev() {
                if u == 0 && l == 0 {
                    continue;
                }
                current.push((u, l));
                rec((ru - u, rl - l), (u, l), current, out);
                current.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec((kk, kk), (kk, kk), &mut current, &mut raw);
    for shape in raw {
        out.push(BlockShapeMultiset { shape, k });
    }
    out.sort();
    out
}

/// All set-partitions of the `2k` vertices, via restricted growth strings.
/// Capped at `k <= 4` (Bell(2k) growth); above that use
/// [`enumerate_block_shapes`] or [`enumerate_set_partitions_bounded`].
pub fn enumerate_set_partitions(k: usize) -> Result<Vec<SetPartitionDiagram>> {
    enumerate_set_partitions_bounded(k, SET_PARTITION_ENUMERATION_MAX_K)
}

/// Like [`enumerate_set_partitions`], with an explicit ceiling on `k`.
pub fn enumerate_set_partitions_bounded(
    k: usize,
    max_k: usize,
) -> Result<Vec<SetPartitionDiagram>> {
    if k == 0 {
        return Err(Error::InvalidDiagram("k must be at least 1".into()));
    }
    if k > max_k {
        return Err(Error::EnumerationTooLarge { k, max: max_k });
    }
    let total = 2 * k;
    let mut out = Vec::new();
    // restricted growth string: labels[0] = 0, labels[i] <= 1 + max(labels[..i])
    let mut labels = vec![0usize; total];
    fn rec(pos: usize, next_label: usize, labels: &mut Vec<usize>, k: usize, out: &mut Vec<SetPartitionDiagram>) {
        let total = 2 * k;
        if pos == total {
            let block_count = next_label;
            let mut blocks: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new()); block_count];
            for (i, &label) in labels.iter().enumerate() {
                if i < k {
                    blocks[label].0.push(i as u32 + 1);
                } else {
                    blocks[label].1.push((i - k) as u32 + 1);
                }
            }
            out.push(
                SetPartitionDiagram::new(k, blocks)
                    .expect("restricted growth strings produce valid diagrams"),
            );
            return;
        }
        for label in 0..=next_label.min(pos) {
            labels[pos] = label;
            let next = if label == next_label {
                next_label + 1
            } else {
                next_label
            };
            rec(pos + 1, next, labels, k, out);
        }
    }
    rec(0, 0, &mut labels, k, &mut out);
    Ok(out)
}

/// Realizes an orbit-class representative `(ν, γ)` as a diagram: for each
/// value `i`, one block takes the next `m_i(ν)` top vertices and the next
/// `m_i(γ)` bottom vertices, chaining by cumulative counts. The resulting
/// diagram's row partitions reproduce `(ν, γ)` up to relabeling, so its
/// class maps back onto the class of `(ν, γ)`.
pub fn diagram_realizing_pair(nu: &Partition, gamma: &Partition) -> Result<SetPartitionDiagram> {
    if nu.len() != gamma.len() {
        return Err(Error::LengthMismatch {
            expected: nu.len(),
            actual: gamma.len(),
        });
    }
    let k = nu.len();
    let max_value = nu.first_part().max(gamma.first_part());
    let mut blocks = Vec::new();
    let mut top_used = 0u32;
    let mut bottom_used = 0u32;
    for value in 1..=max_value {
        let uppers = nu.multiplicity(value) as u32;
        let lowers = gamma.multiplicity(value) as u32;
        if uppers == 0 && lowers == 0 {
            continue;
        }
        let top: Vec<u32> = (top_used + 1..=top_used + uppers).collect();
        let bottom: Vec<u32> = (bottom_used + 1..=bottom_used + lowers).collect();
        top_used += uppers;
        bottom_used += lowers;
        blocks.push((top, bottom));
    }
    SetPartitionDiagram::new(k, blocks)
}
