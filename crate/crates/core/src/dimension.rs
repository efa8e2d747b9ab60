//! Dimension computations: a closed matching-based counting formula and a
//! three-way cross-check against orbit counting and diagram-class counting.
//!
//! The closed formula sums, over all pairs `(λ, μ)` of partitions of `k`
//! and all partial matchings between their distinct part values, the
//! product over matched value pairs `(a, b)` of
//! `min(multiplicity of a in λ, multiplicity of b in μ)`.
//!
//! A warning that matters in practice: the formula is exact for `k <= 2`
//! but undercounts from `k = 3` on, because a matching pairs each distinct
//! part value at most once and therefore cannot describe configurations in
//! which two equal-sized blocks on one side join blocks of two different
//! sizes on the other. Exact counts for every `k` come from
//! [`crate::diagrams::enumerate_block_shapes`] (stable range) or
//! [`crate::centralizer::dimension_by_orbits`] (any `n`); the cross-check
//! reports all three.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::centralizer::dimension_by_orbits;
use crate::diagrams::enumerate_block_shapes;
use crate::partitions::{enumerate_partitions_of, Partition, PartitionConstraint};

/// A partial matching between two finite sets of values: each value is
/// used by at most one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMatching {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    /// Matched `(left value, right value)` pairs, ordered by left value.
    pub edges: Vec<(u32, u32)>,
}

/// All partial matchings between `left` and `right`, including the empty
/// one. Enumeration is by recursive match-or-skip over the left values in
/// order, with the skip branch first, so the output order is deterministic
/// and the empty matching comes first.
pub fn enumerate_matchings(left: &[u32], right: &[u32]) -> Vec<PartialMatching> {
    let mut out = Vec::new();
    let mut edges = Vec::new();
    let mut used = vec![false; right.len()];
    fn rec(
        left: &[u32],
        right: &[u32],
        i: usize,
        used: &mut Vec<bool>,
        edges: &mut Vec<(u32, u32)>,
        out: &mut Vec<PartialMatching>,
    ) {
        if i == left.len() {
            out.push(PartialMatching {
                left: left.to_vec(),
                right: right.to_vec(),
                edges: edges.clone(),
            });
            return;
        }
        rec(left, right, i + 1, used, edges, out);
        for (j, &r) in right.iter().enumerate() {
            if !used[j] {
                used[j] = true;
                edges.push((left[i], r));
                rec(left, right, i + 1, used, edges, out);
                edges.pop();
                used[j] = false;
            }
        }
    }
    rec(left, right, 0, &mut used, &mut edges, &mut out);
    out
}

/// The inner sum of the closed formula for one `(λ, μ)` pair: over all
/// partial matchings of the distinct part values, the product of
/// `min(m_a(λ), m_b(μ))` over matched pairs `(a, b)`; the empty matching
/// contributes 1.
pub fn matching_weight_sum(lambda: &Partition, mu: &Partition) -> BigUint {
    let left = lambda.distinct_parts();
    let right = mu.distinct_parts();
    let mut total = BigUint::zero();
    for matching in enumerate_matchings(&left, &right) {
        let mut product = BigUint::one();
        for (a, b) in &matching.edges {
            let weight = lambda.multiplicity(*a).min(mu.multiplicity(*b));
            product *= BigUint::from(weight);
        }
        total += product;
    }
    total
}

/// The closed matching-based count for a given `k`, independent of `n`:
/// `Σ_{λ,μ ⊢ k} Σ_{matchings} Π_edges min(m_a(λ), m_b(μ))`.
///
/// Exact for `k <= 2`; an undercount of the stable-range dimension for
/// `k >= 3` (see the module docs).
pub fn dimension_formula(k: u32) -> BigUint {
    let parts = enumerate_partitions_of(k);
    let mut total = BigUint::zero();
    for lambda in &parts {
        for mu in &parts {
            total += matching_weight_sum(lambda, mu);
        }
    }
    total
}

/// Result of computing the dimension by up to three routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub k: usize,
    pub n: u32,
    /// Orbit counting; valid for every `n`.
    pub orbit: BigUint,
    /// Diagram-class counting; only applicable in the stable range `2k <= n`.
    pub diagram: Option<BigUint>,
    /// The closed matching formula; only applicable in the stable range.
    pub formula: Option<BigUint>,
    /// Whether every computed value agrees.
    pub agree: bool,
}

impl DimensionReport {
    /// JSON form:
    /// `{"k":…, "n":…, "orbit":…, "diagram":…|null, "formula":…|null, "agree":…}`
    /// with exact (arbitrary-precision) JSON numbers.
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "n": self.n,
            "orbit": big_json(&self.orbit),
            "diagram": self.diagram.as_ref().map(big_json),
            "formula": self.formula.as_ref().map(big_json),
            "agree": self.agree,
        })
    }
}

/// Renders a big integer as an exact JSON number.
pub fn big_json(v: &BigUint) -> Value {
    let number: serde_json::Number = v
        .to_string()
        .parse()
        .expect("a decimal integer is a valid JSON number");
    Value::Number(number)
}

/// Computes the dimension of the centralizer algebra for `(k, n)` by every
/// applicable method and reports whether they agree. Orbit counting is
/// always computed; diagram-class counting and the closed formula apply
/// only in the stable range `2k <= n`.
///
/// Disagreement between the orbit/diagram counts would falsify the orbit
/// basis construction and never happens; the closed formula genuinely
/// disagrees with both for `k >= 3` (it undercounts), and `agree` reports
/// that honestly.
pub fn dimension_crosscheck(c: &PartitionConstraint) -> DimensionReport {
    let orbit = dimension_by_orbits(c);
    let stable = 2 * c.k <= c.n as usize;
    let diagram = stable.then(|| BigUint::from(enumerate_block_shapes(c.k).len()));
    let formula = stable.then(|| dimension_formula(c.k as u32));
    let mut agree = true;
    if let Some(d) = &diagram {
        agree &= d == &orbit;
    }
    if let Some(f) = &formula {
        agree &= f == &orbit;
    }
    DimensionReport {
        k: c.k,
        n: c.n,
        orbit,
        diagram,
        formula,
        agree,
    }
}
