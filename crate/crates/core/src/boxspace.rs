//! The commutative tensor power `V^⊠k` over an `n`-dimensional space: its
//! multiset basis, the value action of `S_n`, the trivial place action of
//! `S_k`, and sparse exact-integer endomorphisms.
//!
//! Basis vectors are indexed by partitions of length `k` with parts at most
//! `n`. An endomorphism `B` sends the basis vector indexed by `λ` to
//! `Σ_μ B^λ_μ · v_μ`; a [`SparseEndo`] stores the coefficient `B^λ_μ` at
//! key `(row = μ, col = λ)`, so composition is the usual matrix product
//! with vectors as columns.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::partitions::{binomial, enumerate_constrained, Partition, PartitionConstraint};
use crate::{Error, Result};

/// Dimension of `V^⊠k`: the number of length-`k` partitions with parts at
/// most `n`, which is `C(n+k-1, n-1)`.
pub fn box_dimension(c: &PartitionConstraint) -> BigUint {
    binomial((c.n as u64) + (c.k as u64) - 1, (c.n as u64) - 1)
}

/// The indexed multiset basis of `V^⊠k`: a bijection between `0..D-1` and
/// the constrained partitions, in enumeration order.
#[derive(Debug, Clone)]
pub struct BoxBasis {
    constraint: PartitionConstraint,
    index: Vec<Partition>,
    position: HashMap<Partition, usize>,
}

impl BoxBasis {
    pub fn new(constraint: PartitionConstraint) -> Self {
        let index = enumerate_constrained(&constraint);
        let position = index
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        BoxBasis {
            constraint,
            index,
            position,
        }
    }

    pub fn constraint(&self) -> &PartitionConstraint {
        &self.constraint
    }

    /// Number of basis vectors.
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// The partition indexing basis vector `i`.
    pub fn partition_at(&self, i: usize) -> &Partition {
        &self.index[i]
    }

    /// The index of a partition, if it satisfies the constraint.
    pub fn position_of(&self, p: &Partition) -> Option<usize> {
        self.position.get(p).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.index.iter()
    }
}

/// A permutation of the values `{1..n}`, acting on basis indices by
/// relabeling parts and re-sorting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuePermutation {
    images: Vec<u32>,
}

impl ValuePermutation {
    /// Builds a permutation from images: `images[i-1]` is the image of `i`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v as usize] = true;
        }
        Ok(ValuePermutation { images })
    }

    pub fn identity(n: u32) -> Self {
        ValuePermutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition swapping `a` and `b` inside `{1..n}`.
    pub fn transposition(a: u32, b: u32, n: u32) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::NotAPermutation(n as usize));
        }
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Ok(ValuePermutation { images })
    }

    /// Degree `n` of the permutation.
    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of a single value.
    pub fn apply(&self, v: u32) -> u32 {
        self.images[v as usize - 1]
    }

    /// Group product: `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &ValuePermutation) -> Result<Self> {
        if self.images.len() != other.images.len() {
            return Err(Error::NotAPermutation(self.images.len()));
        }
        let images = (1..=self.degree()).map(|v| self.apply(other.apply(v))).collect();
        Ok(ValuePermutation { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        ValuePermutation { images }
    }

    /// All `n!` permutations of `{1..n}`, in lexicographic image order.
    pub fn all(n: u32) -> Vec<ValuePermutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n as usize);
        let mut used = vec![false; n as usize + 1];
        fn rec(
            n: u32,
            current: &mut Vec<u32>,
            used: &mut Vec<bool>,
            out: &mut Vec<ValuePermutation>,
        ) {
            if current.len() == n as usize {
                out.push(ValuePermutation {
                    images: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v as usize] {
                    used[v as usize] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v as usize] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

/// The value action of `σ ∈ S_n` on a basis index: relabel every part by
/// `σ` and re-sort. Errors if some part exceeds the degree of `σ`.
pub fn value_act(sigma: &ValuePermutation, lambda: &Partition) -> Result<Partition> {
    let n = sigma.degree();
    let mut parts = Vec::with_capacity(lambda.len());
    for &p in lambda.parts() {
        if p > n {
            return Err(Error::PartTooLarge { part: p, max: n });
        }
        parts.push(sigma.apply(p));
    }
    Partition::new(parts)
}

/// The place action of `π ∈ S_k` on a basis index. Because basis indices
/// are multisets, every place permutation fixes every basis vector; this
/// validates its inputs and returns the index unchanged.
///
/// `pi` is given by images: `pi[i-1]` is the image of position `i`.
pub fn place_act(pi: &[usize], lambda: &Partition) -> Result<Partition> {
    let k = lambda.len();
    if pi.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            actual: pi.len(),
        });
    }
    let mut seen = vec![false; k + 1];
    for &v in pi {
        if v == 0 || v > k || seen[v] {
            return Err(Error::NotAPermutation(k));
        }
        seen[v] = true;
    }
    Ok(lambda.clone())
}

/// A sparse endomorphism of `V^⊠k` with exact integer coefficients.
///
/// Keys are `(row, col)` pairs of basis indices; the stored value at
/// `(μ, λ)` is the coefficient of `v_μ` in the image of `v_λ`. Zero
/// coefficients are never stored, so the zero endomorphism is the empty
/// map and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseEndo {
    constraint: PartitionConstraint,
    entries: BTreeMap<(Partition, Partition), BigInt>,
}

impl SparseEndo {
    /// The zero endomorphism.
    pub fn zero(constraint: PartitionConstraint) -> Self {
        SparseEndo {
            constraint,
            entries: BTreeMap::new(),
        }
    }

    /// The identity endomorphism `Σ_λ E^λ_λ`.
    pub fn identity(constraint: PartitionConstraint) -> Self {
        let entries = enumerate_constrained(&constraint)
            .into_iter()
            .map(|p| ((p.clone(), p), BigInt::from(1)))
            .collect();
        SparseEndo {
            constraint,
            entries,
        }
    }

    /// Builds an endomorphism from `(row, col, coefficient)` triples.
    /// Duplicate keys are summed; zero totals are dropped.
    pub fn from_entries<I>(constraint: PartitionConstraint, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Partition, BigInt)>,
    {
        let mut entries: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
        for (row, col, coeff) in triples {
            row.check_constraint(&constraint)?;
            col.check_constraint(&constraint)?;
            let slot = entries.entry((row, col)).or_insert_with(BigInt::zero);
            *slot += coeff;
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(SparseEndo {
            constraint,
            entries,
        })
    }

    pub fn constraint(&self) -> &PartitionConstraint {
        &self.constraint
    }

    /// Number of stored (nonzero) entries.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The coefficient at `(row, col)`, if nonzero.
    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        self.entries.get(&(row.clone(), col.clone()))
    }

    /// Entries in `(row, col)` order (the basis enumeration order on rows,
    /// then columns).
    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.entries.iter()
    }

    fn check_same_constraint(&self, other: &SparseEndo) -> Result<()> {
        if self.constraint != other.constraint {
            return Err(Error::ConstraintMismatch(
                self.constraint.k,
                self.constraint.n,
                other.constraint.k,
                other.constraint.n,
            ));
        }
        Ok(())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &SparseEndo) -> Result<SparseEndo> {
        self.check_same_constraint(other)?;
        let mut entries = self.entries.clone();
        for (key, v) in &other.entries {
            let slot = entries.entry(key.clone()).or_insert_with(BigInt::zero);
            *slot += v;
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(SparseEndo {
            constraint: self.constraint,
            entries,
        })
    }

    /// Composition `self ∘ other` (apply `other` first): the sparse matrix
    /// product. Zero results are dropped.
    pub fn compose(&self, other: &SparseEndo) -> Result<SparseEndo> {
        self.check_same_constraint(other)?;
        // index self's entries by column for the join on the middle index
        let mut by_col: HashMap<&Partition, Vec<(&Partition, &BigInt)>> = HashMap::new();
        for ((row, col), v) in &self.entries {
            by_col.entry(col).or_default().push((row, v));
        }
        let mut entries: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
        for ((mid, col), w) in &other.entries {
            if let Some(rows) = by_col.get(mid) {
                for (row, v) in rows {
                    let slot = entries
                        .entry(((*row).clone(), col.clone()))
                        .or_insert_with(BigInt::zero);
                    *slot += *v * w;
                }
            }
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(SparseEndo {
            constraint: self.constraint,
            entries,
        })
    }

    /// Conjugation by the permutation matrix of `σ`: the result has the
    /// coefficient of `(row, col)` at `(σ·row, σ·col)`. An endomorphism is
    /// centralized by the value action exactly when it is fixed by every
    /// such conjugation.
    pub fn conjugate(&self, sigma: &ValuePermutation) -> Result<SparseEndo> {
        let mut entries = BTreeMap::new();
        for ((row, col), v) in &self.entries {
            let key = (value_act(sigma, row)?, value_act(sigma, col)?);
            entries.insert(key, v.clone());
        }
        Ok(SparseEndo {
            constraint: self.constraint,
            entries,
        })
    }

    /// JSON form: `{"k":…, "n":…, "entries":[{"row":…, "col":…, "coeff":"…"}…]}`
    /// with entries in `(row, col)` enumeration order and coefficients as
    /// decimal strings. Byte-stable for golden tests.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((row, col), v)| {
                json!({
                    "row": row,
                    "col": col,
                    "coeff": v.to_string(),
                })
            })
            .collect();
        json!({
            "k": self.constraint.k,
            "n": self.constraint.n,
            "entries": entries,
        })
    }
}

/// The matrix unit `E^λ_μ`, sending `v_λ` to `v_μ` and every other basis
/// vector to zero: a single entry at `(row = μ, col = λ)`.
pub fn matrix_unit(
    lambda: &Partition,
    mu: &Partition,
    c: &PartitionConstraint,
) -> Result<SparseEndo> {
    lambda.check_constraint(c)?;
    mu.check_constraint(c)?;
    let mut entries = BTreeMap::new();
    entries.insert((mu.clone(), lambda.clone()), BigInt::from(1));
    Ok(SparseEndo {
        constraint: *c,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(k: usize, n: u32) -> PartitionConstraint {
        PartitionConstraint::new(k, n).unwrap()
    }

    #[test]
    fn box_dimension_examples() {
        assert_eq!(box_dimension(&c(2, 4)), BigUint::from(10u32));
        assert_eq!(box_dimension(&c(1, 5)), BigUint::from(5u32));
        assert_eq!(box_dimension(&c(3, 2)), BigUint::from(4u32));
    }

    #[test]
    fn basis_index_matches_enumeration() {
        let basis = BoxBasis::new(c(2, 4));
        assert_eq!(basis.len(), 10);
        assert_eq!(basis.partition_at(0), &p(&[1, 1]));
        assert_eq!(basis.partition_at(1), &p(&[2, 1]));
        assert_eq!(basis.partition_at(9), &p(&[4, 4]));
        assert_eq!(basis.position_of(&p(&[3, 2])), Some(4));
        assert_eq!(basis.position_of(&p(&[5, 1])), None);
    }

    #[test]
    fn value_act_examples() {
        let id = ValuePermutation::identity(4);
        assert_eq!(value_act(&id, &p(&[2, 1])).unwrap(), p(&[2, 1]));

        let swap = ValuePermutation::transposition(1, 2, 2).unwrap();
        assert_eq!(value_act(&swap, &p(&[2, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(value_act(&swap, &p(&[1, 1])).unwrap(), p(&[2, 2]));
    }

    #[test]
    fn value_act_rejects_oversized_parts() {
        let swap = ValuePermutation::transposition(1, 2, 2).unwrap();
        assert_eq!(
            value_act(&swap, &p(&[3, 1])),
            Err(Error::PartTooLarge { part: 3, max: 2 })
        );
    }

    #[test]
    fn place_act_is_identity_on_indices() {
        assert_eq!(place_act(&[2, 1], &p(&[2, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(place_act(&[1, 2, 3], &p(&[3, 3, 1])).unwrap(), p(&[3, 3, 1]));
        assert_eq!(place_act(&[3, 1, 2], &p(&[4, 2, 1])).unwrap(), p(&[4, 2, 1]));
        assert!(place_act(&[1, 1], &p(&[2, 1])).is_err());
        assert!(place_act(&[1], &p(&[2, 1])).is_err());
    }

    #[test]
    fn matrix_unit_has_single_entry_at_mu_lambda() {
        let e = matrix_unit(&p(&[2, 1]), &p(&[1, 1]), &c(2, 4)).unwrap();
        assert_eq!(e.support_size(), 1);
        assert_eq!(e.entry(&p(&[1, 1]), &p(&[2, 1])), Some(&BigInt::from(1)));
        // in the ordered basis the unit's single coefficient is at source
        // index 1 (= (2,1)) and target index 0 (= (1,1))
        let basis = BoxBasis::new(c(2, 4));
        assert_eq!(basis.position_of(&p(&[1, 1])), Some(0));
        assert_eq!(basis.position_of(&p(&[2, 1])), Some(1));
    }

    #[test]
    fn matrix_unit_rejects_constraint_violations() {
        assert!(matrix_unit(&p(&[5, 1]), &p(&[1, 1]), &c(2, 4)).is_err());
        assert!(matrix_unit(&p(&[2, 1, 1]), &p(&[1, 1]), &c(2, 4)).is_err());
    }

    #[test]
    fn unit_composition_chains() {
        let cc = c(2, 4);
        let e_lm = matrix_unit(&p(&[2, 2]), &p(&[2, 1]), &cc).unwrap();
        let e_mn = matrix_unit(&p(&[2, 1]), &p(&[1, 1]), &cc).unwrap();
        // apply E^{(2,2)}_{(2,1)} first, then E^{(2,1)}_{(1,1)}
        let chained = e_mn.compose(&e_lm).unwrap();
        assert_eq!(
            chained,
            matrix_unit(&p(&[2, 2]), &p(&[1, 1]), &cc).unwrap()
        );
    }

    #[test]
    fn mismatched_middle_index_composes_to_zero() {
        let cc = c(2, 4);
        // C maps v_{(1,1)} -> v_{(2,2)}; B maps v_{(2,1)} -> v_{(1,1)};
        // B∘C maps v_{(1,1)} -> B(v_{(2,2)}) = 0.
        let b = matrix_unit(&p(&[2, 1]), &p(&[1, 1]), &cc).unwrap();
        let cm = matrix_unit(&p(&[1, 1]), &p(&[2, 2]), &cc).unwrap();
        assert!(b.compose(&cm).unwrap().is_zero());
    }

    #[test]
    fn identity_and_zero_laws() {
        let cc = c(2, 4);
        let id = SparseEndo::identity(cc);
        let b = SparseEndo::from_entries(
            cc,
            vec![
                (p(&[1, 1]), p(&[2, 1]), BigInt::from(3)),
                (p(&[4, 3]), p(&[4, 4]), BigInt::from(-2)),
                (p(&[2, 2]), p(&[2, 2]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(id.compose(&b).unwrap(), b);
        assert_eq!(b.compose(&id).unwrap(), b);
        let z = SparseEndo::zero(cc);
        assert!(b.compose(&z).unwrap().is_zero());
        assert!(z.compose(&b).unwrap().is_zero());
    }

    #[test]
    fn from_entries_sums_and_drops_zeros() {
        let cc = c(2, 4);
        let b = SparseEndo::from_entries(
            cc,
            vec![
                (p(&[1, 1]), p(&[2, 1]), BigInt::from(2)),
                (p(&[1, 1]), p(&[2, 1]), BigInt::from(-2)),
            ],
        )
        .unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn conjugation_examples() {
        let cc = c(2, 4);
        let b = matrix_unit(&p(&[2, 1]), &p(&[1, 1]), &cc).unwrap();
        let id = ValuePermutation::identity(4);
        assert_eq!(b.conjugate(&id).unwrap(), b);

        let swap = ValuePermutation::transposition(1, 2, 4).unwrap();
        let conj = b.conjugate(&swap).unwrap();
        assert_eq!(
            conj,
            matrix_unit(&p(&[2, 1]), &p(&[2, 2]), &cc).unwrap()
        );
        // conjugating back restores the original
        assert_eq!(conj.conjugate(&swap).unwrap(), b);
    }

    #[test]
    fn constraint_mismatch_is_rejected() {
        let a = SparseEndo::identity(c(2, 4));
        let b = SparseEndo::identity(c(2, 3));
        assert!(matches!(
            a.compose(&b),
            Err(Error::ConstraintMismatch(2, 4, 2, 3))
        ));
    }

    #[test]
    fn json_shape_is_stable() {
        let cc = c(2, 4);
        let e = matrix_unit(&p(&[2, 1]), &p(&[1, 1]), &cc).unwrap();
        let v = e.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"k":2,"n":4,"entries":[{"row":[1,1],"col":[2,1],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn permutation_group_basics() {
        let all3 = ValuePermutation::all(3);
        assert_eq!(all3.len(), 6);
        for s in &all3 {
            assert_eq!(s.compose(&s.inverse()).unwrap(), ValuePermutation::identity(3));
        }
    }
}
