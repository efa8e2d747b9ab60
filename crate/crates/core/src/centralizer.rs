//! The centralizer algebra of the value action of `S_n` on `V^⊠k`.
//!
//! Two basis-index pairs `(λ, μ)` and `(ν, γ)` are equivalent when a single
//! value permutation carries one pair to the other. The canonical invariant
//! of a class is its [`PairShape`]: for every value `v`, the pair
//! `(multiplicity of v in λ, multiplicity of v in μ)`, collected as a
//! multiset with `(0,0)` entries dropped. Summing matrix units over a class
//! gives the orbit-sum elements, and those form a basis of the centralizer.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::boxspace::{SparseEndo, ValuePermutation};
use crate::partitions::{enumerate_constrained, Partition, PartitionConstraint};
use crate::{Error, Result};

/// Canonical form of an orbit class of basis-index pairs: the multiset of
/// per-value multiplicity pairs, sorted descending. Two pairs lie in the
/// same orbit if and only if their shapes are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairShape {
    shape: Vec<(u32, u32)>,
    k: usize,
    n: u32,
}

impl PairShape {
    /// The multiplicity pairs, descending lexicographic.
    pub fn entries(&self) -> &[(u32, u32)] {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of values occurring in the class representatives, i.e. the
    /// number of multiset entries. Always at most `n`.
    pub fn value_count(&self) -> usize {
        self.shape.len()
    }

    /// Number of pairs in the class: the number of ways to assign disjoint
    /// sets of values in `{1..n}` to the distinct entry types.
    pub fn class_size(&self) -> BigUint {
        let mut size = BigUint::one();
        let mut available = self.n as u64;
        for (_, mult) in group_types(&self.shape) {
            size *= crate::partitions::binomial(available, mult as u64);
            available -= mult as u64;
        }
        size
    }
}

impl Serialize for PairShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.shape.len()))?;
        for pair in &self.shape {
            seq.serialize_element(&[pair.0, pair.1])?;
        }
        seq.end()
    }
}

/// Runs of equal entries in a descending-sorted shape, with multiplicities.
fn group_types(shape: &[(u32, u32)]) -> Vec<((u32, u32), usize)> {
    let mut out: Vec<((u32, u32), usize)> = Vec::new();
    for &t in shape {
        match out.last_mut() {
            Some((last, m)) if *last == t => *m += 1,
            _ => out.push((t, 1)),
        }
    }
    out
}

/// The canonical invariant of the orbit class of `(λ, μ)` under the
/// constraint `c`.
pub fn canonical_pair_shape(
    lambda: &Partition,
    mu: &Partition,
    c: &PartitionConstraint,
) -> Result<PairShape> {
    lambda.check_constraint(c)?;
    mu.check_constraint(c)?;
    let n = c.n as usize;
    let mut counts = vec![(0u32, 0u32); n + 1];
    for &p in lambda.parts() {
        counts[p as usize].0 += 1;
    }
    for &p in mu.parts() {
        counts[p as usize].1 += 1;
    }
    let mut shape: Vec<(u32, u32)> = counts[1..]
        .iter()
        .copied()
        .filter(|&t| t != (0, 0))
        .collect();
    shape.sort_unstable_by(|a, b| b.cmp(a));
    Ok(PairShape {
        shape,
        k: c.k,
        n: c.n,
    })
}

/// All pairs `(ν, γ)` in the class described by `shape`, produced by
/// assigning disjoint value sets to the distinct entry types.
fn class_members(shape: &PairShape) -> Vec<(Partition, Partition)> {
    let types = group_types(&shape.shape);
    let values: Vec<u32> = (1..=shape.n).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(types.len());

    fn combos(pool: &[u32], size: usize) -> Vec<Vec<u32>> {
        if size == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &v) in pool.iter().enumerate() {
            if pool.len() - i < size {
                break;
            }
            for mut tail in combos(&pool[i + 1..], size - 1) {
                tail.insert(0, v);
                out.push(tail);
            }
        }
        out
    }

    fn rec(
        types: &[((u32, u32), usize)],
        pool: &[u32],
        chosen: &mut Vec<Vec<u32>>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        if chosen.len() == types.len() {
            let mut lam = Vec::new();
            let mut mu = Vec::new();
            for (((a, b), _), vals) in types.iter().zip(chosen.iter()) {
                for &v in vals {
                    lam.extend(std::iter::repeat_n(v, *a as usize));
                    mu.extend(std::iter::repeat_n(v, *b as usize));
                }
            }
            out.push((
                Partition::new(lam).expect("class entries sum to k >= 1"),
                Partition::new(mu).expect("class entries sum to k >= 1"),
            ));
            return;
        }
        let (_, mult) = types[chosen.len()];
        for combo in combos(pool, mult) {
            let rest: Vec<u32> = pool.iter().copied().filter(|v| !combo.contains(v)).collect();
            chosen.push(combo);
            rec(types, &rest, chosen, out);
            chosen.pop();
        }
    }

    rec(&types, &values, &mut chosen, &mut out);
    out
}

/// The orbit-sum element for the class of `(λ, μ)`: the sum of the matrix
/// units `E^ν_γ` over every pair `(ν, γ)` in the class, all with
/// coefficient 1. Any representative of the class yields the same element.
pub fn orbit_sum(
    lambda: &Partition,
    mu: &Partition,
    c: &PartitionConstraint,
) -> Result<SparseEndo> {
    let shape = canonical_pair_shape(lambda, mu, c)?;
    orbit_sum_of_shape(&shape, c)
}

/// The orbit-sum element of a class given by its canonical shape.
pub fn orbit_sum_of_shape(shape: &PairShape, c: &PartitionConstraint) -> Result<SparseEndo> {
    if shape.k != c.k || shape.n != c.n {
        return Err(Error::ConstraintMismatch(shape.k, shape.n, c.k, c.n));
    }
    let triples = class_members(shape)
        .into_iter()
        .map(|(nu, gamma)| (gamma, nu, BigInt::from(1)));
    SparseEndo::from_entries(*c, triples)
}

/// Witness that an endomorphism is not centralized: conjugating by the
/// transposition `(value, value+1)` moves or changes the coefficient at
/// `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerViolation {
    /// The adjacent transposition `(value, value+1)` that fails.
    pub value: u32,
    pub row: Partition,
    pub col: Partition,
}

/// Checks membership in the centralizer of the value action: the
/// endomorphism must be fixed by conjugation with every adjacent
/// transposition `(i, i+1)`, `1 <= i < n`. Adjacent transpositions
/// generate the full permutation group, so this is equivalent to the
/// coefficients being constant on every orbit class.
///
/// Returns the first violating generator and entry on failure.
pub fn check_centralized(b: &SparseEndo) -> std::result::Result<(), CentralizerViolation> {
    let n = b.constraint().n;
    for i in 1..n {
        let sigma = ValuePermutation::transposition(i, i + 1, n)
            .expect("adjacent transposition indices are in range");
        for ((row, col), v) in b.entries() {
            let moved_row = value_act(&sigma, row);
            let moved_col = value_act(&sigma, col);
            if b.entry(&moved_row, &moved_col) != Some(v) {
                return Err(CentralizerViolation {
                    value: i,
                    row: row.clone(),
                    col: col.clone(),
                });
            }
        }
    }
    Ok(())
}

fn value_act(sigma: &ValuePermutation, p: &Partition) -> Partition {
    crate::boxspace::value_act(sigma, p).expect("parts are within the permutation degree")
}

/// True when the endomorphism commutes with the value action of every
/// permutation.
pub fn is_centralized(b: &SparseEndo) -> bool {
    check_centralized(b).is_ok()
}

/// One element of the orbit basis: a class together with its
/// lexicographically least representative pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBasisElement {
    /// Canonical class invariant.
    pub class: PairShape,
    /// The least `(λ, μ)` pair of the class in enumeration order.
    pub representative: (Partition, Partition),
}

impl OrbitBasisElement {
    /// The orbit-sum endomorphism of this class.
    pub fn to_endo(&self, c: &PartitionConstraint) -> Result<SparseEndo> {
        orbit_sum_of_shape(&self.class, c)
    }
}

/// The orbit basis of the centralizer: one element per class of basis-index
/// pairs, sorted ascending by canonical shape. Representatives are the
/// lexicographically least pairs in enumeration order.
pub fn orbit_basis(c: &PartitionConstraint) -> Vec<OrbitBasisElement> {
    let parts = enumerate_constrained(c);
    let mut seen: HashMap<PairShape, (Partition, Partition)> = HashMap::new();
    for lambda in &parts {
        for mu in &parts {
            let shape = canonical_pair_shape(lambda, mu, c)
                .expect("enumerated partitions satisfy the constraint");
            seen.entry(shape)
                .or_insert_with(|| (lambda.clone(), mu.clone()));
        }
    }
    let mut basis: Vec<OrbitBasisElement> = seen
        .into_iter()
        .map(|(class, representative)| OrbitBasisElement {
            class,
            representative,
        })
        .collect();
    basis.sort_by(|a, b| a.class.cmp(&b.class));
    basis
}

/// The dimension of the centralizer algebra: the number of orbit classes.
/// Valid for every `n`, including below the stable range `n >= 2k`.
pub fn dimension_by_orbits(c: &PartitionConstraint) -> BigUint {
    BigUint::from(orbit_basis(c).len())
}

/// Expands a centralized endomorphism in the orbit basis, reading each
/// class coefficient off a representative entry and verifying that the
/// whole class carries that same coefficient. Classes not present are
/// omitted (coefficient zero).
///
/// Errors with [`Error::OrbitInconsistency`] if the coefficients are not
/// constant on some class — which would contradict the orbit-basis theorem
/// if fed a product of centralizer elements.
pub fn expand_in_orbit_basis(b: &SparseEndo) -> Result<BTreeMap<PairShape, BigInt>> {
    let c = *b.constraint();
    let mut coeffs: BTreeMap<PairShape, (BigInt, usize)> = BTreeMap::new();
    for ((row, col), v) in b.entries() {
        // entry (row=γ, col=ν) belongs to the class of (ν, γ)
        let shape = canonical_pair_shape(col, row, &c)?;
        match coeffs.get_mut(&shape) {
            None => {
                coeffs.insert(shape, (v.clone(), 1));
            }
            Some((coeff, count)) => {
                if coeff != v {
                    return Err(Error::OrbitInconsistency {
                        row: row.to_string(),
                        col: col.to_string(),
                    });
                }
                *count += 1;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (shape, (coeff, count)) in coeffs {
        if shape.class_size() != BigUint::from(count) {
            // some class member is absent, i.e. has coefficient 0 != coeff
            return Err(Error::OrbitInconsistency {
                row: format!("{:?}", shape.entries()),
                col: "class support incomplete".to_string(),
            });
        }
        out.insert(shape, coeff);
    }
    Ok(out)
}

/// Structure constants of the orbit basis: expands the product
/// `T_left ∘ T_right` back in the orbit basis. The product of centralizer
/// elements is centralized, hence orbit-constant; this verifies that at
/// runtime rather than assuming it.
pub fn structure_constants(
    left: &OrbitBasisElement,
    right: &OrbitBasisElement,
    c: &PartitionConstraint,
) -> Result<BTreeMap<PairShape, BigInt>> {
    let t_left = orbit_sum_of_shape(&left.class, c)?;
    let t_right = orbit_sum_of_shape(&right.class, c)?;
    let product = t_left.compose(&t_right)?;
    expand_in_orbit_basis(&product)
}
