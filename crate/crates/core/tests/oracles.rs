//! Oracle-equivalence tests: the canonical forms used by the library are
//! compared against direct orbit enumeration, which is computed here from
//! scratch and shares no code with the canonicalization paths.

use std::collections::{BTreeMap, BTreeSet};

use boxalg::boxspace::{value_act, SparseEndo, ValuePermutation};
use boxalg::centralizer::{canonical_pair_shape, dimension_by_orbits, is_centralized, orbit_basis};
use boxalg::diagrams::{enumerate_set_partitions, SetPartitionDiagram};
use boxalg::partitions::{enumerate_constrained, Partition, PartitionConstraint};
use itertools::Itertools;
use num_bigint::BigInt;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cons(k: usize, n: u32) -> PartitionConstraint {
    PartitionConstraint::new(k, n).unwrap()
}

type PairGroups = BTreeMap<(Partition, Partition), Vec<(Partition, Partition)>>;
type ShapeGroups = BTreeMap<Vec<(u32, u32)>, Vec<(Partition, Partition)>>;

/// Direct orbit representative of a pair: the minimum over the whole
/// permutation group of the simultaneously relabeled pair.
fn orbit_representative(
    lambda: &Partition,
    mu: &Partition,
    perms: &[ValuePermutation],
) -> (Partition, Partition) {
    perms
        .iter()
        .map(|sigma| {
            (
                value_act(sigma, lambda).unwrap(),
                value_act(sigma, mu).unwrap(),
            )
        })
        .min()
        .unwrap()
}

#[test]
fn pair_shape_equality_agrees_with_direct_orbit_enumeration() {
    for k in 1..=3usize {
        for n in 1..=4u32 {
            let c = cons(k, n);
            let parts = enumerate_constrained(&c);
            let perms = ValuePermutation::all(n);
            let mut by_orbit: PairGroups = BTreeMap::new();
            let mut by_shape: ShapeGroups = BTreeMap::new();
            for lambda in &parts {
                for mu in &parts {
                    let pair = (lambda.clone(), mu.clone());
                    by_orbit
                        .entry(orbit_representative(lambda, mu, &perms))
                        .or_default()
                        .push(pair.clone());
                    by_shape
                        .entry(
                            canonical_pair_shape(lambda, mu, &c)
                                .unwrap()
                                .entries()
                                .to_vec(),
                        )
                        .or_default()
                        .push(pair);
                }
            }
            let orbit_groups: BTreeSet<Vec<(Partition, Partition)>> =
                by_orbit.into_values().collect();
            let shape_groups: BTreeSet<Vec<(Partition, Partition)>> =
                by_shape.into_values().collect();
            assert_eq!(orbit_groups, shape_groups, "k={k} n={n}");
        }
    }
}

/// Relabels a diagram by a top permutation and an independent bottom
/// permutation (both given as images on 1..=k).
fn relabel(
    diagram: &SetPartitionDiagram,
    alpha: &[u32],
    beta: &[u32],
) -> SetPartitionDiagram {
    let blocks = diagram
        .blocks()
        .iter()
        .map(|b| {
            (
                b.top.iter().map(|&v| alpha[v as usize - 1]).collect(),
                b.bottom.iter().map(|&v| beta[v as usize - 1]).collect(),
            )
        })
        .collect();
    SetPartitionDiagram::new(diagram.k(), blocks).unwrap()
}

#[test]
fn block_shape_equality_agrees_with_relabeling_orbits() {
    for k in 1..=3usize {
        let diagrams = enumerate_set_partitions(k).unwrap();
        let perms: Vec<Vec<u32>> = (1..=k as u32).permutations(k).collect();
        let mut by_orbit: BTreeMap<SetPartitionDiagram, Vec<SetPartitionDiagram>> =
            BTreeMap::new();
        let mut by_shape: BTreeMap<Vec<(u32, u32)>, Vec<SetPartitionDiagram>> = BTreeMap::new();
        for d in &diagrams {
            let representative = perms
                .iter()
                .cartesian_product(perms.iter())
                .map(|(alpha, beta)| relabel(d, alpha, beta))
                .min()
                .unwrap();
            by_orbit.entry(representative).or_default().push(d.clone());
            by_shape
                .entry(d.block_shape().entries().to_vec())
                .or_default()
                .push(d.clone());
        }
        let orbit_groups: BTreeSet<Vec<SetPartitionDiagram>> = by_orbit.into_values().collect();
        let shape_groups: BTreeSet<Vec<SetPartitionDiagram>> = by_shape.into_values().collect();
        assert_eq!(orbit_groups, shape_groups, "k={k}");
    }
}

#[test]
fn generator_membership_test_agrees_with_the_full_group() {
    // fixedness under the n-1 adjacent transpositions must coincide with
    // fixedness under all n! conjugations
    let full_check = |b: &SparseEndo, perms: &[ValuePermutation]| {
        perms.iter().all(|sigma| &b.conjugate(sigma).unwrap() == b)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 1..=2usize {
        for n in 1..=4u32 {
            let c = cons(k, n);
            let perms = ValuePermutation::all(n);
            let parts = enumerate_constrained(&c);
            let mut cases: Vec<SparseEndo> = Vec::new();
            for element in orbit_basis(&c) {
                cases.push(element.to_endo(&c).unwrap());
            }
            for lambda in &parts {
                for mu in &parts {
                    cases.push(boxalg::boxspace::matrix_unit(lambda, mu, &c).unwrap());
                }
            }
            for _ in 0..20 {
                let triples: Vec<(Partition, Partition, BigInt)> = (0..4)
                    .map(|_| {
                        (
                            parts[rng.gen_range(0..parts.len())].clone(),
                            parts[rng.gen_range(0..parts.len())].clone(),
                            BigInt::from(rng.gen_range(1i64..=3)),
                        )
                    })
                    .collect();
                cases.push(SparseEndo::from_entries(c, triples).unwrap());
            }
            for b in &cases {
                assert_eq!(is_centralized(b), full_check(b, &perms), "k={k} n={n}");
            }
        }
    }
}

#[test]
fn below_stable_range_dimensions_match_brute_force() {
    // direct orbit counting, no canonical forms involved
    let brute_force = |k: usize, n: u32| -> usize {
        let parts = enumerate_constrained(&cons(k, n));
        let perms = ValuePermutation::all(n);
        let mut reps = BTreeSet::new();
        for lambda in &parts {
            for mu in &parts {
                reps.insert(orbit_representative(lambda, mu, &perms));
            }
        }
        reps.len()
    };
    assert_eq!(brute_force(2, 2), 5);
    assert_eq!(brute_force(2, 3), 8);
    assert_eq!(dimension_by_orbits(&cons(2, 2)), BigUint::from(5u32));
    assert_eq!(dimension_by_orbits(&cons(2, 3)), BigUint::from(8u32));
    // both strictly below the stable dimension 9
    assert!(brute_force(2, 2) < 9);
    assert!(brute_force(2, 3) < 9);
}
