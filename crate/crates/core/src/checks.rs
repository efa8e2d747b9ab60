//! Executable verification of the structural claims behind the orbit
//! basis, at a caller-chosen size. These back the CLI `verify` subcommand
//! and are reused by the test suites.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::boxspace::{box_dimension, matrix_unit, SparseEndo};
use crate::centralizer::{is_centralized, orbit_basis, structure_constants};
use crate::diagrams::{diagram_realizing_pair, enumerate_block_shapes, enumerate_set_partitions_bounded};
use crate::partitions::PartitionConstraint;
use crate::Result;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail,
        }
    }
}

/// Every orbit-sum element is centralized.
pub fn soundness(c: &PartitionConstraint) -> Result<CheckOutcome> {
    let basis = orbit_basis(c);
    for element in &basis {
        let t = element.to_endo(c)?;
        if !is_centralized(&t) {
            return Ok(CheckOutcome::fail(
                "centralizer_soundness",
                format!(
                    "orbit sum of class {:?} is not centralized",
                    element.class.entries()
                ),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        "centralizer_soundness",
        format!("{} orbit sums centralized", basis.len()),
    ))
}

/// The class supports are pairwise disjoint and partition the full
/// `D × D` grid of basis-index pairs.
pub fn support_partition(c: &PartitionConstraint) -> Result<CheckOutcome> {
    let basis = orbit_basis(c);
    let mut seen = std::collections::HashSet::new();
    let mut total = BigUint::zero();
    for element in &basis {
        let t = element.to_endo(c)?;
        for (key, _) in t.entries() {
            if !seen.insert(key.clone()) {
                return Ok(CheckOutcome::fail(
                    "support_partition",
                    format!("pair ({}, {}) lies in two class supports", key.1, key.0),
                ));
            }
        }
        total += BigUint::from(t.support_size());
    }
    let d = box_dimension(c);
    let grid = &d * &d;
    if total != grid {
        return Ok(CheckOutcome::fail(
            "support_partition",
            format!("supports cover {total} of {grid} pairs"),
        ));
    }
    Ok(CheckOutcome::pass(
        "support_partition",
        format!("{} classes partition {grid} pairs", basis.len()),
    ))
}

/// For every class with at least two members, bumping any single entry of
/// its orbit sum by one breaks centralizer membership. (A singleton class
/// stays orbit-constant under any bump, so singletons are skipped.)
pub fn perturbation_completeness(c: &PartitionConstraint) -> Result<CheckOutcome> {
    let basis = orbit_basis(c);
    let mut tested = 0usize;
    for element in &basis {
        let t = element.to_endo(c)?;
        if t.support_size() < 2 {
            continue;
        }
        for ((row, col), _) in t.entries() {
            let bumped = t.add(&matrix_unit(col, row, c)?)?;
            if is_centralized(&bumped) {
                return Ok(CheckOutcome::fail(
                    "perturbation_completeness",
                    format!(
                        "bumping entry (row={row}, col={col}) of class {:?} stayed centralized",
                        element.class.entries()
                    ),
                ));
            }
            tested += 1;
        }
    }
    Ok(CheckOutcome::pass(
        "perturbation_completeness",
        format!("{tested} single-entry perturbations all rejected"),
    ))
}

/// In the stable range, diagram classes biject with orbit classes: the
/// counts match, every diagram class maps to a distinct orbit class, and
/// the realizing diagram of each orbit-class representative maps back onto
/// its class. Additionally, when `k <= bell_limit`, every one of the
/// Bell(2k) diagrams is checked to map constantly on its relabeling class.
pub fn diagram_class_bijection(
    c: &PartitionConstraint,
    bell_limit: usize,
) -> Result<CheckOutcome> {
    let name = "diagram_class_bijection";
    if 2 * c.k > c.n as usize {
        return Ok(CheckOutcome::pass(
            name,
            "not applicable below the stable range".to_string(),
        ));
    }
    let classes = enumerate_block_shapes(c.k);
    let basis = orbit_basis(c);
    if classes.len() != basis.len() {
        return Ok(CheckOutcome::fail(
            name,
            format!(
                "{} diagram classes vs {} orbit classes",
                classes.len(),
                basis.len()
            ),
        ));
    }
    let orbit_shapes: std::collections::BTreeSet<_> =
        basis.iter().map(|e| e.class.clone()).collect();
    let mut mapped = std::collections::BTreeSet::new();
    for class in &classes {
        let shape = class.as_pair_shape(c.n)?;
        if !orbit_shapes.contains(&shape) {
            return Ok(CheckOutcome::fail(
                name,
                format!("diagram class {:?} maps outside the orbit basis", class.entries()),
            ));
        }
        if !mapped.insert(shape) {
            return Ok(CheckOutcome::fail(
                name,
                format!("diagram class {:?} collides with another class", class.entries()),
            ));
        }
    }
    // surjectivity via the explicit realization of each representative
    for element in &basis {
        let (nu, gamma) = &element.representative;
        let diagram = diagram_realizing_pair(nu, gamma)?;
        if diagram.to_pair_shape(c.n)? != element.class {
            return Ok(CheckOutcome::fail(
                name,
                format!(
                    "realizing diagram of ({nu}, {gamma}) does not map back to its class"
                ),
            ));
        }
    }
    let mut detail = format!("{} classes in bijection", classes.len());
    if c.k <= bell_limit {
        let diagrams = enumerate_set_partitions_bounded(c.k, bell_limit)?;
        let count = diagrams.len();
        let mut by_class = std::collections::BTreeMap::new();
        for d in &diagrams {
            let shape = d.to_pair_shape(c.n)?;
            let entry = by_class.entry(d.block_shape()).or_insert_with(|| shape.clone());
            if *entry != shape {
                return Ok(CheckOutcome::fail(
                    name,
                    format!("diagram {d} maps off its relabeling class"),
                ));
            }
        }
        detail.push_str(&format!("; constant on all {count} diagrams"));
    }
    Ok(CheckOutcome::pass(name, detail))
}

/// Products of randomly sampled pairs of orbit-basis elements expand in the
/// orbit basis with nonnegative coefficients. Deterministic for a fixed
/// seed.
pub fn closure_sample(
    c: &PartitionConstraint,
    seed: u64,
    samples: usize,
) -> Result<CheckOutcome> {
    let basis = orbit_basis(c);
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0usize;
    for _ in 0..samples {
        let left = &basis[rng.below(basis.len())];
        let right = &basis[rng.below(basis.len())];
        match structure_constants(left, right, c) {
            Err(e) => {
                return Ok(CheckOutcome::fail(
                    "closure_sample",
                    format!(
                        "product of {:?} and {:?} failed to expand: {e}",
                        left.class.entries(),
                        right.class.entries()
                    ),
                ))
            }
            Ok(expansion) => {
                if let Some((shape, coeff)) =
                    expansion.iter().find(|(_, v)| v.sign() == num_bigint::Sign::Minus)
                {
                    return Ok(CheckOutcome::fail(
                        "closure_sample",
                        format!(
                            "negative coefficient {coeff} on class {:?}",
                            shape.entries()
                        ),
                    ));
                }
            }
        }
        checked += 1;
    }
    Ok(CheckOutcome::pass(
        "closure_sample",
        format!("{checked} sampled products expanded with nonnegative coefficients"),
    ))
}

/// Exhaustive closure over all ordered pairs of basis elements; intended
/// for small sizes.
pub fn closure_exhaustive(c: &PartitionConstraint) -> Result<CheckOutcome> {
    let basis = orbit_basis(c);
    for left in &basis {
        for right in &basis {
            if let Err(e) = structure_constants(left, right, c) {
                return Ok(CheckOutcome::fail(
                    "closure_exhaustive",
                    format!(
                        "product of {:?} and {:?} failed to expand: {e}",
                        left.class.entries(),
                        right.class.entries()
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(
        "closure_exhaustive",
        format!("all {} ordered products orbit-constant", basis.len() * basis.len()),
    ))
}

/// The identity endomorphism expands as the sum of the diagonal classes,
/// and that sum is a two-sided unit on every basis element.
pub fn identity_element(c: &PartitionConstraint) -> Result<CheckOutcome> {
    let name = "identity_element";
    let basis = orbit_basis(c);
    let identity = SparseEndo::identity(*c);
    let mut diagonal_sum = SparseEndo::zero(*c);
    for element in &basis {
        if element.representative.0 == element.representative.1 {
            diagonal_sum = diagonal_sum.add(&element.to_endo(c)?)?;
        }
    }
    if diagonal_sum != identity {
        return Ok(CheckOutcome::fail(
            name,
            "diagonal classes do not sum to the identity".to_string(),
        ));
    }
    for element in &basis {
        let t = element.to_endo(c)?;
        if identity.compose(&t)? != t || t.compose(&identity)? != t {
            return Ok(CheckOutcome::fail(
                name,
                format!("identity fails as a unit on class {:?}", element.class.entries()),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        name,
        "diagonal classes sum to a two-sided unit".to_string(),
    ))
}

/// Tiny deterministic generator for reproducible sampling (SplitMix64).
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}
