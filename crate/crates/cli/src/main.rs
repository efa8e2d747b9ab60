//! `boxalg` — JSON command-line front end for the centralizer-algebra
//! library.
//!
//! Every subcommand prints exactly one JSON document on stdout (always
//! carrying `"schema":"v1"`) and nothing else; human-oriented notes go to
//! stderr. The exit status is zero exactly when no error object was
//! emitted. Output is byte-identical across runs for identical arguments.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use boxalg::centralizer::{canonical_pair_shape, orbit_basis, structure_constants};
use boxalg::checks;
use boxalg::diagrams::{enumerate_block_shapes, SetPartitionDiagram};
use boxalg::dimension::{big_json, dimension_crosscheck, dimension_formula};
use boxalg::partitions::{Partition, PartitionConstraint};
use boxalg::{orbit_sum, Error as LibError};

#[derive(Parser)]
#[command(
    name = "boxalg",
    about = "Centralizer algebras of symmetric groups on commutative tensor powers",
    long_about = "Computes orbit bases, diagram classes, dimensions and structure constants \
                  of the centralizer algebra of S_n acting by value relabeling on the \
                  multiset-basis power V^\u{22a0}k. All output is JSON on stdout."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Orbit,
    Diagram,
    Formula,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the centralizer algebra, by one or all methods
    Dim {
        /// Tensor-power exponent k
        #[arg(long)]
        k: usize,
        /// Ground dimension n; defaults to 2k (the smallest stable n)
        #[arg(long)]
        n: Option<u32>,
        /// orbit counting, diagram-class counting, the closed formula, or all
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },
    /// List the orbit basis: one class with its least representative pair
    Basis {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
    },
    /// Expand the orbit sum of a representative pair into matrix units
    ExpandT {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        /// Comma-separated parts, any order (e.g. 2,1)
        #[arg(long)]
        lambda: String,
        /// Comma-separated parts, any order (e.g. 1,1)
        #[arg(long)]
        mu: String,
    },
    /// List the diagram classes (block-shape multisets) for a given k
    Classes {
        #[arg(long)]
        k: usize,
    },
    /// Map a diagram to its component matrix, row partitions, and orbit class
    Phi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        /// Diagram JSON ({"k":…,"blocks":[{"top":[…],"bottom":[…]},…]}),
        /// inline or as a file path
        #[arg(long)]
        blocks: String,
    },
    /// Run the verification suite at a given size
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        /// Seed for the sampled closure check
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ceiling for whole-diagram (Bell-sized) enumeration
        #[arg(long, default_value_t = 4)]
        limit: usize,
        /// Number of sampled products in the closure check
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Structure constants: expand a product of two orbit-basis elements
    Mult {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        /// Left class, as a representative pair "LAMBDA:MU" (e.g. 2,1:1,1)
        #[arg(long)]
        left: String,
        /// Right class, same syntax
        #[arg(long)]
        right: String,
    },
    /// The closed-formula count for k = 1..max-k
    Sequence {
        #[arg(long)]
        max_k: u32,
    },
}

struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        let code = match &e {
            LibError::EmptyPartition | LibError::ZeroPart => "invalid_partition",
            LibError::PartTooLarge { .. }
            | LibError::LengthMismatch { .. }
            | LibError::InvalidConstraint
            | LibError::ConstraintMismatch(..) => "constraint_violation",
            LibError::NotAPermutation(_) => "invalid_permutation",
            LibError::OrbitInconsistency { .. } => "internal_inconsistency",
            LibError::EnumerationTooLarge { .. } => "limit_exceeded",
            LibError::InvalidDiagram(_) => "invalid_diagram",
            LibError::StableRangeRequired { .. } => "stable_range_required",
        };
        CliError::new(code, e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(0);
            }
            _ => {
                emit(&error_value("usage", &e.to_string()));
                std::process::exit(2);
            }
        },
    };
    match run(cli.command) {
        Ok(value) => {
            emit(&value);
        }
        Err(e) => {
            emit(&error_value(e.code, &e.message));
            std::process::exit(1);
        }
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn error_value(code: &str, message: &str) -> Value {
    json!({
        "schema": "v1",
        "error": { "code": code, "message": message },
    })
}

/// Prepends `"schema":"v1"` to an object produced by the library.
fn with_schema(value: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), Value::String("v1".into()));
    if let Value::Object(fields) = value {
        for (key, field) in fields {
            out.insert(key, field);
        }
    }
    Value::Object(out)
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, CliError> {
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let value: u32 = trimmed.parse().map_err(|_| {
            CliError::new(
                "invalid_partition",
                format!("{what}: cannot parse part {trimmed:?}; expected comma-separated positive integers"),
            )
        })?;
        parts.push(value);
    }
    Partition::new(parts).map_err(|e| CliError::new("invalid_partition", format!("{what}: {e}")))
}

fn parse_pair(text: &str, what: &str) -> Result<(Partition, Partition), CliError> {
    let (l, m) = text.split_once(':').ok_or_else(|| {
        CliError::new(
            "invalid_partition",
            format!("{what}: expected LAMBDA:MU, e.g. 2,1:1,1"),
        )
    })?;
    Ok((
        parse_partition(l, what)?,
        parse_partition(m, what)?,
    ))
}

fn constraint(k: usize, n: u32) -> Result<PartitionConstraint, CliError> {
    PartitionConstraint::new(k, n).map_err(CliError::from)
}

fn run(command: Command) -> Result<Value, CliError> {
    match command {
        Command::Dim { k, n, method } => {
            let n = n.unwrap_or_else(|| 2 * k as u32);
            let c = constraint(k, n)?;
            let stable = 2 * k <= n as usize;
            if !stable && matches!(method, Method::Diagram | Method::Formula) {
                return Err(LibError::StableRangeRequired { k, n }.into());
            }
            let report = match method {
                Method::All => dimension_crosscheck(&c).to_json(),
                Method::Orbit => json!({
                    "k": k,
                    "n": n,
                    "orbit": big_json(&boxalg::dimension_by_orbits(&c)),
                    "diagram": Value::Null,
                    "formula": Value::Null,
                    "agree": true,
                }),
                Method::Diagram => json!({
                    "k": k,
                    "n": n,
                    "orbit": Value::Null,
                    "diagram": big_json(&enumerate_block_shapes(k).len().into()),
                    "formula": Value::Null,
                    "agree": true,
                }),
                Method::Formula => json!({
                    "k": k,
                    "n": n,
                    "orbit": Value::Null,
                    "diagram": Value::Null,
                    "formula": big_json(&dimension_formula(k as u32)),
                    "agree": true,
                }),
            };
            Ok(with_schema(report))
        }
        Command::Basis { k, n } => {
            let c = constraint(k, n)?;
            let basis = orbit_basis(&c);
            let elements: Vec<Value> = basis
                .iter()
                .map(|e| {
                    json!({
                        "class": e.class,
                        "representative": {
                            "lambda": e.representative.0,
                            "mu": e.representative.1,
                        },
                    })
                })
                .collect();
            Ok(with_schema(json!({
                "k": k,
                "n": n,
                "count": basis.len(),
                "elements": elements,
            })))
        }
        Command::ExpandT { k, n, lambda, mu } => {
            let c = constraint(k, n)?;
            let lambda = parse_partition(&lambda, "--lambda")?;
            let mu = parse_partition(&mu, "--mu")?;
            let t = orbit_sum(&lambda, &mu, &c)?;
            Ok(with_schema(t.to_json()))
        }
        Command::Classes { k } => {
            if k == 0 {
                return Err(CliError::new("constraint_violation", "k must be at least 1"));
            }
            let classes = enumerate_block_shapes(k);
            Ok(with_schema(json!({
                "k": k,
                "count": classes.len(),
                "classes": classes,
            })))
        }
        Command::Phi { k, n, blocks } => {
            let text = if blocks.trim_start().starts_with('{') {
                blocks
            } else {
                std::fs::read_to_string(&blocks).map_err(|e| {
                    CliError::new("invalid_diagram", format!("cannot read {blocks}: {e}"))
                })?
            };
            let diagram = SetPartitionDiagram::from_json(&text)?;
            if diagram.k() != k {
                return Err(CliError::new(
                    "invalid_diagram",
                    format!("--k is {k} but the diagram has k = {}", diagram.k()),
                ));
            }
            let class = diagram.to_pair_shape(n)?;
            let [top, bottom] = diagram.component_matrix();
            let (lambda, mu) = diagram.row_partitions();
            Ok(with_schema(json!({
                "k": k,
                "n": n,
                "diagram": diagram.to_json(),
                "component_matrix": [top, bottom],
                "lambda": lambda,
                "mu": mu,
                "class": class,
            })))
        }
        Command::Verify {
            k,
            n,
            seed,
            limit,
            samples,
        } => {
            let c = constraint(k, n)?;
            let outcomes = [
                checks::soundness(&c)?,
                checks::support_partition(&c)?,
                checks::diagram_class_bijection(&c, limit)?,
                checks::identity_element(&c)?,
                checks::closure_sample(&c, seed, samples)?,
            ];
            let passed = outcomes.iter().all(|o| o.passed);
            let report = json!({
                "k": k,
                "n": n,
                "seed": seed,
                "limit": limit,
                "samples": samples,
                "checks": outcomes
                    .iter()
                    .map(|o| json!({
                        "name": o.name,
                        "passed": o.passed,
                        "detail": o.detail,
                    }))
                    .collect::<Vec<Value>>(),
                "passed": passed,
            });
            if passed {
                Ok(with_schema(report))
            } else {
                let mut wrapped = error_value(
                    "verification_failed",
                    "one or more verification checks failed",
                );
                if let Value::Object(fields) = &mut wrapped {
                    fields.insert("report".into(), report);
                }
                emit(&wrapped);
                std::process::exit(1);
            }
        }
        Command::Mult { k, n, left, right } => {
            let c = constraint(k, n)?;
            let (ll, lm) = parse_pair(&left, "--left")?;
            let (rl, rm) = parse_pair(&right, "--right")?;
            let left_shape = canonical_pair_shape(&ll, &lm, &c)?;
            let right_shape = canonical_pair_shape(&rl, &rm, &c)?;
            let basis = orbit_basis(&c);
            let find = |shape| basis.iter().find(|e| e.class == shape).expect("every valid pair's class is in the basis");
            let left_elt = find(left_shape);
            let right_elt = find(right_shape);
            let expansion = structure_constants(left_elt, right_elt, &c)?;
            let product: Vec<Value> = expansion
                .iter()
                .map(|(shape, coeff)| {
                    json!({
                        "class": shape,
                        "coeff": coeff.to_string(),
                    })
                })
                .collect();
            let describe = |e: &boxalg::OrbitBasisElement| {
                json!({
                    "class": e.class,
                    "representative": {
                        "lambda": e.representative.0,
                        "mu": e.representative.1,
                    },
                })
            };
            Ok(with_schema(json!({
                "k": k,
                "n": n,
                "left": describe(left_elt),
                "right": describe(right_elt),
                "product": product,
            })))
        }
        Command::Sequence { max_k } => {
            if max_k == 0 {
                return Err(CliError::new("constraint_violation", "--max-k must be at least 1"));
            }
            let values: Vec<Value> = (1..=max_k)
                .map(|k| big_json(&dimension_formula(k)))
                .collect();
            Ok(with_schema(json!({
                "max_k": max_k,
                "values": values,
            })))
        }
    }
}
