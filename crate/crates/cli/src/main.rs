//! `pdual`: genetic codes and the mod-2 duality functional of planar
//! polygon spaces.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on
//! invalid input or a violated precondition.

mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use polygon_duality::combinatorics::{in_s_k, theta};
use polygon_duality::duality::{phi, phi_by_theta, phi_terms, TopMonomial};
use polygon_duality::length::{monogenic_gee, realize_gee_bounded, DEFAULT_MAX_N};
use polygon_duality::relations::{cross_validate_bounded, verify_relations, DEFAULT_MAX_BASIS};
use polygon_duality::{GeeParams, IndexSet};

use crate::report::{
    bit, Format, GeneReport, OracleReport, OracleValue, PhiReport, RealizeReport, Render,
    TableReport, TableRow, Term, VerifyReport,
};

#[derive(Debug, Parser)]
#[command(name = "pdual", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Refuse length vectors with more sides than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// Refuse gees with more subgees than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BASIS)]
    max_basis: u128,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genetic code of a length vector.
    Gene {
        /// Comma-separated side lengths, each `p` or `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        lengths: String,
    },
    /// Value of the duality functional on one top-degree monomial.
    Phi {
        #[command(flatten)]
        input: GeeInput,
        /// Comma-separated V-subscripts; "" for the pure R power.
        #[arg(long = "J", allow_hyphen_values = true)]
        j: String,
        /// List every admissible B tuple and its term.
        #[arg(long)]
        explain: bool,
    },
    /// φ on every feasible θ-class.
    Table {
        #[command(flatten)]
        input: GeeInput,
    },
    /// Apply the formula to every relation.
    Verify {
        #[command(flatten)]
        input: GeeInput,
    },
    /// Solve the relations over GF(2) and compare with the formula.
    Oracle {
        #[command(flatten)]
        input: GeeInput,
    },
    /// Search for an integer length vector with the given single gee.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Largest total length to try.
        #[arg(long, default_value_t = 60)]
        bound: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GeeInput {
    /// Side lengths of a length vector with a single gene.
    #[arg(long, allow_hyphen_values = true)]
    lengths: Option<String>,
    /// Gee increments a_1,..,a_k; "" for the empty gee.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
}

enum Failure {
    /// A mathematical check failed; the report is still printed.
    Check(String),
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Gee increments plus `n` when it came from an actual length vector.
fn resolve(input: &GeeInput, max_n: usize) -> Result<(GeeParams, Option<u32>), Failure> {
    match (&input.lengths, &input.a) {
        (Some(lengths), _) => {
            let lv = input::parse_lengths(lengths).map_err(Failure::Input)?;
            let code = lv.genetic_code_bounded(max_n)?;
            Ok((monogenic_gee(&code)?, Some(code.n)))
        }
        (None, Some(a)) => Ok((input::parse_gee(a).map_err(Failure::Input)?, None)),
        (None, None) => Err(Failure::Input("one of --lengths or --a is required".into())),
    }
}

fn run(cli: &Cli) -> Result<String, (Option<String>, Failure)> {
    let fmt = cli.format;
    let plain = |r: Result<String, Failure>| r.map_err(|f| (None, f));
    match &cli.command {
        Command::Gene { lengths } => plain((|| {
            let lv = input::parse_lengths(lengths).map_err(Failure::Input)?;
            let code = lv.genetic_code_bounded(cli.max_n)?;
            let a = monogenic_gee(&code).ok().map(|a| a.increments().to_vec());
            Ok(GeneReport {
                n: code.n,
                generic: true,
                code: code.genes.iter().map(IndexSet::descending).collect(),
                monogenic: code.is_monogenic(),
                a,
            }
            .render(fmt))
        })()),
        Command::Phi { input, j, explain } => plain((|| {
            let (a, n) = resolve(input, cli.max_n)?;
            let j = input::parse_index_set(j).map_err(Failure::Input)?;
            let mono = match n {
                Some(n) => TopMonomial::new(j, n)?,
                None => TopMonomial::for_gee(j, &a)?,
            };
            let t = theta(mono.subscripts(), &a).ok();
            let terms = match (&t, explain) {
                (Some(t), true) => Some(
                    phi_terms(&a, t)
                        .into_iter()
                        .map(|(b, term)| Term { b: b.into_inner(), term: bit(term) })
                        .collect(),
                ),
                (None, true) => Some(Vec::new()),
                _ => None,
            };
            Ok(PhiReport {
                a: a.increments().to_vec(),
                n: mono.n(),
                j: mono.subscripts().as_slice().to_vec(),
                r_exponent: mono.r_exponent(),
                subgee: t.as_ref().is_some_and(in_s_k),
                theta: t.map(|t| t.into_inner()),
                phi: bit(phi(&a, &mono)),
                terms,
            }
            .render(fmt))
        })()),
        Command::Table { input } => plain((|| {
            let (a, _) = resolve(input, cli.max_n)?;
            let classes = a.feasible_classes();
            if classes.len() as u128 > cli.max_basis {
                return Err(Failure::Input(format!(
                    "{} theta classes, above the limit {}",
                    classes.len(),
                    cli.max_basis
                )));
            }
            let rows = classes
                .into_iter()
                .map(|t| {
                    let phi = bit(phi_by_theta(&a, &t)?);
                    Ok(TableRow { theta: t.into_inner(), phi })
                })
                .collect::<Result<_, Failure>>()?;
            Ok(TableReport { a: a.increments().to_vec(), rows }.render(fmt))
        })()),
        Command::Verify { input } => {
            let (a, _) = resolve(input, cli.max_n).map_err(|f| (None, f))?;
            let v = verify_relations(&a, cli.max_basis).map_err(|e| (None, e.into()))?;
            let report = VerifyReport {
                a: a.increments().to_vec(),
                subgees: v.relations + 1,
                relations: v.relations,
                failures: v.failures.iter().map(|f| f.as_slice().to_vec()).collect(),
                ok: v.passed(),
            };
            let out = report.render(fmt);
            match v.failures.first() {
                None => Ok(out),
                Some(i) => Err((Some(out), Failure::Check(format!("relation R_{i} is not annihilated")))),
            }
        }
        Command::Oracle { input } => {
            let (a, _) = resolve(input, cli.max_n).map_err(|f| (None, f))?;
            let start = Instant::now();
            let r = cross_validate_bounded(&a, cli.max_basis).map_err(|e| (None, e.into()))?;
            let values = r
                .subgees
                .iter()
                .enumerate()
                .map(|(i, j)| OracleValue {
                    j: j.as_slice().to_vec(),
                    theta: theta(j, &a).expect("subgee").into_inner(),
                    oracle: r.oracle.as_ref().map(|o| bit(o[i])),
                    formula: bit(r.formula[i]),
                })
                .collect();
            let report = OracleReport {
                a: a.increments().to_vec(),
                basis: r.basis_size(),
                rank: r.rank,
                nullspace_dimension: r.nullspace_dimension,
                agree: r.agree,
                values,
                elapsed_ms: start.elapsed().as_millis(),
            };
            let out = report.render(fmt);
            if r.nullspace_dimension != 1 {
                Err((
                    Some(out),
                    Failure::Check(format!("nullspace dimension is {}, not 1", r.nullspace_dimension)),
                ))
            } else if !r.agree {
                Err((Some(out), Failure::Check("formula and oracle disagree".into())))
            } else {
                Ok(out)
            }
        }
        Command::Realize { a, bound } => {
            let a = input::parse_gee(a).map_err(|e| (None, Failure::Input(e)))?;
            match realize_gee_bounded(&a, *bound, cli.max_n) {
                Ok(lv) => Ok(RealizeReport {
                    a: a.increments().to_vec(),
                    bound: *bound,
                    n: lv.n() as u32,
                    lengths: lv.weights().iter().map(|&w| w as i64).collect(),
                }
                .render(fmt)),
                Err(e @ polygon_duality::Error::NotFound { .. }) => {
                    Err((None, Failure::Check(e.to_string())))
                }
                Err(e) => Err((None, e.into())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            if let Some(out) = out {
                print!("{out}");
            }
            match failure {
                Failure::Check(msg) => {
                    eprintln!("check failed: {msg}");
                    ExitCode::from(1)
                }
                Failure::Input(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
