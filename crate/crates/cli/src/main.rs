//! Command-line surface of the circle-action reduction toolkit.
//!
//! Every subcommand emits one UTF-8 JSON document on stdout (except
//! `analyze` without `--json`, which prints a human summary). Exit codes:
//! 0 on success, 2 when an audit reports violations, 1 on input errors.

use std::fs;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use s1redux_core::nerve::{action_from_json, groupoid_from_json};
use s1redux_core::verdict::DEFAULT_K_MAX;
use s1redux_core::{
    analyze, consistency_audit, invariant_monoid_basis, obstruction_search, standard_catalog,
    WeightVector,
};

#[derive(Parser)]
#[command(name = "s1redux", version, about = "Analysis of linear circle actions on C^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on a weight vector at a momentum level.
    Analyze(AnalyzeArgs),
    /// Compute the Hilbert basis of invariant monomial exponents.
    Hilbert(HilbertArgs),
    /// Run the homotopy obstruction search for given link dimensions.
    Homotopy(HomotopyArgs),
    /// Check a groupoid loaded from JSON.
    Nerve(NerveArgs),
    /// Audit the verdict over an exhaustive weight range.
    Audit(AuditArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Comma-separated integer weights, e.g. 1,1,-2
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
    /// Momentum level to reduce at
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    level: f64,
    /// Emit the JSON analysis bundle instead of a summary
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
    /// Completion degree cap (defaults to 2·Σ|α| + 2)
    #[arg(long)]
    degree_cap: Option<u32>,
}

#[derive(Args)]
struct HomotopyArgs {
    #[arg(long)]
    l1: u32,
    #[arg(long)]
    l2: u32,
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    k_max: u32,
}

#[derive(Args)]
struct NerveArgs {
    /// Path to the groupoid (or, for pi1 of an action, the action) JSON
    #[arg(long)]
    input: String,
    #[arg(long, value_enum)]
    check: NerveCheck,
    /// Basepoint object for the pi1 check (defaults to the first object)
    #[arg(long)]
    basepoint: Option<String>,
    /// Highest nerve level for the simplicial check
    #[arg(long, default_value_t = 4)]
    max_level: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum NerveCheck {
    Pi1,
    Simplicial,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_weight: i64,
}

fn parse_weights(input: &str) -> Result<WeightVector> {
    let raw: Vec<i64> = input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .with_context(|| format!("bad weight entry {part:?}"))
        })
        .collect::<Result<_>>()?;
    WeightVector::normalize_effective(&raw).context("weights do not define an effective action")
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze(args) => {
            let w = parse_weights(&args.weights)?;
            let bundle = analyze(&w, args.level)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&bundle)?);
            } else {
                print_summary(&bundle);
            }
            Ok(0)
        }
        Command::Hilbert(args) => {
            let w = parse_weights(&args.weights)?;
            let cap = args
                .degree_cap
                .unwrap_or_else(|| s1redux_core::invariant::default_degree_cap(&w));
            let basis = invariant_monoid_basis(&w, cap);
            println!("{}", serde_json::to_string_pretty(&basis)?);
            Ok(0)
        }
        Command::Homotopy(args) => {
            let result = obstruction_search(args.l1, args.l2, args.k_max, &standard_catalog())?;
            println!("{}", serde_json::to_string_pretty(&result)?);
            Ok(0)
        }
        Command::Nerve(args) => {
            let input = fs::read_to_string(&args.input)
                .with_context(|| format!("cannot read {}", args.input))?;
            match args.check {
                NerveCheck::Simplicial => {
                    let groupoid = groupoid_from_json(&input)?;
                    let report = groupoid.check_simplicial_identities(args.max_level.min(4));
                    println!("{}", serde_json::to_string_pretty(&report)?);
                    Ok(if report.ok { 0 } else { 2 })
                }
                NerveCheck::Pi1 => {
                    // accept either a raw groupoid or a group action
                    let groupoid = match groupoid_from_json(&input) {
                        Ok(g) => g,
                        Err(groupoid_err) => match action_from_json(&input) {
                            Ok(action) => s1redux_core::nerve::FiniteGroupoid::action_groupoid(
                                &action.group,
                                &action.set,
                                &action.action,
                            )?,
                            Err(_) => return Err(groupoid_err.into()),
                        },
                    };
                    let basepoint = match &args.basepoint {
                        Some(name) => groupoid
                            .object_index(name)
                            .with_context(|| format!("no object named {name}"))?,
                        None => 0,
                    };
                    let pi1 = groupoid.pi1_of_classifying_space(basepoint)?;
                    println!("{}", serde_json::to_string_pretty(&pi1)?);
                    Ok(0)
                }
            }
        }
        Command::Audit(args) => {
            let report = consistency_audit(args.max_n, args.max_weight);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.ok() { 0 } else { 2 })
        }
    }
}

fn print_summary(bundle: &s1redux_core::verdict::AnalysisBundle) {
    let d = &bundle.decomposition;
    println!("weights          {}", bundle.weights);
    println!(
        "signs            {} negative, {} zero, {} positive",
        bundle.sign_profile.num_negative, bundle.sign_profile.num_zero,
        bundle.sign_profile.num_positive
    );
    println!("level            {}", bundle.level);
    match d.link_description() {
        Some(link) => println!(
            "zero fiber       cone over {link} x R^{} flat factor",
            d.flat_factor_dim
        ),
        None => println!("zero fiber       {:?}", d.kind),
    }
    println!("reduced dim      {}", bundle.reduced_dim);
    println!(
        "hilbert basis    {} generators, k = {}, complete = {}",
        bundle.hilbert.generator_count, bundle.hilbert.k, bundle.hilbert.complete
    );
    if let Some(search) = &bundle.obstruction {
        println!(
            "obstruction      {:?} (survivors: {})",
            search.outcome,
            search.survivors.len()
        );
    }
    println!("verdict          {:?}", bundle.verdict.outcome);
    if let Some(hss) = bundle.verdict.hss_orbifold {
        println!("dim < 4 check    {hss}");
    }
    println!("evidence         {}", bundle.verdict.evidence.clause);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let help = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            err.print().ok();
            return if help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
