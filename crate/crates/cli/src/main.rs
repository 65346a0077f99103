//! `rcwb`: a workbench for finite models of partial computation.
//!
//! `rcwb check` parses a model file (or uses the built-in demonstration
//! model), closes its atoms under products, coproducts and `amp`, and runs
//! the selected law suites, exiting 0 when every law passes. `rcwb eval`
//! evaluates a categorical expression against the named maps of a model
//! file and prints the resulting graph table.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rcwb::{expr, model_file, report, CliError};
use rcwb_core::finpar::FinParModel;
use rcwb_core::mutation::Mutation;
use rcwb_core::rescat::{Budget, LawStatus};
use rcwb_core::suites::{run_calg, run_finpar, run_mutated, Selection};

#[derive(Parser)]
#[command(name = "rcwb", version, about = "finite partial-map categories and their laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Finpar,
    Calg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Run law suites over a model and report pass/fail per law.
    Check(CheckArgs),
    /// Evaluate a categorical expression against a model.
    Eval(EvalArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Model file; omit with --demo for the built-in model.
    file: Option<String>,
    /// Use the built-in demonstration model.
    #[arg(long)]
    demo: bool,
    /// Which suites to run.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest object size quantified over.
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    /// Seed for the deterministic samplers.
    #[arg(long)]
    seed: Option<u64>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportKind::Text)]
    report: ReportKind,
    /// Which model family the file describes.
    #[arg(long, value_enum, default_value_t = ModelKind::Finpar)]
    model: ModelKind,
    /// Run against a mutated fixture (negative control).
    #[arg(long)]
    mutate: Option<String>,
    /// Closure depth for the object universe.
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// Cap on the number of objects in the closed universe.
    #[arg(long, default_value_t = 48)]
    max_objects: usize,
}

#[derive(Args)]
struct EvalArgs {
    /// Model file declaring objects and named maps.
    file: String,
    /// The expression to evaluate.
    #[arg(short = 'e', long = "expr")]
    expr: String,
    /// Which model family the file describes.
    #[arg(long, value_enum, default_value_t = ModelKind::Finpar)]
    model: ModelKind,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(args) => match check(&args) {
            Ok(all_pass) => {
                if all_pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Eval(args) => match eval(&args) {
            Ok(rendered) => {
                println!("{rendered}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
    }
}

fn read_model(args: &CheckArgs) -> Result<FinParModel, CliError> {
    if args.demo || args.file.as_deref() == Some("demo") {
        return Ok(FinParModel::demo());
    }
    let path = args
        .file
        .as_deref()
        .ok_or_else(|| CliError::Io("a model file (or --demo) is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
    model_file::parse_model(&text)
}

fn check(args: &CheckArgs) -> Result<bool, CliError> {
    let selection = Selection::from_name(&args.suite).ok_or_else(|| {
        CliError::Io(format!(
            "unknown suite `{}`; expected one of {}",
            args.suite,
            Selection::names().join(", ")
        ))
    })?;
    let mut budget = Budget::default().with_max_size(args.max_size);
    if let Some(seed) = args.seed {
        budget = budget.with_seed(seed);
    }
    let reports = match args.model {
        ModelKind::Finpar => {
            let parsed = read_model(args)?;
            let mut model = FinParModel::closed(
                parsed.atoms().to_vec(),
                args.depth,
                args.max_size,
                args.max_objects,
            );
            for (name, map) in parsed.named_maps() {
                model.insert_map(name, map.clone());
            }
            match &args.mutate {
                Some(name) => {
                    let mutation = Mutation::from_name(name).ok_or_else(|| {
                        CliError::Io(format!(
                            "unknown mutation `{name}`; expected one of {}",
                            Mutation::all().map(|m| m.name()).join(", ")
                        ))
                    })?;
                    run_mutated(&model, mutation, selection, &budget)
                }
                None => run_finpar(&model, selection, &budget),
            }
        }
        ModelKind::Calg => {
            let max_rank = match &args.file {
                Some(path) if !args.demo && path != "demo" => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
                    model_file::parse_calg_model(&text)?.max_rank.max(2)
                }
                _ => args.max_size.min(3) as u8,
            };
            run_calg(max_rank, selection, &budget)
        }
    };
    let rendered = match args.report {
        ReportKind::Text => report::render_text(&reports),
        ReportKind::Records => report::render_records(&reports),
    };
    print!("{rendered}");
    Ok(reports.iter().all(|r| r.status != LawStatus::Fail))
}

fn eval(args: &EvalArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.file)))?;
    match args.model {
        ModelKind::Finpar => {
            let model = model_file::parse_model(&text)?;
            let evaluator = expr::Evaluator::new(&model);
            Ok(evaluator.eval_text(&args.expr)?.render())
        }
        ModelKind::Calg => {
            let file = model_file::parse_calg_model(&text)?;
            let evaluator = expr::CalgEvaluator { maps: &file.maps };
            Ok(evaluator.eval_text(&args.expr)?.render())
        }
    }
}
