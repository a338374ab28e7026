mod commands;
mod document;
mod error;
mod input;

use std::io::Write;
use std::process::ExitCode;

use bialg_core::corpus::BUILTIN_NAMES;
use bialg_core::Field;
use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{Options, Outcome};
use error::CliError;

/// Exact computations with finite-dimensional bialgebras: canonical maps,
/// Hopf envelopes, cofree Hopf sub-bialgebras and monoid diagnostics.
///
/// INPUT is a JSON document path or `@name` for a built-in fixture
/// (see `bialg list`).
#[derive(Debug, Parser)]
#[command(name = "bialg", version)]
struct Cli {
    /// Ground field: Q, F2, F3, F5, ... Overrides the field in a document.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,

    /// Include full matrices and documents in the JSON report.
    #[arg(long, global = true)]
    full: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every bialgebra axiom and report the first counterexample.
    Verify { input: String },
    /// The coinvariant quotient B⊘B and the canonical map i.
    Oslash { input: String },
    /// The invariant subspace B⊠B and the canonical map p.
    Boxslash { input: String },
    /// Bijectivity of i and p against existence of an anti-bialgebra right antipode.
    Frobenius { input: String },
    /// Minimal left, right and central n-antipodes.
    Nantipode { input: String },
    /// Hopf envelope as a quotient, with antipode and structure map.
    Envelope { input: String },
    /// Cofree Hopf sub-bialgebra, with antipode and structure map.
    Cofree { input: String },
    /// Cocommutative cofree Hopf algebra inside B⊗B^op.
    Cocofree { input: String },
    /// Transpose of the envelope map against the cofree part of the dual.
    Dualcheck { input: String },
    /// Finite monoid diagnostics.
    Monoid {
        #[command(subcommand)]
        command: MonoidCommand,
    },
    /// Run every invariant over the built-in fixtures and random monoids.
    Corpus {
        /// Fields to run over; defaults to Q, F2 and F3.
        #[arg(long = "fields", value_delimiter = ',', value_parser = parse_field)]
        fields: Vec<Field>,
        /// Number of random transformation monoids to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print an input as a JSON document.
    Export { input: String },
    /// List built-in fixture names.
    List,
}

#[derive(Debug, Subcommand)]
enum MonoidCommand {
    /// Units, left units, regular elements and cancellativity diagnostics.
    Units { input: String },
    /// Enveloping group computed from the Hopf envelope of the monoid algebra.
    Envgroup { input: String },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: bialg_core::Error| e.to_string())
}

fn list() -> Outcome {
    let names: Vec<String> = BUILTIN_NAMES
        .iter()
        .map(|n| format!("@{n}"))
        .chain(["@monogenic:I:P", "@cyclic:N", "@radford-dual:N"].map(String::from))
        .collect();
    Outcome {
        report: json!({ "command": "list", "builtins": names }),
        summary: format!("{} built-in fixtures", BUILTIN_NAMES.len()),
        exit: 0,
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = Options { full: cli.full };
    let load = |spec: &str| input::load(spec, cli.field);
    let field = cli.field.unwrap_or(Field::Rational);
    match &cli.command {
        Command::Verify { input } => commands::verify(&load(input)?),
        Command::Oslash { input } => commands::oslash(&load(input)?, opts),
        Command::Boxslash { input } => commands::boxslash(&load(input)?, opts),
        Command::Frobenius { input } => commands::frobenius(&load(input)?, opts),
        Command::Nantipode { input } => commands::nantipode(&load(input)?, opts),
        Command::Envelope { input } => commands::envelope(&load(input)?, opts),
        Command::Cofree { input } => commands::cofree(&load(input)?, opts),
        Command::Cocofree { input } => commands::cocofree(&load(input)?, opts),
        Command::Dualcheck { input } => commands::dualcheck(&load(input)?),
        Command::Monoid { command } => match command {
            MonoidCommand::Units { input } => commands::monoid_units(input, &input::load_monoid(input)?, field),
            MonoidCommand::Envgroup { input } => commands::monoid_envgroup(input, &input::load_monoid(input)?, field),
        },
        Command::Corpus { fields, random, seed } => {
            let fields = if fields.is_empty() {
                vec![Field::Rational, Field::Prime(2), Field::Prime(3)]
            } else {
                fields.clone()
            };
            commands::corpus(&fields, *random, *seed)
        }
        Command::Export { input } => commands::export(&load(input)?),
        Command::List => Ok(list()),
    }
}

// Write errors (a closed pipe, say) are ignored rather than panicking.
fn emit(value: &serde_json::Value, summary: &str) {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    let _ = writeln!(std::io::stderr().lock(), "{summary}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            emit(&outcome.report, &outcome.summary);
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            emit(
                &json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
                &format!("bialg: {e}"),
            );
            ExitCode::from(e.exit_code())
        }
    }
}
