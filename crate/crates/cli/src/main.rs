use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccr::generate::GraphKind;
use ccr::Rule;
use ccr_cli::commands::{self, Algorithm, SolveOptions};
use ccr_cli::error::{CliError, EXIT_INVALID, EXIT_NO, EXIT_YES};
use ccr_cli::instance::{parse_multiset, Instance};
use clap::{Parser, Subcommand};

/// Connected components reconfiguration solver.
///
/// Exit codes: 0 yes, 1 no, 2 unknown, 3 invalid input, 4 state cap
/// exceeded, 5 internal error.
#[derive(Parser)]
#[command(name = "ccr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a JSON report.
    Solve {
        instance: PathBuf,
        /// Overrides the instance's rule.
        #[arg(long, value_parser = parse_rule)]
        rule: Option<Rule>,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
        /// Run the oracle when the chosen solver answers unknown.
        #[arg(long, value_parser = ["oracle"])]
        fallback: Option<String>,
        /// Print path moves as (size, from, to) instead of full states.
        #[arg(long)]
        compressed: bool,
        #[arg(long, default_value_t = ccr::oracle::DEFAULT_STATE_CAP)]
        state_cap: usize,
        /// Trust that the graph is chordal when forcing the chordal solver.
        #[arg(long)]
        skip_chordal_check: bool,
    },
    /// Check a sequence of states against a graph.
    Verify {
        /// Graph in the text format, or an instance file.
        graph: PathBuf,
        /// JSON list of states, or a report with a "sequence".
        sequence: PathBuf,
        #[arg(long, value_parser = parse_rule)]
        rule: Option<Rule>,
        /// Comma-separated sizes; defaults to the multiset of the first state.
        #[arg(long)]
        multiset: Option<String>,
    },
    /// Breadth-first search over every configuration.
    Oracle {
        instance: PathBuf,
        #[arg(long, value_parser = parse_rule)]
        rule: Option<Rule>,
        #[arg(long, default_value_t = ccr::oracle::DEFAULT_STATE_CAP)]
        state_cap: usize,
        /// Write the reconfiguration graph in DOT format.
        #[arg(long)]
        export_dot: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        /// path, cograph or chordal
        kind: String,
        n: usize,
        /// Comma-separated component sizes.
        #[arg(long)]
        multiset: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_rule)]
        rule: Option<Rule>,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse().map_err(|e: ccr::Error| e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(value)?)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve {
            instance,
            rule,
            algorithm,
            fallback,
            compressed,
            state_cap,
            skip_chordal_check,
        } => {
            let inst = Instance::load(&instance)?;
            let opts = SolveOptions {
                algorithm,
                fallback_oracle: fallback.is_some(),
                compressed,
                state_cap,
                check_chordal: !skip_chordal_check,
            };
            let report = commands::solve(&inst, rule, &opts)?;
            println!("{}", json(&report)?);
            Ok(report.exit_code())
        }
        Command::Verify {
            graph,
            sequence,
            rule,
            multiset,
        } => {
            let base = graph.parent().unwrap_or(Path::new("."));
            let g = commands::parse_graph_or_instance(&read(&graph)?, base)?;
            let (states, file_rule) = commands::parse_sequence(&read(&sequence)?)?;
            let rule = rule
                .or(file_rule)
                .ok_or_else(|| CliError::invalid("invalid-input", "no rule given (use --rule)"))?;
            let m = multiset.as_deref().map(parse_multiset).transpose()?;
            let report = commands::verify(&g, &states, rule, m.as_ref())?;
            println!("{}", json(&report)?);
            Ok(if report.valid { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle {
            instance,
            rule,
            state_cap,
            export_dot,
        } => {
            let inst = Instance::load(&instance)?;
            let (report, dot) = commands::oracle(&inst, rule, state_cap, export_dot.is_some())?;
            if let (Some(path), Some(dot)) = (export_dot, dot) {
                fs::write(&path, dot)
                    .map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))?;
            }
            println!("{}", json(&report)?);
            Ok(report.exit_code())
        }
        Command::Gen {
            kind,
            n,
            multiset,
            seed,
            rule,
            output,
        } => {
            let kind: GraphKind = kind.parse()?;
            let m = parse_multiset(&multiset)?;
            let text = json(&commands::gen(kind, n, &m, seed, rule)?)?;
            match output {
                Some(path) => fs::write(&path, text + "\n")
                    .map_err(|e| CliError::invalid("io", format!("{}: {e}", path.display())))?,
                None => println!("{text}"),
            }
            Ok(EXIT_YES)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_INVALID as u8
            } else {
                0
            });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let body = serde_json::json!({ "error": e.kind, "message": e.message });
            eprintln!("{body}");
            ExitCode::from(e.code as u8)
        }
    }
}
