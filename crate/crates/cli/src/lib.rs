//! Command-line front end for the `grossone` library.
//!
//! [`dispatch`] runs one command line and returns the exit code and the
//! text that would go to stdout and stderr, so the binary is a thin wrapper
//! and tests need no subprocess.
//!
//! Exit codes: `0` success, `1` domain error (stderr names the error), `2`
//! usage error (nothing is computed).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use grossone::sequences::{cardinality, NumeralSystem, ObservableSequence, SetFamily};
use grossone::simulate::{
    bfs_simulate_with, build_tree_with_cap, nondet_degree, observability, render, simulation_cost, ReportFormat,
    SimulationMode, SimulationOptions,
};
use grossone::turing::{output_observable, recode_length, run_with_cap, Budget, MachineSpec, DEFAULT_DESK_CAP};
use grossone::GrossNumber;

/// Environment variable holding the desk execution cap.
pub const CAP_ENV: &str = "GROSSONE_DESK_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "grossone",
    version,
    about = "Exact grossone arithmetic and machine observability"
)]
struct Cli {
    /// Report layout.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the report to PATH instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
    /// Desk execution cap: steps for `run --budget g`, nodes for `tree`,
    /// executed steps for `simulate`.
    #[arg(long, value_name = "N", env = CAP_ENV, default_value_t = DEFAULT_DESK_CAP, global = true)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Kv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ReportFormat::Table,
            Format::Kv => ReportFormat::Kv,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print `<`, `=` or `>`.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Number of elements of a standard set.
    Count {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        radix: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        arity: Option<u32>,
    },
    /// Sequence algebra. A sequence is written `[FIRST[,STEP]:]LENGTH`;
    /// FIRST and STEP default to 1.
    Seq {
        #[command(subcommand)]
        op: SeqOp,
    },
    /// Run a deterministic machine.
    Run {
        #[command(flatten)]
        machine: MachineArgs,
        /// Step budget: a positive integer or `g`.
        #[arg(long)]
        budget: String,
    },
    /// Statistics of the computation tree.
    Tree {
        #[command(flatten)]
        machine: MachineArgs,
        #[arg(long)]
        depth: u64,
    },
    /// Breadth-first deterministic simulation.
    Simulate {
        #[command(flatten)]
        machine: MachineArgs,
        #[arg(long)]
        depth: u64,
        /// Extend stored configurations instead of re-executing paths; the
        /// step count then does not follow the re-execution cost model.
        #[arg(long)]
        cached: bool,
    },
    /// Steps needed to simulate a complete tree.
    Cost {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        depth: String,
    },
    /// Observability verdicts for a complete tree.
    Check {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        depth: String,
    },
    /// Length of an output after changing radix.
    Recode {
        #[arg(long)]
        length: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
}

#[derive(Debug, Args)]
struct MachineArgs {
    /// Machine file.
    file: PathBuf,
    /// Input word: one symbol per character, or comma-separated symbols.
    #[arg(long, default_value = "")]
    input: String,
}

#[derive(Debug, Subcommand)]
enum SeqOp {
    /// Join two sequences; prints the joined length and any remainder.
    Concat { a: String, b: String },
    /// Last element.
    Last { seq: String },
    /// Elements with a numeral in the given system.
    Observe {
        seq: String,
        /// `p_hat`, `p_tilde`, `piraha`, or a numeral-system file.
        #[arg(long, default_value = "p_hat")]
        numerals: String,
    },
    /// Drop elements from the end.
    Remove {
        seq: String,
        #[arg(long)]
        count: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Naturals,
    Evens,
    Odds,
    Integers,
    /// Needs `--m`.
    NaturalsMinus,
    /// Needs `--m`.
    NaturalsPlus,
    /// Needs `--arity`.
    Tuples,
    /// `[0, 1)`; needs `--radix`.
    Fractional,
    /// `(0, 1)`; needs `--radix`.
    OpenInterval,
    /// Needs `--radix`.
    IntegerNumerals,
    ExtendedNaturals,
}

/// Exit code and captured output of one command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure carrying the library's error name.
#[derive(Debug)]
struct Failure {
    name: &'static str,
    message: String,
    /// Bad flag combination detected before any computation; exits with 2.
    usage: bool,
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure { name: e.name(), message: e.to_string(), usage: false }
            }
        }
    )*};
}

failure_from!(
    grossone::GrossError,
    grossone::sequences::SequenceError,
    grossone::turing::TuringError,
    grossone::simulate::SimulateError
);

impl From<grossone::sequences::NumeralFileError> for Failure {
    fn from(e: grossone::sequences::NumeralFileError) -> Self {
        Failure {
            name: "ParseError",
            message: e.to_string(),
            usage: false,
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        name: "IoError",
        message: format!("{}: {e}", path.display()),
        usage: false,
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        name: "UsageError",
        message: message.into(),
        usage: true,
    }
}

/// Run one command line; `argv[0]` is the program name.
///
/// ```
/// let out = grossone_cli::dispatch(["grossone", "eval", "g - g"]);
/// assert_eq!((out.code, out.stdout.as_str()), (0, "0\n"));
/// ```
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, &text)
            .map(|_| String::new())
            .map_err(|e| io_failure(path, e)),
        None => Ok(text),
    });
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: if f.usage { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", f.name, f.message),
        },
    }
}

fn gross(text: &str) -> Result<GrossNumber, Failure> {
    Ok(text.parse::<GrossNumber>()?)
}

/// A single value: bare in table layout, `key=value` in kv layout.
fn single(format: Format, key: &str, value: impl std::fmt::Display) -> String {
    match format {
        Format::Table => format!("{value}\n"),
        Format::Kv => format!("{key}={value}\n"),
    }
}

fn rows(format: Format, rows: Vec<(String, String)>) -> String {
    render(&rows, format.into())
}

fn row(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

fn parse_sequence(text: &str) -> Result<ObservableSequence, Failure> {
    let (head, length) = match text.split_once(':') {
        Some((head, length)) => (Some(head), length),
        None => (None, text),
    };
    let (first, step) = match head.map(|h| h.split_once(',')) {
        None => (GrossNumber::one(), GrossNumber::one()),
        Some(None) => (gross(head.unwrap())?, GrossNumber::one()),
        Some(Some((first, step))) => (gross(first)?, gross(step)?),
    };
    Ok(ObservableSequence::arithmetic(first, step, gross(length)?)?)
}

fn numeral_system(name: &str) -> Result<NumeralSystem, Failure> {
    Ok(match name {
        "p_hat" => NumeralSystem::p_hat(),
        "p_tilde" => NumeralSystem::p_tilde(),
        "piraha" | "pirahá" => NumeralSystem::piraha(),
        path => {
            let path = Path::new(path);
            fs::read_to_string(path).map_err(|e| io_failure(path, e))?.parse()?
        }
    })
}

fn load_machine(args: &MachineArgs) -> Result<(MachineSpec, Vec<String>), Failure> {
    let text = fs::read_to_string(&args.file).map_err(|e| io_failure(&args.file, e))?;
    let spec: MachineSpec = text.parse()?;
    let input = spec.parse_input(&args.input)?;
    Ok((spec, input))
}

fn family(f: Family, radix: Option<u64>, m: Option<u64>, arity: Option<u32>) -> Result<SetFamily, Failure> {
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| usage(format!("{flag} is required for this family")));
    Ok(match f {
        Family::Naturals => SetFamily::Naturals,
        Family::Evens => SetFamily::Evens,
        Family::Odds => SetFamily::Odds,
        Family::Integers => SetFamily::Integers,
        Family::NaturalsMinus => SetFamily::NaturalsMinus(need(m, "--m")?),
        Family::NaturalsPlus => SetFamily::NaturalsPlus(need(m, "--m")?),
        Family::Tuples => SetFamily::Tuples(arity.ok_or_else(|| usage("--arity is required for tuples"))?),
        Family::Fractional => SetFamily::FractionalNumerals(need(radix, "--radix")?),
        Family::OpenInterval => SetFamily::OpenUnitInterval(need(radix, "--radix")?),
        Family::IntegerNumerals => SetFamily::IntegerNumerals(need(radix, "--radix")?),
        Family::ExtendedNaturals => SetFamily::ExtendedNaturals,
    })
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    Ok(match &cli.command {
        Command::Eval { expr } => single(format, "value", gross(expr)?),
        Command::Compare { a, b } => {
            let symbol = match gross(a)?.cmp(&gross(b)?) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            single(format, "order", symbol)
        }
        Command::Count {
            family: f,
            radix,
            m,
            arity,
        } => single(format, "count", cardinality(family(*f, *radix, *m, *arity)?)?),
        Command::Seq { op } => seq(format, op)?,
        Command::Run { machine, budget } => {
            let budget = match budget.as_str() {
                "g" | "①" => Budget::Grossone,
                n => Budget::Steps(
                    n.parse()
                        .map_err(|_| usage(format!("budget {n:?} is neither a positive integer nor g")))?,
                ),
            };
            let (spec, input) = load_machine(machine)?;
            let r = run_with_cap(&spec, &input, budget, cli.cap)?;
            let status = match r.status {
                grossone::turing::RunStatus::Halted => "halted",
                grossone::turing::RunStatus::BudgetExhausted => "budget_exhausted",
            };
            rows(
                format,
                vec![
                    row("status", status),
                    row("accepted", r.accepted(&spec)),
                    row("steps", r.steps_executed),
                    row("budget", r.budget.as_gross()),
                    row("output", r.output.concat()),
                    row("output_length", r.output_length()),
                    row("output_observable", output_observable(&r.output_length())),
                    row("final_state", &r.final_config.state),
                    row("head", r.final_config.head),
                    row("tape", r.final_config.tape_string(&spec.blank)),
                ],
            )
        }
        Command::Tree { machine, depth } => {
            let (spec, input) = load_machine(machine)?;
            let t = build_tree_with_cap(&spec, &input, *depth, cli.cap)?;
            let d = nondet_degree(&spec);
            let levels: Vec<String> = (1..=t.levels.len()).map(|j| t.level_size(j).to_string()).collect();
            rows(
                format,
                vec![
                    row("degree", d),
                    row("depth", depth),
                    row("nodes", t.node_count()),
                    row("leaves", t.leaf_count()),
                    row("levels", levels.join(" ")),
                    row("complete", t.is_complete(d)),
                    row("halting_configurations", t.halting_configurations().len()),
                ],
            )
        }
        Command::Simulate { machine, depth, cached } => {
            let (spec, input) = load_machine(machine)?;
            let options = SimulationOptions {
                mode: if *cached {
                    SimulationMode::Cached
                } else {
                    SimulationMode::ReExecute
                },
                step_cap: cli.cap,
            };
            rows(format, bfs_simulate_with(&spec, &input, *depth, options)?.rows())
        }
        Command::Cost { degree, depth } => single(format, "cost", simulation_cost(*degree, &gross(depth)?)?),
        Command::Check { degree, depth } => {
            let k = gross(depth)?;
            let v = observability(*degree, &k)?;
            let mut out = String::new();
            if format == Format::Kv {
                out.push_str(&format!(
                    "degree={degree}\ndepth={k}\ncost={}\n",
                    simulation_cost(*degree, &k)?
                ));
            }
            for (name, ok) in v.entries() {
                out.push_str(&format!("{name}={ok}\n"));
            }
            out
        }
        Command::Recode { length, from, to } => {
            let r = recode_length(&gross(length)?, *from, *to)?;
            rows(
                format,
                vec![
                    row("code_length", r.code_length),
                    row("length", r.length),
                    row("observable", r.observable),
                ],
            )
        }
    })
}

fn seq(format: Format, op: &SeqOp) -> Result<String, Failure> {
    Ok(match op {
        SeqOp::Concat { a, b } => {
            let (merged, rest) = ObservableSequence::concat(&parse_sequence(a)?, &parse_sequence(b)?);
            let rest = rest.map_or("none".to_string(), |r| r.len().to_string());
            rows(format, vec![row("length", merged.len()), row("remainder", rest)])
        }
        SeqOp::Last { seq } => single(format, "last", parse_sequence(seq)?.last_element()),
        SeqOp::Observe { seq, numerals } => {
            let found = parse_sequence(seq)?.observable_elements(&numeral_system(numerals)?);
            let mut out = vec![row("count", found.len())];
            for (j, (i, v)) in found.iter().enumerate() {
                out.push((format!("index.{}", j + 1), i.to_string()));
                out.push((format!("value.{}", j + 1), v.to_string()));
            }
            rows(format, out)
        }
        SeqOp::Remove { seq, count } => {
            let s = parse_sequence(seq)?.remove_elements(&gross(count)?)?;
            rows(format, vec![row("length", s.len()), row("last", s.last_element())])
        }
    })
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
