use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trirev::claims::{self, ClaimResult};
use trirev::enumeration::{
    enumerate_balanced_f1, enumerate_extensions, enumerate_extensions_23, enumerate_extensions_full_scan,
    filter_symmetric, find_law_counterexamples, CyclicOp, ExtensionQuery, Law,
};
use trirev::format;
use trirev::gates::{boolean_and, boolean_or};
use trirev::{embed, gate, Circuit, Error, Gate, StateVector, TruthTable};

#[derive(Parser)]
#[command(name = "trirev", version, about = "Reversible binary/ternary gates, circuits and enumerations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a gate's truth table, one `a b -> a' b'` row per input.
    Table { gate: String },
    /// Print a gate's matrix.
    Matrix { gate: String },
    /// Print a gate's period.
    Order { gate: String },
    /// Run a circuit file on a digit word or on a state vector.
    Run {
        file: PathBuf,
        /// Input digits, one per wire.
        #[arg(required_unless_present = "state")]
        digits: Vec<usize>,
        /// Complex amplitudes in basis order (normalized before use).
        #[arg(long, num_args = 1.., allow_hyphen_values = true, conflicts_with = "digits")]
        state: Vec<String>,
    },
    /// Embed a truth-table file as a reversible permutation.
    Embed { file: PathBuf },
    /// List extensions, balanced first components, symmetric ones or law counterexamples.
    Enumerate {
        #[arg(value_enum, ignore_case = true)]
        mode: Mode,
        #[arg(value_enum, ignore_case = true)]
        base: Base,
        /// Register the base function is extended on.
        #[arg(long, value_enum, default_value = "33")]
        ambient: Ambient,
        /// Use the exhaustive scan over all permutations (extensions only).
        #[arg(long)]
        full_scan: bool,
    },
    /// Run one named check, or `all`.
    Verify {
        #[arg(default_value = "all")]
        claim: String,
        /// List claim ids instead of running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Extensions,
    Balanced,
    Symmetric,
    Counterexamples,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    And,
    Or,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ambient {
    #[value(name = "33")]
    TwoTrits,
    #[value(name = "23")]
    BitTrit,
}

enum Outcome {
    Done,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = execute(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command, out: &mut String) -> Result<Outcome, Error> {
    match command {
        Command::Table { gate: name } => out.push_str(&format::gate_table(&gate(&name)?)?),
        Command::Matrix { gate: name } => out.push_str(&format::matrix(gate(&name)?.matrix())),
        Command::Order { gate: name } => {
            let g = gate(&name)?;
            let p = g.permutation().ok_or_else(|| Error::NonClassical(name.clone()))?;
            out.push_str(&format!("{}\n", p.order()));
        }
        Command::Run { file, digits, state } => run(&file, &digits, &state, out)?,
        Command::Embed { file } => {
            let table: TruthTable = read(&file)?.parse()?;
            let (perm, report) = embed(&table)?;
            let shape = table.input_shape().concat(table.output_shape())?;
            out.push_str(&format::gate_table(&Gate::classical("EMBED", shape, perm)?)?);
            out.push_str(&format!("{report}\n"));
        }
        Command::Enumerate { mode, base, ambient, full_scan } => enumerate(mode, base, ambient, full_scan, out)?,
        Command::Verify { claim, list } => return verify(&claim, list, out),
    }
    Ok(Outcome::Done)
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn run(file: &Path, digits: &[usize], state: &[String], out: &mut String) -> Result<(), Error> {
    let circuit: Circuit = read(file)?.parse()?;
    if state.is_empty() {
        if circuit.is_classical() {
            out.push_str(&format!("{}\n", circuit.simulate_classical(digits)?));
        } else {
            let input = StateVector::basis(circuit.shape().clone(), digits)?;
            out.push_str(&format!("{}\n", format::amplitudes(circuit.simulate_quantum(&input)?.amplitudes())));
        }
        return Ok(());
    }
    let amplitudes = state.iter().map(|s| format::parse_complex(s)).collect::<Result<Vec<_>, _>>()?;
    let input = StateVector::normalized(circuit.shape().clone(), amplitudes)?;
    out.push_str(&format!("{}\n", format::amplitudes(circuit.simulate_quantum(&input)?.amplitudes())));
    Ok(())
}

fn enumerate(mode: Mode, base: Base, ambient: Ambient, full_scan: bool, out: &mut String) -> Result<(), Error> {
    let table = match base {
        Base::And => boolean_and(),
        Base::Or => boolean_or(),
    };
    if full_scan && !matches!(mode, Mode::Extensions) {
        return Err(Error::InvalidArgument("--full-scan only applies to `extensions`".into()));
    }
    if ambient == Ambient::BitTrit && !matches!(mode, Mode::Extensions) {
        return Err(Error::InvalidArgument("--ambient 23 only applies to `extensions`".into()));
    }
    let count = match mode {
        Mode::Extensions if ambient == Ambient::BitTrit => {
            let found = if full_scan {
                enumerate_extensions_full_scan(&ExtensionQuery::bit_trit(table.clone())?)
            } else {
                enumerate_extensions_23(&table)?.permutations
            };
            for p in &found {
                out.push_str(&format!("{p}\n"));
            }
            out.push_str(&format!("relabel_count={}\n", enumerate_extensions_23(&table)?.relabel_count));
            found.len()
        }
        Mode::Extensions => {
            let q = ExtensionQuery::ternary(table)?;
            let found = if full_scan { enumerate_extensions_full_scan(&q) } else { enumerate_extensions(&q) };
            for p in &found {
                out.push_str(&format!("{p}\n"));
            }
            found.len()
        }
        Mode::Balanced | Mode::Symmetric => {
            let mut tables = enumerate_balanced_f1(&table)?;
            if matches!(mode, Mode::Symmetric) {
                tables = filter_symmetric(&tables);
            }
            for t in &tables {
                out.push_str(&format!("{}\n", t.compact()));
            }
            tables.len()
        }
        Mode::Counterexamples => {
            let op = match base {
                Base::And => CyclicOp::And,
                Base::Or => CyclicOp::Or,
            };
            let mut n = 0;
            for (label, law) in [("associativity", Law::Associativity), ("distributivity", Law::Distributivity)] {
                for [a, b, c] in find_law_counterexamples(op, law) {
                    out.push_str(&format!("{label} {a} {b} {c}\n"));
                    n += 1;
                }
            }
            n
        }
    };
    out.push_str(&format!("count={count}\n"));
    Ok(())
}

fn verify(claim: &str, list: bool, out: &mut String) -> Result<Outcome, Error> {
    if list {
        for c in claims::CLAIMS {
            out.push_str(&format!("{} {}\n", c.id, c.summary));
        }
        return Ok(Outcome::Done);
    }
    let results: Vec<ClaimResult> = if claim == "all" {
        claims::run_all()
    } else {
        let c = claims::find(claim).ok_or_else(|| Error::InvalidArgument(format!("unknown claim `{claim}`")))?;
        vec![c.run()]
    };
    for r in &results {
        out.push_str(&format!("{r}\n"));
    }
    Ok(if results.iter().all(|r| r.passed) { Outcome::Done } else { Outcome::Failed })
}
