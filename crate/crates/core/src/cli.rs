//! Command-line front end. [`dispatch`] does all the work against generic
//! streams and returns the exit status, so it can be driven from tests.
//!
//! Exit status: 0 success, 1 a check or search came up empty, 2 unreadable
//! or malformed input, 3 fuel exhausted, 4 evaluation fault or stuck machine.

use crate::bridges::{self, fixtures};
use crate::lambda::{beta_step, normalize, parse_lambda, ReductionOutcome, Strategy};
use crate::lisp::{self, EvalOutcome, Interpreter, ReplOptions};
use crate::problems::{self, ProblemError, Resolution};
use crate::sexpr;
use crate::turing::{parse_machine, RunOutcome};
use clap::{Parser, Subcommand};
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_FUEL: i32 = 3;
pub const EXIT_FAULT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "workbench",
    version,
    about = "Lambda calculus, Turing machines and a minimal Lisp"
)]
pub struct Cli {
    /// Step budget for every evaluation.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub fuel: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a lambda term and print its canonical form.
    LambdaParse(TermArgs),
    /// Perform one beta step.
    LambdaReduce(TermArgs),
    /// Reduce to normal form within the fuel budget.
    LambdaNormalize(TermArgs),
    /// Run a machine file on an input tape.
    TmRun {
        machine: PathBuf,
        /// Space-separated input symbols.
        #[arg(long, default_value = "")]
        input: String,
    },
    /// Compile a machine file to Lisp and print the program.
    TmCompile { machine: PathBuf },
    /// Read-eval-print loop on standard input.
    LispRepl {
        /// Start without the bundled prelude.
        #[arg(long)]
        bare: bool,
    },
    /// Evaluate every form of a file, printing each result.
    LispRun {
        file: PathBuf,
        #[arg(long)]
        bare: bool,
    },
    /// Resolve the problem in a file; by inverse when no resolution follows it.
    Solve { file: PathBuf },
    /// Show Merge acting as successor on Zermelo numerals.
    MergeDemo {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Cross-check the three formalisms against each other.
    EquivCheck {
        /// Largest n for the aⁿbⁿ demonstration.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Debug, clap::Args)]
pub struct TermArgs {
    /// The term; omit when using --file.
    #[arg(required_unless_present = "file")]
    pub term: Option<String>,
    #[arg(long, conflicts_with = "term")]
    pub file: Option<PathBuf>,
    #[arg(long, default_value = "normal")]
    pub strategy: Strategy,
}

fn read_file(path: &Path, err: &mut impl Write) -> Result<String, i32> {
    std::fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn term_source(args: &TermArgs, err: &mut impl Write) -> Result<String, i32> {
    match (&args.term, &args.file) {
        (Some(t), _) => Ok(t.clone()),
        (None, Some(path)) => read_file(path, err),
        (None, None) => unreachable!("clap requires one of term or --file"),
    }
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(code) => return Ok(code),
        }
    };
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let stdin = io::stdin();
    match dispatch(&cli, stdin.lock(), io::stdout().lock(), io::stderr().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAULT
        }
    }
}

pub fn dispatch<R: BufRead, O: Write, E: Write>(
    cli: &Cli,
    input: R,
    mut out: O,
    mut err: E,
) -> io::Result<i32> {
    let fuel = cli.fuel;
    match &cli.command {
        Command::LambdaParse(args) => {
            let text = attempt!(term_source(args, &mut err));
            match parse_lambda(&text) {
                Ok(t) => {
                    writeln!(out, "{t}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_PARSE)
                }
            }
        }
        Command::LambdaReduce(args) => {
            let text = attempt!(term_source(args, &mut err));
            let t = match parse_lambda(&text) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_PARSE);
                }
            };
            if fuel == 0 {
                writeln!(out, "{t}")?;
                writeln!(err, "fuel: exhausted after 0 steps")?;
                return Ok(EXIT_FUEL);
            }
            match beta_step(&t, args.strategy) {
                Some(next) => {
                    writeln!(out, "{next}")?;
                    writeln!(err, "steps: 1")?;
                }
                None => {
                    writeln!(out, "{t}")?;
                    writeln!(err, "steps: 0")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::LambdaNormalize(args) => {
            let text = attempt!(term_source(args, &mut err));
            let t = match parse_lambda(&text) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_PARSE);
                }
            };
            match normalize(&t, args.strategy, fuel) {
                ReductionOutcome::Normalized { term, steps } => {
                    writeln!(out, "{term}")?;
                    writeln!(err, "steps: {steps}")?;
                    Ok(EXIT_OK)
                }
                ReductionOutcome::FuelExhausted { partial, steps } => {
                    writeln!(out, "fuel: exhausted after {steps} steps")?;
                    writeln!(err, "partial: {partial}")?;
                    Ok(EXIT_FUEL)
                }
            }
        }
        Command::TmRun { machine, input } => {
            let text = attempt!(read_file(machine, &mut err));
            let m = match parse_machine(&text) {
                Ok(m) => m,
                Err(e) => {
                    writeln!(err, "error: {}: {e}", machine.display())?;
                    return Ok(EXIT_PARSE);
                }
            };
            let symbols: Vec<&str> = input.split_whitespace().collect();
            let tape = match m.load(&symbols) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_PARSE);
                }
            };
            let outcome = m.run(tape, fuel);
            writeln!(out, "{}", outcome.tape())?;
            writeln!(
                err,
                "{} in state {} after {} steps, head at {}",
                outcome.kind(),
                outcome.state(),
                outcome.steps(),
                outcome.tape().head()
            )?;
            Ok(match outcome {
                RunOutcome::Halted { .. } => EXIT_OK,
                RunOutcome::FuelExhausted { .. } => EXIT_FUEL,
                RunOutcome::Stuck { .. } => EXIT_FAULT,
            })
        }
        Command::TmCompile { machine } => {
            let text = attempt!(read_file(machine, &mut err));
            match parse_machine(&text) {
                Ok(m) => {
                    write!(out, "{}", bridges::compile_tm(&m))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {}: {e}", machine.display())?;
                    Ok(EXIT_PARSE)
                }
            }
        }
        Command::LispRepl { bare } => {
            let mut interp = interpreter(*bare);
            let options = ReplOptions {
                fuel_per_form: fuel,
                prompt: true,
            };
            lisp::repl(input, out, &mut interp, options)?;
            Ok(EXIT_OK)
        }
        Command::LispRun { file, bare } => {
            let text = attempt!(read_file(file, &mut err));
            let mut interp = interpreter(*bare);
            let outcomes = match lisp::run_program(&mut interp, &text, fuel) {
                Ok(o) => o,
                Err(e) => {
                    writeln!(err, "error: {}: {e}", file.display())?;
                    return Ok(EXIT_PARSE);
                }
            };
            let mut code = EXIT_OK;
            for o in &outcomes {
                writeln!(out, "{}", lisp::render(o))?;
                let this = match o {
                    EvalOutcome::Value { .. } => EXIT_OK,
                    EvalOutcome::FuelExhausted { .. } => EXIT_FUEL,
                    EvalOutcome::Fault { .. } => EXIT_FAULT,
                };
                code = code.max(this);
            }
            Ok(code)
        }
        Command::Solve { file } => {
            let text = attempt!(read_file(file, &mut err));
            solve(&text, fuel, &mut out, &mut err)
        }
        Command::MergeDemo { n_max } => {
            for n in 0..=*n_max {
                let e = bridges::zermelo_encode(n);
                let m = bridges::merge(&e, &e);
                let decoded =
                    bridges::zermelo_decode(&m).map_or("-".to_string(), |k| k.to_string());
                writeln!(out, "Merge({e}, {e}) = {m} = {decoded}")?;
            }
            Ok(EXIT_OK)
        }
        Command::EquivCheck { n_max } => equiv_check(*n_max, fuel, &mut out),
    }
}

fn interpreter(bare: bool) -> Interpreter {
    if bare {
        Interpreter::new()
    } else {
        Interpreter::with_prelude()
    }
}

fn problem_error_code(e: &ProblemError) -> i32 {
    match e {
        ProblemError::Malformed { .. } => EXIT_PARSE,
        ProblemError::FuelExhausted(_) => EXIT_FUEL,
        _ => EXIT_FAULT,
    }
}

fn list_text(items: &[sexpr::SExpr]) -> String {
    sexpr::SExpr::list(items.iter().cloned()).to_string()
}

fn solve(text: &str, fuel: u64, out: &mut impl Write, err: &mut impl Write) -> io::Result<i32> {
    let forms = match sexpr::read_all(text) {
        Ok(f) => f,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_PARSE);
        }
    };
    let parsed = match forms.as_slice() {
        [p] => problems::deserialize_problem(p).map(|p| (p, Resolution::Inverse { domain: None })),
        [p, r] => problems::deserialize_problem(p)
            .and_then(|p| problems::deserialize_resolution(r).map(|r| (p, r))),
        _ => {
            writeln!(
                err,
                "error: expected a problem optionally followed by a resolution"
            )?;
            return Ok(EXIT_PARSE);
        }
    };
    let (problem, resolution) = match parsed {
        Ok(pr) => pr,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(problem_error_code(&e));
        }
    };
    if let Resolution::Inverse { domain } = &resolution {
        let domain = domain.as_deref().unwrap_or(&problem.domain);
        return match problems::partition(&problem, domain, fuel) {
            Ok((yes, no)) => {
                writeln!(out, "solutions: {}", list_text(&yes))?;
                writeln!(out, "non-solutions: {}", list_text(&no))?;
                Ok(if yes.is_empty() {
                    EXIT_NOT_FOUND
                } else {
                    EXIT_OK
                })
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(problem_error_code(&e))
            }
        };
    }
    match problems::run_resolution(&resolution, &problem, fuel) {
        Ok(Some(sols)) => {
            writeln!(out, "solutions: {}", list_text(&sols))?;
            Ok(EXIT_OK)
        }
        Ok(None) => {
            writeln!(out, "no solution")?;
            Ok(EXIT_NOT_FOUND)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(problem_error_code(&e))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn equiv_check(n_max: usize, fuel: u64, out: &mut impl Write) -> io::Result<i32> {
    let mut all_ok = true;
    for (name, text) in fixtures::EQUIVALENCE {
        let m = bridges::fixture(text);
        let r = bridges::compare_with_simulator(&m, 5, fuel);
        let ok = r.mismatches.is_empty();
        all_ok &= ok;
        writeln!(
            out,
            "compiled {name}: {} inputs, {} mismatches: {}",
            r.checked,
            r.mismatches.len(),
            verdict(ok)
        )?;
        for line in r.mismatches.iter().take(5) {
            writeln!(out, "  {line}")?;
        }
    }

    let mut disagreements = Vec::new();
    for n in 0..=10 {
        for m in 0..=10 {
            let sums = [
                bridges::church_sum(n, m, fuel.saturating_mul(10)),
                bridges::lisp_sum(n, m, fuel),
                bridges::turing_sum(n, m, fuel),
            ];
            if sums.iter().any(|s| *s != Some(n + m)) {
                disagreements.push(format!("{n}+{m}: {sums:?}"));
            }
        }
    }
    let ok = disagreements.is_empty();
    all_ok &= ok;
    writeln!(
        out,
        "numerals: 121 sums, {} disagreements: {}",
        disagreements.len(),
        verdict(ok)
    )?;
    for line in disagreements.iter().take(5) {
        writeln!(out, "  {line}")?;
    }

    let report = bridges::anbn_demo(n_max, fuel);
    let ok = report.is_clean();
    all_ok &= ok;
    writeln!(
        out,
        "anbn: {} words, {} accepted, {} disagreements, {} failures: {}",
        report.checked,
        report.accepted,
        report.disagreements.len(),
        report.failures.len(),
        verdict(ok)
    )?;
    Ok(if all_ok { EXIT_OK } else { EXIT_NOT_FOUND })
}
