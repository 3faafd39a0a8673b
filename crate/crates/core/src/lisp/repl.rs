use super::{EvalOutcome, Interpreter};
use crate::sexpr::{self, ReadError, Reader};
use std::io::{self, BufRead, Write};

#[derive(Clone, Copy, Debug)]
pub struct ReplOptions {
    pub fuel_per_form: u64,
    /// Print `> ` before reading each line.
    pub prompt: bool,
}

impl Default for ReplOptions {
    fn default() -> Self {
        ReplOptions {
            fuel_per_form: super::DEFAULT_FUEL,
            prompt: true,
        }
    }
}

/// The one-line report for an outcome.
pub fn render(outcome: &EvalOutcome) -> String {
    match outcome {
        EvalOutcome::Value { value, .. } => value.to_string(),
        EvalOutcome::FuelExhausted { steps } => format!("fuel: exhausted after {steps} steps"),
        EvalOutcome::Fault { error, .. } => format!("error: {error}"),
    }
}

/// Reads forms line by line, evaluating each complete form in the
/// interpreter's top-level frame. A form may span several lines. Faults and
/// fuel exhaustion are reported and the loop carries on.
pub fn repl<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    interp: &mut Interpreter,
    options: ReplOptions,
) -> io::Result<()> {
    let mut pending = String::new();
    let mut lines = input.lines();
    loop {
        if options.prompt {
            write!(output, "> ")?;
            output.flush()?;
        }
        let Some(line) = lines.next() else { break };
        pending.push_str(&line?);
        pending.push('\n');

        let mut reader = Reader::new(&pending);
        let mut consumed = 0;
        while let Some(form) = reader.next_form() {
            match form {
                Ok(expr) => {
                    consumed = reader.offset();
                    let out = interp.eval(&expr, options.fuel_per_form);
                    writeln!(output, "{}", render(&out))?;
                }
                Err(e) if e.is_incomplete() => break,
                Err(e) => {
                    writeln!(output, "error: {e}")?;
                    consumed = pending.len();
                    break;
                }
            }
        }
        pending.drain(..consumed);
        if pending.trim().is_empty() {
            pending.clear();
        }
    }
    if options.prompt {
        writeln!(output)?;
    }
    if !pending.trim().is_empty() {
        if let Err(e) = sexpr::read_all(&pending) {
            writeln!(output, "error: {e}")?;
        }
    }
    Ok(())
}

/// Batch mode: parses the whole text first, then evaluates each form with
/// its own fuel budget.
pub fn run_program(
    interp: &mut Interpreter,
    text: &str,
    fuel_per_form: u64,
) -> Result<Vec<EvalOutcome>, ReadError> {
    interp.load(text, fuel_per_form)
}
