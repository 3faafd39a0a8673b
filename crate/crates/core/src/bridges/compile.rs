//! Turing machine to Lisp compiler.
//!
//! The emitted program defines `tm-run`, a one-parameter function whose
//! parameter `state` is the single mutable binding. Inside it a recursive
//! `tm-loop` dispatches on `state` and on `(read)` with nested `cond`s; a
//! matching clause calls `tm-then` with `(write 's)`, `(set! state 'q)` and
//! `(move 'd)` as arguments, so the three effects happen in that order.
//! `tm-then` either stops on a halt move or loops again. The final form
//! calls `tm-run` on the start state and yields `halted` or `stuck`.

use crate::lisp::{EvalOutcome, Interpreter};
use crate::sexpr::{SExpr, Word, NIL};
use crate::turing::{Machine, Tape};
use std::collections::BTreeSet;
use std::fmt;

/// The operators a compiled program may rely on.
pub const REQUIRED_PRIMITIVES: [&str; 6] = ["cond", "set!", "eq?", "read", "write", "move"];

/// Binding forms and names the compiler introduces around the primitives.
pub const PLUMBING: [&str; 17] = [
    "quote",
    "define",
    "lambda",
    "tm-run",
    "tm-loop",
    "tm-then",
    "state",
    "defined-loop",
    "defined-then",
    "written",
    "entered",
    "moved",
    "halted",
    "stuck",
    "left",
    "right",
    "halt",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledProgram {
    pub forms: Vec<SExpr>,
}

impl CompiledProgram {
    /// Every symbol occurring anywhere in the program.
    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut todo: Vec<&SExpr> = self.forms.iter().collect();
        while let Some(e) = todo.pop() {
            match e {
                SExpr::Atom(Word::Symbol(s)) => {
                    out.insert(s.to_string());
                }
                SExpr::Atom(_) => {}
                SExpr::Pair(a, d) => {
                    todo.push(a);
                    todo.push(d);
                }
            }
        }
        out
    }

    /// Symbols outside the primitives, the plumbing and the machine's own
    /// state and symbol names. Empty for every program `compile_tm` emits.
    pub fn foreign_symbols(&self, m: &Machine) -> BTreeSet<String> {
        let allowed: BTreeSet<&str> = REQUIRED_PRIMITIVES
            .iter()
            .chain(PLUMBING.iter())
            .copied()
            .chain(m.states().iter().map(String::as_str))
            .chain(m.symbols().iter().map(String::as_str))
            .collect();
        self.symbols()
            .into_iter()
            .filter(|s| !allowed.contains(s.as_str()))
            .collect()
    }
}

impl fmt::Display for CompiledProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for form in &self.forms {
            writeln!(f, "{form}")?;
        }
        Ok(())
    }
}

fn sym(s: &str) -> SExpr {
    SExpr::sym(s)
}

/// Machine names are canonical atom tokens, so this cannot fail.
fn word(name: &str) -> SExpr {
    SExpr::Atom(Word::from_token(name).expect("machine names are atom tokens"))
}

fn quoted(name: &str) -> SExpr {
    SExpr::list([sym("quote"), word(name)])
}

fn call(op: &str, args: impl IntoIterator<Item = SExpr>) -> SExpr {
    let mut items = vec![sym(op)];
    items.extend(args);
    SExpr::list(items)
}

fn eq_test(lhs: SExpr, name: &str) -> SExpr {
    call("eq?", [lhs, quoted(name)])
}

fn fallback() -> SExpr {
    SExpr::list([SExpr::boolean(true), quoted("stuck")])
}

pub fn compile_tm(m: &Machine) -> CompiledProgram {
    let mut state_arms = Vec::new();
    for state in m.states() {
        let mut read_arms: Vec<SExpr> = m
            .clauses()
            .iter()
            .filter(|c| &c.state == state)
            .map(|c| {
                let action = call(
                    "tm-then",
                    [
                        call("write", [quoted(&c.write)]),
                        call("set!", [sym("state"), quoted(&c.next)]),
                        call("move", [quoted(c.movement.as_str())]),
                    ],
                );
                SExpr::list([eq_test(call("read", []), &c.read), action])
            })
            .collect();
        if read_arms.is_empty() {
            continue;
        }
        read_arms.push(fallback());
        state_arms.push(SExpr::list([
            eq_test(sym("state"), state),
            call("cond", read_arms),
        ]));
    }
    state_arms.push(fallback());

    let tm_loop = call(
        "define",
        [
            sym("tm-loop"),
            call("lambda", [NIL, call("cond", state_arms)]),
        ],
    );
    let tm_then = call(
        "define",
        [
            sym("tm-then"),
            call(
                "lambda",
                [
                    SExpr::list([sym("written"), sym("entered"), sym("moved")]),
                    call(
                        "cond",
                        [
                            SExpr::list([eq_test(sym("moved"), "halt"), quoted("halted")]),
                            SExpr::list([SExpr::boolean(true), call("tm-loop", [])]),
                        ],
                    ),
                ],
            ),
        ],
    );
    let body = SExpr::list([
        call(
            "lambda",
            [
                SExpr::list([sym("defined-loop"), sym("defined-then")]),
                call("tm-loop", []),
            ],
        ),
        tm_loop,
        tm_then,
    ]);
    let tm_run = call(
        "define",
        [
            sym("tm-run"),
            call("lambda", [SExpr::list([sym("state")]), body]),
        ],
    );
    let start = call("tm-run", [quoted(m.start_state())]);
    CompiledProgram {
        forms: vec![tm_run, start],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompiledOutcome {
    Halted,
    Stuck,
    FuelExhausted,
    /// The interpreter reported a fault; never expected for compiled code.
    Fault(String),
}

impl CompiledOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            CompiledOutcome::Halted => "halted",
            CompiledOutcome::Stuck => "stuck",
            CompiledOutcome::FuelExhausted => "fuel-exhausted",
            CompiledOutcome::Fault(_) => "fault",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompiledRun {
    pub outcome: CompiledOutcome,
    pub tape: Tape,
    pub steps: u64,
}

/// Runs a compiled program in a fresh interpreter with `tape` attached.
/// `fuel` is shared across all forms of the program.
pub fn run_compiled(program: &CompiledProgram, tape: Tape, fuel: u64) -> CompiledRun {
    let mut interp = Interpreter::new();
    interp.attach_tape(tape);
    let mut steps = 0;
    let mut outcome = CompiledOutcome::Stuck;
    for form in &program.forms {
        let out = interp.eval(form, fuel - steps);
        steps += out.steps();
        outcome = match out {
            EvalOutcome::Value { value, .. } => match value.as_datum().and_then(SExpr::as_symbol) {
                Some("halted") => CompiledOutcome::Halted,
                _ => CompiledOutcome::Stuck,
            },
            EvalOutcome::FuelExhausted { .. } => {
                outcome = CompiledOutcome::FuelExhausted;
                break;
            }
            EvalOutcome::Fault { error, .. } => {
                outcome = CompiledOutcome::Fault(error.to_string());
                break;
            }
        };
    }
    let tape = interp.take_tape().expect("tape stays attached");
    CompiledRun {
        outcome,
        tape,
        steps,
    }
}

/// Interpreter fuel granted per simulator step: a generous bound on the
/// dispatches one pass of `tm-loop` costs for machine `m`.
pub fn compiled_fuel_per_step(m: &Machine) -> u64 {
    64 * (m.states().len() + m.clauses().len() + 2) as u64
}

/// Every input of length at most `max_len` over the alphabet, shortest first.
pub fn input_words(alphabet: &[String], max_len: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for s in alphabet {
                let mut w = out[i].clone();
                w.push(s.clone());
                out.push(w);
            }
        }
        start = end;
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

/// Runs `m` directly and through `compile_tm` on every input of length at
/// most `max_len`, comparing outcome kind and final tape including the head.
pub fn compare_with_simulator(m: &Machine, max_len: usize, fuel: u64) -> EquivalenceReport {
    let program = compile_tm(m);
    let alphabet: Vec<String> = m.input_alphabet().map(str::to_string).collect();
    let compiled_fuel = fuel.saturating_mul(compiled_fuel_per_step(m));
    let mut report = EquivalenceReport::default();
    for input in input_words(&alphabet, max_len) {
        let tape = m
            .load(&input)
            .expect("input drawn from the machine's alphabet");
        let direct = m.run(tape.clone(), fuel);
        let compiled = run_compiled(&program, tape, compiled_fuel);
        report.checked += 1;
        if direct.kind() != compiled.outcome.kind() || *direct.tape() != compiled.tape {
            report.mismatches.push(format!(
                "[{}]: simulator {} with {:?}, compiled {} with {:?}",
                input.join(" "),
                direct.kind(),
                direct.tape(),
                compiled.outcome.kind(),
                compiled.tape
            ));
        }
    }
    report
}
