//! A minimal Lisp: self-evaluating numbers, `t` and `nil`; `quote`;
//! lexically scoped variables in chained frames; the special forms
//! `define`, `set!`, `lambda` and `cond`; call-by-value application with
//! positional parameters; and a handful of primitives including tape
//! access (`read`, `write`, `move`).
//!
//! Every evaluation runs under a fuel budget, so a program that never
//! finishes comes back as [`EvalOutcome::FuelExhausted`].

mod eval;
mod primitives;
mod repl;
mod value;

pub use eval::RESERVED;
pub use repl::{render, repl, run_program, ReplOptions};
pub use value::{BindingKind, Closure, Env, Primitive, SetError, Value};

use crate::sexpr::{self, SExpr};
use crate::turing::Tape;
use thiserror::Error;

/// Fuel used when none is given.
pub const DEFAULT_FUEL: u64 = 10_000;

/// Arithmetic, list helpers and the `2x = x²` condition.
pub const PRELUDE: &str = include_str!("../../assets/prelude.lisp");
/// The aⁿbⁿ recognizer.
pub const ANBN: &str = include_str!("../../assets/anbn.lisp");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Fault {
    #[error("unbound symbol {0}")]
    Unbound(String),
    #[error("{0} is already defined in this frame")]
    Redefinition(String),
    #[error("{0} cannot be modified")]
    Immutable(String),
    #[error("set! of unbound symbol {0}")]
    SetUnbound(String),
    #[error("{0} is a reserved word")]
    Reserved(String),
    #[error("not a function: {0}")]
    NotAFunction(String),
    #[error("{name} expects {expected} argument(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("malformed {0}")]
    Malformed(&'static str),
    #[error("{name}: {message}")]
    Primitive { name: &'static str, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{fault} in {expr}")]
pub struct EvalError {
    pub fault: Fault,
    /// The expression being evaluated when the fault happened.
    pub expr: SExpr,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvalOutcome {
    Value { value: Value, steps: u64 },
    FuelExhausted { steps: u64 },
    Fault { error: EvalError, steps: u64 },
}

impl EvalOutcome {
    pub fn steps(&self) -> u64 {
        match self {
            EvalOutcome::Value { steps, .. }
            | EvalOutcome::FuelExhausted { steps }
            | EvalOutcome::Fault { steps, .. } => *steps,
        }
    }

    pub fn value(&self) -> Option<&Value> {
        match self {
            EvalOutcome::Value { value, .. } => Some(value),
            _ => None,
        }
    }

    /// The value as plain data, if the evaluation produced data.
    pub fn datum(&self) -> Option<&SExpr> {
        self.value().and_then(Value::as_datum)
    }

    pub fn is_fuel_exhausted(&self) -> bool {
        matches!(self, EvalOutcome::FuelExhausted { .. })
    }

    pub fn fault(&self) -> Option<&EvalError> {
        match self {
            EvalOutcome::Fault { error, .. } => Some(error),
            _ => None,
        }
    }
}

/// One interpreter instance: a frame of primitives, optionally a prelude
/// frame, a top-level frame for user definitions, and an optional tape.
pub struct Interpreter {
    primitives: Env,
    top: Env,
    tape: Option<Tape>,
}

impl Default for Interpreter {
    fn default() -> Self {
        Interpreter::new()
    }
}

impl Interpreter {
    /// Primitives only.
    pub fn new() -> Self {
        let primitives = Env::empty();
        for p in Primitive::ALL {
            primitives.bind(
                p.name().into(),
                Value::Primitive(p),
                BindingKind::Definition,
            );
        }
        let top = primitives.extend();
        Interpreter {
            primitives,
            top,
            tape: None,
        }
    }

    /// Primitives plus the bundled prelude, in its own frame so user code
    /// may shadow prelude names.
    pub fn with_prelude() -> Self {
        let mut interp = Interpreter::new();
        let prelude = interp.primitives.extend();
        for text in [PRELUDE, ANBN] {
            let forms = sexpr::read_all(text).expect("bundled prelude parses");
            for form in forms {
                let out = interp.eval_in(&form, &prelude, u64::MAX);
                assert!(out.value().is_some(), "prelude form {form} failed: {out:?}");
            }
        }
        interp.top = prelude.extend();
        interp
    }

    pub fn global_env(&self) -> &Env {
        &self.top
    }

    pub fn attach_tape(&mut self, tape: Tape) {
        self.tape = Some(tape);
    }

    pub fn tape(&self) -> Option<&Tape> {
        self.tape.as_ref()
    }

    pub fn take_tape(&mut self) -> Option<Tape> {
        self.tape.take()
    }

    /// Introduces a `set!`-modifiable variable in the top-level frame.
    pub fn bind_mutable(&mut self, name: &str, value: Value) -> Result<(), Fault> {
        if self.top.defines_locally(name) {
            return Err(Fault::Redefinition(name.to_string()));
        }
        self.top.bind(name.into(), value, BindingKind::Mutable);
        Ok(())
    }

    pub fn eval(&mut self, expr: &SExpr, fuel: u64) -> EvalOutcome {
        let env = self.top.clone();
        self.eval_in(expr, &env, fuel)
    }

    pub fn eval_in(&mut self, expr: &SExpr, env: &Env, fuel: u64) -> EvalOutcome {
        let mut m = eval::Machine {
            tape: &mut self.tape,
            fuel,
            steps: 0,
        };
        m.eval(expr.clone(), env.clone())
    }

    /// Applies a function value to evaluated arguments. Applying a closure
    /// evaluates its body in a fresh parameter frame, which costs fuel.
    pub fn apply(&mut self, func: &Value, args: Vec<Value>, fuel: u64) -> EvalOutcome {
        let form = SExpr::sym("apply");
        let mut m = eval::Machine {
            tape: &mut self.tape,
            fuel,
            steps: 0,
        };
        m.apply(func.clone(), args, &form)
    }

    /// Evaluates each form of `text` in order, continuing past faults.
    pub fn load(&mut self, text: &str, fuel: u64) -> Result<Vec<EvalOutcome>, sexpr::ReadError> {
        let forms = sexpr::read_all(text)?;
        Ok(forms.iter().map(|f| self.eval(f, fuel)).collect())
    }
}
