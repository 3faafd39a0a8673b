//! Problems as an unknown plus a condition, and the ways of resolving
//! them: a remembered answer (routine), testing candidates in order
//! (trial), partitioning a finite domain by the condition (inverse), and
//! splitting into sub-problems whose answers are recombined (analogy).
//!
//! Conditions, transforms and combiners are Lisp source. Each is
//! evaluated in a fresh interpreter with the prelude loaded, and every
//! single application runs under its own fuel budget.

mod codec;

use crate::lisp::{EvalError, EvalOutcome, Interpreter, Value};
use crate::sexpr::SExpr;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Problem {
    pub unknown: String,
    /// Source of a one-argument function returning `t` or `nil`.
    pub condition: SExpr,
    pub domain: Vec<SExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    /// The problem whose serialized form is `key` has these solutions.
    Routine { key: SExpr, solutions: Vec<SExpr> },
    /// Test candidates in order and keep the first that satisfies.
    Trial { candidates: Vec<SExpr> },
    /// Partition a domain by the condition; the problem's own domain when
    /// none is given.
    Inverse { domain: Option<Vec<SExpr>> },
    /// `transform` maps the problem datum to a list of sub-problem data,
    /// each resolved by the matching child; `combiner` receives one
    /// solution list per child and returns the combined list.
    Analogy {
        transform: SExpr,
        combiner: SExpr,
        children: Vec<Resolution>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Satisfied,
    Unsatisfied,
    FuelExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("fuel exhausted while {0}")]
    FuelExhausted(String),
    #[error("{0}")]
    Eval(EvalError),
    #[error("{what} did not evaluate to a function: {found}")]
    NotAFunction { what: &'static str, found: String },
    #[error("{what} returned {found}, expected a list")]
    NotAList { what: &'static str, found: String },
    #[error(
        "analogy has {children} children but the transform produced {subproblems} sub-problems"
    )]
    ChildCount { children: usize, subproblems: usize },
    #[error("malformed {what}: {found}")]
    Malformed { what: &'static str, found: String },
}

pub use codec::{
    deserialize_problem, deserialize_resolution, serialize_problem, serialize_resolution,
};

/// Evaluates Lisp source to a function in a fresh prelude interpreter.
fn function(
    source: &SExpr,
    what: &'static str,
    fuel: u64,
) -> Result<(Interpreter, Value), ProblemError> {
    let mut interp = Interpreter::with_prelude();
    match interp.eval(source, fuel) {
        EvalOutcome::Value { value, .. } if value.is_function() => Ok((interp, value)),
        EvalOutcome::Value { value, .. } => Err(ProblemError::NotAFunction {
            what,
            found: value.to_string(),
        }),
        EvalOutcome::FuelExhausted { .. } => Err(ProblemError::FuelExhausted(format!(
            "evaluating the {what}"
        ))),
        EvalOutcome::Fault { error, .. } => Err(ProblemError::Eval(error)),
    }
}

fn call(
    source: &SExpr,
    what: &'static str,
    args: Vec<SExpr>,
    fuel: u64,
) -> Result<Option<SExpr>, ProblemError> {
    let (mut interp, f) = function(source, what, fuel)?;
    let args = args.into_iter().map(Value::Datum).collect();
    match interp.apply(&f, args, fuel) {
        EvalOutcome::Value { value, .. } => match value {
            Value::Datum(d) => Ok(Some(d)),
            other => Err(ProblemError::NotAList {
                what,
                found: other.to_string(),
            }),
        },
        EvalOutcome::FuelExhausted { .. } => Ok(None),
        EvalOutcome::Fault { error, .. } => Err(ProblemError::Eval(error)),
    }
}

fn as_list(d: SExpr, what: &'static str) -> Result<Vec<SExpr>, ProblemError> {
    d.to_vec().ok_or_else(|| ProblemError::NotAList {
        what,
        found: d.to_string(),
    })
}

/// Applies the condition to `candidate`. Any non-`nil` datum counts as
/// satisfied.
pub fn check(p: &Problem, candidate: &SExpr, fuel: u64) -> Result<Check, ProblemError> {
    Ok(
        match call(&p.condition, "condition", vec![candidate.clone()], fuel)? {
            None => Check::FuelExhausted,
            Some(d) if d.is_nil() => Check::Unsatisfied,
            Some(_) => Check::Satisfied,
        },
    )
}

fn satisfies(p: &Problem, candidate: &SExpr, fuel: u64) -> Result<bool, ProblemError> {
    match check(p, candidate, fuel)? {
        Check::Satisfied => Ok(true),
        Check::Unsatisfied => Ok(false),
        Check::FuelExhausted => Err(ProblemError::FuelExhausted(format!("checking {candidate}"))),
    }
}

/// The stored solutions when `p` serializes to the routine's key.
pub fn solve_routine(key: &SExpr, solutions: &[SExpr], p: &Problem) -> Option<Vec<SExpr>> {
    (serialize_problem(p) == *key).then(|| solutions.to_vec())
}

/// The first satisfying candidate, like a `cond` over the candidates with
/// a final `(t nil)`.
pub fn solve_trial(
    candidates: &[SExpr],
    p: &Problem,
    fuel: u64,
) -> Result<Option<SExpr>, ProblemError> {
    for c in candidates {
        if satisfies(p, c, fuel)? {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// Splits `domain` into solutions and non-solutions, keeping its order.
pub fn partition(
    p: &Problem,
    domain: &[SExpr],
    fuel: u64,
) -> Result<(Vec<SExpr>, Vec<SExpr>), ProblemError> {
    let mut yes = Vec::new();
    let mut no = Vec::new();
    for c in domain {
        if satisfies(p, c, fuel)? {
            yes.push(c.clone());
        } else {
            no.push(c.clone());
        }
    }
    Ok((yes, no))
}

/// [`partition`] over the problem's own domain.
pub fn solve_inverse(p: &Problem, fuel: u64) -> Result<(Vec<SExpr>, Vec<SExpr>), ProblemError> {
    partition(p, &p.domain, fuel)
}

pub fn run_resolution(
    r: &Resolution,
    p: &Problem,
    fuel: u64,
) -> Result<Option<Vec<SExpr>>, ProblemError> {
    match r {
        Resolution::Routine { key, solutions } => Ok(solve_routine(key, solutions, p)),
        Resolution::Trial { candidates } => Ok(solve_trial(candidates, p, fuel)?.map(|s| vec![s])),
        Resolution::Inverse { domain } => {
            let domain = domain.as_deref().unwrap_or(&p.domain);
            Ok(Some(partition(p, domain, fuel)?.0))
        }
        Resolution::Analogy {
            transform,
            combiner,
            children,
        } => {
            let subs = call(transform, "transform", vec![serialize_problem(p)], fuel)?
                .ok_or_else(|| ProblemError::FuelExhausted("applying the transform".into()))?;
            let subs = as_list(subs, "transform")?;
            if subs.len() != children.len() {
                return Err(ProblemError::ChildCount {
                    children: children.len(),
                    subproblems: subs.len(),
                });
            }
            let mut partials = Vec::with_capacity(subs.len());
            for (datum, child) in subs.iter().zip(children) {
                let sub = deserialize_problem(datum)?;
                let found = run_resolution(child, &sub, fuel)?.unwrap_or_default();
                partials.push(SExpr::list(found));
            }
            let combined = call(combiner, "combiner", partials, fuel)?
                .ok_or_else(|| ProblemError::FuelExhausted("applying the combiner".into()))?;
            Ok(Some(as_list(combined, "combiner")?))
        }
    }
}
