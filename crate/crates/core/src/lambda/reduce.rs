use super::{LambdaTerm, VarName};
use std::fmt;
use std::str::FromStr;

/// Step budget used when none is given.
pub const DEFAULT_FUEL: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leftmost-outermost redex first.
    #[default]
    NormalOrder,
    /// Leftmost-innermost: operator and argument are reduced to normal form
    /// before the enclosing redex is contracted.
    CallByValue,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "normal" => Ok(Strategy::NormalOrder),
            "cbv" => Ok(Strategy::CallByValue),
            other => Err(format!(
                "unknown strategy {other:?} (expected normal or cbv)"
            )),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::NormalOrder => "normal",
            Strategy::CallByValue => "cbv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    Normalized { term: LambdaTerm, steps: u64 },
    FuelExhausted { partial: LambdaTerm, steps: u64 },
}

impl ReductionOutcome {
    pub fn steps(&self) -> u64 {
        match self {
            ReductionOutcome::Normalized { steps, .. }
            | ReductionOutcome::FuelExhausted { steps, .. } => *steps,
        }
    }

    pub fn term(&self) -> &LambdaTerm {
        match self {
            ReductionOutcome::Normalized { term, .. } => term,
            ReductionOutcome::FuelExhausted { partial, .. } => partial,
        }
    }

    pub fn normal_form(&self) -> Option<&LambdaTerm> {
        match self {
            ReductionOutcome::Normalized { term, .. } => Some(term),
            ReductionOutcome::FuelExhausted { .. } => None,
        }
    }
}

/// Equality up to consistent renaming of bound variables. Bound variables
/// are compared by binder distance, free variables by name.
pub fn alpha_equal(a: &LambdaTerm, b: &LambdaTerm) -> bool {
    fn go(
        a: &LambdaTerm,
        b: &LambdaTerm,
        scope_a: &mut Vec<VarName>,
        scope_b: &mut Vec<VarName>,
    ) -> bool {
        match (a, b) {
            (LambdaTerm::Var(x), LambdaTerm::Var(y)) => {
                let ix = scope_a.iter().rposition(|v| v == x);
                let iy = scope_b.iter().rposition(|v| v == y);
                match (ix, iy) {
                    (Some(i), Some(j)) => scope_a.len() - i == scope_b.len() - j,
                    (None, None) => x == y,
                    _ => false,
                }
            }
            (LambdaTerm::Abs(p, m), LambdaTerm::Abs(q, n)) => {
                scope_a.push(*p);
                scope_b.push(*q);
                let eq = go(m, n, scope_a, scope_b);
                scope_a.pop();
                scope_b.pop();
                eq
            }
            (LambdaTerm::App(f, x), LambdaTerm::App(g, y)) => {
                go(f, g, scope_a, scope_b) && go(x, y, scope_a, scope_b)
            }
            _ => false,
        }
    }
    go(a, b, &mut Vec::new(), &mut Vec::new())
}

/// Capture-avoiding substitution of `value` for the free occurrences of
/// `name` in `body`.
///
/// A binder that would capture a free variable of `value` is renamed to
/// the smallest prime count above every variable in the binder's scope,
/// in `value`, and `name` itself.
pub fn substitute(body: &LambdaTerm, name: VarName, value: &LambdaTerm) -> LambdaTerm {
    match body {
        LambdaTerm::Var(v) => {
            if *v == name {
                value.clone()
            } else {
                body.clone()
            }
        }
        LambdaTerm::App(f, a) => {
            LambdaTerm::app(substitute(f, name, value), substitute(a, name, value))
        }
        LambdaTerm::Abs(param, inner) => {
            if *param == name || !inner.is_free(name) {
                return body.clone();
            }
            if value.is_free(*param) {
                let top = [
                    inner.max_primes(),
                    value.max_primes(),
                    Some(name.primes),
                    Some(param.primes),
                ]
                .into_iter()
                .flatten()
                .max()
                .unwrap_or(0);
                let fresh = VarName::new(top + 1);
                let renamed = substitute(inner, *param, &LambdaTerm::Var(fresh));
                LambdaTerm::abs(fresh, substitute(&renamed, name, value))
            } else {
                LambdaTerm::abs(*param, substitute(inner, name, value))
            }
        }
    }
}

fn step_normal(t: &LambdaTerm) -> Option<LambdaTerm> {
    match t {
        LambdaTerm::Var(_) => None,
        LambdaTerm::Abs(p, body) => step_normal(body).map(|b| LambdaTerm::abs(*p, b)),
        LambdaTerm::App(f, a) => {
            if let LambdaTerm::Abs(p, body) = f.as_ref() {
                return Some(substitute(body, *p, a));
            }
            if let Some(f2) = step_normal(f) {
                return Some(LambdaTerm::app(f2, a.as_ref().clone()));
            }
            step_normal(a).map(|a2| LambdaTerm::app(f.as_ref().clone(), a2))
        }
    }
}

fn step_cbv(t: &LambdaTerm) -> Option<LambdaTerm> {
    match t {
        LambdaTerm::Var(_) => None,
        LambdaTerm::Abs(p, body) => step_cbv(body).map(|b| LambdaTerm::abs(*p, b)),
        LambdaTerm::App(f, a) => {
            if let Some(f2) = step_cbv(f) {
                return Some(LambdaTerm::app(f2, a.as_ref().clone()));
            }
            if let Some(a2) = step_cbv(a) {
                return Some(LambdaTerm::app(f.as_ref().clone(), a2));
            }
            match f.as_ref() {
                LambdaTerm::Abs(p, body) => Some(substitute(body, *p, a)),
                _ => None,
            }
        }
    }
}

/// Contracts the redex the strategy picks, or `None` when there is none.
pub fn beta_step(t: &LambdaTerm, strategy: Strategy) -> Option<LambdaTerm> {
    match strategy {
        Strategy::NormalOrder => step_normal(t),
        Strategy::CallByValue => step_cbv(t),
    }
}

pub fn normalize(t: &LambdaTerm, strategy: Strategy, fuel: u64) -> ReductionOutcome {
    let mut current = t.clone();
    let mut steps = 0;
    loop {
        match beta_step(&current, strategy) {
            None => {
                return ReductionOutcome::Normalized {
                    term: current,
                    steps,
                }
            }
            Some(_) if steps >= fuel => {
                return ReductionOutcome::FuelExhausted {
                    partial: current,
                    steps,
                }
            }
            Some(next) => {
                current = next;
                steps += 1;
            }
        }
    }
}
