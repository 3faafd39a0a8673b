//! Untyped lambda calculus over the primed-variable alphabet `x, x', x'', …`.
//!
//! Terms follow the inductive definition: a variable, an abstraction
//! `(λx M)` or an application `(M N)`. The concrete syntax is the
//! six-terminal context-free language accepted by [`parse_lambda`].

mod church;
mod parse;
mod reduce;

pub use church::{church_add, church_decode, church_encode, church_succ, y_combinator};
pub use parse::{parse_lambda, LambdaParseError, MAX_DEPTH};
pub use reduce::{
    alpha_equal, beta_step, normalize, substitute, ReductionOutcome, Strategy, DEFAULT_FUEL,
};

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// A variable: the letter `x` followed by `primes` prime marks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarName {
    pub primes: u32,
}

impl VarName {
    pub const fn new(primes: u32) -> Self {
        VarName { primes }
    }

    pub fn primed(self) -> Self {
        VarName::new(self.primes + 1)
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("x")?;
        for _ in 0..self.primes {
            f.write_str("'")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LambdaTerm {
    Var(VarName),
    Abs(VarName, Box<LambdaTerm>),
    App(Box<LambdaTerm>, Box<LambdaTerm>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("term is not closed: free variable {0}")]
    OpenTerm(VarName),
}

impl LambdaTerm {
    pub fn var(primes: u32) -> Self {
        LambdaTerm::Var(VarName::new(primes))
    }

    pub fn abs(param: VarName, body: LambdaTerm) -> Self {
        LambdaTerm::Abs(param, Box::new(body))
    }

    pub fn app(f: LambdaTerm, a: LambdaTerm) -> Self {
        LambdaTerm::App(Box::new(f), Box::new(a))
    }

    /// `(λx x)`, the projection U₁¹.
    pub fn identity() -> Self {
        LambdaTerm::abs(VarName::new(0), LambdaTerm::var(0))
    }

    /// `((λx (x x)) (λx (x x)))`.
    pub fn omega() -> Self {
        let half = LambdaTerm::abs(
            VarName::new(0),
            LambdaTerm::app(LambdaTerm::var(0), LambdaTerm::var(0)),
        );
        LambdaTerm::app(half.clone(), half)
    }

    pub fn free_vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<VarName>, out: &mut BTreeSet<VarName>) {
        match self {
            LambdaTerm::Var(v) => {
                if !bound.contains(v) {
                    out.insert(*v);
                }
            }
            LambdaTerm::Abs(p, body) => {
                bound.push(*p);
                body.collect_free(bound, out);
                bound.pop();
            }
            LambdaTerm::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
        }
    }

    pub fn is_free(&self, name: VarName) -> bool {
        match self {
            LambdaTerm::Var(v) => *v == name,
            LambdaTerm::Abs(p, body) => *p != name && body.is_free(name),
            LambdaTerm::App(f, a) => f.is_free(name) || a.is_free(name),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Largest prime count of any variable occurrence, bound or free.
    pub fn max_primes(&self) -> Option<u32> {
        match self {
            LambdaTerm::Var(v) => Some(v.primes),
            LambdaTerm::Abs(p, body) => {
                Some(body.max_primes().map_or(p.primes, |m| m.max(p.primes)))
            }
            LambdaTerm::App(f, a) => f.max_primes().max(a.max_primes()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            LambdaTerm::Var(_) => 1,
            LambdaTerm::Abs(_, body) => 1 + body.size(),
            LambdaTerm::App(f, a) => 1 + f.size() + a.size(),
        }
    }
}

impl fmt::Display for LambdaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaTerm::Var(v) => write!(f, "{v}"),
            LambdaTerm::Abs(p, body) => write!(f, "(λ{p} {body})"),
            LambdaTerm::App(func, arg) => write!(f, "({func} {arg})"),
        }
    }
}

/// Canonical single-space, fully parenthesized text.
pub fn print_lambda(t: &LambdaTerm) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonically() {
        assert_eq!(print_lambda(&LambdaTerm::identity()), "(λx x)");
        let t = LambdaTerm::app(LambdaTerm::identity(), LambdaTerm::var(1));
        assert_eq!(print_lambda(&t), "((λx x) x')");
        assert_eq!(print_lambda(&LambdaTerm::var(3)), "x'''");
    }

    #[test]
    fn free_variables() {
        let t = LambdaTerm::abs(
            VarName::new(0),
            LambdaTerm::app(LambdaTerm::var(0), LambdaTerm::var(2)),
        );
        assert_eq!(
            t.free_vars().into_iter().collect::<Vec<_>>(),
            vec![VarName::new(2)]
        );
        assert!(!t.is_closed());
        assert!(LambdaTerm::omega().is_closed());
        assert_eq!(t.max_primes(), Some(2));
    }
}
