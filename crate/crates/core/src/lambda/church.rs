//! Church numerals and a few standard combinators, spelled with primed
//! variables.

use super::{normalize, LambdaError, LambdaTerm, ReductionOutcome, Strategy, VarName};

fn v(primes: u32) -> LambdaTerm {
    LambdaTerm::var(primes)
}

fn lam(primes: u32, body: LambdaTerm) -> LambdaTerm {
    LambdaTerm::abs(VarName::new(primes), body)
}

fn ap(f: LambdaTerm, a: LambdaTerm) -> LambdaTerm {
    LambdaTerm::app(f, a)
}

/// `λf λa fⁿ(a)` with `f = x`, `a = x'`.
pub fn church_encode(n: usize) -> LambdaTerm {
    let mut body = v(1);
    for _ in 0..n {
        body = ap(v(0), body);
    }
    lam(0, lam(1, body))
}

/// Applies `t` to two fresh free variables, normalizes in normal order and
/// counts the applications of the first around the second.
///
/// `Ok(None)` when fuel runs out or the normal form is not `fⁿ(a)`.
pub fn church_decode(t: &LambdaTerm, fuel: u64) -> Result<Option<usize>, LambdaError> {
    if let Some(free) = t.free_vars().into_iter().next() {
        return Err(LambdaError::OpenTerm(free));
    }
    let top = t.max_primes().unwrap_or(0);
    let f = VarName::new(top + 1);
    let a = VarName::new(top + 2);
    let probe = ap(ap(t.clone(), LambdaTerm::Var(f)), LambdaTerm::Var(a));
    let ReductionOutcome::Normalized { term, .. } = normalize(&probe, Strategy::NormalOrder, fuel)
    else {
        return Ok(None);
    };
    let mut count = 0;
    let mut rest = &term;
    loop {
        match rest {
            LambdaTerm::Var(x) if *x == a => return Ok(Some(count)),
            LambdaTerm::App(g, inner) if **g == LambdaTerm::Var(f) => {
                count += 1;
                rest = inner;
            }
            _ => return Ok(None),
        }
    }
}

/// `λn λf λa (f ((n f) a))`
pub fn church_succ() -> LambdaTerm {
    lam(0, lam(1, lam(2, ap(v(1), ap(ap(v(0), v(1)), v(2))))))
}

/// `λm λn λf λa ((m f) ((n f) a))`
pub fn church_add() -> LambdaTerm {
    lam(
        0,
        lam(
            1,
            lam(2, lam(3, ap(ap(v(0), v(2)), ap(ap(v(1), v(2)), v(3))))),
        ),
    )
}

/// `λf ((λx (f (x x))) (λx (f (x x))))`
pub fn y_combinator() -> LambdaTerm {
    let half = lam(1, ap(v(0), ap(v(1), v(1))));
    lam(0, ap(half.clone(), half))
}
