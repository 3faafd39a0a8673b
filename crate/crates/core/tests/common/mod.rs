#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::BTreeSet;
use workbench::lambda::{
    church_add, church_encode, church_succ, parse_lambda, LambdaTerm, VarName,
};
use workbench::lisp::Value;
use workbench::problems::Resolution;
use workbench::sexpr::{SExpr, Word};
use workbench::turing::{Clause, Machine, Move};

pub fn symbol() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-z+*/<>=!?_-][a-z0-9+*/<>=!?_-]{0,6}",
        Just("λ".to_string()),
        Just("x′".to_string()),
    ]
    .prop_filter("reserved words", |s| s != "t" && s != "nil")
}

pub fn word() -> impl Strategy<Value = Word> {
    prop_oneof![
        4 => symbol().prop_map(|s| Word::symbol(&s).expect("generated symbols are valid")),
        2 => any::<u64>().prop_map(Word::number),
        1 => proptest::collection::vec(any::<u32>(), 1..5).prop_map(|ds| Word::number(BigUint::new(ds))),
        1 => Just(Word::True),
        1 => Just(Word::Nil),
    ]
}

pub fn sexpr() -> impl Strategy<Value = SExpr> {
    word()
        .prop_map(SExpr::Atom)
        .prop_recursive(6, 64, 6, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, d)| workbench::sexpr::cons(a, d)),
                proptest::collection::vec(inner, 0..6).prop_map(SExpr::list),
            ]
        })
}

pub fn lambda_term(max_primes: u32) -> impl Strategy<Value = LambdaTerm> {
    (0..=max_primes)
        .prop_map(LambdaTerm::var)
        .prop_recursive(8, 48, 2, move |inner| {
            prop_oneof![
                (0..=max_primes, inner.clone())
                    .prop_map(|(p, b)| LambdaTerm::abs(VarName::new(p), b)),
                (inner.clone(), inner).prop_map(|(f, a)| LambdaTerm::app(f, a)),
            ]
        })
}

/// Closes a term by abstracting its free variables.
pub fn close(t: LambdaTerm) -> LambdaTerm {
    t.free_vars()
        .into_iter()
        .fold(t, |acc, v| LambdaTerm::abs(v, acc))
}

pub fn closed_lambda_term(max_primes: u32) -> impl Strategy<Value = LambdaTerm> {
    lambda_term(max_primes).prop_map(close)
}

fn term(text: &str) -> LambdaTerm {
    parse_lambda(text).unwrap_or_else(|e| panic!("corpus term {text}: {e}"))
}

const I: &str = "(λx x)";
const K: &str = "(λx (λx' x))";
const F: &str = "(λx (λx' x'))";
const S: &str = "(λx (λx' (λx'' ((x x'') (x' x'')))))";
const OMEGA_HALF: &str = "(λx (x x))";
const PAIR: &str = "(λx (λx' (λx'' ((x'' x) x'))))";
const NOT: &str = "(λx ((x (λx (λx' x'))) (λx (λx' x))))";
const AND: &str = "(λx (λx' ((x x') x)))";
const MUL: &str = "(λx (λx' (λx'' (x (x' x'')))))";
const TWICE: &str = "(λx (λx' (x (x x'))))";

fn ap(f: &str, a: &str) -> String {
    format!("({f} {a})")
}

fn ap2(f: &str, a: &str, b: &str) -> String {
    ap(&ap(f, a), b)
}

/// Fifty closed terms: combinator identities, booleans, pairs, Church
/// arithmetic, and a few whose argument diverges.
pub fn corpus() -> Vec<LambdaTerm> {
    let omega = ap(OMEGA_HALF, OMEGA_HALF);
    let skk = ap2(S, K, K);
    let fst = format!("(λx (x {K}))");
    let snd = format!("(λx (x {F}))");
    let texts = vec![
        ap(I, I),
        ap(I, K),
        ap2(K, I, K),
        ap2(K, K, I),
        ap(&skk, I),
        ap(&skk, K),
        ap2(S, K, I),
        ap(&ap2(S, K, S), F),
        ap(OMEGA_HALF, I),
        ap(OMEGA_HALF, K),
        ap(I, &ap(I, &ap(I, I))),
        ap(&ap(I, I), &ap(I, F)),
        ap2(F, &omega, I),
        ap2(K, I, &omega),
        ap(&format!("(λx {I})"), &omega),
        ap(NOT, K),
        ap(NOT, F),
        ap(NOT, &ap(NOT, K)),
        ap2(AND, K, K),
        ap2(AND, K, F),
        ap2(AND, F, K),
        ap(&fst, &ap2(PAIR, I, K)),
        ap(&snd, &ap2(PAIR, I, K)),
        ap(&fst, &ap2(PAIR, &ap(NOT, F), I)),
        ap2(TWICE, I, K),
        ap2(TWICE, K, I),
        ap2(TWICE, TWICE, I),
        format!("(λx ({I} x))"),
        format!("(λx (λx' (({K} x) x')))"),
        format!("(λx' ({OMEGA_HALF} (λx x')))"),
        ap("(λx (λx' (x x')))", I),
        ap2("(λx' (λx (x' x)))", K, I),
    ];
    let mut terms: Vec<LambdaTerm> = texts.iter().map(|t| term(t)).collect();

    let church = |n: usize| church_encode(n).to_string();
    for (n, m) in [(0, 0), (1, 0), (0, 2), (2, 2), (3, 1), (1, 4), (4, 3)] {
        terms.push(LambdaTerm::app(
            LambdaTerm::app(church_add(), church_encode(n)),
            church_encode(m),
        ));
    }
    for n in [0, 1, 3, 5] {
        terms.push(LambdaTerm::app(church_succ(), church_encode(n)));
    }
    for (n, m) in [(2, 3), (0, 4), (3, 3)] {
        terms.push(term(&ap2(MUL, &church(n), &church(m))));
    }
    terms.push(term(&ap(&church(2), &church(2))));
    terms.push(term(&ap(&church(3), &church(2))));
    terms.push(term(&ap2(&church(3), NOT, K)));
    terms.push(term(&ap2(&church(0), &format!("(λx {OMEGA_HALF})"), I)));
    assert_eq!(terms.len(), 50);
    terms
}

pub fn lisp_name(v: VarName) -> String {
    if v.primes == 0 {
        "x".to_string()
    } else {
        format!("x{}", v.primes)
    }
}

fn lambda_name(s: &str) -> Option<VarName> {
    let rest = s.strip_prefix('x')?;
    if rest.is_empty() {
        return Some(VarName::new(0));
    }
    if rest.starts_with('0') {
        return None;
    }
    rest.parse().ok().map(VarName::new)
}

/// `(λx M)` becomes `(lambda (x) M)`, `(M N)` stays an application, and
/// `x′′` is spelled `x2`.
pub fn to_lisp(t: &LambdaTerm) -> SExpr {
    match t {
        LambdaTerm::Var(v) => SExpr::sym(&lisp_name(*v)),
        LambdaTerm::Abs(v, b) => SExpr::list([
            SExpr::sym("lambda"),
            SExpr::list([SExpr::sym(&lisp_name(*v))]),
            to_lisp(b),
        ]),
        LambdaTerm::App(f, a) => SExpr::list([to_lisp(f), to_lisp(a)]),
    }
}

/// Reads a closure back as a closed lambda term by replacing each free
/// symbol of its body with the readback of its captured value.
pub fn readback(v: &Value) -> Option<LambdaTerm> {
    let Value::Closure(c) = v else { return None };
    let [param] = c.params.as_slice() else {
        return None;
    };
    let mut bound = BTreeSet::new();
    bound.insert(param.to_string());
    let body = readback_body(&c.body, &mut bound, &c.env)?;
    Some(LambdaTerm::abs(lambda_name(param)?, body))
}

fn readback_body(
    e: &SExpr,
    bound: &mut BTreeSet<String>,
    env: &workbench::lisp::Env,
) -> Option<LambdaTerm> {
    if let Some(s) = e.as_symbol() {
        if bound.contains(s) {
            return Some(LambdaTerm::Var(lambda_name(s)?));
        }
        return readback(&env.lookup(s)?);
    }
    let items = e.to_vec()?;
    match items.as_slice() {
        [head, params, body] if head.as_symbol() == Some("lambda") => {
            let params = params.to_vec()?;
            let [p] = params.as_slice() else { return None };
            let p = p.as_symbol()?.to_string();
            let fresh = bound.insert(p.clone());
            let b = readback_body(body, bound, env);
            if fresh {
                bound.remove(&p);
            }
            Some(LambdaTerm::abs(lambda_name(&p)?, b?))
        }
        [f, a] => Some(LambdaTerm::app(
            readback_body(f, bound, env)?,
            readback_body(a, bound, env)?,
        )),
        _ => None,
    }
}

fn small_datum() -> impl Strategy<Value = SExpr> {
    prop_oneof![
        (0u32..20).prop_map(SExpr::num),
        symbol().prop_map(|s| SExpr::sym(&s)),
    ]
}

pub fn resolution() -> impl Strategy<Value = Resolution> {
    let data = || proptest::collection::vec(small_datum(), 0..5);
    let leaf = prop_oneof![
        (sexpr(), data()).prop_map(|(key, solutions)| Resolution::Routine { key, solutions }),
        data().prop_map(|candidates| Resolution::Trial { candidates }),
        proptest::option::of(data()).prop_map(|domain| Resolution::Inverse { domain }),
    ];
    leaf.prop_recursive(3, 24, 3, |inner| {
        (sexpr(), sexpr(), proptest::collection::vec(inner, 0..3)).prop_map(
            |(transform, combiner, children)| Resolution::Analogy {
                transform,
                combiner,
                children,
            },
        )
    })
}

/// A deterministic machine over states `q0..q{n}` and symbols `_ 0 1`,
/// with each (state, symbol) cell either empty or holding one clause.
pub fn machine() -> impl Strategy<Value = Machine> {
    let symbols = ["_", "0", "1"];
    (1usize..4)
        .prop_flat_map(move |n| {
            let cell = proptest::option::of((0..n, 0usize..3, 0usize..3));
            (Just(n), proptest::collection::vec(cell, n * 3))
        })
        .prop_map(move |(n, cells)| {
            let states: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
            let mut clauses = Vec::new();
            for (i, cell) in cells.into_iter().enumerate() {
                if let Some((next, write, mv)) = cell {
                    clauses.push(Clause {
                        state: states[i / 3].clone(),
                        read: symbols[i % 3].to_string(),
                        next: states[next].clone(),
                        write: symbols[write].to_string(),
                        movement: [Move::Left, Move::Right, Move::Halt][mv],
                    });
                }
            }
            Machine::new(
                states,
                symbols.iter().map(|s| s.to_string()).collect(),
                "_".to_string(),
                clauses,
            )
            .expect("generated machines are valid")
        })
}

pub fn binary_input() -> impl Strategy<Value = Vec<String>> {
    proptest::collection::vec(
        prop_oneof![Just("0".to_string()), Just("1".to_string())],
        0..6,
    )
}
