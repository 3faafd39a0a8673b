mod common;

use proptest::prelude::*;
use workbench::lambda::{alpha_equal, normalize, Strategy as Order};
use workbench::lisp::{EvalOutcome, Fault, Interpreter};
use workbench::sexpr::{read, read_all, SExpr};

const NAMES: [&str; 3] = ["a", "b", "c"];

/// `((lambda (name) body) 'value)`
fn bind(name: &str, value: &str, body: String) -> String {
    format!("((lambda ({name}) {body}) '{value})")
}

proptest! {
    /// A closure made under one chain of bindings and called under another
    /// sees the bindings of the first.
    #[test]
    fn lexical_scope(
        outer in proptest::collection::vec((0usize..3, 0u8..10), 0..3),
        inner in proptest::collection::vec((0usize..3, 0u8..10), 0..2),
        target in 0usize..3,
    ) {
        prop_assume!(outer.len() + inner.len() < 4);
        let var = NAMES[target];
        let mut call = "(f)".to_string();
        for (i, (n, v)) in inner.iter().enumerate().rev() {
            call = bind(NAMES[*n], &format!("inner{i}v{v}"), call);
        }
        let mut program = format!("((lambda (f) {call}) (lambda () {var}))");
        for (i, (n, v)) in outer.iter().enumerate().rev() {
            program = bind(NAMES[*n], &format!("outer{i}v{v}"), program);
        }
        let expected = outer
            .iter()
            .enumerate()
            .rev()
            .find(|(_, (n, _))| *n == target)
            .map(|(i, (_, v))| format!("outer{i}v{v}"));

        let mut interp = Interpreter::new();
        let out = interp.eval(&read(&program).unwrap(), 10_000);
        match expected {
            Some(value) => prop_assert_eq!(out.datum(), Some(&SExpr::sym(&value))),
            None => prop_assert_eq!(&out.fault().unwrap().fault, &Fault::Unbound(var.to_string())),
        }
    }

    #[test]
    fn fuel_is_monotone(a in 0u32..6, b in 0u32..6, op in 0usize..3, extra in 0u64..100) {
        let f = ["add", "mul", "double-equals-square"][op];
        let expr = if op == 2 { format!("({f} {a})") } else { format!("({f} {a} {b})") };
        let expr = read(&expr).unwrap();
        let mut interp = Interpreter::with_prelude();
        let full = interp.eval(&expr, 1_000_000);
        let EvalOutcome::Value { steps, .. } = &full else {
            return Err(TestCaseError::fail(format!("{full:?}")));
        };
        prop_assert_eq!(&interp.eval(&expr, steps + extra), &full);
        prop_assert!(interp.eval(&expr, steps - 1).is_fuel_exhausted());
    }

    #[test]
    fn reading_terminates_even_when_evaluation_would_not(depth in 0usize..50) {
        let text = format!("{}(define loop (lambda (x) (loop x))) (loop 0){}", "(quote ".repeat(depth), ")".repeat(depth));
        let forms = read_all(&text).unwrap();
        let mut interp = Interpreter::new();
        for f in &forms {
            let out = interp.eval(f, 10_000);
            prop_assert!(out.steps() <= 10_000);
        }
    }

    #[test]
    fn random_closed_terms_correspond(t in common::closed_lambda_term(2)) {
        let mut interp = Interpreter::new();
        let out = interp.eval(&common::to_lisp(&t), 5_000);
        let direct = normalize(&t, Order::CallByValue, 2_000);
        if let (Some(v), Some(nf)) = (out.value(), direct.normal_form()) {
            let back = common::readback(v).expect("closure reads back");
            let back_nf = normalize(&back, Order::CallByValue, 10_000);
            prop_assert!(alpha_equal(back_nf.normal_form().unwrap(), nf));
        }
    }
}

#[test]
fn corpus_beta_correspondence() {
    let mut checked = 0;
    for t in common::corpus() {
        let direct = normalize(&t, Order::CallByValue, 10_000);
        let Some(nf) = direct.normal_form() else {
            continue;
        };
        let mut interp = Interpreter::new();
        let out = interp.eval(&common::to_lisp(&t), 100_000);
        let v = out.value().unwrap_or_else(|| panic!("{t}: {out:?}"));
        let back = common::readback(v).unwrap_or_else(|| panic!("{t}: no readback of {v}"));
        let back_nf = normalize(&back, Order::CallByValue, 10_000);
        assert!(alpha_equal(back_nf.normal_form().unwrap(), nf), "{t}");
        checked += 1;
    }
    assert_eq!(checked, 47);
}

#[test]
fn looping_program_exhausts_fuel() {
    let mut interp = Interpreter::new();
    interp.eval(&read("(define loop (lambda (x) (loop x)))").unwrap(), 100);
    let out = interp.eval(&read("(loop 0)").unwrap(), 10_000);
    assert_eq!(out, EvalOutcome::FuelExhausted { steps: 10_000 });
}
