use super::{fixture, fixtures};
use crate::lambda::{church_add, church_decode, church_encode, LambdaTerm};
use crate::lisp::Interpreter;
use crate::sexpr::SExpr;
use crate::turing::RunOutcome;
use num_traits::ToPrimitive;

/// `add n m` on Church numerals, read back as an integer.
pub fn church_sum(n: usize, m: usize, fuel: u64) -> Option<usize> {
    let t = LambdaTerm::app(
        LambdaTerm::app(church_add(), church_encode(n)),
        church_encode(m),
    );
    church_decode(&t, fuel).ok().flatten()
}

/// The prelude's recursive `add`.
pub fn lisp_sum(n: usize, m: usize, fuel: u64) -> Option<usize> {
    let mut interp = Interpreter::with_prelude();
    let expr = SExpr::list([SExpr::sym("add"), SExpr::num(n), SExpr::num(m)]);
    interp
        .eval(&expr, fuel)
        .datum()?
        .as_word()?
        .as_number()?
        .to_usize()
}

/// The unary adder on `1ⁿ 0 1ᵐ`, counting the ones left on the tape.
pub fn turing_sum(n: usize, m: usize, fuel: u64) -> Option<usize> {
    let adder = fixture(fixtures::ADDER);
    let input: Vec<&str> = std::iter::repeat_n("1", n)
        .chain(["0"])
        .chain(std::iter::repeat_n("1", m))
        .collect();
    match adder.run(adder.load(&input).ok()?, fuel) {
        RunOutcome::Halted { tape, .. } => {
            let cells: Vec<&str> = tape.contents();
            cells.iter().all(|&c| c == "1").then_some(cells.len())
        }
        _ => None,
    }
}
