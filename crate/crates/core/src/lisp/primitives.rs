use super::{Fault, Primitive, Value};
use crate::sexpr::{self, SExpr, Word};
use crate::turing::{Move, Tape};
use num_traits::{One, Zero};

fn prim_fault(p: Primitive, message: impl Into<String>) -> Fault {
    Fault::Primitive {
        name: p.name(),
        message: message.into(),
    }
}

fn datum(p: Primitive, v: &Value) -> Result<SExpr, Fault> {
    v.as_datum()
        .cloned()
        .ok_or_else(|| prim_fault(p, format!("expected data, got {v}")))
}

fn word(p: Primitive, v: &Value) -> Result<Word, Fault> {
    match v {
        Value::Datum(SExpr::Atom(w)) => Ok(w.clone()),
        other => Err(prim_fault(p, format!("expected a word, got {other}"))),
    }
}

fn tape(p: Primitive, tape: &mut Option<Tape>) -> Result<&mut Tape, Fault> {
    tape.as_mut()
        .ok_or_else(|| prim_fault(p, "no tape attached"))
}

/// Runs a primitive on already evaluated arguments. Arity is checked by
/// the caller.
pub(super) fn call(
    p: Primitive,
    args: &[Value],
    attached: &mut Option<Tape>,
) -> Result<Value, Fault> {
    let out = match p {
        Primitive::Cons => sexpr::cons(datum(p, &args[0])?, datum(p, &args[1])?),
        Primitive::Car => {
            sexpr::car(&datum(p, &args[0])?).map_err(|e| prim_fault(p, e.to_string()))?
        }
        Primitive::Cdr => {
            sexpr::cdr(&datum(p, &args[0])?).map_err(|e| prim_fault(p, e.to_string()))?
        }
        Primitive::AtomP => {
            let is_pair = matches!(&args[0], Value::Datum(SExpr::Pair(..)));
            SExpr::boolean(!is_pair)
        }
        Primitive::EqP => {
            let same = match (&args[0], &args[1]) {
                (Value::Datum(SExpr::Atom(a)), Value::Datum(SExpr::Atom(b))) => a == b,
                _ => false,
            };
            SExpr::boolean(same)
        }
        Primitive::Succ => match word(p, &args[0])? {
            Word::Number(n) => SExpr::num(n + 1u32),
            other => return Err(prim_fault(p, format!("not a number: {other}"))),
        },
        Primitive::Pred => match word(p, &args[0])? {
            Word::Number(n) if n.is_zero() => SExpr::num(n),
            Word::Number(n) => SExpr::num(n - num_bigint::BigUint::one()),
            other => return Err(prim_fault(p, format!("not a number: {other}"))),
        },
        Primitive::NumberP => SExpr::boolean(matches!(
            &args[0],
            Value::Datum(SExpr::Atom(Word::Number(_)))
        )),
        Primitive::Read => {
            let t = tape(p, attached)?;
            let w = Word::from_token(t.read())
                .map_err(|e| prim_fault(p, format!("unreadable tape symbol: {e}")))?;
            SExpr::Atom(w)
        }
        Primitive::Write => {
            let w = word(p, &args[0])?;
            tape(p, attached)?.write(&w.to_string());
            SExpr::Atom(w)
        }
        Primitive::Move => {
            let w = word(p, &args[0])?;
            let dir = w
                .as_symbol()
                .and_then(Move::from_token)
                .ok_or_else(|| prim_fault(p, format!("expected left, right or halt, got {w}")))?;
            tape(p, attached)?.shift(dir);
            SExpr::Atom(w)
        }
    };
    Ok(Value::Datum(out))
}
