//! S-expressions: the word-or-pair trees shared by the Lisp interpreter,
//! the Turing machine compiler and the problem calculus.
//!
//! An [`SExpr`] is either an atom holding a [`Word`] or a pair of two
//! S-expressions. Lists are the usual right-nested chains of pairs ending
//! in `nil`.

mod reader;

pub use reader::{read, read_all, ReadError, ReadErrorKind, Reader, MAX_NESTING};

use num_bigint::BigUint;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Characters that can never appear inside a symbol.
const RESERVED_CHARS: &[char] = &['(', ')', '\'', '.', ';'];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Symbol(Arc<str>),
    Number(BigUint),
    True,
    Nil,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("empty token")]
    Empty,
    #[error("invalid character {ch:?} in token {token:?}")]
    InvalidChar { token: String, ch: char },
}

impl Word {
    /// Builds a symbol, refusing text that the reader would not produce
    /// as a symbol (numerals, `t`, `nil`, reserved characters).
    pub fn symbol(text: &str) -> Option<Word> {
        match Word::from_token(text) {
            Ok(w @ Word::Symbol(_)) => Some(w),
            _ => None,
        }
    }

    pub fn number(n: impl Into<BigUint>) -> Word {
        Word::Number(n.into())
    }

    pub fn boolean(b: bool) -> Word {
        if b {
            Word::True
        } else {
            Word::Nil
        }
    }

    /// Classifies a single token the way the reader does: decimal digits
    /// are numbers, `t` and `nil` are reserved, anything else is a symbol.
    pub fn from_token(token: &str) -> Result<Word, AtomError> {
        if token.is_empty() {
            return Err(AtomError::Empty);
        }
        if let Some(ch) = token
            .chars()
            .find(|c| c.is_whitespace() || RESERVED_CHARS.contains(c))
        {
            return Err(AtomError::InvalidChar {
                token: token.to_string(),
                ch,
            });
        }
        if token.bytes().all(|b| b.is_ascii_digit()) {
            // all-digit tokens always parse
            let n = token.parse::<BigUint>().expect("decimal digits");
            return Ok(Word::Number(n));
        }
        Ok(match token {
            "t" => Word::True,
            "nil" => Word::Nil,
            _ => Word::Symbol(Arc::from(token)),
        })
    }

    pub fn as_symbol(&self) -> Option<&str> {
        match self {
            Word::Symbol(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_number(&self) -> Option<&BigUint> {
        match self {
            Word::Number(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Symbol(s) => f.write_str(s),
            Word::Number(n) => write!(f, "{n}"),
            Word::True => f.write_str("t"),
            Word::Nil => f.write_str("nil"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SExpr {
    Atom(Word),
    Pair(Arc<SExpr>, Arc<SExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a pair: {0}")]
pub struct NotAPair(pub SExpr);

pub const NIL: SExpr = SExpr::Atom(Word::Nil);
pub const TRUE: SExpr = SExpr::Atom(Word::True);

impl SExpr {
    /// Symbol atom. Panics if `text` is not a valid symbol; meant for
    /// literals in code, use [`Word::symbol`] for untrusted text.
    pub fn sym(text: &str) -> SExpr {
        SExpr::Atom(Word::symbol(text).unwrap_or_else(|| panic!("invalid symbol {text:?}")))
    }

    pub fn num(n: impl Into<BigUint>) -> SExpr {
        SExpr::Atom(Word::number(n))
    }

    pub fn boolean(b: bool) -> SExpr {
        SExpr::Atom(Word::boolean(b))
    }

    /// Proper list of the given items.
    pub fn list<I>(items: I) -> SExpr
    where
        I: IntoIterator<Item = SExpr>,
        I::IntoIter: DoubleEndedIterator,
    {
        SExpr::list_with_tail(items, NIL)
    }

    pub fn list_with_tail<I>(items: I, tail: SExpr) -> SExpr
    where
        I: IntoIterator<Item = SExpr>,
        I::IntoIter: DoubleEndedIterator,
    {
        items
            .into_iter()
            .rev()
            .fold(tail, |acc, item| cons(item, acc))
    }

    pub fn is_nil(&self) -> bool {
        matches!(self, SExpr::Atom(Word::Nil))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, SExpr::Atom(_))
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            SExpr::Atom(w) => Some(w),
            SExpr::Pair(..) => None,
        }
    }

    pub fn as_symbol(&self) -> Option<&str> {
        self.as_word().and_then(Word::as_symbol)
    }

    pub fn as_pair(&self) -> Option<(&SExpr, &SExpr)> {
        match self {
            SExpr::Pair(a, d) => Some((a, d)),
            SExpr::Atom(_) => None,
        }
    }

    /// Elements of a proper list; `None` for improper lists and non-nil atoms.
    pub fn to_vec(&self) -> Option<Vec<SExpr>> {
        let mut out = Vec::new();
        let mut rest = self;
        loop {
            match rest {
                SExpr::Atom(Word::Nil) => return Some(out),
                SExpr::Atom(_) => return None,
                SExpr::Pair(a, d) => {
                    out.push(SExpr::clone(a));
                    rest = d;
                }
            }
        }
    }

    /// Visits every atom in the tree, left to right.
    pub fn atoms(&self) -> Vec<&Word> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                SExpr::Atom(w) => out.push(w),
                SExpr::Pair(a, d) => {
                    stack.push(d);
                    stack.push(a);
                }
            }
        }
        out
    }
}

impl From<Word> for SExpr {
    fn from(w: Word) -> Self {
        SExpr::Atom(w)
    }
}

pub fn cons(x: SExpr, y: SExpr) -> SExpr {
    SExpr::Pair(Arc::new(x), Arc::new(y))
}

pub fn car(x: &SExpr) -> Result<SExpr, NotAPair> {
    match x {
        SExpr::Pair(a, _) => Ok(SExpr::clone(a)),
        SExpr::Atom(_) => Err(NotAPair(x.clone())),
    }
}

pub fn cdr(x: &SExpr) -> Result<SExpr, NotAPair> {
    match x {
        SExpr::Pair(_, d) => Ok(SExpr::clone(d)),
        SExpr::Atom(_) => Err(NotAPair(x.clone())),
    }
}

/// `t` on words, `nil` on pairs.
pub fn atom_p(x: &SExpr) -> Word {
    Word::boolean(x.is_atom())
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(w) => write!(f, "{w}"),
            SExpr::Pair(head, tail) => {
                write!(f, "({head}")?;
                let mut rest: &SExpr = tail;
                loop {
                    match rest {
                        SExpr::Atom(Word::Nil) => break,
                        SExpr::Atom(w) => {
                            write!(f, " . {w}")?;
                            break;
                        }
                        SExpr::Pair(a, d) => {
                            write!(f, " {a}")?;
                            rest = d;
                        }
                    }
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text of an S-expression.
pub fn print(e: &SExpr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cons_builds_pairs() {
        let p = cons(SExpr::sym("a"), SExpr::sym("b"));
        assert_eq!(print(&p), "(a . b)");
        let nn = cons(NIL, NIL);
        assert!(!nn.is_nil());
        assert_eq!(print(&nn), "(nil)");
        let l = cons(SExpr::num(1u32), cons(SExpr::num(2u32), NIL));
        assert_eq!(print(&l), "(1 2)");
    }

    #[test]
    fn projections() {
        let p = cons(SExpr::sym("a"), SExpr::sym("b"));
        assert_eq!(car(&p).unwrap(), SExpr::sym("a"));
        assert_eq!(cdr(&p).unwrap(), SExpr::sym("b"));
        assert_eq!(atom_p(&SExpr::sym("x")), Word::True);
        assert_eq!(atom_p(&p), Word::Nil);
        let err = cdr(&SExpr::sym("a")).unwrap_err();
        assert_eq!(err.to_string(), "not a pair: a");
        assert!(car(&NIL).is_err());
    }

    #[test]
    fn token_classification() {
        assert_eq!(Word::from_token("42").unwrap(), Word::number(42u32));
        assert_eq!(Word::from_token("t").unwrap(), Word::True);
        assert_eq!(Word::from_token("nil").unwrap(), Word::Nil);
        assert_eq!(Word::from_token("1+").unwrap().as_symbol(), Some("1+"));
        assert!(Word::from_token("a.b").is_err());
        assert!(Word::from_token("").is_err());
        assert!(Word::symbol("nil").is_none());
        assert!(Word::symbol("12").is_none());
        assert!(Word::symbol("x y").is_none());
    }

    #[test]
    fn printer_forms() {
        let improper = SExpr::list_with_tail([SExpr::sym("a"), SExpr::sym("b")], SExpr::sym("c"));
        assert_eq!(print(&improper), "(a b . c)");
        let quoted = SExpr::list([SExpr::sym("quote"), SExpr::sym("x")]);
        assert_eq!(print(&quoted), "(quote x)");
        assert_eq!(print(&TRUE), "t");
    }

    #[test]
    fn big_numbers_print_exactly() {
        let n: BigUint = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(print(&SExpr::num(n)), "123456789012345678901234567890");
    }
}
