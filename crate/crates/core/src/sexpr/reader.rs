//! S-expression reader.
//!
//! The reader is a single left-to-right scan with an explicit stack of open
//! lists, so it terminates on every input: each iteration consumes at least
//! one byte or returns.

use super::{SExpr, Word, NIL};
use std::fmt;
use thiserror::Error;

/// Deepest paren/quote nesting the reader accepts.
pub const MAX_NESTING: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReadErrorKind {
    EmptyInput,
    UnclosedParen,
    UnexpectedCloseParen,
    TrailingGarbage,
    MalformedDot,
    DanglingQuote,
    InvalidToken(String),
    TooDeep,
}

impl fmt::Display for ReadErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadErrorKind::EmptyInput => f.write_str("empty input"),
            ReadErrorKind::UnclosedParen => f.write_str("unclosed '('"),
            ReadErrorKind::UnexpectedCloseParen => f.write_str("unexpected ')'"),
            ReadErrorKind::TrailingGarbage => f.write_str("trailing input after expression"),
            ReadErrorKind::MalformedDot => f.write_str("malformed dotted pair"),
            ReadErrorKind::DanglingQuote => f.write_str("quote without an expression"),
            ReadErrorKind::InvalidToken(t) => write!(f, "invalid token {t:?}"),
            ReadErrorKind::TooDeep => write!(f, "nesting deeper than {MAX_NESTING}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at line {line}, column {column}")]
pub struct ReadError {
    pub kind: ReadErrorKind,
    /// Byte offset into the input.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl ReadError {
    fn new(text: &str, offset: usize, kind: ReadErrorKind) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ReadError {
            kind,
            offset,
            line,
            column,
        }
    }

    /// True when more input could complete the expression (REPL continuation).
    pub fn is_incomplete(&self) -> bool {
        matches!(
            self.kind,
            ReadErrorKind::UnclosedParen | ReadErrorKind::DanglingQuote
        )
    }
}

enum Tail {
    None,
    AfterDot,
    Have(SExpr),
}

enum Open {
    List {
        start: usize,
        items: Vec<SExpr>,
        tail: Tail,
    },
    Quote {
        start: usize,
    },
}

/// Reads successive top-level forms from a string.
pub struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

fn is_delimiter(b: u8) -> bool {
    b.is_ascii_whitespace() || matches!(b, b'(' | b')' | b'\'' | b';')
}

impl<'a> Reader<'a> {
    pub fn new(text: &'a str) -> Self {
        Reader { text, pos: 0 }
    }

    /// Byte offset of the next unread character.
    pub fn offset(&self) -> usize {
        self.pos
    }

    fn err(&self, offset: usize, kind: ReadErrorKind) -> ReadError {
        ReadError::new(self.text, offset, kind)
    }

    fn skip_blank(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() {
            let b = bytes[self.pos];
            if b == b';' {
                while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if !b.is_ascii() {
                // Unicode whitespace is a separator too.
                let ch = self.text[self.pos..].chars().next().expect("char boundary");
                if ch.is_whitespace() {
                    self.pos += ch.len_utf8();
                } else {
                    break;
                }
            } else {
                break;
            }
        }
    }

    fn token_end(&self) -> usize {
        let mut end = self.pos;
        for (i, ch) in self.text[self.pos..].char_indices() {
            if ch.is_ascii() && is_delimiter(ch as u8) || ch.is_whitespace() {
                return self.pos + i;
            }
            end = self.pos + i + ch.len_utf8();
        }
        end
    }

    /// True when only whitespace and comments remain.
    pub fn at_end(&mut self) -> bool {
        self.skip_blank();
        self.pos >= self.text.len()
    }

    /// Next complete form, or `None` at end of input.
    pub fn next_form(&mut self) -> Option<Result<SExpr, ReadError>> {
        if self.at_end() {
            return None;
        }
        Some(self.parse_form())
    }

    fn parse_form(&mut self) -> Result<SExpr, ReadError> {
        let mut stack: Vec<Open> = Vec::new();
        loop {
            self.skip_blank();
            let start = self.pos;
            let Some(&b) = self.text.as_bytes().get(self.pos) else {
                return Err(match stack.last() {
                    Some(Open::Quote { start }) => self.err(*start, ReadErrorKind::DanglingQuote),
                    Some(Open::List { start, .. }) => {
                        self.err(*start, ReadErrorKind::UnclosedParen)
                    }
                    None => self.err(start, ReadErrorKind::EmptyInput),
                });
            };
            let datum = match b {
                b'(' => {
                    self.pos += 1;
                    if stack.len() >= MAX_NESTING {
                        return Err(self.err(start, ReadErrorKind::TooDeep));
                    }
                    stack.push(Open::List {
                        start,
                        items: Vec::new(),
                        tail: Tail::None,
                    });
                    continue;
                }
                b'\'' => {
                    self.pos += 1;
                    if stack.len() >= MAX_NESTING {
                        return Err(self.err(start, ReadErrorKind::TooDeep));
                    }
                    stack.push(Open::Quote { start });
                    continue;
                }
                b')' => {
                    self.pos += 1;
                    match stack.pop() {
                        Some(Open::List { items, tail, .. }) => match tail {
                            Tail::None => SExpr::list_with_tail(items, NIL),
                            Tail::Have(t) => SExpr::list_with_tail(items, t),
                            Tail::AfterDot => {
                                return Err(self.err(start, ReadErrorKind::MalformedDot))
                            }
                        },
                        Some(Open::Quote { start }) => {
                            return Err(self.err(start, ReadErrorKind::DanglingQuote))
                        }
                        None => return Err(self.err(start, ReadErrorKind::UnexpectedCloseParen)),
                    }
                }
                _ => {
                    let end = self.token_end();
                    let token = &self.text[start..end];
                    self.pos = end;
                    if token == "." {
                        match stack.last_mut() {
                            Some(Open::List { items, tail, .. })
                                if !items.is_empty() && matches!(tail, Tail::None) =>
                            {
                                *tail = Tail::AfterDot;
                                continue;
                            }
                            _ => return Err(self.err(start, ReadErrorKind::MalformedDot)),
                        }
                    }
                    match Word::from_token(token) {
                        Ok(w) => SExpr::Atom(w),
                        Err(_) => {
                            return Err(
                                self.err(start, ReadErrorKind::InvalidToken(token.to_string()))
                            )
                        }
                    }
                }
            };
            // Hand the finished datum to whatever is waiting for it.
            let mut datum = datum;
            loop {
                match stack.last_mut() {
                    None => return Ok(datum),
                    Some(Open::Quote { .. }) => {
                        stack.pop();
                        datum = SExpr::list([SExpr::sym("quote"), datum]);
                    }
                    Some(Open::List { items, tail, .. }) => {
                        match tail {
                            Tail::None => items.push(datum),
                            Tail::AfterDot => *tail = Tail::Have(datum),
                            Tail::Have(_) => {
                                return Err(self.err(start, ReadErrorKind::MalformedDot))
                            }
                        }
                        break;
                    }
                }
            }
        }
    }
}

/// Reads exactly one expression, optionally surrounded by whitespace and
/// comments.
pub fn read(text: &str) -> Result<SExpr, ReadError> {
    let mut reader = Reader::new(text);
    let form = match reader.next_form() {
        Some(r) => r?,
        None => return Err(ReadError::new(text, text.len(), ReadErrorKind::EmptyInput)),
    };
    if !reader.at_end() {
        return Err(ReadError::new(
            text,
            reader.offset(),
            ReadErrorKind::TrailingGarbage,
        ));
    }
    Ok(form)
}

/// Reads every form in `text`. Stops at the first error.
pub fn read_all(text: &str) -> Result<Vec<SExpr>, ReadError> {
    let mut reader = Reader::new(text);
    let mut out = Vec::new();
    while let Some(form) = reader.next_form() {
        out.push(form?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sexpr::{cons, print};

    fn kind(text: &str) -> ReadErrorKind {
        read(text).unwrap_err().kind
    }

    #[test]
    fn reads_cond_program() {
        let e = read("(cond ((f 2) 2) (t nil))").unwrap();
        let expected = SExpr::list([
            SExpr::sym("cond"),
            SExpr::list([
                SExpr::list([SExpr::sym("f"), SExpr::num(2u32)]),
                SExpr::num(2u32),
            ]),
            SExpr::list([SExpr::boolean(true), NIL]),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn dotted_pair_and_quote() {
        assert_eq!(
            read("(a . b)").unwrap(),
            cons(SExpr::sym("a"), SExpr::sym("b"))
        );
        assert_eq!(
            print(&read("'x").unwrap()),
            print(&read("(quote x)").unwrap())
        );
        assert_eq!(print(&read("''x").unwrap()), "(quote (quote x))");
        assert_eq!(print(&read("(a b . (c))").unwrap()), "(a b c)");
        assert_eq!(read("()").unwrap(), NIL);
    }

    #[test]
    fn comments_and_whitespace() {
        let e = read("  ; leading\n (a ; inner\n b)  ; trailing").unwrap();
        assert_eq!(print(&e), "(a b)");
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind(""), ReadErrorKind::EmptyInput);
        assert_eq!(kind("  ; only a comment"), ReadErrorKind::EmptyInput);
        assert_eq!(kind("(a b"), ReadErrorKind::UnclosedParen);
        assert_eq!(kind(")"), ReadErrorKind::UnexpectedCloseParen);
        assert_eq!(kind("a b"), ReadErrorKind::TrailingGarbage);
        assert_eq!(kind("(a b))"), ReadErrorKind::TrailingGarbage);
        assert_eq!(kind("(. a)"), ReadErrorKind::MalformedDot);
        assert_eq!(kind("(a .)"), ReadErrorKind::MalformedDot);
        assert_eq!(kind("(a . b c)"), ReadErrorKind::MalformedDot);
        assert_eq!(kind("(a . . b)"), ReadErrorKind::MalformedDot);
        assert_eq!(kind("."), ReadErrorKind::MalformedDot);
        assert_eq!(kind("'"), ReadErrorKind::DanglingQuote);
        assert_eq!(kind("('"), ReadErrorKind::DanglingQuote);
        assert_eq!(kind("(')"), ReadErrorKind::DanglingQuote);
        assert_eq!(kind("a.b"), ReadErrorKind::InvalidToken("a.b".into()));
    }

    #[test]
    fn error_positions() {
        let e = read("(a\n  b .)").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = read("(a b").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(e.is_incomplete());
        assert!(!read(")").unwrap_err().is_incomplete());
    }

    #[test]
    fn nesting_limit() {
        let deep = "(".repeat(MAX_NESTING + 1);
        assert_eq!(kind(&deep), ReadErrorKind::TooDeep);
        let ok = format!("{}x{}", "(".repeat(100), ")".repeat(100));
        assert!(read(&ok).is_ok());
    }

    #[test]
    fn read_all_forms() {
        let forms = read_all("(define x 1) x 'y").unwrap();
        assert_eq!(forms.len(), 3);
        assert_eq!(print(&forms[2]), "(quote y)");
        assert!(read_all("(a) (b").is_err());
        assert!(read_all("").unwrap().is_empty());
    }

    #[test]
    fn unicode_symbols() {
        let e = read("(λ é)").unwrap();
        assert_eq!(print(&e), "(λ é)");
    }
}
