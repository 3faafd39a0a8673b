//! Recognizer/parser for the lambda grammar
//!
//! ```text
//! S -> X | (λX S) | (S S)
//! X -> x | X'
//! ```
//!
//! Where the grammar has one space, any non-empty run of whitespace is
//! accepted. `\` may stand for `λ`, and `′` for `'`. Whitespace around the
//! whole term is ignored.

use super::{LambdaTerm, VarName};
use thiserror::Error;

/// Deepest parenthesis nesting accepted.
pub const MAX_DEPTH: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct LambdaParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let ch = self.peek()?;
        self.pos += ch.len_utf8();
        Some(ch)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, LambdaParseError> {
        Err(LambdaParseError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), LambdaParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.fail(format!("expected {want:?}, found {c:?}")),
            None => self.fail(format!("expected {want:?}, found end of input")),
        }
    }

    fn space(&mut self) -> Result<(), LambdaParseError> {
        match self.peek() {
            Some(c) if c.is_whitespace() => {}
            Some(c) => return self.fail(format!("expected whitespace, found {c:?}")),
            None => return self.fail("expected whitespace, found end of input"),
        }
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
        Ok(())
    }

    fn variable(&mut self) -> Result<VarName, LambdaParseError> {
        self.expect('x')?;
        let mut primes = 0u32;
        while matches!(self.peek(), Some('\'' | '′')) {
            self.bump();
            primes = match primes.checked_add(1) {
                Some(p) => p,
                None => return self.fail("too many primes"),
            };
        }
        Ok(VarName::new(primes))
    }

    fn term(&mut self) -> Result<LambdaTerm, LambdaParseError> {
        match self.peek() {
            Some('x') => Ok(LambdaTerm::Var(self.variable()?)),
            Some('(') => {
                if self.depth >= MAX_DEPTH {
                    return self.fail(format!("nesting deeper than {MAX_DEPTH}"));
                }
                self.bump();
                self.depth += 1;
                let t = if matches!(self.peek(), Some('λ' | '\\')) {
                    self.bump();
                    let param = self.variable()?;
                    self.space()?;
                    let body = self.term()?;
                    LambdaTerm::abs(param, body)
                } else {
                    let f = self.term()?;
                    self.space()?;
                    let a = self.term()?;
                    LambdaTerm::app(f, a)
                };
                self.expect(')')?;
                self.depth -= 1;
                Ok(t)
            }
            Some(c) => self.fail(format!("unexpected {c:?}")),
            None => self.fail("unexpected end of input"),
        }
    }
}

pub fn parse_lambda(text: &str) -> Result<LambdaTerm, LambdaParseError> {
    let trimmed_start = text.len() - text.trim_start().len();
    let end = text.trim_end().len();
    if end <= trimmed_start {
        return Err(LambdaParseError {
            offset: text.len(),
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        text: &text[..end],
        pos: trimmed_start,
        depth: 0,
    };
    let t = p.term()?;
    if p.pos < end {
        return p.fail("trailing input after term");
    }
    Ok(t)
}
