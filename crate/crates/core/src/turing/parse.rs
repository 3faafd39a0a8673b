//! Machine text format:
//!
//! ```text
//! states: q0 q1
//! symbols: _ 1
//! blank: _
//! q0 1 q0 1 right
//! q0 _ q1 1 halt
//! ```
//!
//! After the three header lines the body is a sequence of five-token
//! clauses, one per line. The body scan is a fixed five-position cursor
//! over the token stream with no stack and no lookahead, so the body
//! language is regular. Blank lines and `#` comments are ignored.

use super::{Clause, Machine, MachineError, Move};
use crate::sexpr::Word;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct MachineParseError {
    pub line: usize,
    pub message: String,
}

/// Position of a token inside a clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseField {
    State,
    Read,
    Next,
    Write,
    Move,
}

impl ClauseField {
    pub fn next(self) -> ClauseField {
        match self {
            ClauseField::State => ClauseField::Read,
            ClauseField::Read => ClauseField::Next,
            ClauseField::Next => ClauseField::Write,
            ClauseField::Write => ClauseField::Move,
            ClauseField::Move => ClauseField::State,
        }
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, MachineParseError> {
    Err(MachineParseError {
        line,
        message: message.into(),
    })
}

/// Names must read back as themselves so compiled programs can quote them.
fn check_name(line: usize, token: &str) -> Result<(), MachineParseError> {
    match Word::from_token(token) {
        Ok(w) if w.to_string() == token => Ok(()),
        _ => err(line, format!("{token:?} is not a valid name")),
    }
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, Vec<&'a str>), MachineParseError> {
    let Some((n, line)) = lines.next() else {
        return err(0, format!("missing `{key}:` header"));
    };
    let Some(rest) = line.strip_prefix(key).and_then(|r| r.strip_prefix(':')) else {
        return err(n, format!("expected `{key}:` header"));
    };
    let names: Vec<&str> = rest.split_whitespace().collect();
    for name in &names {
        check_name(n, name)?;
    }
    Ok((n, names))
}

pub fn parse_machine(text: &str) -> Result<Machine, MachineParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (_, states) = header(&mut lines, "states")?;
    let (_, symbols) = header(&mut lines, "symbols")?;
    let (blank_line, blank) = header(&mut lines, "blank")?;
    let [blank] = blank[..] else {
        return err(blank_line, "`blank:` takes exactly one symbol");
    };

    let mut clauses: Vec<Clause> = Vec::new();
    for (n, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 5 {
            return err(n, format!("expected 5 tokens, found {}", tokens.len()));
        }
        let mut field = ClauseField::State;
        let mut movement = Move::Halt;
        for token in &tokens {
            match field {
                ClauseField::State | ClauseField::Next => {
                    if !states.contains(token) {
                        return err(n, format!("unknown state {token:?}"));
                    }
                }
                ClauseField::Read | ClauseField::Write => {
                    if !symbols.contains(token) {
                        return err(n, format!("unknown symbol {token:?}"));
                    }
                }
                ClauseField::Move => match Move::from_token(token) {
                    Some(m) => movement = m,
                    None => return err(n, format!("unknown move {token:?}")),
                },
            }
            field = field.next();
        }
        debug_assert_eq!(field, ClauseField::State);
        if clauses
            .iter()
            .any(|c| c.state == tokens[0] && c.read == tokens[1])
        {
            return err(
                n,
                format!(
                    "duplicate clause for state {:?} reading {:?}",
                    tokens[0], tokens[1]
                ),
            );
        }
        clauses.push(Clause {
            state: tokens[0].to_string(),
            read: tokens[1].to_string(),
            next: tokens[2].to_string(),
            write: tokens[3].to_string(),
            movement,
        });
    }

    let owned = |v: Vec<&str>| v.into_iter().map(str::to_string).collect();
    Machine::new(owned(states), owned(symbols), blank.to_string(), clauses).map_err(
        |e: MachineError| MachineParseError {
            line: blank_line,
            message: e.to_string(),
        },
    )
}
