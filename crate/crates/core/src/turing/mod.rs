//! Deterministic single-tape Turing machines.
//!
//! A machine is a list of five-word clauses `state read next write move`.
//! Halting is a move, not a state: a clause whose move is `halt` still
//! writes and changes state, then the run ends.

mod parse;
mod tape;

pub use parse::{parse_machine, ClauseField, MachineParseError};
pub use tape::Tape;

use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Right,
    Halt,
}

impl Move {
    pub fn from_token(token: &str) -> Option<Move> {
        match token {
            "left" => Some(Move::Left),
            "right" => Some(Move::Right),
            "halt" => Some(Move::Halt),
            _ => None,
        }
    }

    pub fn offset(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Right => 1,
            Move::Halt => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Move::Left => "left",
            Move::Right => "right",
            Move::Halt => "halt",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub state: String,
    pub read: String,
    pub next: String,
    pub write: String,
    pub movement: Move,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.state, self.read, self.next, self.write, self.movement
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MachineError {
    #[error("machine declares no states")]
    NoStates,
    #[error("blank symbol {0:?} is not among the declared symbols")]
    UndeclaredBlank(String),
    #[error("duplicate {kind} {name:?}")]
    DuplicateName { kind: &'static str, name: String },
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("more than one clause for state {state:?} reading {read:?}")]
    Nondeterministic { state: String, read: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Machine {
    states: Vec<String>,
    symbols: Vec<String>,
    blank: String,
    clauses: Vec<Clause>,
    table: HashMap<(String, String), usize>,
}

impl Machine {
    /// Validates alphabets and clauses. The first state is the start state.
    pub fn new(
        states: Vec<String>,
        symbols: Vec<String>,
        blank: String,
        clauses: Vec<Clause>,
    ) -> Result<Self, MachineError> {
        if states.is_empty() {
            return Err(MachineError::NoStates);
        }
        for (kind, names) in [("state", &states), ("symbol", &symbols)] {
            for (i, name) in names.iter().enumerate() {
                if names[..i].contains(name) {
                    return Err(MachineError::DuplicateName {
                        kind,
                        name: name.clone(),
                    });
                }
            }
        }
        if !symbols.contains(&blank) {
            return Err(MachineError::UndeclaredBlank(blank));
        }
        let mut table = HashMap::new();
        for (i, c) in clauses.iter().enumerate() {
            for s in [&c.state, &c.next] {
                if !states.contains(s) {
                    return Err(MachineError::UnknownState(s.clone()));
                }
            }
            for s in [&c.read, &c.write] {
                if !symbols.contains(s) {
                    return Err(MachineError::UnknownSymbol(s.clone()));
                }
            }
            if table.insert((c.state.clone(), c.read.clone()), i).is_some() {
                return Err(MachineError::Nondeterministic {
                    state: c.state.clone(),
                    read: c.read.clone(),
                });
            }
        }
        Ok(Machine {
            states,
            symbols,
            blank,
            clauses,
            table,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn blank(&self) -> &str {
        &self.blank
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn start_state(&self) -> &str {
        &self.states[0]
    }

    /// Non-blank symbols, in declaration order.
    pub fn input_alphabet(&self) -> impl Iterator<Item = &str> {
        self.symbols
            .iter()
            .filter(move |s| **s != self.blank)
            .map(String::as_str)
    }

    pub fn clause_for(&self, state: &str, read: &str) -> Option<&Clause> {
        self.table
            .get(&(state.to_string(), read.to_string()))
            .map(|&i| &self.clauses[i])
    }

    /// Blank tape with `input` written from position 0 and the head on it.
    pub fn load<S: AsRef<str>>(&self, input: &[S]) -> Result<Tape, MachineError> {
        for s in input {
            if !self.symbols.iter().any(|d| d == s.as_ref()) {
                return Err(MachineError::UnknownSymbol(s.as_ref().to_string()));
            }
        }
        Ok(Tape::with_input(&self.blank, input))
    }

    /// Fires at most one clause.
    pub fn step(&self, tape: &mut Tape, state: &str) -> Step {
        let Some(clause) = self.clause_for(state, tape.read()) else {
            return Step::Stuck;
        };
        tape.write(&clause.write);
        tape.shift(clause.movement);
        if clause.movement == Move::Halt {
            Step::Halted(clause.next.clone())
        } else {
            Step::Moved(clause.next.clone())
        }
    }

    /// Runs from the start state until a halting clause fires, no clause
    /// matches, or `fuel` clauses have fired.
    pub fn run(&self, mut tape: Tape, fuel: u64) -> RunOutcome {
        let mut state = self.start_state().to_string();
        let mut steps = 0;
        loop {
            if steps >= fuel {
                return RunOutcome::FuelExhausted { tape, state, steps };
            }
            match self.step(&mut tape, &state) {
                Step::Moved(next) => {
                    state = next;
                    steps += 1;
                }
                Step::Halted(next) => {
                    return RunOutcome::Halted {
                        tape,
                        state: next,
                        steps: steps + 1,
                    }
                }
                Step::Stuck => return RunOutcome::Stuck { tape, state, steps },
            }
        }
    }
}

impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states: {}", self.states.join(" "))?;
        writeln!(f, "symbols: {}", self.symbols.join(" "))?;
        writeln!(f, "blank: {}", self.blank)?;
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Moved(String),
    Halted(String),
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Halted {
        tape: Tape,
        state: String,
        steps: u64,
    },
    FuelExhausted {
        tape: Tape,
        state: String,
        steps: u64,
    },
    Stuck {
        tape: Tape,
        state: String,
        steps: u64,
    },
}

impl RunOutcome {
    pub fn tape(&self) -> &Tape {
        match self {
            RunOutcome::Halted { tape, .. }
            | RunOutcome::FuelExhausted { tape, .. }
            | RunOutcome::Stuck { tape, .. } => tape,
        }
    }

    pub fn state(&self) -> &str {
        match self {
            RunOutcome::Halted { state, .. }
            | RunOutcome::FuelExhausted { state, .. }
            | RunOutcome::Stuck { state, .. } => state,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            RunOutcome::Halted { steps, .. }
            | RunOutcome::FuelExhausted { steps, .. }
            | RunOutcome::Stuck { steps, .. } => *steps,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RunOutcome::Halted { .. } => "halted",
            RunOutcome::FuelExhausted { .. } => "fuel-exhausted",
            RunOutcome::Stuck { .. } => "stuck",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SUCC: &str = "\
states: q0
symbols: _ 1
blank: _
q0 1 q0 1 right
q0 _ q0 1 halt
";

    fn succ() -> Machine {
        parse_machine(SUCC).unwrap()
    }

    #[test]
    fn successor_step() {
        let m = succ();
        let mut tape = m.load(&["1"]).unwrap();
        assert_eq!(m.step(&mut tape, "q0"), Step::Moved("q0".into()));
        assert_eq!(tape.head(), 1);
        assert_eq!(tape.to_string(), "1");
    }

    #[test]
    fn successor_run() {
        let m = succ();
        let out = m.run(m.load(&["1", "1", "1"]).unwrap(), 100);
        assert_eq!(out.kind(), "halted");
        assert_eq!(out.tape().to_string(), "1 1 1 1");
        assert_eq!(out.steps(), 4);
        assert_eq!(out.tape().head(), 3);
    }

    #[test]
    fn no_matching_clause_is_stuck() {
        let m = parse_machine("states: q0 q1\nsymbols: _ 1\nblank: _\nq0 1 q1 1 right\n").unwrap();
        let mut tape = m.load(&["1"]).unwrap();
        assert_eq!(m.step(&mut tape, "q1"), Step::Stuck);
        let out = m.run(m.load(&["1"]).unwrap(), 10);
        assert_eq!(out.kind(), "stuck");
        assert_eq!(out.state(), "q1");
        assert_eq!(out.steps(), 1);
    }

    #[test]
    fn blank_over_blank_halt() {
        let m = parse_machine("states: q0\nsymbols: _\nblank: _\nq0 _ q0 _ halt\n").unwrap();
        let tape = m.load::<&str>(&[]).unwrap();
        let out = m.run(tape.clone(), 10);
        assert_eq!(
            out,
            RunOutcome::Halted {
                tape,
                state: "q0".into(),
                steps: 1
            }
        );
    }

    #[test]
    fn zero_fuel() {
        let m = succ();
        let out = m.run(m.load(&["1"]).unwrap(), 0);
        assert_eq!(out.kind(), "fuel-exhausted");
        assert_eq!(out.steps(), 0);
    }

    #[test]
    fn runaway_machine() {
        let m = parse_machine("states: q0\nsymbols: _\nblank: _\nq0 _ q0 _ right\n").unwrap();
        let out = m.run(m.load::<&str>(&[]).unwrap(), 500);
        assert_eq!(out.kind(), "fuel-exhausted");
        assert_eq!(out.steps(), 500);
        assert_eq!(out.tape().head(), 500);
    }

    #[test]
    fn left_of_origin() {
        let m = parse_machine(
            "states: q0 q1\nsymbols: _ 1\nblank: _\nq0 _ q1 1 left\nq1 _ q1 1 halt\n",
        )
        .unwrap();
        let out = m.run(m.load::<&str>(&[]).unwrap(), 10);
        assert_eq!(out.tape().head(), -1);
        assert_eq!(out.tape().to_string(), "1 1");
        assert_eq!(out.tape().leftmost(), Some(-1));
    }

    #[test]
    fn rejects_undeclared_input() {
        assert_eq!(
            succ().load(&["2"]).unwrap_err(),
            MachineError::UnknownSymbol("2".into())
        );
    }

    #[test]
    fn machine_validation() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            Machine::new(vec![], s(&["_"]), "_".into(), vec![]).unwrap_err(),
            MachineError::NoStates
        );
        assert_eq!(
            Machine::new(s(&["q0"]), s(&["1"]), "_".into(), vec![]).unwrap_err(),
            MachineError::UndeclaredBlank("_".into())
        );
        assert!(matches!(
            Machine::new(s(&["q0", "q0"]), s(&["_"]), "_".into(), vec![]),
            Err(MachineError::DuplicateName { kind: "state", .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let m = succ();
        assert_eq!(parse_machine(&m.to_string()).unwrap(), m);
    }
}
