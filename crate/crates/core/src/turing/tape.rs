use super::Move;
use std::collections::BTreeMap;
use std::fmt;

/// Bi-infinite tape. Only non-blank cells are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tape {
    cells: BTreeMap<i64, String>,
    head: i64,
    blank: String,
}

impl Tape {
    pub fn new(blank: &str) -> Self {
        Tape {
            cells: BTreeMap::new(),
            head: 0,
            blank: blank.to_string(),
        }
    }

    /// `input` written left to right from position 0, head at 0.
    pub fn with_input<S: AsRef<str>>(blank: &str, input: &[S]) -> Self {
        let mut tape = Tape::new(blank);
        for (i, s) in input.iter().enumerate() {
            tape.set(i as i64, s.as_ref());
        }
        tape
    }

    pub fn blank(&self) -> &str {
        &self.blank
    }

    pub fn head(&self) -> i64 {
        self.head
    }

    pub fn read(&self) -> &str {
        self.get(self.head)
    }

    pub fn get(&self, pos: i64) -> &str {
        self.cells.get(&pos).map_or(&self.blank, String::as_str)
    }

    pub fn write(&mut self, symbol: &str) {
        self.set(self.head, symbol);
    }

    fn set(&mut self, pos: i64, symbol: &str) {
        if symbol == self.blank {
            self.cells.remove(&pos);
        } else {
            self.cells.insert(pos, symbol.to_string());
        }
    }

    pub fn shift(&mut self, movement: Move) {
        self.head += movement.offset();
    }

    pub fn non_blank_count(&self) -> usize {
        self.cells.len()
    }

    pub fn leftmost(&self) -> Option<i64> {
        self.cells.keys().next().copied()
    }

    pub fn rightmost(&self) -> Option<i64> {
        self.cells.keys().next_back().copied()
    }

    /// Non-blank cells in position order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, &str)> {
        self.cells.iter().map(|(&p, s)| (p, s.as_str()))
    }

    /// Symbols from the leftmost to the rightmost non-blank cell.
    pub fn contents(&self) -> Vec<&str> {
        match (self.leftmost(), self.rightmost()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|p| self.get(p)).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.contents().join(" "))
    }
}
