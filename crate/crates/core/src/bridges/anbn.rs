use crate::lisp::Interpreter;
use crate::sexpr::SExpr;

/// Membership in { aⁿbⁿ : n ≥ 0 }, computed directly.
pub fn anbn_member(word: &[char]) -> bool {
    let n = word.len();
    n.is_multiple_of(2)
        && word[..n / 2].iter().all(|&c| c == 'a')
        && word[n / 2..].iter().all(|&c| c == 'b')
}

/// Every word over {a, b} of length at most `max_len`, shortest first.
pub fn all_words(max_len: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for c in ['a', 'b'] {
                let mut w = out[i].clone();
                w.push(c);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnbnReport {
    pub checked: usize,
    pub accepted: usize,
    /// Words the recognizer judged differently from `anbn_member`.
    pub disagreements: Vec<String>,
    /// Words whose recognition ran out of fuel or faulted.
    pub failures: Vec<String>,
}

impl AnbnReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.failures.is_empty()
    }
}

fn show(word: &[char]) -> String {
    if word.is_empty() {
        return "ε".to_string();
    }
    word.iter()
        .map(char::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs the bundled Lisp recognizer on every word of length up to
/// `2 * n_max` and compares each verdict against [`anbn_member`].
pub fn anbn_demo(n_max: usize, fuel: u64) -> AnbnReport {
    let mut interp = Interpreter::with_prelude();
    let recognizer = interp
        .eval(&SExpr::sym("anbn"), fuel)
        .value()
        .cloned()
        .expect("prelude defines anbn");
    let mut report = AnbnReport::default();
    for word in all_words(2 * n_max) {
        let list = SExpr::list(word.iter().map(|c| SExpr::sym(&c.to_string())));
        let out = interp.apply(&recognizer, vec![list.into()], fuel);
        report.checked += 1;
        match out.datum() {
            Some(d) => {
                let verdict = !d.is_nil();
                report.accepted += usize::from(verdict);
                if verdict != anbn_member(&word) {
                    report.disagreements.push(show(&word));
                }
            }
            None => report.failures.push(show(&word)),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_oracle() {
        assert!(anbn_member(&[]));
        assert!(anbn_member(&['a', 'a', 'b', 'b']));
        assert!(!anbn_member(&['a', 'b', 'a']));
        assert!(!anbn_member(&['b', 'a']));
        assert!(!anbn_member(&['a']));
    }

    #[test]
    fn word_counts() {
        assert_eq!(all_words(0).len(), 1);
        assert_eq!(all_words(3).len(), 15);
        assert_eq!(all_words(8).len(), 511);
    }

    #[test]
    fn demo_is_clean() {
        let r = anbn_demo(4, 100_000);
        assert_eq!(r.checked, 511);
        assert_eq!(r.accepted, 5);
        assert!(r.is_clean(), "{r:?}");
    }
}
