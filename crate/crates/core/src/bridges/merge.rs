//! Merge and the numerals it generates. Merge alone yields the successor
//! on these numerals and nothing else; arithmetic beyond that needs the
//! conditional and recursion of the Lisp or lambda engines.

use super::FiniteSet;

/// `{x, y}`, collapsing to `{x}` when the two are equal.
pub fn merge(x: &FiniteSet, y: &FiniteSet) -> FiniteSet {
    FiniteSet::from_elements([x.clone(), y.clone()])
}

/// `0 = ∅`, `n + 1 = {n}`.
pub fn zermelo_encode(n: usize) -> FiniteSet {
    let mut s = FiniteSet::empty();
    for _ in 0..n {
        s = FiniteSet::from_elements([s]);
    }
    s
}

/// Depth of singleton nesting, or `None` if some level is not a singleton.
pub fn zermelo_decode(s: &FiniteSet) -> Option<usize> {
    let mut depth = 0;
    let mut cur = s;
    loop {
        match cur.len() {
            0 => return Some(depth),
            1 => {
                cur = cur.elements().next()?;
                depth += 1;
            }
            _ => return None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_examples() {
        let e = FiniteSet::empty();
        assert_eq!(merge(&e, &e), FiniteSet::from_elements([e.clone()]));
        let one = zermelo_encode(1);
        assert_eq!(merge(&one, &e), merge(&e, &one));
        assert_eq!(merge(&one, &e).len(), 2);
    }

    #[test]
    fn numerals() {
        assert_eq!(zermelo_encode(0), FiniteSet::empty());
        assert_eq!(zermelo_encode(2).to_string(), "{{∅}}");
        let two = zermelo_encode(2);
        assert_eq!(zermelo_decode(&merge(&two, &two)), Some(3));
        let e = FiniteSet::empty();
        assert_eq!(zermelo_decode(&merge(&e, &zermelo_encode(1))), None);
        for n in 0..=64 {
            assert_eq!(zermelo_decode(&zermelo_encode(n)), Some(n));
        }
    }

    #[test]
    fn api_surface_is_merge_and_numerals_only() {
        let source = include_str!("merge.rs");
        let names: Vec<&str> = source
            .lines()
            .filter_map(|l| l.strip_prefix("pub fn "))
            .map(|rest| rest.split('(').next().unwrap())
            .collect();
        assert_eq!(names, ["merge", "zermelo_encode", "zermelo_decode"]);
    }
}
