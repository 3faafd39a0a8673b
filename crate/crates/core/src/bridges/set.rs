use std::collections::BTreeSet;
use std::fmt;

/// A hereditarily finite pure set: every element is itself a set, down to
/// the empty set.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSet {
    elements: BTreeSet<FiniteSet>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet::default()
    }

    /// Duplicates collapse: `{∅, ∅} = {∅}`.
    pub fn from_elements<I: IntoIterator<Item = FiniteSet>>(items: I) -> Self {
        FiniteSet {
            elements: items.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &FiniteSet) -> bool {
        self.elements.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = &FiniteSet> {
        self.elements.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensional() {
        let e = FiniteSet::empty();
        let s = FiniteSet::from_elements([e.clone(), e.clone()]);
        assert_eq!(s.len(), 1);
        assert_eq!(s, FiniteSet::from_elements([e.clone()]));
        let one = s.clone();
        let a = FiniteSet::from_elements([e.clone(), one.clone()]);
        let b = FiniteSet::from_elements([one, e]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "{∅, {∅}}");
    }
}
