//! Ground sets and word-encoded subsets.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest ground set accepted anywhere in the crate. Every algorithm
/// enumerates `2^X` at least once.
pub const MAX_ELEMENTS: usize = 20;

/// A subset of a ground set, one bit per element position.
///
/// Subsets order by their numeric mask value. Because `A ⊊ B` implies
/// `mask(A) < mask(B)`, ascending mask order is a linear extension of
/// inclusion; several algorithms rely on this.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn singleton(position: usize) -> Self {
        Subset(1 << position)
    }

    #[inline]
    pub const fn contains(self, position: usize) -> bool {
        self.0 >> position & 1 == 1
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, position: usize) -> Subset {
        Subset(self.0 | 1 << position)
    }

    /// Element positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(p)
            }
        })
    }

    /// Highest set position, if any.
    pub fn max_position(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// All subsets of `self`, ascending by mask.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur | !full).wrapping_add(1) & full)
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({:#b})", self.0)
    }
}

/// The finite set `X` every other structure is defined over.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GroundSet").field(&self.elements).finish()
    }
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = names.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                size: elements.len(),
                max: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, name) in elements.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyElementName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Arc::new(GroundSet { elements, index }))
    }

    /// Ground set named `a`, `b`, `c`, ... (handy for fixtures).
    pub fn letters(n: usize) -> Result<Arc<Self>> {
        if n > 26 {
            return Err(Error::GroundSetTooLarge {
                size: n,
                max: MAX_ELEMENTS,
            });
        }
        Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, position: usize) -> &str {
        &self.elements[position]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset((((1u64) << self.len()) - 1) as u32)
    }

    /// Number of subsets, `2^|X|`.
    #[inline]
    pub fn power_set_len(&self) -> usize {
        1usize << self.len()
    }

    /// Every subset of `X`, ascending by mask.
    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> {
        (0..self.power_set_len() as u32).map(Subset::from_bits)
    }

    pub fn nonempty_subsets(&self) -> impl Iterator<Item = Subset> {
        (1..self.power_set_len() as u32).map(Subset::from_bits)
    }

    pub fn owns(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn check(&self, s: Subset) -> Result<Subset> {
        if self.owns(s) {
            Ok(s)
        } else {
            Err(Error::ForeignMask { bits: s.bits() })
        }
    }

    pub fn subset<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for name in names {
            let name = name.as_ref();
            let p = self
                .position(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
            s = s.with(p);
        }
        Ok(s)
    }

    /// Parses a compact letter string such as `"abd"`; only valid when
    /// every element name is a single character.
    pub fn parse_compact(&self, compact: &str) -> Result<Subset> {
        self.subset(compact.chars().map(|c| c.to_string()))
    }

    pub fn names(&self, s: Subset) -> Vec<String> {
        s.positions().map(|p| self.elements[p].clone()).collect()
    }

    /// `{a,b}` style rendering; `{}` for the empty set.
    pub fn format(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.positions().map(|p| self.elements[p].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Fails unless both ground sets list the same elements in the same order.
pub fn same_ground(a: &GroundSet, b: &GroundSet) -> Result<()> {
    if a.elements == b.elements {
        Ok(())
    } else {
        Err(Error::GroundSetMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_ground_sets() {
        assert!(matches!(
            GroundSet::new(Vec::<String>::new()),
            Err(Error::EmptyGroundSet)
        ));
        assert!(matches!(
            GroundSet::new(["a", "a"]),
            Err(Error::DuplicateElement(_))
        ));
        assert!(matches!(
            GroundSet::new(["a", ""]),
            Err(Error::EmptyElementName)
        ));
        let many: Vec<String> = (0..21).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            GroundSet::new(many),
            Err(Error::GroundSetTooLarge { size: 21, max: 20 })
        ));
        let ok: Vec<String> = (0..20).map(|i| format!("e{i}")).collect();
        assert_eq!(GroundSet::new(ok).unwrap().full().bits(), (1 << 20) - 1);
    }

    #[test]
    fn subset_names_round_trip() {
        let g = GroundSet::letters(4).unwrap();
        let s = g.subset(["d", "a"]).unwrap();
        assert_eq!(s.bits(), 0b1001);
        assert_eq!(g.names(s), vec!["a", "d"]);
        assert_eq!(g.format(s), "{a,d}");
        assert_eq!(g.format(Subset::EMPTY), "{}");
        assert!(matches!(g.subset(["z"]), Err(Error::UnknownElement(_))));
        assert!(matches!(
            g.check(Subset::from_bits(0b10000)),
            Err(Error::ForeignMask { .. })
        ));
    }

    #[test]
    fn subsets_of_enumerates_all() {
        let s = Subset::from_bits(0b1011);
        let subs: Vec<u32> = s.subsets().map(Subset::bits).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn positions_and_max() {
        let s = Subset::from_bits(0b10110);
        assert_eq!(s.positions().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(s.max_position(), Some(4));
        assert_eq!(Subset::EMPTY.max_position(), None);
    }
}
