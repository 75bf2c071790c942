//! Labelings `Φ : X ⇉ L` and the classifiers they induce.
//!
//! An element with an empty label set is allowed. The containment rule is
//! applied as written, so such an element lands in `f(A)` only when the
//! members of `A` share no label at all. With `Φ(a) = {p}`, `Φ(b) = {q}` and
//! `Φ(c) = ∅`, the set `{a, b}` has no common labels and closes to
//! `{a, b, c}`, while `{a}` closes to `{a}`.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::closure::ClosureOperator;
use crate::complexity::meet_irreducibles;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    ground: Arc<GroundSet>,
    labels: Vec<String>,
    /// One bitset over label indices per element.
    phi: Vec<FixedBitSet>,
    /// The closed set each label stands for, when the labeling was
    /// generated from an operator.
    label_sets: Option<Vec<Subset>>,
}

impl Labeling {
    /// `phi[x]` lists label indices for element `x`.
    pub fn new(ground: Arc<GroundSet>, labels: Vec<String>, phi: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidLabeling(format!("duplicate label {l:?}")));
            }
        }
        if phi.len() != ground.len() {
            return Err(Error::InvalidLabeling(format!(
                "expected label sets for {} elements, got {}",
                ground.len(),
                phi.len()
            )));
        }
        let phi = phi
            .into_iter()
            .enumerate()
            .map(|(x, ids)| {
                let mut bits = FixedBitSet::with_capacity(labels.len());
                for i in ids {
                    if i >= labels.len() {
                        return Err(Error::InvalidLabeling(format!(
                            "label index {i} out of range for element {}",
                            ground.name(x)
                        )));
                    }
                    bits.insert(i);
                }
                Ok(bits)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Labeling {
            ground,
            labels,
            phi,
            label_sets: None,
        })
    }

    /// Builds a labeling from label names; every element must appear in
    /// `phi` exactly once, possibly with no labels.
    pub fn from_names<I, E, L, S>(
        ground: Arc<GroundSet>,
        labels: Vec<String>,
        phi: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (E, L)>,
        E: AsRef<str>,
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; ground.len()];
        for (elem, ls) in phi {
            let elem = elem.as_ref();
            let x = ground
                .position(elem)
                .ok_or_else(|| Error::UnknownElement(elem.to_string()))?;
            if rows[x].is_some() {
                return Err(Error::InvalidLabeling(format!(
                    "element {elem} listed twice"
                )));
            }
            let ids = ls
                .into_iter()
                .map(|l| {
                    index.get(l.as_ref()).copied().ok_or_else(|| {
                        Error::InvalidLabeling(format!("unknown label {:?}", l.as_ref()))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows[x] = Some(ids);
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(x, r)| {
                r.ok_or_else(|| {
                    Error::InvalidLabeling(format!("no label set for element {}", ground.name(x)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(ground, labels, rows)
    }

    /// Attaches the closed set behind each label.
    pub fn with_label_sets(mut self, sets: Vec<Subset>) -> Result<Self> {
        if sets.len() != self.labels.len() {
            return Err(Error::InvalidLabeling("one set per label required".into()));
        }
        for &s in &sets {
            self.ground.check(s)?;
        }
        self.label_sets = Some(sets);
        Ok(self)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_sets(&self) -> Option<&[Subset]> {
        self.label_sets.as_deref()
    }

    /// Label indices of element `x`, ascending.
    pub fn phi(&self, x: usize) -> Vec<usize> {
        self.phi[x].ones().collect()
    }

    pub fn phi_names(&self, x: usize) -> Vec<&str> {
        self.phi[x]
            .ones()
            .map(|i| self.labels[i].as_str())
            .collect()
    }

    /// Elements carrying label `i`.
    pub fn extent(&self, i: usize) -> Subset {
        (0..self.ground.len())
            .filter(|&x| self.phi[x].contains(i))
            .fold(Subset::EMPTY, |acc, x| acc.with(x))
    }

    fn common(&self, a: Subset) -> FixedBitSet {
        let mut acc = FixedBitSet::with_capacity(self.labels.len());
        acc.insert_range(..);
        for y in a.positions() {
            acc.intersect_with(&self.phi[y]);
        }
        acc
    }

    /// `f(A) = {x : ⋂_{y∈A} Φ(y) ⊆ Φ(x)}`, with `f(∅) = ∅`.
    pub fn classify(&self, a: Subset) -> Subset {
        if a.is_empty() {
            return Subset::EMPTY;
        }
        let common = self.common(a);
        (0..self.ground.len())
            .filter(|&x| common.is_subset(&self.phi[x]))
            .fold(Subset::EMPTY, |acc, x| acc.with(x))
    }
}

/// The classifier induced by a labeling. Always a closure operator.
pub fn classifier_from_labeling(lab: &Labeling) -> ClosureOperator {
    let images = lab.ground.all_subsets().map(|a| lab.classify(a)).collect();
    ClosureOperator::from_images_unchecked(lab.ground.clone(), images)
}

/// One label per nonempty closed set, `Class1..ClassN` in mask order.
pub fn canonical_labeling(f: &ClosureOperator) -> Labeling {
    let sets: Vec<Subset> = f
        .closed_sets()
        .sets()
        .iter()
        .copied()
        .filter(|s| !s.is_empty())
        .collect();
    let labels = (1..=sets.len()).map(|i| format!("Class{i}")).collect();
    labeling_over(f.ground().clone(), labels, sets)
}

/// One label per proper meet-irreducible closed set, named by its members.
pub fn minimal_labeling(f: &ClosureOperator) -> Labeling {
    let sets = meet_irreducibles(&f.closed_sets()).b_of_f;
    let ground = f.ground().clone();
    let labels = sets.iter().map(|&s| ground.format(s)).collect();
    labeling_over(ground, labels, sets)
}

fn labeling_over(ground: Arc<GroundSet>, labels: Vec<String>, sets: Vec<Subset>) -> Labeling {
    let phi = (0..ground.len())
        .map(|x| {
            let mut bits = FixedBitSet::with_capacity(sets.len());
            bits.extend(
                sets.iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(x))
                    .map(|(i, _)| i),
            );
            bits
        })
        .collect();
    Labeling {
        ground,
        labels,
        phi,
        label_sets: Some(sets),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::validate_closure;
    use crate::topology::Topology;

    fn pets() -> Labeling {
        let g = GroundSet::letters(4).unwrap();
        let labels = ["dog", "cat", "black", "white", "female", "male", "car"]
            .map(String::from)
            .to_vec();
        Labeling::from_names(
            g,
            labels,
            [
                ("a", vec!["dog", "black", "female"]),
                ("b", vec!["dog", "black", "male"]),
                ("c", vec!["cat", "white", "female"]),
                ("d", vec!["car", "black"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn pet_classes() {
        let lab = pets();
        let f = classifier_from_labeling(&lab);
        let g = lab.ground().clone();
        let p = |s: &str| g.parse_compact(s).unwrap();
        assert_eq!(f.apply(p("ab")), p("ab"));
        assert_eq!(f.apply(p("bc")), g.full());
        assert_eq!(f.apply(p("ad")), p("abd"));
        assert_eq!(f.closed_sets().len(), 9);
        assert!(validate_closure(&f.to_table()).is_closure());
    }

    #[test]
    fn equal_label_sets_give_trivial_operator() {
        let g = GroundSet::letters(3).unwrap();
        let lab =
            Labeling::new(g.clone(), vec!["p".into(), "q".into()], vec![vec![0, 1]; 3]).unwrap();
        assert_eq!(classifier_from_labeling(&lab), ClosureOperator::trivial(g));
    }

    #[test]
    fn disjoint_label_sets() {
        let g = GroundSet::letters(3).unwrap();
        let lab = Labeling::new(
            g.clone(),
            vec!["p".into(), "q".into(), "r".into()],
            vec![vec![0], vec![1], vec![2]],
        )
        .unwrap();
        let f = classifier_from_labeling(&lab);
        for a in g.nonempty_subsets() {
            let expected = if a.len() == 1 { a } else { g.full() };
            assert_eq!(f.apply(a), expected);
        }
    }

    #[test]
    fn empty_label_set_follows_formula() {
        let g = GroundSet::letters(3).unwrap();
        let lab = Labeling::new(
            g.clone(),
            vec!["p".into(), "q".into()],
            vec![vec![0], vec![1], vec![]],
        )
        .unwrap();
        let f = classifier_from_labeling(&lab);
        let p = |s: &str| g.parse_compact(s).unwrap();
        assert_eq!(f.apply(p("a")), p("a"));
        assert_eq!(f.apply(p("ab")), p("abc"));
        assert_eq!(f.apply(p("c")), p("abc"));
        assert!(validate_closure(&f.to_table()).is_closure());
    }

    #[test]
    fn canonical_and_minimal_round_trip() {
        let f = classifier_from_labeling(&pets());
        let canon = canonical_labeling(&f);
        assert_eq!(canon.labels().len(), 8);
        assert_eq!(classifier_from_labeling(&canon), f);
        let min = minimal_labeling(&f);
        assert_eq!(classifier_from_labeling(&min), f);
        assert!(min.labels().len() < canon.labels().len());
    }

    #[test]
    fn trivial_canonical_labeling() {
        let g = GroundSet::letters(3).unwrap();
        let canon = canonical_labeling(&ClosureOperator::trivial(g.clone()));
        assert_eq!(canon.labels(), ["Class1"]);
        assert_eq!(canon.label_sets(), Some(&[g.full()][..]));
        for x in 0..3 {
            assert_eq!(canon.phi(x), vec![0]);
        }
    }

    #[test]
    fn minimal_labeling_of_a_chain() {
        let g = GroundSet::letters(4).unwrap();
        let sets = ["", "a", "ab", "abc", "abcd"].map(|s| g.parse_compact(s).unwrap());
        let f = ClosureOperator::FromTopology(Topology::new(g.clone(), sets).unwrap());
        let min = minimal_labeling(&f);
        assert_eq!(min.labels(), ["{a}", "{a,b}", "{a,b,c}"]);
        assert_eq!(classifier_from_labeling(&min), f);
    }

    #[test]
    fn rejects_bad_labelings() {
        let g = GroundSet::letters(2).unwrap();
        assert!(Labeling::new(
            g.clone(),
            vec!["p".into(), "p".into()],
            vec![vec![], vec![]]
        )
        .is_err());
        assert!(Labeling::new(g.clone(), vec!["p".into()], vec![vec![1], vec![]]).is_err());
        let missing = Labeling::from_names(g.clone(), vec!["p".into()], [("a", vec!["p"])]);
        assert!(matches!(missing, Err(Error::InvalidLabeling(_))));
        let unknown = Labeling::from_names(g, vec!["p".into()], [("a", vec!["q"]), ("b", vec![])]);
        assert!(matches!(unknown, Err(Error::InvalidLabeling(_))));
    }
}
