//! Strategically rational operators (from weak orders), binary
//! classifiers, and generation of operators by pointwise intersection.
//!
//! A [`WeakOrder`] stores its indifference classes **worst first**: with
//! classes `A_1, …, A_k`, every element of `A_j` is strictly preferred to
//! every element of `A_i` whenever `i < j`. Its closed sets are then
//! `∅ ⊂ A_1 ⊂ A_1 ∪ A_2 ⊂ … ⊂ X`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::closure::{validate_closure, ClosureOperator};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::topology::Topology;

/// An ordered partition of `X` into indifference classes, worst first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakOrder {
    ground: Arc<GroundSet>,
    classes: Vec<Subset>,
    class_of: Vec<usize>,
}

impl WeakOrder {
    pub fn from_classes(ground: Arc<GroundSet>, classes: Vec<Subset>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; ground.len()];
        for (i, &class) in classes.iter().enumerate() {
            ground.check(class)?;
            if class.is_empty() {
                return Err(Error::InvalidWeakOrder(format!("class {} is empty", i + 1)));
            }
            for x in class.positions() {
                if class_of[x] != usize::MAX {
                    return Err(Error::InvalidWeakOrder(format!(
                        "element `{}` appears in more than one class",
                        ground.name(x)
                    )));
                }
                class_of[x] = i;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidWeakOrder(format!(
                "element `{}` is not in any class",
                ground.name(x)
            )));
        }
        Ok(WeakOrder {
            ground,
            classes,
            class_of,
        })
    }

    /// Groups elements by equal utility; larger utility is better. Only
    /// the induced order matters, so any strictly increasing relabeling of
    /// `utility` yields the same weak order.
    pub fn from_utilities<T: Ord>(ground: Arc<GroundSet>, utility: impl Fn(usize) -> T) -> Self {
        let mut groups: BTreeMap<T, Subset> = BTreeMap::new();
        for x in 0..ground.len() {
            let slot = groups.entry(utility(x)).or_default();
            *slot = slot.with(x);
        }
        let classes: Vec<Subset> = groups.into_values().collect();
        Self::from_classes(ground, classes).expect("grouping yields a partition")
    }

    /// The single-class order (total indifference).
    pub fn indifferent(ground: Arc<GroundSet>) -> Self {
        let full = ground.full();
        Self::from_classes(ground, vec![full]).expect("one class covering X")
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// 0-based class index of element `x` (0 is worst).
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Integer utility of `x`: its class index counted from 1 at the worst
    /// class.
    pub fn utility(&self, x: usize) -> u32 {
        self.class_of[x] as u32 + 1
    }

    /// `x ⪰ y`.
    pub fn weakly_prefers(&self, x: usize, y: usize) -> bool {
        self.class_of[x] >= self.class_of[y]
    }

    fn top_class_index(&self, a: Subset) -> Option<usize> {
        a.positions().map(|x| self.class_of[x]).max()
    }

    pub fn support_set(&self, a: Subset) -> Subset {
        support_set(self, a)
    }

    pub fn half_space_closure(&self, a: Subset) -> Subset {
        half_space_closure(self, a)
    }

    /// The strategically rational operator `f_⪰`.
    pub fn operator(&self) -> ClosureOperator {
        let images = self
            .ground
            .all_subsets()
            .map(|a| self.half_space_closure(a))
            .collect();
        ClosureOperator::from_images_unchecked(self.ground.clone(), images)
    }

    /// `{∅, A_1, A_1 ∪ A_2, …, X}`.
    pub fn chain(&self) -> Topology {
        chain_from_weak_order(self)
    }
}

/// The binary classifier `f_C`: `∅ ↦ ∅`, `A ⊆ C ↦ C`, otherwise `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryClassifier {
    ground: Arc<GroundSet>,
    cutoff: Subset,
}

impl BinaryClassifier {
    /// `C = ∅` and `C = X` are rejected: both give the trivial topology.
    pub fn new(ground: Arc<GroundSet>, cutoff: Subset) -> Result<Self> {
        ground.check(cutoff)?;
        if cutoff.is_empty() || cutoff == ground.full() {
            return Err(Error::InvalidClassifier(ground.format(cutoff)));
        }
        Ok(BinaryClassifier { ground, cutoff })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn cutoff(&self) -> Subset {
        self.cutoff
    }

    pub fn closure(&self, a: Subset) -> Subset {
        binary_closure(self, a)
    }

    pub fn operator(&self) -> ClosureOperator {
        let images = self.ground.all_subsets().map(|a| self.closure(a)).collect();
        ClosureOperator::from_images_unchecked(self.ground.clone(), images)
    }

    /// The two-class order `C < X \ C`, whose operator equals `f_C`.
    pub fn as_weak_order(&self) -> WeakOrder {
        WeakOrder::from_classes(
            self.ground.clone(),
            vec![self.cutoff, self.ground.full().difference(self.cutoff)],
        )
        .expect("proper cutoff splits X in two")
    }
}

/// `h_A(⪰)`: the members of `A` in its highest occupied class.
pub fn support_set(order: &WeakOrder, a: Subset) -> Subset {
    match order.top_class_index(a) {
        None => Subset::EMPTY,
        Some(top) => a.intersection(order.classes[top]),
    }
}

/// `H(⪰, h_A)`: every element weakly below the best of `A`.
pub fn half_space_closure(order: &WeakOrder, a: Subset) -> Subset {
    match order.top_class_index(a) {
        None => Subset::EMPTY,
        Some(top) => order.classes[..=top]
            .iter()
            .fold(Subset::EMPTY, |acc, c| acc.union(*c)),
    }
}

pub fn binary_closure(classifier: &BinaryClassifier, a: Subset) -> Subset {
    if a.is_empty() {
        Subset::EMPTY
    } else if a.is_subset_of(classifier.cutoff) {
        classifier.cutoff
    } else {
        classifier.ground.full()
    }
}

/// `f(A) = ⋂ g_i(A)`.
pub fn intersect_generate(generators: &[ClosureOperator]) -> Result<ClosureOperator> {
    let (first, rest) = generators.split_first().ok_or(Error::EmptyGeneratorList)?;
    for g in rest {
        first.same_ground(g)?;
    }
    let mut images = first.tabulate();
    for g in rest {
        for (img, other) in images.iter_mut().zip(g.tabulate()) {
            *img = img.intersection(other);
        }
    }
    let op = ClosureOperator::from_images_unchecked(first.ground().clone(), images);
    let report = validate_closure(&op.to_table());
    if !report.is_closure() {
        return Err(Error::WitnessVerificationFailed(
            "intersection of closure operators failed validation".into(),
        ));
    }
    Ok(op)
}

/// Outcome of testing whether `gs` generate `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    /// `(i, B)`: `B ∈ S(g_i)` but `B ∉ S(f)`.
    pub containment_failures: Vec<(usize, Subset)>,
    /// `(A, x)`: `A ∈ S(f)`, `x ∉ A`, yet `x ∈ g_i(A)` for every `i`.
    pub separation_failures: Vec<(Subset, usize)>,
    /// Direct check that `f = ⋂ g_i` on every subset.
    pub pointwise_equal: bool,
    /// Smallest subset where `f` and `⋂ g_i` differ.
    pub first_mismatch: Option<Subset>,
}

impl GenerationReport {
    pub fn containment_holds(&self) -> bool {
        self.containment_failures.is_empty()
    }

    pub fn separation_holds(&self) -> bool {
        self.separation_failures.is_empty()
    }

    pub fn generates(&self) -> bool {
        self.containment_holds() && self.separation_holds()
    }

    /// Both conditions agree with the direct pointwise comparison.
    pub fn consistent(&self) -> bool {
        self.generates() == self.pointwise_equal
    }
}

/// Tests the two generation conditions (every `S(g_i) ⊆ S(f)`, and every
/// closed `A` is separated from each `x ∉ A` by some `g_i`) and compares
/// them with the pointwise intersection.
pub fn check_generation(
    f: &ClosureOperator,
    generators: &[ClosureOperator],
) -> Result<GenerationReport> {
    if generators.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    for g in generators {
        f.same_ground(g)?;
    }
    let ground = f.ground();
    let f_table = f.tabulate();
    let g_tables: Vec<Vec<Subset>> = generators.iter().map(ClosureOperator::tabulate).collect();

    let mut containment_failures = Vec::new();
    for (i, table) in g_tables.iter().enumerate() {
        for a in ground.all_subsets() {
            if table[a.index()] == a && f_table[a.index()] != a {
                containment_failures.push((i, a));
            }
        }
    }

    let mut separation_failures = Vec::new();
    for a in ground.all_subsets().filter(|a| f_table[a.index()] == *a) {
        for x in (0..ground.len()).filter(|&x| !a.contains(x)) {
            if g_tables.iter().all(|t| t[a.index()].contains(x)) {
                separation_failures.push((a, x));
            }
        }
    }

    let first_mismatch = ground.all_subsets().find(|a| {
        let meet = g_tables
            .iter()
            .fold(ground.full(), |acc, t| acc.intersection(t[a.index()]));
        meet != f_table[a.index()]
    });

    Ok(GenerationReport {
        containment_failures,
        separation_failures,
        pointwise_equal: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// The weak order whose closed sets are the chain `∅ = B_0 ⊂ … ⊂ B_k = X`:
/// classes are the successive differences.
pub fn weak_order_from_chain(ground: Arc<GroundSet>, chain: &[Subset]) -> Result<WeakOrder> {
    if chain.len() < 2 || chain[0] != Subset::EMPTY || chain[chain.len() - 1] != ground.full() {
        return Err(Error::BadEndpoints);
    }
    for w in chain.windows(2) {
        ground.check(w[1])?;
        if !w[0].is_proper_subset_of(w[1]) {
            return Err(Error::NotAChain {
                lower: ground.format(w[0]),
                upper: ground.format(w[1]),
            });
        }
    }
    let classes = chain.windows(2).map(|w| w[1].difference(w[0])).collect();
    WeakOrder::from_classes(ground, classes)
}

pub fn chain_from_weak_order(order: &WeakOrder) -> Topology {
    let mut sets = Vec::with_capacity(order.classes.len() + 1);
    let mut acc = Subset::EMPTY;
    sets.push(acc);
    for class in &order.classes {
        acc = acc.union(*class);
        sets.push(acc);
    }
    Topology::from_sorted_unchecked(order.ground.clone(), sets)
}

/// The unique generating weak order when `topology` is totally ordered by
/// inclusion.
pub fn is_single_chain(topology: &Topology) -> Option<WeakOrder> {
    if !topology.is_chain() {
        return None;
    }
    weak_order_from_chain(topology.ground().clone(), topology.sets()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arc<GroundSet> {
        GroundSet::new(["x", "y", "z"]).unwrap()
    }

    fn order(g: &Arc<GroundSet>, classes: &[&[&str]]) -> WeakOrder {
        WeakOrder::from_classes(
            g.clone(),
            classes
                .iter()
                .map(|c| g.subset(c.iter()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn support_and_half_space() {
        let g = GroundSet::letters(3).unwrap();
        let o = order(&g, &[&["a"], &["b"], &["c"]]);
        let p = |s: &str| g.parse_compact(s).unwrap();
        assert_eq!(o.support_set(p("ab")), p("b"));
        assert_eq!(o.support_set(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(o.half_space_closure(p("a")), p("a"));
        assert_eq!(o.half_space_closure(p("b")), p("ab"));
        assert_eq!(o.half_space_closure(p("c")), p("abc"));
        assert_eq!(o.half_space_closure(p("ac")), p("abc"));
        assert_eq!(o.half_space_closure(Subset::EMPTY), Subset::EMPTY);

        let flat = WeakOrder::indifferent(g.clone());
        for a in g.all_subsets() {
            assert_eq!(flat.support_set(a), a);
        }
    }

    #[test]
    fn binary_classifier_branches() {
        let g = GroundSet::letters(3).unwrap();
        let p = |s: &str| g.parse_compact(s).unwrap();
        let c = BinaryClassifier::new(g.clone(), p("ab")).unwrap();
        assert_eq!(c.closure(p("a")), p("ab"));
        assert_eq!(c.closure(p("c")), g.full());
        assert_eq!(c.closure(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(
            c.operator().closed_sets().sets(),
            &[Subset::EMPTY, p("ab"), g.full()]
        );
        assert_eq!(c.operator(), c.as_weak_order().operator());
        assert!(BinaryClassifier::new(g.clone(), Subset::EMPTY).is_err());
        assert!(BinaryClassifier::new(g.clone(), g.full()).is_err());
    }

    #[test]
    fn two_orders_capture_a_preference_for_flexibility() {
        let g = xyz();
        let first = order(&g, &[&["z"], &["y"], &["x"]]);
        let second = order(&g, &[&["z"], &["x"], &["y"]]);
        let f = intersect_generate(&[first.operator(), second.operator()]).unwrap();
        let p = |s: &[&str]| g.subset(s.iter()).unwrap();
        assert_eq!(f.apply(p(&["x"])), p(&["x", "z"]));
        assert_eq!(f.apply(p(&["x", "y"])), g.full());
        assert_eq!(f.apply(p(&["x", "z"])), p(&["x", "z"]));
    }

    #[test]
    fn three_chains_generate_the_branching_lattice() {
        let g = GroundSet::letters(3).unwrap();
        let p = |s: &str| g.parse_compact(s).unwrap();
        let chains = [
            vec![p(""), p("a"), p("ab"), p("abc")],
            vec![p(""), p("b"), p("ab"), p("abc")],
            vec![p(""), p("c"), p("abc")],
        ];
        let gens: Vec<_> = chains
            .iter()
            .map(|c| weak_order_from_chain(g.clone(), c).unwrap().operator())
            .collect();
        let f = intersect_generate(&gens).unwrap();
        let expected: Vec<Subset> = ["", "a", "b", "ab", "c", "abc"]
            .iter()
            .map(|s| p(s))
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(f.closed_sets().sets(), expected.as_slice());
        let report = check_generation(&f, &gens).unwrap();
        assert!(report.generates() && report.pointwise_equal);
    }

    #[test]
    fn self_intersection_is_identity() {
        let g = GroundSet::letters(3).unwrap();
        let o = order(&g, &[&["b"], &["a", "c"]]).operator();
        assert_eq!(intersect_generate(&[o.clone(), o.clone()]).unwrap(), o);
        let report = check_generation(&o, std::slice::from_ref(&o)).unwrap();
        assert!(report.generates() && report.consistent());
    }

    #[test]
    fn missing_classifier_breaks_separation() {
        let g = GroundSet::letters(4).unwrap();
        let p = |s: &str| g.parse_compact(s).unwrap();
        let f = Topology::new(g.clone(), [p(""), p("a"), p("ab"), p("abc"), p("abcd")]).unwrap();
        let f = ClosureOperator::FromTopology(f);
        let gens = [
            BinaryClassifier::new(g.clone(), p("a")).unwrap().operator(),
            BinaryClassifier::new(g.clone(), p("abc"))
                .unwrap()
                .operator(),
        ];
        let report = check_generation(&f, &gens).unwrap();
        assert!(report.containment_holds());
        // {a,b} is closed and c ∉ {a,b}, but both generators send {a,b} to a superset containing c
        assert_eq!(report.separation_failures, vec![(p("ab"), 2)]);
        assert!(!report.pointwise_equal && report.consistent());
    }

    #[test]
    fn chain_weak_order_round_trip() {
        let g = GroundSet::letters(3).unwrap();
        let p = |s: &str| g.parse_compact(s).unwrap();
        let o = weak_order_from_chain(g.clone(), &[p(""), p("a"), p("ab"), p("abc")]).unwrap();
        assert_eq!(o.classes(), &[p("a"), p("b"), p("c")]);
        let t = chain_from_weak_order(&o);
        assert_eq!(is_single_chain(&t), Some(o.clone()));
        assert_eq!(o.operator().closed_sets(), t);

        let trivial = weak_order_from_chain(g.clone(), &[p(""), p("abc")]).unwrap();
        assert_eq!(trivial.class_count(), 1);

        assert!(matches!(
            weak_order_from_chain(g.clone(), &[p("a"), p("abc")]),
            Err(Error::BadEndpoints)
        ));
        assert!(matches!(
            weak_order_from_chain(g.clone(), &[p(""), p("ab"), p("ac"), p("abc")]),
            Err(Error::NotAChain { .. })
        ));
    }

    #[test]
    fn utilities_group_into_classes() {
        let g = GroundSet::letters(4).unwrap();
        let o = WeakOrder::from_utilities(g.clone(), |x| [5, 1, 5, 3][x]);
        let p = |s: &str| g.parse_compact(s).unwrap();
        assert_eq!(o.classes(), &[p("b"), p("d"), p("ac")]);
        // strictly increasing relabeling gives the same order
        let o2 = WeakOrder::from_utilities(g.clone(), |x| [5i64, 1, 5, 3][x] * 10 - 7);
        assert_eq!(o, o2);
        assert_eq!(o.utility(0), 3);
        assert!(o.weakly_prefers(0, 2) && o.weakly_prefers(2, 0));
    }

    #[test]
    fn invalid_partitions() {
        let g = GroundSet::letters(3).unwrap();
        let p = |s: &str| g.parse_compact(s).unwrap();
        assert!(WeakOrder::from_classes(g.clone(), vec![p("ab")]).is_err());
        assert!(WeakOrder::from_classes(g.clone(), vec![p("ab"), p("bc")]).is_err());
        assert!(WeakOrder::from_classes(g.clone(), vec![p("abc"), Subset::EMPTY]).is_err());
    }
}
