//! Meet-irreducible closed sets and the two complexity measures: the
//! minimum number of weak orders (MNWO) and of binary classifiers (MNBC)
//! needed to generate an operator.

pub mod oracle;

use std::sync::Arc;

use crate::closure::ClosureOperator;
use crate::error::{Error, Result};
use crate::generators::{check_generation, weak_order_from_chain, BinaryClassifier, WeakOrder};
use crate::ground::{GroundSet, Subset};
use crate::poset::FinitePoset;
use crate::topology::Topology;

pub use oracle::{all_weak_orders, oracle_mnbc, oracle_mnwo, MAX_ORACLE_ELEMENTS};

/// `P(f)` and `B(f)`, both ascending by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleSet {
    /// Closed sets that are not the intersection of other closed sets;
    /// `X` is always included.
    pub p_of_f: Vec<Subset>,
    /// `P(f)` without `∅` and `X`.
    pub b_of_f: Vec<Subset>,
}

/// `A ∈ P(f)` iff `A = X` or the intersection of the closed sets strictly
/// containing `A` is not `A` itself.
pub fn meet_irreducibles(topology: &Topology) -> IrreducibleSet {
    let ground = topology.ground();
    let full = ground.full();
    let sets = topology.sets();
    let p_of_f: Vec<Subset> = sets
        .iter()
        .copied()
        .filter(|&a| {
            a == full
                || sets
                    .iter()
                    .filter(|b| a.is_proper_subset_of(**b))
                    .fold(full, |acc, b| acc.intersection(*b))
                    != a
        })
        .collect();
    let b_of_f = p_of_f
        .iter()
        .copied()
        .filter(|&a| !a.is_empty() && a != full)
        .collect();
    IrreducibleSet { p_of_f, b_of_f }
}

/// Counts and verified minimal witnesses for one operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub ground: Arc<GroundSet>,
    pub mnwo: usize,
    pub mnbc: usize,
    pub width_s: usize,
    pub depth_s: usize,
    /// Number of nonempty closed sets.
    pub class_count: usize,
    pub irreducibles: IrreducibleSet,
    /// A largest antichain of `P(f)`, as many sets as `mnwo`.
    pub p_antichain: Vec<Subset>,
    pub weak_order_witness: Vec<WeakOrder>,
    pub binary_witness: Vec<BinaryClassifier>,
}

/// Computes MNWO as the width of `P(f)` and MNBC as `|B(f)|`, with
/// witnesses: each chain of a minimum chain cover of `P(f)`, extended by
/// `∅` and `X`, becomes one weak order; each member of `B(f)` becomes one
/// binary classifier. Both witnesses are checked against `f` before
/// returning.
pub fn complexity_profile(f: &ClosureOperator) -> Result<ComplexityProfile> {
    let ground = f.ground().clone();
    let topology = f.closed_sets();
    let irreducibles = meet_irreducibles(&topology);

    let p_poset = FinitePoset::inclusion(&ground, &irreducibles.p_of_f);
    let decomposition = p_poset.min_chain_cover();

    let full = ground.full();
    let weak_order_witness = decomposition
        .cover
        .chains
        .iter()
        .map(|chain| {
            let mut sets = vec![Subset::EMPTY];
            sets.extend(
                chain
                    .iter()
                    .map(|&i| irreducibles.p_of_f[i])
                    .filter(|s| !s.is_empty() && *s != full),
            );
            sets.push(full);
            weak_order_from_chain(ground.clone(), &sets)
        })
        .collect::<Result<Vec<_>>>()?;

    let binary_witness = irreducibles
        .b_of_f
        .iter()
        .map(|&c| BinaryClassifier::new(ground.clone(), c))
        .collect::<Result<Vec<_>>>()?;

    verify_weak_orders(f, &weak_order_witness)?;
    verify_binary(f, &binary_witness)?;

    let width_s = FinitePoset::inclusion(&ground, topology.sets()).width();
    Ok(ComplexityProfile {
        mnwo: weak_order_witness.len(),
        mnbc: binary_witness.len(),
        width_s,
        depth_s: topology.depth(),
        class_count: topology.len() - 1,
        p_antichain: decomposition
            .antichain
            .iter()
            .map(|&i| irreducibles.p_of_f[i])
            .collect(),
        irreducibles,
        weak_order_witness,
        binary_witness,
        ground,
    })
}

fn verify_weak_orders(f: &ClosureOperator, witness: &[WeakOrder]) -> Result<()> {
    let ops: Vec<ClosureOperator> = witness.iter().map(WeakOrder::operator).collect();
    let report = check_generation(f, &ops)?;
    if report.generates() && report.pointwise_equal {
        Ok(())
    } else {
        Err(Error::WitnessVerificationFailed(format!(
            "weak-order decomposition does not regenerate the operator (first mismatch {:?})",
            report.first_mismatch
        )))
    }
}

/// The empty family is taken to generate the trivial operator, so an
/// operator with `B(f) = ∅` is verified by checking it is trivial.
fn verify_binary(f: &ClosureOperator, witness: &[BinaryClassifier]) -> Result<()> {
    if witness.is_empty() {
        return if *f == ClosureOperator::trivial(f.ground().clone()) {
            Ok(())
        } else {
            Err(Error::WitnessVerificationFailed(
                "no binary classifiers for a nontrivial operator".into(),
            ))
        };
    }
    let ops: Vec<ClosureOperator> = witness.iter().map(BinaryClassifier::operator).collect();
    let report = check_generation(f, &ops)?;
    if report.generates() && report.pointwise_equal {
        Ok(())
    } else {
        Err(Error::WitnessVerificationFailed(format!(
            "binary decomposition does not regenerate the operator (first mismatch {:?})",
            report.first_mismatch
        )))
    }
}

/// How `S(f)` and `S(g)` compare under inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexityRelation {
    Equal,
    /// `S(g) ⊊ S(f)`.
    MoreComplex,
    /// `S(f) ⊊ S(g)`.
    LessComplex,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityComparison {
    pub relation: ComplexityRelation,
    /// A closed set of `g` that is not closed for `f`, if any.
    pub g_not_in_f: Option<Subset>,
    /// A closed set of `f` that is not closed for `g`, if any.
    pub f_not_in_g: Option<Subset>,
}

/// `f` is more complex than `g` when `S(g) ⊆ S(f)`.
pub fn more_complex(f: &ClosureOperator, g: &ClosureOperator) -> Result<ComplexityComparison> {
    f.same_ground(g)?;
    let sf = f.closed_sets();
    let sg = g.closed_sets();
    let g_not_in_f = sg.sets().iter().copied().find(|s| !sf.contains(*s));
    let f_not_in_g = sf.sets().iter().copied().find(|s| !sg.contains(*s));
    let relation = match (g_not_in_f, f_not_in_g) {
        (None, None) => ComplexityRelation::Equal,
        (None, Some(_)) => ComplexityRelation::MoreComplex,
        (Some(_), None) => ComplexityRelation::LessComplex,
        (Some(_), Some(_)) => ComplexityRelation::Incomparable,
    };
    Ok(ComplexityComparison {
        relation,
        g_not_in_f,
        f_not_in_g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(g: &Arc<GroundSet>, sets: &[&str]) -> ClosureOperator {
        let sets = sets.iter().map(|s| g.parse_compact(s).unwrap());
        ClosureOperator::FromTopology(Topology::new(g.clone(), sets).unwrap())
    }

    fn masks(g: &Arc<GroundSet>, sets: &[&str]) -> Vec<Subset> {
        let mut v: Vec<Subset> = sets.iter().map(|s| g.parse_compact(s).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn irreducibles_of_the_three_atom_lattice() {
        let g = GroundSet::letters(3).unwrap();
        let f = op(&g, &["", "a", "b", "c", "ab", "bc", "abc"]);
        let irr = meet_irreducibles(&f.closed_sets());
        assert_eq!(irr.p_of_f, masks(&g, &["a", "c", "ab", "bc", "abc"]));
        assert_eq!(irr.b_of_f, masks(&g, &["a", "c", "ab", "bc"]));
    }

    #[test]
    fn empty_set_can_be_irreducible() {
        let g = GroundSet::letters(4).unwrap();
        let f = op(&g, &["", "a", "ab", "abcd"]);
        let irr = meet_irreducibles(&f.closed_sets());
        assert_eq!(irr.p_of_f, masks(&g, &["", "a", "ab", "abcd"]));
        assert_eq!(irr.b_of_f, masks(&g, &["a", "ab"]));
    }

    #[test]
    fn trivial_topology_irreducibles() {
        let g = GroundSet::letters(3).unwrap();
        let irr = meet_irreducibles(&Topology::trivial(g.clone()));
        // ∅'s only strict closed superset is X
        assert_eq!(irr.p_of_f, vec![Subset::EMPTY, g.full()]);
        assert!(irr.b_of_f.is_empty());
        let profile = complexity_profile(&ClosureOperator::trivial(g)).unwrap();
        assert_eq!((profile.mnwo, profile.mnbc), (1, 0));
    }

    #[test]
    fn profiles_of_the_four_small_operators() {
        let g = GroundSet::letters(4).unwrap();
        let cases: [(&[&str], usize, usize); 4] = [
            (&["", "a", "b", "abcd"], 2, 2),
            (&["", "a", "ab", "abcd"], 1, 2),
            (&["", "a", "ab", "ac", "abcd"], 2, 2),
            (&["", "a", "ab", "abc", "abcd"], 1, 3),
        ];
        for (sets, mnwo, mnbc) in cases {
            let p = complexity_profile(&op(&g, sets)).unwrap();
            assert_eq!((p.mnwo, p.mnbc), (mnwo, mnbc), "{sets:?}");
            assert_eq!(p.weak_order_witness.len(), p.mnwo);
            assert_eq!(p.binary_witness.len(), p.mnbc);
        }
    }

    #[test]
    fn width_of_irreducibles_can_beat_width_of_topology() {
        let g = GroundSet::letters(3).unwrap();
        let p = complexity_profile(&op(&g, &["", "a", "b", "c", "ab", "bc", "abc"])).unwrap();
        assert_eq!(p.mnwo, 2);
        assert_eq!(p.width_s, 3);
        assert_eq!(p.mnbc, 4);
        assert_eq!(p.p_antichain.len(), 2);
    }

    #[test]
    fn comparisons() {
        let g = GroundSet::letters(4).unwrap();
        let f1 = op(&g, &["", "a", "b", "abcd"]);
        let f2 = op(&g, &["", "a", "ab", "abcd"]);
        let t = ClosureOperator::trivial(g.clone());
        assert_eq!(
            more_complex(&f1, &t).unwrap().relation,
            ComplexityRelation::MoreComplex
        );
        assert_eq!(
            more_complex(&t, &f1).unwrap().relation,
            ComplexityRelation::LessComplex
        );
        assert_eq!(
            more_complex(&f1, &f1).unwrap().relation,
            ComplexityRelation::Equal
        );
        let c = more_complex(&f1, &f2).unwrap();
        assert_eq!(c.relation, ComplexityRelation::Incomparable);
        assert_eq!(c.g_not_in_f, Some(g.parse_compact("ab").unwrap()));
        assert_eq!(c.f_not_in_g, Some(g.parse_compact("b").unwrap()));
    }
}
