//! Expected values worked out by hand and frozen here.

mod common;

use closure_ops::complexity::{complexity_profile, meet_irreducibles, oracle_mnbc, oracle_mnwo};
use closure_ops::labeling::{classifier_from_labeling, minimal_labeling, Labeling};
use closure_ops::menus::{
    additive_representation, check_axioms, kreps_operator, kreps_representation, respects,
};
use closure_ops::{ClosureOperator, GroundSet, MenuPreference, Subset};
use common::*;
use num_rational::BigRational;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn pets_irreducibles() {
    // {a} = {a,b} ∩ {a,c} and ∅ = {b} ∩ {c}; everything else below X is irreducible
    let g = letters(4);
    let f = operator(&g, &["", "a", "b", "c", "d", "ab", "ac", "abd", "abcd"]);
    let p = complexity_profile(&f).unwrap();
    assert_eq!(
        p.irreducibles.b_of_f,
        sets(&g, &["b", "ab", "c", "ac", "d", "abd"])
    );
    assert_eq!(p.mnbc, 6);
    // {b}, {c}, {d} is a largest antichain of P(f)
    assert_eq!(p.mnwo, 3);
    assert_eq!(oracle_mnwo(&f).unwrap(), 3);
    assert_eq!(oracle_mnbc(&f).unwrap(), 6);
    let min = minimal_labeling(&f);
    assert_eq!(min.labels().len(), 6);
    assert_eq!(classifier_from_labeling(&min), f);
}

#[test]
fn branching_topology_irreducibles() {
    let g = letters(3);
    let irr = meet_irreducibles(&topology(&g, &["", "a", "b", "c", "ab", "abc"]));
    assert_eq!(irr.p_of_f, sets(&g, &["a", "b", "ab", "c", "abc"]));
}

#[test]
fn bob_operator_and_irreducibles() {
    let g = GroundSet::new(["x", "y", "z"]).unwrap();
    let u = [5, 5, 6, 2, 5, 5, 6];
    let pref = MenuPreference::from_fn(g.clone(), |a| int(u[a.index() - 1]));
    let f = kreps_operator(&pref).unwrap();
    let s = |names: &[&str]| g.subset(names).unwrap();
    assert_eq!(f.apply(s(&["y"])), s(&["y", "z"]));
    assert_eq!(f.apply(s(&["z"])), s(&["z"]));
    let irr = meet_irreducibles(&f.closed_sets());
    assert_eq!(
        irr.p_of_f,
        vec![Subset::EMPTY, s(&["x", "z"]), s(&["y", "z"]), g.full()]
    );
    let rep = kreps_representation(&pref).unwrap();
    assert_eq!((rep.states.len(), rep.p_size), (2, 4));
}

#[test]
fn cardinality_utility_status() {
    // A ≈ A ∪ B only when B ⊆ A, so submodularity holds vacuously
    let g = letters(3);
    let pref = MenuPreference::from_fn(g.clone(), |a| int(a.len() as i64));
    let report = check_axioms(&pref);
    assert!(report.flexibility_holds() && report.submodularity_holds());
    assert_eq!(
        kreps_operator(&pref).unwrap(),
        ClosureOperator::identity(g.clone())
    );
    let r = respects(&pref, &ClosureOperator::trivial(g.clone())).unwrap();
    assert_eq!(r.witness, Some(Subset::singleton(0)));
}

#[test]
fn identity_additive_state_count() {
    for (n, states) in [(1, 2), (2, 6), (3, 14), (4, 30)] {
        let g = letters(n);
        let pref = MenuPreference::from_fn(g.clone(), |a| int(a.bits() as i64 % 3));
        let rep = additive_representation(&pref, &ClosureOperator::identity(g)).unwrap();
        assert_eq!(rep.state_count(), states);
        assert!(rep.verification.exact());
    }
}

#[test]
fn additive_on_a_chain_by_hand() {
    // S = {∅, a, ab, abc}; U(a)=1, U(ab)=3, U(abc)=2 gives h(abc)=2, h(ab)=1, h(a)=-2
    let g = letters(3);
    let f = operator(&g, &["", "a", "ab", "abc"]);
    let u = |a: Subset| match f.apply(a).bits() {
        0b001 => int(1),
        0b011 => int(3),
        _ => int(2),
    };
    let pref = MenuPreference::from_fn(g.clone(), u);
    let rep = additive_representation(&pref, &f).unwrap();
    let h: Vec<(u32, BigRational)> = rep.h.iter().map(|(s, v)| (s.bits(), v.clone())).collect();
    assert_eq!(h, vec![(0b001, int(-2)), (0b011, int(1)), (0b111, int(2))]);
    assert_eq!(rep.positive_states[0].weight, int(2));
    assert_eq!(rep.negative_states[2].weight, int(2));
    assert!(rep.verification.exact());
}

#[test]
fn disjoint_labels_close_pairs_to_everything() {
    let g = letters(4);
    let lab = Labeling::new(
        g.clone(),
        (0..4).map(|i| format!("l{i}")).collect(),
        (0..4).map(|i| vec![i]).collect(),
    )
    .unwrap();
    let f = classifier_from_labeling(&lab);
    assert_eq!(f.closed_sets().len(), 6);
    let p = complexity_profile(&f).unwrap();
    assert_eq!((p.mnwo, p.mnbc), (4, 4));
}
