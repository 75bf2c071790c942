//! Finished output documents, shared by the command line and the C API.
//!
//! Each function returns the serialized document plus whether every check
//! it carries passed. Errors that stand for a failed check rather than bad
//! input can be turned into a document with [`failure_report`].

use serde::Serialize;
use serde_json::json;

use crate::closure::{validate_closure, ClosureOperator, OperatorTable};
use crate::complexity::complexity_profile;
use crate::error::{Error, Result};
use crate::generators::{check_generation, BinaryClassifier, WeakOrder};
use crate::json::{
    self, AdditiveDoc, AxiomDoc, AxiomFailureDoc, BinaryDoc, ComplexityDoc, GenerationDoc,
    GeneratorsDoc, HasseDoc, KrepsDoc, LabelingDoc, MobiusDoc, TopologyDoc, ValidationDoc,
    WeakOrderDoc,
};
use crate::labeling::{canonical_labeling, minimal_labeling};
use crate::menus::{
    additive_representation, kreps_operator_with_diagnostics, kreps_representation, MenuPreference,
};
use crate::poset::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub holds: bool,
}

impl Report {
    fn new<T: Serialize>(doc: &T, holds: bool) -> Self {
        Report {
            text: json::to_string(doc),
            holds,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    WeakOrders,
    Binary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingKind {
    Minimal,
    Canonical,
}

pub fn validation(table: &OperatorTable) -> Report {
    let report = validate_closure(table);
    Report::new(&ValidationDoc::from_report(&report), report.is_closure())
}

pub fn topology(f: &ClosureOperator) -> Report {
    Report::new(&TopologyDoc::from_topology(&f.closed_sets()), true)
}

pub fn complexity(f: &ClosureOperator) -> Result<Report> {
    Ok(Report::new(
        &ComplexityDoc::from_profile(&complexity_profile(f)?),
        true,
    ))
}

/// A minimum generating family with its generation check attached.
pub fn decomposition(f: &ClosureOperator, kind: DecompositionKind) -> Result<Report> {
    let profile = complexity_profile(f)?;
    let ground = f.ground();
    let (weak_orders, binary_classifiers, ops): (
        Vec<WeakOrderDoc>,
        Vec<BinaryDoc>,
        Vec<ClosureOperator>,
    ) = match kind {
        DecompositionKind::WeakOrders => (
            profile
                .weak_order_witness
                .iter()
                .map(WeakOrderDoc::from_order)
                .collect(),
            Vec::new(),
            profile
                .weak_order_witness
                .iter()
                .map(WeakOrder::operator)
                .collect(),
        ),
        DecompositionKind::Binary => (
            Vec::new(),
            profile
                .binary_witness
                .iter()
                .map(|b| BinaryDoc {
                    cutoff: ground.names(b.cutoff()),
                })
                .collect(),
            profile
                .binary_witness
                .iter()
                .map(BinaryClassifier::operator)
                .collect(),
        ),
    };
    // no classifiers at all: the operator is trivial, which
    // complexity_profile has already checked
    let verification = if ops.is_empty() {
        GenerationDoc {
            containment_holds: true,
            separation_holds: true,
            pointwise_equal: true,
            containment_failures: Vec::new(),
            separation_failures: Vec::new(),
        }
    } else {
        GenerationDoc::from_report(ground, &check_generation(f, &ops)?)
    };
    let holds = verification.pointwise_equal
        && verification.containment_holds
        && verification.separation_holds;
    let doc = GeneratorsDoc {
        elements: Some(ground.elements().to_vec()),
        weak_orders,
        binary_classifiers,
        verification: Some(verification),
    };
    Ok(Report::new(&doc, holds))
}

pub fn labeling(f: &ClosureOperator, kind: LabelingKind) -> Report {
    let lab = match kind {
        LabelingKind::Minimal => minimal_labeling(f),
        LabelingKind::Canonical => canonical_labeling(f),
    };
    Report::new(&LabelingDoc::from_labeling(&lab), true)
}

/// The Kreps representation, or the axiom report when the preference
/// fails flexibility or submodularity.
pub fn kreps(pref: &MenuPreference) -> Result<Report> {
    let k = match kreps_operator_with_diagnostics(pref) {
        Ok(k) => k,
        Err(Error::AxiomsViolated(report)) => {
            let doc = AxiomFailureDoc {
                elements: pref.ground().elements().to_vec(),
                axioms: AxiomDoc::from_report(pref.ground(), &report),
            };
            return Ok(Report::new(&doc, false));
        }
        Err(e) => return Err(e),
    };
    let rep = kreps_representation(pref)?;
    let doc = KrepsDoc::new(pref, &rep, &k.diagnostics);
    let holds = doc.verification.holds;
    Ok(Report::new(&doc, holds))
}

pub fn additive(pref: &MenuPreference, f: &ClosureOperator) -> Result<Report> {
    let rep = additive_representation(pref, f)?;
    let doc = AdditiveDoc::new(f, &rep);
    let holds = doc.verification.exact;
    Ok(Report::new(&doc, holds))
}

/// Nonzero Möbius values of the closed sets under inclusion.
pub fn mobius(f: &ClosureOperator) -> Report {
    let t = f.closed_sets();
    let poset = FinitePoset::inclusion(t.ground(), t.sets());
    Report::new(&MobiusDoc::new(&t, &poset.mobius()), true)
}

/// Hasse diagram of the closed sets, as JSON or Graphviz DOT.
pub fn hasse(f: &ClosureOperator, dot: bool) -> Report {
    let t = f.closed_sets();
    let poset = FinitePoset::inclusion(t.ground(), t.sets());
    if dot {
        Report {
            text: poset.to_dot("topology"),
            holds: true,
        }
    } else {
        Report::new(&HasseDoc::new(&t, &poset), true)
    }
}

/// Machine-readable report for errors that mean a check failed rather
/// than that the input was unreadable.
pub fn failure_report(e: &Error) -> Option<Report> {
    let doc = match e {
        Error::NotAClosure(r) => return Some(Report::new(&ValidationDoc::from_report(r), false)),
        Error::AxiomsViolated(_) => return None,
        Error::NotIntersectionClosed { a, b, meet } => json!({
            "check": "intersection_closed",
            "holds": false,
            "witness": { "a": a, "b": b, "meet": meet },
        }),
        Error::MissingTopBottom { missing } => json!({
            "check": "contains_empty_and_ground_set",
            "holds": false,
            "witness": { "missing": missing },
        }),
        Error::DoesNotRespect { menu, closure } => json!({
            "check": "respects",
            "holds": false,
            "witness": { "menu": menu, "closure": closure },
        }),
        Error::WitnessVerificationFailed(msg) => json!({
            "check": "verification",
            "holds": false,
            "witness": msg,
        }),
        _ => return None,
    };
    Some(Report::new(&doc, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::topology::Topology;

    #[test]
    fn trivial_decomposition_is_empty_and_holds() {
        let g = GroundSet::letters(2).unwrap();
        let r = decomposition(&ClosureOperator::trivial(g), DecompositionKind::Binary).unwrap();
        assert!(r.holds);
        let doc: GeneratorsDoc = json::from_str(&r.text).unwrap();
        assert!(doc.binary_classifiers.is_empty());
    }

    #[test]
    fn failures_become_reports() {
        let g = GroundSet::letters(3).unwrap();
        let e = Topology::new(
            g.clone(),
            [0b000, 0b011, 0b110, 0b111].map(crate::ground::Subset::from_bits),
        )
        .unwrap_err();
        let r = failure_report(&e).unwrap();
        assert!(!r.holds);
        assert!(r.text.contains("intersection_closed"));
        assert!(failure_report(&Error::EmptyGroundSet).is_none());
    }
}
