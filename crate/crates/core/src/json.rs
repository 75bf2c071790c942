//! JSON documents read and written by the command line and the C API.
//!
//! Subsets are always lists of element names in ground-set order, so every
//! document can be read back without any extra context.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::closure::{ClosureOperator, OperatorTable, ValidationReport, Violation};
use crate::complexity::ComplexityProfile;
use crate::error::{Error, Result};
use crate::generators::{BinaryClassifier, GenerationReport, WeakOrder};
use crate::ground::{GroundSet, Subset};
use crate::labeling::Labeling;
use crate::menus::{
    AdditiveRepresentation, AdditiveState, AxiomReport, KrepsDiagnostics, KrepsRepresentation,
    MenuPreference,
};
use crate::poset::{FinitePoset, MobiusTable};
use crate::rational::{format_rational, parse_rational};
use crate::topology::Topology;

pub type Names = Vec<String>;

fn names(ground: &GroundSet, s: Subset) -> Names {
    ground.names(s)
}

fn subset(ground: &GroundSet, names: &[String]) -> Result<Subset> {
    ground.subset(names)
}

fn rational_text(q: &BigRational) -> String {
    format_rational(q)
}

/// Reads a document from JSON text.
pub fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub elements: Names,
    pub closed_sets: Vec<Names>,
}

impl TopologyDoc {
    pub fn from_topology(t: &Topology) -> Self {
        let g = t.ground();
        TopologyDoc {
            elements: g.elements().to_vec(),
            closed_sets: t.sets().iter().map(|&s| names(g, s)).collect(),
        }
    }

    pub fn to_topology(&self) -> Result<Topology> {
        let ground = GroundSet::new(&self.elements)?;
        let sets = self
            .closed_sets
            .iter()
            .map(|s| subset(&ground, s))
            .collect::<Result<Vec<_>>>()?;
        Topology::new(ground, sets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub from: Names,
    pub to: Names,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub elements: Names,
    pub map: Vec<TableEntry>,
}

impl TableDoc {
    pub fn from_operator(f: &ClosureOperator) -> Self {
        let g = f.ground();
        TableDoc {
            elements: g.elements().to_vec(),
            map: g
                .all_subsets()
                .map(|a| TableEntry {
                    from: names(g, a),
                    to: names(g, f.apply(a)),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<OperatorTable> {
        let ground = GroundSet::new(&self.elements)?;
        let entries = self
            .map
            .iter()
            .map(|e| Ok((subset(&ground, &e.from)?, subset(&ground, &e.to)?)))
            .collect::<Result<Vec<_>>>()?;
        OperatorTable::from_entries(ground, entries)
    }
}

/// [`operator_from_value`] on JSON text.
pub fn operator_from_str(text: &str) -> Result<ClosureOperator> {
    operator_from_value(&serde_json::from_str(text)?)
}

/// Reads an operator given either as a topology (`closed_sets`) or as a
/// full table (`map`). Tables are validated.
pub fn operator_from_value(value: &Value) -> Result<ClosureOperator> {
    match value {
        Value::Object(obj) if obj.contains_key("closed_sets") => {
            let doc: TopologyDoc = serde_json::from_value(value.clone())?;
            Ok(ClosureOperator::FromTopology(doc.to_topology()?))
        }
        Value::Object(obj) if obj.contains_key("map") => {
            let doc: TableDoc = serde_json::from_value(value.clone())?;
            ClosureOperator::from_table(doc.to_table()?)
        }
        _ => Err(Error::Document(
            "expected an operator document with `closed_sets` or `map`".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum ViolationDoc {
    EmptyNotFixed {
        image: Names,
    },
    Extensivity {
        set: Names,
        image: Names,
    },
    Idempotence {
        set: Names,
        image: Names,
        reimage: Names,
    },
    Monotonicity {
        smaller: Names,
        larger: Names,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub elements: Names,
    pub is_closure: bool,
    pub violations: Vec<ViolationDoc>,
}

impl ValidationDoc {
    pub fn from_report(r: &ValidationReport) -> Self {
        let g = &r.ground;
        let violations = r
            .violations
            .iter()
            .map(|v| match *v {
                Violation::EmptyNotFixed { image } => ViolationDoc::EmptyNotFixed {
                    image: names(g, image),
                },
                Violation::Extensivity { set, image } => ViolationDoc::Extensivity {
                    set: names(g, set),
                    image: names(g, image),
                },
                Violation::Idempotence {
                    set,
                    image,
                    reimage,
                } => ViolationDoc::Idempotence {
                    set: names(g, set),
                    image: names(g, image),
                    reimage: names(g, reimage),
                },
                Violation::Monotonicity { smaller, larger } => ViolationDoc::Monotonicity {
                    smaller: names(g, smaller),
                    larger: names(g, larger),
                },
            })
            .collect();
        ValidationDoc {
            elements: g.elements().to_vec(),
            is_closure: r.is_closure(),
            violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakOrderDoc {
    pub classes_worst_first: Vec<Names>,
}

impl WeakOrderDoc {
    pub fn from_order(o: &WeakOrder) -> Self {
        WeakOrderDoc {
            classes_worst_first: o.classes().iter().map(|&c| names(o.ground(), c)).collect(),
        }
    }

    pub fn to_order(&self, ground: &Arc<GroundSet>) -> Result<WeakOrder> {
        let classes = self
            .classes_worst_first
            .iter()
            .map(|c| subset(ground, c))
            .collect::<Result<Vec<_>>>()?;
        WeakOrder::from_classes(ground.clone(), classes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryDoc {
    pub cutoff: Names,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationDoc {
    pub containment_holds: bool,
    pub separation_holds: bool,
    pub pointwise_equal: bool,
    /// `[generator index, closed set]`.
    pub containment_failures: Vec<(usize, Names)>,
    /// `[closed set, element]`.
    pub separation_failures: Vec<(Names, String)>,
}

impl GenerationDoc {
    pub fn from_report(ground: &GroundSet, r: &GenerationReport) -> Self {
        GenerationDoc {
            containment_holds: r.containment_holds(),
            separation_holds: r.separation_holds(),
            pointwise_equal: r.pointwise_equal,
            containment_failures: r
                .containment_failures
                .iter()
                .map(|&(i, s)| (i, names(ground, s)))
                .collect(),
            separation_failures: r
                .separation_failures
                .iter()
                .map(|&(s, x)| (names(ground, s), ground.name(x).to_string()))
                .collect(),
        }
    }
}

/// A list of generators. Without `elements`, the ground set is read off
/// the first weak order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Names>,
    #[serde(default)]
    pub weak_orders: Vec<WeakOrderDoc>,
    #[serde(default)]
    pub binary_classifiers: Vec<BinaryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<GenerationDoc>,
}

impl GeneratorsDoc {
    pub fn ground(&self) -> Result<Arc<GroundSet>> {
        if let Some(elements) = &self.elements {
            return GroundSet::new(elements);
        }
        let first = self.weak_orders.first().ok_or_else(|| {
            Error::Document("`elements` is required when no weak order is given".into())
        })?;
        GroundSet::new(first.classes_worst_first.iter().flatten())
    }

    pub fn to_operators(&self) -> Result<(Arc<GroundSet>, Vec<ClosureOperator>)> {
        let ground = self.ground()?;
        let mut ops = Vec::new();
        for w in &self.weak_orders {
            ops.push(w.to_order(&ground)?.operator());
        }
        for b in &self.binary_classifiers {
            ops.push(
                BinaryClassifier::new(ground.clone(), subset(&ground, &b.cutoff)?)?.operator(),
            );
        }
        Ok((ground, ops))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Names>,
    pub labels: Names,
    /// Element name to its labels. Without `elements`, the keys in sorted
    /// order form the ground set.
    pub phi: BTreeMap<String, Names>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_sets: Option<Vec<Names>>,
}

impl LabelingDoc {
    pub fn from_labeling(l: &Labeling) -> Self {
        let g = l.ground();
        LabelingDoc {
            elements: Some(g.elements().to_vec()),
            labels: l.labels().to_vec(),
            phi: (0..g.len())
                .map(|x| {
                    (
                        g.name(x).to_string(),
                        l.phi_names(x).into_iter().map(String::from).collect(),
                    )
                })
                .collect(),
            label_sets: l
                .label_sets()
                .map(|sets| sets.iter().map(|&s| names(g, s)).collect()),
        }
    }

    pub fn to_labeling(&self) -> Result<Labeling> {
        let ground = match &self.elements {
            Some(e) => GroundSet::new(e)?,
            None => GroundSet::new(self.phi.keys())?,
        };
        let lab = Labeling::from_names(ground.clone(), self.labels.clone(), self.phi.iter())?;
        match &self.label_sets {
            Some(sets) => {
                let sets = sets
                    .iter()
                    .map(|s| subset(&ground, s))
                    .collect::<Result<Vec<_>>>()?;
                lab.with_label_sets(sets)
            }
            None => Ok(lab),
        }
    }
}

/// A rational written as a string (`"3/2"`, `"1.5"`) or a JSON number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Value", into = "String")]
pub struct Rational(pub BigRational);

impl TryFrom<Value> for Rational {
    type Error = String;

    fn try_from(v: Value) -> std::result::Result<Self, String> {
        let text = match v {
            Value::String(s) => s,
            Value::Number(n) => n.to_string(),
            other => return Err(format!("expected a rational, found {other}")),
        };
        parse_rational(&text)
            .map(Rational)
            .map_err(|e| e.to_string())
    }
}

impl From<Rational> for String {
    fn from(r: Rational) -> String {
        rational_text(&r.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UtilityEntry {
    pub menu: Names,
    pub value: Rational,
}

/// Cardinal utilities, or an ordinal ranking of nonempty menus (worst
/// group first) turned into utilities `1, 2, …` by rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreferenceDoc {
    pub elements: Names,
    #[serde(default)]
    pub utilities: Vec<UtilityEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranking_worst_first: Option<Vec<Vec<Names>>>,
}

impl PreferenceDoc {
    pub fn from_preference(p: &MenuPreference) -> Self {
        let g = p.ground();
        PreferenceDoc {
            elements: g.elements().to_vec(),
            utilities: p
                .entries()
                .map(|(a, v)| UtilityEntry {
                    menu: names(g, a),
                    value: Rational(v.clone()),
                })
                .collect(),
            ranking_worst_first: None,
        }
    }

    pub fn to_preference(&self) -> Result<MenuPreference> {
        let ground = GroundSet::new(&self.elements)?;
        match &self.ranking_worst_first {
            Some(groups) => {
                if !self.utilities.is_empty() {
                    return Err(Error::Document(
                        "give either `utilities` or `ranking_worst_first`, not both".into(),
                    ));
                }
                let groups = groups
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|m| subset(&ground, m))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                MenuPreference::from_ranking(ground, &groups)
            }
            None => {
                let entries = self
                    .utilities
                    .iter()
                    .map(|e| Ok((subset(&ground, &e.menu)?, e.value.0.clone())))
                    .collect::<Result<Vec<_>>>()?;
                MenuPreference::new(ground, entries)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityDoc {
    pub elements: Names,
    pub mnwo: usize,
    pub mnbc: usize,
    pub width_s: usize,
    pub depth_s: usize,
    pub class_count: usize,
    pub p_size: usize,
    pub p_of_f: Vec<Names>,
    pub b_of_f: Vec<Names>,
    pub p_antichain: Vec<Names>,
    pub weak_order_witness: Vec<WeakOrderDoc>,
    pub binary_witness: Vec<BinaryDoc>,
}

impl ComplexityDoc {
    pub fn from_profile(p: &ComplexityProfile) -> Self {
        let g = &p.ground;
        let list = |sets: &[Subset]| sets.iter().map(|&s| names(g, s)).collect::<Vec<_>>();
        ComplexityDoc {
            elements: g.elements().to_vec(),
            mnwo: p.mnwo,
            mnbc: p.mnbc,
            width_s: p.width_s,
            depth_s: p.depth_s,
            class_count: p.class_count,
            p_size: p.irreducibles.p_of_f.len(),
            p_of_f: list(&p.irreducibles.p_of_f),
            b_of_f: list(&p.irreducibles.b_of_f),
            p_antichain: list(&p.p_antichain),
            weak_order_witness: p
                .weak_order_witness
                .iter()
                .map(WeakOrderDoc::from_order)
                .collect(),
            binary_witness: p
                .binary_witness
                .iter()
                .map(|b| BinaryDoc {
                    cutoff: names(g, b.cutoff()),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomDoc {
    pub flexibility_holds: bool,
    pub flexibility_failures: usize,
    /// `[A, B]` with `B ⊂ A` and `U(B) > U(A)`.
    pub flexibility: Vec<(Names, Names)>,
    pub submodularity_holds: bool,
    pub submodularity_failures: usize,
    /// `[A, B, C]` with `A ≈ A ∪ B` but `A ∪ C ≉ A ∪ B ∪ C`.
    pub submodularity: Vec<(Names, Names, Names)>,
}

impl AxiomDoc {
    pub fn from_report(g: &GroundSet, r: &AxiomReport) -> Self {
        AxiomDoc {
            flexibility_holds: r.flexibility_holds(),
            flexibility_failures: r.flexibility_failures,
            flexibility: r
                .flexibility
                .iter()
                .map(|&(a, b)| (names(g, a), names(g, b)))
                .collect(),
            submodularity_holds: r.submodularity_holds(),
            submodularity_failures: r.submodularity_failures,
            submodularity: r
                .submodularity
                .iter()
                .map(|&(a, b, c)| (names(g, a), names(g, b), names(g, c)))
                .collect(),
        }
    }
}

/// Report emitted when a preference fails the axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailureDoc {
    pub elements: Names,
    pub axioms: AxiomDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrepsStateDoc {
    pub label: String,
    pub classes_worst_first: Vec<Names>,
    /// `U(a, s)` per element, worst class = 1.
    pub utilities: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MenuRowDoc {
    pub menu: Names,
    pub utility: Rational,
    pub closure: Names,
    pub signature: Vec<u32>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRankDoc {
    pub signature: Vec<u32>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrepsVerificationDoc {
    pub holds: bool,
    pub operator_checks_hold: bool,
    pub order_mismatch: Option<(Names, Names)>,
    pub signature_failure: Option<(Names, Names)>,
    pub monotonicity_failure: Option<(Vec<u32>, Vec<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrepsDoc {
    pub style: String,
    pub elements: Names,
    pub closed_sets: Vec<Names>,
    pub state_count: usize,
    pub p_size: usize,
    pub states: Vec<KrepsStateDoc>,
    pub aggregator: Vec<SignatureRankDoc>,
    pub menus: Vec<MenuRowDoc>,
    pub verification: KrepsVerificationDoc,
}

impl KrepsDoc {
    pub fn new(
        pref: &MenuPreference,
        rep: &KrepsRepresentation,
        checks: &KrepsDiagnostics,
    ) -> Self {
        let g = &rep.ground;
        let pair = |p: Option<(Subset, Subset)>| p.map(|(a, b)| (names(g, a), names(g, b)));
        let v = &rep.verification;
        KrepsDoc {
            style: "kreps".into(),
            elements: g.elements().to_vec(),
            closed_sets: rep
                .operator
                .closed_sets()
                .sets()
                .iter()
                .map(|&s| names(g, s))
                .collect(),
            state_count: rep.states.len(),
            p_size: rep.p_size,
            states: rep
                .states
                .iter()
                .enumerate()
                .map(|(i, s)| KrepsStateDoc {
                    label: format!("s{}", i + 1),
                    classes_worst_first: WeakOrderDoc::from_order(s).classes_worst_first,
                    utilities: (0..g.len())
                        .map(|x| (g.name(x).to_string(), s.utility(x)))
                        .collect(),
                })
                .collect(),
            aggregator: rep
                .aggregator
                .iter()
                .map(|(s, &r)| SignatureRankDoc {
                    signature: s.clone(),
                    rank: r,
                })
                .collect(),
            menus: g
                .nonempty_subsets()
                .map(|a| MenuRowDoc {
                    menu: names(g, a),
                    utility: Rational(pref.u(a).clone()),
                    closure: names(g, rep.operator.apply(a)),
                    signature: rep.signature(a),
                    rank: rep.rank(a).expect("every menu's signature is achieved"),
                })
                .collect(),
            verification: KrepsVerificationDoc {
                holds: v.holds() && checks.all_hold(),
                operator_checks_hold: checks.all_hold(),
                order_mismatch: pair(v.order_mismatch),
                signature_failure: pair(v.signature_failure),
                monotonicity_failure: v.monotonicity_failure.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveStateDoc {
    pub label: String,
    pub closed_set: Names,
    pub weight: Rational,
    /// `U(x, s)` per element.
    pub utilities: BTreeMap<String, Rational>,
}

impl AdditiveStateDoc {
    fn new(g: &GroundSet, s: &AdditiveState) -> Self {
        AdditiveStateDoc {
            label: s.label.clone(),
            closed_set: names(g, s.closed_set),
            weight: Rational(s.weight.clone()),
            utilities: (0..g.len())
                .map(|x| (g.name(x).to_string(), Rational(s.utility(x))))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusValueDoc {
    pub set: Names,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveVerificationDoc {
    pub exact: bool,
    pub mobius_consistent: bool,
    pub mismatches: Vec<Names>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveDoc {
    pub style: String,
    pub elements: Names,
    pub closed_sets: Vec<Names>,
    pub state_count: usize,
    pub h: Vec<MobiusValueDoc>,
    pub positive_states: Vec<AdditiveStateDoc>,
    pub negative_states: Vec<AdditiveStateDoc>,
    pub verification: AdditiveVerificationDoc,
}

impl AdditiveDoc {
    pub fn new(f: &ClosureOperator, rep: &AdditiveRepresentation) -> Self {
        let g = &rep.ground;
        AdditiveDoc {
            style: "additive".into(),
            elements: g.elements().to_vec(),
            closed_sets: f
                .closed_sets()
                .sets()
                .iter()
                .map(|&s| names(g, s))
                .collect(),
            state_count: rep.state_count(),
            h: rep
                .h
                .iter()
                .map(|(s, v)| MobiusValueDoc {
                    set: names(g, *s),
                    value: Rational(v.clone()),
                })
                .collect(),
            positive_states: rep
                .positive_states
                .iter()
                .map(|s| AdditiveStateDoc::new(g, s))
                .collect(),
            negative_states: rep
                .negative_states
                .iter()
                .map(|s| AdditiveStateDoc::new(g, s))
                .collect(),
            verification: AdditiveVerificationDoc {
                exact: rep.verification.exact(),
                mobius_consistent: rep.verification.mobius_consistent,
                mismatches: rep
                    .verification
                    .mismatches
                    .iter()
                    .map(|&a| names(g, a))
                    .collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusEntryDoc {
    pub x: Names,
    pub y: Names,
    pub mu: i64,
}

/// Nonzero Möbius values of `S(f)` ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusDoc {
    pub elements: Names,
    pub order: String,
    pub items: Vec<Names>,
    pub entries: Vec<MobiusEntryDoc>,
}

impl MobiusDoc {
    pub fn new(t: &Topology, mu: &MobiusTable) -> Self {
        let g = t.ground();
        let items: Vec<Names> = t.sets().iter().map(|&s| names(g, s)).collect();
        MobiusDoc {
            elements: g.elements().to_vec(),
            order: "inclusion".into(),
            entries: mu
                .nonzero()
                .map(|(x, y, m)| MobiusEntryDoc {
                    x: items[x].clone(),
                    y: items[y].clone(),
                    mu: m,
                })
                .collect(),
            items,
        }
    }
}

/// Hasse diagram of `S(f)`: `[lower, upper]` index pairs into `nodes`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDoc {
    pub elements: Names,
    pub nodes: Vec<Names>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDoc {
    pub fn new(t: &Topology, poset: &FinitePoset) -> Self {
        let g = t.ground();
        HasseDoc {
            elements: g.elements().to_vec(),
            nodes: t.sets().iter().map(|&s| names(g, s)).collect(),
            edges: poset.hasse(),
        }
    }
}
