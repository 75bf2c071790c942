//! Finite closure operators on `2^X`: validation, topologies of closed
//! sets, generation by weak orders and binary classifiers, the complexity
//! measures MNWO and MNBC, labelings, and representations of preferences
//! over menus.
//!
//! Ground sets hold at most [`ground::MAX_ELEMENTS`] elements; subsets are
//! bitmasks over element positions.

pub mod cli;
pub mod closure;
pub mod complexity;
pub mod error;
pub mod generators;
pub mod ground;
pub mod json;
pub mod labeling;
pub mod menus;
pub mod poset;
pub mod rational;
pub mod reports;
pub mod topology;

pub use closure::{validate_closure, ClosureOperator, OperatorTable, ValidationReport, Violation};
pub use complexity::{
    complexity_profile, meet_irreducibles, more_complex, oracle_mnbc, oracle_mnwo,
    ComplexityProfile, ComplexityRelation, IrreducibleSet,
};
pub use error::{Error, Result};
pub use generators::{
    binary_closure, check_generation, half_space_closure, intersect_generate, support_set,
    BinaryClassifier, GenerationReport, WeakOrder,
};
pub use ground::{GroundSet, Subset};
pub use labeling::{canonical_labeling, classifier_from_labeling, minimal_labeling, Labeling};
pub use menus::{
    additive_representation, check_axioms, kreps_operator, kreps_representation, respects,
    AdditiveRepresentation, AxiomReport, KrepsRepresentation, MenuPreference,
};
pub use poset::FinitePoset;
pub use topology::Topology;
