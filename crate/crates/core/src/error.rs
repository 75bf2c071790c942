use thiserror::Error;

use crate::closure::ValidationReport;
use crate::menus::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("ground set has {size} elements; at most {max} are supported")]
    GroundSetTooLarge { size: usize, max: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("element names must be nonempty")]
    EmptyElementName,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("mask {bits:#b} references positions outside the ground set")]
    ForeignMask { bits: u32 },
    #[error("operators are defined over different ground sets")]
    GroundSetMismatch,

    #[error("operator table has no image for {subset}")]
    MissingEntry { subset: String },
    #[error("operator table lists {subset} more than once")]
    DuplicateEntry { subset: String },
    #[error("table is not a closure operator ({} violation(s))", .0.violations.len())]
    NotAClosure(Box<ValidationReport>),

    #[error("family is not closed under intersection: {a} ∩ {b} = {meet} is missing")]
    NotIntersectionClosed { a: String, b: String, meet: String },
    #[error("family must contain {missing}")]
    MissingTopBottom { missing: String },
    #[error("{set} is not a closed set of the topology")]
    NotClosed { set: String },

    #[error("not a chain: {lower} is not strictly contained in {upper}")]
    NotAChain { lower: String, upper: String },
    #[error("chain must start at the empty set and end at the ground set")]
    BadEndpoints,
    #[error("invalid weak order: {0}")]
    InvalidWeakOrder(String),
    #[error("invalid binary classifier: cutoff {0} must be a proper nonempty subset")]
    InvalidClassifier(String),
    #[error("at least one generator is required")]
    EmptyGeneratorList,

    #[error("invalid partial order: {0}")]
    InvalidPoset(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("preference violates the menu axioms")]
    AxiomsViolated(Box<AxiomReport>),
    #[error("preference does not respect the operator: U({menu}) differs from U of its closure {closure}")]
    DoesNotRespect { menu: String, closure: String },
    #[error("no utility given for menu {menu}")]
    MissingUtility { menu: String },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("internal consistency check failed: {0}")]
    WitnessVerificationFailed(String),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed document: {0}")]
    Document(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
