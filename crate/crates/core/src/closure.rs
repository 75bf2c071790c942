//! Closure operators on `2^X` and the validation of candidate tables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::{same_ground, GroundSet, Subset};
use crate::topology::Topology;

/// A full, not yet validated, map `2^X → 2^X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTable {
    ground: Arc<GroundSet>,
    images: Vec<Subset>,
}

impl OperatorTable {
    /// Builds a table from `(from, to)` pairs. Every subset must appear
    /// exactly once as a `from`.
    pub fn from_entries<I>(ground: Arc<GroundSet>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, Subset)>,
    {
        let mut slots: Vec<Option<Subset>> = vec![None; ground.power_set_len()];
        for (from, to) in entries {
            ground.check(from)?;
            ground.check(to)?;
            let slot = &mut slots[from.index()];
            if slot.is_some() {
                return Err(Error::DuplicateEntry {
                    subset: ground.format(from),
                });
            }
            *slot = Some(to);
        }
        let mut images = Vec::with_capacity(slots.len());
        for (i, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(to) => images.push(to),
                None => {
                    return Err(Error::MissingEntry {
                        subset: ground.format(Subset::from_bits(i as u32)),
                    })
                }
            }
        }
        Ok(OperatorTable { ground, images })
    }

    /// Tabulates an arbitrary function over every subset.
    pub fn from_fn(ground: Arc<GroundSet>, f: impl Fn(Subset) -> Subset) -> Result<Self> {
        let images = ground
            .all_subsets()
            .map(|a| ground.check(f(a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorTable { ground, images })
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn image(&self, a: Subset) -> Subset {
        self.images[a.index()]
    }

    pub fn images(&self) -> &[Subset] {
        &self.images
    }
}

/// One failed closure axiom with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `f(∅) ≠ ∅`.
    EmptyNotFixed { image: Subset },
    /// `A ⊄ f(A)`.
    Extensivity { set: Subset, image: Subset },
    /// `f(f(A)) ≠ f(A)`.
    Idempotence {
        set: Subset,
        image: Subset,
        reimage: Subset,
    },
    /// `smaller ⊆ larger` but `f(smaller) ⊄ f(larger)`.
    Monotonicity { smaller: Subset, larger: Subset },
}

/// Every axiom violation of a table, in ascending mask order of the
/// witness set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ground: Arc<GroundSet>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_closure(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks extensivity (with `f(∅) = ∅`), idempotence and monotonicity.
///
/// Monotonicity is tested on covering pairs `A ⊂ A ∪ {x}`; a failure on
/// any pair `A ⊆ B` implies a failure on some covering pair along a path
/// from `A` to `B`, so these witnesses are complete.
pub fn validate_closure(table: &OperatorTable) -> ValidationReport {
    let ground = table.ground();
    let n = ground.len();
    let mut violations = Vec::new();
    for a in ground.all_subsets() {
        let image = table.image(a);
        if a.is_empty() && !image.is_empty() {
            violations.push(Violation::EmptyNotFixed { image });
        }
        if !a.is_subset_of(image) {
            violations.push(Violation::Extensivity { set: a, image });
        }
        let reimage = table.image(image);
        if reimage != image {
            violations.push(Violation::Idempotence {
                set: a,
                image,
                reimage,
            });
        }
        for x in 0..n {
            if a.contains(x) {
                continue;
            }
            let larger = a.with(x);
            if !image.is_subset_of(table.image(larger)) {
                violations.push(Violation::Monotonicity { smaller: a, larger });
            }
        }
    }
    ValidationReport {
        ground: ground.clone(),
        violations,
    }
}

/// A closure operator, either tabulated or induced by its topology.
///
/// Both variants are interchangeable: equality is pointwise over `2^X`.
#[derive(Clone, Debug)]
pub enum ClosureOperator {
    Table(ValidTable),
    FromTopology(Topology),
}

/// A table that passed [`validate_closure`].
#[derive(Clone, Debug)]
pub struct ValidTable {
    ground: Arc<GroundSet>,
    images: Arc<[Subset]>,
}

impl ClosureOperator {
    /// Validates `table` and wraps it.
    pub fn from_table(table: OperatorTable) -> Result<Self> {
        let report = validate_closure(&table);
        if !report.is_closure() {
            return Err(Error::NotAClosure(Box::new(report)));
        }
        Ok(Self::from_images_unchecked(table.ground, table.images))
    }

    /// Validates and wraps a function evaluated on every subset.
    pub fn from_fn(ground: Arc<GroundSet>, f: impl Fn(Subset) -> Subset) -> Result<Self> {
        Self::from_table(OperatorTable::from_fn(ground, f)?)
    }

    /// Wraps images whose closure axioms hold by construction.
    pub(crate) fn from_images_unchecked(ground: Arc<GroundSet>, images: Vec<Subset>) -> Self {
        debug_assert_eq!(images.len(), ground.power_set_len());
        ClosureOperator::Table(ValidTable {
            ground,
            images: images.into(),
        })
    }

    pub fn identity(ground: Arc<GroundSet>) -> Self {
        let images = ground.all_subsets().collect();
        Self::from_images_unchecked(ground, images)
    }

    /// `∅ ↦ ∅`, everything else `↦ X`.
    pub fn trivial(ground: Arc<GroundSet>) -> Self {
        let full = ground.full();
        let images = ground
            .all_subsets()
            .map(|a| if a.is_empty() { a } else { full })
            .collect();
        Self::from_images_unchecked(ground, images)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        match self {
            ClosureOperator::Table(t) => &t.ground,
            ClosureOperator::FromTopology(s) => s.ground(),
        }
    }

    pub fn apply(&self, a: Subset) -> Subset {
        match self {
            ClosureOperator::Table(t) => t.images[a.index()],
            ClosureOperator::FromTopology(s) => s.closure(a),
        }
    }

    /// Images of every subset, indexed by mask.
    pub fn tabulate(&self) -> Vec<Subset> {
        match self {
            ClosureOperator::Table(t) => t.images.to_vec(),
            ClosureOperator::FromTopology(s) => s.closure_table(),
        }
    }

    pub fn to_table(&self) -> OperatorTable {
        OperatorTable {
            ground: self.ground().clone(),
            images: self.tabulate(),
        }
    }

    /// Tabulated form, sharing storage when already tabulated.
    pub fn tabulated(&self) -> ClosureOperator {
        match self {
            ClosureOperator::Table(_) => self.clone(),
            ClosureOperator::FromTopology(s) => {
                Self::from_images_unchecked(s.ground().clone(), s.closure_table())
            }
        }
    }

    /// The closed sets `S(f) = {A : f(A) = A}`.
    pub fn closed_sets(&self) -> Topology {
        match self {
            ClosureOperator::FromTopology(s) => s.clone(),
            ClosureOperator::Table(t) => {
                let closed = t
                    .ground
                    .all_subsets()
                    .filter(|a| t.images[a.index()] == *a)
                    .collect();
                Topology::from_sorted_unchecked(t.ground.clone(), closed)
            }
        }
    }

    pub fn same_ground(&self, other: &ClosureOperator) -> Result<()> {
        same_ground(self.ground(), other.ground())
    }
}

impl PartialEq for ClosureOperator {
    fn eq(&self, other: &Self) -> bool {
        self.ground() == other.ground() && self.tabulate() == other.tabulate()
    }
}

impl Eq for ClosureOperator {}
