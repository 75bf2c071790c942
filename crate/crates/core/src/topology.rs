//! Intersection-closed families (the closed sets of an operator) and their
//! lattice structure.

use std::sync::Arc;

use crate::closure::ClosureOperator;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// An intersection-closed family of subsets containing `∅` and `X`,
/// stored sorted by mask without duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    ground: Arc<GroundSet>,
    closed: Vec<Subset>,
}

impl Topology {
    /// Validates `sets` as a topology. Input order and duplicates do not
    /// matter; families without `∅` or `X` are rejected, not repaired.
    pub fn new<I>(ground: Arc<GroundSet>, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut closed = sets
            .into_iter()
            .map(|s| ground.check(s))
            .collect::<Result<Vec<_>>>()?;
        closed.sort_unstable();
        closed.dedup();

        if closed.first() != Some(&Subset::EMPTY) {
            return Err(Error::MissingTopBottom {
                missing: ground.format(Subset::EMPTY),
            });
        }
        if closed.last() != Some(&ground.full()) {
            return Err(Error::MissingTopBottom {
                missing: ground.format(ground.full()),
            });
        }

        let member = membership(&ground, &closed);
        let table = closure_table_for(&ground, &member);
        // A subset that equals the intersection of its closed supersets but
        // is not itself closed is an intersection of members outside the
        // family; the fold below finds a pair that exposes it.
        for a in ground.all_subsets() {
            if member[a.index()] || table[a.index()] != a {
                continue;
            }
            let mut acc = ground.full();
            for &b in closed.iter().filter(|b| a.is_subset_of(**b)) {
                let meet = acc.intersection(b);
                if !member[meet.index()] {
                    return Err(Error::NotIntersectionClosed {
                        a: ground.format(acc),
                        b: ground.format(b),
                        meet: ground.format(meet),
                    });
                }
                acc = meet;
            }
            unreachable!("fold over closed supersets must leave the family");
        }
        Ok(Topology { ground, closed })
    }

    pub(crate) fn from_sorted_unchecked(ground: Arc<GroundSet>, closed: Vec<Subset>) -> Self {
        debug_assert!(closed.windows(2).all(|w| w[0] < w[1]));
        Topology { ground, closed }
    }

    /// Closes an arbitrary family under intersection and adds `∅` and `X`.
    pub fn generated_by<I>(ground: Arc<GroundSet>, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut member = vec![false; ground.power_set_len()];
        member[0] = true;
        member[ground.full().index()] = true;
        let mut frontier: Vec<Subset> = vec![Subset::EMPTY, ground.full()];
        let mut all = frontier.clone();
        for s in sets {
            let s = ground.check(s)?;
            if !member[s.index()] {
                member[s.index()] = true;
                frontier.push(s);
                all.push(s);
            }
        }
        while let Some(s) = frontier.pop() {
            let snapshot = all.clone();
            for t in snapshot {
                let m = s.intersection(t);
                if !member[m.index()] {
                    member[m.index()] = true;
                    frontier.push(m);
                    all.push(m);
                }
            }
        }
        all.sort_unstable();
        Ok(Topology {
            ground,
            closed: all,
        })
    }

    /// `{∅, X}`.
    pub fn trivial(ground: Arc<GroundSet>) -> Self {
        let full = ground.full();
        Topology {
            ground,
            closed: vec![Subset::EMPTY, full],
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn sets(&self) -> &[Subset] {
        &self.closed
    }

    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.closed.binary_search(&s).is_ok()
    }

    pub fn position(&self, s: Subset) -> Option<usize> {
        self.closed.binary_search(&s).ok()
    }

    pub fn is_subfamily_of(&self, other: &Topology) -> bool {
        self.closed.iter().all(|s| other.contains(*s))
    }

    /// `f_S(A) = ⋂{B ∈ S : A ⊆ B}`.
    pub fn closure(&self, a: Subset) -> Subset {
        self.closed
            .iter()
            .filter(|b| a.is_subset_of(**b))
            .fold(self.ground.full(), |acc, b| acc.intersection(*b))
    }

    /// `f_S` on every subset, indexed by mask.
    pub fn closure_table(&self) -> Vec<Subset> {
        closure_table_for(&self.ground, &membership(&self.ground, &self.closed))
    }

    fn require(&self, s: Subset) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotClosed {
                set: self.ground.format(s),
            })
        }
    }

    pub fn meet(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.require(a)?;
        self.require(b)?;
        Ok(a.intersection(b))
    }

    pub fn join(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.require(a)?;
        self.require(b)?;
        Ok(self.closure(a.union(b)))
    }

    /// Length of the longest strictly increasing chain of nonempty closed
    /// sets.
    pub fn depth(&self) -> usize {
        let mut best = vec![0usize; self.closed.len()];
        let mut depth = 0;
        for (i, &s) in self.closed.iter().enumerate() {
            if s.is_empty() {
                continue;
            }
            let below = (0..i)
                .filter(|&j| !self.closed[j].is_empty() && self.closed[j].is_proper_subset_of(s))
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
            best[i] = below + 1;
            depth = depth.max(best[i]);
        }
        depth
    }

    /// True when the family is totally ordered by inclusion.
    pub fn is_chain(&self) -> bool {
        // sorted by mask, so a chain must be increasing pairwise
        self.closed.windows(2).all(|w| w[0].is_subset_of(w[1]))
    }
}

fn membership(ground: &GroundSet, closed: &[Subset]) -> Vec<bool> {
    let mut member = vec![false; ground.power_set_len()];
    for s in closed {
        member[s.index()] = true;
    }
    member
}

/// Intersection of closed supersets for every subset, top-down: a
/// non-member's closed supersets all contain one of its one-element
/// extensions.
fn closure_table_for(ground: &GroundSet, member: &[bool]) -> Vec<Subset> {
    let full = ground.full();
    let n = ground.len();
    let mut table = vec![full; ground.power_set_len()];
    for bits in (0..ground.power_set_len() as u32).rev() {
        let a = Subset::from_bits(bits);
        if member[a.index()] {
            table[a.index()] = a;
            continue;
        }
        let mut acc = full;
        for x in 0..n {
            if !a.contains(x) {
                acc = acc.intersection(table[a.with(x).index()]);
            }
        }
        table[a.index()] = acc;
    }
    table
}

/// `S(f)`.
pub fn closed_sets(op: &ClosureOperator) -> Topology {
    op.closed_sets()
}

/// The unique operator whose closed sets are `topology`.
pub fn operator_from_topology(topology: &Topology) -> ClosureOperator {
    ClosureOperator::FromTopology(topology.clone())
}
