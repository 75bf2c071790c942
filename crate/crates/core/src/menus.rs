//! Preferences over menus (subsets of `X`): Kreps' axioms, the operator a
//! preference induces, and its two state-space representations.
//!
//! Utilities are exact rationals. A preference must value every nonempty
//! menu; a value for `∅` is optional, carried along, and only consulted by
//! the axiom checks when present.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::closure::{validate_closure, ClosureOperator, OperatorTable, ValidationReport};
use crate::complexity::complexity_profile;
use crate::error::{Error, Result};
use crate::generators::WeakOrder;
use crate::ground::{same_ground, GroundSet, Subset};
use crate::poset::FinitePoset;

/// Failure witnesses kept per check; counts are always exact.
pub const WITNESS_LIMIT: usize = 16;

/// A utility `U` on menus; `A ⊵ B` iff `U(A) ≥ U(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MenuPreference {
    ground: Arc<GroundSet>,
    /// Indexed by mask; slot 0 holds the optional `U(∅)`.
    utility: Vec<Option<BigRational>>,
}

impl MenuPreference {
    /// An entry for `∅` sets `U(∅)`; every nonempty menu needs exactly one
    /// entry.
    pub fn new<I>(ground: Arc<GroundSet>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, BigRational)>,
    {
        let mut utility = vec![None; ground.power_set_len()];
        for (menu, value) in entries {
            ground.check(menu)?;
            let slot = &mut utility[menu.index()];
            if slot.is_some() {
                return Err(Error::DuplicateEntry {
                    subset: ground.format(menu),
                });
            }
            *slot = Some(value);
        }
        if let Some(missing) = ground
            .nonempty_subsets()
            .find(|a| utility[a.index()].is_none())
        {
            return Err(Error::MissingUtility {
                menu: ground.format(missing),
            });
        }
        Ok(MenuPreference { ground, utility })
    }

    /// `U` given by `u` on nonempty menus, `U(∅)` left out.
    pub fn from_fn(ground: Arc<GroundSet>, u: impl Fn(Subset) -> BigRational) -> Self {
        let utility = ground
            .all_subsets()
            .map(|a| (!a.is_empty()).then(|| u(a)))
            .collect();
        MenuPreference { ground, utility }
    }

    /// Ordinal input: indifference groups of nonempty menus, worst first.
    /// Group `i` gets utility `i + 1`.
    pub fn from_ranking(ground: Arc<GroundSet>, groups: &[Vec<Subset>]) -> Result<Self> {
        let entries = groups.iter().enumerate().flat_map(|(i, group)| {
            group
                .iter()
                .map(move |&menu| (menu, BigRational::from_integer((i as i64 + 1).into())))
        });
        let entries: Vec<_> = entries.collect();
        if let Some((menu, _)) = entries.iter().find(|(m, _)| m.is_empty()) {
            return Err(Error::Document(format!(
                "ranking may not include the empty menu {}",
                ground.format(*menu)
            )));
        }
        Self::new(ground, entries)
    }

    /// `U(A) = Σ_s max_{a∈A} U(a, s)` with `U(a, s)` the class index of `a`
    /// in state `s` (worst = 1). Such a preference satisfies both axioms.
    pub fn sum_of_maxes(ground: Arc<GroundSet>, states: &[WeakOrder]) -> Result<Self> {
        for s in states {
            same_ground(&ground, s.ground())?;
        }
        Ok(Self::from_fn(ground, |a| {
            let total: u64 = states
                .iter()
                .map(|s| {
                    a.positions()
                        .map(|x| s.utility(x) as u64)
                        .max()
                        .unwrap_or(0)
                })
                .sum();
            BigRational::from_integer(total.into())
        }))
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// `U(A)`, `None` only for an unvalued `∅`.
    pub fn value(&self, a: Subset) -> Option<&BigRational> {
        self.utility[a.index()].as_ref()
    }

    /// `U(A)` for a nonempty menu.
    pub fn u(&self, a: Subset) -> &BigRational {
        self.value(a).expect("every nonempty menu is valued")
    }

    pub fn u_empty(&self) -> Option<&BigRational> {
        self.utility[0].as_ref()
    }

    /// Valued menus in mask order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, &BigRational)> + '_ {
        self.utility
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|v| (Subset::from_bits(i as u32), v)))
    }

    /// `A ≈ B`, or `None` when either side is unvalued.
    fn indifferent(&self, a: Subset, b: Subset) -> Option<bool> {
        Some(self.value(a)? == self.value(b)?)
    }
}

/// Results of checking desire for flexibility and ordinal submodularity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Cover pairs `(A, B)` with `B ⊂ A`, `|A \ B| = 1` and `U(B) > U(A)`.
    /// Flexibility holds on all pairs iff it holds on covers.
    pub flexibility: Vec<(Subset, Subset)>,
    pub flexibility_failures: usize,
    /// Triples `(A, B, C)` with `A ≈ A ∪ B` but not `A ∪ C ≈ A ∪ B ∪ C`.
    pub submodularity: Vec<(Subset, Subset, Subset)>,
    pub submodularity_failures: usize,
}

impl AxiomReport {
    pub fn flexibility_holds(&self) -> bool {
        self.flexibility_failures == 0
    }

    pub fn submodularity_holds(&self) -> bool {
        self.submodularity_failures == 0
    }

    pub fn passes(&self) -> bool {
        self.flexibility_holds() && self.submodularity_holds()
    }
}

/// Exhaustive check of both axioms over `2^X`.
pub fn check_axioms(pref: &MenuPreference) -> AxiomReport {
    let ground = &pref.ground;
    let mut report = AxiomReport::default();

    for a in ground.all_subsets() {
        let Some(ua) = pref.value(a) else { continue };
        for x in a.positions() {
            let b = a.difference(Subset::singleton(x));
            if let Some(ub) = pref.value(b) {
                if ub > ua {
                    report.flexibility_failures += 1;
                    if report.flexibility.len() < WITNESS_LIMIT {
                        report.flexibility.push((a, b));
                    }
                }
            }
        }
    }

    // Only B \ A and C \ A matter, so both range over subsets of X \ A.
    let full = ground.full();
    for a in ground.all_subsets() {
        if pref.value(a).is_none() {
            continue;
        }
        let outside = full.difference(a);
        for b in outside.subsets() {
            let ab = a.union(b);
            if pref.indifferent(a, ab) != Some(true) {
                continue;
            }
            for c in outside.subsets() {
                if pref.indifferent(a.union(c), ab.union(c)) == Some(false) {
                    report.submodularity_failures += 1;
                    if report.submodularity.len() < WITNESS_LIMIT {
                        report.submodularity.push((a, b, c));
                    }
                }
            }
        }
    }
    report
}

/// Whether `A ≈ f(A)` for every menu.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RespectReport {
    pub holds: bool,
    /// First menu (mask order) with `U(A) ≠ U(f(A))`.
    pub witness: Option<Subset>,
}

pub fn respects(pref: &MenuPreference, f: &ClosureOperator) -> Result<RespectReport> {
    same_ground(&pref.ground, f.ground())?;
    let witness = pref
        .ground
        .nonempty_subsets()
        .find(|&a| pref.u(a) != pref.u(f.apply(a)));
    Ok(RespectReport {
        holds: witness.is_none(),
        witness,
    })
}

/// The Kreps operator together with the checks run on it.
#[derive(Clone, Debug)]
pub struct KrepsOperator {
    pub operator: ClosureOperator,
    pub diagnostics: KrepsDiagnostics,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrepsDiagnostics {
    pub validation: ValidationReport,
    pub respect: RespectReport,
    /// Nonempty `A` and any `B` where `A ≈ A ∪ B` and `f(B) ⊆ f(A)` disagree.
    pub equivalence_failures: Vec<(Subset, Subset)>,
    /// Menus with `f(B) ⊊ f(A)` but not `U(A) > U(B)`.
    pub strict_failures: Vec<(Subset, Subset)>,
}

impl KrepsDiagnostics {
    pub fn all_hold(&self) -> bool {
        self.validation.is_closure()
            && self.respect.holds
            && self.equivalence_failures.is_empty()
            && self.strict_failures.is_empty()
    }
}

/// `f(A) = ⋃{B : A ≈ A ∪ B}` for nonempty `A`, `f(∅) = ∅`, evaluated as
/// written. Fails with [`Error::AxiomsViolated`] unless both axioms hold.
pub fn kreps_operator_with_diagnostics(pref: &MenuPreference) -> Result<KrepsOperator> {
    let axioms = check_axioms(pref);
    if !axioms.passes() {
        return Err(Error::AxiomsViolated(Box::new(axioms)));
    }
    let ground = pref.ground.clone();
    let images: Vec<Subset> = ground
        .all_subsets()
        .map(|a| {
            if a.is_empty() {
                return a;
            }
            let ua = pref.u(a);
            ground
                .all_subsets()
                .filter(|&b| pref.u(a.union(b)) == ua)
                .fold(Subset::EMPTY, Subset::union)
        })
        .collect();
    let table = OperatorTable::from_entries(
        ground.clone(),
        ground.all_subsets().zip(images.iter().copied()),
    )?;
    let validation = validate_closure(&table);
    if !validation.is_closure() {
        return Err(Error::NotAClosure(Box::new(validation)));
    }
    let operator = ClosureOperator::from_table(table)?;
    let respect = respects(pref, &operator)?;

    let mut equivalence_failures = Vec::new();
    let mut strict_failures = Vec::new();
    for a in ground.nonempty_subsets() {
        let fa = images[a.index()];
        for b in ground.all_subsets() {
            let fb = images[b.index()];
            let lhs = pref.u(a.union(b)) == pref.u(a);
            if lhs != fb.is_subset_of(fa) && equivalence_failures.len() < WITNESS_LIMIT {
                equivalence_failures.push((a, b));
            }
            if fb.is_proper_subset_of(fa) {
                if let Some(ub) = pref.value(b) {
                    if pref.u(a) <= ub && strict_failures.len() < WITNESS_LIMIT {
                        strict_failures.push((a, b));
                    }
                }
            }
        }
    }
    Ok(KrepsOperator {
        operator,
        diagnostics: KrepsDiagnostics {
            validation,
            respect,
            equivalence_failures,
            strict_failures,
        },
    })
}

/// The Kreps operator, failing if any postcondition check does not hold.
pub fn kreps_operator(pref: &MenuPreference) -> Result<ClosureOperator> {
    let k = kreps_operator_with_diagnostics(pref)?;
    if !k.diagnostics.all_hold() {
        return Err(Error::WitnessVerificationFailed(format!(
            "Kreps operator checks failed: {:?}",
            k.diagnostics
        )));
    }
    Ok(k.operator)
}

/// `U(A) = u(σ(A))` with `σ(A)` the vector of per-state maxima and `u` a
/// rank table on achieved signatures.
#[derive(Clone, Debug)]
pub struct KrepsRepresentation {
    pub ground: Arc<GroundSet>,
    pub operator: ClosureOperator,
    /// A minimum weak-order decomposition of the operator.
    pub states: Vec<WeakOrder>,
    /// Achieved signature to rank (1 = worst).
    pub aggregator: BTreeMap<Vec<u32>, usize>,
    /// `|P(f)|`, reported alongside the state count.
    pub p_size: usize,
    pub verification: KrepsVerification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KrepsVerification {
    /// A pair where `U(A) ≥ U(B)` and `rank(σ(A)) ≥ rank(σ(B))` disagree.
    pub order_mismatch: Option<(Subset, Subset)>,
    /// A pair where `σ(A) = σ(B)` and `f(A) = f(B)` disagree.
    pub signature_failure: Option<(Subset, Subset)>,
    /// Signatures `(s, t)` with `s ≥ t` componentwise, `s ≠ t`, and
    /// `rank(s) ≤ rank(t)`.
    pub monotonicity_failure: Option<(Vec<u32>, Vec<u32>)>,
}

impl KrepsVerification {
    pub fn holds(&self) -> bool {
        self.order_mismatch.is_none()
            && self.signature_failure.is_none()
            && self.monotonicity_failure.is_none()
    }
}

impl KrepsRepresentation {
    /// `U(a, s)`: class index of `a` in state `s`, worst = 1.
    pub fn state_utility(&self, a: usize, s: usize) -> u32 {
        self.states[s].utility(a)
    }

    /// `σ(A)` for a nonempty menu.
    pub fn signature(&self, a: Subset) -> Vec<u32> {
        signature(&self.states, a)
    }

    /// `u(σ(A))`, if the signature is achieved.
    pub fn rank(&self, a: Subset) -> Option<usize> {
        self.aggregator.get(&self.signature(a)).copied()
    }
}

fn signature(states: &[WeakOrder], a: Subset) -> Vec<u32> {
    states
        .iter()
        .map(|s| a.positions().map(|x| s.utility(x)).max().unwrap_or(0))
        .collect()
}

/// Builds and verifies the representation with `MNWO` states.
pub fn kreps_representation(pref: &MenuPreference) -> Result<KrepsRepresentation> {
    let operator = kreps_operator(pref)?;
    let profile = complexity_profile(&operator)?;
    let states = profile.weak_order_witness;
    let ground = pref.ground.clone();

    let mut values: Vec<&BigRational> = ground.nonempty_subsets().map(|a| pref.u(a)).collect();
    values.sort();
    values.dedup();
    let rank_of = |a: Subset| values.binary_search(&pref.u(a)).expect("value present") + 1;

    let mut verification = KrepsVerification::default();
    let mut aggregator = BTreeMap::new();
    let mut first_with: BTreeMap<Vec<u32>, Subset> = BTreeMap::new();
    let signatures: Vec<Vec<u32>> = ground
        .all_subsets()
        .map(|a| signature(&states, a))
        .collect();
    for a in ground.nonempty_subsets() {
        let sig = &signatures[a.index()];
        let r = rank_of(a);
        match aggregator.get(sig) {
            Some(&existing) if existing != r => {
                verification
                    .order_mismatch
                    .get_or_insert((first_with[sig], a));
            }
            Some(_) => {}
            None => {
                aggregator.insert(sig.clone(), r);
                first_with.insert(sig.clone(), a);
            }
        }
    }

    let fa = operator.tabulate();
    'pairs: for a in ground.nonempty_subsets() {
        for b in ground.nonempty_subsets() {
            let (sa, sb) = (&signatures[a.index()], &signatures[b.index()]);
            if verification.order_mismatch.is_none()
                && (pref.u(a) >= pref.u(b)) != (aggregator[sa] >= aggregator[sb])
            {
                verification.order_mismatch = Some((a, b));
            }
            if verification.signature_failure.is_none()
                && (sa == sb) != (fa[a.index()] == fa[b.index()])
            {
                verification.signature_failure = Some((a, b));
            }
            if verification.order_mismatch.is_some() && verification.signature_failure.is_some() {
                break 'pairs;
            }
        }
    }

    'mono: for (s, &rs) in &aggregator {
        for (t, &rt) in &aggregator {
            if s != t && s.iter().zip(t).all(|(x, y)| x >= y) && rs <= rt {
                verification.monotonicity_failure = Some((s.clone(), t.clone()));
                break 'mono;
            }
        }
    }

    Ok(KrepsRepresentation {
        ground,
        operator,
        states,
        aggregator,
        p_size: profile.irreducibles.p_of_f.len(),
        verification,
    })
}

/// One state of the additive representation. Its utility is `-weight` on
/// members of `closed_set` and `0` elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveState {
    pub label: String,
    pub closed_set: Subset,
    pub weight: BigRational,
}

impl AdditiveState {
    pub fn utility(&self, x: usize) -> BigRational {
        if self.closed_set.contains(x) {
            -self.weight.clone()
        } else {
            BigRational::zero()
        }
    }

    /// `max_{a∈A} U(a, s)` for nonempty `A`.
    pub fn best(&self, a: Subset) -> BigRational {
        a.positions()
            .map(|x| self.utility(x))
            .max()
            .expect("menus are nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveVerification {
    /// Forward sums of `h` recover `U` on every nonempty closed set.
    pub mobius_consistent: bool,
    /// Nonempty menus where the evaluation differs from `U`.
    pub mismatches: Vec<Subset>,
}

impl AdditiveVerification {
    pub fn exact(&self) -> bool {
        self.mobius_consistent && self.mismatches.is_empty()
    }
}

/// `U(A) = Σ_{s∈S⁺} max_{a∈A} U(a,s) − Σ_{s∈S⁻} max_{a∈A} U(a,s)`.
#[derive(Clone, Debug)]
pub struct AdditiveRepresentation {
    pub ground: Arc<GroundSet>,
    /// `h` on `S(f) \ {∅}`, ascending by mask.
    pub h: Vec<(Subset, BigRational)>,
    /// `p1..pn`, weight `h⁻(B)`.
    pub positive_states: Vec<AdditiveState>,
    /// `n1..nn`, weight `h⁺(B)`.
    pub negative_states: Vec<AdditiveState>,
    pub verification: AdditiveVerification,
}

impl AdditiveRepresentation {
    pub fn state_count(&self) -> usize {
        self.positive_states.len() + self.negative_states.len()
    }

    pub fn evaluate(&self, a: Subset) -> BigRational {
        let plus: BigRational = self.positive_states.iter().map(|s| s.best(a)).sum();
        let minus: BigRational = self.negative_states.iter().map(|s| s.best(a)).sum();
        plus - minus
    }
}

/// Möbius inversion of `U` over `S(f) \ {∅}` ordered by reverse inclusion,
/// split into positive and negative parts.
pub fn additive_representation(
    pref: &MenuPreference,
    f: &ClosureOperator,
) -> Result<AdditiveRepresentation> {
    let respect = respects(pref, f)?;
    if let Some(menu) = respect.witness {
        return Err(Error::DoesNotRespect {
            menu: pref.ground.format(menu),
            closure: pref.ground.format(f.apply(menu)),
        });
    }
    let ground = pref.ground.clone();
    let sets: Vec<Subset> = f
        .closed_sets()
        .sets()
        .iter()
        .copied()
        .filter(|s| !s.is_empty())
        .collect();
    let poset = FinitePoset::reverse_inclusion(&ground, &sets);
    let g: Vec<BigRational> = sets.iter().map(|&s| pref.u(s).clone()).collect();
    let h = poset.mobius_invert(&g);
    let mobius_consistent = poset.zeta_sum(&h) == g;

    let part = |v: &BigRational, positive: bool| {
        if v.is_positive() == positive && !v.is_zero() {
            v.abs()
        } else {
            BigRational::zero()
        }
    };
    let states = |prefix: &str, positive: bool| -> Vec<AdditiveState> {
        sets.iter()
            .zip(&h)
            .enumerate()
            .map(|(i, (&s, v))| AdditiveState {
                label: format!("{prefix}{}", i + 1),
                closed_set: s,
                weight: part(v, positive),
            })
            .collect()
    };
    let positive_states = states("p", false);
    let negative_states = states("n", true);

    let mut rep = AdditiveRepresentation {
        ground: ground.clone(),
        h: sets.iter().copied().zip(h).collect(),
        positive_states,
        negative_states,
        verification: AdditiveVerification {
            mobius_consistent,
            mismatches: Vec::new(),
        },
    };
    rep.verification.mismatches = ground
        .nonempty_subsets()
        .filter(|&a| rep.evaluate(a) != *pref.u(a))
        .collect();
    Ok(rep)
}
