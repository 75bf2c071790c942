//! Exhaustive-search oracles for MNWO and MNBC on tiny ground sets.
//!
//! These never look at `P(f)`, chain covers or the generation conditions.
//! A candidate generator `g` can take part in a decomposition of `f` only
//! if `g(A) ⊇ f(A)` everywhere; a family of such candidates intersects to
//! `f` exactly when, for every subset `A` and every `x ∉ f(A)`, some member
//! has `x ∉ g(A)`. The oracle finds the smallest family covering all those
//! `(A, x)` pairs.

use crate::closure::ClosureOperator;
use crate::error::{Error, Result};
use crate::generators::{BinaryClassifier, WeakOrder};
use crate::ground::Subset;

pub const MAX_ORACLE_ELEMENTS: usize = 4;

/// Every ordered partition of `X` (75 of them for four elements).
pub fn all_weak_orders(ground: &std::sync::Arc<crate::ground::GroundSet>) -> Vec<WeakOrder> {
    fn extend(remaining: Subset, prefix: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for class in remaining.subsets().filter(|s| !s.is_empty()) {
            prefix.push(class);
            extend(remaining.difference(class), prefix, out);
            prefix.pop();
        }
    }
    let mut partitions = Vec::new();
    extend(ground.full(), &mut Vec::new(), &mut partitions);
    partitions
        .into_iter()
        .map(|classes| WeakOrder::from_classes(ground.clone(), classes).expect("ordered partition"))
        .collect()
}

fn guard(f: &ClosureOperator) -> Result<()> {
    let size = f.ground().len();
    if size > MAX_ORACLE_ELEMENTS {
        Err(Error::GroundSetTooLarge {
            size,
            max: MAX_ORACLE_ELEMENTS,
        })
    } else {
        Ok(())
    }
}

/// Smallest number of weak orders whose operators intersect to `f`.
pub fn oracle_mnwo(f: &ClosureOperator) -> Result<usize> {
    guard(f)?;
    let candidates: Vec<Vec<Subset>> = all_weak_orders(f.ground())
        .iter()
        .map(|o| o.operator().tabulate())
        .collect();
    min_family(f, candidates)
}

/// Smallest number of binary classifiers whose operators intersect to `f`.
/// The trivial operator needs none.
pub fn oracle_mnbc(f: &ClosureOperator) -> Result<usize> {
    guard(f)?;
    let ground = f.ground();
    if *f == ClosureOperator::trivial(ground.clone()) {
        return Ok(0);
    }
    let candidates: Vec<Vec<Subset>> = ground
        .all_subsets()
        .filter_map(|c| BinaryClassifier::new(ground.clone(), c).ok())
        .map(|b| b.operator().tabulate())
        .collect();
    min_family(f, candidates)
}

fn min_family(f: &ClosureOperator, candidates: Vec<Vec<Subset>>) -> Result<usize> {
    let ground = f.ground();
    let target = f.tabulate();
    let pairs: Vec<(Subset, usize)> = ground
        .all_subsets()
        .flat_map(|a| {
            let image = target[a.index()];
            (0..ground.len())
                .filter(move |&x| !image.contains(x))
                .map(move |x| (a, x))
        })
        .collect();
    debug_assert!(pairs.len() <= 128);
    let everything: u128 = if pairs.len() == 128 {
        u128::MAX
    } else {
        (1u128 << pairs.len()) - 1
    };

    let mut covers: Vec<u128> = candidates
        .iter()
        .filter(|g| {
            ground
                .all_subsets()
                .all(|a| target[a.index()].is_subset_of(g[a.index()]))
        })
        .map(|g| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, (a, x))| !g[a.index()].contains(*x))
                .fold(0u128, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    covers.sort_unstable();
    covers.dedup();
    // drop candidates whose coverage is contained in another's
    let dominated: Vec<bool> = covers
        .iter()
        .map(|&c| covers.iter().any(|&d| d != c && c & !d == 0))
        .collect();
    let covers: Vec<u128> = covers
        .into_iter()
        .zip(dominated)
        .filter_map(|(c, dom)| (!dom).then_some(c))
        .collect();

    fn search(uncovered: u128, budget: usize, covers: &[u128]) -> bool {
        if uncovered == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let lowest = uncovered & uncovered.wrapping_neg();
        covers
            .iter()
            .filter(|&&c| c & lowest != 0)
            .any(|&c| search(uncovered & !c, budget - 1, covers))
    }

    (1..=covers.len())
        .find(|&k| search(everything, k, &covers))
        .ok_or_else(|| Error::WitnessVerificationFailed("no generating family exists".into()))
}
