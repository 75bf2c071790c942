#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use closure_ops::{
    ClosureOperator, FinitePoset, GroundSet, Labeling, MenuPreference, Subset, Topology, WeakOrder,
};
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

pub fn letters(n: usize) -> Arc<GroundSet> {
    GroundSet::letters(n).unwrap()
}

pub fn sets(g: &GroundSet, compact: &[&str]) -> Vec<Subset> {
    compact
        .iter()
        .map(|s| g.parse_compact(s).unwrap())
        .collect()
}

pub fn topology(g: &Arc<GroundSet>, compact: &[&str]) -> Topology {
    Topology::new(g.clone(), sets(g, compact)).unwrap()
}

pub fn operator(g: &Arc<GroundSet>, compact: &[&str]) -> ClosureOperator {
    ClosureOperator::FromTopology(topology(g, compact))
}

pub fn random_subset<R: Rng>(rng: &mut R, g: &GroundSet) -> Subset {
    Subset::from_bits(rng.random_range(0..g.power_set_len() as u32))
}

/// Intersection closure of a few random subsets.
pub fn random_topology<R: Rng>(rng: &mut R, g: &Arc<GroundSet>) -> Topology {
    let k = rng.random_range(0..=g.len() + 2);
    let family: Vec<Subset> = (0..k).map(|_| random_subset(rng, g)).collect();
    Topology::generated_by(g.clone(), family).unwrap()
}

pub fn random_operator<R: Rng>(rng: &mut R, g: &Arc<GroundSet>) -> ClosureOperator {
    ClosureOperator::FromTopology(random_topology(rng, g))
}

pub fn random_weak_order<R: Rng>(rng: &mut R, g: &Arc<GroundSet>) -> WeakOrder {
    let n = g.len() as u32;
    let values: Vec<u32> = (0..g.len()).map(|_| rng.random_range(0..n)).collect();
    WeakOrder::from_utilities(g.clone(), |x| values[x])
}

pub fn random_labeling<R: Rng>(rng: &mut R, g: &Arc<GroundSet>) -> Labeling {
    let k = rng.random_range(0..=g.len() + 2);
    let labels = (0..k).map(|i| format!("l{i}")).collect();
    let phi = (0..g.len())
        .map(|_| (0..k).filter(|_| rng.random_bool(0.5)).collect())
        .collect();
    Labeling::new(g.clone(), labels, phi).unwrap()
}

/// Sum of per-state maxima over `k` random weak orders.
pub fn random_sum_of_maxes<R: Rng>(
    rng: &mut R,
    g: &Arc<GroundSet>,
    k: usize,
) -> (MenuPreference, Vec<WeakOrder>) {
    let states: Vec<WeakOrder> = (0..k).map(|_| random_weak_order(rng, g)).collect();
    (
        MenuPreference::sum_of_maxes(g.clone(), &states).unwrap(),
        states,
    )
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        rng.random_range(-20i64..=20).into(),
        rng.random_range(1i64..=6).into(),
    )
}

/// A preference constant on each closure class: `U(A) = r(f(A))`.
pub fn random_respecting<R: Rng>(rng: &mut R, f: &ClosureOperator) -> MenuPreference {
    let g = f.ground();
    let values: Vec<BigRational> = g.all_subsets().map(|_| random_rational(rng)).collect();
    MenuPreference::from_fn(g.clone(), |a| values[f.apply(a).index()].clone())
}

/// Random partial order on `n` items, with items relabelled so that index
/// order is not a linear extension.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> FinitePoset {
    let density = rng.random_range(0.05..0.6);
    let mut rel: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i == j || (i < j && rng.random_bool(density)))
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    FinitePoset::new(labels, |a, b| rel[perm[a]][perm[b]]).unwrap()
}

/// Every topology on `g`, by brute force over families of proper
/// nonempty subsets. Only sensible for `|X| ≤ 3`.
pub fn all_topologies(g: &Arc<GroundSet>) -> Vec<Topology> {
    let middle: Vec<Subset> = g.nonempty_subsets().filter(|&s| s != g.full()).collect();
    assert!(middle.len() <= 16);
    (0u32..1 << middle.len())
        .filter_map(|mask| {
            let mut family = vec![Subset::EMPTY, g.full()];
            family.extend(
                (0..middle.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| middle[i]),
            );
            Topology::new(g.clone(), family).ok()
        })
        .collect()
}
