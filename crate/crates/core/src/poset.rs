//! Finite posets: cover relation, minimum chain covers and Möbius inversion.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// A finite partial order over items `0..len`, each carrying a display
/// label. `up[a]` holds every `b` with `a ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
}

impl FinitePoset {
    /// Builds a poset from a relation, rejecting the first pair that breaks
    /// reflexivity, antisymmetry or transitivity.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    row.insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::InvalidPoset(format!(
                    "{} ≤ {} fails",
                    labels[a], labels[a]
                )));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::InvalidPoset(format!(
                        "{} and {} are mutually below each other",
                        labels[a], labels[b]
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    let c = up[b]
                        .difference(&up[a])
                        .next()
                        .expect("nonempty difference");
                    return Err(Error::InvalidPoset(format!(
                        "{} ≤ {} ≤ {} but not {} ≤ {}",
                        labels[a], labels[b], labels[c], labels[a], labels[c]
                    )));
                }
            }
        }
        Ok(FinitePoset { labels, up })
    }

    fn from_rows_unchecked(labels: Vec<String>, up: Vec<FixedBitSet>) -> Self {
        FinitePoset { labels, up }
    }

    /// `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n)
            .map(|a| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(a..n);
                row
            })
            .collect();
        Self::from_rows_unchecked(labels, up)
    }

    /// Subsets ordered by inclusion, in the given item order.
    pub fn inclusion(ground: &GroundSet, sets: &[Subset]) -> Self {
        Self::by_subsets(ground, sets, |a, b| a.is_subset_of(b))
    }

    /// Subsets ordered by reverse inclusion: `A ≤ B` iff `B ⊆ A`.
    pub fn reverse_inclusion(ground: &GroundSet, sets: &[Subset]) -> Self {
        Self::by_subsets(ground, sets, |a, b| b.is_subset_of(a))
    }

    fn by_subsets(
        ground: &GroundSet,
        sets: &[Subset],
        leq: impl Fn(Subset, Subset) -> bool,
    ) -> Self {
        let n = sets.len();
        let labels = sets.iter().map(|s| ground.format(*s)).collect();
        let up = sets
            .iter()
            .map(|&a| {
                let mut row = FixedBitSet::with_capacity(n);
                for (j, &b) in sets.iter().enumerate() {
                    if leq(a, b) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Self::from_rows_unchecked(labels, up)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_antichain(&self, items: &[usize]) -> bool {
        items.iter().enumerate().all(|(i, &a)| {
            items[i + 1..]
                .iter()
                .all(|&b| a != b && !self.comparable(a, b))
        })
    }

    /// A linear extension: items sorted by the size of their down-set,
    /// ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut below = vec![0usize; n];
        for row in &self.up {
            for b in row.ones() {
                below[b] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (below[i], i));
        order
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between, sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in self.up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in self.up[a].ones() {
                if a == b {
                    continue;
                }
                // strictly between: above a, below b, neither endpoint
                let between = self.up[a].intersection(&down[b]).any(|c| c != a && c != b);
                if !between {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// Graphviz rendering of the cover relation, edges pointing upward.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (a, b) in self.hasse() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// Minimum chain cover (Dilworth) via maximum matching on the strict
    /// order, with a maximum antichain recovered from König's theorem.
    pub fn min_chain_cover(&self) -> ChainDecomposition {
        let n = self.len();
        let adjacency: Vec<Vec<usize>> = (0..n)
            .map(|a| self.up[a].ones().filter(|&b| b != a).collect())
            .collect();
        let matching = hopcroft_karp(n, &adjacency);

        let mut chains = Vec::new();
        for start in 0..n {
            if matching.right[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = matching.left[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| c[0]);

        // König: alternate from free left vertices.
        let mut left_seen = vec![false; n];
        let mut right_seen = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&a| matching.left[a].is_none()).collect();
        for &a in &queue {
            left_seen[a] = true;
        }
        while let Some(a) = queue.pop_front() {
            for &b in &adjacency[a] {
                if matching.left[a] == Some(b) || right_seen[b] {
                    continue;
                }
                right_seen[b] = true;
                if let Some(a2) = matching.right[b] {
                    if !left_seen[a2] {
                        left_seen[a2] = true;
                        queue.push_back(a2);
                    }
                }
            }
        }
        let antichain: Vec<usize> = (0..n).filter(|&x| left_seen[x] && !right_seen[x]).collect();

        ChainDecomposition {
            width: chains.len(),
            cover: ChainCover { chains },
            antichain,
        }
    }

    pub fn width(&self) -> usize {
        self.min_chain_cover().width
    }

    /// The Möbius function, by the recursion
    /// `μ(x,y) = −Σ_{x ≤ z < y} μ(x,z)` over a linear extension.
    pub fn mobius(&self) -> MobiusTable {
        let n = self.len();
        let order = self.linear_extension();
        let mut mu = vec![0i64; n * n];
        for x in 0..n {
            mu[x * n + x] = 1;
            for &y in order.iter().filter(|&&y| y != x && self.leq(x, y)) {
                let mut sum = 0i64;
                for z in self.up[x].ones() {
                    if z != y && self.leq(z, y) {
                        sum = sum
                            .checked_add(mu[x * n + z])
                            .expect("Möbius value overflow");
                    }
                }
                mu[x * n + y] = -sum;
            }
        }
        MobiusTable { n, mu }
    }

    /// `h(x) = Σ_{y ≤ x} μ(y,x)·g(y)`.
    pub fn mobius_invert(&self, g: &[BigRational]) -> Vec<BigRational> {
        self.mobius_invert_with(&self.mobius(), g)
    }

    pub fn mobius_invert_with(&self, mu: &MobiusTable, g: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(g.len(), self.len(), "function must be total on items");
        let n = self.len();
        (0..n)
            .map(|x| {
                let mut acc = BigRational::zero();
                for (y, gy) in g.iter().enumerate() {
                    let m = mu.get(y, x);
                    if m != 0 && self.leq(y, x) {
                        acc += gy * BigRational::from_integer(m.into());
                    }
                }
                acc
            })
            .collect()
    }

    /// `g(x) = Σ_{y ≤ x} h(y)`, the inverse of [`Self::mobius_invert`].
    pub fn zeta_sum(&self, h: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(h.len(), self.len(), "function must be total on items");
        (0..self.len())
            .map(|x| {
                h.iter()
                    .enumerate()
                    .filter(|(y, _)| self.leq(*y, x))
                    .fold(BigRational::zero(), |acc, (_, v)| acc + v)
            })
            .collect()
    }
}

/// Disjoint chains covering every item, each listed bottom-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    /// True when the chains partition `0..n` and each is strictly increasing.
    pub fn is_valid_for(&self, poset: &FinitePoset) -> bool {
        let mut seen = vec![false; poset.len()];
        for chain in &self.chains {
            if chain.is_empty() {
                return false;
            }
            for w in chain.windows(2) {
                if !poset.lt(w[0], w[1]) {
                    return false;
                }
            }
            for &x in chain {
                if x >= seen.len() || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub width: usize,
    pub cover: ChainCover,
    /// Mutually incomparable items, as many as there are chains.
    pub antichain: Vec<usize>,
}

/// Exact integer Möbius values, `μ(x,y) = 0` unless `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    n: usize,
    mu: Vec<i64>,
}

impl MobiusTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.mu[x * self.n + y]
    }

    /// Nonzero entries `(x, y, μ(x,y))`, row-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n).flat_map(move |x| {
            (0..self.n).filter_map(move |y| {
                let v = self.get(x, y);
                (v != 0).then_some((x, y, v))
            })
        })
    }
}

struct Matching {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

/// Hopcroft–Karp on a bipartite graph with `n` vertices per side.
/// Neighbours are scanned in the given order, so results are deterministic.
fn hopcroft_karp(n: usize, adjacency: &[Vec<usize>]) -> Matching {
    let mut left: Vec<Option<usize>> = vec![None; n];
    let mut right: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];

    fn bfs(
        adjacency: &[Vec<usize>],
        left: &[Option<usize>],
        right: &[Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        let mut queue = VecDeque::new();
        for (a, m) in left.iter().enumerate() {
            if m.is_none() {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adjacency[a] {
                match right[b] {
                    None => found = true,
                    Some(a2) if dist[a2] == usize::MAX => {
                        dist[a2] = dist[a] + 1;
                        queue.push_back(a2);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn dfs(
        a: usize,
        adjacency: &[Vec<usize>],
        left: &mut [Option<usize>],
        right: &mut [Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        for &b in &adjacency[a] {
            let ok = match right[b] {
                None => true,
                Some(a2) => dist[a2] == dist[a] + 1 && dfs(a2, adjacency, left, right, dist),
            };
            if ok {
                left[a] = Some(b);
                right[b] = Some(a);
                return true;
            }
        }
        dist[a] = usize::MAX;
        false
    }

    while bfs(adjacency, &left, &right, &mut dist) {
        for a in 0..n {
            if left[a].is_none() {
                dfs(a, adjacency, &mut left, &mut right, &mut dist);
            }
        }
    }
    Matching { left, right }
}
