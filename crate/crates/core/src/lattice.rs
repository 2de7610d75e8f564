//! Finite lattices given by their Hasse diagrams.
//!
//! A [`FiniteLattice`] is validated eagerly: construction rejects cycles,
//! redundant cover edges, several minimal or maximal elements and pairs
//! without a unique meet or join. Every checker afterwards assumes a valid
//! lattice and reads meets and joins from precomputed tables.
//!
//! Counterexample searches scan candidates in index order and return the
//! first hit, so witnesses are deterministic.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde_json::json;

use crate::report::PropertyReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("cover ({0}, {1}) refers to a missing element")]
    IndexOutOfRange(usize, usize),
    #[error("cover from {0} to itself")]
    SelfLoop(String),
    #[error("cover {lower} ⋖ {upper} is listed twice")]
    DuplicateCover { lower: String, upper: String },
    #[error("cover relation has a cycle through {0}")]
    Cycle(String),
    #[error("multiple tops: {0:?}")]
    MultipleTops(Vec<String>),
    #[error("multiple bottoms: {0:?}")]
    MultipleBottoms(Vec<String>),
    #[error("redundant cover {lower} ⋖ {upper}, implied through {via}")]
    RedundantCover { lower: String, upper: String, via: String },
    #[error("{0} and {1} have no unique meet")]
    NoUniqueMeet(String, String),
    #[error("{0} and {1} have no unique join")]
    NoUniqueJoin(String, String),
    #[error("{0} and {1} are not comparable")]
    Incomparable(String, String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// `down[i]` holds every `j ≤ i`.
    down: Vec<FixedBitSet>,
    /// `up[i]` holds every `j ≥ i`.
    up: Vec<FixedBitSet>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(LatticeError::IndexOutOfRange(a, b));
            }
            if a == b {
                return Err(LatticeError::SelfLoop(labels[a].clone()));
            }
            if !seen.insert((a, b)) {
                return Err(LatticeError::DuplicateCover { lower: labels[a].clone(), upper: labels[b].clone() });
            }
            upper[a].push(b);
            lower[b].push(a);
        }
        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }

        // Kahn's algorithm, smallest index first.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(Reverse(i)) = ready.pop() {
            topo.push(i);
            for &j in &upper[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(Reverse(j));
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).expect("some vertex is on a cycle");
            return Err(LatticeError::Cycle(labels[stuck].clone()));
        }

        let tops: Vec<usize> = (0..n).filter(|&i| upper[i].is_empty()).collect();
        if tops.len() > 1 {
            return Err(LatticeError::MultipleTops(tops.iter().map(|&i| labels[i].clone()).collect()));
        }
        let bottoms: Vec<usize> = (0..n).filter(|&i| lower[i].is_empty()).collect();
        if bottoms.len() > 1 {
            return Err(LatticeError::MultipleBottoms(bottoms.iter().map(|&i| labels[i].clone()).collect()));
        }
        let (top, bottom) = (tops[0], bottoms[0]);

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &i in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for &l in &lower[i] {
                set.union_with(&down[l]);
            }
            down[i] = set;
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &i in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for &u in &upper[i] {
                set.union_with(&up[u]);
            }
            up[i] = set;
        }

        for b in 0..n {
            for &a in &lower[b] {
                if let Some(&via) = lower[b].iter().find(|&&c| c != a && down[c].contains(a)) {
                    return Err(LatticeError::RedundantCover {
                        lower: labels[a].clone(),
                        upper: labels[b].clone(),
                        via: labels[via].clone(),
                    });
                }
            }
        }

        let mut position = vec![0; n];
        for (p, &i) in topo.iter().enumerate() {
            position[i] = p;
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = extreme_common(&down[a], &down[b], &down, |c| position[c])
                    .ok_or_else(|| LatticeError::NoUniqueMeet(labels[a].clone(), labels[b].clone()))?;
                let j = extreme_common(&up[a], &up[b], &up, |c| n - position[c])
                    .ok_or_else(|| LatticeError::NoUniqueJoin(labels[a].clone(), labels[b].clone()))?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }

        Ok(FiniteLattice { labels, upper, lower, down, up, meet, join, bottom, top })
    }

    /// Builds the lattice of a partial order given as a `≤` predicate,
    /// taking the transitive reduction for the covers.
    pub fn from_order(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self, LatticeError> {
        let n = labels.len();
        let below: Vec<FixedBitSet> = (0..n)
            .map(|j| {
                let mut s = FixedBitSet::with_capacity(n);
                s.extend((0..n).filter(|&i| i != j && le(i, j)));
                s
            })
            .collect();
        let mut covers = Vec::new();
        for j in 0..n {
            let mut implied = FixedBitSet::with_capacity(n);
            for k in below[j].ones() {
                implied.union_with(&below[k]);
            }
            covers.extend(below[j].difference(&implied).map(|i| (i, j)));
        }
        covers.sort_unstable();
        FiniteLattice::from_covers(labels, &covers)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.size()).flat_map(|a| self.upper[a].iter().map(move |&b| (a, b))).collect()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn meet_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.top, |acc, &x| self.meet(acc, x))
    }

    pub fn join_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.bottom, |acc, &x| self.join(acc, x))
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.lower[i].len() == 1).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.upper[i].len() == 1).collect()
    }

    fn longest_to_top(&self) -> Vec<usize> {
        let mut dist = vec![0usize; self.size()];
        for &i in self.reverse_topological().iter() {
            dist[i] = self.upper[i].iter().map(|&u| dist[u] + 1).max().unwrap_or(0);
        }
        dist
    }

    /// Indices ordered so that every element comes after all its lower covers.
    fn topological(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }

    fn reverse_topological(&self) -> Vec<usize> {
        let mut order = self.topological();
        order.reverse();
        order
    }

    /// The length of a longest maximal chain.
    pub fn length(&self) -> usize {
        self.longest_to_top()[self.bottom]
    }

    /// A longest maximal chain, bottom first, taking the smallest index at each step.
    pub fn longest_chain(&self) -> Vec<usize> {
        let dist = self.longest_to_top();
        let mut chain = vec![self.bottom];
        let mut x = self.bottom;
        while x != self.top {
            x = *self.upper[x].iter().find(|&&u| dist[u] + 1 == dist[x]).expect("path continues");
            chain.push(x);
        }
        chain
    }

    /// A shortest maximal chain, bottom first.
    pub fn shortest_chain(&self) -> Vec<usize> {
        let n = self.size();
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([self.bottom]);
        prev[self.bottom] = self.bottom;
        while let Some(x) = queue.pop_front() {
            for &u in &self.upper[x] {
                if prev[u] == usize::MAX {
                    prev[u] = x;
                    queue.push_back(u);
                }
            }
        }
        let mut chain = vec![self.top];
        let mut x = self.top;
        while x != self.bottom {
            x = prev[x];
            chain.push(x);
        }
        chain.reverse();
        chain
    }

    /// Two maximal chains of different lengths, if any exist.
    pub fn grading_violation(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let short = self.shortest_chain();
        let long = self.longest_chain();
        (short.len() != long.len()).then_some((short, long))
    }

    pub fn is_graded(&self) -> bool {
        self.grading_violation().is_none()
    }

    /// `|J(L)| = ℓ(L) = |M(L)|`.
    pub fn is_extremal(&self) -> bool {
        let len = self.length();
        self.join_irreducibles().len() == len && self.meet_irreducibles().len() == len
    }

    /// A cover `y ⋖ z` on which `x ∧ y = x ∧ z` and `x ∨ y = x ∨ z` are
    /// both true or both false.
    pub fn left_modularity_violation(&self, x: usize) -> Option<(usize, usize)> {
        self.covers().into_iter().find(|&(y, z)| {
            let meets = self.meet(x, y) == self.meet(x, z);
            let joins = self.join(x, y) == self.join(x, z);
            meets == joins
        })
    }

    pub fn is_left_modular_element(&self, x: usize) -> bool {
        self.left_modularity_violation(x).is_none()
    }

    /// A pair `y < z` with `(y ∨ x) ∧ z ≠ y ∨ (x ∧ z)`.
    pub fn left_modularity_violation_def(&self, x: usize) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n).flat_map(|y| (0..n).map(move |z| (y, z))).find(|&(y, z)| {
            self.lt(y, z) && self.meet(self.join(y, x), z) != self.join(y, self.meet(x, z))
        })
    }

    /// Left-modularity straight from the defining identity.
    pub fn is_left_modular_element_def(&self, x: usize) -> bool {
        self.left_modularity_violation_def(x).is_none()
    }

    pub fn left_modular_elements(&self) -> Vec<usize> {
        (0..self.size()).into_par_iter().filter(|&x| self.is_left_modular_element(x)).collect()
    }

    /// A maximal chain of length `ℓ(L)` made of left-modular elements.
    ///
    /// Depth-first through left-modular elements in index order; the first
    /// chain found is returned.
    pub fn find_left_modular_chain(&self) -> Option<Vec<usize>> {
        let n = self.size();
        let mut modular = vec![false; n];
        for x in self.left_modular_elements() {
            modular[x] = true;
        }
        // reach[x]: longest chain of left-modular elements from x up to the top.
        let mut reach: Vec<Option<usize>> = vec![None; n];
        for &x in self.reverse_topological().iter() {
            if !modular[x] {
                continue;
            }
            reach[x] = if x == self.top {
                Some(0)
            } else {
                self.upper[x].iter().filter_map(|&u| reach[u].map(|d| d + 1)).max()
            };
        }
        let len = self.length();
        if reach[self.bottom] != Some(len) {
            return None;
        }
        let mut chain = vec![self.bottom];
        let mut x = self.bottom;
        while x != self.top {
            let want = reach[x].expect("on chain") - 1;
            x = *self.upper[x].iter().find(|&&u| reach[u] == Some(want)).expect("chain continues");
            chain.push(x);
        }
        Some(chain)
    }

    /// Extremal with a left-modular maximal chain of length `ℓ(L)`.
    pub fn is_trim(&self) -> bool {
        self.is_extremal() && self.find_left_modular_chain().is_some()
    }

    fn first_triple(&self, bad: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<(usize, usize, usize)> {
        let n = self.size();
        (0..n).into_par_iter().find_map_first(|x| {
            (0..n).flat_map(|y| (0..n).map(move |z| (y, z))).find(|&(y, z)| bad(x, y, z)).map(|(y, z)| (x, y, z))
        })
    }

    /// `(x, y, z)` with `x ∨ y = x ∨ z` but `x ∨ y ≠ x ∨ (y ∧ z)`.
    pub fn join_semidistributivity_violation(&self) -> Option<(usize, usize, usize)> {
        self.first_triple(|x, y, z| {
            let j = self.join(x, y);
            j == self.join(x, z) && j != self.join(x, self.meet(y, z))
        })
    }

    /// `(x, y, z)` with `x ∧ y = x ∧ z` but `x ∧ y ≠ x ∧ (y ∨ z)`.
    pub fn meet_semidistributivity_violation(&self) -> Option<(usize, usize, usize)> {
        self.first_triple(|x, y, z| {
            let m = self.meet(x, y);
            m == self.meet(x, z) && m != self.meet(x, self.join(y, z))
        })
    }

    pub fn is_join_semidistributive(&self) -> bool {
        self.join_semidistributivity_violation().is_none()
    }

    pub fn is_meet_semidistributive(&self) -> bool {
        self.meet_semidistributivity_violation().is_none()
    }

    pub fn is_semidistributive(&self) -> bool {
        self.is_join_semidistributive() && self.is_meet_semidistributive()
    }

    /// `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        self.first_triple(|x, y, z| self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)))
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation().is_none()
    }

    /// Indices of `[a, b]`, ascending.
    pub fn interval_indices(&self, a: usize, b: usize) -> Vec<usize> {
        let mut set = self.up[a].clone();
        set.intersect_with(&self.down[b]);
        set.ones().collect()
    }

    /// The interval `[a, b]` as a lattice in its own right.
    pub fn sublattice_interval(&self, a: usize, b: usize) -> Result<FiniteLattice, LatticeError> {
        if !self.le(a, b) {
            return Err(LatticeError::Incomparable(self.labels[a].clone(), self.labels[b].clone()));
        }
        let members = self.interval_indices(a, b);
        let mut local = vec![usize::MAX; self.size()];
        for (k, &i) in members.iter().enumerate() {
            local[i] = k;
        }
        let covers: Vec<(usize, usize)> = self
            .covers()
            .into_iter()
            .filter(|&(x, y)| local[x] != usize::MAX && local[y] != usize::MAX)
            .map(|(x, y)| (local[x], local[y]))
            .collect();
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        FiniteLattice::from_covers(labels, &covers)
    }

    /// The order-dual lattice on the same labels.
    pub fn dual(&self) -> FiniteLattice {
        let covers: Vec<(usize, usize)> = self.covers().into_iter().map(|(a, b)| (b, a)).collect();
        FiniteLattice::from_covers(self.labels.clone(), &covers).expect("dual of a lattice is a lattice")
    }

    fn names(&self, items: &[usize]) -> Vec<&str> {
        items.iter().map(|&i| self.label(i)).collect()
    }

    /// Every property verdict, with witnesses.
    pub fn analyze(&self) -> PropertyReport {
        let mut report = PropertyReport::default();
        let j = self.join_irreducibles();
        let m = self.meet_irreducibles();
        let len = self.length();
        report.describe("size", json!(self.size()));
        report.describe("length", json!(len));
        report.describe("join_irreducibles", json!(self.names(&j)));
        report.describe("meet_irreducibles", json!(self.names(&m)));

        let triple = |t: Option<(usize, usize, usize)>| {
            t.map(|(x, y, z)| json!({ "triple": [self.label(x), self.label(y), self.label(z)] }))
        };
        let jsd = self.join_semidistributivity_violation();
        let msd = self.meet_semidistributivity_violation();
        report.record("join_semidistributive", jsd.is_none(), triple(jsd));
        report.record("meet_semidistributive", msd.is_none(), triple(msd));
        report.record("semidistributive", jsd.is_none() && msd.is_none(), triple(jsd.or(msd)));
        let dist = self.distributivity_violation();
        report.record("distributive", dist.is_none(), triple(dist));

        let graded = self.grading_violation();
        report.record(
            "graded",
            graded.is_none(),
            graded.map(|(a, b)| json!({ "chains": [self.names(&a), self.names(&b)] })),
        );
        let extremal = j.len() == len && m.len() == len;
        let counts = json!({ "join_irreducibles": j.len(), "length": len, "meet_irreducibles": m.len() });
        report.record("extremal", extremal, (!extremal).then(|| counts.clone()));

        let chain = self.find_left_modular_chain();
        let chain_witness = match &chain {
            Some(c) => json!({ "chain": self.names(c) }),
            None => json!({ "left_modular_elements": self.names(&self.left_modular_elements()) }),
        };
        report.record("left_modular", chain.is_some(), Some(chain_witness.clone()));

        let trim = extremal && chain.is_some();
        let trim_witness = if trim {
            chain_witness
        } else if !extremal {
            json!({ "not_extremal": counts })
        } else {
            json!({ "no_left_modular_chain": chain_witness })
        };
        report.record("trim", trim, Some(trim_witness));
        report
    }
}

/// The element of `a ∩ b` that dominates the whole intersection, if any.
fn extreme_common(
    a: &FixedBitSet,
    b: &FixedBitSet,
    closure: &[FixedBitSet],
    rank: impl Fn(usize) -> usize,
) -> Option<usize> {
    let mut common = a.clone();
    common.intersect_with(b);
    let best = common.ones().max_by_key(|&c| rank(c))?;
    common.is_subset(&closure[best]).then_some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(n: usize, covers: &[(usize, usize)]) -> FiniteLattice {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        FiniteLattice::from_covers(labels, covers).unwrap()
    }

    fn chain(n: usize) -> FiniteLattice {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        lattice(n, &covers)
    }

    fn diamond() -> FiniteLattice {
        lattice(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    /// 0 < a < b < 1 on the long side, 0 < c < 1 on the short side.
    fn pentagon() -> FiniteLattice {
        lattice(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    }

    fn boolean3() -> FiniteLattice {
        let covers: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|a| (0..3).map(move |bit| (a, a | (1 << bit))).filter(move |&(x, y)| x != y))
            .collect();
        lattice(8, &covers)
    }

    #[test]
    fn validation_errors() {
        let labels = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        assert_eq!(FiniteLattice::from_covers(vec![], &[]), Err(LatticeError::Empty));
        assert!(matches!(
            FiniteLattice::from_covers(labels(4), &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 2), (2, 1)]),
            Err(LatticeError::Cycle(_))
        ));
        // bowtie: 0 below a, b; both below c and d
        assert!(matches!(
            FiniteLattice::from_covers(labels(5), &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
            Err(LatticeError::MultipleTops(_))
        ));
        assert!(matches!(
            FiniteLattice::from_covers(labels(3), &[(0, 2), (1, 2)]),
            Err(LatticeError::MultipleBottoms(_))
        ));
        assert!(matches!(
            FiniteLattice::from_covers(labels(3), &[(0, 1), (1, 2), (0, 2)]),
            Err(LatticeError::RedundantCover { .. })
        ));
        // bottom, a, b, c, d, top with a, b both below c, d: a ∨ b is not unique
        assert!(matches!(
            FiniteLattice::from_covers(
                labels(6),
                &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
            ),
            Err(LatticeError::NoUniqueJoin(_, _))
        ));
        assert!(matches!(
            FiniteLattice::from_covers(labels(2), &[(0, 1), (0, 1)]),
            Err(LatticeError::DuplicateCover { .. })
        ));
        assert_eq!(FiniteLattice::from_covers(labels(2), &[(0, 2)]), Err(LatticeError::IndexOutOfRange(0, 2)));
    }

    #[test]
    fn chains_are_trim_and_distributive() {
        let l = chain(3);
        assert_eq!(l.length(), 2);
        assert!(l.is_extremal());
        assert_eq!(l.find_left_modular_chain(), Some(vec![0, 1, 2]));
        assert!(l.is_distributive());
        assert!(l.dual().is_graded());
        let one = chain(1);
        assert_eq!(one.length(), 0);
        let report = one.analyze();
        assert!(report.verdicts.values().all(|v| v.holds));
    }

    #[test]
    fn diamond_irreducibles() {
        let l = diamond();
        assert_eq!(l.join_irreducibles(), vec![1, 2]);
        assert_eq!(l.meet_irreducibles(), vec![1, 2]);
        assert!(l.is_graded());
        assert!(l.is_distributive());
    }

    #[test]
    fn pentagon_properties() {
        let l = pentagon();
        let (short, long) = l.grading_violation().unwrap();
        assert_eq!(short.len() - 1, 2);
        assert_eq!(long.len() - 1, 3);
        assert!(!l.is_distributive());
        assert!(l.is_semidistributive());
        // Left-modular: everything except the short-side middle c.
        let lm: Vec<bool> = (0..5).map(|x| l.is_left_modular_element(x)).collect();
        assert_eq!(lm, [true, true, true, false, true]);
        let lm_def: Vec<bool> = (0..5).map(|x| l.is_left_modular_element_def(x)).collect();
        assert_eq!(lm, lm_def);
        assert_eq!(l.find_left_modular_chain(), Some(vec![0, 1, 2, 4]));
        assert!(l.is_trim());
    }

    #[test]
    fn boolean_lattice() {
        let l = boolean3();
        assert!(l.is_distributive());
        assert!(l.is_semidistributive());
        assert!(l.is_trim());
        assert_eq!(l.length(), 3);
    }

    #[test]
    fn intervals_and_duals() {
        let l = pentagon();
        assert_eq!(l.sublattice_interval(0, 4).unwrap(), l);
        assert_eq!(l.sublattice_interval(2, 2).unwrap().size(), 1);
        assert!(matches!(l.sublattice_interval(1, 3), Err(LatticeError::Incomparable(_, _))));
        let d = l.dual();
        assert_eq!(d.dual(), l);
        assert_eq!(d.join_irreducibles(), l.meet_irreducibles());
        assert_eq!(chain(4).dual().length(), 3);
    }
}
