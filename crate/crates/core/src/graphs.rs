//! Directed information-sharing constraint graphs and the graph quantities
//! the price-of-anarchy bounds depend on.
//!
//! Conventions: nodes are labeled `1..=n` to match hand-drawn figures; an
//! edge `(j, i)` means agent `i` observes agent `j` (`j ∈ N_i`). Cliques and
//! independence are taken over the "either direction" adjacency, reciprocal
//! quantities over the "both directions" subgraph.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lp::{self, Constraint, Sense};
use crate::scalar::{int, Scalar};

/// Nodes are stored as bits of a `u64`.
pub const MAX_NODES: usize = 64;
/// Default exhaustive cap for the branch-and-bound independence solver.
pub const DEFAULT_INDEPENDENCE_CAP: usize = 24;
/// Default exhaustive cap for the integer clique-cover DP.
pub const DEFAULT_COVER_CAP: usize = 12;
/// Default cap on the number of subset expansions in the clique census.
pub const DEFAULT_CENSUS_CAP: u64 = 1 << 22;

#[derive(Clone, PartialEq, Eq)]
pub struct ConstraintGraph {
    n: usize,
    /// `in_masks[i]` bit `j` set ⟺ edge `(j+1, i+1)`: node `i+1` observes `j+1`.
    in_masks: Vec<u64>,
}

impl ConstraintGraph {
    /// Build from 1-based `(observed, observer)` edge pairs. Self-loops are
    /// rejected; duplicates collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_NODES {
            return Err(Error::InvalidGraph(format!(
                "node count must be in 1..={MAX_NODES}, got {n}"
            )));
        }
        let mut in_masks = vec![0u64; n];
        for &(j, i) in edges {
            if j == 0 || j > n || i == 0 || i > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({j}, {i}) out of range 1..={n}"
                )));
            }
            if j == i {
                return Err(Error::InvalidGraph(format!("self-loop at node {i}")));
            }
            in_masks[i - 1] |= 1u64 << (j - 1);
        }
        Ok(ConstraintGraph { n, in_masks })
    }

    pub fn complete(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_NODES);
        let full = mask_full(n);
        let in_masks = (0..n).map(|i| full & !(1u64 << i)).collect();
        ConstraintGraph { n, in_masks }
    }

    /// Copy of `self` with the given 1-based `(observed, observer)` edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut g = self.clone();
        for &(j, i) in removed {
            assert!(j >= 1 && j <= self.n && i >= 1 && i <= self.n);
            g.in_masks[i - 1] &= !(1u64 << (j - 1));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.in_masks.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn has_any_edge(&self) -> bool {
        self.in_masks.iter().any(|&m| m != 0)
    }

    /// Does `observer` see `observed`? 1-based labels.
    pub fn observes(&self, observer: usize, observed: usize) -> bool {
        self.in_masks[observer - 1] & (1u64 << (observed - 1)) != 0
    }

    /// Sorted `(observed, observer)` pairs, 1-based.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..=self.n {
            for i in 1..=self.n {
                if i != j && self.observes(i, j) {
                    out.push((j, i));
                }
            }
        }
        out
    }

    pub fn in_neighbors(&self, i: usize) -> Vec<usize> {
        mask_to_labels(self.in_masks[i - 1])
    }

    /// Closed in-neighborhood `N_i ∪ {i}` as a 0-based bitmask.
    pub(crate) fn closed_in_mask(&self, i0: usize) -> u64 {
        self.in_masks[i0] | (1u64 << i0)
    }

    /// Subgraph keeping only edges present in both directions.
    pub fn reciprocal_subgraph(&self) -> ConstraintGraph {
        let mut in_masks = vec![0u64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j
                    && self.in_masks[i] & (1u64 << j) != 0
                    && self.in_masks[j] & (1u64 << i) != 0
                {
                    in_masks[i] |= 1u64 << j;
                }
            }
        }
        ConstraintGraph {
            n: self.n,
            in_masks,
        }
    }

    /// "Either direction" adjacency, 0-based masks without self bits.
    pub(crate) fn symmetric_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j
                    && (self.in_masks[i] & (1u64 << j) != 0
                        || self.in_masks[j] & (1u64 << i) != 0)
                {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        adj
    }

    /// Clique in the paper's sense: every pair linked in at least one direction.
    pub fn is_clique(&self, nodes: &[usize]) -> bool {
        for (a, &x) in nodes.iter().enumerate() {
            for &y in nodes.iter().skip(a + 1) {
                if x == y || (!self.observes(x, y) && !self.observes(y, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// Independent set: no edge in either direction between members.
    pub fn is_independent_set(&self, nodes: &[usize]) -> bool {
        for (a, &x) in nodes.iter().enumerate() {
            for &y in nodes.iter().skip(a + 1) {
                if x == y || self.observes(x, y) || self.observes(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Relabel nodes; `perm[old-1] = new` must be a bijection on `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ConstraintGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation arity mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || seen[p - 1] {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
            seen[p - 1] = true;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(j, i)| (perm[j - 1], perm[i - 1]))
            .collect();
        ConstraintGraph::new(self.n, &edges)
    }
}

impl std::fmt::Debug for ConstraintGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ConstraintGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The unique partition into maximal information groups: nodes sharing the
/// same closed in-neighborhood. Members of a group necessarily observe each
/// other in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationPartition {
    /// Disjoint groups covering `1..=n`, each sorted, ordered by least member.
    pub groups: Vec<Vec<usize>>,
    /// Per group: the in-neighbors common to every member, outside the group.
    pub common_in_neighbors: Vec<Vec<usize>>,
}

impl InformationPartition {
    pub fn tau(&self) -> usize {
        self.groups.len()
    }

    /// Index into `groups` of the group containing `node` (1-based).
    pub fn group_of(&self, node: usize) -> usize {
        self.groups
            .iter()
            .position(|g| g.contains(&node))
            .expect("node within partition")
    }
}

pub fn information_groups(g: &ConstraintGraph) -> InformationPartition {
    let mut by_row: HashMap<u64, Vec<usize>> = HashMap::new();
    for i0 in 0..g.n() {
        by_row.entry(g.closed_in_mask(i0)).or_default().push(i0 + 1);
    }
    let mut entries: Vec<(u64, Vec<usize>)> = by_row.into_iter().collect();
    entries.sort_by_key(|(_, members)| members[0]);
    let mut groups = Vec::with_capacity(entries.len());
    let mut common = Vec::with_capacity(entries.len());
    for (row, members) in entries {
        let group_mask = members.iter().fold(0u64, |m, &v| m | (1u64 << (v - 1)));
        debug_assert!(
            members
                .iter()
                .all(|&v| g.closed_in_mask(v - 1) == row),
            "group rows must agree"
        );
        common.push(mask_to_labels(row & !group_mask));
        groups.push(members);
    }
    InformationPartition {
        groups,
        common_in_neighbors: common,
    }
}

/// All maximal cliques of the either-direction adjacency, in canonical
/// (lexicographic member list) order. Isolated nodes appear as singletons.
#[derive(Clone, Debug)]
pub struct CliqueSystem {
    pub cliques: Vec<Vec<usize>>,
    pub(crate) masks: Vec<u64>,
}

impl CliqueSystem {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Bron–Kerbosch with pivoting on bitmask adjacency.
pub fn maximal_cliques(g: &ConstraintGraph) -> CliqueSystem {
    let adj = g.symmetric_masks();
    let mut found: Vec<u64> = Vec::new();
    bron_kerbosch(&adj, 0, mask_full(g.n()), 0, &mut found);
    let mut cliques: Vec<Vec<usize>> = found.iter().map(|&m| mask_to_labels(m)).collect();
    cliques.sort();
    let masks = cliques
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << (v - 1))))
        .collect();
    CliqueSystem { cliques, masks }
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = iter_bits(p | x)
        .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p|x nonempty");
    let mut cand = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
        cand &= !bit;
    }
}

/// Every nonempty clique (not only maximal ones), by subset expansion of the
/// maximal cliques. `cap` bounds the number of expansions.
pub fn all_cliques(g: &ConstraintGraph, cap: u64) -> Result<Vec<Vec<usize>>> {
    let maximal = maximal_cliques(g);
    let work: u128 = maximal
        .masks
        .iter()
        .map(|m| 1u128 << m.count_ones())
        .sum();
    if work > cap as u128 {
        return Err(Error::SizeLimit {
            what: "clique subset expansion",
            needed: work,
            cap: cap as u128,
        });
    }
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for &m in &maximal.masks {
        // standard submask walk
        let mut s = m;
        while s != 0 {
            seen.insert(s);
            s = (s - 1) & m;
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().map(mask_to_labels).collect();
    out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    Ok(out)
}

/// Count of cliques per size; e.g. a triangle with a pendant edge has
/// census {1: 4, 2: 4, 3: 1}.
pub fn clique_census(g: &ConstraintGraph, cap: u64) -> Result<BTreeMap<usize, u64>> {
    let mut census = BTreeMap::new();
    for c in all_cliques(g, cap)? {
        *census.entry(c.len()).or_insert(0) += 1;
    }
    Ok(census)
}

/// Exact maximum independent set via branch and bound with a greedy seed.
/// Returns the size and a witness set (sorted labels).
pub fn independence_number(g: &ConstraintGraph, cap: usize) -> Result<(usize, Vec<usize>)> {
    if g.n() > cap {
        return Err(Error::SizeLimit {
            what: "exhaustive independence number",
            needed: g.n() as u128,
            cap: cap as u128,
        });
    }
    let adj = g.symmetric_masks();
    let full = mask_full(g.n());

    // greedy lower bound: repeatedly take the min-degree remaining vertex
    let mut best = 0u64;
    let mut remaining = full;
    while remaining != 0 {
        let v = iter_bits(remaining)
            .min_by_key(|&v| ((adj[v] & remaining).count_ones(), v))
            .unwrap();
        best |= 1u64 << v;
        remaining &= !(adj[v] | (1u64 << v));
    }

    fn bnb(adj: &[u64], chosen: u64, cand: u64, best: &mut u64) {
        if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        if cand == 0 {
            *best = chosen;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bnb(adj, chosen | bit, cand & !adj[v] & !bit, best);
        bnb(adj, chosen, cand & !bit, best);
    }
    bnb(&adj, 0, full, &mut best);

    Ok((best.count_ones() as usize, mask_to_labels(best)))
}

/// Exact minimum clique cover via subset DP, with a witness partition.
pub fn clique_cover_number(
    g: &ConstraintGraph,
    cap: usize,
) -> Result<(usize, Vec<Vec<usize>>)> {
    let n = g.n();
    if n > cap {
        return Err(Error::SizeLimit {
            what: "exhaustive clique cover",
            needed: n as u128,
            cap: cap as u128,
        });
    }
    let adj = g.symmetric_masks();
    let size = 1usize << n;
    // is_clique[m] by single-vertex peeling
    let mut is_clique = vec![false; size];
    is_clique[0] = true;
    for m in 1..size {
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        is_clique[m] = is_clique[rest] && (rest as u64 & !adj[v]) == 0;
    }
    let mut dp = vec![u32::MAX; size];
    let mut choice = vec![0usize; size];
    dp[0] = 0;
    for m in 1..size {
        let v = m.trailing_zeros() as usize;
        let vbit = 1usize << v;
        // walk submasks of m that contain v
        let rest = m & !vbit;
        let mut s = rest;
        loop {
            let part = s | vbit;
            if is_clique[part] && dp[m ^ part] != u32::MAX && dp[m ^ part] + 1 < dp[m] {
                dp[m] = dp[m ^ part] + 1;
                choice[m] = part;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
    }
    let mut parts = Vec::new();
    let mut m = size - 1;
    while m != 0 {
        parts.push(mask_to_labels(choice[m] as u64));
        m ^= choice[m];
    }
    parts.sort();
    Ok((dp[size - 1] as usize, parts))
}

#[derive(Clone, Debug)]
pub struct FractionalIndependence<R> {
    pub value: R,
    pub node_weights: Vec<R>,
    pub cliques: CliqueSystem,
}

/// LP relaxation of the independence program: maximize `1·z` subject to
/// `z(C) ≤ 1` for every maximal clique `C` and `z ≥ 0`. Constraining only
/// maximal cliques loses nothing: any clique is contained in a maximal one,
/// so its constraint is dominated.
pub fn fractional_independence<R: Scalar>(g: &ConstraintGraph) -> FractionalIndependence<R> {
    let cliques = maximal_cliques(g);
    let (value, node_weights) = fractional_independence_over(g.n(), &cliques.masks);
    FractionalIndependence {
        value,
        node_weights,
        cliques,
    }
}

/// Same LP over an explicit clique list (0-based masks).
pub fn fractional_independence_over<R: Scalar>(
    n: usize,
    clique_masks: &[u64],
) -> (R, Vec<R>) {
    let cons: Vec<Constraint<R>> = clique_masks
        .iter()
        .map(|&m| {
            let mut coeffs = vec![R::zero(); n];
            for v in iter_bits(m) {
                coeffs[v] = R::one();
            }
            Constraint::le(coeffs, R::one())
        })
        .collect();
    let sol = lp::solve(Sense::Maximize, &vec![int::<R>(1); n], &cons)
        .expect("independence LP is feasible and bounded");
    (sol.value, sol.x)
}

#[derive(Clone, Debug)]
pub struct FractionalCliqueCover<R> {
    pub value: R,
    pub clique_weights: Vec<R>,
    pub cliques: CliqueSystem,
}

/// Dual program: minimize `1·y` over clique weights such that every node is
/// covered with total weight at least one. By strong duality its optimum
/// equals the fractional independence number, and the equality is asserted
/// as exact rational equality in the test suite.
pub fn fractional_clique_cover<R: Scalar>(g: &ConstraintGraph) -> FractionalCliqueCover<R> {
    let cliques = maximal_cliques(g);
    let k = cliques.len();
    let cons: Vec<Constraint<R>> = (0..g.n())
        .map(|v| {
            let coeffs: Vec<R> = cliques
                .masks
                .iter()
                .map(|&m| {
                    if m & (1u64 << v) != 0 {
                        R::one()
                    } else {
                        R::zero()
                    }
                })
                .collect();
            Constraint::ge(coeffs, R::one())
        })
        .collect();
    let sol = lp::solve(Sense::Minimize, &vec![int::<R>(1); k], &cons)
        .expect("cover LP is feasible and bounded");
    FractionalCliqueCover {
        value: sol.value,
        clique_weights: sol.x,
        cliques,
    }
}

fn mask_full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_labels(mask: u64) -> Vec<usize> {
    iter_bits(mask).map(|i| i + 1).collect()
}

fn iter_bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use crate::{BigRat, Rat64};

    /// The four-graph family from the worked example: complete on 4 nodes,
    /// then successively remove (1,2), (3,1), (4,3).
    pub(crate) fn example_family() -> [ConstraintGraph; 4] {
        let g1 = ConstraintGraph::complete(4);
        let g2 = g1.without_edges(&[(1, 2)]);
        let g3 = g2.without_edges(&[(3, 1)]);
        let g4 = g3.without_edges(&[(4, 3)]);
        [g1, g2, g3, g4]
    }

    fn fig2a() -> ConstraintGraph {
        // triangle 1-2-3 plus triangle 1-2-4, all edges reciprocal
        let mut edges = Vec::new();
        for &(a, b) in &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)] {
            edges.push((a, b));
            edges.push((b, a));
        }
        ConstraintGraph::new(4, &edges).unwrap()
    }

    pub(crate) fn ring(n: usize) -> ConstraintGraph {
        let mut edges = Vec::new();
        for v in 1..=n {
            let w = v % n + 1;
            edges.push((v, w));
            edges.push((w, v));
        }
        ConstraintGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn groups_of_example_family() {
        let [g1, g2, g3, g4] = example_family();
        let p1 = information_groups(&g1);
        assert_eq!(p1.groups, vec![vec![1, 2, 3, 4]]);
        assert_eq!(p1.tau(), 1);

        let p2 = information_groups(&g2);
        assert_eq!(p2.groups, vec![vec![1, 3, 4], vec![2]]);
        assert_eq!(p2.tau(), 2);

        let p3 = information_groups(&g3);
        assert_eq!(p3.groups, vec![vec![1], vec![2], vec![3, 4]]);
        assert_eq!(p3.tau(), 3);

        let p4 = information_groups(&g4);
        assert_eq!(p4.groups, vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(p4.tau(), 4);
    }

    #[test]
    fn common_in_neighbors_exclude_group() {
        let [_, g2, _, _] = example_family();
        let p = information_groups(&g2);
        // group {1,3,4} is commonly observed-by 2? No: 2 does not reach 1.
        // common in-neighbors of {1,3,4} = {2} since 2 -> 1, 2 -> 3, 2 -> 4.
        assert_eq!(p.common_in_neighbors[0], vec![2]);
        // group {2} observes 3 and 4 but not 1
        assert_eq!(p.common_in_neighbors[1], vec![3, 4]);
    }

    #[test]
    fn reciprocal_of_symmetric_graph_is_identity() {
        let g = ring(5);
        assert_eq!(g.reciprocal_subgraph(), g);
    }

    #[test]
    fn reciprocal_of_example_rightmost_is_a_path() {
        let [_, _, _, g4] = example_family();
        let gbar = g4.reciprocal_subgraph();
        let mut expect = Vec::new();
        for &(a, b) in &[(1, 4), (2, 3), (2, 4)] {
            expect.push((a, b));
            expect.push((b, a));
        }
        expect.sort();
        assert_eq!(gbar.edges(), expect);
    }

    #[test]
    fn one_directional_cycle_has_empty_reciprocal() {
        let g = ConstraintGraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(!g.reciprocal_subgraph().has_any_edge());
    }

    #[test]
    fn maximal_cliques_of_fig2a() {
        let sys = maximal_cliques(&fig2a());
        assert_eq!(sys.cliques, vec![vec![1, 2, 3], vec![1, 2, 4]]);
        let census = clique_census(&fig2a(), DEFAULT_CENSUS_CAP).unwrap();
        assert_eq!(
            census.into_iter().collect::<Vec<_>>(),
            vec![(1, 4), (2, 5), (3, 2)]
        );
    }

    #[test]
    fn cliques_edge_cases() {
        let edgeless = ConstraintGraph::new(3, &[]).unwrap();
        assert_eq!(
            maximal_cliques(&edgeless).cliques,
            vec![vec![1], vec![2], vec![3]]
        );
        let k5 = ConstraintGraph::complete(5);
        assert_eq!(maximal_cliques(&k5).cliques, vec![vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn independence_certificates() {
        let (a, w) = independence_number(&fig2a(), DEFAULT_INDEPENDENCE_CAP).unwrap();
        assert_eq!((a, w), (2, vec![3, 4]));
        let (a, w) = independence_number(&ConstraintGraph::complete(6), 24).unwrap();
        assert_eq!(a, 1);
        assert_eq!(w.len(), 1);
        let (a, _) = independence_number(&ring(5), 24).unwrap();
        assert_eq!(a, 2);
        // witness is actually independent
        let g = ring(5);
        let (_, w) = independence_number(&g, 24).unwrap();
        assert!(g.is_independent_set(&w));
    }

    #[test]
    fn independence_respects_single_directions() {
        // one-directional edge still breaks independence
        let g = ConstraintGraph::new(2, &[(1, 2)]).unwrap();
        let (a, _) = independence_number(&g, 24).unwrap();
        assert_eq!(a, 1);
    }

    #[test]
    fn fractional_independence_on_odd_ring() {
        let fi = fractional_independence::<Rat64>(&ring(5));
        assert_eq!(fi.value, frac::<Rat64>(5, 2));
        assert_eq!(fi.node_weights, vec![frac::<Rat64>(1, 2); 5]);
    }

    #[test]
    fn fractional_independence_matches_integral_when_perfect() {
        let fi = fractional_independence::<Rat64>(&fig2a());
        assert_eq!(fi.value, frac::<Rat64>(2, 1));
        let edgeless = ConstraintGraph::new(6, &[]).unwrap();
        assert_eq!(
            fractional_independence::<Rat64>(&edgeless).value,
            frac::<Rat64>(6, 1)
        );
    }

    #[test]
    fn fractional_cover_duality() {
        let fig = fig2a();
        let fc = fractional_clique_cover::<BigRat>(&fig);
        assert_eq!(fc.value, frac::<BigRat>(2, 1));

        let c5 = ring(5);
        let fc = fractional_clique_cover::<BigRat>(&c5);
        assert_eq!(fc.value, frac::<BigRat>(5, 2));
        // the five edge-cliques each carry weight 1/2 and cover every node
        assert_eq!(fc.clique_weights, vec![frac::<BigRat>(1, 2); 5]);

        let k4 = ConstraintGraph::complete(4);
        assert_eq!(
            fractional_clique_cover::<BigRat>(&k4).value,
            frac::<BigRat>(1, 1)
        );
    }

    #[test]
    fn cover_solution_is_feasible_exactly() {
        let c5 = ring(5);
        let fc = fractional_clique_cover::<BigRat>(&c5);
        for v in 1..=5usize {
            let mut total = frac::<BigRat>(0, 1);
            for (c, w) in fc.cliques.cliques.iter().zip(&fc.clique_weights) {
                if c.contains(&v) {
                    total = total + w.clone();
                }
            }
            assert!(total >= frac::<BigRat>(1, 1));
        }
    }

    #[test]
    fn integer_clique_cover() {
        let (k, parts) = clique_cover_number(&fig2a(), DEFAULT_COVER_CAP).unwrap();
        assert_eq!(k, 2);
        for p in &parts {
            assert!(fig2a().is_clique(p));
        }
        let (k, _) = clique_cover_number(&ConstraintGraph::complete(5), 12).unwrap();
        assert_eq!(k, 1);
        let (k, _) = clique_cover_number(&ring(5), 12).unwrap();
        assert_eq!(k, 3);
    }

    #[test]
    fn size_caps_error() {
        let g = ConstraintGraph::complete(13);
        assert!(matches!(
            clique_cover_number(&g, DEFAULT_COVER_CAP),
            Err(Error::SizeLimit { .. })
        ));
        let g = ConstraintGraph::complete(25);
        assert!(matches!(
            independence_number(&g, DEFAULT_INDEPENDENCE_CAP),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn graph_parse_validation() {
        assert!(ConstraintGraph::new(3, &[(1, 1)]).is_err());
        assert!(ConstraintGraph::new(3, &[(4, 1)]).is_err());
        assert!(ConstraintGraph::new(0, &[]).is_err());
    }
}
