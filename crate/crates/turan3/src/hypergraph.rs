//! 3-uniform hypergraphs on labeled vertices `[0, n)` and their elementary
//! invariants: links, pair neighborhoods, co-degrees, matchings, weak
//! independence and the high-degree/low-degree partition.

use crate::bitset::Bitset;
use crate::error::{invalid, Result};

/// A 3-uniform hypergraph on the vertex set `[0, n)`.
///
/// Edges are stored as canonically sorted triples `u < v < w` in a
/// lexicographically sorted list, plus one incidence bitset per vertex over
/// edge indices. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: u32,
    edges: Vec<[u32; 3]>,
    incidence: Vec<Bitset>,
}

impl std::fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph3(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Hypergraph3 {
    /// Builds a hypergraph from arbitrary triples. Each triple is sorted,
    /// validated (three distinct vertices, all below `n`) and the edge list
    /// is deduplicated into canonical order.
    pub fn new(n: u32, triples: impl IntoIterator<Item = [u32; 3]>) -> Result<Self> {
        let mut edges: Vec<[u32; 3]> = Vec::new();
        for mut e in triples {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(invalid(format!("degenerate triple {e:?}")));
            }
            if e[2] >= n {
                return Err(invalid(format!("vertex {} out of range (n = {n})", e[2])));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(invalid("duplicate triple in edge list"));
        }
        Ok(Self::from_canonical(n, edges))
    }

    /// Edge list must already be sorted triples in sorted order.
    pub(crate) fn from_canonical(n: u32, edges: Vec<[u32; 3]>) -> Self {
        let mut incidence = vec![Bitset::new(edges.len()); n as usize];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v as usize].insert(i);
            }
        }
        Hypergraph3 { n, edges, incidence }
    }

    pub fn empty(n: u32) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    /// Complete 3-graph: all triples on `[0, n)`.
    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    edges.push([u, v, w]);
                }
            }
        }
        Self::from_canonical(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[u32; 3]] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> [u32; 3] {
        self.edges[i]
    }

    pub fn has_edge(&self, mut e: [u32; 3]) -> bool {
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: u32) -> usize {
        self.incidence[v as usize].count()
    }

    pub(crate) fn incidence(&self, v: u32) -> &Bitset {
        &self.incidence[v as usize]
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v >= self.n {
            Err(invalid(format!("vertex {v} out of range (n = {})", self.n)))
        } else {
            Ok(())
        }
    }

    /// Link graph of `v` restricted to `S`: the graph on `[0, n)` whose edges
    /// are the pairs `{x, y} ⊆ S` with `vxy` an edge.
    pub fn link_graph_in(&self, v: u32, s: &[u32]) -> Result<Graph2> {
        self.check_vertex(v)?;
        let mut in_s = Bitset::new(self.n as usize);
        for &x in s {
            self.check_vertex(x)?;
            in_s.insert(x as usize);
        }
        let mut pairs = Vec::new();
        for ei in self.incidence[v as usize].iter() {
            let e = self.edges[ei];
            let rest: Vec<u32> = e.iter().copied().filter(|&x| x != v).collect();
            if in_s.contains(rest[0] as usize) && in_s.contains(rest[1] as usize) {
                pairs.push([rest[0], rest[1]]);
            }
        }
        Graph2::new(self.n, pairs)
    }

    /// Link graph of `v` over the full vertex set.
    pub fn link_graph(&self, v: u32) -> Result<Graph2> {
        let all: Vec<u32> = (0..self.n).collect();
        self.link_graph_in(v, &all)
    }

    /// `N(u, v)`: all `w` such that `uvw` is an edge.
    pub fn pair_neighborhood(&self, u: u32, v: u32) -> Result<Vec<u32>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid(format!("pair neighborhood needs two distinct vertices, got {u} twice")));
        }
        let common = self.incidence[u as usize].and(&self.incidence[v as usize]);
        let mut out: Vec<u32> = common
            .iter()
            .map(|ei| {
                let e = self.edges[ei];
                *e.iter().find(|&&x| x != u && x != v).expect("third vertex")
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Co-degree `d(u, v) = |N(u, v)|`.
    pub fn codegree(&self, u: u32, v: u32) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid("co-degree needs two distinct vertices"));
        }
        Ok(self.incidence[u as usize].intersection_count(&self.incidence[v as usize]))
    }

    /// Maximum co-degree over all unordered vertex pairs; 0 when edgeless.
    pub fn max_codegree(&self) -> Result<usize> {
        if self.n < 2 {
            return Err(invalid("max co-degree needs at least two vertices"));
        }
        let mut best = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let c = self.incidence[u as usize].intersection_count(&self.incidence[v as usize]);
                best = best.max(c);
            }
        }
        Ok(best)
    }

    /// True iff no edge lies entirely inside `S`.
    pub fn is_weakly_independent(&self, s: &[u32]) -> bool {
        let mut in_s = Bitset::new(self.n as usize);
        for &x in s {
            if x < self.n {
                in_s.insert(x as usize);
            }
        }
        !self.edges.iter().any(|e| e.iter().all(|&x| in_s.contains(x as usize)))
    }

    /// Splits vertices at the degree threshold `3sn + 1`.
    pub fn degree_partition(&self, s: u64) -> DegreePartition {
        let threshold = 3 * s * self.n as u64 + 1;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in 0..self.n {
            if self.degree(v) as u64 >= threshold {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        DegreePartition { a, b, threshold }
    }

    /// Sub-hypergraph keeping only the edges inside `S`, on the same label
    /// space (no relabeling). Use [`Hypergraph3::compact`] to relabel.
    pub fn induced(&self, s: &[u32]) -> Hypergraph3 {
        let mut in_s = Bitset::new(self.n as usize);
        for &x in s {
            if x < self.n {
                in_s.insert(x as usize);
            }
        }
        let edges: Vec<[u32; 3]> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.iter().all(|&x| in_s.contains(x as usize)))
            .collect();
        Self::from_canonical(self.n, edges)
    }

    /// Edges within `S ∪ S'` that meet both `S` and `S'`; the two sets must
    /// be disjoint.
    pub fn cross_subgraph(&self, s: &[u32], s2: &[u32]) -> Result<Hypergraph3> {
        let mut in_a = Bitset::new(self.n as usize);
        let mut in_b = Bitset::new(self.n as usize);
        for &x in s {
            self.check_vertex(x)?;
            in_a.insert(x as usize);
        }
        for &x in s2 {
            self.check_vertex(x)?;
            if in_a.contains(x as usize) {
                return Err(invalid(format!("cross subgraph needs disjoint sets, {x} is in both")));
            }
            in_b.insert(x as usize);
        }
        let edges: Vec<[u32; 3]> = self
            .edges
            .iter()
            .copied()
            .filter(|e| {
                let mut touches_a = false;
                let mut touches_b = false;
                let mut inside = true;
                for &x in e {
                    let xa = in_a.contains(x as usize);
                    let xb = in_b.contains(x as usize);
                    touches_a |= xa;
                    touches_b |= xb;
                    inside &= xa || xb;
                }
                inside && touches_a && touches_b
            })
            .collect();
        Ok(Self::from_canonical(self.n, edges))
    }

    /// The shadow: all pairs covered by some triple.
    pub fn shadow(&self) -> Graph2 {
        let mut pairs: Vec<[u32; 2]> = Vec::new();
        for e in &self.edges {
            pairs.push([e[0], e[1]]);
            pairs.push([e[0], e[2]]);
            pairs.push([e[1], e[2]]);
        }
        pairs.sort_unstable();
        pairs.dedup();
        Graph2::from_canonical(self.n, pairs)
    }

    /// Relabels the sub-hypergraph induced by `S` onto `[0, |S|)`.
    /// Returns the compacted hypergraph and the old labels in new order.
    pub fn compact(&self, s: &[u32]) -> Result<(Hypergraph3, Vec<u32>)> {
        let mut labels: Vec<u32> = s.to_vec();
        labels.sort_unstable();
        labels.dedup();
        for &x in &labels {
            self.check_vertex(x)?;
        }
        let mut rank = vec![u32::MAX; self.n as usize];
        for (i, &x) in labels.iter().enumerate() {
            rank[x as usize] = i as u32;
        }
        let edges: Vec<[u32; 3]> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&x| rank[x as usize] != u32::MAX))
            .map(|e| [rank[e[0] as usize], rank[e[1] as usize], rank[e[2] as usize]])
            .collect();
        Ok((Hypergraph3::new(labels.len() as u32, edges)?, labels))
    }
}

/// High-degree part `A`, complement `B` and the threshold that split them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub threshold: u64,
}

/// A simple graph on `[0, n)`, used for link graphs, Turán graphs and the
/// color layers of an edge-colored multigraph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph2 {
    n: u32,
    edges: Vec<[u32; 2]>,
    adj: Vec<Bitset>,
}

impl std::fmt::Debug for Graph2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph2(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph2 {
    pub fn new(n: u32, pairs: impl IntoIterator<Item = [u32; 2]>) -> Result<Self> {
        let mut edges: Vec<[u32; 2]> = Vec::new();
        for mut e in pairs {
            if e[0] > e[1] {
                e.swap(0, 1);
            }
            if e[0] == e[1] {
                return Err(invalid(format!("loop at vertex {}", e[0])));
            }
            if e[1] >= n {
                return Err(invalid(format!("vertex {} out of range (n = {n})", e[1])));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_canonical(n, edges))
    }

    pub(crate) fn from_canonical(n: u32, edges: Vec<[u32; 2]>) -> Self {
        let mut adj = vec![Bitset::new(n as usize); n as usize];
        for e in &edges {
            adj[e[0] as usize].insert(e[1] as usize);
            adj[e[1] as usize].insert(e[0] as usize);
        }
        Graph2 { n, edges, adj }
    }

    pub fn empty(n: u32) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push([u, v]);
            }
        }
        Self::from_canonical(n, edges)
    }

    pub fn cycle(n: u32) -> Self {
        let edges: Vec<[u32; 2]> = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                [i.min(j), i.max(j)]
            })
            .collect();
        Self::new(n, edges).expect("cycle edges are valid")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u < self.n && v < self.n && self.adj[u as usize].contains(v as usize)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].count()
    }

    pub fn neighbors(&self, v: u32) -> &Bitset {
        &self.adj[v as usize]
    }
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

impl Hypergraph3 {
    /// Greedy matching in edge order; returns edge indices.
    fn greedy_matching_indices(&self) -> Vec<usize> {
        let mut used = Bitset::new(self.n as usize);
        let mut picked = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.iter().all(|&v| !used.contains(v as usize)) {
                for &v in e {
                    used.insert(v as usize);
                }
                picked.push(i);
            }
        }
        picked
    }

    /// Searches for `k` pairwise disjoint edges; returns one witness matching.
    pub fn find_matching(&self, k: usize) -> Option<Vec<[u32; 3]>> {
        if k == 0 {
            return Some(Vec::new());
        }
        if 3 * k > self.n as usize || k > self.edges.len() {
            return None;
        }
        let mut used = Bitset::new(self.n as usize);
        let mut chosen: Vec<usize> = Vec::new();
        if self.matching_dfs(0, k, &mut used, &mut chosen) {
            Some(chosen.into_iter().map(|i| self.edges[i]).collect())
        } else {
            None
        }
    }

    /// Branches on the lowest-indexed remaining edge. Two sound cuts keep the
    /// paper-scale instances instant: a greedy matching that already reaches
    /// the target proves success, and a greedy vertex cover smaller than the
    /// target proves failure (any cover bounds the matching size).
    fn matching_dfs(&self, start: usize, need: usize, used: &mut Bitset, chosen: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        let avail: Vec<usize> = (start..self.edges.len())
            .filter(|&i| self.edges[i].iter().all(|&v| !used.contains(v as usize)))
            .collect();
        if avail.len() < need {
            return false;
        }
        // Greedy matching over the available suffix.
        {
            let mut grabbed = used.clone();
            let mut picked = Vec::new();
            for &i in &avail {
                if self.edges[i].iter().all(|&v| !grabbed.contains(v as usize)) {
                    for &v in &self.edges[i] {
                        grabbed.insert(v as usize);
                    }
                    picked.push(i);
                    if picked.len() == need {
                        chosen.extend(picked);
                        return true;
                    }
                }
            }
        }
        // Greedy vertex cover of the available edges.
        {
            let mut remaining = avail.clone();
            let mut cover = 0usize;
            while !remaining.is_empty() {
                let mut deg = vec![0usize; self.n as usize];
                for &i in &remaining {
                    for &v in &self.edges[i] {
                        deg[v as usize] += 1;
                    }
                }
                let top = (0..self.n as usize).max_by_key(|&v| deg[v]).unwrap();
                remaining.retain(|&i| !self.edges[i].contains(&(top as u32)));
                cover += 1;
                if cover >= need {
                    break;
                }
            }
            if cover < need {
                return false;
            }
        }
        for &i in &avail {
            for &v in &self.edges[i] {
                used.insert(v as usize);
            }
            chosen.push(i);
            if self.matching_dfs(i + 1, need - 1, used, chosen) {
                return true;
            }
            chosen.pop();
            for &v in &self.edges[i] {
                used.remove(v as usize);
            }
        }
        false
    }

    pub fn has_matching_of_size(&self, k: usize) -> bool {
        self.find_matching(k).is_some()
    }

    /// Exact matching number, by iterative deepening from a greedy lower bound.
    pub fn matching_number(&self) -> usize {
        let mut nu = self.greedy_matching_indices().len();
        while self.has_matching_of_size(nu + 1) {
            nu += 1;
        }
        nu
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{h_b, h_ns, k4_minus, matching};

    fn m2() -> Hypergraph3 {
        Hypergraph3::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap()
    }

    fn f_3_2_graph() -> Hypergraph3 {
        Hypergraph3::new(5, [[0, 1, 2], [0, 3, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(Hypergraph3::new(4, [[0, 0, 1]]).is_err());
        assert!(Hypergraph3::new(4, [[0, 1, 4]]).is_err());
        assert!(Hypergraph3::new(4, [[0, 1, 2], [2, 1, 0]]).is_err());
    }

    #[test]
    fn link_graph_of_k4_minus_center() {
        let h = k4_minus();
        let link = h.link_graph(0).unwrap();
        assert_eq!(link.edges(), &[[1, 2], [1, 3], [2, 3]]);
    }

    #[test]
    fn link_graph_of_matching_vertex() {
        let link = m2().link_graph(0).unwrap();
        assert_eq!(link.edges(), &[[1, 2]]);
    }

    #[test]
    fn link_graph_of_f32_vertex_four_is_star() {
        let link = f_3_2_graph().link_graph(4).unwrap();
        assert_eq!(link.edges(), &[[0, 3], [1, 3], [2, 3]]);
    }

    #[test]
    fn link_graph_vertex_out_of_range() {
        assert!(m2().link_graph(6).is_err());
    }

    #[test]
    fn pair_neighborhood_h_ns() {
        let h = h_ns(10, 2).unwrap().hypergraph;
        // Both vertices in A: no edge has two A-vertices.
        assert!(h.pair_neighborhood(0, 1).unwrap().is_empty());
        // One in A, one in B: all of B except the chosen vertex.
        let nb = h.pair_neighborhood(0, 5).unwrap();
        assert_eq!(nb.len(), 7);
        assert_eq!(nb, vec![2, 3, 4, 6, 7, 8, 9]);
    }

    #[test]
    fn pair_neighborhood_matching() {
        assert_eq!(m2().pair_neighborhood(0, 1).unwrap(), vec![2]);
        assert!(m2().pair_neighborhood(0, 0).is_err());
    }

    #[test]
    fn max_codegree_values() {
        assert_eq!(h_ns(10, 2).unwrap().hypergraph.max_codegree().unwrap(), 7);
        assert_eq!(h_ns(20, 3).unwrap().hypergraph.max_codegree().unwrap(), 16);
        assert_eq!(Hypergraph3::empty(5).max_codegree().unwrap(), 0);
        assert_eq!(Hypergraph3::complete(5).max_codegree().unwrap(), 3);
        assert!(Hypergraph3::empty(1).max_codegree().is_err());
    }

    #[test]
    fn matching_basics() {
        let m3 = matching(3);
        assert!(m3.has_matching_of_size(3));
        assert!(!m3.has_matching_of_size(4));
        assert_eq!(m3.matching_number(), 3);
        assert_eq!(Hypergraph3::empty(4).matching_number(), 0);
        // Two disjoint triples need six vertices.
        assert!(!Hypergraph3::complete(5).has_matching_of_size(2));
        assert_eq!(Hypergraph3::complete(5).matching_number(), 1);
    }

    #[test]
    fn matching_of_h_ns_is_capped() {
        for (n, s) in [(10u32, 1u32), (10, 2), (12, 3)] {
            let h = h_ns(n, s).unwrap().hypergraph;
            assert!(h.has_matching_of_size(s as usize));
            assert!(!h.has_matching_of_size(s as usize + 1));
        }
    }

    #[test]
    fn matching_number_of_h_b() {
        let h = h_b(20, 3, 4).unwrap().hypergraph;
        assert_eq!(h.matching_number(), 3);
    }

    #[test]
    fn matching_witness_is_disjoint() {
        let h = h_ns(12, 3).unwrap().hypergraph;
        let w = h.find_matching(3).unwrap();
        let mut seen = std::collections::HashSet::new();
        for e in &w {
            assert!(h.has_edge(*e));
            for &v in e {
                assert!(seen.insert(v));
            }
        }
    }

    #[test]
    fn weak_independence() {
        let built = h_ns(10, 2).unwrap();
        let h = &built.hypergraph;
        let b: Vec<u32> = (2..10).collect();
        assert!(h.is_weakly_independent(&b));
        assert!(h.is_weakly_independent(&[0, 1]));
        assert!(!h.is_weakly_independent(&[0, 2, 3, 5]));
        // Sets of size at most two are always weakly independent.
        assert!(h.is_weakly_independent(&[0, 2]));
    }

    #[test]
    fn degree_partition_h_ns() {
        let h = h_ns(20, 2).unwrap().hypergraph;
        let part = h.degree_partition(2);
        assert_eq!(part.threshold, 121);
        assert_eq!(part.a, vec![0, 1]);
        assert_eq!(h.degree(0), 153);
        assert_eq!(part.b.len(), 18);
    }

    #[test]
    fn degree_partition_edge_cases() {
        assert!(Hypergraph3::empty(5).degree_partition(1).a.is_empty());
        let k7 = Hypergraph3::complete(7);
        let part = k7.degree_partition(0);
        assert_eq!(part.threshold, 1);
        assert_eq!(part.a.len(), 7);
    }

    #[test]
    fn shadow_of_matching() {
        let sh = m2().shadow();
        assert_eq!(sh.edges(), &[[0, 1], [0, 2], [1, 2], [3, 4], [3, 5], [4, 5]]);
    }

    #[test]
    fn cross_subgraph_covers_h_ns() {
        let built = h_ns(6, 1).unwrap();
        let h = &built.hypergraph;
        let cross = h.cross_subgraph(&[0], &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(cross.edge_count(), 10);
        assert_eq!(cross.edges(), h.edges());
        assert!(h.cross_subgraph(&[0, 1], &[1, 2]).is_err());
    }

    #[test]
    fn induced_keeps_labels() {
        let h = f_3_2_graph();
        let sub = h.induced(&[0, 1, 2]);
        assert_eq!(sub.n(), 5);
        assert_eq!(sub.edges(), &[[0, 1, 2]]);
        let (compacted, labels) = h.compact(&[0, 3, 4]).unwrap();
        assert_eq!(compacted.n(), 3);
        assert_eq!(compacted.edges(), &[[0, 1, 2]]);
        assert_eq!(labels, vec![0, 3, 4]);
    }

    #[test]
    fn handshake_identity() {
        let h = f_3_2_graph();
        let total: usize = (0..h.n()).map(|v| h.degree(v)).sum();
        assert_eq!(total, 3 * h.edge_count());
    }
}
