//! Edge-colored multigraphs `G = G_1 + ⋯ + G_s`, detection of star-colored
//! cliques, closed-form sum bounds and exact exhaustive maximization of
//! `Σ e(G_i)` at small `n`.
//!
//! A `k`-star edge-colored `K_t` is a `t`-subset whose pairs can each be
//! assigned one of their available colors so that `k` colors appear and every
//! color class is a star (all of its pairs share a vertex). Because a star
//! cover of `K_t` needs at least `t − 1` centers, "exactly `k`" and "at most
//! `k`" agree when `k = t − 1`; the default freeness check uses the at-most
//! form and the exact form stays available behind a flag.

use crate::constructions::{turan_count, turan_graph};
use crate::error::{invalid, Error, Result};
use crate::formulas::binom;
use crate::hypergraph::Graph2;

/// `s` simple graphs on a shared vertex set, viewed as one multigraph whose
/// edge `e` has multiplicity `ω(e) = #{i : e ∈ G_i}`.
#[derive(Clone, Debug)]
pub struct ColoredMultigraph {
    n: u32,
    layers: Vec<Graph2>,
}

impl ColoredMultigraph {
    pub fn new(n: u32, layers: Vec<Graph2>) -> Result<Self> {
        for (i, layer) in layers.iter().enumerate() {
            if layer.n() != n {
                return Err(invalid(format!(
                    "layer {i} lives on {} vertices, expected {n}",
                    layer.n()
                )));
            }
        }
        Ok(ColoredMultigraph { n, layers })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of colors.
    pub fn s(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Graph2] {
        &self.layers
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v >= self.n {
            Err(invalid(format!("vertex {v} out of range (n = {})", self.n)))
        } else {
            Ok(())
        }
    }

    /// Multiplicity of the pair `{u, v}`.
    pub fn multiplicity(&self, u: u32, v: u32) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid("multiplicity needs two distinct vertices"));
        }
        Ok(self.layers.iter().filter(|g| g.has_edge(u, v)).count())
    }

    /// Colors available on the pair `{u, v}`, as a bitmask over `[0, s)`.
    fn color_mask(&self, u: u32, v: u32) -> u32 {
        let mut mask = 0;
        for (i, g) in self.layers.iter().enumerate() {
            if g.has_edge(u, v) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Degree counted with multiplicity: `Σ_i d_{G_i}(v)`.
    pub fn weighted_degree(&self, v: u32) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.layers.iter().map(|g| g.degree(v) as u64).sum())
    }

    /// Edges between disjoint `S` and `T`, counted with multiplicity.
    pub fn cut(&self, s: &[u32], t: &[u32]) -> Result<u64> {
        for &v in s.iter().chain(t) {
            self.check_vertex(v)?;
        }
        if s.iter().any(|v| t.contains(v)) {
            return Err(invalid("cut needs disjoint vertex sets"));
        }
        let mut total = 0;
        for &u in s {
            for &v in t {
                total += self.multiplicity(u, v)? as u64;
            }
        }
        Ok(total)
    }

    /// Minimum weighted degree; 0 for the empty vertex set.
    pub fn min_degree(&self) -> u64 {
        (0..self.n)
            .map(|v| self.weighted_degree(v).expect("vertex in range"))
            .min()
            .unwrap_or(0)
    }
}

/// A `t`-subset together with a valid color assignment of its pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarColoredCliqueWitness {
    pub vertices: Vec<u32>,
    /// One entry per pair of `vertices`: the pair and its assigned color.
    pub assignment: Vec<([u32; 2], usize)>,
}

impl StarColoredCliqueWitness {
    /// Re-validates against the multigraph: every pair assigned a color from
    /// its own layers, every class a star, and the color count matches `k`
    /// under the chosen mode.
    pub fn verify(&self, m: &ColoredMultigraph, k: usize, exact_k: bool) -> bool {
        let t = self.vertices.len();
        if self.assignment.len() != t * (t - 1) / 2 {
            return false;
        }
        let mut expected: Vec<[u32; 2]> = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                expected.push([self.vertices[i], self.vertices[j]]);
            }
        }
        let mut got: Vec<[u32; 2]> = self.assignment.iter().map(|&(p, _)| p).collect();
        got.sort_unstable();
        expected.sort_unstable();
        if got != expected {
            return false;
        }
        let mut centers: std::collections::HashMap<usize, Vec<u32>> = Default::default();
        for &(pair, color) in &self.assignment {
            if color >= m.s() || !m.layers[color].has_edge(pair[0], pair[1]) {
                return false;
            }
            let cands = centers.entry(color).or_insert_with(|| pair.to_vec());
            cands.retain(|v| pair.contains(v));
            if cands.is_empty() {
                return false;
            }
        }
        if exact_k {
            centers.len() == k
        } else {
            centers.len() <= k
        }
    }
}

/// Searches the pairs of a clique (given as color masks in pair-lex order
/// over `t` positions) for an assignment whose classes are stars, using at
/// most `k` colors, or exactly `k` when `exact_k` is set. Colors are tried
/// in ascending order, so the first hit is deterministic.
fn star_assignment(t: usize, masks: &[u32], s: usize, k: usize, exact_k: bool) -> Option<Vec<usize>> {
    let mut pairs = Vec::with_capacity(masks.len());
    for i in 0..t {
        for j in i + 1..t {
            pairs.push((i, j));
        }
    }
    debug_assert_eq!(pairs.len(), masks.len());
    let mut chosen = vec![usize::MAX; masks.len()];
    let mut centers = vec![0u32; s];
    struct Assign<'a> {
        pairs: &'a [(usize, usize)],
        masks: &'a [u32],
        k: usize,
        exact_k: bool,
    }
    fn rec(a: &Assign, idx: usize, used: usize, centers: &mut [u32], chosen: &mut [usize]) -> bool {
        if idx == a.pairs.len() {
            return if a.exact_k { used == a.k } else { true };
        }
        if a.exact_k && used + (a.pairs.len() - idx) < a.k {
            return false;
        }
        let (i, j) = a.pairs[idx];
        let pair_mask = 1u32 << i | 1u32 << j;
        for c in 0..centers.len() {
            if a.masks[idx] & (1 << c) == 0 {
                continue;
            }
            let old = centers[c];
            let (next, next_used) = if old == 0 {
                if used == a.k {
                    continue;
                }
                (pair_mask, used + 1)
            } else {
                let merged = old & pair_mask;
                if merged == 0 {
                    continue;
                }
                (merged, used)
            };
            centers[c] = next;
            chosen[idx] = c;
            if rec(a, idx + 1, next_used, centers, chosen) {
                return true;
            }
            centers[c] = old;
            chosen[idx] = usize::MAX;
        }
        false
    }
    let assign = Assign { pairs: &pairs, masks, k, exact_k };
    if rec(&assign, 0, 0, &mut centers, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Finds a `k`-star edge-colored `K_t` (exactly `k` colors when `exact_k`,
/// at most `k` otherwise), scanning `t`-subsets in lexicographic order.
pub fn find_star_colored_clique(
    m: &ColoredMultigraph,
    k: usize,
    t: usize,
    exact_k: bool,
) -> Result<Option<StarColoredCliqueWitness>> {
    if t < 2 || t > m.n() as usize {
        return Err(invalid(format!("clique size {t} out of range for n = {}", m.n())));
    }
    if k < 1 || k > m.s() {
        return Err(invalid(format!("color count {k} out of range for s = {}", m.s())));
    }
    let n = m.n() as usize;
    let mut subset: Vec<u32> = Vec::with_capacity(t);
    fn rec(
        m: &ColoredMultigraph,
        n: usize,
        t: usize,
        k: usize,
        exact_k: bool,
        start: usize,
        subset: &mut Vec<u32>,
    ) -> Option<StarColoredCliqueWitness> {
        if subset.len() == t {
            let mut masks = Vec::with_capacity(t * (t - 1) / 2);
            for i in 0..t {
                for j in i + 1..t {
                    let mask = m.color_mask(subset[i], subset[j]);
                    if mask == 0 {
                        return None;
                    }
                    masks.push(mask);
                }
            }
            let chosen = star_assignment(t, &masks, m.s(), k, exact_k)?;
            let mut assignment = Vec::new();
            let mut idx = 0;
            for i in 0..t {
                for j in i + 1..t {
                    assignment.push(([subset[i], subset[j]], chosen[idx]));
                    idx += 1;
                }
            }
            return Some(StarColoredCliqueWitness { vertices: subset.clone(), assignment });
        }
        for v in start..n {
            // The new vertex must share at least one color with everything
            // already picked.
            if subset.iter().any(|&u| m.color_mask(u, v as u32) == 0) {
                continue;
            }
            subset.push(v as u32);
            if let Some(w) = rec(m, n, t, k, exact_k, v + 1, subset) {
                return Some(w);
            }
            subset.pop();
        }
        None
    }
    Ok(rec(m, n, t, k, exact_k, 0, &mut subset))
}

/// True iff the layer family avoids an `(r−1)`-star edge-colored `K_r`.
pub fn is_star_colored_free(layers: &[Graph2], r: usize) -> Result<bool> {
    if r < 3 {
        return Err(invalid("freeness check needs r >= 3"));
    }
    let n = layers.first().map_or(0, |g| g.n());
    if (n as usize) < r {
        return Ok(true);
    }
    if layers.len() < r - 1 {
        // A star cover of K_r needs at least r − 1 distinct colors.
        return Ok(true);
    }
    let m = ColoredMultigraph::new(n, layers.to_vec())?;
    Ok(find_star_colored_clique(&m, r - 1, r, false)?.is_none())
}

// ---------------------------------------------------------------------------
// Bound evaluators
// ---------------------------------------------------------------------------

/// Proven bound on `Σ e(G_i)` for `(r−1)`-star `K_r`-free families:
/// `s·C(n, 2)` when `s ≤ r−2`, else `s·t(n, r−1) + sn`. The `n > r³` range
/// condition is report metadata, not input validation.
pub fn colored_sum_bound(n: u64, s: u64, r: u64) -> u64 {
    if s + 2 <= r {
        s * binom(n, 2)
    } else {
        s * turan_count(n, r - 1).expect("r >= 3") + s * n
    }
}

/// The triangle case (`r = 3`): `s·⌊n²/4⌋`.
pub fn colored_triangle_bound(n: u64, s: u64) -> u64 {
    s * (n * n / 4)
}

/// Predicted exact value in the `s ≥ r−1` regime: `s·t(n, r−1)`, with the
/// additive `sn` slack removed.
pub fn colored_sum_target(n: u64, s: u64, r: u64) -> u64 {
    s * turan_count(n, r - 1).expect("r >= 3")
}

/// Replays one greedy clique-growing step: a vertex `u ∉ T` with weighted cut
/// `e(u, T) ≥ |T|·(r−2) + 1`, if any.
pub fn cut_threshold_check(m: &ColoredMultigraph, t_set: &[u32], r: usize) -> Result<Option<u32>> {
    if t_set.len() > r - 1 {
        return Err(invalid("threshold check needs |T| <= r - 1"));
    }
    for &v in t_set {
        if v >= m.n() {
            return Err(invalid(format!("vertex {v} out of range")));
        }
    }
    let need = t_set.len() as u64 * (r as u64 - 2) + 1;
    for u in 0..m.n() {
        if t_set.contains(&u) {
            continue;
        }
        let cut: u64 = t_set.iter().map(|&v| m.multiplicity(u, v).unwrap() as u64).sum();
        if cut >= need {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Exhaustive maximization
// ---------------------------------------------------------------------------

/// Result of an exhaustive colored-sum maximization.
#[derive(Clone, Debug)]
pub struct ColoredMaxResult {
    pub value: u64,
    pub layers: Vec<Graph2>,
    pub nodes: u64,
}

struct ColoredSearch {
    n: usize,
    s: usize,
    r: usize,
    exact_k: bool,
    pairs: Vec<[u32; 2]>,
    masks: Vec<u32>,
    best_value: u64,
    best_masks: Vec<u32>,
    nodes: u64,
    budget: Option<u64>,
}

impl ColoredSearch {
    /// Does assigning `masks[idx]` complete a star-colorable `K_r` among the
    /// already-assigned pairs? Only subsets whose lexicographically largest
    /// pair is `pairs[idx]` can be new.
    fn creates_violation(&self, idx: usize) -> bool {
        if self.masks[idx] == 0 {
            return false;
        }
        let [u, v] = self.pairs[idx];
        let mut subset = Vec::with_capacity(self.r);
        self.violation_rec(0, u, v, &mut subset)
    }

    fn violation_rec(&self, start: u32, u: u32, v: u32, subset: &mut Vec<u32>) -> bool {
        if subset.len() == self.r - 2 {
            let mut s_all: Vec<u32> = subset.clone();
            s_all.push(u);
            s_all.push(v);
            let t = s_all.len();
            let mut masks = Vec::with_capacity(t * (t - 1) / 2);
            for i in 0..t {
                for j in i + 1..t {
                    let mask = self.masks[self.pair_index(s_all[i], s_all[j])];
                    if mask == 0 {
                        return false;
                    }
                    masks.push(mask);
                }
            }
            return star_assignment(t, &masks, self.s, self.r - 1, self.exact_k).is_some();
        }
        for w in start..u {
            if self.masks[self.pair_index(w, u)] == 0 || self.masks[self.pair_index(w, v)] == 0 {
                continue;
            }
            subset.push(w);
            if self.violation_rec(w + 1, u, v, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }

    fn pair_index(&self, u: u32, v: u32) -> usize {
        let (u, v) = (u.min(v) as usize, u.max(v) as usize);
        u * self.n - u * (u + 1) / 2 + (v - u - 1)
    }

    fn dfs(&mut self, idx: usize, sum: u64) -> Result<()> {
        self.nodes += 1;
        if let Some(cap) = self.budget {
            if self.nodes > cap {
                return Err(Error::BudgetExhausted { nodes: self.nodes, best: Some(self.best_value) });
            }
        }
        if idx == self.pairs.len() {
            if sum > self.best_value {
                self.best_value = sum;
                self.best_masks = self.masks.clone();
            }
            return Ok(());
        }
        let remaining = (self.pairs.len() - idx) as u64 * self.s as u64;
        if sum + remaining <= self.best_value {
            return Ok(());
        }
        // Root symmetry: color permutations let the first pair assume one
        // canonical mask per popcount.
        let candidates: Vec<u32> = if idx == 0 {
            (0..=self.s as u32).rev().map(|c| (1u32 << c) - 1).collect()
        } else {
            (0..1u32 << self.s).rev().collect()
        };
        for mask in candidates {
            self.masks[idx] = mask;
            if !self.creates_violation(idx) {
                self.dfs(idx + 1, sum + mask.count_ones() as u64)?;
            }
        }
        self.masks[idx] = 0;
        Ok(())
    }
}

/// Exact maximum of `Σ e(G_i)` over `s`-tuples of graphs on `[0, n)` that
/// avoid an `(r−1)`-star edge-colored `K_r`, with one optimal witness.
///
/// The search assigns each pair its color subset in lexicographic pair
/// order, pruning on incremental freeness and on the optimistic bound
/// `current + s·remaining`. A Turán-layer witness (`s` copies of
/// `T(n, r−1)`) seeds the best value. Exceeding `budget` nodes is a hard
/// resource error, never a silently truncated answer.
pub fn max_colored_sum(
    n: u32,
    s: usize,
    r: usize,
    exact_k: bool,
    budget: Option<u64>,
) -> Result<ColoredMaxResult> {
    if r < 3 {
        return Err(invalid("maximization needs r >= 3"));
    }
    if s == 0 {
        return Ok(ColoredMaxResult { value: 0, layers: Vec::new(), nodes: 0 });
    }
    if s > 20 {
        return Err(invalid("more than 20 colors is outside the exhaustive regime"));
    }
    if s + 2 <= r || (n as usize) < r {
        // No star cover of K_r can use fewer than r−1 colors, and no K_r fits
        // in fewer than r vertices: complete layers are free.
        let layers = vec![Graph2::complete(n); s];
        return Ok(ColoredMaxResult { value: s as u64 * binom(n as u64, 2), layers, nodes: 0 });
    }

    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push([u, v]);
        }
    }
    // Seed: s copies of T(n, r−1) are free (their support has no K_r).
    let seed_layer = turan_graph(n, r as u32 - 1).expect("r >= 3");
    let seed_value = s as u64 * seed_layer.edge_count() as u64;
    let seed_masks: Vec<u32> = pairs
        .iter()
        .map(|&[u, v]| if seed_layer.has_edge(u, v) { (1u32 << s) - 1 } else { 0 })
        .collect();

    let mut search = ColoredSearch {
        n: n as usize,
        s,
        r,
        exact_k,
        masks: vec![0; pairs.len()],
        pairs,
        best_value: seed_value,
        best_masks: seed_masks,
        nodes: 0,
        budget,
    };
    search.dfs(0, 0)?;

    let layers: Vec<Graph2> = (0..s)
        .map(|c| {
            let edges: Vec<[u32; 2]> = search
                .pairs
                .iter()
                .zip(&search.best_masks)
                .filter(|&(_, mask)| mask & (1 << c) != 0)
                .map(|(&pair, _)| pair)
                .collect();
            Graph2::new(n, edges).expect("pairs are valid")
        })
        .collect();
    Ok(ColoredMaxResult { value: search.best_value, layers, nodes: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_turan_layers(n: u32) -> ColoredMultigraph {
        let g = turan_graph(n, 2).unwrap();
        ColoredMultigraph::new(n, vec![g.clone(), g]).unwrap()
    }

    #[test]
    fn multiplicity_and_degrees() {
        let m = two_turan_layers(4);
        assert_eq!(m.multiplicity(0, 1).unwrap(), 2);
        assert_eq!(m.multiplicity(0, 2).unwrap(), 0);
        assert_eq!(m.min_degree(), 4);
        assert_eq!(m.weighted_degree(0).unwrap(), 4);
        let rest: Vec<u32> = (1..4).collect();
        assert_eq!(m.cut(&[0], &rest).unwrap(), m.weighted_degree(0).unwrap());
        assert!(m.cut(&[0, 1], &[1, 2]).is_err());
    }

    #[test]
    fn empty_multigraph_is_all_zero() {
        let m = ColoredMultigraph::new(4, vec![Graph2::empty(4), Graph2::empty(4)]).unwrap();
        assert_eq!(m.min_degree(), 0);
        assert_eq!(m.multiplicity(0, 1).unwrap(), 0);
    }

    #[test]
    fn star_colored_triangle_found() {
        let l1 = Graph2::new(3, [[0, 1], [0, 2]]).unwrap();
        let l2 = Graph2::new(3, [[1, 2]]).unwrap();
        let m = ColoredMultigraph::new(3, vec![l1, l2]).unwrap();
        let w = find_star_colored_clique(&m, 2, 3, true).unwrap().unwrap();
        assert!(w.verify(&m, 2, true));
        assert_eq!(w.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn turan_layers_have_no_clique_support() {
        for (n, r, s) in [(6u32, 3usize, 2usize), (8, 4, 3)] {
            let g = turan_graph(n, r as u32 - 1).unwrap();
            let layers = vec![g; s];
            assert!(is_star_colored_free(&layers, r).unwrap());
        }
    }

    #[test]
    fn single_triangle_layer_is_not_a_star() {
        let m = ColoredMultigraph::new(3, vec![Graph2::complete(3)]).unwrap();
        assert!(find_star_colored_clique(&m, 1, 3, true).unwrap().is_none());
        assert!(find_star_colored_clique(&m, 1, 3, false).unwrap().is_none());
    }

    #[test]
    fn complete_layers_contain_star_cover() {
        // Three complete layers on 4 vertices admit a 3-star cover of K_4.
        let layers = vec![Graph2::complete(4); 3];
        assert!(!is_star_colored_free(&layers, 4).unwrap());
        let m = ColoredMultigraph::new(4, layers).unwrap();
        let w = find_star_colored_clique(&m, 3, 4, true).unwrap().unwrap();
        assert!(w.verify(&m, 3, true));
    }

    #[test]
    fn h_b_link_family_is_free() {
        use crate::constructions::h_b;
        let built = h_b(20, 3, 4).unwrap();
        let h = &built.hypergraph;
        let b: Vec<u32> = (3..20).collect();
        let layers: Vec<Graph2> = (0..3u32)
            .map(|u| {
                let link = h.link_graph_in(u, &b).unwrap();
                let (compact, _) = link_to_compact(&link, &b);
                compact
            })
            .collect();
        assert!(is_star_colored_free(&layers, 4).unwrap());
    }

    fn link_to_compact(link: &Graph2, keep: &[u32]) -> (Graph2, Vec<u32>) {
        let mut rank = std::collections::HashMap::new();
        for (i, &v) in keep.iter().enumerate() {
            rank.insert(v, i as u32);
        }
        let edges: Vec<[u32; 2]> = link
            .edges()
            .iter()
            .map(|e| [rank[&e[0]], rank[&e[1]]])
            .collect();
        (Graph2::new(keep.len() as u32, edges).unwrap(), keep.to_vec())
    }

    #[test]
    fn bounds() {
        assert_eq!(colored_triangle_bound(4, 2), 8);
        assert_eq!(colored_triangle_bound(5, 2), 12);
        assert_eq!(colored_sum_bound(64, 3, 4), 3 * 1365 + 192);
        assert_eq!(colored_sum_bound(10, 1, 4), binom(10, 2));
        assert_eq!(colored_sum_target(4, 3, 4), 15);
    }

    #[test]
    fn max_small_triangle_cases() {
        let r = max_colored_sum(4, 2, 3, false, None).unwrap();
        assert_eq!(r.value, 8);
        assert!(is_star_colored_free(&r.layers, 3).unwrap());
        assert_eq!(r.layers.iter().map(|g| g.edge_count() as u64).sum::<u64>(), 8);

        let r = max_colored_sum(4, 3, 3, false, None).unwrap();
        assert_eq!(r.value, 12);
    }

    #[test]
    fn trivial_regime_uses_complete_layers() {
        let r = max_colored_sum(5, 1, 3, false, None).unwrap();
        assert_eq!(r.value, binom(5, 2));
        let r = max_colored_sum(5, 2, 4, false, None).unwrap();
        assert_eq!(r.value, 2 * binom(5, 2));
    }

    #[test]
    fn budget_exhaustion_is_a_hard_error() {
        let err = max_colored_sum(5, 2, 3, false, Some(3)).unwrap_err();
        match err {
            Error::BudgetExhausted { nodes, best } => {
                assert!(nodes > 3);
                assert!(best.is_some());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn threshold_check_examples() {
        // All layers complete: every vertex outside T qualifies.
        let r = 4;
        let layers = vec![Graph2::complete(6); 3];
        let m = ColoredMultigraph::new(6, layers).unwrap();
        assert_eq!(cut_threshold_check(&m, &[0, 1, 2], r).unwrap(), Some(3));

        let empty = ColoredMultigraph::new(6, vec![Graph2::empty(6); 3]).unwrap();
        assert_eq!(cut_threshold_check(&empty, &[0, 1], r).unwrap(), None);

        // Turán layers with T inside one part: a vertex of another part works.
        let g = turan_graph(12, 3).unwrap();
        let m = ColoredMultigraph::new(12, vec![g.clone(), g.clone(), g]).unwrap();
        // Part 0 under round-robin is {0, 3, 6, 9}.
        let found = cut_threshold_check(&m, &[0, 3], r).unwrap().unwrap();
        assert!(!found.is_multiple_of(3));
        assert!(cut_threshold_check(&m, &[0, 1, 2, 3], r).is_err());
    }
}
