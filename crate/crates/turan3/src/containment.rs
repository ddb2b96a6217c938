//! Subhypergraph containment: does a small pattern 3-graph embed into a host
//! as a (not necessarily induced) subhypergraph?
//!
//! The generic engine is a backtracking search over pattern vertices in a
//! static degree-descending order, with forward checking: candidate domains
//! shrink through degree, co-degree and pair-neighborhood constraints as
//! vertices are placed. Patterns on exactly four vertices dispatch to an
//! exhaustive scan over all 4-subsets of the host, which is what makes the
//! large freeness certificates feasible.

use crate::bitset::Bitset;
use crate::hypergraph::Hypergraph3;

/// An injective vertex map from pattern to host; `map[i]` is the image of
/// pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<u32>,
}

impl Embedding {
    /// Re-validates the embedding edge by edge.
    pub fn verify(&self, pattern: &Hypergraph3, host: &Hypergraph3) -> bool {
        if self.map.len() != pattern.n() as usize {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !self.map.iter().all(|&v| v < host.n() && seen.insert(v)) {
            return false;
        }
        pattern.edges().iter().all(|e| {
            host.has_edge([
                self.map[e[0] as usize],
                self.map[e[1] as usize],
                self.map[e[2] as usize],
            ])
        })
    }
}

/// Limit on `C(n, 4)` above which the 4-subset scan falls back to the
/// generic backtracker.
const SCAN4_SUBSET_LIMIT: u64 = 100_000_000;

/// Decides containment, returning a witness embedding when one exists.
pub fn contains(pattern: &Hypergraph3, host: &Hypergraph3) -> Option<Embedding> {
    if pattern.n() == 4 {
        let n = host.n() as u64;
        if n >= 4 && n * (n - 1) * (n - 2) * (n - 3) / 24 <= SCAN4_SUBSET_LIMIT {
            return contains_scan4(pattern, host);
        }
    }
    contains_backtracking(pattern, host)
}

/// Verdict per family member (`true` = the member embeds into the host).
/// The host is family-free iff every verdict is `false`. Members that are
/// unions of pairwise disjoint edges dispatch to the matching solver.
pub fn family_free(family: &[Hypergraph3], host: &Hypergraph3) -> Vec<bool> {
    family
        .iter()
        .map(|f| {
            if let Some(k) = as_matching_pattern(f) {
                host.n() >= f.n() && host.has_matching_of_size(k)
            } else {
                contains(f, host).is_some()
            }
        })
        .collect()
}

/// Returns `Some(k)` when the pattern's edges are pairwise disjoint (a
/// matching of size `k`, possibly with extra isolated vertices).
fn as_matching_pattern(f: &Hypergraph3) -> Option<usize> {
    let mut used = Bitset::new(f.n() as usize);
    for e in f.edges() {
        for &v in e {
            if used.contains(v as usize) {
                return None;
            }
            used.insert(v as usize);
        }
    }
    Some(f.edge_count())
}

// ---------------------------------------------------------------------------
// Generic backtracker
// ---------------------------------------------------------------------------

struct PatternInfo {
    order: Vec<u32>,
    /// Co-degree of each pattern vertex pair.
    pair_codegree: Vec<Vec<usize>>,
    isolated: Vec<u32>,
}

fn pattern_info(pattern: &Hypergraph3) -> PatternInfo {
    let n = pattern.n() as usize;
    let mut pair_codegree = vec![vec![0usize; n]; n];
    let mut shadow_adj = vec![Bitset::new(n); n];
    for e in pattern.edges() {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    pair_codegree[e[i] as usize][e[j] as usize] += 1;
                    shadow_adj[e[i] as usize].insert(e[j] as usize);
                }
            }
        }
    }
    // Halve the double count.
    for row in pair_codegree.iter_mut() {
        for c in row.iter_mut() {
            *c /= 2;
        }
    }

    let isolated: Vec<u32> = (0..pattern.n()).filter(|&v| pattern.degree(v) == 0).collect();
    let mut remaining: Vec<u32> = (0..pattern.n()).filter(|&v| pattern.degree(v) > 0).collect();
    let mut order: Vec<u32> = Vec::new();
    // Degree-descending, ties toward vertices adjacent to those already
    // placed, then by label.
    while !remaining.is_empty() {
        let mut best_idx = 0;
        let mut best_key = (0usize, false, u32::MAX);
        for (i, &v) in remaining.iter().enumerate() {
            let adj = order.iter().any(|&u| shadow_adj[u as usize].contains(v as usize));
            let key = (pattern.degree(v), adj, v);
            let better = key.0 > best_key.0
                || (key.0 == best_key.0 && key.1 && !best_key.1)
                || (key.0 == best_key.0 && key.1 == best_key.1 && key.2 < best_key.2);
            if i == 0 || better {
                best_key = key;
                best_idx = i;
            }
        }
        order.push(remaining.remove(best_idx));
    }
    PatternInfo { order, pair_codegree, isolated }
}

struct Search<'a> {
    pattern: &'a Hypergraph3,
    host: &'a Hypergraph3,
    info: &'a PatternInfo,
    /// Position of each pattern vertex in the placement order, or MAX.
    position: Vec<usize>,
    image: Vec<u32>,
    used: Bitset,
    host_shadow_adj: Vec<Bitset>,
}

impl<'a> Search<'a> {
    /// Host vertices whose degree supports pattern vertex `f`.
    fn base_domain(&self, f: u32) -> Bitset {
        let need = self.pattern.degree(f);
        let mut dom = Bitset::new(self.host.n() as usize);
        for v in 0..self.host.n() {
            if self.host.degree(v) >= need {
                dom.insert(v as usize);
            }
        }
        dom
    }

    fn pair_neighborhood_bits(&self, x: u32, y: u32) -> Bitset {
        let common = self.host.incidence(x).and(self.host.incidence(y));
        let mut out = Bitset::new(self.host.n() as usize);
        for ei in common.iter() {
            let e = self.host.edge(ei);
            for &w in &e {
                if w != x && w != y {
                    out.insert(w as usize);
                }
            }
        }
        out
    }

    /// Narrows the open domains after placing pattern vertex `f` at `v`.
    /// Returns false as soon as some open domain empties.
    fn refine(&self, f: u32, v: u32, domains: &mut [Bitset], depth: usize) -> bool {
        for e in self.pattern.edges() {
            if !e.contains(&f) {
                continue;
            }
            let others: Vec<u32> = e.iter().copied().filter(|&x| x != f).collect();
            let placed: Vec<u32> = others
                .iter()
                .copied()
                .filter(|&x| self.position[x as usize] < depth)
                .collect();
            match placed.len() {
                2 => {
                    // Fully placed edge: it must exist in the host.
                    if !self.host.has_edge([v, self.image[placed[0] as usize], self.image[placed[1] as usize]]) {
                        return false;
                    }
                }
                1 => {
                    let third = others.iter().copied().find(|&x| self.position[x as usize] >= depth);
                    if let Some(t) = third {
                        let nbhd = self.pair_neighborhood_bits(v, self.image[placed[0] as usize]);
                        let dom = &mut domains[t as usize];
                        dom.intersect_with(&nbhd);
                        if dom.is_empty() {
                            return false;
                        }
                    }
                }
                0 => {
                    for &x in &others {
                        let dom = &mut domains[x as usize];
                        dom.intersect_with(&self.host_shadow_adj[v as usize]);
                        if dom.is_empty() {
                            return false;
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize, domains: &[Bitset]) -> bool {
        if depth == self.info.order.len() {
            return true;
        }
        let f = self.info.order[depth];
        let candidates: Vec<usize> = domains[f as usize].iter().collect();
        for vi in candidates {
            let v = vi as u32;
            if self.used.contains(vi) {
                continue;
            }
            // Co-degree compatibility against every placed vertex.
            let codegree_ok = self.info.order[..depth].iter().all(|&g| {
                let need = self.info.pair_codegree[f as usize][g as usize];
                need == 0
                    || self
                        .host
                        .codegree(v, self.image[g as usize])
                        .map(|have| have >= need)
                        .unwrap_or(false)
            });
            if !codegree_ok {
                continue;
            }
            self.position[f as usize] = depth;
            self.image[f as usize] = v;
            self.used.insert(vi);
            let mut next = domains.to_vec();
            if self.refine(f, v, &mut next, depth + 1) && self.dfs(depth + 1, &next) {
                return true;
            }
            self.used.remove(vi);
            self.position[f as usize] = usize::MAX;
        }
        false
    }
}

/// The generic backtracking engine; exposed separately so the 4-subset fast
/// path can be checked against it.
pub fn contains_backtracking(pattern: &Hypergraph3, host: &Hypergraph3) -> Option<Embedding> {
    contains_backtracking_seeded(pattern, host, &[])
}

/// Like [`contains_backtracking`], but with some pattern vertices pre-placed
/// (used for incremental checks that must route through a fixed host edge).
fn contains_backtracking_seeded(
    pattern: &Hypergraph3,
    host: &Hypergraph3,
    seed: &[(u32, u32)],
) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let info = pattern_info(pattern);
    let n_host = host.n() as usize;
    let mut host_shadow_adj = vec![Bitset::new(n_host); n_host];
    for e in host.edges() {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    host_shadow_adj[e[i] as usize].insert(e[j] as usize);
                }
            }
        }
    }
    let mut search = Search {
        pattern,
        host,
        info: &info,
        position: vec![usize::MAX; pattern.n() as usize],
        image: vec![0; pattern.n() as usize],
        used: Bitset::new(n_host),
        host_shadow_adj,
    };
    let mut domains: Vec<Bitset> = (0..pattern.n()).map(|f| search.base_domain(f)).collect();

    // Pre-place the seed (reordering the search so seeded vertices come
    // first), rejecting immediately on any violated constraint.
    let mut order: Vec<u32> = seed.iter().map(|&(f, _)| f).collect();
    for &f in &info.order {
        if !order.contains(&f) {
            order.push(f);
        }
    }
    let seeded_info = PatternInfo {
        order,
        pair_codegree: info.pair_codegree.clone(),
        isolated: info.isolated.clone(),
    };
    search.info = &seeded_info;
    for (depth, &(f, v)) in seed.iter().enumerate() {
        if v >= host.n() || search.used.contains(v as usize) || !domains[f as usize].contains(v as usize) {
            return None;
        }
        let codegree_ok = seed[..depth].iter().all(|&(g, _)| {
            let need = seeded_info.pair_codegree[f as usize][g as usize];
            need == 0
                || host
                    .codegree(v, search.image[g as usize])
                    .map(|have| have >= need)
                    .unwrap_or(false)
        });
        if !codegree_ok {
            return None;
        }
        search.position[f as usize] = depth;
        search.image[f as usize] = v;
        search.used.insert(v as usize);
        if !search.refine(f, v, &mut domains, depth + 1) {
            return None;
        }
    }

    if !search.dfs(seed.len(), &domains) {
        return None;
    }
    // Isolated pattern vertices take arbitrary unused host vertices.
    for &f in &seeded_info.isolated {
        let v = (0..host.n()).find(|&v| !search.used.contains(v as usize)).expect("room checked");
        search.used.insert(v as usize);
        search.image[f as usize] = v;
    }
    Some(Embedding { map: search.image })
}

/// Containment where some pattern edge must map exactly onto `through`
/// (any of its six orientations). Complete for incremental host growth: a
/// copy that appeared when `through` was added must use it.
pub fn contains_through_edge(
    pattern: &Hypergraph3,
    host: &Hypergraph3,
    through: [u32; 3],
) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for e in pattern.edges() {
        for perm in perms {
            let seed = [
                (e[0], through[perm[0]]),
                (e[1], through[perm[1]]),
                (e[2], through[perm[2]]),
            ];
            if let Some(found) = contains_backtracking_seeded(pattern, host, &seed) {
                return Some(found);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// 4-subset scan
// ---------------------------------------------------------------------------

/// Exhaustive scan over all 4-subsets of the host for a 4-vertex pattern.
/// A 16-entry table maps the edge mask of a 4-subset to a pre-computed
/// embedding permutation (if any), so the hot loop is four bit tests and a
/// lookup.
pub fn contains_scan4(pattern: &Hypergraph3, host: &Hypergraph3) -> Option<Embedding> {
    assert_eq!(pattern.n(), 4, "scan applies to 4-vertex patterns");
    let n = host.n() as usize;
    if n < 4 {
        return None;
    }

    // Triples of [0,4): bit 0 = {0,1,2}, 1 = {0,1,3}, 2 = {0,2,3}, 3 = {1,2,3}.
    let local_triples: [[u32; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut table: [Option<[usize; 4]>; 16] = [None; 16];
    let mut perm = [0usize, 1, 2, 3];
    let mut perms: Vec<[usize; 4]> = Vec::new();
    permutations(&mut perm, 0, &mut perms);
    for (mask, entry) in table.iter_mut().enumerate() {
        let present: Vec<[u32; 3]> = (0..4).filter(|&t| mask & (1 << t) != 0).map(|t| local_triples[t]).collect();
        'perm: for p in &perms {
            for e in pattern.edges() {
                let mut img = [p[e[0] as usize] as u32, p[e[1] as usize] as u32, p[e[2] as usize] as u32];
                img.sort_unstable();
                if !present.contains(&img) {
                    continue 'perm;
                }
            }
            *entry = Some(*p);
            break;
        }
    }
    if pattern.edge_count() == 0 {
        return Some(Embedding { map: vec![0, 1, 2, 3] });
    }

    // Pair neighborhoods as vertex bitsets.
    let pair_idx = |u: usize, v: usize| u * n + v;
    let mut pair_nbhd = vec![Bitset::new(n); n * n];
    for e in host.edges() {
        let [a, b, c] = [e[0] as usize, e[1] as usize, e[2] as usize];
        pair_nbhd[pair_idx(a, b)].insert(c);
        pair_nbhd[pair_idx(a, c)].insert(b);
        pair_nbhd[pair_idx(b, c)].insert(a);
    }

    for a in 0..n {
        for b in a + 1..n {
            let nab = &pair_nbhd[pair_idx(a, b)];
            for c in b + 1..n {
                let nac = &pair_nbhd[pair_idx(a, c)];
                let nbc = &pair_nbhd[pair_idx(b, c)];
                let abc = nab.contains(c);
                for d in c + 1..n {
                    let mask = (abc as usize)
                        | ((nab.contains(d) as usize) << 1)
                        | ((nac.contains(d) as usize) << 2)
                        | ((nbc.contains(d) as usize) << 3);
                    if let Some(p) = table[mask] {
                        let subset = [a as u32, b as u32, c as u32, d as u32];
                        let map = (0..4).map(|f| subset[p[f]]).collect();
                        return Some(Embedding { map });
                    }
                }
            }
        }
    }
    None
}

fn permutations(perm: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*perm);
        return;
    }
    for i in k..4 {
        perm.swap(k, i);
        permutations(perm, k + 1, out);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{f_3_2, f_star_partition, h_b, h_ns, k4_minus, k4minus_extremal, matching};

    #[test]
    fn identity_embedding() {
        let f = f_3_2();
        let found = contains(&f, &f).unwrap();
        assert!(found.verify(&f, &f));
    }

    #[test]
    fn matching_pattern_embeds_when_matching_exists() {
        let m2 = matching(2);
        let host = h_ns(10, 2).unwrap().hypergraph;
        assert_eq!(host.matching_number(), 2);
        let found = contains(&m2, &host).unwrap();
        assert!(found.verify(&m2, &host));
    }

    #[test]
    fn k4_minus_does_not_embed_into_k4minus_extremal() {
        let host = k4minus_extremal(20, 2).unwrap().hypergraph;
        assert!(contains(&k4_minus(), &host).is_none());
        // The single-cover construction, in contrast, does contain it.
        let cover_host = h_ns(20, 2).unwrap().hypergraph;
        let hit = contains(&k4_minus(), &cover_host).unwrap();
        assert!(hit.verify(&k4_minus(), &cover_host));
    }

    #[test]
    fn star_partition_pattern_avoids_h_b() {
        let host = h_b(20, 3, 4).unwrap().hypergraph;
        assert!(contains(&f_star_partition(4).unwrap(), &host).is_none());
    }

    #[test]
    fn f32_avoids_h_ns() {
        let host = h_ns(12, 2).unwrap().hypergraph;
        assert!(contains(&f_3_2(), &host).is_none());
    }

    #[test]
    fn family_verdicts() {
        let host = h_ns(20, 2).unwrap().hypergraph;
        let verdicts = family_free(&[f_3_2(), matching(3)], &host);
        assert_eq!(verdicts, vec![false, false]);

        let verdicts = family_free(&[matching(1)], &Hypergraph3::empty(4));
        assert_eq!(verdicts, vec![false]);

        let verdicts = family_free(&[k4_minus()], &Hypergraph3::complete(4));
        assert_eq!(verdicts, vec![true]);
    }

    #[test]
    fn scan_agrees_with_backtracking_on_k4_minus() {
        let hosts = [
            k4minus_extremal(9, 2).unwrap().hypergraph,
            h_ns(9, 2).unwrap().hypergraph,
            Hypergraph3::complete(5),
            Hypergraph3::empty(6),
        ];
        for host in hosts {
            let scan = contains_scan4(&k4_minus(), &host).is_some();
            let generic = contains_backtracking(&k4_minus(), &host).is_some();
            assert_eq!(scan, generic);
        }
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        // One edge plus an isolated vertex: embeds iff the host has 4+ vertices.
        let f = Hypergraph3::new(4, [[0, 1, 2]]).unwrap();
        let small = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        assert!(contains(&f, &small).is_none());
        let big = Hypergraph3::new(4, [[0, 1, 2]]).unwrap();
        let found = contains(&f, &big).unwrap();
        assert!(found.verify(&f, &big));
    }

    #[test]
    fn through_edge_restriction() {
        let host = Hypergraph3::new(6, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [3, 4, 5]]).unwrap();
        // K4-minus lives on {0,1,2,3}; every copy uses [0,1,2].
        assert!(contains_through_edge(&k4_minus(), &host, [0, 1, 2]).is_some());
        // No copy routes through the pendant edge [3,4,5].
        assert!(contains_through_edge(&k4_minus(), &host, [3, 4, 5]).is_none());
    }

    #[test]
    fn monotone_under_host_growth() {
        let f = k4_minus();
        let host = Hypergraph3::new(5, [[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap();
        assert!(contains(&f, &host).is_some());
        let bigger = Hypergraph3::new(5, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 4]]).unwrap();
        assert!(contains(&f, &bigger).is_some());
    }
}
