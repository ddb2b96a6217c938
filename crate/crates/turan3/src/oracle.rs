//! Naive reference implementations used to cross-check the optimized
//! solvers. Everything here enumerates without pruning and shares no code
//! with the paths it validates; keep it that way.

use crate::coloring::IntOrInf;
use crate::colored::ColoredMultigraph;
use crate::hypergraph::{Graph2, Hypergraph3};

/// Containment by trying every injective map of pattern vertices.
pub fn brute_contains(pattern: &Hypergraph3, host: &Hypergraph3) -> bool {
    let nf = pattern.n() as usize;
    let nh = host.n() as usize;
    if nf > nh {
        return false;
    }
    let mut map = vec![u32::MAX; nf];
    let mut used = vec![false; nh];
    fn rec(
        pattern: &Hypergraph3,
        host: &Hypergraph3,
        v: usize,
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if v == map.len() {
            return pattern.edges().iter().all(|e| {
                host.has_edge([map[e[0] as usize], map[e[1] as usize], map[e[2] as usize]])
            });
        }
        for img in 0..used.len() {
            if !used[img] {
                used[img] = true;
                map[v] = img as u32;
                if rec(pattern, host, v + 1, map, used) {
                    return true;
                }
                used[img] = false;
            }
        }
        false
    }
    rec(pattern, host, 0, &mut map, &mut used)
}

/// Matching number by testing all edge subsets of size `k` for disjointness,
/// increasing `k` until none works.
pub fn brute_matching_number(h: &Hypergraph3) -> usize {
    fn any_disjoint(edges: &[[u32; 3]], k: usize, start: usize, picked: &mut Vec<[u32; 3]>) -> bool {
        if picked.len() == k {
            return true;
        }
        for i in start..edges.len() {
            let e = edges[i];
            if picked.iter().all(|p| p.iter().all(|v| !e.contains(v))) {
                picked.push(e);
                if any_disjoint(edges, k, i + 1, picked) {
                    return true;
                }
                picked.pop();
            }
        }
        false
    }
    let mut nu = 0;
    loop {
        let mut picked = Vec::new();
        if any_disjoint(h.edges(), nu + 1, 0, &mut picked) {
            nu += 1;
        } else {
            return nu;
        }
    }
}

/// Chromatic number by testing all `k^n` colorings for ascending `k`.
pub fn brute_graph_chromatic(g: &Graph2) -> usize {
    let n = g.n() as usize;
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            let proper = g.edges().iter().all(|e| colors[e[0] as usize] != colors[e[1] as usize]);
            if proper {
                return k;
            }
            // Odometer increment over base-k strings.
            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                colors[pos] += 1;
                if colors[pos] < k {
                    break;
                }
                colors[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    n
}

/// Minimum strong red set by scanning all `2^n` red subsets.
pub fn brute_q_value(f: &Hypergraph3) -> IntOrInf {
    let n = f.n() as usize;
    let mut best: Option<usize> = None;
    for red_bits in 0u64..(1 << n) {
        let ok = f.edges().iter().all(|e| {
            e.iter().filter(|&&v| red_bits & (1 << v) != 0).count() == 1
        });
        if ok {
            let size = red_bits.count_ones() as usize;
            best = Some(best.map_or(size, |b: usize| b.min(size)));
        }
    }
    match best {
        Some(v) => IntOrInf::Finite(v),
        None => IntOrInf::Infinity,
    }
}

/// Star-colored clique existence by trying every color assignment of every
/// `t`-subset.
pub fn brute_star_colored_clique(m: &ColoredMultigraph, k: usize, t: usize, exact_k: bool) -> bool {
    let n = m.n() as usize;
    let s = m.s();
    let mut subset = Vec::with_capacity(t);
    fn subsets(n: usize, t: usize, start: usize, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if cur.len() == t {
            return visit(cur);
        }
        for v in start..n {
            cur.push(v as u32);
            if subsets(n, t, v + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    subsets(n, t, 0, &mut subset, &mut |sub| {
        let mut pairs = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                pairs.push([sub[i], sub[j]]);
            }
        }
        let p = pairs.len();
        let mut assign = vec![0usize; p];
        loop {
            let valid = check_assignment(m, &pairs, &assign, k, exact_k);
            if valid {
                return true;
            }
            let mut pos = 0;
            loop {
                if pos == p {
                    return false;
                }
                assign[pos] += 1;
                if assign[pos] < s {
                    break;
                }
                assign[pos] = 0;
                pos += 1;
            }
        }
    })
}

fn check_assignment(m: &ColoredMultigraph, pairs: &[[u32; 2]], assign: &[usize], k: usize, exact_k: bool) -> bool {
    for (pair, &color) in pairs.iter().zip(assign) {
        if !m.layers()[color].has_edge(pair[0], pair[1]) {
            return false;
        }
    }
    let mut used: Vec<usize> = assign.to_vec();
    used.sort_unstable();
    used.dedup();
    if exact_k {
        if used.len() != k {
            return false;
        }
    } else if used.len() > k {
        return false;
    }
    for &c in &used {
        let class: Vec<[u32; 2]> = pairs
            .iter()
            .zip(assign)
            .filter(|&(_, &a)| a == c)
            .map(|(&p, _)| p)
            .collect();
        let mut centers: Vec<u32> = class[0].to_vec();
        for pair in &class[1..] {
            centers.retain(|v| pair.contains(v));
        }
        if centers.is_empty() {
            return false;
        }
    }
    true
}

/// Maximum family-free edge count by enumerating all `2^{C(n,3)}` subsets.
pub fn brute_max_family_free(n: u32, family: &[Hypergraph3], s: Option<u32>) -> u64 {
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    let t = triples.len();
    assert!(t <= 20, "brute enumeration is limited to C(n,3) <= 20");
    let mut best = 0u64;
    for bits in 0u64..(1 << t) {
        let count = bits.count_ones() as u64;
        if count <= best {
            continue;
        }
        let edges: Vec<[u32; 3]> = (0..t).filter(|&i| bits & (1 << i) != 0).map(|i| triples[i]).collect();
        let host = Hypergraph3::new(n, edges).expect("valid");
        if let Some(s) = s {
            if brute_matching_number(&host) > s as usize {
                continue;
            }
        }
        if family.iter().any(|f| brute_contains(f, &host)) {
            continue;
        }
        best = count;
    }
    best
}
