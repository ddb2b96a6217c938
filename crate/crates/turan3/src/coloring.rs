//! Chromatic invariants: exact graph chromatic number, weak chromatic number
//! of 3-graphs, the red–blue parameters `p` and `q`, and the link-chromatic
//! ordering of pattern vertices.
//!
//! All searches here are exhaustive by contract; they are meant for pattern
//! hypergraphs with at most a dozen or so vertices.

use crate::hypergraph::{Graph2, Hypergraph3};

/// An integer invariant that may be infinite (no valid coloring exists).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum IntOrInf {
    Finite(usize),
    Infinity,
}

impl std::fmt::Display for IntOrInf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntOrInf::Finite(v) => write!(f, "{v}"),
            IntOrInf::Infinity => write!(f, "inf"),
        }
    }
}

/// A red set together with the ambient vertex count; blue is the complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedBlueColoring {
    pub n: u32,
    pub red: Vec<u32>,
}

impl RedBlueColoring {
    pub fn is_red(&self, v: u32) -> bool {
        self.red.binary_search(&v).is_ok()
    }

    /// Every edge avoids being entirely red or entirely blue.
    pub fn is_proper(&self, f: &Hypergraph3) -> bool {
        f.edges().iter().all(|e| {
            let reds = e.iter().filter(|&&v| self.is_red(v)).count();
            reds != 0 && reds != 3
        })
    }

    /// Every edge contains exactly one red vertex.
    pub fn is_strong(&self, f: &Hypergraph3) -> bool {
        f.edges()
            .iter()
            .all(|e| e.iter().filter(|&&v| self.is_red(v)).count() == 1)
    }
}

// ---------------------------------------------------------------------------
// Graph chromatic number
// ---------------------------------------------------------------------------

fn greedy_clique_bound(g: &Graph2) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut order: Vec<u32> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<u32> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len().max(1)
}

fn colorable(g: &Graph2, order: &[u32], k: usize, colors: &mut [usize], idx: usize) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let used_so_far = colors[..idx]
        .iter()
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    // Trying one fresh color is enough; higher fresh colors are symmetric.
    for c in 0..k.min(used_so_far + 1) {
        let conflict = order[..idx]
            .iter()
            .enumerate()
            .any(|(j, &u)| colors[j] == c && g.has_edge(u, v));
        if !conflict {
            colors[idx] = c;
            if colorable(g, order, k, colors, idx + 1) {
                return true;
            }
        }
    }
    false
}

/// Exact chromatic number: 0 for the empty graph, 1 for edgeless graphs.
pub fn graph_chromatic_number(g: &Graph2) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut order: Vec<u32> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut k = greedy_clique_bound(g);
    loop {
        let mut colors = vec![usize::MAX; order.len()];
        if colorable(g, &order, k, &mut colors, 0) {
            return k;
        }
        k += 1;
    }
}

// ---------------------------------------------------------------------------
// Weak hypergraph chromatic number
// ---------------------------------------------------------------------------

fn weakly_colorable(f: &Hypergraph3, k: usize, colors: &mut [usize], v: usize) -> bool {
    if v == f.n() as usize {
        return true;
    }
    let used_so_far = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(used_so_far + 1) {
        colors[v] = c;
        let ok = f.edges().iter().all(|e| {
            if e[2] as usize > v {
                return true;
            }
            !(colors[e[0] as usize] == colors[e[1] as usize]
                && colors[e[1] as usize] == colors[e[2] as usize])
        });
        if ok && weakly_colorable(f, k, colors, v + 1) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Minimum number of colors with no monochromatic edge.
pub fn hypergraph_chromatic_number(f: &Hypergraph3) -> usize {
    if f.n() == 0 {
        return 0;
    }
    if f.edge_count() == 0 {
        return 1;
    }
    let mut k = 2;
    loop {
        let mut colors = vec![usize::MAX; f.n() as usize];
        if weakly_colorable(f, k, &mut colors, 0) {
            return k;
        }
        k += 1;
    }
}

// ---------------------------------------------------------------------------
// p and q
// ---------------------------------------------------------------------------

fn subsets_of_size(n: usize, k: usize, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in start..n {
            cur.push(v as u32);
            if rec(n, k, v + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::with_capacity(k);
    rec(n, k, 0, &mut cur, &mut visit)
}

/// Minimum red set of a proper red–blue coloring (no edge entirely red or
/// entirely blue), searched in increasing size so the first hit is minimal.
pub fn min_proper_red_blue(f: &Hypergraph3) -> Option<RedBlueColoring> {
    let n = f.n() as usize;
    for k in 0..=n {
        let mut found: Option<Vec<u32>> = None;
        subsets_of_size(n, k, |red| {
            let coloring = RedBlueColoring { n: n as u32, red: red.to_vec() };
            if coloring.is_proper(f) {
                found = Some(red.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(red) = found {
            return Some(RedBlueColoring { n: n as u32, red });
        }
    }
    None
}

/// `p`: minimum number of red vertices over proper red–blue colorings;
/// infinite exactly when the weak chromatic number exceeds two.
pub fn p_value(f: &Hypergraph3) -> IntOrInf {
    match min_proper_red_blue(f) {
        Some(c) => IntOrInf::Finite(c.red.len()),
        None => IntOrInf::Infinity,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Red,
    Blue,
    Open,
}

/// Unit propagation for the exactly-one-red constraint. Returns false on
/// contradiction.
fn propagate(f: &Hypergraph3, marks: &mut [Mark]) -> bool {
    loop {
        let mut changed = false;
        for e in f.edges() {
            let reds = e.iter().filter(|&&v| marks[v as usize] == Mark::Red).count();
            let blues = e.iter().filter(|&&v| marks[v as usize] == Mark::Blue).count();
            if reds > 1 || blues == 3 {
                return false;
            }
            if reds == 1 {
                for &v in e {
                    if marks[v as usize] == Mark::Open {
                        marks[v as usize] = Mark::Blue;
                        changed = true;
                    }
                }
            } else if blues == 2 {
                // reds == 0 here, so the single open vertex must be red.
                for &v in e {
                    if marks[v as usize] == Mark::Open {
                        marks[v as usize] = Mark::Red;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn strong_dfs(f: &Hypergraph3, marks: &mut Vec<Mark>, best: &mut Option<Vec<u32>>) {
    if !propagate(f, marks) {
        return;
    }
    let reds = marks.iter().filter(|&&m| m == Mark::Red).count();
    if let Some(b) = best {
        if reds >= b.len() {
            return;
        }
    }
    match marks.iter().position(|&m| m == Mark::Open) {
        None => {
            let red: Vec<u32> = (0..marks.len() as u32)
                .filter(|&v| marks[v as usize] == Mark::Red)
                .collect();
            let improves = best.as_ref().is_none_or(|b| red.len() < b.len());
            if improves {
                *best = Some(red);
            }
        }
        Some(v) => {
            // Blue first: smaller red sets are found earlier.
            let saved = marks.clone();
            marks[v] = Mark::Blue;
            strong_dfs(f, marks, best);
            *marks = saved.clone();
            marks[v] = Mark::Red;
            strong_dfs(f, marks, best);
            *marks = saved;
        }
    }
}

/// Minimum red set of a strong red–blue coloring (every edge has exactly one
/// red vertex), or `None` when no strong coloring exists.
pub fn min_strong_red_blue(f: &Hypergraph3) -> Option<RedBlueColoring> {
    let mut marks = vec![Mark::Open; f.n() as usize];
    let mut best = None;
    strong_dfs(f, &mut marks, &mut best);
    best.map(|red| RedBlueColoring { n: f.n(), red })
}

/// `q`: minimum red count of a strong red–blue coloring, infinite if none.
pub fn q_value(f: &Hypergraph3) -> IntOrInf {
    match min_strong_red_blue(f) {
        Some(c) => IntOrInf::Finite(c.red.len()),
        None => IntOrInf::Infinity,
    }
}

// ---------------------------------------------------------------------------
// Link-chromatic profile
// ---------------------------------------------------------------------------

/// Vertices ordered by descending chromatic number of their link graphs,
/// ties broken by ascending label, with the matching value sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkChromaticProfile {
    pub ordering: Vec<u32>,
    pub values: Vec<usize>,
}

pub fn link_chromatic_profile(f: &Hypergraph3) -> LinkChromaticProfile {
    let chromatic: Vec<usize> = (0..f.n())
        .map(|v| graph_chromatic_number(&f.link_graph(v).expect("vertex in range")))
        .collect();
    let mut ordering: Vec<u32> = (0..f.n()).collect();
    ordering.sort_by_key(|&v| (std::cmp::Reverse(chromatic[v as usize]), v));
    let values = ordering.iter().map(|&v| chromatic[v as usize]).collect();
    LinkChromaticProfile { ordering, values }
}
