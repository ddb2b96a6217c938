//! Exact computation of the maximum edge count of a 3-graph on `[0, n)`
//! avoiding a forbidden family and (optionally) a matching bound, by
//! branch-and-bound over the triples at tiny `n`. This is the ground truth
//! against which constructions and formulas are compared at desk scale.

use std::collections::BTreeSet;

use crate::containment::contains_through_edge;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph3;

pub const MAX_SOLVE_N: u32 = 7;
pub const MAX_ENUMERATE_N: u32 = 6;
pub const MAX_PATTERN_N: u32 = 6;

/// One extremal question: host size, optional matching bound, forbidden
/// patterns and an optional node budget.
#[derive(Clone, Debug)]
pub struct SearchInstance {
    pub n: u32,
    pub s: Option<u32>,
    pub family: Vec<Hypergraph3>,
    pub budget: Option<u64>,
}

/// Exact answer unless the budget ran out, in which case `value` is only a
/// lower bound and `exact` is false.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub value: u64,
    pub witness: Hypergraph3,
    pub nodes: u64,
    pub exact: bool,
}

fn validate(inst: &SearchInstance, max_n: u32) -> Result<()> {
    if inst.n > max_n {
        return Err(invalid(format!("instance size {} exceeds the exact-search cap {max_n}", inst.n)));
    }
    for f in &inst.family {
        if f.n() > MAX_PATTERN_N {
            return Err(invalid(format!("forbidden pattern on {} vertices exceeds the cap {MAX_PATTERN_N}", f.n())));
        }
        if f.edge_count() == 0 && f.n() <= inst.n {
            return Err(invalid("an edgeless forbidden pattern excludes every host"));
        }
    }
    Ok(())
}

/// All triples on `[0, n)` in colexicographic order, so `{0,1,2}` is first
/// and new triples stay local to recently used vertices.
fn colex_triples(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for c in 2..n {
        for b in 1..c {
            for a in 0..b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn vertex_mask(e: [u32; 3]) -> u32 {
    (1 << e[0]) | (1 << e[1]) | (1 << e[2])
}

/// Is there a matching of `k` edges among `masks`, avoiding `forbidden`?
fn mask_matching(masks: &[u32], k: usize, forbidden: u32, start: usize) -> bool {
    if k == 0 {
        return true;
    }
    for i in start..masks.len() {
        if masks[i] & forbidden == 0 && mask_matching(masks, k - 1, forbidden | masks[i], i + 1) {
            return true;
        }
    }
    false
}

struct Solver<'a> {
    inst: &'a SearchInstance,
    triples: Vec<[u32; 3]>,
    family: Vec<&'a Hypergraph3>,
    edges: Vec<[u32; 3]>,
    edge_masks: Vec<u32>,
    best: u64,
    best_edges: Vec<[u32; 3]>,
    nodes: u64,
    out_of_budget: bool,
    /// Enumerate mode: collect canonical forms achieving exactly this value.
    collect_target: Option<u64>,
    collected: BTreeSet<Vec<[u32; 3]>>,
}

impl<'a> Solver<'a> {
    /// Would adding `e` violate a constraint? Only copies through `e` and
    /// matchings using `e` can be new, so the incremental check is complete.
    fn can_add(&self, e: [u32; 3]) -> bool {
        if let Some(s) = self.inst.s {
            if mask_matching(&self.edge_masks, s as usize, vertex_mask(e), 0) {
                return false;
            }
        }
        if !self.family.is_empty() {
            let mut with_e = self.edges.clone();
            with_e.push(e);
            let host = Hypergraph3::new(self.inst.n, with_e).expect("triples are valid");
            for f in &self.family {
                if contains_through_edge(f, &host, e).is_some() {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, idx: usize) {
        if self.out_of_budget {
            return;
        }
        self.nodes += 1;
        if let Some(cap) = self.inst.budget {
            if self.nodes > cap {
                self.out_of_budget = true;
                return;
            }
        }
        let count = self.edges.len() as u64;
        if idx == self.triples.len() {
            match self.collect_target {
                None => {
                    if count > self.best {
                        self.best = count;
                        self.best_edges = self.edges.clone();
                    }
                }
                Some(target) => {
                    if count == target {
                        self.collected.insert(canonical_form(
                            &Hypergraph3::new(self.inst.n, self.edges.clone()).expect("valid"),
                        ));
                    }
                }
            }
            return;
        }
        let remaining = (self.triples.len() - idx) as u64;
        let prune = match self.collect_target {
            None => count + remaining <= self.best,
            Some(target) => count + remaining < target,
        };
        if prune {
            return;
        }
        let e = self.triples[idx];
        if self.can_add(e) {
            self.edges.push(e);
            self.edge_masks.push(vertex_mask(e));
            self.dfs(idx + 1);
            self.edges.pop();
            self.edge_masks.pop();
        }
        self.dfs(idx + 1);
    }
}

/// Exact maximum edge count over all hosts on `[0, n)` avoiding every family
/// member as a subhypergraph and, when `s` is given, any matching of size
/// `s + 1`.
///
/// The value is isomorphism-invariant, so any nonempty host can be relabeled
/// to contain `{0,1,2}`; the search forces that triple in and compares with
/// the empty host.
pub fn solve(inst: &SearchInstance) -> Result<SearchResult> {
    validate(inst, MAX_SOLVE_N)?;
    let family: Vec<&Hypergraph3> = inst.family.iter().filter(|f| f.n() <= inst.n).collect();
    let triples = colex_triples(inst.n);
    let mut solver = Solver {
        inst,
        family,
        triples,
        edges: Vec::new(),
        edge_masks: Vec::new(),
        best: 0,
        best_edges: Vec::new(),
        nodes: 0,
        out_of_budget: false,
        collect_target: None,
        collected: BTreeSet::new(),
    };
    if !solver.triples.is_empty() {
        let first = solver.triples[0];
        debug_assert_eq!(first, [0, 1, 2]);
        if solver.can_add(first) {
            solver.edges.push(first);
            solver.edge_masks.push(vertex_mask(first));
            solver.dfs(1);
            solver.edges.pop();
            solver.edge_masks.pop();
        }
    }
    Ok(SearchResult {
        value: solver.best,
        witness: Hypergraph3::new(inst.n, solver.best_edges.clone()).expect("valid"),
        nodes: solver.nodes,
        exact: !solver.out_of_budget,
    })
}

/// All maximum-size avoiders up to isomorphism, as canonical edge lists.
pub fn enumerate_extremal(inst: &SearchInstance) -> Result<Vec<Hypergraph3>> {
    validate(inst, MAX_ENUMERATE_N)?;
    let solved = solve(inst)?;
    if !solved.exact {
        return Err(invalid("cannot enumerate extremal hosts: the value search ran out of budget"));
    }
    if solved.value == 0 {
        return Ok(vec![Hypergraph3::empty(inst.n)]);
    }
    let family: Vec<&Hypergraph3> = inst.family.iter().filter(|f| f.n() <= inst.n).collect();
    let triples = colex_triples(inst.n);
    let mut solver = Solver {
        inst,
        family,
        triples,
        edges: Vec::new(),
        edge_masks: Vec::new(),
        best: solved.value,
        best_edges: Vec::new(),
        nodes: 0,
        out_of_budget: false,
        collect_target: Some(solved.value),
        collected: BTreeSet::new(),
    };
    let first = solver.triples[0];
    if solver.can_add(first) {
        solver.edges.push(first);
        solver.edge_masks.push(vertex_mask(first));
        solver.dfs(1);
    }
    if solver.out_of_budget {
        return Err(invalid("cannot enumerate extremal hosts: ran out of budget"));
    }
    Ok(solver
        .collected
        .iter()
        .map(|edges| Hypergraph3::new(inst.n, edges.clone()).expect("canonical form is valid"))
        .collect())
}

/// Lexicographically least edge list over all vertex relabelings.
pub fn canonical_form(h: &Hypergraph3) -> Vec<[u32; 3]> {
    let n = h.n() as usize;
    let mut perm: Vec<u32> = (0..h.n()).collect();
    let mut best: Option<Vec<[u32; 3]>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<[u32; 3]> = h
            .edges()
            .iter()
            .map(|e| {
                let mut t = [p[e[0] as usize], p[e[1] as usize], p[e[2] as usize]];
                t.sort_unstable();
                t
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    });
    let _ = n;
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
