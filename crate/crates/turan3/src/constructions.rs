//! Deterministic generators for the named graphs and hypergraphs of the
//! catalog, each paired with its closed-form edge count so certificates can
//! compare built against claimed sizes.
//!
//! Vertex layouts are fixed: cover-side parts (`A`, `A1`, `A2`, `U`, `X`)
//! always come first, then the bulk side `B` (with Turán parts assigned
//! round-robin by label).

use std::collections::BTreeMap;

use crate::coloring::{hypergraph_chromatic_number, link_chromatic_profile, q_value, IntOrInf};
use crate::error::{invalid, Result};
use crate::formulas::binom;
use crate::hypergraph::{Graph2, Hypergraph3};

/// A parameterized recipe naming one catalog entry, mostly used by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub name: String,
    pub params: BTreeMap<String, u64>,
}

impl ConstructionSpec {
    /// Builds the named catalog entry. The profile recipe additionally needs
    /// the pattern hypergraph it is derived from.
    pub fn build(&self, pattern: Option<&Hypergraph3>) -> Result<BuiltConstruction> {
        let get = |key: &str| -> Result<u64> {
            self.params
                .get(key)
                .copied()
                .ok_or_else(|| invalid(format!("construction `{}` needs --{key}", self.name)))
        };
        let as_u32 = |v: u64, key: &str| -> Result<u32> {
            u32::try_from(v).map_err(|_| invalid(format!("--{key} too large")))
        };
        let wrap = |h: Hypergraph3, labels: Vec<String>| -> BuiltConstruction {
            BuiltConstruction {
                name: self.name.clone(),
                params: self.params.clone(),
                claimed_edges: h.edge_count() as u64,
                part_labels: labels,
                hypergraph: h,
            }
        };
        match self.name.as_str() {
            "matching" => {
                let s = as_u32(get("s")?, "s")?;
                let h = matching(s + 1);
                let labels = (0..h.n()).map(|v| format!("E{}", v / 3 + 1)).collect();
                Ok(wrap(h, labels))
            }
            "f-star-partition" => {
                let t = as_u32(get("t")?, "t")?;
                let h = f_star_partition(t)?;
                let labels = (0..h.n()).map(|v| if v < t - 1 { "A".into() } else { "K".into() }).collect();
                Ok(wrap(h, labels))
            }
            "f-matching-partition" => {
                let t = as_u32(get("t")?, "t")?;
                let h = f_matching_partition(t)?;
                let labels = (0..h.n()).map(|v| if v < 2 * t - 1 { "A".into() } else { "K".into() }).collect();
                Ok(wrap(h, labels))
            }
            "full-star" => {
                let t = as_u32(get("t")?, "t")?;
                let h = full_star(t)?;
                let labels = (0..h.n()).map(|v| if v == 0 { "C".into() } else { "L".into() }).collect();
                Ok(wrap(h, labels))
            }
            "j-plus" => {
                let t = as_u32(get("t")?, "t")?;
                let h = j_plus(t)?;
                let labels = (0..h.n()).map(|v| if v == 0 { "C".into() } else { "L".into() }).collect();
                Ok(wrap(h, labels))
            }
            "k4-minus" => {
                let h = k4_minus();
                let labels = (0..h.n()).map(|v| if v == 0 { "C".into() } else { "L".into() }).collect();
                Ok(wrap(h, labels))
            }
            "f32" => {
                let h = f_3_2();
                let labels = (0..h.n()).map(|_| "V".into()).collect();
                Ok(wrap(h, labels))
            }
            "h-ns" => h_ns(as_u32(get("n")?, "n")?, as_u32(get("s")?, "s")?),
            "h-b" => h_b(
                as_u32(get("n")?, "n")?,
                as_u32(get("s")?, "s")?,
                as_u32(get("t")?, "t")?,
            ),
            "k4minus-extremal" => {
                k4minus_extremal(as_u32(get("n")?, "n")?, as_u32(get("s")?, "s")?)
            }
            "h-double-turan" => h_double_turan(
                as_u32(get("n")?, "n")?,
                as_u32(get("s")?, "s")?,
                as_u32(get("t")?, "t")?,
            ),
            "h-profile" => {
                let f = pattern.ok_or_else(|| invalid("construction `h-profile` needs a pattern via -F"))?;
                h_profile(
                    f,
                    as_u32(get("i")?, "i")?,
                    as_u32(get("n")?, "n")?,
                    as_u32(get("s")?, "s")?,
                )
            }
            other => Err(invalid(format!(
                "unknown construction `{other}`; known: matching, f-star-partition, \
                 f-matching-partition, full-star, j-plus, k4-minus, f32, h-ns, h-b, \
                 k4minus-extremal, h-double-turan, h-profile"
            ))),
        }
    }
}

/// A constructed hypergraph together with its part labels and the closed-form
/// edge count it claims.
#[derive(Clone, Debug)]
pub struct BuiltConstruction {
    pub name: String,
    pub params: BTreeMap<String, u64>,
    pub hypergraph: Hypergraph3,
    /// Part name per vertex.
    pub part_labels: Vec<String>,
    pub claimed_edges: u64,
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

// ---------------------------------------------------------------------------
// Turán graphs
// ---------------------------------------------------------------------------

/// Complete `t`-partite graph on `[0, n)` with near-equal parts; vertex `v`
/// goes to part `v mod t`.
pub fn turan_graph(n: u32, t: u32) -> Result<Graph2> {
    if t == 0 {
        if n == 0 {
            return Ok(Graph2::empty(0));
        }
        return Err(invalid("Turán graph needs at least one part"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u % t != v % t {
                edges.push([u, v]);
            }
        }
    }
    Ok(Graph2::new(n, edges).expect("Turán edges are valid"))
}

/// Edge count of the Turán graph `T(n, t)`.
pub fn turan_count(n: u64, t: u64) -> Result<u64> {
    if t == 0 {
        if n == 0 {
            return Ok(0);
        }
        return Err(invalid("Turán count needs at least one part"));
    }
    let big = n % t; // parts of size ceil(n/t)
    let small = t - big;
    let ceil = n.div_ceil(t);
    let floor = n / t;
    let squares = big * ceil * ceil + small * floor * floor;
    Ok((n * n - squares) / 2)
}

// ---------------------------------------------------------------------------
// Pattern catalog
// ---------------------------------------------------------------------------

/// The matching of `size` pairwise disjoint triples on `3·size` vertices.
pub fn matching(size: u32) -> Hypergraph3 {
    let edges: Vec<[u32; 3]> = (0..size).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect();
    Hypergraph3::new(3 * size, edges).expect("matching edges are valid")
}

/// The star-partition pattern on `2t − 1` vertices: partition the edges of a
/// `K_t` into `t − 1` stars (star `i` holds the pairs `{i, j}` with `j > i`)
/// and attach a new apex `a_i` to every pair of star `i`.
///
/// Vertices `0..t−1` are the apexes `a_1..a_{t−1}`; vertices `t−1..2t−1` are
/// the clique side `1..t`.
pub fn f_star_partition(t: u32) -> Result<Hypergraph3> {
    if t < 3 {
        return Err(invalid("star-partition pattern needs t >= 3"));
    }
    let side = |k: u32| t - 1 + (k - 1); // clique-side vertex k ∈ [1, t]
    let mut edges = Vec::new();
    for i in 1..t {
        for j in i + 1..=t {
            edges.push([i - 1, side(i), side(j)]);
        }
    }
    Hypergraph3::new(2 * t - 1, edges)
}

/// The matching-partition analogue on `4t − 1` vertices: partition the edges
/// of a `K_{2t}` into `2t − 1` perfect matchings (circle method) and attach
/// one apex per matching.
pub fn f_matching_partition(t: u32) -> Result<Hypergraph3> {
    if t < 2 {
        return Err(invalid("matching-partition pattern needs t >= 2"));
    }
    let rounds = 2 * t - 1;
    let side = |k: u32| rounds + k; // clique-side vertex index k ∈ [0, 2t)
    let mut edges = Vec::new();
    for i in 0..rounds {
        // Round i of the circle method: the fixed vertex pairs with i, the
        // rest pair symmetrically around i.
        edges.push([i, side(i), side(2 * t - 1)]);
        for k in 1..t {
            let u = (i + k) % rounds;
            let v = (i + rounds - k) % rounds;
            edges.push([i, side(u), side(v)]);
        }
    }
    Hypergraph3::new(4 * t - 1, edges)
}

/// The full star `J_t`: a center (vertex 0) with `t` leaves and all
/// `C(t, 2)` triples through the center.
pub fn full_star(t: u32) -> Result<Hypergraph3> {
    if t < 2 {
        return Err(invalid("full star needs t >= 2"));
    }
    let mut edges = Vec::new();
    for i in 1..=t {
        for j in i + 1..=t {
            edges.push([0, i, j]);
        }
    }
    Hypergraph3::new(t + 1, edges)
}

/// The full star plus one triple `{1, 2, 3}` inside the leaf side.
pub fn j_plus(t: u32) -> Result<Hypergraph3> {
    if t < 3 {
        return Err(invalid("augmented full star needs t >= 3"));
    }
    let base = full_star(t)?;
    let mut edges = base.edges().to_vec();
    edges.push([1, 2, 3]);
    Hypergraph3::new(t + 1, edges)
}

/// `K_4^{3−}`: the complete 3-graph on four vertices minus one edge; equal to
/// the full star `J_3`.
pub fn k4_minus() -> Hypergraph3 {
    full_star(3).expect("t = 3 is valid")
}

/// The five-vertex pattern with edges 012, 034, 134, 234: the pair
/// neighborhood of every pair in a host avoiding it is weakly independent.
pub fn f_3_2() -> Hypergraph3 {
    Hypergraph3::new(5, [[0, 1, 2], [0, 3, 4], [1, 3, 4], [2, 3, 4]]).expect("valid")
}

// ---------------------------------------------------------------------------
// Host constructions
// ---------------------------------------------------------------------------

/// All triples with one vertex in the `s`-set `A = [0, s)` and two in the
/// complement `B`. Edge count `s·C(n−s, 2)`.
pub fn h_ns(n: u32, s: u32) -> Result<BuiltConstruction> {
    if n <= s {
        return Err(invalid("cover construction needs n > s"));
    }
    let mut edges = Vec::new();
    for a in 0..s {
        for b1 in s..n {
            for b2 in b1 + 1..n {
                edges.push([a, b1, b2]);
            }
        }
    }
    let claimed = s as u64 * binom((n - s) as u64, 2);
    let labels = (0..n).map(|v| if v < s { "A".into() } else { "B".into() }).collect();
    let built = BuiltConstruction {
        name: "h-ns".into(),
        params: params(&[("n", n as u64), ("s", s as u64)]),
        hypergraph: Hypergraph3::new(n, edges)?,
        part_labels: labels,
        claimed_edges: claimed,
    };
    debug_assert_eq!(built.hypergraph.edge_count() as u64, claimed);
    Ok(built)
}

/// Each vertex of `U = [0, s)` joined to every edge of a Turán graph
/// `T(n−s, t−1)` placed on `B = [s, n)`. Edge count `s·t(n−s, t−1)`.
pub fn h_b(n: u32, s: u32, t: u32) -> Result<BuiltConstruction> {
    if t < 3 || s < t - 1 || n <= s {
        return Err(invalid("layered Turán construction needs n > s >= t-1 >= 2"));
    }
    let parts = t - 1;
    let mut edges = Vec::new();
    for u in 0..s {
        for v in s..n {
            for w in v + 1..n {
                if (v - s) % parts != (w - s) % parts {
                    edges.push([u, v, w]);
                }
            }
        }
    }
    let claimed = s as u64 * turan_count((n - s) as u64, parts as u64)?;
    let labels = (0..n)
        .map(|v| {
            if v < s {
                "U".into()
            } else {
                format!("V{}", (v - s) % parts + 1)
            }
        })
        .collect();
    let built = BuiltConstruction {
        name: "h-b".into(),
        params: params(&[("n", n as u64), ("s", s as u64), ("t", t as u64)]),
        hypergraph: Hypergraph3::new(n, edges)?,
        part_labels: labels,
        claimed_edges: claimed,
    };
    debug_assert_eq!(built.hypergraph.edge_count() as u64, claimed);
    Ok(built)
}

/// The extremal hosts avoiding `K_4^{3−}` with matching number at most
/// `s ∈ {1, 2}`.
///
/// For `s = 2` and odd `n`: a complete 3-partite 3-graph on
/// `({x1, x2}, V1, V2)` with `|V1| = |V2| = (n−3)/2`, plus an apex `z` with
/// the edge `{x1, x2, z}` and the edges `{xi, u, z}` for `u ∈ Vi`; the count
/// is `2⌊(n−2)²/4⌋ + 1`. Otherwise the complete 3-partite 3-graph with parts
/// `s, ⌊(n−s)/2⌋, ⌈(n−s)/2⌉`, with count `s⌊(n−s)²/4⌋`.
pub fn k4minus_extremal(n: u32, s: u32) -> Result<BuiltConstruction> {
    if !(s == 1 || s == 2) || n < 5 {
        return Err(invalid("extremal construction needs s in {1, 2} and n >= 5"));
    }
    let mut edges = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let claimed = if s == 2 && n % 2 == 1 {
        let half = (n - 3) / 2;
        let v1 = (3, 3 + half);
        let v2 = (3 + half, n);
        labels.push("X".into());
        labels.push("X".into());
        labels.push("Z".into());
        labels.extend((v1.0..v1.1).map(|_| "V1".to_string()));
        labels.extend((v2.0..v2.1).map(|_| "V2".to_string()));
        for x in 0..2u32 {
            for u in v1.0..v1.1 {
                for w in v2.0..v2.1 {
                    edges.push([x, u, w]);
                }
            }
        }
        edges.push([0, 1, 2]);
        for u in v1.0..v1.1 {
            edges.push([0, u, 2]);
        }
        for w in v2.0..v2.1 {
            edges.push([1, w, 2]);
        }
        2 * ((n as u64 - 2) * (n as u64 - 2) / 4) + 1
    } else {
        let rest = n - s;
        let v1 = (s, s + rest / 2);
        let v2 = (s + rest / 2, n);
        labels.extend((0..s).map(|_| "A".to_string()));
        labels.extend((v1.0..v1.1).map(|_| "V1".to_string()));
        labels.extend((v2.0..v2.1).map(|_| "V2".to_string()));
        for a in 0..s {
            for u in v1.0..v1.1 {
                for w in v2.0..v2.1 {
                    edges.push([a, u, w]);
                }
            }
        }
        s as u64 * ((n as u64 - s as u64) * (n as u64 - s as u64) / 4)
    };
    let built = BuiltConstruction {
        name: "k4minus-extremal".into(),
        params: params(&[("n", n as u64), ("s", s as u64)]),
        hypergraph: Hypergraph3::new(n, edges)?,
        part_labels: labels,
        claimed_edges: claimed,
    };
    debug_assert_eq!(built.hypergraph.edge_count() as u64, claimed);
    Ok(built)
}

/// Two stacked Turán graphs: `T(s, t−2)` on `A = [0, s)` and `T(n−s, t−1)`
/// on `B = [s, n)`. Type-1 edges join each vertex of `A` to each edge of the
/// `B`-side Turán graph; type-2 edges join each edge of the `A`-side Turán
/// graph to each vertex of `B ∖ V1`, where `V1` is the first part of size
/// `⌊(n−s)/(t−1)⌋`. Every vertex link is `(t−1)`-partite, so the host avoids
/// the full star `J_t`.
pub fn h_double_turan(n: u32, s: u32, t: u32) -> Result<BuiltConstruction> {
    if t < 3 {
        return Err(invalid("double Turán construction needs t >= 3"));
    }
    if s < 1 || n <= s {
        return Err(invalid("double Turán construction needs n > s >= 1"));
    }
    let b_parts = t - 1;
    let a_parts = t - 2;
    let rest = n - s;
    // The first B-part of floor size, under round-robin assignment.
    let floor_part = if rest.is_multiple_of(b_parts) { 0 } else { rest % b_parts };
    let floor_size = rest / b_parts;

    let mut edges = Vec::new();
    for a in 0..s {
        for v in s..n {
            for w in v + 1..n {
                if (v - s) % b_parts != (w - s) % b_parts {
                    edges.push([a, v, w]);
                }
            }
        }
    }
    for a1 in 0..s {
        for a2 in a1 + 1..s {
            if a1 % a_parts != a2 % a_parts {
                for v in s..n {
                    if (v - s) % b_parts != floor_part {
                        edges.push([a1, a2, v]);
                    }
                }
            }
        }
    }
    let claimed = s as u64 * turan_count(rest as u64, b_parts as u64)?
        + (rest as u64 - floor_size as u64) * turan_count(s as u64, a_parts as u64)?;
    let labels = (0..n)
        .map(|v| {
            if v < s {
                "A".into()
            } else {
                format!("V{}", (v - s) % b_parts + 1)
            }
        })
        .collect();
    let built = BuiltConstruction {
        name: "h-double-turan".into(),
        params: params(&[("n", n as u64), ("s", s as u64), ("t", t as u64)]),
        hypergraph: Hypergraph3::new(n, edges)?,
        part_labels: labels,
        claimed_edges: claimed,
    };
    debug_assert_eq!(built.hypergraph.edge_count() as u64, claimed);
    Ok(built)
}

/// The profile-driven host `H_i` for a 2-chromatic pattern `F` with finite
/// `q(F) ≤ s`: parts `A1` (`i−1` vertices), `A2` (`s−i+1`) and `B` (`n−s`);
/// every vertex of `A1` joins every pair of `B`, and every vertex of `A2`
/// joins every edge of `T(n−s, ℓ_i − 1)` placed on `B`, where `ℓ_i` is the
/// `i`-th value of the link-chromatic profile of `F`.
pub fn h_profile(f: &Hypergraph3, i: u32, n: u32, s: u32) -> Result<BuiltConstruction> {
    if hypergraph_chromatic_number(f) != 2 {
        return Err(invalid("profile construction needs a 2-chromatic pattern"));
    }
    let q = match q_value(f) {
        IntOrInf::Finite(q) => q as u32,
        IntOrInf::Infinity => return Err(invalid("profile construction needs finite q")),
    };
    if q > s {
        return Err(invalid(format!("profile construction needs q(F) = {q} <= s = {s}")));
    }
    if i < 1 || i > q {
        return Err(invalid(format!("profile index must satisfy 1 <= i <= q(F) = {q}")));
    }
    if n < s {
        return Err(invalid("profile construction needs n >= s"));
    }
    let profile = link_chromatic_profile(f);
    let ell = profile.values[(i - 1) as usize] as u32;
    if ell < 2 && n > s {
        return Err(invalid("profile value must be at least 2"));
    }
    let a1 = i - 1;
    let rest = n - s;
    let t_parts = ell - 1;

    let mut edges = Vec::new();
    for a in 0..a1 {
        for v in s..n {
            for w in v + 1..n {
                edges.push([a, v, w]);
            }
        }
    }
    for a in a1..s {
        for v in s..n {
            for w in v + 1..n {
                if (v - s) % t_parts != (w - s) % t_parts {
                    edges.push([a, v, w]);
                }
            }
        }
    }
    let claimed = a1 as u64 * binom(rest as u64, 2)
        + (s - a1) as u64 * turan_count(rest as u64, t_parts as u64)?;
    let labels = (0..n)
        .map(|v| {
            if v < a1 {
                "A1".into()
            } else if v < s {
                "A2".into()
            } else {
                "B".into()
            }
        })
        .collect();
    let built = BuiltConstruction {
        name: "h-profile".into(),
        params: params(&[("n", n as u64), ("s", s as u64), ("i", i as u64)]),
        hypergraph: Hypergraph3::new(n, edges)?,
        part_labels: labels,
        claimed_edges: claimed,
    };
    debug_assert_eq!(built.hypergraph.edge_count() as u64, claimed);
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::q_value;
    use crate::containment::contains;

    #[test]
    fn turan_counts() {
        assert_eq!(turan_count(4, 2).unwrap(), 4);
        assert_eq!(turan_count(7, 3).unwrap(), 16);
        assert_eq!(turan_count(10, 1).unwrap(), 0);
        assert_eq!(turan_count(95, 3).unwrap(), 3008);
        assert!(turan_count(5, 0).is_err());
        assert_eq!(turan_count(0, 0).unwrap(), 0);
    }

    #[test]
    fn turan_graph_matches_count() {
        for n in 0..12u32 {
            for t in 1..6u32 {
                let g = turan_graph(n, t).unwrap();
                assert_eq!(g.edge_count() as u64, turan_count(n as u64, t as u64).unwrap());
            }
        }
        // Part sizes differ by at most one.
        let g = turan_graph(7, 3).unwrap();
        let mut sizes = [0usize; 3];
        for v in 0..7u32 {
            sizes[(v % 3) as usize] += 1;
        }
        assert_eq!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap(), 1);
        assert_eq!(g.edge_count(), 16);
    }

    #[test]
    fn matching_pattern() {
        let m1 = matching(1);
        assert_eq!(m1.edge_count(), 1);
        assert_eq!(matching(3).matching_number(), 3);
        assert_eq!(matching(2).shadow().edge_count(), 6);
        assert_eq!(matching(0).n(), 0);
    }

    #[test]
    fn star_partition_pattern_shape() {
        let f3 = f_star_partition(3).unwrap();
        assert_eq!((f3.n(), f3.edge_count()), (5, 3));
        let f4 = f_star_partition(4).unwrap();
        assert_eq!((f4.n(), f4.edge_count()), (7, 6));
        assert_eq!(f_star_partition(5).unwrap().edge_count(), 10);
        assert!(f_star_partition(2).is_err());
    }

    #[test]
    fn star_partition_shadow_restricted_to_clique_side_is_complete() {
        let t = 5u32;
        let f = f_star_partition(t).unwrap();
        let shadow = f.shadow();
        for u in t - 1..2 * t - 1 {
            for v in u + 1..2 * t - 1 {
                assert!(shadow.has_edge(u, v), "pair ({u}, {v}) missing");
            }
        }
    }

    #[test]
    fn matching_partition_pattern() {
        let f = f_matching_partition(2).unwrap();
        assert_eq!((f.n(), f.edge_count()), (7, 6));
        assert_eq!(q_value(&f), IntOrInf::Finite(3));
        // The matchings partition the clique side: its shadow there is K_4.
        let shadow = f.shadow();
        for u in 3..7u32 {
            for v in u + 1..7 {
                assert!(shadow.has_edge(u, v));
            }
        }
        // Each apex's link is a perfect matching on the clique side.
        for apex in 0..3u32 {
            assert_eq!(f.link_graph(apex).unwrap().edge_count(), 2);
        }
    }

    #[test]
    fn full_star_family() {
        assert_eq!(full_star(4).unwrap().edge_count(), 6);
        let j3 = full_star(3).unwrap();
        assert!(contains(&j3, &k4_minus()).is_some());
        for t in 3..=5u32 {
            assert_eq!(j_plus(t).unwrap().edge_count() as u64, binom(t as u64, 2) + 1);
        }
    }

    #[test]
    fn h_ns_shape() {
        let built = h_ns(10, 2).unwrap();
        assert_eq!(built.claimed_edges, 56);
        assert_eq!(built.hypergraph.edge_count(), 56);
        assert_eq!(built.part_labels[0], "A");
        assert_eq!(built.part_labels[9], "B");
        assert!(h_ns(3, 3).is_err());
    }

    #[test]
    fn h_b_shape() {
        let built = h_b(100, 5, 4).unwrap();
        assert_eq!(built.claimed_edges, 15040);
        assert!(built.claimed_edges > 2 * binom(95, 2));
        assert_eq!(2 * binom(95, 2), 8930);
        assert!(h_b(20, 2, 4).is_err());
    }

    #[test]
    fn k4minus_extremal_counts() {
        assert_eq!(k4minus_extremal(7, 2).unwrap().claimed_edges, 13);
        assert_eq!(k4minus_extremal(7, 2).unwrap().hypergraph.edge_count(), 13);
        assert_eq!(k4minus_extremal(8, 2).unwrap().claimed_edges, 18);
        assert_eq!(k4minus_extremal(10, 1).unwrap().claimed_edges, 20);
        assert!(k4minus_extremal(10, 3).is_err());
    }

    #[test]
    fn double_turan_counts_and_freeness() {
        let built = h_double_turan(20, 4, 4).unwrap();
        assert_eq!(built.claimed_edges, 384);
        assert_eq!(built.hypergraph.edge_count(), 384);
        assert!(!built.hypergraph.has_matching_of_size(5));
        assert!(contains(&full_star(4).unwrap(), &built.hypergraph).is_none());
        assert!(h_double_turan(10, 2, 2).is_err());
    }

    #[test]
    fn double_turan_links_are_t_minus_one_partite() {
        use crate::coloring::graph_chromatic_number;
        let built = h_double_turan(14, 3, 4).unwrap();
        for v in 0..14u32 {
            let link = built.hypergraph.link_graph(v).unwrap();
            assert!(graph_chromatic_number(&link) <= 3);
        }
    }

    #[test]
    fn profile_construction_star_partition() {
        let f = f_star_partition(4).unwrap();
        // All profile values are 2, so only type-1 edges appear.
        for i in 1..=3u32 {
            let built = h_profile(&f, i, 20, 3).unwrap();
            assert_eq!(built.claimed_edges, (i as u64 - 1) * binom(17, 2));
            assert_eq!(built.hypergraph.edge_count() as u64, built.claimed_edges);
            assert!(!built.hypergraph.has_matching_of_size(4));
            assert!(contains(&f, &built.hypergraph).is_none());
        }
    }

    #[test]
    fn profile_construction_full_star() {
        let j4 = full_star(4).unwrap();
        let built = h_profile(&j4, 1, 20, 2).unwrap();
        assert_eq!(built.claimed_edges, 2 * turan_count(18, 3).unwrap());
        assert!(contains(&j4, &built.hypergraph).is_none());
        assert!(!built.hypergraph.has_matching_of_size(3));
    }

    #[test]
    fn profile_construction_rejects_bad_inputs() {
        let f = f_star_partition(4).unwrap();
        assert!(h_profile(&f, 1, 20, 2).is_err()); // q = 3 > s = 2
        assert!(h_profile(&f, 4, 20, 3).is_err()); // i > q
        assert!(h_profile(&f_3_2(), 1, 20, 3).is_err()); // q infinite
    }
}
