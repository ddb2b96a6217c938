//! Closed-form evaluators for the bound formulas the certificates compare
//! against. All of them compute for any parameters; range flags (such as
//! "only proven for large n") belong to the reports, not to input validation.

use crate::coloring::{q_value, IntOrInf};
use crate::constructions::h_profile;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph3;

/// Binomial coefficient with overflow-safe multiply-then-divide steps.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// `max{ C(r(s+1)−1, r), C(n, r) − C(n−s, r) }`: the larger of the two
/// natural families with matching number at most `s`.
pub fn matching_bound_formula(n: u64, s: u64, r: u64) -> u64 {
    let clique = binom(r * (s + 1) - 1, r);
    let cover = binom(n, r) - binom(n.saturating_sub(s), r);
    clique.max(cover)
}

/// `Σ_{i=1..s} C(s, i)·C(n−s, r−i)`: the number of `r`-sets meeting a fixed
/// `s`-set, split by intersection size.
pub fn cover_count_formula(n: u64, s: u64, r: u64) -> u64 {
    (1..=s.min(r)).map(|i| binom(s, i) * binom(n.saturating_sub(s), r - i)).sum()
}

/// `s·C(n−s, r−1)`: the leading term of the cover count (each edge uses one
/// cover vertex).
pub fn cover_leading_term(n: u64, s: u64, r: u64) -> u64 {
    if r == 0 {
        return 0;
    }
    s * binom(n.saturating_sub(s), r - 1)
}

/// `max{ |E(H_i)| : i ∈ [q(F)] }` over the profile-driven hosts for `F`.
pub fn h_profile_bound(f: &Hypergraph3, n: u32, s: u32) -> Result<u64> {
    let q = match q_value(f) {
        IntOrInf::Finite(q) => q as u32,
        IntOrInf::Infinity => return Err(invalid("profile bound needs finite q")),
    };
    if q == 0 {
        return Err(invalid("profile bound needs at least one edge in the pattern"));
    }
    let mut best = 0;
    for i in 1..=q {
        best = best.max(h_profile(f, i, n, s)?.claimed_edges);
    }
    Ok(best)
}
