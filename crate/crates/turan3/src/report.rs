//! Machine-checked claim reports: every certificate recomputes an observed
//! value and compares it against a closed-form or oracle expectation. The
//! suite behind `verify-paper` is organized as ten criterion groups; each
//! group emits certificates whose subjects sort by criterion id.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::{q_value, IntOrInf};
use crate::colored::{
    colored_sum_bound, colored_sum_target, colored_triangle_bound, is_star_colored_free,
    max_colored_sum, ColoredMultigraph,
};
use crate::constructions::{
    f_3_2, f_matching_partition, f_star_partition, full_star, h_b, h_double_turan, h_ns,
    h_profile, k4_minus, k4minus_extremal, turan_count, BuiltConstruction,
};
use crate::containment::contains;
use crate::error::{Error, Result};
use crate::formulas::{binom, h_profile_bound, matching_bound_formula};
use crate::hypergraph::Hypergraph3;
use crate::oracle;
use crate::sample;
use crate::search::{solve, SearchInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Tiny,
    Small,
    Medium,
}

impl Scale {
    pub fn parse(text: &str) -> Result<Scale> {
        match text {
            "tiny" => Ok(Scale::Tiny),
            "small" => Ok(Scale::Small),
            "medium" => Ok(Scale::Medium),
            other => Err(Error::InvalidInput(format!(
                "unknown scale `{other}` (expected tiny, small or medium)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scale::Tiny => "tiny",
            Scale::Small => "small",
            Scale::Medium => "medium",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub provenance: String,
    pub observed: Value,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub subject: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub scale: String,
    pub certificates: Vec<Certificate>,
    pub summary: Summary,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.inconclusive > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check_eq_u64(name: &str, provenance: &str, expected: u64, observed: u64) -> Check {
    Check {
        name: name.into(),
        expected: json!(expected),
        provenance: provenance.into(),
        observed: json!(observed),
        verdict: if expected == observed { Verdict::Pass } else { Verdict::Fail },
    }
}

fn check_bool(name: &str, provenance: &str, expected: bool, observed: bool) -> Check {
    Check {
        name: name.into(),
        expected: json!(expected),
        provenance: provenance.into(),
        observed: json!(observed),
        verdict: if expected == observed { Verdict::Pass } else { Verdict::Fail },
    }
}

fn check_q(name: &str, provenance: &str, expected: IntOrInf, observed: IntOrInf) -> Check {
    let render = |v: IntOrInf| match v {
        IntOrInf::Finite(x) => json!(x),
        IntOrInf::Infinity => json!("inf"),
    };
    Check {
        name: name.into(),
        expected: render(expected),
        provenance: provenance.into(),
        observed: render(observed),
        verdict: if expected == observed { Verdict::Pass } else { Verdict::Fail },
    }
}

/// Informational entry: the observed value is recorded as data and cannot
/// fail by itself.
fn record(name: &str, provenance: &str, observed: Value) -> Check {
    Check {
        name: name.into(),
        expected: json!("recorded"),
        provenance: provenance.into(),
        observed,
        verdict: Verdict::Pass,
    }
}

fn certificate(subject: String, started: Instant, checks: Vec<Check>) -> Certificate {
    Certificate { subject, checks, elapsed_ms: started.elapsed().as_millis() as u64 }
}

// ---------------------------------------------------------------------------
// Suite configuration
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub grid_n: Vec<u32>,
    pub grid_s: Vec<u32>,
    pub grid_t: Vec<u32>,
    /// Present at small/medium scale: the large freeness certificate size.
    pub large_k4minus_n: Option<u32>,
    /// Triangle-case equality instances `(n, s)`.
    pub triangle_equality: Vec<(u32, usize)>,
    /// Run the exhaustive probe at `(n, s, r) = (4, 3, 4)`.
    pub colored_probe: bool,
    pub colored_budget: Option<u64>,
    pub search_budget: Option<u64>,
    pub oracle_families: usize,
    pub lemma_samples: usize,
    pub battery_contains: usize,
    pub battery_matching: usize,
    pub battery_star: usize,
}

impl SuiteConfig {
    pub fn for_scale(scale: Scale) -> SuiteConfig {
        match scale {
            Scale::Tiny => SuiteConfig {
                grid_n: vec![10, 20],
                grid_s: vec![1, 2, 3],
                grid_t: vec![3, 4],
                large_k4minus_n: None,
                triangle_equality: vec![(4, 2)],
                colored_probe: false,
                colored_budget: Some(100_000_000),
                search_budget: Some(50_000_000),
                oracle_families: 5,
                lemma_samples: 30,
                battery_contains: 50,
                battery_matching: 50,
                battery_star: 25,
            },
            Scale::Small => SuiteConfig {
                grid_n: vec![10, 20, 50],
                grid_s: vec![1, 2, 3],
                grid_t: vec![3, 4, 5],
                large_k4minus_n: Some(151),
                triangle_equality: vec![(4, 2), (5, 2), (4, 3)],
                colored_probe: false,
                colored_budget: Some(100_000_000),
                search_budget: Some(50_000_000),
                oracle_families: 20,
                lemma_samples: 100,
                battery_contains: 200,
                battery_matching: 200,
                battery_star: 100,
            },
            Scale::Medium => SuiteConfig {
                colored_probe: true,
                ..SuiteConfig::for_scale(Scale::Small)
            },
        }
    }
}

/// Every builder instance on the configured grid, with the pattern it must
/// avoid and the claimed-size provenance string.
struct GridInstance {
    built: BuiltConstruction,
    avoided: Hypergraph3,
    pattern_name: &'static str,
    nu_cap: u32,
    provenance: String,
}

fn grid_instances(cfg: &SuiteConfig) -> Vec<GridInstance> {
    let mut out = Vec::new();
    for &n in &cfg.grid_n {
        for &s in &cfg.grid_s {
            if n > s {
                out.push(GridInstance {
                    built: h_ns(n, s).expect("grid instance is legal"),
                    avoided: f_3_2(),
                    pattern_name: "f32",
                    nu_cap: s,
                    provenance: "s*C(n-s,2)".into(),
                });
            }
            for &t in &cfg.grid_t {
                if t >= 3 && s >= t - 1 && n > s {
                    out.push(GridInstance {
                        built: h_b(n, s, t).expect("grid instance is legal"),
                        avoided: f_star_partition(t).expect("t >= 3"),
                        pattern_name: "f-star-partition",
                        nu_cap: s,
                        provenance: "s*t(n-s,t-1)".into(),
                    });
                }
                if t >= 3 && s >= 1 && n > s {
                    out.push(GridInstance {
                        built: h_double_turan(n, s, t).expect("grid instance is legal"),
                        avoided: full_star(t).expect("t >= 2"),
                        pattern_name: "full-star",
                        nu_cap: s,
                        provenance: "s*t(n-s,t-1) + (n-s-floor((n-s)/(t-1)))*t(s,t-2)".into(),
                    });
                }
            }
            if (s == 1 || s == 2) && n >= 5 {
                out.push(GridInstance {
                    built: k4minus_extremal(n, s).expect("grid instance is legal"),
                    avoided: k4_minus(),
                    pattern_name: "k4-minus",
                    nu_cap: s,
                    provenance: if s == 2 && n % 2 == 1 {
                        "2*floor((n-2)^2/4) + 1".into()
                    } else {
                        "s*floor((n-s)^2/4)".into()
                    },
                });
            }
        }
        // Profile-driven hosts: the star-partition pattern needs s >= q = 3;
        // the full star has q = 1 and works for every s.
        let fp4 = f_star_partition(4).expect("t = 4");
        if cfg.grid_s.contains(&3) {
            for i in 1..=3u32 {
                out.push(GridInstance {
                    built: h_profile(&fp4, i, n, 3).expect("grid instance is legal"),
                    avoided: fp4.clone(),
                    pattern_name: "f-star-partition",
                    nu_cap: 3,
                    provenance: "(i-1)*C(n-s,2) + (s-i+1)*t(n-s,l_i-1)".into(),
                });
            }
        }
        let j4 = full_star(4).expect("t = 4");
        for &s in &cfg.grid_s {
            if n > s {
                out.push(GridInstance {
                    built: h_profile(&j4, 1, n, s).expect("grid instance is legal"),
                    avoided: j4.clone(),
                    pattern_name: "full-star",
                    nu_cap: s,
                    provenance: "(i-1)*C(n-s,2) + (s-i+1)*t(n-s,l_i-1)".into(),
                });
            }
        }
    }
    out
}

fn subject_for(built: &BuiltConstruction, prefix: &str) -> String {
    let params: Vec<String> = built.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{prefix} {}({})", built.name, params.join(","))
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

/// Criterion 1: every builder's edge count equals its closed form exactly.
pub fn criterion_sizes(cfg: &SuiteConfig) -> Vec<Certificate> {
    grid_instances(cfg)
        .into_iter()
        .map(|inst| {
            let started = Instant::now();
            let checks = vec![check_eq_u64(
                "built edge count equals closed form",
                &inst.provenance,
                inst.built.claimed_edges,
                inst.built.hypergraph.edge_count() as u64,
            )];
            certificate(subject_for(&inst.built, "c01"), started, checks)
        })
        .collect()
}

/// Criterion 2: freeness and matching certificates on the grid plus the
/// large scanned instance.
pub fn criterion_freeness(cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs: Vec<Certificate> = grid_instances(cfg)
        .into_iter()
        .map(|inst| {
            let started = Instant::now();
            let h = &inst.built.hypergraph;
            let embeds = contains(&inst.avoided, h).is_some();
            let has_bigger_matching = h.has_matching_of_size(inst.nu_cap as usize + 1);
            let checks = vec![
                check_bool(
                    &format!("avoids {}", inst.pattern_name),
                    "subhypergraph search",
                    false,
                    embeds,
                ),
                check_bool(
                    &format!("no matching of size {}", inst.nu_cap + 1),
                    "exact matching decision",
                    false,
                    has_bigger_matching,
                ),
            ];
            certificate(subject_for(&inst.built, "c02"), started, checks)
        })
        .collect();

    if let Some(n) = cfg.large_k4minus_n {
        let started = Instant::now();
        let built = k4minus_extremal(n, 2).expect("large instance is legal");
        let h = &built.hypergraph;
        let expected_edges = 2 * ((n as u64 - 2) * (n as u64 - 2) / 4) + 1;
        let checks = vec![
            check_eq_u64(
                "edge count",
                "2*floor((n-2)^2/4) + 1",
                expected_edges,
                h.edge_count() as u64,
            ),
            check_bool(
                "avoids k4-minus",
                "exhaustive 4-subset scan",
                false,
                contains(&k4_minus(), h).is_some(),
            ),
            check_bool(
                "no matching of size 3",
                "exact matching decision",
                false,
                h.has_matching_of_size(3),
            ),
        ];
        certs.push(certificate(format!("c02 k4minus-extremal(n={n},s=2) large"), started, checks));
    }
    certs
}

/// Criterion 3: exact `q` values of the pattern catalog.
pub fn criterion_q_values(_cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs = Vec::new();
    for t in 3..=6u32 {
        let started = Instant::now();
        let f = f_star_partition(t).expect("t >= 3");
        let checks = vec![check_q(
            "q of the star-partition pattern",
            "q = t - 1",
            IntOrInf::Finite(t as usize - 1),
            q_value(&f),
        )];
        certs.push(certificate(format!("c03 q(f-star-partition(t={t}))"), started, checks));
    }
    {
        let started = Instant::now();
        let checks = vec![check_q(
            "q of f32",
            "no strong red-blue coloring exists",
            IntOrInf::Infinity,
            q_value(&f_3_2()),
        )];
        certs.push(certificate("c03 q(f32)".into(), started, checks));
    }
    for t in 3..=5u32 {
        let started = Instant::now();
        let checks = vec![check_q(
            "q of the full star",
            "red center hits every edge once",
            IntOrInf::Finite(1),
            q_value(&full_star(t).expect("t >= 2")),
        )];
        certs.push(certificate(format!("c03 q(full-star(t={t}))"), started, checks));
    }
    {
        let started = Instant::now();
        let checks = vec![check_q(
            "q of the matching-partition pattern",
            "q = 2t - 1",
            IntOrInf::Finite(3),
            q_value(&f_matching_partition(2).expect("t = 2")),
        )];
        certs.push(certificate("c03 q(f-matching-partition(t=2))".into(), started, checks));
    }
    certs
}

/// Criterion 4: in the `s ≥ t−1` regime the layered Turán host strictly
/// beats the best profile-driven host.
pub fn criterion_counterexample_inequality(_cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs = Vec::new();
    for (t, s) in [(4u32, 5u32), (5, 7)] {
        for n in [60u32, 100] {
            let started = Instant::now();
            let lhs = s as u64 * turan_count((n - s) as u64, (t - 1) as u64).expect("t >= 3");
            let rhs = (t as u64 - 2) * binom((n - s) as u64, 2);
            let profile_bound = h_profile_bound(&f_star_partition(t).expect("t >= 3"), n, s)
                .expect("q <= s holds");
            let checks = vec![
                check_bool(
                    "layered host exceeds the profile bound",
                    "s*t(n-s,t-1) > (t-2)*C(n-s,2)",
                    true,
                    lhs > rhs,
                ),
                check_eq_u64(
                    "profile bound closed form",
                    "max over i of (i-1)*C(n-s,2)",
                    rhs,
                    profile_bound,
                ),
                record("layered host size", "s*t(n-s,t-1)", json!(lhs)),
                record("profile bound", "(t-2)*C(n-s,2)", json!(rhs)),
            ];
            certs.push(certificate(format!("c04 inequality(t={t},s={s},n={n})"), started, checks));
        }
    }
    certs
}

/// Criterion 5: the triangle-case colored sum is exactly `s*floor(n^2/4)`
/// at the configured small instances.
pub fn criterion_triangle_equality(cfg: &SuiteConfig) -> Vec<Certificate> {
    cfg.triangle_equality
        .iter()
        .map(|&(n, s)| {
            let started = Instant::now();
            let expected = colored_triangle_bound(n as u64, s as u64);
            let checks = match max_colored_sum(n, s, 3, false, cfg.colored_budget) {
                Ok(result) => vec![
                    check_eq_u64(
                        "exhaustive maximum",
                        "s*floor(n^2/4)",
                        expected,
                        result.value,
                    ),
                    check_bool(
                        "optimal witness is star-colored-triangle-free",
                        "freeness re-check of the returned layers",
                        true,
                        is_star_colored_free(&result.layers, 3).expect("r = 3"),
                    ),
                    check_bool(
                        "Turán layers reach the maximum",
                        "s copies of T(n,2) are free",
                        true,
                        result.value >= s as u64 * turan_count(n as u64, 2).expect("t >= 1"),
                    ),
                    record("nodes explored", "search statistics", json!(result.nodes)),
                ],
                Err(Error::BudgetExhausted { nodes, best }) => vec![Check {
                    name: "exhaustive maximum".into(),
                    expected: json!(expected),
                    provenance: "s*floor(n^2/4)".into(),
                    observed: json!({ "budget_exhausted_after": nodes, "best_lower_bound": best }),
                    verdict: Verdict::Inconclusive,
                }],
                Err(e) => panic!("unexpected error in colored search: {e}"),
            };
            certificate(format!("c05 colored-max(n={n},s={s},r=3)"), started, checks)
        })
        .collect()
}

/// Criterion 6: the `(4, 3, 4)` probe lies in the proven bracket; whether it
/// matches the conjectured tight value is recorded as data.
pub fn criterion_colored_probe(cfg: &SuiteConfig) -> Vec<Certificate> {
    let started = Instant::now();
    let (n, s, r) = (4u32, 3usize, 4usize);
    let lower = colored_sum_target(n as u64, s as u64, r as u64);
    let upper = colored_sum_bound(n as u64, s as u64, r as u64);
    let checks = match max_colored_sum(n, s, r, false, cfg.colored_budget) {
        Ok(result) => vec![
            Check {
                name: "value lies in the proven bracket".into(),
                expected: json!([lower, upper]),
                provenance: "lower s*t(n,r-1) from Turán layers; upper s*t(n,r-1)+sn without the large-n guarantee".into(),
                observed: json!(result.value),
                verdict: if lower <= result.value && result.value <= upper {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
            },
            check_bool(
                "optimal witness is star-colored-clique-free",
                "freeness re-check of the returned layers",
                true,
                is_star_colored_free(&result.layers, r).expect("r >= 3"),
            ),
            record(
                "matches the conjectured tight value",
                "comparison against s*t(n,r-1)",
                json!(result.value == lower),
            ),
            record("exact value", "exhaustive search", json!(result.value)),
            record("nodes explored", "search statistics", json!(result.nodes)),
        ],
        Err(Error::BudgetExhausted { nodes, best }) => vec![Check {
            name: "value lies in the proven bracket".into(),
            expected: json!([lower, upper]),
            provenance: "exhaustive search".into(),
            observed: json!({ "budget_exhausted_after": nodes, "best_lower_bound": best }),
            verdict: Verdict::Inconclusive,
        }],
        Err(e) => panic!("unexpected error in colored search: {e}"),
    };
    vec![certificate(format!("c06 colored-probe(n={n},s={s},r={r})"), started, checks)]
}

/// Criterion 7: tiny exact extremal values and agreement with the direct
/// enumeration oracle on random families.
pub fn criterion_tiny_extremal(cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs = Vec::new();
    {
        let started = Instant::now();
        let res5 = solve(&SearchInstance { n: 5, s: Some(1), family: vec![], budget: cfg.search_budget })
            .expect("instance is legal");
        let res6 = solve(&SearchInstance { n: 6, s: Some(1), family: vec![], budget: cfg.search_budget })
            .expect("instance is legal");
        let checks = vec![
            check_eq_u64("all triples on five vertices pairwise meet", "C(5,3)", 10, res5.value),
            check_eq_u64("intersecting maximum at n = 6", "full star: C(5,2)", 10, res6.value),
            check_eq_u64(
                "matches the two-family bound formula",
                "max{C(r(s+1)-1,r), C(n,r)-C(n-s,r)}",
                matching_bound_formula(6, 1, 3),
                res6.value,
            ),
            check_bool("both searches exact", "node budget not hit", true, res5.exact && res6.exact),
        ];
        certs.push(certificate("c07 solve-known-values".into(), started, checks));
    }
    {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x7E57_0007);
        let mut disagreements = 0usize;
        for _ in 0..cfg.oracle_families {
            let n = rng.gen_range(4..=5u32);
            let mut family = Vec::new();
            for _ in 0..rng.gen_range(1..=2u32) {
                let fn_count = rng.gen_range(3..=5u32);
                let max_edges = binom(fn_count as u64, 3).max(1) as u32;
                let f_edges = rng.gen_range(1..=max_edges) as usize;
                let f = sample::random_hypergraph(&mut rng, fn_count, f_edges);
                if f.edge_count() > 0 {
                    family.push(f);
                }
            }
            let s = match rng.gen_range(0..3u32) {
                0 => None,
                1 => Some(1),
                _ => Some(2),
            };
            let inst = SearchInstance { n, s, family: family.clone(), budget: cfg.search_budget };
            let solved = solve(&inst).expect("instance is legal");
            let brute = oracle::brute_max_family_free(n, &family, s);
            if !solved.exact || solved.value != brute {
                disagreements += 1;
            }
        }
        let checks = vec![check_eq_u64(
            &format!("solver vs direct enumeration over {} random families", cfg.oracle_families),
            "2^C(n,3) subset oracle",
            0,
            disagreements as u64,
        )];
        certs.push(certificate("c07 solve-oracle-battery".into(), started, checks));
    }
    certs
}

/// Criterion 8: sub-threshold data for the f32 pattern: the cover host is a
/// lower bound; exact values are recorded, not asserted.
pub fn criterion_subthreshold(cfg: &SuiteConfig) -> Vec<Certificate> {
    [5u32, 6]
        .into_iter()
        .map(|n| {
            let started = Instant::now();
            let inst = SearchInstance {
                n,
                s: Some(1),
                family: vec![f_3_2()],
                budget: cfg.search_budget,
            };
            let solved = solve(&inst).expect("instance is legal");
            let lower = binom(n as u64 - 1, 2);
            let checks = vec![
                check_bool(
                    "at least the cover construction",
                    "C(n-1,2) edges from the one-vertex cover",
                    true,
                    solved.exact && solved.value >= lower,
                ),
                record("exact value", "exhaustive search below the proven range", json!(solved.value)),
                record("cover lower bound", "C(n-1,2)", json!(lower)),
            ];
            certificate(format!("c08 subthreshold-f32(n={n},s=1)"), started, checks)
        })
        .collect()
}

/// Criterion 9: the degree-partition conclusions on random hosts that have
/// been filtered to the matching bound.
pub fn criterion_degree_partition(cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs = Vec::new();
    for s in [1u32, 2] {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x001E_2100 + s as u64);
        let mut accepted = 0usize;
        let mut violations = 0usize;
        let mut attempts = 0usize;
        while accepted < cfg.lemma_samples && attempts < cfg.lemma_samples * 400 {
            attempts += 1;
            let n = rng.gen_range(3..=8u32);
            let cap = binom(n as u64, 3) as usize;
            let h = sample::random_hypergraph_sized(&mut rng, n, cap.min(4 * n as usize));
            if h.matching_number() > s as usize {
                continue;
            }
            accepted += 1;
            let part = h.degree_partition(s as u64);
            let inside_b = h.induced(&part.b).edge_count() as u64;
            let bound = 9 * (s as u64) * (s as u64) * n as u64;
            let a_small = part.a.len() <= s as usize;
            let b_sparse = inside_b <= bound;
            let b_weak = part.a.len() != s as usize || h.is_weakly_independent(&part.b);
            if !(a_small && b_sparse && b_weak) {
                violations += 1;
            }
        }
        let checks = vec![
            check_eq_u64(
                &format!("violations over {accepted} hosts with matching number <= {s}"),
                "|A| <= s, e(H[B]) <= 9s^2n, and |A| = s forces B weakly independent",
                0,
                violations as u64,
            ),
            check_bool("sample quota reached", "rejection sampling", true, accepted == cfg.lemma_samples),
        ];
        certs.push(certificate(format!("c09 degree-partition(s={s})"), started, checks));
    }
    certs
}

/// Criterion 10: oracle-equivalence batteries with zero tolerated
/// disagreements.
pub fn criterion_oracle_batteries(cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut certs = Vec::new();
    {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x00C0_47A1);
        let mut disagreements = 0usize;
        for _ in 0..cfg.battery_contains {
            let nf = rng.gen_range(2..=5u32);
            let nh = rng.gen_range(nf..=7u32);
            let f_edges = rng.gen_range(0..=binom(nf as u64, 3).min(4) as u32) as usize;
            let h_edges = rng.gen_range(0..=binom(nh as u64, 3) as u32) as usize;
            let f = sample::random_hypergraph(&mut rng, nf, f_edges);
            let h = sample::random_hypergraph(&mut rng, nh, h_edges);
            let fast = contains(&f, &h);
            if fast.is_some() != oracle::brute_contains(&f, &h) {
                disagreements += 1;
            }
            if let Some(embedding) = fast {
                if !embedding.verify(&f, &h) {
                    disagreements += 1;
                }
            }
        }
        let checks = vec![check_eq_u64(
            &format!("containment vs all injective maps over {} cases", cfg.battery_contains),
            "brute-force injection oracle",
            0,
            disagreements as u64,
        )];
        certs.push(certificate("c10 battery-contains".into(), started, checks));
    }
    {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x003A_7C41);
        let mut disagreements = 0usize;
        for _ in 0..cfg.battery_matching {
            let n = rng.gen_range(2..=8u32);
            let cap = binom(n as u64, 3) as usize;
            let h = sample::random_hypergraph_sized(&mut rng, n, cap);
            if h.matching_number() != oracle::brute_matching_number(&h) {
                disagreements += 1;
            }
        }
        let checks = vec![check_eq_u64(
            &format!("matching number vs subset oracle over {} cases", cfg.battery_matching),
            "all edge subsets of size k",
            0,
            disagreements as u64,
        )];
        certs.push(certificate("c10 battery-matching".into(), started, checks));
    }
    {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x057A_2C11);
        let mut disagreements = 0usize;
        for _ in 0..cfg.battery_star {
            let n = rng.gen_range(3..=6u32);
            let s = rng.gen_range(1..=3usize);
            let t = rng.gen_range(3..=4u32.min(n)) as usize;
            let layers: Vec<_> = (0..s)
                .map(|_| {
                    let density = rng.gen_range(30..90);
                    sample::random_graph(&mut rng, n, density)
                })
                .collect();
            let m = ColoredMultigraph::new(n, layers).unwrap();
            for k in 1..=s.min(t * (t - 1) / 2) {
                for exact in [false, true] {
                    let fast = crate::colored::find_star_colored_clique(&m, k, t, exact).unwrap();
                    if fast.is_some() != oracle::brute_star_colored_clique(&m, k, t, exact) {
                        disagreements += 1;
                    }
                    if let Some(witness) = fast {
                        if !witness.verify(&m, k, exact) {
                            disagreements += 1;
                        }
                    }
                }
            }
            // Exact-k and at-most-k agree at k = t - 1 when enough colors exist.
            if s >= t - 1 {
                let a = crate::colored::find_star_colored_clique(&m, t - 1, t, true).unwrap().is_some();
                let b = crate::colored::find_star_colored_clique(&m, t - 1, t, false).unwrap().is_some();
                if a != b {
                    disagreements += 1;
                }
            }
        }
        let checks = vec![check_eq_u64(
            &format!("star-colored clique search vs assignment oracle over {} multigraphs", cfg.battery_star),
            "brute-force color assignments",
            0,
            disagreements as u64,
        )];
        certs.push(certificate("c10 battery-star-colored".into(), started, checks));
    }
    certs
}

// ---------------------------------------------------------------------------
// Suite assembly
// ---------------------------------------------------------------------------

/// Runs the full criterion suite at the given scale. Deterministic given the
/// scale: every random battery draws from a fixed seed.
pub fn run_verification_suite(scale: Scale) -> Report {
    let cfg = SuiteConfig::for_scale(scale);
    let mut certificates = Vec::new();
    certificates.extend(criterion_sizes(&cfg));
    certificates.extend(criterion_freeness(&cfg));
    certificates.extend(criterion_q_values(&cfg));
    certificates.extend(criterion_counterexample_inequality(&cfg));
    certificates.extend(criterion_triangle_equality(&cfg));
    if cfg.colored_probe {
        certificates.extend(criterion_colored_probe(&cfg));
    }
    certificates.extend(criterion_tiny_extremal(&cfg));
    certificates.extend(criterion_subthreshold(&cfg));
    certificates.extend(criterion_degree_partition(&cfg));
    certificates.extend(criterion_oracle_batteries(&cfg));
    certificates.sort_by(|a, b| a.subject.cmp(&b.subject));

    let mut summary = Summary { pass: 0, fail: 0, inconclusive: 0, total: certificates.len() };
    for c in &certificates {
        match c.verdict() {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Inconclusive => summary.inconclusive += 1,
        }
    }
    Report {
        suite: "turan3-claims".into(),
        scale: scale.name().into(),
        certificates,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_parsing() {
        assert_eq!(Scale::parse("tiny").unwrap(), Scale::Tiny);
        assert_eq!(Scale::parse("medium").unwrap(), Scale::Medium);
        assert!(Scale::parse("huge").is_err());
    }

    #[test]
    fn tiny_suite_passes() {
        let report = run_verification_suite(Scale::Tiny);
        assert_eq!(report.summary.fail, 0, "failing certificates: {:?}", failing(&report));
        assert_eq!(report.summary.inconclusive, 0);
        assert_eq!(report.summary.pass, report.summary.total);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn report_schema_is_stable() {
        let report = run_verification_suite(Scale::Tiny);
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let obj = value.as_object().unwrap();
        let mut keys: Vec<&String> = obj.keys().collect();
        keys.sort();
        assert_eq!(keys, ["certificates", "scale", "suite", "summary"]);
        let summary = obj["summary"].as_object().unwrap();
        assert_eq!(summary["total"], json!(report.certificates.len()));
        let first = &obj["certificates"][0];
        assert!(first.get("subject").is_some());
        assert!(first.get("checks").is_some());
        assert!(first.get("elapsed_ms").is_some());
    }

    fn failing(report: &Report) -> Vec<String> {
        report
            .certificates
            .iter()
            .filter(|c| c.verdict() != Verdict::Pass)
            .map(|c| c.subject.clone())
            .collect()
    }
}
