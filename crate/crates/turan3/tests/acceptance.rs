//! Acceptance suite: each test replays one criterion group of the
//! verification suite at full scale and prints a single pass/fail line.
//! Run with `cargo test -p turan3 --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use turan3::report::{
    criterion_colored_probe, criterion_counterexample_inequality, criterion_degree_partition,
    criterion_freeness, criterion_oracle_batteries, criterion_q_values, criterion_sizes,
    criterion_subthreshold, criterion_tiny_extremal, criterion_triangle_equality, Certificate,
    Scale, SuiteConfig, Verdict,
};

fn full_config() -> SuiteConfig {
    SuiteConfig::for_scale(Scale::Medium)
}

fn finish(name: &str, certs: &[Certificate], started: Instant, limit: Duration, allow_inconclusive: bool) {
    let elapsed = started.elapsed();
    let failing: Vec<&str> = certs
        .iter()
        .filter(|c| match c.verdict() {
            Verdict::Pass => false,
            Verdict::Inconclusive => !allow_inconclusive,
            Verdict::Fail => true,
        })
        .map(|c| c.subject.as_str())
        .collect();
    let verdict = if failing.is_empty() { "pass" } else { "FAIL" };
    println!(
        "criterion {name}: {verdict} ({} certificates, {} ms)",
        certs.len(),
        elapsed.as_millis()
    );
    assert!(failing.is_empty(), "criterion {name} failed: {failing:?}");
    assert!(
        elapsed <= limit,
        "criterion {name} exceeded its time envelope: {elapsed:?} > {limit:?}"
    );
}

#[test]
fn criterion_01_construction_sizes_exact() {
    let started = Instant::now();
    let certs = criterion_sizes(&full_config());
    assert!(certs.len() >= 40, "the grid should produce many instances");
    finish("01 construction sizes", &certs, started, Duration::from_secs(5), false);
}

#[test]
fn criterion_02_freeness_and_matching_certificates() {
    let started = Instant::now();
    let certs = criterion_freeness(&full_config());
    assert!(
        certs.iter().any(|c| c.subject.contains("n=151")),
        "the large scanned certificate must be present"
    );
    finish("02 freeness + matching", &certs, started, Duration::from_secs(60), false);
}

#[test]
fn criterion_03_q_values() {
    let started = Instant::now();
    let certs = criterion_q_values(&full_config());
    finish("03 q values", &certs, started, Duration::from_secs(1), false);
}

#[test]
fn criterion_04_counterexample_inequality() {
    let started = Instant::now();
    let certs = criterion_counterexample_inequality(&full_config());
    finish("04 counterexample inequality", &certs, started, Duration::from_secs(1), false);
}

#[test]
fn criterion_05_triangle_equality_small_n() {
    let started = Instant::now();
    let cfg = full_config();
    assert_eq!(cfg.triangle_equality, vec![(4, 2), (5, 2), (4, 3)]);
    let certs = criterion_triangle_equality(&cfg);
    finish("05 colored triangle equality", &certs, started, Duration::from_secs(3 * 600), false);
}

#[test]
fn criterion_06_colored_probe_bracket() {
    let started = Instant::now();
    let certs = criterion_colored_probe(&full_config());
    // Inconclusive-on-budget is a legal distinct outcome here.
    finish("06 colored probe", &certs, started, Duration::from_secs(1800), true);
}

#[test]
fn criterion_07_tiny_extremal_values_and_oracle() {
    let started = Instant::now();
    let cfg = full_config();
    assert_eq!(cfg.oracle_families, 20);
    let certs = criterion_tiny_extremal(&cfg);
    finish("07 tiny extremal oracle", &certs, started, Duration::from_secs(600), false);
}

#[test]
fn criterion_08_subthreshold_lower_bounds() {
    let started = Instant::now();
    let certs = criterion_subthreshold(&full_config());
    finish("08 sub-threshold data", &certs, started, Duration::from_secs(600), false);
}

#[test]
fn criterion_09_degree_partition_suite() {
    let started = Instant::now();
    let cfg = full_config();
    assert_eq!(cfg.lemma_samples, 100);
    let certs = criterion_degree_partition(&cfg);
    finish("09 degree partition", &certs, started, Duration::from_secs(60), false);
}

#[test]
fn criterion_10_oracle_batteries() {
    let started = Instant::now();
    let cfg = full_config();
    assert_eq!((cfg.battery_contains, cfg.battery_matching, cfg.battery_star), (200, 200, 100));
    let certs = criterion_oracle_batteries(&cfg);
    finish("10 oracle batteries", &certs, started, Duration::from_secs(600), false);
}
