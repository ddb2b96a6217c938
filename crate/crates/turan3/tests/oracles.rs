//! Cross-checks of the optimized solvers against the naive reference
//! implementations, beyond what the certificate suite already runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use turan3::coloring::{
    graph_chromatic_number, hypergraph_chromatic_number, min_proper_red_blue, min_strong_red_blue,
    p_value, q_value, IntOrInf,
};
use turan3::colored::{find_star_colored_clique, is_star_colored_free, max_colored_sum, ColoredMultigraph};
use turan3::constructions::{f_3_2, f_star_partition, full_star, turan_count, turan_graph};
use turan3::containment::{contains, contains_backtracking, contains_scan4};
use turan3::hypergraph::Graph2;
use turan3::oracle;
use turan3::sample;
use turan3::search::{solve, SearchInstance};

#[test]
fn chromatic_number_matches_brute_force_on_small_graphs() {
    let fixed = [
        Graph2::empty(0),
        Graph2::empty(5),
        Graph2::complete(4),
        Graph2::complete(7),
        Graph2::cycle(5),
        Graph2::cycle(6),
        Graph2::cycle(7),
        turan_graph(7, 3).unwrap(),
        turan_graph(6, 2).unwrap(),
    ];
    for g in &fixed {
        assert_eq!(graph_chromatic_number(g), oracle::brute_graph_chromatic(g), "graph {g:?}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=7u32);
        let density = rng.gen_range(10..95);
        let g = sample::random_graph(&mut rng, n, density);
        assert_eq!(graph_chromatic_number(&g), oracle::brute_graph_chromatic(&g), "graph {g:?}");
    }
}

#[test]
fn q_value_matches_brute_force_on_random_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(1..=7u32);
        let cap = (n as usize * (n as usize - 1).max(1)) / 2;
        let f = sample::random_hypergraph_sized(&mut rng, n, cap);
        assert_eq!(q_value(&f), oracle::brute_q_value(&f), "pattern {f:?}");
    }
}

#[test]
fn red_blue_invariants_on_random_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..80 {
        let n = rng.gen_range(1..=7u32);
        let f = sample::random_hypergraph_sized(&mut rng, n, 8);
        let p = p_value(&f);
        let q = q_value(&f);
        assert!(p <= q, "p > q on {f:?}");
        // p is finite exactly when a weak 2-coloring exists.
        if f.edge_count() > 0 {
            let two_colorable = hypergraph_chromatic_number(&f) <= 2;
            assert_eq!(p != IntOrInf::Infinity, two_colorable, "pattern {f:?}");
        }
        if let Some(coloring) = min_proper_red_blue(&f) {
            assert!(coloring.is_proper(&f));
        }
        if let Some(coloring) = min_strong_red_blue(&f) {
            assert!(coloring.is_strong(&f));
            assert_eq!(IntOrInf::Finite(coloring.red.len()), q);
        }
    }
}

#[test]
fn scan_and_backtracking_agree_on_random_four_vertex_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..120 {
        let f_edges = rng.gen_range(0..=4u32) as usize;
        let f = sample::random_hypergraph(&mut rng, 4, f_edges);
        let nh = rng.gen_range(4..=8u32);
        let h_edges = rng.gen_range(0..=20u32) as usize;
        let h = sample::random_hypergraph(&mut rng, nh, h_edges);
        let scan = contains_scan4(&f, &h);
        let generic = contains_backtracking(&f, &h);
        assert_eq!(scan.is_some(), generic.is_some(), "pattern {f:?} host {h:?}");
        if let Some(e) = scan {
            assert!(e.verify(&f, &h));
        }
    }
}

#[test]
fn containment_is_monotone_under_host_growth() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..50 {
        let f_edges = rng.gen_range(1..=3u32) as usize;
        let f = sample::random_hypergraph(&mut rng, 4, f_edges);
        let h_edges = rng.gen_range(0..=15u32) as usize;
        let h = sample::random_hypergraph(&mut rng, 7, h_edges);
        if contains(&f, &h).is_none() {
            continue;
        }
        // Add a few random extra edges: the copy must survive.
        let mut edges = h.edges().to_vec();
        let extra = sample::random_hypergraph(&mut rng, 7, 5);
        edges.extend_from_slice(extra.edges());
        edges.sort_unstable();
        edges.dedup();
        let bigger = turan3::hypergraph::Hypergraph3::new(7, edges).unwrap();
        assert!(contains(&f, &bigger).is_some());
    }
}

#[test]
fn star_colored_clique_agrees_with_oracle_on_structured_layers() {
    // Turán support: no clique, always free.
    for (n, r, s) in [(5u32, 3usize, 2usize), (6, 4, 3)] {
        let g = turan_graph(n, r as u32 - 1).unwrap();
        let layers = vec![g; s];
        assert!(is_star_colored_free(&layers, r).unwrap());
        let m = ColoredMultigraph::new(n, layers).unwrap();
        assert!(!oracle::brute_star_colored_clique(&m, r - 1, r, false));
    }
    // Complete layers on r vertices always contain a star cover.
    for r in [3usize, 4] {
        let layers = vec![Graph2::complete(r as u32); r - 1];
        let m = ColoredMultigraph::new(r as u32, layers.clone()).unwrap();
        assert!(!is_star_colored_free(&layers, r).unwrap());
        assert!(oracle::brute_star_colored_clique(&m, r - 1, r, true));
        let witness = find_star_colored_clique(&m, r - 1, r, true).unwrap().unwrap();
        assert!(witness.verify(&m, r - 1, true));
    }
}

#[test]
fn exhaustive_colored_maxima_respect_the_closed_bounds() {
    for (n, s) in [(4u32, 2usize), (5, 2), (4, 3)] {
        let result = max_colored_sum(n, s, 3, false, None).unwrap();
        assert_eq!(result.value, s as u64 * (n as u64 * n as u64 / 4));
        assert!(result.value >= s as u64 * turan_count(n as u64, 2).unwrap());
        assert!(is_star_colored_free(&result.layers, 3).unwrap());
        let total: u64 = result.layers.iter().map(|g| g.edge_count() as u64).sum();
        assert_eq!(total, result.value);
    }
}

#[test]
fn exact_and_at_most_modes_agree_at_k_equals_t_minus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..40 {
        let n = rng.gen_range(4..=6u32);
        let s = rng.gen_range(2..=3usize);
        let t = 4usize.min(n as usize);
        let layers: Vec<Graph2> = (0..s)
            .map(|_| {
                let density = rng.gen_range(40..95);
                sample::random_graph(&mut rng, n, density)
            })
            .collect();
        let m = ColoredMultigraph::new(n, layers).unwrap();
        if s >= t - 1 {
            let exact = find_star_colored_clique(&m, t - 1, t, true).unwrap().is_some();
            let at_most = find_star_colored_clique(&m, t - 1, t, false).unwrap().is_some();
            assert_eq!(exact, at_most);
        }
    }
}

#[test]
fn h3_round_trip_across_the_whole_catalog() {
    use turan3::constructions::{
        f_matching_partition, h_b, h_double_turan, h_ns, h_profile, j_plus, k4_minus,
        k4minus_extremal, matching,
    };
    use turan3::io::{read_h3, write_h3};
    let fp4 = f_star_partition(4).unwrap();
    let catalog = vec![
        matching(2),
        fp4.clone(),
        f_matching_partition(2).unwrap(),
        full_star(4).unwrap(),
        j_plus(4).unwrap(),
        k4_minus(),
        f_3_2(),
        h_ns(10, 2).unwrap().hypergraph,
        h_b(12, 3, 4).unwrap().hypergraph,
        k4minus_extremal(9, 2).unwrap().hypergraph,
        h_double_turan(12, 3, 4).unwrap().hypergraph,
        h_profile(&fp4, 2, 12, 3).unwrap().hypergraph,
    ];
    for h in catalog {
        let text = write_h3(&h);
        let back = read_h3(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(write_h3(&back), text);
    }
}

#[test]
fn solver_dominates_constructions_inside_the_solved_grid() {
    use turan3::constructions::h_ns;
    for (n, s) in [(5u32, 1u32), (6, 1), (6, 2)] {
        let built = h_ns(n, s).unwrap();
        let inst = SearchInstance { n, s: Some(s), family: vec![f_3_2()], budget: None };
        let solved = solve(&inst).unwrap();
        assert!(solved.exact);
        assert!(
            solved.value >= built.claimed_edges,
            "solver value {} below the construction size {} at n={n}, s={s}",
            solved.value,
            built.claimed_edges
        );
    }
}

#[test]
fn solver_matches_brute_enumeration_on_fixed_families() {
    let cases: Vec<(u32, Option<u32>, Vec<turan3::hypergraph::Hypergraph3>)> = vec![
        (5, Some(1), vec![]),
        (5, Some(1), vec![f_3_2()]),
        (5, None, vec![full_star(3).unwrap()]),
        (4, Some(1), vec![full_star(3).unwrap()]),
        (5, Some(2), vec![f_star_partition(3).unwrap()]),
    ];
    for (n, s, family) in cases {
        let inst = SearchInstance { n, s, family: family.clone(), budget: None };
        let solved = solve(&inst).unwrap();
        assert!(solved.exact);
        assert_eq!(
            solved.value,
            oracle::brute_max_family_free(n, &family, s),
            "instance n={n} s={s:?}"
        );
    }
}
