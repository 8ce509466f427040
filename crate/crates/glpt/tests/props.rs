//! Property tests for the codec, path canonicalization, and matching
//! outcomes, plus scan-level checks that do not gate acceptance.

use proptest::prelude::*;

use glpt::bitset::VertexSet;
use glpt::graph::Graph;
use glpt::harness::{self, load_corpus, ScanOptions, TheoremId};
use glpt::longest_path::{hamiltonian, longest_path_order, FiberQuery, HamiltonianKind, Path};
use glpt::params::{connectivity, hall_matching, independence_number, HallOutcome};
use glpt::{encode_graph6, parse_graph6};

/// Arbitrary edge set over a small vertex range.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter_map(|(&e, &keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip_small(g in arb_graph(12)) {
        let encoded = encode_graph6(&g);
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(decoded.n(), g.n());
        prop_assert_eq!(decoded.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(encode_graph6(&decoded), encoded);
    }

    #[test]
    fn graph6_roundtrip_multiword(g in arb_graph(70)) {
        let encoded = encode_graph6(&g);
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(decoded.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn path_canonical_orientation_is_stable(verts in proptest::collection::vec(0usize..10, 2..10)) {
        // Build a path graph over the distinct prefix of `verts`.
        let mut seen = std::collections::BTreeSet::new();
        let distinct: Vec<usize> = verts.into_iter().filter(|v| seen.insert(*v)).collect();
        prop_assume!(distinct.len() >= 2);
        let n = 10;
        let edges: Vec<(usize, usize)> =
            distinct.windows(2).map(|w| (w[0], w[1])).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let fwd = Path::new(&g, distinct.clone()).unwrap();
        let mut reversed = distinct.clone();
        reversed.reverse();
        let bwd = Path::new(&g, reversed).unwrap();
        prop_assert_eq!(fwd.verts(), bwd.verts());
    }

    #[test]
    fn hall_outcome_is_self_certifying(g in arb_graph(10), split in 1usize..9) {
        let n = g.n();
        prop_assume!(n >= 2);
        let cut = split.min(n - 1);
        let s = VertexSet::from_iter(n, 0..cut);
        let t = VertexSet::from_iter(n, cut..n);
        match hall_matching(&g, &s, &t).unwrap() {
            HallOutcome::Matching(m) => {
                prop_assert_eq!(m.len(), s.len());
                let mut used = std::collections::BTreeSet::new();
                for &(a, b) in &m {
                    prop_assert!(s.contains(a));
                    prop_assert!(t.contains(b));
                    prop_assert!(g.has_edge(a, b));
                    prop_assert!(used.insert(b));
                }
            }
            HallOutcome::Violator(s1) => {
                prop_assert!(s1.is_subset_of(&s));
                let nb = g.neighborhood_of_set(&s1).intersection(&t);
                prop_assert!(nb.len() < s1.len());
            }
        }
    }
}

#[test]
fn chvatal_erdos_sanity_on_corpus() {
    // alpha <= kappa + 1 forces a Hamiltonian path.
    for n in 2..=7 {
        for g in glpt::generate::generate_connected(n).unwrap() {
            let kappa = connectivity(&g).unwrap();
            if independence_number(&g) <= kappa + 1 {
                assert!(
                    hamiltonian(&g, HamiltonianKind::Path).unwrap().is_some(),
                    "{g:?}"
                );
                assert_eq!(longest_path_order(&g, &FiberQuery::any()).unwrap(), g.n());
            }
        }
    }
}

#[test]
fn one_sided_and_two_sided_scans_are_clean_n7() {
    let corpus = load_corpus("gen:7", true).unwrap();
    for theorem in [TheoremId::OneSided, TheoremId::TwoSided] {
        let report = harness::scan(theorem, &corpus, &ScanOptions::default());
        assert_eq!(
            report.summary.violations,
            0,
            "{}: {:?}",
            theorem.tag(),
            report.violations.first()
        );
        assert!(report.summary.hypothesis_hits > 0);
    }
}

#[test]
fn chvatal_erdos_scan_on_structured_samples() {
    assert_eq!(harness::chvatal_erdos_threshold(1), 16);
    assert_eq!(harness::chvatal_erdos_threshold(2), 57);

    // Dense structured samples with n >= 16, kappa >= 1, alpha <= 3: the
    // complement of a long cycle, and complements of sparse random graphs.
    let mut graphs = Vec::new();
    let c16_complement = {
        let edges: Vec<(usize, usize)> = (0..16)
            .flat_map(|i| ((i + 1)..16).map(move |j| (i, j)))
            .filter(|&(i, j)| !(j == i + 1 || (i == 0 && j == 15)))
            .collect();
        Graph::from_edges(16, &edges).unwrap()
    };
    assert_eq!(independence_number(&c16_complement), 2);
    graphs.push(c16_complement);

    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    while graphs.len() < 6 {
        let n = 16 + rng.random_range(0..3);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(0.82) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() && independence_number(&g) <= 3 {
            graphs.push(g);
        }
    }
    let line_numbers = (1..=graphs.len()).collect();
    let corpus = harness::Corpus {
        source: "structured+random samples".into(),
        graphs,
        line_numbers,
        skipped: Vec::new(),
    };
    let report = harness::scan(TheoremId::ChvatalErdos, &corpus, &ScanOptions::default());
    assert_eq!(report.summary.hypothesis_hits, 6);
    assert_eq!(report.summary.violations, 0, "{:?}", report.violations.first());

    // Regular corollary on the same dense complement sample.
    let report = harness::scan(TheoremId::HamregCorollary, &corpus, &ScanOptions::default());
    assert_eq!(report.summary.violations, 0);

    // Sharpness: the star blowup keeps alpha <= k+3 yet its maximum-degree
    // vertices all miss some longest path.
    let sb = glpt::constructions::star_blowup(1, 5).unwrap();
    assert!(independence_number(&sb) <= 4);
    let gallai = glpt::transversal::gallai_vertices(&sb).unwrap();
    let delta = sb.max_degree();
    assert!(sb
        .vertices()
        .filter(|&v| sb.degree(v) == delta)
        .all(|v| !gallai.contains(v)));
}

#[test]
fn generator_count_matches_oracle_n6() {
    assert_eq!(
        glpt::generate::generate_connected(6).unwrap().len(),
        glpt::generate::brute_force_connected_count(6)
    );
}
