use distspec::bounds::{check_bound, BoundId, TOL};
use distspec::search::{
    canonical_form, canonical_set, connected_classes, enumerate_connected, mask_is_connected, verify,
    verify_with_threads, GraphSource, WITNESS_CAP,
};
use distspec::{parse_graph6, write_graph6, FamilySpec, Graph};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn labeled_counts() {
    let expected = [1, 4, 38, 728, 26704];
    for (n, want) in (2..=6).zip(expected) {
        assert_eq!(enumerate_connected(n, false).unwrap().count(), want, "n = {n}");
    }
}

#[test]
fn class_counts() {
    for (n, want) in (2..=8).zip([1, 2, 6, 21, 112, 853, 11117]) {
        assert_eq!(connected_classes(n).len(), want, "n = {n}");
    }
}

#[test]
fn orbit_stabilizer_recovers_labeled_counts() {
    for n in 2..=5usize {
        let labeled = (0..1u64 << (n * (n - 1) / 2)).filter(|&m| mask_is_connected(n, m)).count() as u64;
        let from_classes: u64 =
            connected_classes(n).into_iter().map(|m| factorial(n as u64) / canonical_form(n, m).automorphisms).sum();
        assert_eq!(from_classes, labeled, "n = {n}");
    }
}

#[test]
fn known_automorphism_counts() {
    let aut = |spec: &str| {
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        canonical_form(g.order(), g.to_mask().unwrap()).automorphisms
    };
    assert_eq!(aut("complete:5"), 120);
    assert_eq!(aut("cycle:6"), 12);
    assert_eq!(aut("path:5"), 2);
    assert_eq!(aut("star:5"), 24);
    assert_eq!(aut("cmb:3,2"), 12);
}

#[test]
fn graph6_round_trips_every_graph_of_order_five() {
    let mut seen = 0;
    for m in 0..1u64 << 10 {
        let g = Graph::from_mask(5, m).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
        seen += 1;
    }
    assert_eq!(seen, 1024);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let sources = [
        GraphSource::labeled(6),
        GraphSource::dedup(7),
        GraphSource::RandomConnected { n: 9, p: 0.3, samples: 300, seed: 42 },
    ];
    for src in &sources {
        let one = verify_with_threads(&BoundId::ALL, src, 1).unwrap();
        let four = verify_with_threads(&BoundId::ALL, src, 4).unwrap();
        assert_eq!(one, four, "{}", src.describe());
        assert_eq!(distspec::output::to_json(&one), distspec::output::to_json(&four));
    }
}

#[test]
fn random_sweeps_are_seed_deterministic() {
    let src = GraphSource::RandomConnected { n: 8, p: 0.35, samples: 200, seed: 7 };
    assert_eq!(verify(&BoundId::ALL, &src).unwrap(), verify(&BoundId::ALL, &src).unwrap());
    let other = GraphSource::RandomConnected { n: 8, p: 0.35, samples: 200, seed: 8 };
    assert_ne!(
        verify(&[BoundId::RhoPlusD3Pos], &src).unwrap().bounds[0].min_margin,
        verify(&[BoundId::RhoPlusD3Pos], &other).unwrap().bounds[0].min_margin
    );
}

#[test]
fn witnesses_reparse_to_their_margins() {
    let report = verify(&BoundId::ALL, &GraphSource::labeled(5)).unwrap();
    for b in &report.bounds {
        if let (Some(min), Some(w)) = (b.min_margin, &b.min_margin_witness) {
            let c = check_bound(b.id, &parse_graph6(w).unwrap()).unwrap();
            assert!((c.margin_value().unwrap() - min).abs() <= 1e-12, "{}", b.id);
        }
        assert!(b.violations.len() <= WITNESS_CAP);
        for w in &b.violations {
            assert!(check_bound(b.id, &parse_graph6(w).unwrap()).unwrap().violated(), "{} {w}", b.id);
        }
        for w in &b.equality_witnesses {
            assert_eq!(check_bound(b.id, &parse_graph6(w).unwrap()).unwrap().equality, Some(true));
        }
    }
}

#[test]
fn labeled_and_dedup_agree_on_isomorphism_classes() {
    let ids = [BoundId::DistMinGeqNegD, BoundId::MerrisChain];
    for n in 3..=4 {
        let labeled = verify(&ids, &GraphSource::labeled(n)).unwrap();
        let dedup = verify(&ids, &GraphSource::dedup(n)).unwrap();
        for (a, b) in labeled.bounds.iter().zip(&dedup.bounds) {
            assert!(a.violations_total as usize <= WITNESS_CAP);
            assert_eq!(canonical_set(&a.violations).unwrap(), canonical_set(&b.violations).unwrap(), "{}", a.id);
            assert_eq!(
                canonical_set(&a.equality_witnesses).unwrap(),
                canonical_set(&b.equality_witnesses).unwrap(),
                "{}",
                a.id
            );
            assert_eq!(a.characterization, b.characterization);
        }
    }
}

#[test]
fn remoteness_upper_is_tight_on_paths() {
    for n in 3..=10 {
        let c = check_bound(BoundId::RemotenessUpper, &FamilySpec::Path(n).build().unwrap()).unwrap();
        assert_eq!(c.equality, Some(true), "P{n}");
        assert_eq!(c.margin_value(), Some(0.0));
    }
}

#[test]
fn cycles_are_transmission_regular_equality_cases() {
    for n in 3..=12 {
        let c = check_bound(BoundId::D1GeqWiener, &FamilySpec::Cycle(n).build().unwrap()).unwrap();
        assert_eq!(c.equality, Some(true), "C{n}");
        assert!(c.margin_value().unwrap().abs() <= TOL);
    }
}

#[test]
fn large_orders_need_an_override() {
    assert!(verify(&[BoundId::RhoPlusD3Pos], &GraphSource::labeled(8)).is_err());
    assert!(verify(&[BoundId::RhoPlusD3Pos], &GraphSource::dedup(8)).is_err());
    let src = GraphSource::ExhaustiveDedup { n: 8, allow_large: true };
    assert_eq!(verify(&[BoundId::RhoPlusD3Pos], &src).unwrap().graphs_checked, 11117);
}
