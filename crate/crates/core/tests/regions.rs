use nonstoch_core::region::{census, DEFAULT_BUDGET};
use nonstoch_core::{
    capacity_region, oracle_region, presets, rate_cuboid, synthesize_code, verify_zero_error, Bounds, MuTriple,
    Strategy, DEFAULT_WORLD_CAP,
};
use nonstoch_testkit::suites;

#[test]
fn structure_route_matches_code_search_at_one_use() {
    for (name, ch) in presets::corpus() {
        let oracle = oracle_region(&ch, 1, None, DEFAULT_BUDGET).unwrap();
        assert!(oracle.region.is_downward_closed(), "{name}");
        for strategy in [Strategy::Exhaustive, Strategy::Packing, Strategy::Auto] {
            let r = capacity_region(&ch, 1, &Bounds::default(), strategy).unwrap();
            assert_eq!(r.region.points(), oracle.region.points(), "{name} {strategy:?}");
        }
    }
}

#[test]
fn structure_route_matches_code_search_at_two_uses() {
    for (name, ch) in presets::corpus() {
        let oracle = oracle_region(&ch, 2, None, DEFAULT_BUDGET).unwrap();
        assert!(oracle.region.is_downward_closed(), "{name}");
        let r = capacity_region(&ch, 2, &Bounds::default(), Strategy::Auto).unwrap();
        assert_eq!(r.strategy, Strategy::Packing, "{name}");
        assert_eq!(r.region.points(), oracle.region.points(), "{name}");
    }
}

#[test]
fn packing_agrees_with_exhaustive_under_tight_bounds() {
    let bounds = Bounds {
        max_u: Some(2),
        max_set_size: Some(2),
        ..Bounds::default()
    };
    for ch in [presets::binary_adder(), presets::binary_xor(), presets::binary_and()] {
        assert!(census(&ch, 2, 2, 2) <= bounds.budget);
        let e = capacity_region(&ch, 2, &bounds, Strategy::Exhaustive).unwrap();
        let p = capacity_region(&ch, 2, &bounds, Strategy::Packing).unwrap();
        assert_eq!(e.region, p.region);
        assert!(e.region.bounding_box().mu0 <= 2);
    }
}

#[test]
fn witnesses_reach_their_corners() {
    for (name, ch) in presets::corpus() {
        for n in [1, 2] {
            let r = capacity_region(&ch, n, &Bounds::default(), Strategy::Auto).unwrap();
            assert_eq!(
                r.witnesses
                    .iter()
                    .map(|(c, _)| *c)
                    .collect::<std::collections::BTreeSet<_>>(),
                r.region.maximal_points().into_iter().collect(),
                "{name} n={n}"
            );
            for (corner, s) in &r.witnesses {
                assert_eq!(rate_cuboid(&ch, s, DEFAULT_WORLD_CAP).unwrap().mu, *corner);
                let synth = synthesize_code(&ch, s, DEFAULT_WORLD_CAP).unwrap();
                assert_eq!(synth.achieved, *corner, "{name} n={n}");
                assert!(verify_zero_error(&ch, &synth.code, DEFAULT_WORLD_CAP).unwrap().ok);
            }
        }
    }
}

#[test]
fn synthesis_rates_equal_structure_information() {
    for (name, ch) in presets::corpus() {
        let t = suites::rate_equality_suite(&ch, 1, &Bounds::default()).unwrap();
        assert!(t.is_clean(), "{name}: {:?}", t.violations.first());
        assert!(t.checks > 0);
    }
    let bounds = Bounds {
        max_u: Some(1),
        ..Bounds::default()
    };
    let t = suites::rate_equality_suite(&presets::binary_adder(), 2, &bounds).unwrap();
    assert!(t.is_clean(), "{:?}", t.violations.first());
    assert_eq!(t.checks, 2 * 225);
}

#[test]
fn adder_two_uses() {
    let r = capacity_region(&presets::binary_adder(), 2, &Bounds::default(), Strategy::Auto).unwrap();
    assert!(r.region.contains(&MuTriple::new(9, 1, 1)));
    assert!(!r.region.contains(&MuTriple::new(10, 1, 1)));
    assert!(r.region.contains(&MuTriple::new(1, 2, 3)));
    assert!(!r.region.contains(&MuTriple::new(1, 4, 2)));
}
