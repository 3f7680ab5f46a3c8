use macx_core::enumeration::{graph_codes, run_sweep, run_sweep_with, Check, SweepConfig, SweepHooks};

#[test]
fn labelled_counts() {
    for n in 1..=6 {
        assert_eq!(graph_codes(n, false).unwrap().len() as u64, 1 << (n * (n - 1) / 2));
    }
}

#[test]
fn isomorphism_class_counts() {
    // graphs on n unlabelled vertices
    let expected = [1, 2, 4, 11, 34, 156];
    for (n, &e) in (1..=6).zip(&expected) {
        assert_eq!(graph_codes(n, true).unwrap().len(), e, "n = {n}");
    }
}

#[test]
fn deduplicated_thm5_sweep() {
    let cfg = SweepConfig::new(6).unwrap().with_dedup(true).with_checks([Check::Thm5]);
    let report = run_sweep(&cfg).unwrap();
    assert!(report.is_clean());
    // C_4, then C_5 and C_4 * Δ^0, then C_6, C_5 * Δ^0 and C_4 * Δ^1
    assert_eq!(report.tallies["star_condition"], 6);
    let shapes: Vec<&str> = report.star_shapes.keys().map(String::as_str).collect();
    assert_eq!(
        shapes,
        ["n=4 p=4 cone=0", "n=5 p=4 cone=1", "n=5 p=5 cone=0", "n=6 p=4 cone=2", "n=6 p=5 cone=1", "n=6 p=6 cone=0"]
    );
}

#[test]
fn broken_chordality_produces_reproducible_counterexamples() {
    let cfg = SweepConfig::new(5).unwrap().with_checks([Check::ChordalFree, Check::Golod]);
    let hooks = SweepHooks { chordal: |g| !g.is_chordal().chordal, ..SweepHooks::default() };
    let report = run_sweep_with(&cfg, hooks).unwrap();
    assert!(report.counterexample_total > 0);
    for c in &report.counterexamples {
        let k = macx_core::SimplicialComplex::from_facets_on(c.vertices, &c.facets).unwrap();
        assert_eq!(macx_core::classifier::classify(&k), c.classification);
    }
}

#[test]
fn seven_vertex_defaults_are_the_cheap_checks() {
    let cfg = SweepConfig::new(7).unwrap();
    assert_eq!(cfg.checks.iter().copied().collect::<Vec<_>>(), vec![Check::Thm3, Check::ChordalFree]);
    assert!(SweepConfig::new(8).is_err());
}
