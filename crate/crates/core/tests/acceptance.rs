//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use macx_core::classifier::surface_genus;
use macx_core::enumeration::{run_sweep, Check, SweepConfig, SweepReport};
use macx_core::format::parse_complex;
use macx_core::generators::{enumerate_generators, generator_count};
use macx_core::homology::{betti_z, bigraded_homology_z, homology_r};
use macx_core::loop_algebra::{
    adams_hilton_model, dga_homology_ranks, half_smash_deviation, mcgavran, poincare_series_closed,
    rank_oracle_monomials, SphereProductSum,
};
use macx_core::{HomologyGroup, SimplicialComplex, WordKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn example(name: &str) -> SimplicialComplex {
    let text = match name {
        "two_triangles" => include_str!("../../../data/two_triangles.txt"),
        "square_cone" => include_str!("../../../data/square_cone.txt"),
        _ => include_str!("../../../data/missing_triangle.txt"),
    };
    parse_complex(text).expect("example file parses")
}

fn words(k: &SimplicialComplex, kind: WordKind) -> BTreeSet<String> {
    enumerate_generators(k, kind).words.iter().map(|w| w.render()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn criterion_1() -> Outcome {
    let c5 = generator_count(&SimplicialComplex::cycle(5).unwrap());
    let c6 = generator_count(&SimplicialComplex::cycle(6).unwrap());
    ensure(c5 == 10 && c6 == 34, format!("C_5 -> {c5}, C_6 -> {c6}"))?;
    Ok(format!("C_5 -> {c5}, C_6 -> {c6}"))
}

fn criterion_2() -> Outcome {
    let (a, b) = (example("two_triangles"), example("square_cone"));
    let (ha, hb) = (homology_r(&a), homology_r(&b));
    ensure(ha[2] == HomologyGroup::free(3), format!("two-triangle complex H_2(R_K) = {}", ha[2]))?;
    ensure(hb[2].is_exactly_z(), format!("square cone H_2(R_K) = {}", hb[2]))?;
    let wa = words(&a, WordKind::Group);
    ensure(
        wa == set(&["(g_3,g_1)", "(g_4,g_2)", "(g_5,g_4)", "(g_2,(g_5,g_4))"]),
        format!("two-triangle complex words {wa:?}"),
    )?;
    let wb = words(&b, WordKind::Algebra);
    ensure(wb == set(&["[u_3,u_1]", "[u_4,u_2]"]), format!("square cone words {wb:?}"))?;
    let (za, zb) = (bigraded_homology_z(&a), bigraded_homology_z(&b));
    ensure(*za.get(2, 8) == HomologyGroup::free(2), format!("two-triangle complex H_(-2,8) = {}", za.get(2, 8)))?;
    ensure(za.get(3, 10).is_exactly_z(), format!("two-triangle complex H_(-3,10) = {}", za.get(3, 10)))?;
    ensure(zb.get(2, 8).is_exactly_z(), format!("square cone H_(-2,8) = {}", zb.get(2, 8)))?;
    Ok("H_2 = Z^3 / Z, 4 and 2 words, H_(-2,8) = Z^2 / Z, H_(-3,10) = Z".into())
}

fn sweep(checks: &[Check]) -> Result<SweepReport, String> {
    let cfg = SweepConfig::new(6).map_err(|e| e.to_string())?.with_checks(checks.iter().copied());
    let report = run_sweep(&cfg).map_err(|e| e.to_string())?;
    ensure(report.per_vertex_count.get(&6) == Some(&(1 << 15)), "expected 2^15 graphs on 6 vertices")?;
    if !report.is_clean() {
        let first = &report.counterexamples[0];
        return Err(format!(
            "{} counterexamples; first: {} on facets {:?}",
            report.counterexample_total, first.check, first.facets
        ));
    }
    Ok(report)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labelled copies of `C_p * Δ^{n-p-1}` on `[n]`: choose the cycle vertices, then a
/// cyclic order up to reflection.
fn labelled_star_count(n: u64) -> u64 {
    (4..=n).map(|p| binomial(n, p) * (1..p).product::<u64>() / 2).sum()
}

fn star_count_at(report: &SweepReport, n: usize) -> u64 {
    let prefix = format!("n={n} ");
    report.star_shapes.iter().filter(|(k, _)| k.starts_with(&prefix)).map(|(_, c)| c).sum()
}

fn criterion_3() -> Outcome {
    let report = sweep(&[Check::Thm3, Check::Vanishing])?;
    Ok(format!(
        "{} complexes, {} with H_2(R_K) = Z, {} vanishing checks, 0 counterexamples",
        report.complexes_checked, report.tallies["h2_r_exactly_z"], report.tallies["vanishing_checked"]
    ))
}

fn criterion_4() -> Outcome {
    let report = sweep(&[Check::Thm5, Check::Vanishing])?;
    for n in 4..=6 {
        let (seen, expected) = (star_count_at(&report, n), labelled_star_count(n as u64));
        ensure(seen == expected, format!("n={n}: {seen} star complexes, expected {expected}"))?;
    }
    Ok(format!(
        "{} complexes, {} one-relator rows, star counts 3/27/177, 0 counterexamples",
        report.complexes_checked, report.tallies["one_relator_row"]
    ))
}

fn criterion_5() -> Outcome {
    let cases = [
        ("mcgavran(4)", mcgavran(4).unwrap(), 10),
        ("mcgavran(5)", mcgavran(5).unwrap(), 10),
        ("S^3xS^3", SphereProductSum::new(6, &[3]).unwrap(), 14),
    ];
    for (name, m, n) in cases {
        let closed = poincare_series_closed(&m, n).map_err(|e| e.to_string())?;
        let designated = *m.multiplicities().keys().next().unwrap();
        let oracle = rank_oracle_monomials(&m, n, designated).map_err(|e| e.to_string())?;
        let model = adams_hilton_model(&m, false).map_err(|e| e.to_string())?;
        let dga = dga_homology_ranks(&model, n).map_err(|e| e.to_string())?;
        ensure(closed == oracle, format!("{name}: closed {closed} vs oracle {oracle}"))?;
        ensure(closed == dga, format!("{name}: closed {closed} vs dga {dga}"))?;
    }
    let prefix = poincare_series_closed(&mcgavran(5).unwrap(), 5).unwrap();
    ensure(prefix.coefficients() == [1, 0, 5, 5, 25, 49], format!("mcgavran(5) prefix {prefix}"))?;
    Ok("three routes agree; mcgavran(5) prefix 1,0,5,5,25,49".into())
}

fn criterion_6() -> Outcome {
    for p in 4..=7 {
        let ours: Vec<u64> = betti_z(&SimplicialComplex::cycle(p).unwrap()).into_iter().map(|b| b as u64).collect();
        let expected = mcgavran(p).unwrap().betti();
        ensure(ours == expected, format!("p={p}: {ours:?} vs {expected:?}"))?;
    }
    Ok("p = 4..7 agree".into())
}

fn criterion_7() -> Outcome {
    for p in 4..=8 {
        let h = homology_r(&SimplicialComplex::cycle(p).unwrap());
        let euler: i64 = h
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
            .sum();
        let g = surface_genus(p).unwrap() as i64;
        ensure(euler == 2 - 2 * g, format!("p={p}: chi = {euler}, genus {g}"))?;
    }
    Ok("p = 4..8 agree".into())
}

fn criterion_8() -> Outcome {
    let report = half_smash_deviation(&SphereProductSum::new(6, &[3]).unwrap(), 7).map_err(|e| e.to_string())?;
    if let Some(c) = report.candidates.iter().find(|c| c.first_difference.is_none()) {
        return Err(format!(
            "observed {} equals candidate with relation degree {:?}",
            report.observed, c.relation_degree
        ));
    }
    Ok(format!("observed {} deviates from all {} candidates", report.observed, report.candidates.len()))
}

fn criterion_9() -> Outcome {
    let k = example("missing_triangle");
    ensure(!k.is_flag().flag, "missing-triangle complex should not be flag")?;
    let b = betti_z(&k);
    ensure(b == vec![1, 0, 0, 2, 0, 1, 3, 1], format!("betti {b:?}"))?;
    Ok(format!("betti {b:?}"))
}

fn criterion_10() -> Outcome {
    let report = sweep(&[Check::Golod, Check::Flagmng, Check::ChordalFree])?;
    let mng = report.tallies["minimally_non_golod"];
    // labelled p-cycles on exactly p vertices, p = 4, 5, 6
    ensure(mng == 3 + 12 + 60, format!("{mng} minimally non-Golod complexes"))?;
    Ok(format!(
        "{} complexes, {} chordal, {mng} minimally non-Golod, 0 counterexamples",
        report.complexes_checked, report.tallies["chordal"]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("generator counts", Duration::from_secs(1), criterion_1),
        ("two-triangle complex and square cone", Duration::from_secs(1), criterion_2),
        ("one-relator group sweep", Duration::from_secs(300), criterion_3),
        ("one-relator algebra sweep", Duration::from_secs(900), criterion_4),
        ("Poincare series triple agreement", Duration::from_secs(120), criterion_5),
        ("McGavran Betti consistency", Duration::from_secs(60), criterion_6),
        ("genus and Euler characteristic", Duration::from_secs(60), criterion_7),
        ("half-smash deviation", Duration::from_secs(120), criterion_8),
        ("non-flag Betti vector", Duration::from_secs(1), criterion_9),
        ("flag Golod chain", Duration::from_secs(900), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
