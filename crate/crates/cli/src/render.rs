use macx_core::classifier::ClassificationReport;
use macx_core::enumeration::SweepReport;
use macx_core::loop_algebra::{GradedSeries, SphereProductSum};
use macx_core::{HomologyReport, Mismatch, SimplicialComplex, StarClassification};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn labels(v: &[u32]) -> String {
    format!("{{{}}}", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

pub fn analysis(
    k: &SimplicialComplex,
    report: &ClassificationReport,
    homology: &HomologyReport,
    generators: usize,
    sum: Option<&SphereProductSum>,
    series: Option<&GradedSeries>,
) {
    println!("complex: {} ({} vertices, f-vector {:?})", homology.complex, k.num_vertices(), k.f_vector());
    println!("flag: {}", yes_no(report.flag));
    match report.witnesses.get("chordless_cycle") {
        Some(c) => println!("chordal 1-skeleton: no (chordless cycle {})", labels(c)),
        None => println!("chordal 1-skeleton: yes"),
    }
    match &report.star_condition {
        StarClassification::Matches { p, cone, .. } if cone.is_empty() => {
            println!("star condition: matches, K = C_{p}")
        }
        StarClassification::Matches { p, cone, .. } => {
            println!("star condition: matches, K = C_{p} * simplex on {}", labels(cone))
        }
        StarClassification::DoesNotMatch { reason } => {
            let why = match reason {
                Mismatch::NotFlag { witness } => format!("not flag, missing face {}", labels(witness)),
                Mismatch::RemainderNotCycle => "the non-cone vertices do not span an induced cycle".into(),
                Mismatch::CycleTooShort { p } => format!("cycle of length {p} is too short"),
            };
            println!("star condition: does not match ({why})");
        }
    }
    let h_r: Vec<String> = homology.h_r.iter().map(|e| format!("H_{} = {}", e.k, e.group)).collect();
    println!("H_*(R_K): {}", h_r.join(", "));
    println!("H_*(Z_K) bigraded (nonzero):");
    for e in &homology.h_z_bigraded {
        println!("  H_(-{},{}) = {}", e.i, e.j2, e.group);
    }
    println!("betti(Z_K): {:?}", homology.betti_z);
    println!("generators: {generators}");
    println!("free commutator subgroup: {}", opt(report.free_group));
    println!(
        "one-relator group: {} (H_2(R_K) = Z: {})",
        opt(report.one_relator_group),
        opt(report.one_relator_group_homological)
    );
    println!("one-relator loop homology: {}", opt(report.one_relator_algebra));
    println!("Golod: {}, minimally non-Golod: {}", opt(report.golod_flag), opt(report.minimally_non_golod_flag));
    if let Some(g) = report.genus {
        println!("genus of R_K surface factor: {g}");
    }
    if let Some(m) = sum {
        println!("McGavran: Z_K ~ {m}");
    }
    if let Some(s) = series {
        println!("Poincare series of H_*(Omega Z_K) through degree {}: {s}", s.truncation());
    }
}

pub fn series_table(columns: &[(&str, Option<&GradedSeries>)], n: usize) {
    let shown: Vec<&(&str, Option<&GradedSeries>)> = columns.iter().filter(|(_, s)| s.is_some()).collect();
    print!("{:>4}", "n");
    for (name, _) in &shown {
        print!("  {name:>14}");
    }
    println!();
    for d in 0..=n {
        print!("{d:>4}");
        for (_, s) in &shown {
            print!("  {:>14}", s.and_then(|s| s.get(d)).map_or("-".into(), |c| c.to_string()));
        }
        println!();
    }
}

pub fn sweep(report: &SweepReport) {
    let checks: Vec<String> = report.checks.iter().map(|c| c.to_string()).collect();
    println!(
        "swept {} flag complexes on up to {} vertices ({}), checks: {}",
        report.complexes_checked,
        report.max_vertices,
        if report.dedup_isomorphism { "one per isomorphism class" } else { "labelled" },
        checks.join(", ")
    );
    for (n, c) in &report.per_vertex_count {
        println!("  n = {n}: {c}");
    }
    for (name, c) in &report.tallies {
        println!("  {name}: {c}");
    }
    println!("counterexamples: {}", report.counterexample_total);
    for c in &report.counterexamples {
        println!("  {} on n={} facets {:?}: {} vs {}", c.check, c.vertices, c.facets, c.combinatorial, c.homological);
    }
}
