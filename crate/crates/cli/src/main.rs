//! `macx`: analyze simplicial complexes, list generators, compute loop-space series
//! and sweep small flag complexes.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use macx_core::classifier::{classify_with_table, y_space_homology};
use macx_core::enumeration::{run_sweep, Check, SweepConfig};
use macx_core::format::parse_complex;
use macx_core::generators::{enumerate_generators, generator_count};
use macx_core::loop_algebra::{
    adams_hilton_model, dga_homology_ranks, half_smash_deviation, mcgavran, poincare_series_closed,
    rank_oracle_monomials, GradedSeries, SphereProductSum,
};
use macx_core::{HochsterTable, HomologyReport, RelatorWord, SimplicialComplex, StarClassification, WordKind};

#[derive(Parser)]
#[command(name = "macx", version, about = "Moment-angle complexes: homology, one-relator tests, loop-space series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a complex and print its homology tables.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Truncation of the Poincaré series shown for star-condition complexes.
        #[arg(long, default_value_t = 12)]
        truncate: usize,
    },
    /// List the nested-commutator generators.
    Generators {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Loop-space Poincaré series of a connected sum of sphere products.
    Poincare {
        /// Use the McGavran decomposition of Z_{C_p}.
        #[arg(long, conflicts_with = "pairs", required_unless_present = "pairs")]
        cycle: Option<usize>,
        /// Explicit sum as `d:d1,d2,...`, one entry per summand S^{d_i} x S^{d-d_i}.
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, default_value_t = 12)]
        truncate: usize,
        /// Also count words avoiding a_1 b_1.
        #[arg(long)]
        oracle: bool,
        /// Also compute homology of the Adams–Hilton model.
        #[arg(long)]
        dga: bool,
        /// Compare the half-smash model with single-relation series instead.
        #[arg(long)]
        half_smash: bool,
        #[arg(long)]
        json: bool,
    },
    /// Summands of the McGavran decomposition of Z_{C_p}.
    Mcgavran {
        #[arg(long)]
        cycle: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the classification theorems on every flag complex with few vertices.
    VerifyTheorems {
        #[arg(long)]
        max_vertices: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso_dedup: bool,
        /// Comma-separated subset of thm3, thm5, flagmng, vanishing, chordal_free, golod.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Homology of the presentation complex of a one-relator group.
    Yspace {
        #[arg(long)]
        generators: usize,
        /// Relator such as "x1 x2 x1^-1 x2^-1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Group,
    Algebra,
}

impl From<Kind> for WordKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Group => WordKind::Group,
            Kind::Algebra => WordKind::Algebra,
        }
    }
}

const EXIT_USAGE: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("MACX_THREADS") else { return Ok(()) };
    let n: usize =
        raw.trim().parse().with_context(|| format!("MACX_THREADS must be a positive integer, got `{raw}`"))?;
    if n == 0 {
        bail!("MACX_THREADS must be at least 1");
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring worker threads")?;
    Ok(())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn load(path: &Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_complex(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Analyze { file, json, truncate } => analyze(&file, json, truncate),
        Command::Generators { file, kind, json } => {
            let k = load(&file)?;
            let set = enumerate_generators(&k, kind.into());
            if json {
                let words: Vec<Value> = set
                    .words
                    .iter()
                    .map(|w| json!({"prefix": w.prefix, "j": w.j, "i": w.i, "word": w.render()}))
                    .collect();
                print_json(&json!({"kind": set.kind, "count": set.count, "words": words}));
            } else {
                for w in &set.words {
                    println!("{w}");
                }
                println!("count: {}", set.count);
            }
            Ok(0)
        }
        Command::Poincare { cycle, pairs, truncate, oracle, dga, half_smash, json } => {
            let m = match (cycle, pairs) {
                (Some(p), _) => mcgavran(p)?,
                (None, Some(spec)) => parse_pairs(&spec)?,
                (None, None) => bail!("one of --cycle or --pairs is required"),
            };
            if half_smash {
                poincare_half_smash(&m, truncate, json)
            } else {
                poincare(&m, truncate, oracle, dga, json)
            }
        }
        Command::Mcgavran { cycle, json } => {
            let m = mcgavran(cycle)?;
            if json {
                print_json(&json!({"p": cycle, "sum": m, "summands": m.summands(), "betti": m.betti()}));
            } else {
                println!("Z_(C_{cycle}) = connected sum in dimension {}", m.dimension());
                println!("{:>6}  {:>12}  {:>10}", "d_i", "summand", "copies");
                for (&di, &c) in m.multiplicities() {
                    println!("{di:>6}  {:>12}  {c:>10}", format!("S^{di} x S^{}", m.dimension() - di));
                }
                println!("summands: {}", m.summands());
            }
            Ok(0)
        }
        Command::VerifyTheorems { max_vertices, iso_dedup, checks, json } => {
            let mut cfg = SweepConfig::new(max_vertices)?.with_dedup(iso_dedup);
            if !checks.is_empty() {
                let parsed = checks.iter().map(|c| c.trim().parse::<Check>()).collect::<Result<Vec<_>, _>>()?;
                cfg = cfg.with_checks(parsed);
            }
            let report = run_sweep(&cfg)?;
            if json {
                print_json(&serde_json::to_value(&report)?);
            } else {
                render::sweep(&report);
            }
            Ok(if report.is_clean() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Yspace { generators, word, json } => {
            let r: RelatorWord = word.parse()?;
            let h = y_space_homology(generators, &r)?;
            if json {
                print_json(&json!({"generators": generators, "relator": r.to_string(), "homology": h}));
            } else {
                println!("relator: {r}");
                for (k, g) in h.iter().enumerate() {
                    println!("H_{k} = {g}");
                }
                println!("H_k = 0 for k >= 3");
            }
            Ok(0)
        }
    }
}

/// `d:d1,d2,...`
fn parse_pairs(spec: &str) -> Result<SphereProductSum> {
    let (d, dims) = spec.split_once(':').with_context(|| format!("expected `d:d1,d2,...`, got `{spec}`"))?;
    let d: usize = d.trim().parse().with_context(|| format!("invalid dimension `{d}`"))?;
    let dims = dims
        .split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("invalid sphere dimension `{x}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(SphereProductSum::new(d, &dims)?)
}

fn analyze(file: &Path, json: bool, truncate: usize) -> Result<u8> {
    let k = load(file)?;
    let table = HochsterTable::compute(&k);
    let report = classify_with_table(&k, &table);
    let homology = HomologyReport::from_table(file.display().to_string(), &table);
    let count = generator_count(&k);
    let mut warnings = Vec::new();
    if let Some(w) = k.is_flag().witness {
        warnings.push(format!(
            "complex is not flag: {{{}}} is a missing face; group and algebra classifiers are skipped",
            w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        ));
    }
    let star_sum = match &report.star_condition {
        StarClassification::Matches { p, .. } => Some(mcgavran(*p)?),
        StarClassification::DoesNotMatch { .. } => None,
    };
    let series = star_sum.as_ref().map(|m| poincare_series_closed(m, truncate)).transpose()?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    if json {
        print_json(&json!({
            "file": file.display().to_string(),
            "vertices": k.num_vertices(),
            "f_vector": k.f_vector(),
            "classification": report,
            "homology": homology,
            "generator_count": count,
            "mcgavran": star_sum,
            "poincare_series": series,
            "warnings": warnings,
        }));
    } else {
        render::analysis(&k, &report, &homology, count, star_sum.as_ref(), series.as_ref());
    }
    Ok(0)
}

fn poincare(m: &SphereProductSum, n: usize, oracle: bool, dga: bool, json: bool) -> Result<u8> {
    let closed = poincare_series_closed(m, n)?;
    let designated = *m.multiplicities().keys().next().expect("sums are nonempty");
    let oracle = oracle.then(|| rank_oracle_monomials(m, n, designated)).transpose()?;
    let dga = dga.then(|| adams_hilton_model(m, false).and_then(|a| dga_homology_ranks(&a, n))).transpose()?;
    let agree = [&oracle, &dga].iter().all(|s| s.as_ref().is_none_or(|s| *s == closed));
    if json {
        print_json(&json!({"sum": m, "truncation": n, "closed": closed, "oracle": oracle, "dga": dga, "match": agree}));
        return Ok(0);
    }
    println!("M = {m}");
    let columns: Vec<(&str, Option<&GradedSeries>)> =
        vec![("closed", Some(&closed)), ("oracle", oracle.as_ref()), ("dga", dga.as_ref())];
    render::series_table(&columns, n);
    println!("match: {}", if agree { "yes" } else { "no" });
    Ok(0)
}

fn poincare_half_smash(m: &SphereProductSum, n: usize, json: bool) -> Result<u8> {
    let report = half_smash_deviation(m, n)?;
    if json {
        print_json(&serde_json::to_value(&report)?);
        return Ok(0);
    }
    println!("M = {m}, half-smash with S^1");
    println!("homology of the model: {}", report.observed);
    for c in &report.candidates {
        let label = c.relation_degree.map_or("no relation".to_string(), |r| format!("relation in degree {r}"));
        match c.first_difference {
            Some(d) => println!("  {label:<22} differs at degree {d}"),
            None => println!("  {label:<22} agrees through degree {n}"),
        }
    }
    println!("deviates from every single-relation series: {}", if report.deviates_from_all { "yes" } else { "no" });
    Ok(0)
}
