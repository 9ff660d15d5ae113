use std::io::{IsTerminal, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use golodkit_core::chordal::{is_chordal, verify_peo, EliminationOrdering};
use golodkit_core::golod::golod_verdict_with;
use golodkit_core::hochster::hochster_table_with;
use golodkit_core::koszul::{koszul_pairing_ranks, koszul_product_nontrivial, koszul_tor_table_with};
use golodkit_core::products::{cross_product_map, scan_products, ScanOptions};
use golodkit_core::{
    catalog, integral_homology, io, moore_complex, reduced_betti, surface_golod_equivalence_report, verify_moore,
    FieldSpec, GolodStatus, ScanLimits, SimplicialComplex, VertexSet,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "golodkit", version, about = "Golodness invariants of simplicial complexes")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "GOLODKIT_THREADS")]
    threads: Option<usize>,
    /// Ignore the exhaustive-scan caps.
    #[arg(long, global = true)]
    force: bool,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Complex file (JSON or text); `-` reads standard input.
    #[arg(value_name = "FILE", required_unless_present = "fixture")]
    file: Option<PathBuf>,
    /// A built-in complex instead of a file (m2, rp2-6, torus-7, octahedron,
    /// remark, bipyramid-N, cycle-N, simplex-M, boundary-M, points-M, moore-P).
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Args, Clone)]
struct Fields {
    /// Coefficient field, `q` or `fp:<prime>`; repeatable.
    #[arg(long = "field", value_name = "FIELD")]
    fields: Vec<FieldSpec>,
}

impl Fields {
    fn or(&self, default: &[FieldSpec]) -> Vec<FieldSpec> {
        if self.fields.is_empty() {
            default.to_vec()
        } else {
            self.fields.clone()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Txt,
}

#[derive(Subcommand)]
enum Command {
    /// Run every analysis and print a combined report.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
        /// Exit with status 2 if any verdict is "not Golod".
        #[arg(long)]
        expect_golod: bool,
        /// Also check the complex against the Moore complex M(P).
        #[arg(long, value_name = "P")]
        moore: Option<usize>,
    },
    /// Integral homology and reduced Betti numbers.
    Homology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
    },
    /// Bigraded Tor table and the Poincaré series of the moment-angle complex.
    Hochster {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Golod verdict per field.
    Golod {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
        /// Include the witness cochains.
        #[arg(long)]
        witness: bool,
        /// List a witness for every contributing pair.
        #[arg(long)]
        all_pairs: bool,
        /// Exit with status 2 if any verdict is "not Golod".
        #[arg(long)]
        expect_golod: bool,
    },
    /// The product map for one pair of subsets, or a scan over all pairs.
    Products {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
        /// Comma-separated labels of I.
        #[arg(long, requires_all = ["j", "p", "q"])]
        i: Option<String>,
        #[arg(long)]
        j: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<isize>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<isize>,
    },
    /// Chordality of the 1-skeleton.
    Chordal {
        #[command(flatten)]
        input: Input,
        /// Check this elimination ordering (comma-separated) instead.
        #[arg(long)]
        order: Option<String>,
    },
    /// 1-neighborliness against the Golod verdict on a surface.
    Surface {
        #[command(flatten)]
        input: Input,
    },
    /// Generate or verify the Moore complex M(p).
    Moore {
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        /// Run the verification report (on FILE if given, else on the generated complex).
        #[arg(long)]
        verify: bool,
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
    },
    /// Tor and products from the Koszul complex.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        fields: Fields,
        /// Include the non-zero pairing ranks.
        #[arg(long)]
        pairings: bool,
    },
}

struct Ctx {
    limits: ScanLimits,
    timing: bool,
    started: Instant,
}

impl Ctx {
    fn finish(&self, mut report: Value) -> Value {
        if self.timing {
            report["timing_ms"] = json!(self.started.elapsed().as_millis() as u64);
        }
        report
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        if std::io::stdin().is_terminal() {
            eprintln!("reading complex from standard input");
        }
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(input: &Input) -> Result<(String, SimplicialComplex)> {
    if let Some(name) = &input.fixture {
        let k = catalog::by_name(name).with_context(|| format!("unknown fixture {name:?}"))?;
        return Ok((name.clone(), k));
    }
    let path = input.file.as_ref().expect("clap requires a file or a fixture");
    let text = read_file(path)?;
    let k = io::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((path.display().to_string(), k))
}

fn parse_set(s: &str) -> Result<VertexSet> {
    let mut out = VertexSet::EMPTY;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().with_context(|| format!("invalid label {tok:?}"))?;
        if v == 0 || v > golodkit_core::vertex_set::MAX_VERTICES {
            bail!("label {v} out of range");
        }
        out = out.with(v);
    }
    Ok(out)
}

fn identify(source: &str, k: &SimplicialComplex) -> Value {
    let digest = Sha256::digest(io::normalized_bytes(k));
    json!({
        "source": source,
        "m": k.m(),
        "vertices": k.vertices().len(),
        "facets": k.facets().len(),
        "dim": k.dim(),
        "f_vector": k.f_vector(),
        "sha256": hex::encode(digest),
    })
}

fn header(command: &str, source: &str, k: &SimplicialComplex) -> Value {
    json!({ "schema_version": SCHEMA_VERSION, "command": command, "input": identify(source, k) })
}

fn homology_json(k: &SimplicialComplex, fields: &[FieldSpec]) -> Value {
    let betti: serde_json::Map<String, Value> =
        fields.iter().map(|&f| (f.to_string(), json!(reduced_betti(k, f).values()))).collect();
    json!({ "integral": integral_homology(k), "reduced_betti": betti })
}

fn chordal_json(k: &SimplicialComplex) -> Value {
    let (chordal, peo) = is_chordal(&k.one_skeleton());
    json!({ "chordal": chordal, "elimination_ordering": peo })
}

fn verdicts_json(
    ctx: &Ctx,
    k: &SimplicialComplex,
    fields: &[FieldSpec],
    witness: bool,
) -> (Value, bool) {
    let opts = ScanOptions { limits: ctx.limits, ..ScanOptions::default() };
    let mut any_not_golod = false;
    let list: Vec<Value> = fields
        .iter()
        .map(|&f| {
            let v = golod_verdict_with(k, f, &opts);
            any_not_golod |= v.is_not_golod();
            let mut out = json!({
                "field": f,
                "status": status_name(&v.status),
                "verdict": v.label(),
                "reason": v.reason(),
                "path": v.path,
                "notes": v.notes,
            });
            if let Some(w) = v.witness() {
                out["witness"] = if witness {
                    serde_json::to_value(w).expect("serializable")
                } else {
                    json!({ "i": w.i, "j": w.j, "p": w.p, "q": w.q, "zk_degrees": w.zk_degrees() })
                };
            }
            out
        })
        .collect();
    (Value::Array(list), any_not_golod)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx {
        limits: if cli.force { ScanLimits::forced() } else { ScanLimits::default() },
        timing: cli.timing,
        started: Instant::now(),
    };
    let default_fields = [FieldSpec::Rationals, FieldSpec::Prime(2)];
    let mut status = ExitCode::SUCCESS;
    let report = match cli.command {
        Command::Check { input, fields, expect_golod, moore } => {
            let (src, k) = load(&input)?;
            let fields = fields.or(&default_fields);
            let mut r = header("check", &src, &k);
            r["surface"] = json!(k.is_surface_triangulation());
            r["chordal"] = chordal_json(&k);
            let half = ((k.dim().max(0) + 1) / 2) as usize;
            r["neighborly"] = json!({
                "one_neighborly": k.is_k_neighborly(1),
                "half_dim": half,
                "half_dim_neighborly": k.is_k_neighborly(half),
            });
            r["homology"] = homology_json(&k, &fields);
            let tables: Vec<Value> = fields
                .iter()
                .map(|&f| {
                    hochster_table_with(&k, f, &ctx.limits)
                        .map(|t| json!({ "field": f, "entries": table_entries(&t), "poincare": t.poincare() }))
                        .unwrap_or_else(|e| json!({ "field": f, "error": e.to_string() }))
                })
                .collect();
            r["hochster"] = Value::Array(tables);
            let (verdicts, not_golod) = verdicts_json(&ctx, &k, &fields, true);
            r["verdicts"] = verdicts;
            if let Some(p) = moore {
                r["moore"] = serde_json::to_value(verify_moore(&k, p)?)?;
            }
            if expect_golod && not_golod {
                status = ExitCode::from(2);
            }
            r
        }
        Command::Homology { input, fields } => {
            let (src, k) = load(&input)?;
            let mut r = header("homology", &src, &k);
            r["homology"] = homology_json(&k, &fields.or(&default_fields));
            r
        }
        Command::Hochster { input, fields, format } => {
            let (src, k) = load(&input)?;
            let mut tables = Vec::new();
            for f in fields.or(&[FieldSpec::Rationals]) {
                tables.push(hochster_table_with(&k, f, &ctx.limits)?);
            }
            if let Format::Text = format {
                for t in &tables {
                    print!("{}", t.render_text());
                    println!("H^*(Z_K) dims: {:?}", t.poincare().dims);
                }
                return Ok(status);
            }
            let mut r = header("hochster", &src, &k);
            r["tables"] = json!(tables.iter().map(|t| json!({ "table": t, "poincare": t.poincare() })).collect::<Vec<_>>());
            r
        }
        Command::Golod { input, fields, witness, all_pairs, expect_golod } => {
            let (src, k) = load(&input)?;
            let fields = fields.or(&[FieldSpec::Rationals]);
            let mut r = header("golod", &src, &k);
            let (verdicts, not_golod) = verdicts_json(&ctx, &k, &fields, witness);
            r["verdicts"] = verdicts;
            if all_pairs {
                let opts = ScanOptions { limits: ctx.limits, all_pairs: true, ..ScanOptions::default() };
                let mut scans = Vec::new();
                for &f in &fields {
                    scans.push(scan_products(&k, f, &opts)?);
                }
                r["all_pairs"] = if witness {
                    serde_json::to_value(&scans)?
                } else {
                    json!(scans
                        .iter()
                        .map(|s| json!({
                            "field": s.field,
                            "pairs": s.witnesses.iter().map(|w| json!({ "i": w.i, "j": w.j, "p": w.p, "q": w.q, "rank": w.pairing_rank })).collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>())
                };
            }
            if expect_golod && not_golod {
                status = ExitCode::from(2);
            }
            r
        }
        Command::Products { input, fields, i, j, p, q } => {
            let (src, k) = load(&input)?;
            let fields = fields.or(&[FieldSpec::Rationals]);
            let mut r = header("products", &src, &k);
            if let (Some(i), Some(j), Some(p), Some(q)) = (i, j, p, q) {
                let (i, j) = (parse_set(&i)?, parse_set(&j)?);
                let mut maps = Vec::new();
                for &f in &fields {
                    maps.push(cross_product_map(&k, i, j, p, q, f)?);
                }
                r["maps"] = serde_json::to_value(maps)?;
            } else {
                let opts = ScanOptions { limits: ctx.limits, all_pairs: true, ..ScanOptions::default() };
                let mut scans = Vec::new();
                for &f in &fields {
                    scans.push(scan_products(&k, f, &opts)?);
                }
                r["scans"] = serde_json::to_value(scans)?;
            }
            r
        }
        Command::Chordal { input, order } => {
            let (src, k) = load(&input)?;
            let mut r = header("chordal", &src, &k);
            r["chordal"] = chordal_json(&k);
            if let Some(order) = order {
                let ord: Vec<usize> = order
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().with_context(|| format!("invalid label {t:?}")))
                    .collect::<Result<_>>()?;
                r["ordering"] = json!({
                    "ordering": ord,
                    "perfect": verify_peo(&k.one_skeleton(), &EliminationOrdering(ord.clone()))?,
                });
            }
            r
        }
        Command::Surface { input } => {
            let (src, k) = load(&input)?;
            let mut r = header("surface", &src, &k);
            r["report"] = serde_json::to_value(surface_golod_equivalence_report(&k)?)?;
            r
        }
        Command::Moore { p, emit, verify, file } => {
            let generated = moore_complex(p)?;
            if let Some(emit) = emit {
                match emit {
                    Emit::Json => println!("{}", io::to_json_named(&generated, &format!("M({p})"))),
                    Emit::Txt => print!("{}", io::to_text(&generated)),
                }
                if !verify {
                    return Ok(status);
                }
            }
            let (src, k) = match file {
                Some(path) => (path.display().to_string(), io::parse(&read_file(&path)?)?),
                None => (format!("moore-{p}"), generated),
            };
            let mut r = header("moore", &src, &k);
            let report = verify_moore(&k, p)?;
            if !report.passed() {
                status = ExitCode::from(1);
            }
            r["report"] = serde_json::to_value(report)?;
            r
        }
        Command::Oracle { input, fields, pairings } => {
            let (src, k) = load(&input)?;
            let mut r = header("oracle", &src, &k);
            let mut tables = Vec::new();
            for f in fields.or(&[FieldSpec::Rationals]) {
                let t = koszul_tor_table_with(&k, f, &ctx.limits)?;
                let mut entry = json!({
                    "table": t,
                    "poincare": t.poincare(),
                    "product_nontrivial": koszul_product_nontrivial(&k, f)?,
                });
                if pairings {
                    let ranks = koszul_pairing_ranks(&k, f)?;
                    entry["pairings"] = json!(ranks
                        .iter()
                        .map(|(&(t, t2, i, i2), &rank)| json!({ "t": t, "t2": t2, "i": i, "i2": i2, "rank": rank }))
                        .collect::<Vec<_>>());
                }
                tables.push(entry);
            }
            r["tables"] = Value::Array(tables);
            r
        }
    };
    println!("{}", serde_json::to_string_pretty(&ctx.finish(report))?);
    Ok(status)
}

fn status_name(s: &GolodStatus) -> &'static str {
    match s {
        GolodStatus::GolodCertified(_) => "golod_certified",
        GolodStatus::NotGolod(_) => "not_golod",
        GolodStatus::Inconclusive(_) => "inconclusive",
    }
}

fn table_entries(t: &golodkit_core::TorTable) -> Value {
    json!(t.entries.iter().map(|(&(i, j), &d)| json!({ "i": i, "j": j, "dim": d })).collect::<Vec<_>>())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
