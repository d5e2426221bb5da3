use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kholes::io::{read_points_file, write_points, OrderTypeDb};
use kholes::report::Envelope;
use kholes::suites::{run_suite, SuiteConfig, SUITES};
use kholes_core::bounds::{convex_max_threshold, dc_khole_lower_factor, khole_upper_expression, published_bounds};
use kholes_core::combin::binomial_big;
use kholes_core::census::{count_gons, count_islands, crossing_number, polygonization_count};
use kholes_core::generators::{Family, GeneratorSpec};
use kholes_core::grid::*;
use kholes_core::relations::*;
use kholes_core::GonClass;
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "kholes", version, about = "Exact k-gon and k-hole enumeration for planar point sets")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Abort with exit code 2 after this many seconds.
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
    /// Leave runtimes out of reports so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated point set in the text format.
    Generate(GenerateArgs),
    /// Count gons, holes or islands.
    Count(CountArgs),
    /// Rectilinear crossing number of a point set.
    Crossing(InArg),
    /// Number of simple polygons through all points.
    Polygonizations(InArg),
    /// Integer grid counters.
    Grid(GridArgs),
    /// Linear relations between gon counts and crossings.
    Relations(RelationsArgs),
    /// Closed-form bounds and thresholds.
    Bounds(BoundsArgs),
    /// Run experiment suites; exits 0 iff every executed check passes.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    /// Number of points (all families but the grids).
    #[arg(long)]
    n: Option<usize>,
    /// Grid side for grid and perturbed-grid.
    #[arg(long)]
    m: Option<usize>,
    /// Hole size for cluster-fig5.
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Box side for random sets (default max(n², 1024)).
    #[arg(long = "box")]
    box_side: Option<i64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InArg {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objects {
    Gons,
    Holes,
    Islands,
}

impl Objects {
    fn as_str(self) -> &'static str {
        match self {
            Objects::Gons => "gons",
            Objects::Holes => "holes",
            Objects::Islands => "islands",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "general")]
    class: GonClass,
    #[arg(long, value_enum, default_value = "holes")]
    objects: Objects,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridOp {
    Prime4holes,
    Rowholes,
    Segtriangles,
    PhiCheck,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    op: GridOp,
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Allow prime-hole sizes above the default cap.
    #[arg(long)]
    allow_large_k: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    Tight,
    Upper,
    Lower,
}

#[derive(Args)]
struct RelationsArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "general")]
    class: GonClass,
    /// grid:M, random:N:SEED or db:FILE.
    #[arg(long, default_value = "grid:6")]
    strategy: String,
    #[arg(long, value_enum, default_value = "tight")]
    objective: Objective,
    /// Crossing constant for upper and lower objectives.
    #[arg(long, default_value = "0.379972")]
    c4: String,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    n: Option<u64>,
    /// Number of non-empty triangles.
    #[arg(long = "T")]
    t: Option<u64>,
    /// Point set for the diagnostic count of k-tuples that are not convex k-holes.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (default: all).
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suites: Vec<String>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Samples per run for the 7-point profile space; 0 skips it.
    #[arg(long, default_value_t = 300_000)]
    k7_samples: u64,
    /// 9-point order-type database for the optional suite.
    #[arg(long)]
    db9: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(secs) = cli.timeout_secs {
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            eprintln!("error: timed out after {secs} s");
            std::process::exit(2);
        });
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: serde::Serialize>(cli: &Cli, command: &str, params: Value, results: T, start: Instant) {
    let rt = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    // a closed pipe (`| head`) is not an error
    let _ = writeln!(io::stdout().lock(), "{}", Envelope::new(command, params, results, rt).to_json());
}

fn rational(r: &BigRational) -> Value {
    json!({ "exact": format_mixed(r), "decimal": to_decimal(r, 6) })
}

/// Returns whether every executed check passed.
fn run(cli: Cli) -> Result<bool> {
    let start = Instant::now();
    match &cli.cmd {
        Cmd::Generate(a) => {
            let size = match a.family {
                Family::Grid | Family::PerturbedGrid => a.m.or(a.n).context("--m is required for grids")?,
                _ => a.n.context("--n is required")?,
            };
            let mut spec = GeneratorSpec::new(a.family, size, cli.seed);
            spec.k = a.k;
            spec.box_side = a.box_side.unwrap_or(0);
            let s = spec.generate()?;
            let comment = format!("family {} size {} seed {}", a.family.as_str(), size, cli.seed);
            match &a.out {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?);
                    write_points(&mut w, &s, Some(&comment))?;
                    w.flush()?;
                }
                None => write_points(io::stdout().lock(), &s, Some(&comment))?,
            }
        }
        Cmd::Count(a) => {
            let s = read_points_file(&a.input)?;
            let count = match a.objects {
                Objects::Islands => count_islands(&s, a.k)?.to_string(),
                o => count_gons(&s, a.k, a.class, matches!(o, Objects::Holes))?.count.to_string(),
            };
            let class = match a.objects {
                Objects::Islands => "any",
                _ => a.class.as_str(),
            };
            if a.format == Format::Csv {
                println!("n,k,class,objects,count");
                println!("{},{},{},{},{}", s.len(), a.k, class, a.objects.as_str(), count);
            } else {
                let res = json!({ "n": s.len(), "k": a.k, "class": class, "objects": a.objects.as_str(), "count": count });
                print_json(&cli, "count", json!({ "in": a.input, "k": a.k }), res, start);
            }
        }
        Cmd::Crossing(a) => {
            let s = read_points_file(&a.input)?;
            let cr = crossing_number(&s)?;
            print_json(&cli, "crossing", json!({ "in": a.input }), json!({ "n": s.len(), "crossing_number": cr.to_string() }), start);
        }
        Cmd::Polygonizations(a) => {
            let s = read_points_file(&a.input)?;
            let c = polygonization_count(&s)?;
            print_json(&cli, "polygonizations", json!({ "in": a.input }), json!({ "n": s.len(), "count": c.to_string() }), start);
        }
        Cmd::Grid(a) => return grid(&cli, a, start),
        Cmd::Relations(a) => relations(&cli, a, start)?,
        Cmd::Bounds(a) => bounds(&cli, a, start)?,
        Cmd::Verify(a) => {
            let names: Vec<&str> = if a.suites.is_empty() { SUITES.to_vec() } else { a.suites.iter().map(String::as_str).collect() };
            let cfg = SuiteConfig {
                seed: cli.seed,
                k7_samples: a.k7_samples,
                db9: a.db9.clone().or_else(|| SuiteConfig::default().db9),
                timing: !cli.no_timing,
            };
            let mut reports = vec![];
            for name in &names {
                eprintln!("running {name}");
                reports.push(run_suite(name, &cfg)?);
            }
            let pass = reports.iter().all(|r| r.passed());
            let rt = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
            let params = json!({ "suites": names, "seed": cli.seed, "k7_samples": a.k7_samples });
            let text = Envelope::new("verify", params, &reports, rt).to_json();
            match &a.out {
                Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))?,
                None => println!("{text}"),
            }
            return Ok(pass);
        }
    }
    Ok(true)
}

fn grid(cli: &Cli, a: &GridArgs, start: Instant) -> Result<bool> {
    let g = GridSpec::new(a.m)?;
    let params = json!({ "m": a.m, "k": a.k });
    let (command, res, ok) = match a.op {
        GridOp::Prime4holes => {
            let k = a.k;
            let c = count_prime_k_holes(g, k, a.allow_large_k)?;
            if a.format == Format::Csv {
                println!("n,k,class,objects,count");
                println!("{},{k},general,prime-holes,{c}", g.len());
                return Ok(true);
            }
            ("grid prime4holes", json!({ "m": a.m, "k": k, "count": c.to_string() }), true)
        }
        GridOp::Rowholes => {
            let r = count_row_structured_prime_holes(g, a.k)?;
            let res = json!({
                "candidates": r.candidates.to_string(),
                "valid": r.valid.to_string(),
                "bound": r.bound.to_string(),
                "violations": r.violations,
                "holds": r.holds(),
            });
            ("grid rowholes", res, r.holds())
        }
        GridOp::Segtriangles => {
            let n = g.len();
            let mut rows = vec![];
            let mut best = 0;
            for i in 0..n {
                for j in i + 1..n {
                    let t = grid_segment_empty_triangles(g, g.point(i), g.point(j))?;
                    best = best.max(t.total());
                    rows.push((g.point(i), g.point(j), t));
                }
            }
            if a.format == Format::Csv {
                println!("px,py,qx,qy,nondegenerate,degenerate");
                for (p, q, t) in rows {
                    println!("{},{},{},{},{},{}", p.0, p.1, q.0, q.1, t.nondegenerate, t.degenerate);
                }
                return Ok(true);
            }
            ("grid segtriangles", json!({ "segments": rows.len(), "max_total": best }), true)
        }
        GridOp::PhiCheck => {
            let c = (a.m / 3) as i64;
            let mut bad = vec![];
            let mut checked = 0u64;
            for x in c..a.m as i64 - c {
                for y in c..a.m as i64 - c {
                    for d in (1..).take_while(|d| 3 * d < a.m as i64) {
                        checked += 1;
                        let got = prime_partners_at_distance(g, (x, y), d)?;
                        if got != 8 * euler_phi(d as u64) {
                            bad.push(json!({ "p": [x, y], "d": d, "count": got }));
                        }
                    }
                }
            }
            let ok = bad.is_empty();
            ("grid phi-check", json!({ "checked": checked, "violations": bad }), ok)
        }
    };
    print_json(cli, command, params, res, start);
    Ok(ok)
}

fn profile_space(k: usize, strategy: &str) -> Result<ProfileSpace> {
    let parts: Vec<&str> = strategy.splitn(3, ':').collect();
    Ok(match parts.as_slice() {
        ["grid", m] => profile_space_grid(k, m.parse().context("grid side")?)?,
        ["random", n, seed] => profile_space_random(k, n.parse().context("sample count")?, seed.parse().context("seed")?)?,
        ["db", file] => {
            let path = PathBuf::from(file);
            let db = OrderTypeDb::open(&path, k, true)?;
            let records = db.records();
            let mut space = ProfileSpace::new(k, Provenance::Database { source: file.to_string(), records });
            for s in db {
                space.insert_set(&s?)?;
            }
            space
        }
        _ => bail!("strategy must be grid:M, random:N:SEED or db:FILE, got {strategy:?}"),
    })
}

fn relations(cli: &Cli, a: &RelationsArgs, start: Instant) -> Result<()> {
    let space = profile_space(a.k, &a.strategy)?;
    let c4 = parse_rational(&a.c4)?;
    let mut res = json!({
        "k": a.k,
        "class": a.class.as_str(),
        "profiles": space.len(),
        "order_types": space.order_types,
        "complete": space.complete,
        "provenance": space.provenance.to_string(),
    });
    let extra = match a.objective {
        Objective::Tight => {
            let r = optimize_tight(&space, a.class)?;
            json!({ "c1": rational(&r.c1), "c2": rational(&r.c2), "x": rational(&r.x), "width": rational(&r.width()) })
        }
        Objective::Upper | Objective::Lower => {
            let b = match a.objective {
                Objective::Upper => optimize_upper(&space, a.class, &c4)?,
                _ => optimize_lower(&space, a.class, &c4)?,
            };
            json!({ "c": rational(&b.c), "x": rational(&b.x), "coefficient": rational(&b.coefficient), "c4": a.c4 })
        }
    };
    res.as_object_mut().expect("object").extend(extra.as_object().expect("object").clone());
    let params = json!({ "k": a.k, "class": a.class.as_str(), "strategy": a.strategy, "c4": a.c4 });
    print_json(cli, "relations", params, res, start);
    Ok(())
}

fn bounds(cli: &Cli, a: &BoundsArgs, start: Instant) -> Result<()> {
    let table = published_bounds(a.k)?;
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            let value = a.n.filter(|&n| n >= r.from_n).and_then(|n| r.expr.eval(n, a.k)).map(|v| rational(&v));
            json!({
                "quantity": format!("{:?}", r.quantity),
                "side": format!("{:?}", r.side),
                "printed": r.printed,
                "from_n": r.from_n,
                "value": value,
                "note": if r.asymptotic() { Some("asymptotic - informational only") } else { None },
            })
        })
        .collect();
    let mut res = json!({ "k": a.k, "published": rows });
    if a.k >= 4 {
        res["convex_max_threshold"] = json!(convex_max_threshold(a.k)?.to_string());
        if let Some(n) = a.n {
            if let Some(t) = a.t {
                res["khole_upper_expression"] = rational(&khole_upper_expression(n, a.k, t)?);
            }
            if let Ok(f) = dc_khole_lower_factor(n, a.k) {
                res["dc_khole_lower_factor"] = json!(f.to_string());
            }
        }
    }
    if let Some(path) = &a.input {
        let s = read_points_file(path)?;
        let holes = count_gons(&s, a.k as usize, GonClass::Convex, true)?.count;
        let tuples = binomial_big(s.len() as u64, a.k);
        res["diagnostic"] = json!({ "n": s.len(), "convex_holes": holes.to_string(), "not_convex_holes": (tuples - holes).to_string() });
    }
    print_json(cli, "bounds", json!({ "k": a.k, "n": a.n, "T": a.t, "in": a.input }), res, start);
    Ok(())
}
