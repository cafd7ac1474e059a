use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Args, Parser, Subcommand};
use pathmodel::hecke_search::{dilation_sweep, hecke_exists};
use pathmodel::num::format_ivec;
use pathmodel::operators::generate_f_orbit;
use pathmodel::paths::{delta_length, PathFile};
use pathmodel::predicates::{
    block_lengths, is_generalized_hecke, is_generalized_ls1, is_hecke_path, is_ls_path, satisfies_chain_condition,
};
use pathmodel::saturation::{minuscule_nodes, saturation_scan, ScanConfig, CSV_HEADER};
use pathmodel::tensor::{decompose_paths, dim, oracle_decompose, DecompositionTable};
use pathmodel::{Error, Path, RootSystem, Vector};
use serde_json::json;

const DEFAULT_PATH_BOUND: usize = 2_000_000;

#[derive(Parser)]
#[command(
    name = "pathmodel",
    version,
    about = "Path models, tensor decompositions and saturation scans for root systems"
)]
struct Cli {
    /// Refuse Weyl-group enumeration above this order.
    #[arg(long, global = true)]
    weyl_order_bound: Option<u128>,
    /// Worker threads for scans (0 = all cores).
    #[arg(long, global = true, env = "PATHMODEL_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, highest root, saturation factor and Weyl group order.
    RootInfo { system: String },
    /// Dimension of the irreducible representation with highest weight COORDS.
    Dim { system: String, coords: String },
    /// Decompose V_A ⊗ V_B.
    Decompose(DecomposeArgs),
    /// List the LS paths of shape LAMBDA.
    LsPaths {
        system: String,
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_PATH_BOUND)]
        bound: usize,
    },
    /// Evaluate a path predicate on a JSON path file.
    CheckPath(CheckArgs),
    /// Search for a Hecke path from A to C of Δ-length B.
    HeckeExists {
        system: String,
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        denom_bound: Option<u64>,
    },
    /// Check that k_R times every generalized Hecke path with the given blocks is generalized LS.
    DilationSweep {
        system: String,
        #[arg(required = true)]
        lambdas: Vec<String>,
        #[arg(long, default_value_t = 2)]
        coord_bound: i64,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Test saturation with constant K on dominant triples.
    SaturationScan {
        system: String,
        #[arg(long, default_value_t = 2)]
        coord_bound: i64,
        #[arg(long, default_value_t = 3)]
        n_max: i64,
        /// Defaults to k_R².
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("method").args(["oracle", "paths", "both"])))]
struct DecomposeArgs {
    system: String,
    a: String,
    b: String,
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    paths: bool,
    #[arg(long)]
    both: bool,
    /// Emit CSV rows instead of text.
    #[arg(long)]
    csv: bool,
    #[arg(long, default_value_t = DEFAULT_PATH_BOUND)]
    bound: usize,
}

#[derive(Args)]
#[command(group(ArgGroup::new("predicate").required(true).args(["ls", "hecke", "chain", "gen_ls", "gen_hecke"])))]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    ls: bool,
    #[arg(long)]
    hecke: bool,
    #[arg(long)]
    chain: bool,
    #[arg(long)]
    gen_ls: bool,
    #[arg(long)]
    gen_hecke: bool,
}

enum Outcome {
    True,
    False,
}

fn system(cli: &Cli, s: &str) -> pathmodel::Result<RootSystem> {
    let rs = RootSystem::parse(s)?;
    Ok(match cli.weyl_order_bound {
        Some(b) => rs.with_weyl_order_bound(b),
        None => rs,
    })
}

fn vector(rs: &RootSystem, s: &str) -> pathmodel::Result<Vector> {
    let v = Vector::parse(s)?;
    rs.check_dim(&v)?;
    Ok(v)
}

fn print_table(t: &DecompositionTable, label: &str, csv: bool) {
    if csv {
        print!("{}", t.to_csv());
        return;
    }
    println!("{label}:");
    for (g, n) in &t.entries {
        println!("  {}  {n}", format_ivec(g));
    }
}

fn root_info(cli: &Cli, s: &str) -> anyhow::Result<Outcome> {
    let rs = system(cli, s)?;
    let theta: Vec<String> = rs
        .highest_root_coeffs()
        .iter()
        .zip(rs.components())
        .map(|(c, &(start, _))| {
            c.iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(i, &m)| if m == 1 { format!("α{}", start + i + 1) } else { format!("{m}α{}", start + i + 1) })
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    let minuscule: Vec<usize> = minuscule_nodes(&rs).iter().map(|i| i + 1).collect();
    if cli.json {
        let v = json!({
            "system": rs.cartan_type().to_string(),
            "rank": rs.rank(),
            "cartan_matrix": rs.cartan_matrix(),
            "positive_roots": rs.num_positive_roots(),
            "highest_root": rs.highest_root_coeffs(),
            "marks": rs.marks(),
            "saturation_factor": rs.saturation_factor(),
            "weyl_order": rs.weyl_order().to_string(),
            "index_of_connection": rs.index_of_connection(),
            "minuscule_nodes": minuscule,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("system: {}", rs.cartan_type());
        println!("rank: {}", rs.rank());
        println!("cartan matrix:");
        for row in rs.cartan_matrix() {
            println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
        }
        println!("positive roots: {}", rs.num_positive_roots());
        println!("θ = {}", theta.join(", "));
        println!("marks: {}", format_ivec(&rs.marks()));
        println!("k_R = {}", rs.saturation_factor());
        println!("|W| = {}", rs.weyl_order());
        println!("index of connection: {}", rs.index_of_connection());
        println!("minuscule nodes: {minuscule:?}");
    }
    Ok(Outcome::True)
}

fn decompose(cli: &Cli, a: &DecomposeArgs) -> anyhow::Result<Outcome> {
    let rs = system(cli, &a.system)?;
    let (x, y) = (vector(&rs, &a.a)?, vector(&rs, &a.b)?);
    let want_oracle = a.oracle || a.both || !a.paths;
    let want_paths = a.paths || a.both;
    let oracle = want_oracle.then(|| oracle_decompose(&rs, &x, &y)).transpose()?;
    let paths = want_paths.then(|| decompose_paths(&rs, &x, &y, a.bound)).transpose()?;
    let equal = match (&oracle, &paths) {
        (Some(o), Some(p)) => Some(o == p),
        _ => None,
    };
    if cli.json {
        let parse = |t: &Option<DecompositionTable>| -> anyhow::Result<serde_json::Value> {
            Ok(match t {
                Some(t) => serde_json::from_str(&t.to_json())?,
                None => serde_json::Value::Null,
            })
        };
        let v = json!({ "oracle": parse(&oracle)?, "paths": parse(&paths)?, "equal": equal });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        if let Some(t) = &oracle {
            print_table(t, "oracle", a.csv);
        }
        if let Some(t) = &paths {
            print_table(t, "paths", a.csv);
        }
        if let Some(e) = equal {
            if !a.csv {
                println!("equal: {e}");
            }
        }
    }
    Ok(if equal == Some(false) { Outcome::False } else { Outcome::True })
}

fn ls_paths(cli: &Cli, s: &str, lambda: &str, bound: usize) -> anyhow::Result<Outcome> {
    let rs = system(cli, s)?;
    let l = vector(&rs, lambda)?;
    if !l.is_dominant() || !l.is_integral() {
        return Err(Error::InvalidInput(format!("{l} is not a dominant coweight")).into());
    }
    let paths = generate_f_orbit(&rs, &Path::pi(&l), bound)?;
    if cli.json {
        let files: Vec<PathFile> = paths.iter().map(|p| PathFile::from_path(&rs, p)).collect();
        println!("{}", serde_json::to_string_pretty(&json!({ "count": paths.len(), "paths": files }))?);
    } else {
        println!("{} LS paths of shape {l}", paths.len());
        for p in &paths {
            println!("  {p}");
        }
    }
    Ok(Outcome::True)
}

fn check_path(cli: &Cli, a: &CheckArgs) -> anyhow::Result<Outcome> {
    let text = std::fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let file = PathFile::parse(&text)?;
    let rs = system(cli, &file.system)?;
    let p: Path = file.to_path(rs.rank())?;
    let verdict = if a.ls {
        is_ls_path(&rs, &p, &delta_length(&rs, &p))?
    } else if a.hecke {
        is_hecke_path(&rs, &p)?
    } else if a.chain {
        satisfies_chain_condition(&rs, &p)?
    } else if a.gen_ls {
        is_generalized_ls1(&rs, &p, &block_lengths(&rs, &p))?
    } else {
        is_generalized_hecke(&rs, &p)?
    };
    if cli.json {
        println!("{}", verdict.to_json());
    } else {
        println!("{}: {}", verdict.predicate, verdict.verdict);
        if let Some(r) = &verdict.reason {
            println!("reason: {r}");
        }
        for b in &verdict.breaks {
            println!("  t = {}  p(t) = ({})  {}", b.time, b.point.join(","), if b.ok { "ok" } else { "fails" });
        }
    }
    Ok(if verdict.verdict { Outcome::True } else { Outcome::False })
}

fn hecke(cli: &Cli, s: &str, a: &str, b: &str, c: &str, bound: Option<u64>) -> anyhow::Result<Outcome> {
    let rs = system(cli, s)?;
    let r = hecke_exists(&rs, &vector(&rs, a)?, &vector(&rs, b)?, &vector(&rs, c)?, bound)?;
    if cli.json {
        println!("{}", r.to_json(&rs));
    } else {
        println!("exists: {}", r.exists);
        println!("denominator bound: {}", r.denominator_bound);
        println!("complete: {} ({} candidates pruned, {} states explored)", r.complete, r.pruned, r.explored);
        if let Some(w) = &r.witness {
            println!("witness (from {a}):");
            println!("{}", PathFile::from_path(&rs, w).to_json());
        }
    }
    Ok(if r.exists { Outcome::True } else { Outcome::False })
}

fn sweep(cli: &Cli, s: &str, lambdas: &[String], coord_bound: i64, limit: usize) -> anyhow::Result<Outcome> {
    let rs = system(cli, s)?;
    let blocks = lambdas.iter().map(|l| vector(&rs, l)).collect::<pathmodel::Result<Vec<_>>>()?;
    let r = dilation_sweep(&rs, &blocks, coord_bound, limit)?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&r)?);
    } else {
        println!("paths checked: {}", r.paths_checked);
        println!("not generalized LS before dilation: {}", r.need_dilation);
        println!("counterexamples: {}", r.counterexamples.len());
        for c in &r.counterexamples {
            println!("{}", c.to_json());
        }
    }
    Ok(if r.counterexamples.is_empty() { Outcome::True } else { Outcome::False })
}

fn scan(
    cli: &Cli,
    s: &str,
    coord_bound: i64,
    n_max: i64,
    k: Option<i64>,
    csv: Option<&PathBuf>,
) -> anyhow::Result<Outcome> {
    let rs = system(cli, s)?;
    let kr = rs.saturation_factor() as i64;
    let cfg = ScanConfig { coord_bound, n_max, k: k.unwrap_or(kr * kr), workers: cli.workers };
    let r = saturation_scan(&rs, &cfg)?;
    if let Some(path) = csv {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        w.write_record(CSV_HEADER)?;
        for row in r.csv_rows() {
            w.write_record(&row)?;
        }
        w.flush()?;
    }
    if cli.json {
        println!("{}", r.to_json());
    } else {
        println!("system: {}  coord_bound: {}  N_max: {}  k: {}", r.system, r.coord_bound, r.n_max, r.k);
        println!("backing: {:?}{}", r.evidence, if r.extended { " (extended)" } else { "" });
        println!("triples scanned: {}", r.triples_scanned);
        println!("live for some N: {}", r.triples_with_some_n_nonzero);
        println!("violations: {}", r.violations.len());
        for v in &r.violations {
            println!("  {} {} {}", format_ivec(&v.alpha), format_ivec(&v.beta), format_ivec(&v.gamma));
        }
        println!("runtime: {:.2}s", r.runtime.as_secs_f64());
    }
    Ok(if r.violations.is_empty() { Outcome::True } else { Outcome::False })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::RootInfo { system: s } => root_info(cli, s),
        Command::Dim { system: s, coords } => {
            let rs = system(cli, s)?;
            let d = dim(&rs, &vector(&rs, coords)?)?;
            if cli.json {
                println!("{}", json!({ "dim": d.to_string() }));
            } else {
                println!("{d}");
            }
            Ok(Outcome::True)
        }
        Command::Decompose(a) => decompose(cli, a),
        Command::LsPaths { system: s, lambda, bound } => ls_paths(cli, s, lambda, *bound),
        Command::CheckPath(a) => check_path(cli, a),
        Command::HeckeExists { system: s, a, b, c, denom_bound } => hecke(cli, s, a, b, c, *denom_bound),
        Command::DilationSweep { system: s, lambdas, coord_bound, limit } => {
            sweep(cli, s, lambdas, *coord_bound, *limit)
        }
        Command::SaturationScan { system: s, coord_bound, n_max, k, csv } => {
            scan(cli, s, *coord_bound, *n_max, *k, csv.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::True) => ExitCode::SUCCESS,
        Ok(Outcome::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(err) if err.is_refusal() => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
