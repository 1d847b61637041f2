//! Command-line front end. All subcommands print to stdout and report
//! through the process exit code: 0 clean, 1 violations found, 2 usage or
//! domain errors, 3 resource guards.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    self, check_fin_b, check_fin_e, check_fin_n, check_inf_b, check_inf_e, check_inf_n,
};
use crate::hexgrid::{finite_grid, VertexSet};
use crate::normalize::normalize;
use crate::perimeter::{self, Region};
use crate::search::{conjecture_scan, profile, Measure, RegionMasks, SampleStream};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hexiso", version, about = "Hexagonal-grid isoperimetry toolkit")]
struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the finite grid sizes against their closed forms
    Grid {
        #[arg(long)]
        radius: u32,
    },
    /// Perimeter measures of a vertex set
    Measure {
        #[arg(long)]
        input: PathBuf,
        /// "infinite" or "finite:R"
        #[arg(long, default_value = "infinite")]
        region: String,
    },
    /// Bad-row elimination of a vertex set
    Normalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        trace: bool,
    },
    /// Run a checker family; exits 1 if any violation is found
    Check(CheckArgs),
    /// Isoperimetric profile over connected classes
    Profile {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        measure: String,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Exact ratio scan of a small finite grid
    Conjecture {
        #[arg(long)]
        radius: u32,
    },
    /// Evaluate one of the scalar functions
    Bounds {
        #[arg(long)]
        eval: String,
        #[arg(long)]
        c: f64,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// connected | random | finite-grid
    #[arg(long)]
    family: String,
    #[arg(long)]
    max_size: usize,
    /// Finite-grid radius (finite-grid family)
    #[arg(long)]
    radius: Option<u32>,
    /// Number of random sets (random family)
    #[arg(long)]
    samples: Option<u64>,
    /// Sampling window radius (random family)
    #[arg(long)]
    window: Option<u32>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn read_vertex_file(path: &PathBuf) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArguments(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArguments(format!("bad JSON in {}: {e}", path.display())))?;
    let arr = value
        .get("vertices")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidArguments("expected {\"vertices\": [[x, y], ...]}".into()))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for item in arr {
        let pair = item.as_array().filter(|p| p.len() == 2);
        let (x, y) = pair
            .and_then(|p| Some((p[0].as_i64()?, p[1].as_i64()?)))
            .ok_or_else(|| Error::InvalidArguments(format!("bad vertex entry {item}")))?;
        pairs.push((x as i32, y as i32));
    }
    VertexSet::from_pairs_strict(&pairs)
}

fn parse_region(s: &str) -> Result<Region> {
    if s == "infinite" {
        return Ok(Region::Infinite);
    }
    if let Some(r) = s.strip_prefix("finite:") {
        let r: u32 = r
            .parse()
            .map_err(|_| Error::InvalidArguments(format!("bad region radius {r:?}")))?;
        return Ok(Region::finite(finite_grid(r)?));
    }
    Err(Error::InvalidArguments(format!(
        "region must be \"infinite\" or \"finite:R\", got {s:?}"
    )))
}

fn set_to_json(w: &VertexSet) -> serde_json::Value {
    serde_json::Value::Array(
        w.iter()
            .map(|v| serde_json::json!([v.x, v.y]))
            .collect(),
    )
}

fn cmd_grid(radius: u32, out: &mut String) -> Result<i32> {
    let grid = finite_grid(radius)?;
    let w = grid.vertices();
    let rep = perimeter::report(w, &Region::Infinite)?;
    let (v, n, e) = (w.len(), rep.n_count, rep.e_count);
    let (ev, en, ee) = (
        (6 * radius * radius) as usize,
        (6 * radius) as usize,
        (6 * radius) as usize,
    );
    let ok = v == ev && n == en && e == ee;
    let json = serde_json::json!({
        "v": v, "n": n, "e": e,
        "expected_v": ev, "expected_n": en, "expected_e": ee,
        "ok": ok,
    });
    writeln!(out, "{json}").unwrap();
    Ok(if ok { 0 } else { 1 })
}

fn cmd_measure(input: &PathBuf, region: &str, out: &mut String) -> Result<i32> {
    let w = read_vertex_file(input)?;
    let region = parse_region(region)?;
    let rep = perimeter::report(&w, &region)?;
    writeln!(out, "{}", rep.to_json()).unwrap();
    Ok(0)
}

fn cmd_normalize(input: &PathBuf, trace: bool, out: &mut String) -> Result<i32> {
    let w = read_vertex_file(input)?;
    let (normalized, tr) = normalize(&w)?;
    let mut json = serde_json::json!({ "vertices": set_to_json(&normalized) });
    if trace {
        json["trace"] = tr.to_json();
    }
    writeln!(out, "{json}").unwrap();
    Ok(0)
}

fn check_inf_all(w: &VertexSet, violations: &mut u64) -> Result<()> {
    let rep = perimeter::report(w, &Region::Infinite)?;
    let k = w.len() as i64;
    for check in [
        check_inf_n(k, rep.n_count as i64)?,
        check_inf_e(k, rep.e_count as i64)?,
        check_inf_b(k, rep.b_count as i64)?,
    ] {
        if !check.holds {
            *violations += 1;
        }
    }
    Ok(())
}

fn cmd_check(args: &CheckArgs, out: &mut String) -> Result<i32> {
    use std::sync::atomic::{AtomicU64, Ordering};
    let mut checked: u64 = 0;
    let mut violations: u64 = 0;
    match args.family.as_str() {
        "connected" => {
            let checked_a = AtomicU64::new(0);
            let violations_a = AtomicU64::new(0);
            crate::search::visit_connected(args.max_size, |c| {
                checked_a.fetch_add(1, Ordering::Relaxed);
                let mut local = 0;
                check_inf_all(&c.to_vertex_set(), &mut local).expect("non-empty set");
                violations_a.fetch_add(local, Ordering::Relaxed);
            })?;
            checked = checked_a.into_inner();
            violations = violations_a.into_inner();
        }
        "random" => {
            let window = args.window.unwrap_or(8);
            let samples = args
                .samples
                .ok_or_else(|| Error::InvalidArguments("random family needs --samples".into()))?;
            use rayon::prelude::*;
            let sizes = args.max_size as u64;
            if sizes == 0 {
                return Err(Error::InvalidArguments("--max-size must be positive".into()));
            }
            // spread the sample budget over sizes 1..=max_size
            let results: Vec<(u64, u64)> = (1..=sizes)
                .into_par_iter()
                .map(|size| {
                    let per = samples / sizes + u64::from(size <= samples % sizes);
                    if per == 0 {
                        return Ok((0, 0));
                    }
                    let stream =
                        SampleStream::new(window, size as usize, per, args.seed ^ size)?;
                    let mut local = (0u64, 0u64);
                    for w in stream.iter() {
                        local.0 += 1;
                        check_inf_all(&w, &mut local.1)?;
                    }
                    Ok(local)
                })
                .collect::<Result<_>>()?;
            for (c, v) in results {
                checked += c;
                violations += v;
            }
        }
        "finite-grid" => {
            let r = args
                .radius
                .ok_or_else(|| Error::InvalidArguments("finite-grid family needs --radius".into()))?;
            let rm = RegionMasks::new(r)?;
            let checked_a = AtomicU64::new(0);
            let violations_a = AtomicU64::new(0);
            crate::search::visit_region_subsets(&rm, args.max_size, |mask| {
                checked_a.fetch_add(1, Ordering::Relaxed);
                let k = mask.count_ones() as i64;
                let bad = [
                    check_fin_n(k, rm.n_in(mask) as i64),
                    check_fin_e(k, rm.e_in(mask) as i64),
                    check_fin_b(k, rm.b_in(mask) as i64),
                ]
                .into_iter()
                .filter(|c| !c.as_ref().map(|c| c.holds).unwrap_or(false))
                .count() as u64;
                violations_a.fetch_add(bad, Ordering::Relaxed);
            })?;
            checked = checked_a.into_inner();
            violations = violations_a.into_inner();
        }
        other => {
            return Err(Error::InvalidArguments(format!(
                "unknown family {other:?}; expected connected | random | finite-grid"
            )))
        }
    }
    let json = serde_json::json!({
        "family": args.family,
        "checked": checked.to_string(),
        "violations": violations.to_string(),
    });
    writeln!(out, "{json}").unwrap();
    Ok(if violations == 0 { 0 } else { 1 })
}

fn cmd_profile(max_size: usize, measure: &str, format: &str, out: &mut String) -> Result<i32> {
    let measure = Measure::parse(measure)?;
    let rows = profile(max_size, measure)?;
    match format {
        "csv" => {
            writeln!(out, "n,measure,min,witness").unwrap();
            for row in &rows {
                let witness: Vec<String> = row
                    .argmin
                    .vertices()
                    .iter()
                    .map(|v| format!("{}:{}", v.x, v.y))
                    .collect();
                writeln!(
                    out,
                    "{},{},{},{}",
                    row.n,
                    row.measure.letter(),
                    row.min_value,
                    witness.join(";")
                )
                .unwrap();
            }
        }
        "json" => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "n": row.n,
                        "measure": row.measure.letter().to_string(),
                        "min": row.min_value,
                        "witness": set_to_json(&row.argmin.to_vertex_set()),
                        "connected_only": row.connected_only,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(items)).unwrap();
        }
        other => {
            return Err(Error::InvalidArguments(format!(
                "unknown format {other:?}; expected csv | json"
            )))
        }
    }
    Ok(0)
}

fn cmd_conjecture(radius: u32, out: &mut String) -> Result<i32> {
    let results = conjecture_scan(radius)?;
    let json: Vec<serde_json::Value> = results.iter().map(|s| s.to_json()).collect();
    writeln!(out, "{}", serde_json::Value::Array(json)).unwrap();
    Ok(0)
}

fn cmd_bounds(eval: &str, c: f64, out: &mut String) -> Result<i32> {
    let value = match eval {
        "f" => format!("{:.12}", bounds::f(c)?),
        "g" => format!("{:.12}", bounds::g(c)),
        "rc" => bounds::r_threshold(c)?.to_string(),
        other => {
            return Err(Error::InvalidArguments(format!(
                "unknown function {other:?}; expected f | g | rc"
            )))
        }
    };
    let json = serde_json::json!({ "eval": eval, "c": c, "value": value });
    writeln!(out, "{json}").unwrap();
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Grid { radius } => cmd_grid(*radius, out),
        Command::Measure { input, region } => cmd_measure(input, region, out),
        Command::Normalize { input, trace } => cmd_normalize(input, *trace, out),
        Command::Check(args) => cmd_check(args, out),
        Command::Profile {
            max_size,
            measure,
            format,
        } => cmd_profile(*max_size, measure, format, out),
        Command::Conjecture { radius } => cmd_conjecture(*radius, out),
        Command::Bounds { eval, c } => cmd_bounds(eval, *c, out),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceGuard(_) | Error::NonTermination(_) => 3,
        _ => 2,
    }
}

/// Parses and runs one invocation; returns (exit code, stdout text).
/// Diagnostics go to the error stream directly.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return (code, String::new());
        }
    };
    let mut out = String::new();
    let mut run_it = || dispatch(&cli, &mut out);
    let result = match cli.threads {
        None => run_it(),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run_it),
            Err(e) => Err(Error::InvalidArguments(format!("bad thread count: {e}"))),
        },
    };
    match result {
        Ok(code) => (code, out),
        Err(e) => {
            eprintln!("error: {e}");
            (exit_code_for(&e), out)
        }
    }
}
