//! `favdist` — construct, verify, bound, search, and detect
//! favourite-distance digraphs on 3D point sets.
//!
//! Exit codes are stable across subcommands: 0 success/verified,
//! 1 verification failure, 2 invalid input or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use favdist::{
    build_digraph, build_extremal, build_hexagon_variant, detect_suspension, extremal_arc_count,
    f3_bounds, hexagon_arc_count, hexagon_split, local_search, newman_enumerate, optimal_radii,
    square_split, verify_suspension_counts, CountReport, DetectError, InitMode, PointSet3,
    SearchConfig, SuspensionError, Vec3, DEFAULT_TOL,
};

mod files;
use files::PointSetFile;

#[derive(Parser)]
#[command(name = "favdist", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Inscribed squares of radius sqrt(2): four arcs per circle vertex.
    Square,
    /// Inscribed unit-side hexagons: three arcs per circle vertex.
    Hexagon,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitArg {
    Random,
    Suspension,
    PerturbedSuspension,
}

#[derive(Subcommand)]
enum Command {
    /// Build a suspension construction and write it as a point-set file.
    Construct {
        /// Number of points (at least 13).
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Variant::Square)]
        variant: Variant,
        /// Output JSON path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Recount a point-set file and check the structural bounds.
    Verify {
        /// Input JSON path; absent radii are filled by the mode oracle.
        #[arg(long = "in")]
        input: PathBuf,
        /// Relative distance tolerance for arcs, detection, and counting.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Write a CSV of the bound sandwich and constructed counts over a range.
    BoundsTable {
        /// First row of the table (at least 1).
        #[arg(long)]
        n_min: u64,
        /// Last row of the table (at most 1000000).
        #[arg(long)]
        n_max: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Anneal point positions for a high arc count; emits a point-set JSON.
    Search {
        /// Number of points (at least 3).
        #[arg(long)]
        n: usize,
        /// Annealing iterations per restart.
        #[arg(long, default_value_t = 2000)]
        iters: u32,
        /// Independent restarts; the best result wins.
        #[arg(long, default_value_t = 4)]
        restarts: u32,
        /// RNG seed (required: runs are reproducible, never wall-clock).
        #[arg(long)]
        seed: u64,
        /// Starting configuration for each restart.
        #[arg(long, value_enum, default_value_t = InitArg::Random)]
        init: InitArg,
    },
    /// Recover circle/axis structure from a point-set file.
    Detect {
        /// Input JSON path.
        #[arg(long = "in")]
        input: PathBuf,
        /// Relative residual tolerance for classifying points.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Random frame samples to score.
        #[arg(long, default_value_t = 256)]
        ransac_iters: u32,
        /// RNG seed (required: runs are reproducible, never wall-clock).
        #[arg(long)]
        seed: u64,
    },
    /// Enumerate rational solutions of sin(theta) sin(phi/2) = 1/2.
    Newman {
        /// Largest denominator scanned for theta and phi (at least 6).
        #[arg(long, default_value_t = 64)]
        max_denominator: u32,
        /// Absolute tolerance for the double-double product filter.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { n, variant, out } => cmd_construct(n, variant, &out),
        Command::Verify { input, tol } => cmd_verify(&input, tol),
        Command::BoundsTable { n_min, n_max, out } => cmd_bounds_table(n_min, n_max, &out),
        Command::Search { n, iters, restarts, seed, init } => {
            cmd_search(n, iters, restarts, seed, init)
        }
        Command::Detect { input, tol, ransac_iters, seed } => {
            cmd_detect(&input, tol, ransac_iters, seed)
        }
        Command::Newman { max_denominator, tol } => cmd_newman(max_denominator, tol),
    }
}

fn as_triples(points: &[Vec3]) -> Vec<[f64; 3]> {
    points.iter().map(|p| [p.x, p.y, p.z]).collect()
}

/// Writes a report to standard output, treating a closed pipe (e.g. the
/// reader was `head`) as a normal end of output rather than an error.
fn emit(document: &str) -> Result<()> {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    match out.write_all(document.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        other => other.context("writing to standard output"),
    }
}

fn cmd_construct(n: usize, variant: Variant, out: &std::path::Path) -> Result<ExitCode> {
    let (ps, (ell, c), expected, name) = match variant {
        Variant::Square => {
            let ps = build_extremal(n)?;
            (ps, square_split(n), extremal_arc_count(n)?, "square")
        }
        Variant::Hexagon => {
            let ps = build_hexagon_variant(n)?;
            (ps, hexagon_split(n), hexagon_arc_count(n)?, "hexagon")
        }
    };
    let meta = serde_json::json!({
        "variant": name,
        "ell": ell,
        "c": c,
        "expected": expected,
    });
    files::write_point_set(out, &as_triples(&ps.points), Some(&ps.radii), Some(&meta))?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct DetectionSummary {
    t: usize,
    c_count: usize,
    l_count: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    tol: f64,
    /// Arc count of the file's digraph (mode-optimal radii if none given).
    e_r: u64,
    radii_from_file: bool,
    /// Absent when n < 8 or no circle could be fitted.
    detection: Option<DetectionSummary>,
    /// Present when detection found a clean suspension (t = 0).
    count_report: Option<CountReport>,
    meta_expected: Option<u64>,
    /// All applicable checks passed.
    matches: bool,
}

fn cmd_verify(input: &std::path::Path, tol: f64) -> Result<ExitCode> {
    let file = PointSetFile::read(input)?;
    let points: Vec<Vec3> = file.points.iter().map(|p| Vec3::new(p[0], p[1], p[2])).collect();
    let radii_from_file = file.radii.is_some();
    let radii = match file.radii {
        Some(radii) => radii,
        None => optimal_radii(&points, tol).context("assigning mode-optimal radii")?.0,
    };
    let ps = PointSet3::new(points, radii).context("invalid point set")?;
    let g = build_digraph(&ps, tol).context("building the digraph")?;
    let e_r = g.arc_count();

    let detection = if ps.len() >= 8 {
        match detect_suspension(&ps, tol, 256, 0) {
            Ok(d) => Some(d),
            Err(DetectError::AllSamplesDegenerate(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let mut matches = true;
    let count_report = match &detection {
        Some(d) if d.t == 0 => {
            match verify_suspension_counts(&ps, &d.l_indices, &d.c_indices, tol) {
                Ok(report) => {
                    matches &= report.matches;
                    Some(report)
                }
                Err(SuspensionError::NotASuspension(_)) => {
                    matches = false;
                    None
                }
                Err(e) => return Err(e.into()),
            }
        }
        _ => None,
    };

    let meta_expected = file.meta.as_ref().and_then(|m| m.get("expected")).and_then(|v| v.as_u64());
    if let Some(expected) = meta_expected {
        matches &= expected == e_r;
    }

    let report = VerifyReport {
        n: ps.len(),
        tol,
        e_r,
        radii_from_file,
        detection: detection.map(|d| DetectionSummary {
            t: d.t,
            c_count: d.c_indices.len(),
            l_count: d.l_indices.len(),
        }),
        count_report,
        meta_expected,
        matches,
    };
    emit(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    Ok(if matches { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_bounds_table(n_min: u64, n_max: u64, out: &std::path::Path) -> Result<ExitCode> {
    if n_min < 1 || n_min > n_max || n_max > 1_000_000 {
        bail!("need 1 <= n-min <= n-max <= 1000000, got {n_min}..{n_max}");
    }
    let mut csv = String::from("n,lower,suspension_cap,upper,constructed\n");
    for n in n_min..=n_max {
        let b = f3_bounds(n);
        let constructed = if n >= 13 {
            let ps = build_extremal(n as usize)?;
            build_digraph(&ps, DEFAULT_TOL)?.arc_count().to_string()
        } else {
            String::new()
        };
        csv.push_str(&format!("{n},{},{},{},{constructed}\n", b.lower, b.suspension_cap, b.upper));
    }
    std::fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(n: usize, iters: u32, restarts: u32, seed: u64, init: InitArg) -> Result<ExitCode> {
    let mut cfg = SearchConfig::new(n);
    cfg.iterations = iters;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.init = match init {
        InitArg::Random => InitMode::Random,
        InitArg::Suspension => InitMode::Suspension,
        InitArg::PerturbedSuspension => InitMode::PerturbedSuspension,
    };
    let (ps, e_value) = local_search(&cfg)?;
    let meta = serde_json::json!({
        "e_value": e_value,
        "n": n,
        "iters": iters,
        "restarts": restarts,
        "seed": seed,
    });
    emit(&files::render_point_set(&as_triples(&ps.points), Some(&ps.radii), Some(&meta)))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_detect(input: &std::path::Path, tol: f64, ransac_iters: u32, seed: u64) -> Result<ExitCode> {
    let file = PointSetFile::read(input)?;
    let points: Vec<Vec3> = file.points.iter().map(|p| Vec3::new(p[0], p[1], p[2])).collect();
    let radii = match file.radii {
        Some(radii) => radii,
        None => optimal_radii(&points, DEFAULT_TOL).context("assigning mode-optimal radii")?.0,
    };
    let ps = PointSet3::new(points, radii).context("invalid point set")?;
    let result = detect_suspension(&ps, tol, ransac_iters, seed)?;
    emit(&format!("{}\n", serde_json::to_string_pretty(&result)?))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_newman(max_denominator: u32, tol: f64) -> Result<ExitCode> {
    let solutions = newman_enumerate(max_denominator, tol)?;
    emit(&format!("{}\n", serde_json::to_string_pretty(&solutions)?))?;
    Ok(ExitCode::SUCCESS)
}
