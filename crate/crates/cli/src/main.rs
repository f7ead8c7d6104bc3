use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use bredon_core::degrees::{KleinDegree, MotivicBidegree};
use bredon_core::f2algebra::F2Element;
use bredon_core::figure::RegionMap;
use bredon_core::klein_point::{group_at, mackey_restrict, multiply, MackeyLevel};
use bredon_core::motivic::{borel_group, motivic_group_r, MotivicGroup};
use bredon_core::spaces::{
    b_space_group, bc2_motivic_group, e_space_group, etilde_space_group, w_q_motivic_group, SpaceGroup,
};
use bredon_core::verify::{run_suite, run_suite_window, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

/// Mod-2 Bredon cohomology of the Klein four-group point and motivic cohomology of the reals.
#[derive(Parser, Debug)]
#[command(name = "bredon", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of the point group at `a,p,b,q`.
    PointDim {
        #[arg(long, allow_hyphen_values = true)]
        degree: KleinDegree,
        #[arg(long)]
        json: bool,
    },
    /// Monomial basis of the point group at `a,p,b,q`.
    PointBasis {
        #[arg(long, allow_hyphen_values = true)]
        degree: KleinDegree,
        #[arg(long)]
        json: bool,
    },
    /// Product of two point classes.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Restriction of a positive-cone class between Mackey levels.
    Restrict {
        /// One of top, sigma, epsilon, sigma-epsilon, trivial.
        #[arg(long, default_value = "top")]
        from: MackeyLevel,
        #[arg(long)]
        to: MackeyLevel,
        element: String,
    },
    /// Cohomology of an auxiliary space.
    SpaceDim {
        #[arg(long, value_enum)]
        space: SpaceKind,
        /// `a,b` for B and BC2 (`a,w`), `a,p,b,q` for E and Etilde, `a,w` for Wq.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        /// The `q` of `W_q`.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Motivic group of the reals at `a,p:b,q`.
    Motivic {
        #[arg(long, allow_hyphen_values = true)]
        degree: MotivicBidegree,
        #[arg(long)]
        json: bool,
    },
    /// Borel motivic group at `a,p:b,q`.
    Borel {
        #[arg(long, allow_hyphen_values = true)]
        degree: MotivicBidegree,
        #[arg(long)]
        json: bool,
    },
    /// Status of the Betti realization map at `a,p:b,q`.
    Status {
        #[arg(long, allow_hyphen_values = true)]
        degree: MotivicBidegree,
        #[arg(long)]
        json: bool,
    },
    /// Table of dimensions over a window of degrees.
    Scan(ScanArgs),
    /// Picture of the weight plane shaded by region.
    RegionMap {
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        b_range: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-6..6")]
        q_range: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Figure,
        /// Label cells with the dimension at grading `a,p`.
        #[arg(long, allow_hyphen_values = true)]
        annotate: Option<String>,
    },
    /// Run the consistency suites; exits nonzero on any failure.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Common bound for every check in place of the default windows.
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceKind {
    #[value(name = "B")]
    B,
    #[value(name = "E")]
    E,
    #[value(name = "Etilde")]
    Etilde,
    #[value(name = "BC2")]
    Bc2,
    #[value(name = "Wq")]
    Wq,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Figure {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Point,
    Motivic,
    Borel,
    Space,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Table {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
struct ScanArgs {
    #[arg(long, value_enum, default_value = "motivic")]
    target: Target,
    /// Ranges are `lo..hi`, inclusive; `lo > hi` is an empty window.
    #[arg(long, allow_hyphen_values = true, default_value = "0..0")]
    a: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0..0")]
    p: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0..0")]
    b: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0..0")]
    q: String,
    /// Space scanned by `--target space`; only E and Etilde take four coordinates.
    #[arg(long, value_enum, default_value = "E")]
    space: SpaceKind,
    #[arg(long, value_enum, default_value = "csv")]
    format: Table,
}

#[derive(Serialize)]
struct PointOutput {
    degree: KleinDegree,
    dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Option<Vec<String>>>,
}

#[derive(Serialize)]
struct SpaceOutput<'a> {
    space: &'a str,
    degree: Vec<i64>,
    dimension: u64,
    basis: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct Row {
    a: i64,
    p: i64,
    b: i64,
    q: i64,
    dimension: u64,
    region: Option<String>,
    status: Option<String>,
    basis: Option<Vec<String>>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let (lo, hi) = s.split_once("..").with_context(|| format!("expected lo..hi, got {s:?}"))?;
    let lo = lo.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
    let hi = hi.trim().parse().with_context(|| format!("bad range end in {s:?}"))?;
    Ok(lo..=hi)
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad integer {t:?} in {s:?}")))
        .collect()
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn space_group(space: SpaceKind, coords: &[i64], q: Option<i64>) -> Result<SpaceGroup> {
    let want = match space {
        SpaceKind::E | SpaceKind::Etilde => 4,
        _ => 2,
    };
    ensure!(coords.len() == want, "space {space:?} takes {want} coordinates, got {}", coords.len());
    Ok(match space {
        SpaceKind::B => b_space_group(coords[0], coords[1]),
        SpaceKind::Bc2 => bc2_motivic_group(coords[0], coords[1]),
        SpaceKind::Wq => {
            let q = q.context("--q is required for Wq")?;
            w_q_motivic_group(q, coords[0], coords[1])?
        }
        SpaceKind::E => {
            let g = e_space_group(KleinDegree::new(coords[0], coords[1], coords[2], coords[3]));
            SpaceGroup { dimension: g.dimension, basis: strings(&g.basis.unwrap_or_default()) }
        }
        SpaceKind::Etilde => etilde_space_group(KleinDegree::new(coords[0], coords[1], coords[2], coords[3])),
    })
}

fn print_motivic(g: &MotivicGroup, json: bool) -> Result<()> {
    if json {
        return print_json(g);
    }
    println!("{} {} {}", g.dimension, g.region, g.realization.refined);
    if let Some(basis) = &g.basis {
        for m in basis {
            println!("  {m}");
        }
    }
    Ok(())
}

fn scan_row(target: Target, space: SpaceKind, a: i64, p: i64, b: i64, q: i64) -> Result<Row> {
    let mut row = Row { a, p, b, q, dimension: 0, region: None, status: None, basis: None };
    match target {
        Target::Point => {
            let g = group_at(KleinDegree::new(a, p, b, q));
            row.dimension = g.dimension;
            row.basis = g.basis.map(|v| strings(&v));
        }
        Target::Motivic | Target::Borel => {
            let d = MotivicBidegree::new(a, p, b, q);
            let g = if target == Target::Motivic { motivic_group_r(d) } else { borel_group(d) };
            row.dimension = g.dimension;
            row.region = Some(g.region.to_string());
            row.status = Some(g.realization.refined.to_string());
            row.basis = g.basis;
        }
        Target::Space => {
            let g = space_group(space, &[a, p, b, q], None)?;
            row.dimension = g.dimension;
            row.basis = Some(g.basis);
        }
    }
    Ok(row)
}

fn scan(args: &ScanArgs) -> Result<()> {
    let (ar, pr, br, qr) = (parse_range(&args.a)?, parse_range(&args.p)?, parse_range(&args.b)?, parse_range(&args.q)?);
    ensure!(
        args.target != Target::Space || matches!(args.space, SpaceKind::E | SpaceKind::Etilde),
        "scan over spaces supports E and Etilde"
    );
    let mut degrees = Vec::new();
    for a in ar {
        for p in pr.clone() {
            for b in br.clone() {
                for q in qr.clone() {
                    degrees.push((a, p, b, q));
                }
            }
        }
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Ok(n) = std::env::var("BREDON_THREADS") {
        pool = pool.num_threads(n.parse().with_context(|| format!("BREDON_THREADS={n:?}"))?);
    }
    let rows: Vec<Row> = pool.build()?.install(|| {
        degrees
            .par_iter()
            .map(|&(a, p, b, q)| scan_row(args.target, args.space, a, p, b, q))
            .collect::<Result<_>>()
    })?;
    match args.format {
        Table::Json => print_json(&rows),
        Table::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["a", "p", "b", "q", "dimension", "region", "status", "basis"])?;
            for r in &rows {
                w.write_record([
                    r.a.to_string(),
                    r.p.to_string(),
                    r.b.to_string(),
                    r.q.to_string(),
                    r.dimension.to_string(),
                    r.region.clone().unwrap_or_default(),
                    r.status.clone().unwrap_or_default(),
                    r.basis.as_ref().map(|v| v.join(";")).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::PointDim { degree, json } => {
            let dimension = group_at(degree).dimension;
            if json {
                print_json(&PointOutput { degree, dimension, basis: None })?;
            } else {
                println!("{dimension}");
            }
        }
        Command::PointBasis { degree, json } => {
            let g = group_at(degree);
            let basis = g.basis.map(|v| strings(&v));
            if json {
                print_json(&PointOutput { degree, dimension: g.dimension, basis: Some(basis) })?;
            } else {
                match basis {
                    Some(b) => b.iter().for_each(|m| println!("{m}")),
                    None => println!("dimension {} (no monomial basis in this sector)", g.dimension),
                }
            }
        }
        Command::Mul { left, right } => {
            let u: F2Element = left.parse()?;
            let v: F2Element = right.parse()?;
            println!("{}", multiply(&u, &v)?);
        }
        Command::Restrict { from, to, element } => {
            let e: F2Element = element.parse()?;
            println!("{}", mackey_restrict(from, to, &e)?);
        }
        Command::SpaceDim { space, degree, q, json } => {
            let coords = parse_ints(&degree)?;
            let g = space_group(space, &coords, q)?;
            if json {
                let name = space.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
                print_json(&SpaceOutput { space: &name, degree: coords, dimension: g.dimension, basis: Some(g.basis) })?;
            } else {
                println!("{}", g.dimension);
            }
        }
        Command::Motivic { degree, json } => print_motivic(&motivic_group_r(degree), json)?,
        Command::Borel { degree, json } => print_motivic(&borel_group(degree), json)?,
        Command::Status { degree, json } => {
            let s = motivic_group_r(degree).realization;
            if json {
                print_json(&s)?;
            } else {
                println!("{} (raw {}, {} -> {})", s.refined, s.raw, s.domain_dim, s.codomain_dim);
            }
        }
        Command::Scan(args) => scan(&args)?,
        Command::RegionMap { b_range, q_range, format, annotate } => {
            let annotate = match annotate {
                None => None,
                Some(s) => match parse_ints(&s)?.as_slice() {
                    &[a, p] => Some((a, p)),
                    _ => bail!("--annotate takes a,p"),
                },
            };
            let map = RegionMap { b_range: parse_range(&b_range)?, q_range: parse_range(&q_range)?, annotate };
            let text = match format {
                Figure::Ascii => map.to_ascii(),
                Figure::Svg => map.to_svg(),
            };
            io::stdout().lock().write_all(text.as_bytes())?;
        }
        Command::Verify { suite, window, json } => {
            let reports = match window {
                Some(w) => run_suite_window(suite, w),
                None => run_suite(suite),
            };
            if json {
                print_json(&reports)?;
            } else {
                reports.iter().for_each(|r| println!("{r}"));
            }
            if reports.iter().any(|r| !r.ok()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
