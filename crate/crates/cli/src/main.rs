mod graph_spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hamming_bootstrap::constructions::{c_set, v_set_dim2, ConstructedSeed, Construction, Family};
use hamming_bootstrap::formulas::{m_hamming_bounds, m_hamming_dim2};
use hamming_bootstrap::oracle::{
    min_percolating_edges_line_with, min_percolating_edges_star_with, min_percolating_vertices_with, OracleConfig,
    DEFAULT_ENGINE_BUDGET,
};
use hamming_bootstrap::poly::primes::first_primes;
use hamming_bootstrap::poly::{dim_w_detailed, hamming_coloring, product_coloring, vertex_product_coloring};
use hamming_bootstrap::rational::{int, parse_rational, Rational};
use hamming_bootstrap::seed_file::{parse_seed, write_edge_seed, write_vertex_seed};
use hamming_bootstrap::{percolate_edges_linegraph, percolate_edges_star, percolate_vertices, Graph};
use serde_json::json;

use graph_spec::GraphSpec;

#[derive(Parser)]
#[command(name = "hbp", version, about = "Bootstrap percolation on Hamming and line graphs")]
struct Cli {
    /// Worker threads for oracle searches and table sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcessArg {
    Vertex,
    Star,
    Line,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    V2,
    A,
    C,
    Star,
    Line,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::V2 => Family::V2,
            FamilyArg::A => Family::A,
            FamilyArg::C => Family::C,
            FamilyArg::Star => Family::Star,
            FamilyArg::Line => Family::Line,
        }
    }
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Dimension; ignored by `line`, must be 2 for `v2`.
    #[arg(long, default_value_t = 2)]
    d: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a process from a seed file and print the trace as JSON.
    Simulate {
        graph: GraphSpec,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        seed: PathBuf,
        #[arg(long, value_enum, default_value = "vertex")]
        process: ProcessArg,
    },
    /// Emit a construction in the seed file format.
    Construct {
        #[command(flatten)]
        args: ConstructArgs,
        /// Write the seed here and print only its size.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a construction and report whether it percolates.
    Verify {
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// CSV of bounds, construction sizes and known exact values for K_n^d.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rmax: usize,
        /// Fixed side length; defaults to r + 1 on each row.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dimension of the recognized function space for a prime product coloring.
    Dimw {
        graph: GraphSpec,
        #[arg(long)]
        r: usize,
        /// Comma-separated vertex generators such as `2,3,5/7`.
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<String>>,
        /// Also report matrix sizes and the kernel dimension.
        #[arg(long)]
        details: bool,
    },
    /// Exhaustive minimum percolating set.
    Search {
        graph: GraphSpec,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "vertex")]
        process: ProcessArg,
        /// Maximum number of engine calls.
        #[arg(long, default_value_t = DEFAULT_ENGINE_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let kind = err
                .downcast_ref::<hamming_bootstrap::Error>()
                .map_or_else(|| if err.downcast_ref::<std::io::Error>().is_some() { "io" } else { "failure" }, |e| e.kind());
            let reason = format!("{err:#}");
            eprintln!("{}", json!({ "error": kind, "reason": reason }));
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.into()).build()?;
    let parallel = cli.jobs > 1;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Simulate { graph, r, seed, process } => {
            let g = graph.build()?;
            let text = std::fs::read_to_string(&seed).with_context(|| format!("reading seed file {}", seed.display()))?;
            let seed = parse_seed(&text)?;
            let report = match process {
                ProcessArg::Vertex => serde_json::to_value(percolate_vertices(&g, r, &seed.to_vertex_set(&g)?).report())?,
                ProcessArg::Star => serde_json::to_value(percolate_edges_star(&g, r, &seed.to_edge_set(&g)?).report(&g))?,
                ProcessArg::Line => {
                    serde_json::to_value(percolate_edges_linegraph(&g, r, &seed.to_edge_set(&g)?).report(&g))?
                }
            };
            writeln!(out, "{report}")?;
        }
        Command::Construct { args, out: path } => {
            let built = build(&args)?;
            let mut text = format!(
                "# family={} n={} r={} d={} size={}\n",
                family_name(args.family),
                args.n,
                args.r,
                effective_d(&args),
                built.seed.len()
            );
            text.push_str(&match &built.seed {
                ConstructedSeed::Vertices(s) => write_vertex_seed(s),
                ConstructedSeed::Edges(s) => write_edge_seed(&built.graph, s),
            });
            match path {
                Some(p) => {
                    std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
                    writeln!(out, "size={}", built.seed.len())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify { args } => {
            let built = build(&args)?;
            let verdict = if built.percolates(args.r) { "PERCOLATES" } else { "STALLS" };
            writeln!(out, "{verdict} size={}", built.seed.len())?;
        }
        Command::Table { d, rmax, n } => {
            let rows = pool.install(|| table_rows(d, rmax, n, parallel))?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "d", "r", "lower", "construction_size", "upper", "exact_if_known"])?;
            for row in rows {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Command::Dimw { graph, r, generators, details } => {
            let report = match (&graph, generators) {
                (_, Some(gens)) => {
                    let g = graph.build()?;
                    let gens = gens.iter().map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
                    dim_w_detailed(&g, &vertex_product_coloring(&g, gens)?, r)?
                }
                (GraphSpec::Hamming(n, d), None) => {
                    let (g, c) = hamming_coloring(*n, *d)?;
                    dim_w_detailed(&g, &c, r)?
                }
                (GraphSpec::Complete(n), None) => dim_w_detailed(&graph.build()?, &product_coloring(*n)?, r)?,
                (_, None) => {
                    let g = graph.build()?;
                    let gens = first_primes(g.vertex_count()).into_iter().map(|p| int(p as i64)).collect();
                    dim_w_detailed(&g, &vertex_product_coloring(&g, gens)?, r)?
                }
            };
            let value = if details {
                json!({
                    "dim": report.dim,
                    "variables": report.variables,
                    "constraint_rows": report.constraint_rows,
                    "constraint_rank": report.constraint_rank,
                    "kernel_dim": report.kernel_dim,
                })
            } else {
                json!({ "dim": report.dim })
            };
            writeln!(out, "{value}")?;
        }
        Command::Search { graph, r, process, budget } => {
            let g = graph.build()?;
            let cfg = OracleConfig { budget, parallel, ..OracleConfig::default() };
            let value = pool.install(|| search_json(&g, r, process, &cfg))?;
            writeln!(out, "{value}")?;
        }
    }
    Ok(())
}

fn effective_d(args: &ConstructArgs) -> usize {
    if args.family == FamilyArg::Line {
        1
    } else {
        args.d
    }
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::V2 => "v2",
        FamilyArg::A => "a",
        FamilyArg::C => "c",
        FamilyArg::Star => "star",
        FamilyArg::Line => "line",
    }
}

fn build(args: &ConstructArgs) -> anyhow::Result<Construction> {
    if args.family == FamilyArg::V2 && args.d != 2 {
        return Err(hamming_bootstrap::Error::Precondition(format!("family v2 lives in dimension 2, got d={}", args.d)).into());
    }
    Ok(Construction::build(args.family.into(), args.n, args.r, args.d)?)
}

fn search_json(g: &Graph, r: usize, process: ProcessArg, cfg: &OracleConfig) -> anyhow::Result<serde_json::Value> {
    Ok(match process {
        ProcessArg::Vertex => {
            let s = min_percolating_vertices_with(g, r, cfg)?;
            json!({ "minimum": s.minimum, "witness": s.witness.to_vec(), "engine_calls": s.engine_calls })
        }
        ProcessArg::Star | ProcessArg::Line => {
            let s = if matches!(process, ProcessArg::Star) {
                min_percolating_edges_star_with(g, r, cfg)?
            } else {
                min_percolating_edges_line_with(g, r, cfg)?
            };
            let pairs: Vec<[usize; 2]> = s.witness.pairs(g).into_iter().map(|(u, v)| [u, v]).collect();
            json!({ "minimum": s.minimum, "witness": pairs, "engine_calls": s.engine_calls })
        }
    })
}

/// Fixed-point rendering, rounded half away from zero.
fn decimal(x: &Rational, places: usize) -> String {
    use num_traits::Signed;
    let scale = num_traits::pow(int(10), places);
    let scaled = (x.abs() * scale).round().to_integer();
    let digits = format!("{:0>width$}", scaled.to_string(), width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    format!("{}{whole}.{frac}", if x.is_negative() { "-" } else { "" })
}

fn table_rows(d: usize, rmax: usize, fixed_n: Option<usize>, parallel: bool) -> anyhow::Result<Vec<Vec<String>>> {
    if d < 2 {
        bail!(hamming_bootstrap::Error::Precondition(format!("table needs d >= 2, got d={d}")));
    }
    let row = |r: usize| -> anyhow::Result<Vec<String>> {
        let n = fixed_n.unwrap_or(r + 1);
        let bounds = m_hamming_bounds(n, r, d)?;
        let construction = if d == 2 { v_set_dim2(n, r)?.len() } else { c_set(n, r, d)?.len() };
        let exact = if d == 2 {
            m_hamming_dim2(n, r).to_string()
        } else if r == 1 {
            "1".to_string()
        } else {
            String::new()
        };
        Ok(vec![
            n.to_string(),
            d.to_string(),
            r.to_string(),
            decimal(&bounds.lower, 6),
            construction.to_string(),
            decimal(&bounds.upper, 6),
            exact,
        ])
    };
    if parallel {
        use rayon::prelude::*;
        (1..=rmax).into_par_iter().map(row).collect()
    } else {
        (1..=rmax).map(row).collect()
    }
}
