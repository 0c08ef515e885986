//! `hued`: color graphs r-hued, verify colorings, compute exact values,
//! generate Steiner systems and their Levi graphs, reduce Levi colorings,
//! and benchmark bounds.
//!
//! Exit codes: 0 success/valid, 1 verification failure, 2 input error.
//! Errors print one machine-parsable line to stderr:
//! `error: <kind>: <message>`.

mod bench;
mod util;

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use hued::{
    affine_plane, bose_triple_system, brute_force_steiner, exact_chi_r, is_r_hued,
    levi_from_graph, levi_graph, pairs_system, parse_graph, projective_plane,
    reduce_levi_coloring, skolem_triple_system, write_graph, BruteForceBudget,
    BruteForceOutcome, ColoringDoc, DesignDoc, ExactOptions, Graph, GraphFormat, GreedyOptions,
    OrderPolicy,
};

use util::{debug, emit, emit_line, info, read_bytes, read_text, CmdResult, Failure};

#[derive(Parser)]
#[command(name = "hued", version, about = "r-hued graph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file to read.
    #[arg(long)]
    input: PathBuf,
    /// Graph file format.
    #[arg(long, default_value = "edgelist")]
    format: String,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Failure> {
        let format: GraphFormat = self.format.parse()?;
        let bytes = read_bytes(&self.input)?;
        Ok(parse_graph(&bytes, format)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with the greedy r-hued algorithm.
    Color {
        #[command(flatten)]
        graph: GraphInput,
        /// Hue requirement r.
        #[arg(long)]
        r: usize,
        /// Vertex pick order: index or random.
        #[arg(long, default_value = "index")]
        order: String,
        /// Seed for the random order.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fail (exit 1) when the coloring needs more than this many colors.
        #[arg(long)]
        max_colors: Option<usize>,
        /// Output file for the coloring JSON; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify that a coloring is r-hued for a graph. Exit 1 when invalid.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Coloring JSON file.
        #[arg(long)]
        coloring: PathBuf,
        /// Override the r stored in the coloring file.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Compute the exact r-hued chromatic number of a small graph.
    Exact {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        r: usize,
        /// Wall-clock budget for the whole search.
        #[arg(long)]
        timeout_ms: Option<u64>,
        /// Search-node budget per palette size.
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = 40)]
        vertex_cap: usize,
        /// Fail (exit 1) when chi_r exceeds this.
        #[arg(long)]
        max_colors: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a Steiner system S(2, r, n) as design JSON.
    Gen {
        /// pairs | bose | skolem | projective | affine | brute
        #[arg(long)]
        kind: String,
        /// Point count for pairs/bose/skolem/brute.
        #[arg(long)]
        n: Option<usize>,
        /// Plane order for projective/affine.
        #[arg(long)]
        q: Option<usize>,
        /// Block size for brute.
        #[arg(long)]
        r: Option<usize>,
        /// Node budget for brute.
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Levi (incidence) graph of a design.
    Levi {
        /// Design JSON file.
        #[arg(long)]
        system: PathBuf,
        /// Output graph format.
        #[arg(long, default_value = "edgelist")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce an r-hued coloring of a Levi graph to point colors only.
    Reduce {
        #[command(flatten)]
        graph: GraphInput,
        /// Number of point-side vertices (they come first: 0..points).
        #[arg(long)]
        points: usize,
        /// Coloring JSON file.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        r: usize,
        /// Output file for the reduced coloring JSON; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Optional file for the recoloring report JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compare greedy colors against the theorem bounds over a family.
    Bench {
        /// gnp | levi
        #[arg(long)]
        family: String,
        /// Comma-separated vertex counts (gnp).
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Comma-separated edge probabilities (gnp).
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        /// Comma-separated hue requirements (gnp).
        #[arg(long, value_delimiter = ',')]
        r: Vec<usize>,
        /// Comma-separated kind:param entries (levi),
        /// e.g. pairs:5,skolem:13,projective:3.
        #[arg(long, value_delimiter = ',')]
        systems: Vec<String>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the exact solver only on instances up to this many vertices.
        #[arg(long, default_value_t = 12)]
        exact_max_n: usize,
        /// Wall-clock budget per exact call.
        #[arg(long)]
        timeout_ms: Option<u64>,
        /// CSV output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(failure) => {
            eprintln!("error: {}: {}", failure.kind, failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Color {
            graph,
            r,
            order,
            seed,
            max_colors,
            out,
        } => cmd_color(&graph, r, &order, seed, max_colors, out.as_ref()),
        Command::Verify { graph, coloring, r } => cmd_verify(&graph, &coloring, r),
        Command::Exact {
            graph,
            r,
            timeout_ms,
            max_nodes,
            vertex_cap,
            max_colors,
            out,
        } => cmd_exact(&graph, r, timeout_ms, max_nodes, vertex_cap, max_colors, out.as_ref()),
        Command::Gen {
            kind,
            n,
            q,
            r,
            max_nodes,
            out,
        } => cmd_gen(&kind, n, q, r, max_nodes, out.as_ref()),
        Command::Levi {
            system,
            format,
            out,
        } => cmd_levi(&system, &format, out.as_ref()),
        Command::Reduce {
            graph,
            points,
            coloring,
            r,
            out,
            report,
        } => cmd_reduce(&graph, points, &coloring, r, out.as_ref(), report.as_ref()),
        Command::Bench {
            family,
            n,
            p,
            r,
            systems,
            trials,
            seed,
            exact_max_n,
            timeout_ms,
            out,
        } => {
            let systems = systems
                .iter()
                .map(|entry| parse_system_entry(entry))
                .collect::<Result<Vec<_>, _>>()?;
            bench::run(&bench::BenchConfig {
                family,
                n_values: n,
                p_values: p,
                r_values: r,
                systems,
                trials,
                seed,
                exact_max_n,
                timeout_ms,
                out,
            })
        }
    }
}

fn parse_system_entry(entry: &str) -> Result<(String, usize), Failure> {
    let (kind, param) = entry
        .split_once(':')
        .ok_or_else(|| Failure::input(format!("--systems entry {entry:?} is not kind:param")))?;
    let param = param
        .parse()
        .map_err(|_| Failure::input(format!("bad parameter in --systems entry {entry:?}")))?;
    Ok((kind.to_string(), param))
}

fn cmd_color(
    graph: &GraphInput,
    r: usize,
    order: &str,
    seed: u64,
    max_colors: Option<usize>,
    out: Option<&PathBuf>,
) -> CmdResult {
    let g = graph.load()?;
    let order: OrderPolicy = order.parse()?;
    let opts = GreedyOptions {
        order,
        seed,
        log_steps: true,
        ..GreedyOptions::default()
    };
    let run = hued::greedy_r_hued(&g, r, &opts)?;
    let used = run.coloring.colors_used();
    info(format!(
        "colored {} vertices with {used} colors (bound {})",
        g.vertex_count(),
        run.palette_bound
    ));
    for step in &run.steps {
        debug(format!(
            "step vertex={} case={} forbidden={}",
            step.vertex,
            step.case.tag(),
            step.forbidden
        ));
    }
    emit_line(out, &ColoringDoc::new(&run.coloring, r).to_json())?;
    if let Some(cap) = max_colors {
        if used > cap {
            return Err(Failure::verification(format!(
                "coloring needs {used} colors, above the requested cap {cap}"
            )));
        }
    }
    Ok(())
}

fn cmd_verify(graph: &GraphInput, coloring: &PathBuf, r_override: Option<usize>) -> CmdResult {
    let g = graph.load()?;
    let doc = ColoringDoc::from_json(&read_text(coloring)?)?;
    let phi = doc.coloring()?;
    let r = r_override.unwrap_or(doc.r);
    if !phi.is_total() {
        return Err(Failure::verification(
            "coloring leaves vertices unassigned".to_string(),
        ));
    }
    if is_r_hued(&g, &phi, r)? {
        println!("valid: {r}-hued with {} colors", phi.colors_used());
        Ok(())
    } else {
        Err(Failure::verification(format!("coloring is not {r}-hued")))
    }
}

fn cmd_exact(
    graph: &GraphInput,
    r: usize,
    timeout_ms: Option<u64>,
    max_nodes: Option<u64>,
    vertex_cap: usize,
    max_colors: Option<usize>,
    out: Option<&PathBuf>,
) -> CmdResult {
    let g = graph.load()?;
    let opts = ExactOptions {
        vertex_cap,
        max_nodes,
        timeout: timeout_ms.map(Duration::from_millis),
    };
    let result = exact_chi_r(&g, r, &opts)?;
    info(format!(
        "chi_{r} = {}{} after {} nodes",
        result.chi_r,
        if result.timed_out { " (upper bound only)" } else { "" },
        result.nodes_explored
    ));
    let payload = serde_json::json!({
        "r": r,
        "chi_r": result.chi_r,
        "optimal": !result.timed_out,
        "nodes_explored": result.nodes_explored,
        "witness": serde_json::from_str::<serde_json::Value>(
            &ColoringDoc::new(&result.witness, r).to_json()
        ).expect("witness serializes"),
    });
    emit_line(out, &payload.to_string())?;
    if let Some(cap) = max_colors {
        if result.chi_r > cap {
            return Err(Failure::verification(format!(
                "chi_{r} = {} exceeds the requested cap {cap}",
                result.chi_r
            )));
        }
    }
    Ok(())
}

fn cmd_gen(
    kind: &str,
    n: Option<usize>,
    q: Option<usize>,
    r: Option<usize>,
    max_nodes: u64,
    out: Option<&PathBuf>,
) -> CmdResult {
    let need_n = || n.ok_or_else(|| Failure::input(format!("--kind {kind} needs --n")));
    let need_q = || q.ok_or_else(|| Failure::input(format!("--kind {kind} needs --q")));
    let system = match kind {
        "pairs" => pairs_system(need_n()?)?,
        "bose" => bose_triple_system(need_n()?)?,
        "skolem" => skolem_triple_system(need_n()?)?,
        "projective" => projective_plane(need_q()?)?,
        "affine" => affine_plane(need_q()?)?,
        "brute" => {
            let n = need_n()?;
            let r = r.ok_or_else(|| Failure::input("--kind brute needs --r"))?;
            let budget = BruteForceBudget {
                max_nodes,
                ..BruteForceBudget::default()
            };
            match brute_force_steiner(n, r, &budget)? {
                BruteForceOutcome::Found(system) => system,
                BruteForceOutcome::Exhausted => {
                    return Err(Failure::verification(format!(
                        "no S(2,{r},{n}) exists: search space exhausted"
                    )));
                }
                BruteForceOutcome::Indeterminate => {
                    return Err(Failure::input(format!(
                        "search for S(2,{r},{n}) ran out of budget ({max_nodes} nodes)"
                    )));
                }
            }
        }
        other => return Err(Failure::input(format!("unknown design kind {other:?}"))),
    };
    info(format!(
        "S(2,{},{}) with {} blocks",
        system.block_size(),
        system.point_count(),
        system.block_count()
    ));
    emit_line(out, &DesignDoc::new(&system).to_json())
}

fn cmd_levi(system: &PathBuf, format: &str, out: Option<&PathBuf>) -> CmdResult {
    let doc = DesignDoc::from_json(&read_text(system)?)?;
    let lg = levi_graph(&doc.system()?)?;
    let format: GraphFormat = format.parse()?;
    info(format!(
        "levi graph: {} point + {} block vertices, {} edges",
        lg.point_count(),
        lg.block_count(),
        lg.graph().edge_count()
    ));
    emit(out, &write_graph(lg.graph(), format))
}

fn cmd_reduce(
    graph: &GraphInput,
    points: usize,
    coloring: &PathBuf,
    r: usize,
    out: Option<&PathBuf>,
    report_path: Option<&PathBuf>,
) -> CmdResult {
    let g = graph.load()?;
    let lg = levi_from_graph(&g, points, r)?;
    let doc = ColoringDoc::from_json(&read_text(coloring)?)?;
    let phi = doc.coloring()?;
    let (reduced, report) = reduce_levi_coloring(&lg, &phi, r)?;
    info(format!(
        "reduced {} colors to {} in {} steps",
        report.input_colors,
        report.output_colors,
        report.steps.len()
    ));
    emit_line(out, &ColoringDoc::new(&reduced, r).to_json())?;
    let report_json =
        serde_json::to_string(&report).expect("report serializes");
    if let Some(path) = report_path {
        emit_line(Some(path), &report_json)?;
    } else {
        debug(report_json);
    }
    if !report.completed {
        return Err(Failure::verification(format!(
            "best-effort reduction stuck at block vertex {}",
            report.stuck_block.expect("stuck block recorded")
        )));
    }
    Ok(())
}
