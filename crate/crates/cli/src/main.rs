//! Command-line front end: generate graphs, compute covers, bounds and exact
//! competition numbers, verify certificates, and print the reference table
//! for the five regular polyhedra.
//!
//! Exit codes are a stable contract: 0 on success (including budget-limited
//! inconclusive results), 1 when a certificate is invalid or the reference
//! table mismatches, 2 on usage or parse errors.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use competition_core::{
    best_lower_bound, exact_competition_number, generate, io, theta_e, theta_v, verify_certificate,
    Budget, Certificate, ExactResult, Family, Graph,
};

#[derive(Parser)]
#[command(
    name = "competition",
    version,
    about = "Competition graphs, clique covers, and competition numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Zero timing fields so output is byte-stable across runs.
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family.
    ///
    /// Families: tetrahedron, hexahedron, octahedron, dodecahedron,
    /// icosahedron, complete N, multipartite N1 N2 .., tripartite N,
    /// cycle N, path N.
    Gen {
        family: String,
        params: Vec<usize>,
        /// Output file; `.json` selects the JSON format, anything else the
        /// edge-list text format. Defaults to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Closed forms and lower bounds for a graph file.
    Bounds {
        graph: PathBuf,
        /// Largest subset size for the m-subset bound.
        #[arg(long, default_value_t = 3)]
        m_max: usize,
    },
    /// Exact competition number with a certificate, within budget.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget_ms: u64,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
    },
    /// Minimum edge clique cover of a graph file.
    ThetaE { graph: PathBuf },
    /// Minimum vertex clique cover of a graph file.
    ThetaV { graph: PathBuf },
    /// Verify a construction certificate (JSON).
    Verify { certificate: PathBuf },
    /// Recompute the five-polyhedra table and check it against the known
    /// values; mismatches exit nonzero.
    PaperReport {
        #[arg(long, default_value_t = 10_000)]
        budget_ms: u64,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
    },
}

fn main() -> ExitCode {
    // Die quietly when stdout closes early (e.g. piping into `head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    json: bool,
    deterministic: bool,
    command_echo: String,
    start: Instant,
}

impl Ctx {
    fn timing_ms(&self) -> u64 {
        if self.deterministic {
            0
        } else {
            self.start.elapsed().as_millis() as u64
        }
    }

    fn graph_summary(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "degree_sequence": g.degree_sequence(),
        })
    }

    fn emit(&self, payload: serde_json::Value, table: impl FnOnce()) {
        if self.json {
            println!("{payload}");
        } else {
            table();
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx {
        json: cli.json,
        deterministic: cli.deterministic,
        command_echo: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
        start: Instant::now(),
    };
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => cmd_gen(&ctx, &family, &params, output.as_deref()),
        Command::Bounds { graph, m_max } => cmd_bounds(&ctx, &graph, m_max),
        Command::Exact {
            graph,
            budget_ms,
            budget_nodes,
        } => cmd_exact(&ctx, &graph, budget_ms, budget_nodes),
        Command::ThetaE { graph } => cmd_theta(&ctx, &graph, true),
        Command::ThetaV { graph } => cmd_theta(&ctx, &graph, false),
        Command::Verify { certificate } => cmd_verify(&ctx, &certificate),
        Command::PaperReport {
            budget_ms,
            budget_nodes,
        } => report::cmd_paper_report(&ctx, budget_ms, budget_nodes),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    io::parse_graph(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn cmd_gen(ctx: &Ctx, family: &str, params: &[usize], output: Option<&Path>) -> Result<ExitCode> {
    let family = Family::parse(family, params)?;
    let graph = generate(&family)?;
    let as_json = |g: &Graph| io::render_graph_json(g) + "\n";
    match output {
        Some(path) => {
            let text = if path.extension().is_some_and(|e| e == "json") {
                as_json(&graph)
            } else {
                io::render_edge_list(&graph)
            };
            std::fs::write(path, text)
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => {
            if ctx.json {
                print!("{}", as_json(&graph));
            } else {
                print!("{}", io::render_edge_list(&graph));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(ctx: &Ctx, path: &Path, m_max: usize) -> Result<ExitCode> {
    let graph = load_graph(path)?;
    let id = path
        .file_stem()
        .map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned());
    let report = best_lower_bound(&graph, m_max, &id)?;
    let payload = serde_json::json!({
        "command": ctx.command_echo,
        "graph": ctx.graph_summary(&graph),
        "report": report,
        "timing_ms": ctx.timing_ms(),
    });
    ctx.emit(payload, || {
        println!(
            "graph {id}: {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        );
        println!("{:<22} {:>6}  {:<5}  note", "bound", "value", "kind");
        for entry in &report.entries {
            let kind = match entry.kind {
                competition_core::BoundKind::Lower => "lower",
                competition_core::BoundKind::Exact => "exact",
            };
            println!(
                "{:<22} {:>6}  {:<5}  {}",
                entry.name,
                entry.value,
                kind,
                entry.note.as_deref().unwrap_or("")
            );
        }
        println!("best lower bound (clamped at 0): {}", report.best_lower);
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_exact(ctx: &Ctx, path: &Path, budget_ms: u64, budget_nodes: u64) -> Result<ExitCode> {
    let graph = load_graph(path)?;
    let budget = Budget {
        max_millis: budget_ms,
        max_nodes: budget_nodes,
        ..Budget::default()
    };
    let outcome = exact_competition_number(&graph, &budget);
    let payload = match &outcome.result {
        ExactResult::Exact { k, certificate } => serde_json::json!({
            "command": ctx.command_echo,
            "graph": ctx.graph_summary(&graph),
            "status": "exact",
            "k": k,
            "certificate": certificate,
            "nodes": outcome.stats.nodes,
            "timing_ms": ctx.timing_ms(),
        }),
        ExactResult::Inconclusive {
            lower,
            upper,
            certificate,
        } => serde_json::json!({
            "command": ctx.command_echo,
            "graph": ctx.graph_summary(&graph),
            "status": "inconclusive",
            "lower": lower,
            "upper": upper,
            "certificate": certificate,
            "nodes": outcome.stats.nodes,
            "timing_ms": ctx.timing_ms(),
        }),
    };
    ctx.emit(payload, || match &outcome.result {
        ExactResult::Exact { k, .. } => {
            println!(
                "competition number: {k}  ({} nodes explored)",
                outcome.stats.nodes
            );
        }
        ExactResult::Inconclusive { lower, upper, .. } => {
            println!(
                "inconclusive within budget: {lower} <= k <= {upper}  ({} nodes explored)",
                outcome.stats.nodes
            );
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_theta(ctx: &Ctx, path: &Path, edges: bool) -> Result<ExitCode> {
    let graph = load_graph(path)?;
    let (name, solution) = if edges {
        ("theta_e", theta_e(&graph)?)
    } else {
        ("theta_v", theta_v(&graph))
    };
    let payload = serde_json::json!({
        "command": ctx.command_echo,
        "graph": ctx.graph_summary(&graph),
        "name": name,
        "value": solution.size,
        "witness": solution.cover.to_json(),
        "timing_ms": ctx.timing_ms(),
    });
    ctx.emit(payload, || {
        println!("{name} = {}", solution.size);
        for clique in &solution.cover.cliques {
            println!("  {:?}", clique.to_vec());
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(ctx: &Ctx, path: &Path) -> Result<ExitCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let certificate: Certificate = serde_json::from_str(&text)
        .with_context(|| format!("malformed certificate in {}", path.display()))?;
    let verification = verify_certificate(&certificate);
    let issues = verification.describe();
    let payload = serde_json::json!({
        "command": ctx.command_echo,
        "graph": ctx.graph_summary(&certificate.graph),
        "k": certificate.k,
        "valid": verification.valid,
        "issues": issues,
        "missing_edges": verification.missing_edges,
        "surplus_edges": verification.surplus_edges,
        "timing_ms": ctx.timing_ms(),
    });
    ctx.emit(payload, || {
        if verification.valid {
            println!(
                "valid: realizes the graph plus {} isolated vertices",
                certificate.k
            );
        } else {
            println!("invalid:");
            for issue in &issues {
                println!("  {issue}");
            }
        }
    });
    Ok(if verification.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
