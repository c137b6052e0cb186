use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use twinwidth_core::analyzer::{analyze_gk, check_lemma_hypotheses, scan_nonadjacent_merges};
use twinwidth_core::io::{
    parse_edge_list, parse_embedding, write_dot, write_edge_list, write_embedding, write_trace_csv,
};
use twinwidth_core::solver::{
    greedy_sequence, naive_twinwidth, twinwidth_at_most, twinwidth_exact, Decision, SolveOptions,
    SolveStatus, DEFAULT_BUDGET, DEFAULT_MAX_EXACT_VERTICES,
};
use twinwidth_core::witness::synthesize_for;
use twinwidth_core::{
    build_gk, verify_certificate, Certificate, ContractionSequence, Trigraph, Verdict,
};

#[derive(Parser)]
#[command(name = "tww", version, about = "Twin-width of planar graphs: constructions, witnesses, solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build G_k and write it as an edge list.
    Generate {
        #[arg(long)]
        k: usize,
        /// Edge-list output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the metadata JSON here.
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Synthesize the width-7 contraction sequence for G_k.
    Witness {
        #[arg(long)]
        k: usize,
        /// Certificate output file.
        #[arg(long)]
        out: PathBuf,
        /// Per-step red-degree trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a certificate against a graph and a width bound.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        bound: usize,
    },
    /// Compute or bound the twin-width of a small graph.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Target width for `--mode at-most`.
        #[arg(long)]
        width: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_EXACT_VERTICES)]
        max_vertices: usize,
        /// Accepted for interface stability; the search is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Certificate output file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the skeleton hypotheses of G_k or of an embedded triangulation.
    Analyze {
        #[arg(long, conflicts_with = "embedding", required_unless_present = "embedding")]
        k: Option<usize>,
        /// Embedding text file of a plane triangulation.
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Write G_k (or its skeleton) in one of the supported formats.
    Export {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(long)]
        skeleton: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Naive,
    Greedy,
    AtMost,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Edges,
    Embedding,
    Dot,
    Meta,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_line(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn write_cert(path: Option<&Path>, g: &Trigraph, width: usize, seq: &ContractionSequence) -> Result<()> {
    if let Some(p) = path {
        emit(Some(p), &Certificate::new(g.capacity(), width, seq).to_json())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { k, out, meta } => {
            let g = build_gk(k);
            emit(out.as_deref(), &write_edge_list(&g.graph))?;
            if let Some(p) = meta {
                emit(Some(&p), &json_line(&g.metadata())?)?;
            }
        }
        Command::Witness { k, out, trace } => {
            let g = build_gk(k);
            let plan = synthesize_for(&g)?;
            let seq = plan.sequence();
            emit(Some(&out), &Certificate::new(g.vertex_count(), plan.trace.overall_width, &seq).to_json())?;
            if let Some(p) = trace {
                emit(Some(&p), &write_trace_csv(&seq, &plan.trace))?;
            }
            println!(
                "k={k} n={} steps={} width={}",
                g.vertex_count(),
                seq.len(),
                plan.trace.overall_width
            );
        }
        Command::Verify { graph, cert, bound } => {
            let g = parse_edge_list(&read(&graph)?).with_context(|| graph.display().to_string())?;
            let c = Certificate::from_json(&read(&cert)?).with_context(|| cert.display().to_string())?;
            if c.n != g.capacity() {
                bail!("certificate is for {} vertices, graph has {}", c.n, g.capacity());
            }
            return Ok(match verify_certificate(&g, &c.sequence(), bound) {
                Verdict::Accept(t) => {
                    println!("ACCEPT width={} bound={bound}", t.overall_width);
                    ExitCode::SUCCESS
                }
                Verdict::Reject(r) => {
                    println!("REJECT {r}");
                    ExitCode::from(1)
                }
            });
        }
        Command::Solve { graph, mode, width, budget, threads, max_vertices, seed: _, out } => {
            let g = parse_edge_list(&read(&graph)?).with_context(|| graph.display().to_string())?;
            let out = out.as_deref();
            match mode {
                Mode::Naive => {
                    let (w, seq) = naive_twinwidth(&g)?;
                    write_cert(out, &g, w, &seq)?;
                    println!("width={w} status={}", SolveStatus::Exact.as_str());
                }
                Mode::Greedy => {
                    let (w, seq) = greedy_sequence(&g);
                    write_cert(out, &g, w, &seq)?;
                    println!("width={w} status={}", SolveStatus::UpperBound.as_str());
                }
                Mode::AtMost => {
                    let Some(d) = width else { bail!("--mode at-most needs --width") };
                    match twinwidth_at_most(&g, d, budget).0 {
                        Decision::Found(seq) => {
                            let w = g.replay(&seq)?.overall_width;
                            write_cert(out, &g, w, &seq)?;
                            println!("width={w} status={}", SolveStatus::UpperBound.as_str());
                        }
                        Decision::Infeasible => {
                            println!("infeasible: twin-width exceeds {d}");
                            return Ok(ExitCode::from(1));
                        }
                        Decision::BudgetExhausted => {
                            println!("width=? status={}", SolveStatus::Unknown.as_str());
                        }
                    }
                }
                Mode::Exact => {
                    let opts = SolveOptions {
                        budget,
                        threads,
                        max_vertices,
                        ..SolveOptions::default()
                    };
                    let r = twinwidth_exact(&g, &opts);
                    if let (Some(w), Some(seq)) = (r.width, &r.sequence) {
                        write_cert(out, &g, w, seq)?;
                    }
                    let w = r.width.map_or("?".to_string(), |w| w.to_string());
                    println!("width={w} status={}", r.status.as_str());
                }
            }
        }
        Command::Analyze { k, embedding } => {
            let (report, scan, k) = match (k, embedding) {
                (Some(k), _) => {
                    let g = build_gk(k);
                    let (skel, _) = g.skeleton_subgraph();
                    (analyze_gk(&g)?, scan_nonadjacent_merges(&skel), Some(k))
                }
                (None, Some(p)) => {
                    let emb = parse_embedding(&read(&p)?).with_context(|| p.display().to_string())?;
                    let g = emb.to_trigraph();
                    (check_lemma_hypotheses(&g, &emb)?, scan_nonadjacent_merges(&g), None)
                }
                (None, None) => bail!("one of --k or --embedding is required"),
            };
            let value = json!({ "k": k, "report": report, "nonadjacent_scan": scan });
            print!("{}", json_line(&value)?);
        }
        Command::Export { k, format, skeleton, out } => {
            let g = build_gk(k);
            let (graph, emb) = if skeleton {
                g.skeleton_subgraph()
            } else {
                (g.graph.clone(), g.embedding.clone())
            };
            let text = match format {
                Format::Edges => write_edge_list(&graph),
                Format::Embedding => write_embedding(&emb),
                Format::Dot => write_dot(&graph),
                Format::Meta => json_line(&g.metadata())?,
            };
            emit(out.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
