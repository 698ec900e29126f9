//! Command-line front end: ingest or generate graphs, compute centrality
//! scores, compare measure pairs, summarize ensembles, and render SVG
//! plots. Every randomized subcommand requires an explicit --seed, and
//! identical command lines produce byte-identical outputs. Each CSV gets a
//! JSON metadata sidecar (`<out>.meta.json`) recording measure
//! descriptors, seeds, and the graph digest.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use ccc::centrality::Measure;
use ccc::curve::ccc_with_rule;
use ccc::ensemble::run_ensemble;
use ccc::generate::ModelSpec;
use ccc::graph::{parse_snap, Graph};
use ccc::io::{read_plot_csv, write_curve_csv, write_scores_csv, write_summary_csv, PlotInput};
use ccc::ordering::TieRule;
use ccc::plot::{emit_svg, PlotSeries, PlotSpec};

#[derive(Parser)]
#[command(
    name = "ccc",
    about = "Centrality comparison curves: compute, compare, and plot vertex centrality rankings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file (SNAP plain text: '#' comments, one "u v" pair per line)
    #[arg(long)]
    graph: PathBuf,
    /// Treat the edge list as undirected (default: directed)
    #[arg(long)]
    undirected: bool,
}

impl GraphInput {
    fn load(&self) -> ccc::Result<Graph> {
        let file = File::open(&self.graph)?;
        let pairs = parse_snap(BufReader::new(file))?;
        Ok(Graph::from_edge_list(&pairs, !self.undirected))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an edge list and write it back in canonical form
    Ingest {
        /// Input edge-list file
        #[arg(long)]
        input: PathBuf,
        /// Treat the edge list as undirected (default: directed)
        #[arg(long)]
        undirected: bool,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample a graph from a generative model
    Generate {
        /// Model spec, e.g. directed_cm:n=10000,alpha=3 or
        /// graphon:kind=threshold,n=2000
        #[arg(long)]
        model: String,
        /// RNG seed (required: all randomness is explicit)
        #[arg(long)]
        seed: u64,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute one centrality measure, writing vertex,score CSV
    Centrality {
        #[command(flatten)]
        graph: GraphInput,
        /// Measure descriptor, e.g. pagerank:c=0.85 or betweenness:k=6
        #[arg(long)]
        measure: String,
        /// Output CSV file
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare two measures: the comparison curve as x,ccc CSV
    Ccc {
        #[command(flatten)]
        graph: GraphInput,
        /// First measure descriptor
        #[arg(long)]
        measure_a: String,
        /// Second measure descriptor
        #[arg(long)]
        measure_b: String,
        /// Tie-break seed (required: all randomness is explicit)
        #[arg(long)]
        seed: u64,
        /// Tie-break rule: hierarchical (default), random-ties, or
        /// primary-only (the latter two are diagnostics)
        #[arg(long, default_value = "hierarchical")]
        tie_rule: String,
        /// Output CSV file
        #[arg(long)]
        out: PathBuf,
    },
    /// Replicate (generate, measure, compare) runs: x,mean,std CSV
    Ensemble {
        /// Model spec (see generate)
        #[arg(long)]
        model: String,
        /// First measure descriptor
        #[arg(long)]
        measure_a: String,
        /// Second measure descriptor
        #[arg(long)]
        measure_b: String,
        /// Number of replicates
        #[arg(long)]
        replicates: usize,
        /// Root seed; replicates derive independent streams from it
        #[arg(long)]
        seed: u64,
        /// Output CSV file
        #[arg(long)]
        out: PathBuf,
    },
    /// Render curves and summaries to a standalone SVG
    Plot {
        /// Curve CSV (x,ccc); repeatable
        #[arg(long = "curve")]
        curves: Vec<PathBuf>,
        /// Summary CSV (x,mean,std), drawn with a +-1 std band; repeatable
        #[arg(long = "summary")]
        summaries: Vec<PathBuf>,
        /// Legend labels, applied to curves then summaries (default: file
        /// stems); repeatable
        #[arg(long = "label")]
        labels: Vec<String>,
        /// Reference curves to draw: comma-separated subset of
        /// identity,square,opposed
        #[arg(long)]
        refs: Option<String>,
        /// Plot title
        #[arg(long, default_value = "")]
        title: String,
        /// Output SVG file
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> ccc::Result<()> {
    match command {
        Command::Ingest { input, undirected, out } => {
            let file = File::open(&input)?;
            let pairs = parse_snap(BufReader::new(file))?;
            let graph = Graph::from_edge_list(&pairs, !undirected);
            write_graph(&graph, &out)?;
            write_sidecar(
                &out,
                serde_json::json!({
                    "command": "ingest",
                    "input": input,
                    "directed": graph.is_directed(),
                    "n": graph.n(),
                    "m": graph.m(),
                    "graph_hash": format!("{:016x}", graph.fingerprint()),
                }),
            )
        }
        Command::Generate { model, seed, out } => {
            let spec: ModelSpec = model.parse()?;
            let graph = spec.generate(seed)?;
            write_graph(&graph, &out)?;
            write_sidecar(
                &out,
                serde_json::json!({
                    "command": "generate",
                    "model": spec.to_string(),
                    "seed": seed,
                    "directed": graph.is_directed(),
                    "n": graph.n(),
                    "m": graph.m(),
                    "graph_hash": format!("{:016x}", graph.fingerprint()),
                }),
            )
        }
        Command::Centrality { graph, measure, out } => {
            let g = graph.load()?;
            let m: Measure = measure.parse()?;
            let scores = m.compute(&g)?;
            let mut w = BufWriter::new(File::create(&out)?);
            write_scores_csv(&mut w, &g, &scores)?;
            w.flush()?;
            write_sidecar(
                &out,
                serde_json::json!({
                    "command": "centrality",
                    "graph": graph.graph,
                    "graph_hash": format!("{:016x}", g.fingerprint()),
                    "directed": g.is_directed(),
                    "measure": m.descriptor(),
                }),
            )
        }
        Command::Ccc {
            graph,
            measure_a,
            measure_b,
            seed,
            tie_rule,
            out,
        } => {
            let g = graph.load()?;
            let a: Measure = measure_a.parse()?;
            let b: Measure = measure_b.parse()?;
            let rule: TieRule = tie_rule.parse()?;
            let sa = a.compute(&g)?;
            let sb = b.compute(&g)?;
            let curve = ccc_with_rule(&sa, &sb, seed, rule)?;
            let mut w = BufWriter::new(File::create(&out)?);
            write_curve_csv(&mut w, &curve)?;
            w.flush()?;
            write_sidecar(
                &out,
                serde_json::json!({
                    "command": "ccc",
                    "graph": graph.graph,
                    "graph_hash": format!("{:016x}", g.fingerprint()),
                    "directed": g.is_directed(),
                    "measures": [a.descriptor(), b.descriptor()],
                    "seed": seed,
                    "tie_rule": tie_rule,
                }),
            )
        }
        Command::Ensemble {
            model,
            measure_a,
            measure_b,
            replicates,
            seed,
            out,
        } => {
            let spec: ModelSpec = model.parse()?;
            let a: Measure = measure_a.parse()?;
            let b: Measure = measure_b.parse()?;
            let summary = run_ensemble(&spec, &a, &b, replicates, seed)?;
            let mut w = BufWriter::new(File::create(&out)?);
            write_summary_csv(&mut w, &summary)?;
            w.flush()?;
            write_sidecar(
                &out,
                serde_json::json!({
                    "command": "ensemble",
                    "model": spec.to_string(),
                    "measures": [a.descriptor(), b.descriptor()],
                    "replicates": replicates,
                    "seed": seed,
                }),
            )
        }
        Command::Plot {
            curves,
            summaries,
            labels,
            refs,
            title,
            out,
        } => {
            let mut series = Vec::new();
            let mut label_iter = labels.into_iter();
            let mut next_label = |path: &Path| {
                label_iter.next().unwrap_or_else(|| {
                    path.file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| "curve".into())
                })
            };
            for path in &curves {
                let input = read_plot_csv(BufReader::new(File::open(path)?))?;
                let PlotInput::Curve(rows) = input else {
                    return Err(ccc::Error::InvalidParameter(format!(
                        "{} holds summary data; pass it via --summary",
                        path.display()
                    )));
                };
                series.push(PlotSeries {
                    label: next_label(path),
                    points: rows,
                    band: None,
                });
            }
            for path in &summaries {
                let input = read_plot_csv(BufReader::new(File::open(path)?))?;
                let PlotInput::Summary(rows) = input else {
                    return Err(ccc::Error::InvalidParameter(format!(
                        "{} holds curve data; pass it via --curve",
                        path.display()
                    )));
                };
                series.push(PlotSeries {
                    label: next_label(path),
                    points: rows.iter().map(|&(x, m, _)| (x, m)).collect(),
                    band: Some(rows.iter().map(|&(_, m, s)| (m - s, m + s)).collect()),
                });
            }
            let mut spec = PlotSpec {
                series,
                title,
                ..Default::default()
            };
            if let Some(refs) = refs {
                for name in refs.split(',') {
                    match name.trim() {
                        "identity" => spec.show_identity = true,
                        "square" => spec.show_square = true,
                        "opposed" => spec.show_opposed = true,
                        other => {
                            return Err(ccc::Error::InvalidParameter(format!(
                                "unknown reference curve {other:?}"
                            )))
                        }
                    }
                }
            }
            let svg = emit_svg(&spec)?;
            let mut w = BufWriter::new(File::create(&out)?);
            w.write_all(svg.as_bytes())?;
            w.flush()?;
            Ok(())
        }
    }
}

fn write_graph(graph: &Graph, out: &Path) -> ccc::Result<()> {
    let mut w = BufWriter::new(File::create(out)?);
    graph.write_snap(&mut w)?;
    w.flush()?;
    Ok(())
}

fn write_sidecar(out: &Path, mut meta: serde_json::Value) -> ccc::Result<()> {
    meta["schema"] = serde_json::Value::from("ccc-meta/1");
    let path = sidecar_path(out);
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, &meta).map_err(std::io::Error::other)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|s| s.to_os_string()).unwrap_or_default();
    name.push(".meta.json");
    out.with_file_name(name)
}
