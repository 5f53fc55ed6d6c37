//! The `convexity` command line.
//!
//! Exit codes: 0 when everything passed, 1 when a scan found a failing
//! check, 2 for usage, input and capacity errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::convexity::{Alignment, ConvexityKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph_text, write_graph6};
use crate::harness::{parse_checks, run_corpus, Corpus};
use crate::intervals::{
    geodesic_interval, m3_interval_pair, m3_interval_set, monophonic_interval_pair,
    monophonic_interval_set, steiner_interval,
};
use crate::patterns::{catalog, is_a_free, is_chordal, is_hhd_free, is_hhda_free};

#[derive(Debug, Parser)]
#[command(name = "convexity", version, about = "Interval convexities on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an interval of a vertex pair or set.
    Interval {
        /// graph6 string, path to a graph6/edge-list file, or `-` for stdin.
        #[arg(long)]
        graph: String,
        /// g, m, m3, mset or steiner.
        #[arg(long)]
        kind: String,
        /// Comma-separated vertices.
        #[arg(long)]
        vertices: String,
    },
    /// Print the convex hull of a vertex set.
    Hull {
        #[arg(long)]
        graph: String,
        /// g, m, m3, m3k:<k>, m33 or gk:<k>.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        set: String,
    },
    /// Print freeness properties and which standard convexities are convex geometries.
    Analyze {
        #[arg(long)]
        graph: String,
    },
    /// Run checks over a corpus and write a report.
    Scan {
        /// Vertex counts, `a..b` (inclusive) or a single `n`.
        #[arg(long, default_value = "1..7")]
        n: String,
        /// Read the corpus from a graph6 file instead of enumerating.
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads, defaulting to all cores. The report does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
        /// JSON report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV report path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include disconnected graphs in the enumerated corpus.
        #[arg(long)]
        include_disconnected: bool,
        /// Enumerate labelled graphs instead of isomorphism classes.
        #[arg(long)]
        labeled: bool,
    },
    /// List the forbidden-pattern catalog.
    Catalog {
        /// One line per family member: name, optional-edge subset, graph6.
        #[arg(long)]
        emit_g6: bool,
    },
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Interval {
            graph,
            kind,
            vertices,
        } => {
            let g = load_graph(&graph)?;
            let vs = parse_vertices(&vertices)?;
            let set: VertexSet = vs.iter().copied().collect();
            let pair = || -> Result<(usize, usize)> {
                match vs[..] {
                    [u, v] => Ok((u, v)),
                    _ => Err(Error::Usage(format!(
                        "interval kind `{kind}` takes exactly two vertices"
                    ))),
                }
            };
            let interval = match kind.as_str() {
                "g" => {
                    let (u, v) = pair()?;
                    geodesic_interval(&g, u, v)?
                }
                "m" => {
                    let (u, v) = pair()?;
                    monophonic_interval_pair(&g, u, v)?
                }
                "m3" if vs.len() == 2 => m3_interval_pair(&g, vs[0], vs[1])?,
                "m3" => m3_interval_set(&g, set)?,
                "mset" => monophonic_interval_set(&g, set)?,
                "steiner" => steiner_interval(&g, set)?,
                other => {
                    return Err(Error::Usage(format!(
                        "unknown interval kind `{other}` (expected g, m, m3, mset or steiner)"
                    )))
                }
            };
            writeln!(out, "{}", format_set(interval))?;
            Ok(0)
        }
        Command::Hull { graph, kind, set } => {
            let g = load_graph(&graph)?;
            let kind: ConvexityKind = kind.parse()?;
            let s: VertexSet = parse_vertices(&set)?.into_iter().collect();
            g.check_set(s)?;
            let hull = Alignment::new(&g, kind)?.hull(s);
            writeln!(out, "{}", format_set(hull))?;
            Ok(0)
        }
        Command::Analyze { graph } => {
            let g = load_graph(&graph)?;
            analyze(&g, out)?;
            Ok(0)
        }
        Command::Scan {
            n,
            graph6_file,
            checks,
            jobs,
            out: json_path,
            csv,
            include_disconnected,
            labeled,
        } => {
            let checks = parse_checks(&checks)?;
            let corpus = match graph6_file {
                Some(path) => Corpus::from_graph6_file(&path)?,
                None => {
                    let (lo, hi) = parse_range(&n)?;
                    Corpus::enumerated(lo..=hi, !include_disconnected, !labeled)?
                }
            };
            let jobs = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |p| p.get())
            });
            let report = run_corpus(&corpus, &checks, jobs)?;
            if let Some(path) = json_path {
                std::fs::write(path, report.to_json())?;
            }
            if let Some(path) = csv {
                std::fs::write(path, report.to_csv()?)?;
            }
            writeln!(out, "graphs: {}", report.results.len())?;
            for (name, t) in &report.summary {
                writeln!(
                    out,
                    "{name}: pass={} fail={} skipped={}",
                    t.pass, t.fail, t.skipped
                )?;
            }
            writeln!(err, "elapsed: {:.2?}", report.elapsed)?;
            Ok(if report.failures() == 0 { 0 } else { 1 })
        }
        Command::Catalog { emit_g6 } => {
            for fam in catalog() {
                if emit_g6 {
                    let width = fam.optional.len();
                    for (subset, member) in fam.members().iter().enumerate() {
                        let bits = if width == 0 {
                            "-".to_string()
                        } else {
                            format!("{subset:0width$b}")
                        };
                        writeln!(out, "{}\t{bits}\t{}", fam.name, write_graph6(member))?;
                    }
                } else {
                    writeln!(
                        out,
                        "{}\tvertices={}\trequired={}\toptional={}\tmembers={}",
                        fam.name,
                        fam.order(),
                        fam.required.len(),
                        fam.optional.len(),
                        1usize << fam.optional.len()
                    )?;
                }
            }
            Ok(0)
        }
    }
}

fn analyze(g: &Graph, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "graph6: {}", write_graph6(g))?;
    writeln!(out, "order: {}", g.order())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    writeln!(out, "connected: {}", g.is_connected())?;
    writeln!(out, "chordal: {}", is_chordal(g))?;
    writeln!(out, "hhd_free: {}", is_hhd_free(g))?;
    writeln!(out, "hhda_free: {}", is_hhda_free(g))?;
    writeln!(out, "a_free: {}", is_a_free(g))?;
    for kind in ConvexityKind::STANDARD {
        let verdict = Alignment::new(g, kind).and_then(|a| a.is_convex_geometry());
        let text = match verdict {
            Ok(b) => b.to_string(),
            Err(Error::Capacity { .. }) => "capacity".to_string(),
            Err(e) => return Err(e),
        };
        writeln!(out, "geometry {kind}: {text}")?;
    }
    Ok(())
}

fn format_set(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_vertices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Usage(format!("invalid vertex `{t}`")))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Usage(format!("invalid order range `{text}` (expected a..b or n)"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim_start_matches('=').trim()),
        None => (text.trim(), text.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// A graph6 string, a file holding graph6 or an edge list, or `-` for stdin.
fn load_graph(input: &str) -> Result<Graph> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return parse_graph_text(&text);
    }
    let path = std::path::Path::new(input);
    if path.is_file() {
        return parse_graph_text(&std::fs::read_to_string(path)?);
    }
    parse_graph_text(input)
}
