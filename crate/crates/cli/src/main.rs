//! `clique`: clique graphs, iterated clique graphs, Helly and necktie
//! classification, homotopy-preserving reductions and corpus verification.
//! Graphs travel between subcommands as graph6 on stdin/stdout.

mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clique_homotopy::cliques::{
    classify_k2_vertices, clique_graph, is_helly, iterate_clique_graph, IterationStatus, K2Vertex, K2VertexClass,
};
use clique_homotopy::graph::{
    compare_graphs, emit_graph6, gen_complete, gen_cycle, gen_octahedron, gen_sun3, IsoVerdict,
};
use clique_homotopy::harness::{run_corpus, Check, CorpusSource, CorpusSpec, RunOptions, VerifyOptions};
use clique_homotopy::homology::{homotopy_signature_with_budget, DEFAULT_SIMPLEX_BUDGET};
use clique_homotopy::reduce::{build_h_clique_level, build_h_invariance, dismantle, low_degree_reduce, ReductionTrace};
use clique_homotopy::{Error, Graph, VertexSet};
use serde_json::{json, Value};

const BUDGET_VAR: &str = "CLIQUE_SIMPLEX_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                Error::Parse { .. }
                | Error::EdgeList { .. }
                | Error::EmptyGraph
                | Error::VertexOutOfRange { .. }
                | Error::InvalidArgument(_)
                | Error::NotLowDegree(_)
                | Error::TooLargeForIsomorphism { .. }
                | Error::Io(_),
            ) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "clique", version, about = "Clique graph operator and homotopy toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct GraphInput {
    /// graph6 or DIMACS edge list; stdin when omitted
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit K(G) as graph6, followed by `# label i: {clique}` lines
    Kgraph(GraphInput),
    /// Report |K^i(G)| for i = 0..=steps as JSON
    Iterate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 100_000)]
        max_vertices: usize,
    },
    /// Decide whether G is clique-Helly; a necktie is the witness
    Helly(GraphInput),
    /// Classify every vertex of K²(G) as a star or a necktie, one JSON line each
    #[command(name = "classify-k2")]
    ClassifyK2(GraphInput),
    /// Run a reduction pipeline and print its trace (or only the final graph)
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Pipeline::Wedge)]
        pipeline: Pipeline,
        /// Print the final graph as graph6 instead of the trace
        #[arg(long)]
        graph_only: bool,
    },
    /// Print the Euler characteristic and GF(2) Betti numbers of Cl(G)
    Betti(GraphInput),
    /// Generate a named graph as graph6
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Family parameter; ignored for sun3
        #[arg(long, default_value_t = 3)]
        param: usize,
    },
    /// Verify a corpus and write one JSON record per graph plus a summary line
    Verify {
        /// Vertex bound; required unless --input is given
        #[arg(long)]
        max_n: Option<usize>,
        /// graph6 corpus file instead of generated graphs
        #[arg(long)]
        input: Option<PathBuf>,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write records here; the summary line still goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated check names; defaults to every applicable check
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// All connected graphs rather than the low degree ones
        #[arg(long)]
        all_connected: bool,
        /// Record 0 ms everywhere so that reports are byte-reproducible
        #[arg(long)]
        no_timings: bool,
    },
    /// Compare two graphs ("-" reads stdin); exit 0 iff isomorphic
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pipeline {
    /// low degree graph to a triangle-free graph
    Wedge,
    /// twin-class retraction of G
    H4,
    /// internal-triangle retraction of K(G)
    H5,
    /// greedy dominated vertex removal
    Dismantle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Octahedron,
    Cycle,
    Complete,
    Sun3,
}

fn simplex_budget() -> Result<usize, CliError> {
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(DEFAULT_SIMPLEX_BUDGET),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR} must be a non-negative integer, got {v:?}"))),
    }
}

fn members(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn k2_json(index: usize, v: &K2Vertex) -> Value {
    match &v.class {
        K2VertexClass::Star { vertex, all } => json!({
            "index": index, "members": members(&v.members), "kind": "star", "vertex": vertex, "all": all,
        }),
        K2VertexClass::Necktie { shape } => json!({
            "index": index,
            "members": members(&v.members),
            "kind": "necktie",
            "center": shape.as_ref().map(|s| members(&s.center)),
            "ears": shape.as_ref().map(|s| s.ears.iter().map(members).collect::<Vec<_>>()),
        }),
    }
}

fn status_json(status: IterationStatus) -> Value {
    match status {
        IterationStatus::Completed(steps) => json!({"status": "completed", "steps": steps}),
        IterationStatus::BudgetExceeded {
            step,
            vertices_at_least,
        } => {
            json!({"status": "budget_exceeded", "step": step, "vertices_at_least": vertices_at_least})
        }
        IterationStatus::FixedPointDetected(step) => json!({"status": "fixed_point", "step": step}),
    }
}

fn reduction(g: &Graph, pipeline: Pipeline) -> Result<ReductionTrace, CliError> {
    Ok(match pipeline {
        Pipeline::Wedge => low_degree_reduce(g)?.trace,
        Pipeline::H4 => build_h_invariance(g)?.1.to_trace()?,
        Pipeline::H5 => build_h_clique_level(g)?.retraction.to_trace()?,
        Pipeline::Dismantle => dismantle(g)?.trace,
    })
}

fn selected_checks(names: &[String], all_connected: bool) -> Result<Vec<Check>, CliError> {
    if names.is_empty() {
        return Ok(Check::ALL
            .into_iter()
            .filter(|c| !all_connected || !c.needs_low_degree())
            .collect());
    }
    names
        .iter()
        .map(|n| {
            Check::from_name(n.trim()).ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                CliError::Usage(format!("unknown check {n:?}; known: {}", known.join(", ")))
            })
        })
        .collect()
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Kgraph(inp) => {
            let g = input::read_graph(inp.input.as_ref())?;
            let r = clique_graph(&g)?;
            writeln!(out, "{}", emit_graph6(&r.kg))?;
            for (i, q) in r.labels.iter().enumerate() {
                writeln!(out, "# label {i}: {q}")?;
            }
        }
        Command::Iterate {
            input,
            steps,
            max_vertices,
        } => {
            let g = input::read_graph(input.input.as_ref())?;
            let o = iterate_clique_graph(&g, steps, max_vertices)?;
            let orders: Vec<Option<usize>> = o
                .graphs
                .iter()
                .map(|k| k.as_ref().and_then(Graph::octahedron_order))
                .collect();
            let mut v = status_json(o.status);
            v["sizes"] = json!(o.sizes);
            v["octahedron_orders"] = json!(orders);
            writeln!(out, "{v}")?;
        }
        Command::Helly(inp) => {
            let g = input::read_graph(inp.input.as_ref())?;
            let r = is_helly(&g)?;
            let witness = r.witness.as_ref().map(|w| k2_json(0, w));
            writeln!(out, "{}", json!({"helly": r.helly, "witness": witness}))?;
        }
        Command::ClassifyK2(inp) => {
            let g = input::read_graph(inp.input.as_ref())?;
            for (i, v) in classify_k2_vertices(&g)?.iter().enumerate() {
                writeln!(out, "{}", k2_json(i, v))?;
            }
        }
        Command::Reduce {
            input,
            pipeline,
            graph_only,
        } => {
            let g = input::read_graph(input.input.as_ref())?;
            let trace = reduction(&g, pipeline)?;
            if graph_only {
                writeln!(out, "{}", emit_graph6(&trace.final_graph))?;
            } else {
                write!(out, "{}", trace.to_text())?;
            }
        }
        Command::Betti(inp) => {
            let g = input::read_graph(inp.input.as_ref())?;
            writeln!(out, "{}", homotopy_signature_with_budget(&g, simplex_budget()?)?)?;
        }
        Command::Gen { family, param } => {
            let g = match family {
                Family::Octahedron => gen_octahedron(param)?,
                Family::Cycle => gen_cycle(param)?,
                Family::Complete => gen_complete(param)?,
                Family::Sun3 => gen_sun3(),
            };
            writeln!(out, "{}", emit_graph6(&g))?;
        }
        Command::Verify {
            max_n,
            input,
            jobs,
            out: out_path,
            checks,
            all_connected,
            no_timings,
        } => {
            let source = match input {
                Some(p) => CorpusSource::File(p),
                None => CorpusSource::Generated { dedup: true },
            };
            let max_n = match (max_n, &source) {
                (Some(n), _) => n,
                (None, CorpusSource::File(_)) => usize::MAX,
                (None, _) => return Err(CliError::Usage("verify needs --max-n or --input".into())),
            };
            let base = if all_connected {
                CorpusSpec::all_connected(max_n)
            } else {
                CorpusSpec::low_degree(max_n)
            };
            let spec = CorpusSpec { source, ..base };
            let opts = RunOptions {
                jobs,
                verify: VerifyOptions {
                    record_timings: !no_timings,
                    simplex_budget: simplex_budget()?,
                    ..VerifyOptions::default()
                },
            };
            let checks = selected_checks(&checks, all_connected)?;
            let summary = match out_path {
                Some(p) => {
                    let file =
                        File::create(&p).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", p.display())))?;
                    let mut w = BufWriter::new(file);
                    let s = run_corpus(&spec, &checks, &opts, &mut w)?;
                    w.flush()?;
                    writeln!(out, "{}", serde_json::to_string(&s).expect("summary serializes"))?;
                    s
                }
                None => run_corpus(&spec, &checks, &opts, out)?,
            };
            if summary.failed > 0 {
                eprintln!(
                    "{} of {} graphs failed at least one check",
                    summary.failed, summary.total
                );
                return Ok(ExitCode::from(1));
            }
        }
        Command::Iso { a, b } => {
            let stdin = PathBuf::from("-");
            if a == stdin && b == stdin {
                return Err(CliError::Usage("only one operand can be read from stdin".into()));
            }
            let (g, h) = (input::read_graph(Some(&a))?, input::read_graph(Some(&b))?);
            let (verdict, method) = compare_graphs(&g, &h);
            let word = match verdict {
                IsoVerdict::Isomorphic => "isomorphic",
                IsoVerdict::NotIsomorphic => "not isomorphic",
                IsoVerdict::Undetermined => "undetermined",
            };
            writeln!(out, "{word} ({method})")?;
            if verdict != IsoVerdict::Isomorphic {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("clique: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
