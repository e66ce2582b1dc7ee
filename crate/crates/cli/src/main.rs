mod json;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cut_gorenstein::ehrhart;
use cut_gorenstein::gorenstein::{self, Verdict};
use cut_gorenstein::polytope::{self, CutPolytope};
use cut_gorenstein::sweep::{self, SweepConfig};
use cut_gorenstein::{Error, Graph};
use serde_json::{json, Value};

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const BOUND: u8 = 3;

/// Cut polytopes of small graphs and their Gorenstein classification.
///
/// Graph files contain a header `n m` followed by `m` lines `u v` with
/// vertices numbered from 1; `#` starts a comment. Use `-` for stdin.
/// Exit codes: 0 success, 1 invariant mismatch, 2 usage or input error,
/// 3 enumeration bound exceeded.
#[derive(Parser)]
#[command(name = "cutgor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file in the `n m` + edge list format.
    #[arg(conflicts_with = "graph", required_unless_present = "graph")]
    path: Option<String>,
    /// Named graph instead of a file: Kn, Cn, Pn, Sn, En, Ka,b, Ga,b, petersen.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Gorenstein verdict with a special simplex or violated conditions.
    Classify(Input),
    /// Facet inequalities of the cut polytope.
    Facets {
        #[command(flatten)]
        input: Input,
        /// Use the specialised list for compressed cut polytopes.
        #[arg(long, conflicts_with = "oracle")]
        compressed: bool,
        /// Compute the facets from the vertices by brute force (m <= 7).
        #[arg(long)]
        oracle: bool,
    },
    /// All cut vectors.
    Vertices(Input),
    /// Hilbert function counts and the resulting h-vector.
    Hvector {
        #[command(flatten)]
        input: Input,
        /// Highest degree counted (default m + 2, at least m + 1).
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Least dilation with an interior lattice point.
    Codegree(Input),
    /// Special simplex from the classification, or by exhaustive search.
    SpecialSimplex {
        #[command(flatten)]
        input: Input,
        /// Search all vertex subsets instead (compressed, n <= 5).
        #[arg(long)]
        search: bool,
        /// Largest simplex dimension for --search.
        #[arg(long, default_value_t = 4)]
        d_max: usize,
    },
    /// Decomposition into K3 and K4 blocks glued by clique sums.
    Decompose(Input),
    /// Cross-check the classification against counting and the
    /// interior-point criterion.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Degrees for the interior-point criterion.
        #[arg(long, default_value_t = 2)]
        r_max: usize,
    },
    /// Run the invariant suites over all labeled graphs within bounds.
    Sweep {
        /// Vertex bound for combinatorial suites.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Edge bound for counting suites.
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        /// Vertex bound for counting suites.
        #[arg(long, default_value_t = 5)]
        counting_n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_bound() => BOUND,
            Error::Internal(_) | Error::Overflow(_) => MISMATCH,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    if let Some(name) = &input.graph {
        return Ok(cut_gorenstein::graph::families::by_name(name)?);
    }
    let path = input.path.as_deref().unwrap_or("-");
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?
    };
    Graph::parse_text(&text).map_err(|e| usage(format!("{path}: {e}")))
}

/// One compact line of JSON; keys come out sorted.
fn emit(v: &Value) {
    use std::io::Write;
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{v}");
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify(input) => {
            let g = load(&input)?;
            let cert = gorenstein::classify_gorenstein(&g)?;
            emit(&json::certificate(&cert, &g));
        }
        Command::Facets {
            input,
            compressed,
            oracle,
        } => {
            let g = load(&input)?;
            let (source, fs) = if oracle {
                let p = CutPolytope::new(&g)?;
                (
                    "hull",
                    polytope::hull_facet_oracle(&p.vertex_coords(), g.m())?,
                )
            } else if compressed {
                ("compressed", polytope::compressed_facets(&g)?)
            } else {
                ("barahona", polytope::barahona_facets(&g)?)
            };
            emit(&json!({
                "graph": json::graph(&g),
                "source": source,
                "count": fs.len(),
                "facets": json::facets(&fs),
            }));
        }
        Command::Vertices(input) => {
            let g = load(&input)?;
            let p = CutPolytope::new(&g)?;
            let mut out = json!({
                "graph": json::graph(&g),
                "count": p.vertices().len(),
                "vertices": p.vertices().iter().map(json::cut_vector).collect::<Vec<_>>(),
            });
            if g.m() <= 12 {
                out["dimension"] = json!(p.dimension()?);
            }
            emit(&out);
        }
        Command::Hvector { input, max_degree } => {
            let g = load(&input)?;
            let r = max_degree.unwrap_or_else(|| ehrhart::default_degree(&g));
            if r < g.m() + 1 {
                return Err(usage(format!(
                    "--max-degree must be at least m + 1 = {}",
                    g.m() + 1
                )));
            }
            let hilbert = ehrhart::hilbert_counts(&g, r)?;
            let h = ehrhart::h_vector(&hilbert)?;
            let normality = match ehrhart::ehrhart_counts(&g, r) {
                Ok(e) => json::normality(&ehrhart::compare(&e, &hilbert)),
                Err(e) if e.is_bound() || e == Error::HasK5Minor => {
                    json!({"verdict": "UNAVAILABLE", "reason": e.to_string()})
                }
                Err(e) => return Err(e.into()),
            };
            emit(&json!({
                "graph": json::graph(&g),
                "kind": json::counts_kind(&hilbert),
                "counts": hilbert.values,
                "h": json::h_vector(&h),
                "symmetric": h.is_symmetric(),
                "unimodal": h.is_unimodal(),
                "normality": normality,
            }));
        }
        Command::Codegree(input) => {
            let g = load(&input)?;
            let c = polytope::codegree(&g)?;
            emit(&json!({
                "graph": json::graph(&g),
                "codegree": c.k,
                "witness": c.witness,
                "formula": polytope::codegree_formula(&g),
            }));
        }
        Command::SpecialSimplex {
            input,
            search,
            d_max,
        } => {
            let g = load(&input)?;
            let simplex = if search {
                gorenstein::special_simplex_search(&g, d_max)?
            } else {
                let cert = gorenstein::classify_gorenstein(&g)?;
                cert.simplex
            };
            let valid = match (&simplex, g.has_k5_minor()) {
                (Some(s), false) => {
                    let fs = polytope::barahona_facets(&g)?;
                    let verts = polytope::cut_vertices(&g)?;
                    Some(gorenstein::verify_special_simplex(&fs, s, &verts)?.is_valid())
                }
                _ => None,
            };
            emit(&json!({
                "graph": json::graph(&g),
                "method": if search { "search" } else { "construction" },
                "special_simplex": simplex.as_ref().map(json::simplex),
                "verified": valid,
            }));
            if valid == Some(false) {
                return Ok(MISMATCH);
            }
        }
        Command::Decompose(input) => {
            let g = load(&input)?;
            let t = g.clique_sum_decompose()?;
            let mut out = json::decomposition(t.as_ref());
            out["graph"] = json::graph(&g);
            emit(&out);
        }
        Command::Verify { input, r_max } => {
            let g = load(&input)?;
            return verify(&g, r_max);
        }
        Command::Sweep {
            max_n,
            max_m,
            counting_n,
        } => {
            if max_n > 7 || counting_n > 5 {
                return Err(Failure {
                    code: BOUND,
                    message: "sweep supports --max-n <= 7 and --counting-n <= 5".into(),
                });
            }
            let cfg = SweepConfig {
                max_n,
                counting_n,
                max_m,
            };
            println!("{:<40} {:>10} {:>8}  status", "suite", "checked", "skipped");
            let reports = sweep::run(&cfg, |r| {
                println!(
                    "{:<40} {:>10} {:>8}  {}",
                    r.name,
                    r.checked,
                    r.skipped,
                    if r.violation.is_some() { "FAIL" } else { "ok" }
                );
            })?;
            if let Some(v) = reports.iter().find_map(|r| r.violation.as_ref()) {
                eprintln!("invariant violated: {v}");
                return Ok(MISMATCH);
            }
        }
    }
    Ok(OK)
}

fn verify(g: &Graph, r_max: usize) -> Result<u8, Failure> {
    let cert = gorenstein::classify_gorenstein(g)?;
    let oracle = gorenstein::gorenstein_oracle(g)?;
    let classified = cert.verdict == Verdict::Gorenstein;
    let criterion = if g.has_k5_minor() {
        None
    } else {
        Some(gorenstein::criterion_check(g, r_max)?)
    };
    let agree = oracle.verdict.as_bool().map(|o| o == classified);
    // a failed necessary condition contradicts a GORENSTEIN verdict
    let criterion_ok = criterion.as_ref().is_none_or(|c| c.holds() || !classified);
    emit(&json!({
        "graph": json::graph(g),
        "classify": json::verdict(cert.verdict),
        "oracle": json::oracle(&oracle),
        "criterion": criterion.as_ref().map(json::criterion),
        "agree": agree,
    }));
    match agree {
        None => Err(Failure {
            code: BOUND,
            message: "counting oracle out of bounds; classification not cross-checked".into(),
        }),
        Some(false) => Ok(MISMATCH),
        Some(true) if !criterion_ok => Ok(MISMATCH),
        Some(true) => Ok(OK),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("cutgor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
