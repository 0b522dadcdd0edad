//! `spl`: generators, threshold sweeps, triangle decomposition, factor and
//! embedding search, and the verification suites.
//!
//! Exit status: 0 success, 2 usage or input error, 3 instance over the
//! exact-search cap, 4 a checked invariant failed.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use spl_core::embeddings::{
    find_squared_cycle_with, find_squared_path_with, EmbedError, SearchOptions, DEFAULT_SEARCH_CAP,
};
use spl_core::factors::{ctf_exact_with_cap, ctf_lower_bound, validate_factor, FactorError, DEFAULT_EXACT_CAP};
use spl_core::generators::{self, LabeledConstruction};
use spl_core::io::{parse_graph, write_edge_list, write_labels};
use spl_core::stability::stability_witness_with_cap;
use spl_core::thresholds::{parse_rational, sweep, sweep_csv, Variant};
use spl_core::triangles::{component_table, decompose};
use spl_core::verify::{run_suite, verify_tightness, Family, Suite};
use spl_core::Graph;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spl", version, about = "Squared paths and cycles in dense graphs")]
struct Cli {
    /// Run single-threaded so every artifact is reproducible byte for byte.
    #[arg(long, global = true)]
    deterministic: bool,

    /// Largest order for exact searches (overrides SPL_EXACT_CAP).
    #[arg(long, global = true)]
    exact_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and print it as an edge list.
    Gen {
        family: String,
        params: Vec<String>,
        /// Write the edge list here and the labels to `<out>.labels`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV sweep of sqp (or sqc) over a range of minimum degrees.
    Thresholds {
        n: usize,
        /// Inclusive range `a..b`; defaults to the whole domain.
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        cycle: bool,
    },
    /// Per-component table of the triangle decomposition.
    Decompose { graph: String },
    /// A connected triangle factor as JSON.
    Ctf {
        graph: String,
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        #[arg(long)]
        bound: bool,
    },
    /// Search for a squared path or cycle of a given length.
    Find {
        graph: String,
        #[command(flatten)]
        kind: FindKind,
        #[arg(long)]
        len: usize,
    },
    /// Tightness checks and seeded property suites.
    Verify {
        /// `tightness`, or one of lemma3, prop4, parity, squaring, nicepath.
        target: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify the graph into the stability outcomes.
    Stability {
        graph: String,
        #[arg(long)]
        eta: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FindKind {
    #[arg(long)]
    path: bool,
    #[arg(long)]
    cycle: bool,
}

enum Failure {
    Usage(String),
    TooLarge(String),
    Invariant(String, Value),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::TooLarge(_) => 3,
            Failure::Invariant(..) => 4,
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure::Usage(msg.to_string())
}

fn numbers(params: &[String], want: usize, what: &str) -> Result<Vec<usize>, Failure> {
    if params.len() != want {
        return Err(usage(format!("{what} takes {want} integer parameter(s), got {}", params.len())));
    }
    params.iter().map(|p| p.parse().map_err(|_| usage(format!("{p:?} is not a non-negative integer")))).collect()
}

/// Builds a construction from a family name and its parameters.
fn construct(family: &str, params: &[String]) -> Result<LabeledConstruction, Failure> {
    use generators::*;
    let gen_err = |e: GenError| usage(e);
    match family {
        "gp" | "gc" | "tripartite" => {
            let p = numbers(params, 2, family)?;
            let f = match family {
                "gp" => make_gp,
                "gc" => make_gc,
                _ => make_tripartite_extremal,
            };
            f(p[0], p[1]).map_err(gen_err)
        }
        "gpk" => {
            let p = numbers(params, 3, family)?;
            make_gp_k(p[0], p[1], p[2]).map_err(gen_err)
        }
        "tfblock" => make_triangle_free_block(numbers(params, 1, family)?[0]).map_err(gen_err),
        "noc6" => make_no_c6_counterexample(numbers(params, 1, family)?[0]).map_err(gen_err),
        "complete" => Ok(make_complete(numbers(params, 1, family)?[0])),
        "empty" => Ok(make_empty(numbers(params, 1, family)?[0])),
        "cycle" => make_cycle(numbers(params, 1, family)?[0]).map_err(gen_err),
        "path" => Ok(make_path(numbers(params, 1, family)?[0])),
        "petersen" => {
            numbers(params, 0, family)?;
            Ok(make_petersen())
        }
        "gnp" => {
            let [n, p, seed] = params else {
                return Err(usage("gnp takes n, p and seed"));
            };
            let n: usize = n.parse().map_err(|_| usage(format!("bad n {n:?}")))?;
            let p: f64 = p.parse().ok().filter(|p| (0.0..=1.0).contains(p)).ok_or_else(|| usage("bad p"))?;
            let seed: u64 = seed.parse().map_err(|_| usage(format!("bad seed {seed:?}")))?;
            if n > spl_core::MAX_VERTICES {
                return Err(usage(format!("n = {n} exceeds {}", spl_core::MAX_VERTICES)));
            }
            let g = spl_core::random::gnp(n, p, seed);
            Ok(LabeledConstruction {
                name: format!("gnp({n},{p},{seed})"),
                part_labels: vec!["V".into(); n],
                graph: g,
                claims: Vec::new(),
            })
        }
        _ => Err(usage(format!("unknown family {family:?}"))),
    }
}

/// A graph argument: an existing file in either text format, or a
/// generator spec `family:a,b,…`, or a shorthand `k5`, `c6`, `p4`, `e3`.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
        return parse_graph(&text).map_err(|e| usage(format!("{arg}: {e}")));
    }
    let (family, params) = match arg.split_once(':') {
        Some((f, p)) => (f.to_string(), p.split(',').map(str::to_string).collect::<Vec<_>>()),
        None => {
            let short = ["k", "c", "p", "e"].iter().find_map(|pre| {
                let rest = arg.strip_prefix(pre)?;
                rest.parse::<usize>().ok().map(|_| (*pre, rest))
            });
            match short {
                Some((pre, rest)) => {
                    let family = match pre {
                        "k" => "complete",
                        "c" => "cycle",
                        "p" => "path",
                        _ => "empty",
                    };
                    (family.to_string(), vec![rest.to_string()])
                }
                None => (arg.to_string(), Vec::new()),
            }
        }
    };
    construct(&family, &params).map(|c| c.graph)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("values serialise")));
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = s.split_once("..").ok_or_else(|| usage(format!("range {s:?} must look like a..b")))?;
    let a = a.trim().parse().map_err(|_| usage(format!("bad range start {a:?}")))?;
    let b = b.trim_start_matches('=').trim().parse().map_err(|_| usage(format!("bad range end {b:?}")))?;
    if a > b {
        return Err(usage(format!("empty range {s}")));
    }
    Ok((a, b))
}

fn run(cli: Cli, cap_override: Option<usize>) -> Outcome {
    let cap = cap_override.unwrap_or(DEFAULT_EXACT_CAP);
    let search = SearchOptions { cap: cap_override.unwrap_or(DEFAULT_SEARCH_CAP), parallel: !cli.deterministic };
    match cli.command {
        Command::Gen { family, params, out } => {
            let c = construct(&family, &params)?;
            let edges = write_edge_list(&c.graph);
            match out {
                Some(path) => {
                    let mut labels = path.clone().into_os_string();
                    labels.push(".labels");
                    std::fs::write(&path, edges).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    std::fs::write(&labels, write_labels(&c.part_labels))
                        .map_err(|e| usage(format!("{}: {e}", labels.to_string_lossy())))?;
                }
                None => emit(&edges),
            }
            Ok(())
        }
        Command::Thresholds { n, range, cycle } => {
            let (a, b) = match range {
                Some(r) => parse_range(&r)?,
                None => (n / 2 + 1, n.saturating_sub(1)),
            };
            let variant = if cycle { Variant::Cycle } else { Variant::Path };
            let rows = sweep(variant, n, a..=b).map_err(usage)?;
            emit(&sweep_csv(&rows));
            Ok(())
        }
        Command::Decompose { graph } => {
            let g = load_graph(&graph)?;
            emit(&component_table(&g, &decompose(&g)));
            Ok(())
        }
        Command::Ctf { graph, exact, bound } => {
            let g = load_graph(&graph)?;
            let use_exact = exact || (!bound && g.n() <= cap);
            let f = if use_exact {
                ctf_exact_with_cap(&g, cap).map_err(|e| match e {
                    FactorError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
                    e => usage(e),
                })?
            } else {
                ctf_lower_bound(&g)
            };
            if let Err(e) = validate_factor(&g, &f) {
                return Err(Failure::Invariant(e.to_string(), json!({ "command": "ctf", "graph": graph })));
            }
            let mut v = f.to_json();
            v["method"] = json!(if use_exact { "exact" } else { "bound" });
            print_json(&v);
            Ok(())
        }
        Command::Find { graph, kind, len } => {
            let g = load_graph(&graph)?;
            let found = if kind.path {
                find_squared_path_with(&g, len, &search)
            } else {
                find_squared_cycle_with(&g, len, &search)
            };
            match found {
                Ok(Some(w)) => print_json(&json!({ "status": "FOUND", "witness": w.to_json() })),
                Ok(None) => print_json(&json!({ "status": "ABSENT", "len": len })),
                Err(e @ EmbedError::TooLarge { .. }) => return Err(Failure::TooLarge(e.to_string())),
                Err(e) => return Err(usage(e)),
            }
            Ok(())
        }
        Command::Verify { target, params, trials, seed } => {
            if target == "tightness" {
                let [family, rest @ ..] = params.as_slice() else {
                    return Err(usage("verify tightness takes <family> <n> <delta>"));
                };
                let family: Family = family.parse().map_err(usage)?;
                let p = numbers(rest, 2, "verify tightness")?;
                let r = verify_tightness(family, p[0], p[1], &search).map_err(|e| match e {
                    spl_core::verify::VerifyError::Embed(e @ EmbedError::TooLarge { .. }) => {
                        Failure::TooLarge(e.to_string())
                    }
                    e => usage(e),
                })?;
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                emit(&format!("{verdict} {}\n", r.to_json()));
                if !r.passed() {
                    let repro = json!({ "command": "verify tightness", "params": params, "report": r.to_json() });
                    return Err(Failure::Invariant("extremal length differs from the threshold".into(), repro));
                }
                return Ok(());
            }
            let suite: Suite = target.parse().map_err(usage)?;
            if !params.is_empty() {
                return Err(usage(format!("unexpected arguments {params:?}")));
            }
            let report = run_suite(suite, trials, seed);
            print_json(&report.to_json());
            if !report.passed() {
                let repro = json!({ "suite": suite.name(), "trials": trials, "seed": seed });
                return Err(Failure::Invariant(format!("{} failure(s)", report.failures.len()), repro));
            }
            Ok(())
        }
        Command::Stability { graph, eta } => {
            let g = load_graph(&graph)?;
            let eta = parse_rational(&eta).ok_or_else(|| usage(format!("bad eta {eta:?}")))?;
            let w = stability_witness_with_cap(&g, eta, cap).map_err(usage)?;
            print_json(&w.to_json());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_cap = std::env::var("SPL_EXACT_CAP").ok();
    let cap = match (cli.exact_cap, env_cap) {
        (Some(c), _) => Some(c),
        (None, Some(s)) => match s.parse() {
            Ok(c) => Some(c),
            Err(_) => {
                eprintln!("error: SPL_EXACT_CAP={s:?} is not an integer");
                return ExitCode::from(2);
            }
        },
        (None, None) => None,
    };
    if cli.deterministic {
        // Ignore the error if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    match run(cli, cap) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::TooLarge(m) => eprintln!("TOO_LARGE: {m}"),
                Failure::Invariant(m, repro) => {
                    eprintln!("invariant failure: {m}");
                    eprintln!("repro: {repro}");
                }
            }
            ExitCode::from(f.code())
        }
    }
}
