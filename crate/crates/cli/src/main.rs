use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use domreconf::census::{self, CensusReport, RegularCensusOptions};
use domreconf::domination::{
    count_dominating_sets, cycle_dominating_count, domination_number, domination_polynomial,
};
use domreconf::family::parse_family_spec;
use domreconf::formats::{parse_edge_list, parse_graph6, to_graph6};
use domreconf::gen::{generate_graphs, write_graph6_lines, GraphClassFilter};
use domreconf::reconfig::{build_dominating_graph_capped, dsr_reachable_capped, DsrQuery};
use domreconf::{Error, Graph, VertexSet};

const DEFAULT_MAX_SETS: u64 = 1 << 20;

#[derive(Parser)]
#[command(
    name = "domreconf",
    version,
    about = "k-dominating graphs, reconfiguration and census checks"
)]
struct Cli {
    /// Cap on dominating sets materialized by `build` and states explored by `dsr`.
    #[arg(long, global = true, env = "DOMRECONF_MAX_SETS", default_value_t = DEFAULT_MAX_SETS,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_sets: u64,

    /// Worker threads for censuses (other commands run on one thread).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domination polynomial and total number of dominating sets.
    Poly {
        #[command(flatten)]
        input: GraphInput,
        /// Count via the cycle recurrence instead of enumeration (cycles only).
        #[arg(long)]
        recurrence: bool,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// Build D_k(G).
    Build {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
        /// Shorthand for `--out dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether one dominating set reconfigures into another within D_k(G).
    Dsr {
        #[command(flatten)]
        input: GraphInput,
        /// Start set, 0-indexed, e.g. `0,2` or `{0,2}`.
        #[arg(long)]
        start: String,
        /// Goal set, same notation as --start.
        #[arg(long)]
        goal: String,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// Emit one graph6 line per isomorphism class of the given order.
    Generate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Only graphs without isolated vertices.
        #[arg(long)]
        isolate_free: bool,
    },
    /// Run an exhaustive claim check and report the verdict.
    Census(CensusArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph in the chosen format; `-` reads stdin, and edge lists may be a file path.
    input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
    /// Family spec such as `cycle:5` or `join(path:3,complete:2)`.
    #[arg(long, conflicts_with_all = ["input", "format"])]
    family: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
    Family,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportOut {
    Json,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    /// Parity bipartition, order parities and Δ(D_n) = n.
    Basic,
    /// Graphs isomorphic to one of their own k-dominating graphs.
    SelfIso,
    /// r-regular connected dominating graphs of connected graphs.
    Regular,
    /// Paths that arise as dominating graphs of connected graphs.
    Path,
    /// The three fixed disconnected examples.
    Disconnected,
    /// Connectivity thresholds and the matching bound.
    Connectivity,
    /// Connectivity of D_k for stars.
    StarConnectivity,
    /// Degree of γ-sets in D_{γ+1}.
    DegreeLaw,
    /// Realizability of every odd number of dominating sets.
    OddOrder,
    /// D_2(G + K_1) is a star when γ(G) ≥ 3 (needs a graph input).
    StarFamily,
    /// Every claim above except star-family, at default sizes.
    All,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(value_enum)]
    claim: Claim,
    /// Largest graph order swept (claim-specific default).
    #[arg(short = 'n')]
    n_max: Option<usize>,
    /// Regularity for `regular`.
    #[arg(short = 'r', default_value_t = 2)]
    r: usize,
    /// Let `regular` quantify over graphs with isolated vertices too.
    #[arg(long)]
    allow_isolates: bool,
    #[arg(long, value_enum, default_value_t = ReportOut::Markdown)]
    out: ReportOut,
    /// Also write `<claim>.json`, `<claim>.md` and `summary.md` here.
    #[arg(long)]
    output_dir: Option<PathBuf>,
    #[command(flatten)]
    input: GraphInput,
}

enum Failure {
    Usage(String),
    Cap(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. }
            | Error::TooLargeForExactMatching { .. }
            | Error::TooLargeForExhaustive { .. }
            | Error::OutputCapExceeded { .. }
            | Error::TooLargeForCanonical { .. }
            | Error::TooLargeForCensus { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(spec) = &input.family {
        return Ok(parse_family_spec(spec)?);
    }
    let raw = input
        .input
        .as_deref()
        .ok_or_else(|| Failure::Usage("missing graph input (positional or --family)".into()))?;
    let text = if raw == "-" {
        read_stdin()?
    } else {
        raw.to_string()
    };
    Ok(match input.format {
        Format::G6 => parse_graph6(text.trim())?,
        Format::Family => parse_family_spec(text.trim())?,
        Format::Edges => {
            let path = std::path::Path::new(&text);
            if raw != "-" && path.is_file() {
                parse_edge_list(&fs::read_to_string(path)?)?
            } else {
                parse_edge_list(&text)?
            }
        }
    })
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = VertexSet::default();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Usage(format!("bad vertex `{part}` in set `{text}`")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        set = set.with(v);
    }
    Ok(set)
}

fn cycle_order(g: &Graph) -> Option<usize> {
    let n = g.n();
    let is_cycle = match n {
        1 => true,
        2 => g.edge_count() == 1,
        _ => g.is_connected() && g.degrees().iter().all(|&d| d == 2),
    };
    is_cycle.then_some(n)
}

fn cmd_poly(input: &GraphInput, recurrence: bool, out: Out) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let n = g.n();
    if recurrence {
        let n = cycle_order(&g)
            .ok_or_else(|| Failure::Usage("--recurrence applies to cycles only".into()))?;
        let total = cycle_dominating_count(n)?;
        match out {
            Out::Json => println!(
                "{}",
                json!({"n": n, "total": total.to_string(), "method": "recurrence"})
            ),
            _ => println!("total {total}"),
        }
        return Ok(());
    }
    let poly = domination_polynomial(&g)?;
    let total = count_dominating_sets(&g)?;
    match out {
        Out::Json => {
            let p = poly.to_json();
            println!(
                "{}",
                json!({"n": n, "coeffs": p.coeffs, "total": total.to_string()})
            );
        }
        Out::Dot => return Err(Failure::Usage("poly supports --out json or text".into())),
        Out::Text => {
            println!("{poly}");
            println!("total {total}");
        }
    }
    Ok(())
}

fn cmd_build(input: &GraphInput, k: usize, out: Out, max_sets: usize) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let d = build_dominating_graph_capped(&g, k, max_sets)?;
    if d.is_empty() {
        eprintln!(
            "warning: k = {k} is below γ(G) = {}; D_k(G) is empty",
            domination_number(&g)
        );
    }
    match out {
        Out::Dot => print!("{}", d.to_dot()),
        Out::Json => println!("{}", d.to_json()),
        Out::Text => {
            println!(
                "D_{}(G): {} vertices, {} edges",
                d.k(),
                d.num_vertices(),
                d.num_edges()
            );
            for (i, s) in d.vertex_sets().iter().enumerate() {
                let nbrs: Vec<String> = d
                    .neighbors(i)
                    .iter()
                    .map(|&j| d.vertex_sets()[j as usize].to_string())
                    .collect();
                println!("{s}: {}", nbrs.join(" "));
            }
        }
    }
    Ok(())
}

fn cmd_dsr(
    input: &GraphInput,
    start: &str,
    goal: &str,
    k: usize,
    out: Out,
    max_sets: usize,
) -> Result<(), Failure> {
    let g = load_graph(input)?;
    let query = DsrQuery {
        graph: &g,
        start: parse_set(start, g.n())?,
        goal: parse_set(goal, g.n())?,
        k,
    };
    let res = dsr_reachable_capped(&query, max_sets)?;
    match out {
        Out::Json => {
            let path = res
                .path
                .as_ref()
                .map(|p| p.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
            println!(
                "{}",
                json!({"reachable": res.reachable, "path": path, "explored": res.explored})
            );
        }
        Out::Dot => return Err(Failure::Usage("dsr supports --out json or text".into())),
        Out::Text => match &res.path {
            Some(path) => {
                let steps: Vec<String> = path.iter().map(|s| s.to_string()).collect();
                println!("REACHABLE in {} step(s)", path.len() - 1);
                println!("{}", steps.join(" -> "));
            }
            None => println!("UNREACHABLE (explored {} dominating sets)", res.explored),
        },
    }
    Ok(())
}

fn cmd_generate(n: usize, connected: bool, isolate_free: bool) -> Result<(), Failure> {
    let filter = GraphClassFilter {
        order: n,
        connected,
        min_degree_at_least: usize::from(isolate_free),
    };
    let stdout = io::stdout();
    write_graph6_lines(stdout.lock(), generate_graphs(filter)?)?;
    Ok(())
}

fn run_claim(claim: Claim, args: &CensusArgs) -> Result<Vec<CensusReport>, Failure> {
    let n = |default: usize| args.n_max.unwrap_or(default);
    Ok(match claim {
        Claim::Basic => vec![census::verify_basic_properties(n(6))?],
        Claim::SelfIso => vec![census::self_isomorphism_census(n(6))?],
        Claim::Regular => {
            let opts = RegularCensusOptions {
                allow_isolates: args.allow_isolates,
            };
            let (class, report) = census::regular_census_with(args.r, opts)?;
            if let Some(dir) = &args.output_dir {
                fs::create_dir_all(dir)?;
                let body = serde_json::to_string_pretty(&class).expect("class serializes");
                fs::write(
                    dir.join(format!("{}.class.json", report.claim_id)),
                    body + "\n",
                )?;
            }
            vec![report]
        }
        Claim::Path => vec![census::path_census()?],
        Claim::Disconnected => vec![census::disconnected_examples_check()?],
        Claim::Connectivity => vec![census::connectivity_threshold_census(n(6))?],
        Claim::StarConnectivity => vec![census::star_connectivity_check(4, n(8))?],
        Claim::DegreeLaw => vec![census::degree_law_census(n(6))?],
        Claim::OddOrder => vec![census::odd_order_census(n(6))?],
        Claim::StarFamily => {
            let g = load_graph(&args.input)?;
            let holds = census::star_realization_family(&g)?;
            vec![star_family_report(&g, holds)]
        }
        Claim::All => {
            let mut all = Vec::new();
            for c in [
                Claim::Basic,
                Claim::SelfIso,
                Claim::Regular,
                Claim::Path,
                Claim::Disconnected,
                Claim::Connectivity,
                Claim::StarConnectivity,
                Claim::DegreeLaw,
                Claim::OddOrder,
            ] {
                all.extend(run_claim(c, args)?);
            }
            all
        }
    })
}

fn star_family_report(g: &Graph, holds: bool) -> CensusReport {
    let witness = census::Witness {
        graph6: to_graph6(g),
        k: Some(2),
        details: format!("D_2(G + K_1) ≅ K_1,{}: {holds}", g.n()),
    };
    let (witnesses, counterexamples) = if holds {
        (vec![witness], vec![])
    } else {
        (vec![], vec![witness])
    };
    CensusReport {
        claim_id: "star-realization".into(),
        universe: "the single input graph".into(),
        kind: census::ClaimKind::CompleteCheck,
        tested: 1,
        verdict: if holds {
            census::Verdict::Verified
        } else {
            census::Verdict::Counterexample
        },
        witnesses,
        counterexamples,
        metadata: Default::default(),
        elapsed: Default::default(),
    }
}

fn cmd_census(args: &CensusArgs) -> Result<(), Failure> {
    let reports = run_claim(args.claim, args)?;
    for r in &reports {
        eprintln!("{}: {:.3}s", r.claim_id, r.elapsed.as_secs_f64());
    }
    let mut stdout = io::stdout().lock();
    match args.out {
        ReportOut::Json => {
            let body = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            };
            writeln!(stdout, "{body}")?;
        }
        ReportOut::Markdown => {
            write!(stdout, "{}", census::markdown_summary(&reports))?;
            for r in &reports {
                write!(stdout, "\n{}", r.to_markdown())?;
            }
        }
    }
    if let Some(dir) = &args.output_dir {
        fs::create_dir_all(dir)?;
        for r in &reports {
            fs::write(dir.join(format!("{}.json", r.claim_id)), r.to_json() + "\n")?;
            fs::write(dir.join(format!("{}.md", r.claim_id)), r.to_markdown())?;
        }
        fs::write(dir.join("summary.md"), census::markdown_summary(&reports))?;
    }
    if reports.iter().all(CensusReport::is_verified) {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let threads = match (&cli.command, cli.threads) {
        (Command::Census(_), t) => t.unwrap_or(0) as usize,
        _ => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let max_sets = usize::try_from(cli.max_sets).unwrap_or(usize::MAX);
    match &cli.command {
        Command::Poly {
            input,
            recurrence,
            out,
        } => cmd_poly(input, *recurrence, *out),
        Command::Build { input, k, out, dot } => {
            cmd_build(input, *k, if *dot { Out::Dot } else { *out }, max_sets)
        }
        Command::Dsr {
            input,
            start,
            goal,
            k,
            out,
        } => cmd_dsr(input, start, goal, *k, *out, max_sets),
        Command::Generate {
            n,
            connected,
            isolate_free,
        } => cmd_generate(*n, *connected, *isolate_free),
        Command::Census(args) => cmd_census(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
