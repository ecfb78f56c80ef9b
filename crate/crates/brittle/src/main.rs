use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use brittle::families::{self, FamilyParams};
use brittle::format::{self, to_edge_list, to_graph6};
use brittle::report::{certificate_summary, table, ReportJson, TrapJson};
use brittle::verify::{self, Suite, VerifyConfig};
use brittle::{parse_limits, LIMITS_ENV};
use brittle_core::parameters::{self, Limits, Parameter, SolveError};
use brittle_core::traps::{enumerate_traps, enumerate_traps_in, TrapError};
use brittle_core::{Graph, GraphClass};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "brittle",
    version,
    about = "Edit distance, brittleness and capacity of graphs relative to graph classes"
)]
struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters of one or more graphs.
    Compute(ComputeArgs),
    /// Print a member of a construction family.
    Construct(ConstructArgs),
    /// Enumerate H-traps.
    Traps(TrapsArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Default)]
struct FamilyArgs {
    #[arg(long)]
    base: Option<String>,
    /// Shared vertex set: `empty`, `v`, `all-deg2` or a comma list.
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Contract the distinguished edge of fig3 or fig4.
    #[arg(long)]
    contract: bool,
}

impl FamilyArgs {
    fn params(&self) -> FamilyParams {
        FamilyParams { base: self.base.clone(), s: self.s.clone(), k: self.k, l: self.l, contract: self.contract }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct ComputeArgs {
    /// A built-in class (forests, diamond-free, outerplanar, k<n>-free)
    /// or `file:<path>` with one forbidden graph6 per line.
    #[arg(long)]
    class: String,
    /// graph6 literal.
    #[arg(long, conflicts_with_all = ["graph6_file", "edge_list", "family"])]
    graph6: Option<String>,
    /// File of graph6 lines, or `-` for stdin.
    #[arg(long, conflicts_with_all = ["edge_list", "family"])]
    graph6_file: Option<String>,
    /// Edge-list file, or `-` for stdin.
    #[arg(long, conflicts_with = "family")]
    edge_list: Option<String>,
    /// Construction family or graph name, see `construct`.
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    family_args: FamilyArgs,
    /// One of e, eta, kappa, nu.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    param: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Fill in elapsed_ms. Output is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct ConstructArgs {
    family: String,
    #[command(flatten)]
    family_args: FamilyArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
}

#[derive(Args)]
struct TrapsArgs {
    /// Pattern graph name, e.g. k3, d, k23.
    #[arg(long)]
    h: String,
    #[arg(long)]
    max_n: usize,
    /// graph6 stream of candidate graphs, or `-` for stdin; defaults to
    /// built-in generation.
    #[arg(long)]
    source: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    /// Suite name; may be repeated.
    #[arg(long, value_parser = parse_suite)]
    suite: Vec<Suite>,
    #[arg(long)]
    l_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`, expected one of {}", names.join(", "))
    })
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl std::fmt::Display) -> Failure {
    Failure { code, message: message.to_string() }
}

fn parse_err(message: impl std::fmt::Display) -> Failure {
    fail(EXIT_PARSE, message)
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| parse_err(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| parse_err(format!("{path}: {e}")))
    }
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var(LIMITS_ENV) {
        Ok(spec) => parse_limits(&spec).map_err(|e| parse_err(format!("{LIMITS_ENV}: {e}"))),
        Err(_) => Ok(Limits::default()),
    }
}

fn load_class(spec: &str) -> Result<GraphClass, Failure> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = read_source(path)?;
        return format::parse_class_file(path, &text).map_err(parse_err);
    }
    GraphClass::by_name(spec).ok_or_else(|| parse_err(format!("unknown class `{spec}`")))
}

fn load_graphs(a: &ComputeArgs) -> Result<Vec<Graph>, Failure> {
    let graphs = if let Some(code) = &a.graph6 {
        vec![format::from_graph6(code).map_err(parse_err)?]
    } else if let Some(path) = &a.graph6_file {
        format::parse_graph6_stream(&read_source(path)?).map_err(parse_err)?
    } else if let Some(path) = &a.edge_list {
        vec![format::from_edge_list(&read_source(path)?).map_err(parse_err)?]
    } else if let Some(family) = &a.family {
        vec![families::build(family, &a.family_args.params()).map_err(parse_err)?]
    } else {
        format::parse_graph6_stream(&read_source("-")?).map_err(parse_err)?
    };
    if graphs.is_empty() {
        return Err(parse_err(format::FormatError::Empty));
    }
    Ok(graphs)
}

fn compute(a: &ComputeArgs) -> Result<String, Failure> {
    let limits = limits()?;
    let class = load_class(&a.class)?;
    let graphs = load_graphs(a)?;
    let params: Vec<Parameter> = match &a.param {
        Some(p) => vec![Parameter::from_symbol(p).ok_or_else(|| parse_err(format!("unknown parameter `{p}`")))?],
        None => Parameter::ALL.to_vec(),
    };
    let jobs: Vec<(&Graph, Parameter)> = graphs.iter().flat_map(|g| params.iter().map(move |&p| (g, p))).collect();
    let results: Vec<Result<(ReportJson, String), Failure>> = jobs
        .par_iter()
        .map(|&(g, p)| {
            let start = Instant::now();
            let r = parameters::solve(p, &class, g, &limits).map_err(|e| match e {
                SolveError::TooLarge { .. } => fail(EXIT_GUARD, e),
            })?;
            let elapsed = a.timing.then(|| start.elapsed().as_millis() as u64);
            parameters::replay(&class, g, &r)
                .map_err(|e| fail(EXIT_INTERNAL, format!("certificate replay failed for {}: {e:?}", to_graph6(g))))?;
            Ok((ReportJson::new(class.name(), g, &r, elapsed), certificate_summary(&r.certificate)))
        })
        .collect();
    let reports: Vec<(ReportJson, String)> = results.into_iter().collect::<Result<_, _>>()?;
    Ok(match a.format {
        ReportFormat::Json => reports.iter().map(|(r, _)| serde_json::to_string(r).unwrap() + "\n").collect(),
        ReportFormat::Table => {
            let rows: Vec<(String, String, String, String)> = reports
                .into_iter()
                .map(|(r, summary)| {
                    let value = match r.elapsed_ms {
                        Some(ms) => format!("{} ({ms} ms)", r.value),
                        None => r.value.to_string(),
                    };
                    (r.graph6, r.parameter.to_string(), value, summary)
                })
                .collect();
            format!("class {}\n{}", class.name(), table(&rows, ["graph6", "parameter", "value", "certificate"]))
        }
    })
}

fn construct(a: &ConstructArgs) -> Result<String, Failure> {
    let g = families::build(&a.family, &a.family_args.params()).map_err(parse_err)?;
    Ok(match a.format {
        GraphFormat::Graph6 => to_graph6(&g) + "\n",
        GraphFormat::EdgeList => to_edge_list(&g),
    })
}

fn traps(a: &TrapsArgs) -> Result<String, Failure> {
    let h = families::named_graph(&a.h).map_err(parse_err)?;
    let records = match &a.source {
        Some(path) => {
            let graphs = format::parse_graph6_stream(&read_source(path)?).map_err(parse_err)?;
            enumerate_traps_in(&h, a.max_n, graphs)
        }
        None => enumerate_traps(&h, a.max_n),
    }
    .map_err(|e| match e {
        TrapError::MaxNTooLarge(_) => fail(EXIT_GUARD, e),
        TrapError::PatternNotTwoConnected => parse_err(e),
    })?;
    Ok(records.iter().map(|r| serde_json::to_string(&TrapJson::new(&a.h, r)).unwrap() + "\n").collect())
}

fn verify_cmd(a: &VerifyArgs) -> Result<String, Failure> {
    let mut cfg = VerifyConfig { limits: limits()?, l_max: a.l_max, ..VerifyConfig::default() };
    if let Some(n) = a.n_max {
        cfg.n_max = n;
    }
    let suites: Vec<Suite> = if a.all || a.suite.is_empty() { Suite::ALL.to_vec() } else { a.suite.clone() };
    let summary = verify::run(&suites, &cfg);
    let out = match a.format {
        ReportFormat::Json => serde_json::to_string_pretty(&summary).unwrap() + "\n",
        ReportFormat::Table => summary.table(),
    };
    if summary.passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(fail(EXIT_VERIFY, "verification failed"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("brittle: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Construct(a) => construct(a),
        Command::Traps(a) => traps(a),
        Command::Verify(a) => verify_cmd(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INTERNAL);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let _ = io::stdout().flush();
            eprintln!("brittle: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
