//! `eil`: star packing numbers, depths of (squared) edge ideals, and the
//! verification suite from the command line.
//!
//! Exit codes: 0 success, 1 a bound or identity failed, 2 usage or input error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use eil_core::catalog::{graphs_up_to, read_graph6_lines, write_graph6_lines};
use eil_core::depth::{depth_ideal_with, DepthOptions, DEFAULT_VAR_CAP};
use eil_core::graph::{named, parse_edge_list, parse_graph6};
use eil_core::harness::{
    check_examples_sharp, hunt, parse_checks, run_suite, write_atomic, CheckId, HuntConfig, SuiteConfig,
    VerificationReport,
};
use eil_core::ideal::symbolic_square_edge_ideal;
use eil_core::{FieldChoice, Graph, MonomialIdeal};

#[derive(Parser, Debug)]
#[command(
    name = "eil",
    version,
    about = "Depth of squared edge ideals versus star packing numbers"
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "EIL_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star packing number and a maximum packing.
    Alpha2(GraphInput),
    /// Depth of I(G), I(G)^2 or the symbolic square, with the matching lower bound.
    Depth(DepthArgs),
    /// Run checks over a corpus of graphs.
    Verify(VerifyArgs),
    /// Search random graphs for a violation.
    Hunt(HuntArgs),
    /// Reproduce the three sharp instances.
    Examples(FieldArg),
    /// Print all graphs up to isomorphism as graph6 lines.
    Catalog {
        /// Largest number of vertices (at most 8).
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Inline graph6 string.
    #[arg(conflicts_with_all = ["input", "edges"], required_unless_present_any = ["input", "edges"])]
    graph6: Option<String>,
    /// File of graph6 lines, or `-` for stdin.
    #[arg(long, short, conflicts_with = "edges")]
    input: Option<PathBuf>,
    /// Edge-list file (`u v` per line), or `-` for stdin.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldOpt {
    #[value(name = "2")]
    Two,
    #[value(name = "q", alias = "0")]
    Q,
    Both,
}

impl FieldOpt {
    fn fields(self) -> Vec<FieldChoice> {
        match self {
            FieldOpt::Two => vec![FieldChoice::Char2],
            FieldOpt::Q => vec![FieldChoice::Char0],
            FieldOpt::Both => FieldChoice::ALL.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
struct FieldArg {
    /// Coefficient field: characteristic 2, the rationals, or both.
    #[arg(long, value_enum, default_value = "2")]
    field: FieldOpt,
}

#[derive(Args, Debug)]
struct DepthArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    field: FieldArg,
    /// Power of the edge ideal (1 or 2).
    #[arg(long, default_value_t = 2)]
    power: u32,
    /// Use the second symbolic power instead of the ordinary square.
    #[arg(long)]
    symbolic: bool,
    /// Cap on polarized variables.
    #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Write the report here (atomically).
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    field: FieldArg,
    /// Seed for sampled deletion sets and random graphs.
    #[arg(long)]
    seed: Option<u64>,
    /// Cap on polarized variables.
    #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
    cap: usize,
    /// Zero all timings so identical runs give identical reports.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated checks, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    suite: Vec<String>,
    /// Corpus of graph6 lines, or `-` for stdin.
    #[arg(long, short, conflicts_with = "max_n", required_unless_present = "max_n")]
    input: Option<PathBuf>,
    /// Use every graph on 1..=N vertices instead of a corpus file.
    #[arg(long)]
    max_n: Option<usize>,
    /// Stop after this many graphs.
    #[arg(long)]
    max_graphs: Option<usize>,
    /// Do not start new graphs after this many seconds.
    #[arg(long)]
    time_limit: Option<u64>,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Args, Debug)]
struct HuntArgs {
    /// Check to hunt (e.g. `main1`, `spn`, `symbolic.depth`).
    #[arg(long)]
    check: String,
    /// Vertices per random graph.
    #[arg(long)]
    n: usize,
    /// Number of random graphs.
    #[arg(long, default_value_t = 100)]
    random: usize,
    /// Edge probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[command(flatten)]
    report: ReportArgs,
}

/// `println!` that ignores a closed stdout, so piping into `head` is harmless.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn read_source(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    if let Some(g6) = &input.graph6 {
        return Ok(vec![parse_graph6(g6.trim())?]);
    }
    if let Some(path) = &input.edges {
        return Ok(vec![parse_edge_list(&read_source(path)?)?]);
    }
    let path = input.input.as_ref().expect("clap enforces one input");
    let graphs = read_graph6_lines(&read_source(path)?)?;
    if graphs.is_empty() {
        bail!("no graphs in {}", path.display());
    }
    Ok(graphs)
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn cmd_alpha2(input: &GraphInput) -> Result<u8> {
    let graphs = load_graphs(input)?;
    for g in &graphs {
        let w = g.star_packing_number();
        let mut line = format!("alpha2={} centers={}", w.size, braces(&g.set_labels(w.centers)));
        if graphs.len() > 1 {
            line.push_str(&format!(" graph6={}", g.to_graph6()));
        }
        out!("{line}");
    }
    Ok(0)
}

/// The lower bound that applies to `g` and the name of the statement it
/// comes from.
fn depth_bound(g: &Graph, power: u32, symbolic: bool) -> (i64, &'static str) {
    let a = g.alpha2() as i64;
    if symbolic {
        (a, "symbolic")
    } else if power == 1 {
        (a + 1, "spn")
    } else if g.is_triangle_free() {
        (a, "main3")
    } else if g.is_wk3_free() {
        (a - 1, "main2")
    } else {
        (a - 2, "main1")
    }
}

fn cmd_depth(args: &DepthArgs) -> Result<u8> {
    if !(1..=2).contains(&args.power) {
        bail!("--power must be 1 or 2, got {}", args.power);
    }
    if args.symbolic && args.power != 2 {
        bail!("--symbolic requires --power 2");
    }
    warn_cap(args.cap);
    let mut code = 0;
    let graphs = load_graphs(&args.graph)?;
    for g in &graphs {
        if g.is_edgeless() {
            bail!("graph {} has no edges; the ideal is zero", g.to_graph6());
        }
        let ideal = if args.symbolic {
            symbolic_square_edge_ideal(g)
        } else {
            MonomialIdeal::edge_ideal(g).power(args.power)?
        };
        let (bound, statement) = depth_bound(g, args.power, args.symbolic);
        let mut depths = Vec::new();
        for field in args.field.field.fields() {
            let mut opts = DepthOptions::new(field);
            opts.var_cap = args.cap;
            depths.push((field, depth_ideal_with(&ideal, &opts)? as i64));
        }
        let depth = depths[0].1;
        let mut line = format!(
            "depth={depth} bound={bound} slack={} alpha2={} statement={statement} field={}",
            depth - bound,
            g.alpha2(),
            args.field
                .field
                .fields()
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join("+"),
        );
        if graphs.len() > 1 {
            line.push_str(&format!(" graph6={}", g.to_graph6()));
        }
        out!("{line}");
        if depths.iter().any(|&(_, d)| d != depth) {
            let parts: Vec<String> = depths.iter().map(|(f, d)| format!("depth_char{f}={d}")).collect();
            out!("finding=field_disagreement {}", parts.join(" "));
            code = 1;
        }
        if depth < bound {
            code = 1;
        }
    }
    Ok(code)
}

fn warn_cap(cap: usize) {
    if cap > DEFAULT_VAR_CAP {
        eprintln!("warning: variable cap raised to {cap}; depth computations scan up to 2^{cap} subsets");
    }
}

fn suite_config(checks: Vec<CheckId>, report: &ReportArgs) -> SuiteConfig {
    warn_cap(report.cap);
    let mut config = SuiteConfig::new(checks, report.field.field.fields());
    config.var_cap = report.cap;
    config.seed = report.seed.unwrap_or(0);
    config
}

fn emit(report: &mut VerificationReport, args: &ReportArgs) -> Result<()> {
    if args.no_timings {
        report.zero_timings();
    }
    if let Some(path) = &args.output {
        let body = match args.format {
            Format::Json => report.to_json()?,
            Format::Csv => report.to_csv()?,
            Format::Text => report.to_text(),
        };
        write_atomic(path, body.as_bytes())?;
    }
    out!("{}", report.to_text().trim_end());
    if let Some(path) = &args.output {
        out!("report={}", path.display());
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let checks = parse_checks(&args.suite)?;
    let (corpus, descriptor) = match (&args.input, args.max_n) {
        (_, Some(n)) => {
            if n > 8 {
                bail!("--max-n is limited to 8");
            }
            (graphs_up_to(n), format!("all graphs on 1..={n} vertices"))
        }
        (Some(path), None) => (read_graph6_lines(&read_source(path)?)?, path.display().to_string()),
        (None, None) => unreachable!("clap enforces one corpus"),
    };
    let mut config = suite_config(checks, &args.report);
    config.budget.max_graphs = args.max_graphs;
    config.budget.time_limit = args.time_limit.map(Duration::from_secs);
    let mut report = run_suite(&corpus, &descriptor, &config)?;
    emit(&mut report, &args.report)?;
    Ok(u8::from(report.has_failures()))
}

/// Check family for a hunt target such as `main1` or `symbolic.depth`.
fn hunt_family(check: &str) -> Result<CheckId> {
    let family = check.split('.').next().unwrap_or_default();
    Ok(parse_checks(&[family])?[0])
}

fn cmd_hunt(args: &HuntArgs) -> Result<u8> {
    let family = hunt_family(&args.check)?;
    if family == CheckId::Examples {
        bail!("examples is not a per-graph check");
    }
    let Some(seed) = args.report.seed else {
        bail!("--seed is required for hunting");
    };
    if !(0.0..=1.0).contains(&args.p) {
        bail!("--p must lie in [0, 1]");
    }
    let squares = matches!(family, CheckId::Main | CheckId::Last | CheckId::Symbolic);
    let vars = if squares { 2 * args.n } else { args.n };
    if vars > args.report.cap {
        bail!(
            "n = {} needs up to {vars} polarized variables, above the cap of {} (raise with --cap)",
            args.n,
            args.report.cap
        );
    }
    let mut suite = suite_config(vec![family], &args.report);
    suite.seed = seed;
    let config = HuntConfig {
        n: args.n,
        count: args.random,
        edge_probability: args.p,
        check_prefix: args.check.clone(),
        suite,
    };
    let mut report = hunt(&config)?;
    emit(&mut report, &args.report)?;
    for o in report.failures() {
        out!("counterexample check={} graph6={}", o.check_id, o.graph_id);
    }
    Ok(u8::from(report.has_failures()))
}

fn cmd_examples(args: &FieldArg) -> Result<u8> {
    let names = ["whiskered_triangle", "whiskered_triangle_minus_leaf", "path4"];
    let graphs = [
        named::whiskered_triangle(),
        named::whiskered_triangle_minus_leaf(),
        named::path(4),
    ];
    let mut code = 0;
    for field in args.field.fields() {
        let outcomes = check_examples_sharp(field)?;
        for (k, g) in graphs.iter().enumerate() {
            let graph_id = g.to_graph6();
            let mine: Vec<_> = outcomes.iter().filter(|o| o.graph_id == graph_id).collect();
            let value = |id: &str| {
                mine.iter()
                    .find(|o| o.check_id == id)
                    .and_then(|o| o.lhs.as_ref())
                    .map(ToString::to_string)
                    .unwrap_or_default()
            };
            let (bound, statement) = depth_bound(g, 2, false);
            let ok = mine.iter().all(|o| o.holds());
            out!(
                "graph={} graph6={graph_id} alpha2={} depth={} bound={bound} statement={statement} field={field} sharp={}",
                names[k],
                value("examples.alpha2"),
                value("examples.depth"),
                if ok { "yes" } else { "no" },
            );
            if !ok {
                code = 1;
            }
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    match &cli.command {
        Command::Alpha2(input) => cmd_alpha2(input),
        Command::Depth(args) => cmd_depth(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Hunt(args) => cmd_hunt(args),
        Command::Examples(args) => cmd_examples(args),
        Command::Catalog { max_n } => {
            if *max_n > 8 {
                bail!("--max-n is limited to 8");
            }
            out!("{}", write_graph6_lines(&graphs_up_to(*max_n)).trim_end());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
