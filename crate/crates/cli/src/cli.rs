//! The `updom` command line.
//!
//! Exit codes: 0 ok, 1 I/O failure while writing, 2 parse or usage error,
//! 3 size limit exceeded, 4 invalid decomposition, 5 invalid certificate or
//! solution.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::Value;

use updom_core::approx::{approximate_uds_with, ApproxError, ApproxOptions, PartitionScheme};
use updom_core::dp::{solve_pathwidth_dp_with, DpOptions};
use updom_core::oracle::upper_domination_number;
use updom_core::pathdecomp::{gadget_decomposition, heuristic_decomposition, trivial_decomposition};
use updom_core::reductions::{
    csp_reduction_witness, gen_csp_reduction, gen_is_reduction, is_reduction_witness, ReductionError,
    DEFAULT_BLOCK_SIZE,
};
use updom_core::{
    brute_force_uds, check_minimal, DecompositionError, DpError, Graph, MinimalityError, NicePathDecomposition,
    OracleError, UpperDomSolution,
};

use crate::formats::{self, ParseError};
use crate::json::{self, csp_from_metadata, csp_metadata, is_metadata, solution_json};
use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "updom", version, about = "Maximum minimal dominating sets: exact, approximate and gadget generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the run report to this file instead of stderr.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Leave wall-clock times out of reports and benchmark tables.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exhaustive search over all vertex subsets.
    Oracle {
        graph: PathBuf,
        /// Largest vertex count to attempt (at most 40).
        #[arg(long, default_value_t = updom_core::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
        /// Write the solution here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Six-color dynamic program over a nice path decomposition.
    Dp {
        graph: PathBuf,
        /// `trivial`, `heuristic`, `gadget:<metadata.json>` or a decomposition file.
        #[arg(long, default_value = "heuristic")]
        decomp: String,
        /// Write the solution here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Partition-based r-approximation.
    Approx {
        graph: PathBuf,
        /// Approximation ratio r > 1, as a decimal or a fraction `p/q`.
        #[arg(long)]
        ratio: String,
        /// Seed for the vertex shuffle.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the solution here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a reduction target from a source instance.
    Generate {
        kind: Kind,
        source: PathBuf,
        /// Output prefix: writes `<prefix>.graph` and `<prefix>.meta.json`.
        #[arg(long)]
        out: PathBuf,
        /// Block size of the independent set reduction.
        #[arg(short = 'a', long = "block-size")]
        a: Option<usize>,
        /// Source certificate (independent set or CSP assignment); the
        /// witness is written to `<prefix>.witness.json` after validation.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check a solution or a decomposition against a graph.
    Validate {
        what: What,
        graph: PathBuf,
        artifact: PathBuf,
    },
    /// Scaling tables as CSV.
    Bench {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the table here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Is,
    Csp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum What {
    Solution,
    Decomp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Dp,
    Oracle,
    Approx,
    All,
}

/// A failed command: exit code and message.
#[derive(Debug)]
struct Failure(i32, String);

impl Failure {
    fn parse(msg: impl Into<String>) -> Self {
        Failure(2, msg.into())
    }
    fn limit(msg: impl Into<String>) -> Self {
        Failure(3, msg.into())
    }
    fn decomposition(msg: impl Into<String>) -> Self {
        Failure(4, msg.into())
    }
    fn certificate(msg: impl Into<String>) -> Self {
        Failure(5, msg.into())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context {
        report: RunReport {
            command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
            ..RunReport::default()
        },
        report_path: cli.report.clone(),
        timing: !cli.no_timing,
        stdout,
        stderr,
    };
    match ctx.dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure(code, msg)) => {
            let _ = writeln!(ctx.stderr, "error: {msg}");
            code
        }
    }
}

struct Context<'a> {
    report: RunReport,
    report_path: Option<PathBuf>,
    timing: bool,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure(1, format!("{}: {e}", path.display()))
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    Failure::parse(format!("{}: {e}", path.display()))
}

impl Context<'_> {
    fn dispatch(&mut self, command: Command) -> Outcome {
        match command {
            Command::Oracle { graph, limit, output } => self.oracle(&graph, limit, output.as_deref()),
            Command::Dp { graph, decomp, output } => self.dp(&graph, &decomp, output.as_deref()),
            Command::Approx {
                graph,
                ratio,
                seed,
                output,
            } => self.approx(&graph, &ratio, seed, output.as_deref()),
            Command::Generate {
                kind,
                source,
                out,
                a,
                certificate,
            } => self.generate(kind, &source, &out, a, certificate.as_deref()),
            Command::Validate { what, graph, artifact } => self.validate(what, &graph, &artifact),
            Command::Bench { suite, seed, output } => self.bench(suite, seed, output.as_deref()),
        }
    }

    /// Reads an input file and records its digest.
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
        self.report.input(path, &bytes);
        String::from_utf8(bytes).map_err(|_| Failure::parse(format!("{}: not UTF-8 text", path.display())))
    }

    fn read_graph(&mut self, path: &Path) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        formats::parse_graph(&text).map_err(|e| parse_failure(path, e))
    }

    fn emit(&mut self, output: Option<&Path>, text: &str) -> Outcome {
        match output {
            Some(path) => std::fs::write(path, text).map_err(|e| io_failure(path, e)),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure(1, format!("stdout: {e}"))),
        }
    }

    fn finish_report(&mut self, started: Instant) -> Outcome {
        if self.timing {
            self.report.wall_time = Some(started.elapsed());
        }
        let text = json::render(&self.report.to_json());
        match &self.report_path {
            Some(path) => std::fs::write(path, text).map_err(|e| io_failure(path, e)),
            None => self
                .stderr
                .write_all(text.as_bytes())
                .map_err(|e| Failure(1, format!("stderr: {e}"))),
        }
    }

    fn emit_solution(&mut self, s: &UpperDomSolution, output: Option<&Path>, started: Instant) -> Outcome {
        self.report.result_size = Some(s.size());
        self.emit(output, &json::render(&solution_json(s)))?;
        self.finish_report(started)
    }

    fn oracle(&mut self, path: &Path, limit: usize, output: Option<&Path>) -> Outcome {
        let started = Instant::now();
        let g = self.read_graph(path)?;
        self.report.solver = "oracle".into();
        let s = brute_force_uds(&g, limit).map_err(|e| match e {
            OracleError::LimitExceeded { n, limit } => {
                Failure::limit(format!("graph has {n} vertices, oracle limit is {limit} (see --limit)"))
            }
        })?;
        self.report.counter("subsets", 1u64 << g.n());
        self.emit_solution(&s, output, started)
    }

    fn decomposition_for(&mut self, g: &Graph, choice: &str) -> Result<NicePathDecomposition, Failure> {
        match choice {
            "trivial" => Ok(trivial_decomposition(g)),
            "heuristic" => Ok(heuristic_decomposition(g)),
            _ => {
                if let Some(meta_path) = choice.strip_prefix("gadget:") {
                    let meta_path = Path::new(meta_path);
                    let text = self.read(meta_path)?;
                    let meta: Value = serde_json::from_str(&text)
                        .map_err(|e| Failure::parse(format!("{}: {e}", meta_path.display())))?;
                    let inst = csp_from_metadata(&meta)
                        .map_err(|e| Failure::parse(format!("{}: {e}", meta_path.display())))?;
                    let out = gen_csp_reduction(&inst).map_err(|e| Failure::parse(e.to_string()))?;
                    if csp_metadata(&out) != meta || out.graph != *g {
                        return Err(Failure::decomposition(
                            "StructureMismatch: metadata does not describe this graph",
                        ));
                    }
                    gadget_decomposition(&out).map_err(|e| Failure::decomposition(describe_decomposition_error(&e)))
                } else {
                    let path = Path::new(choice);
                    let text = self.read(path)?;
                    formats::parse_decomposition(&text).map_err(|e| parse_failure(path, e))
                }
            }
        }
    }

    fn dp(&mut self, path: &Path, decomp: &str, output: Option<&Path>) -> Outcome {
        let started = Instant::now();
        let g = self.read_graph(path)?;
        let d = self.decomposition_for(&g, decomp)?;
        self.report.solver = "pathwidth-dp".into();
        let (s, stats) = solve_pathwidth_dp_with(&g, &d, &DpOptions::default()).map_err(|e| match e {
            DpError::InvalidDecomposition(e) => Failure::decomposition(describe_decomposition_error(&e)),
            DpError::BagTooLarge { size, max } => {
                Failure::decomposition(format!("bag of {size} vertices exceeds the supported {max}"))
            }
            DpError::CorruptTable(what) => Failure(1, format!("internal error: {what}")),
        })?;
        self.report.counter("width", stats.width);
        self.report.counter("table_entries", stats.table_entries);
        self.report.counter("transitions", stats.transitions);
        self.report.counter("events", d.events.len());
        self.emit_solution(&s, output, started)
    }

    fn approx(&mut self, path: &Path, ratio: &str, seed: u64, output: Option<&Path>) -> Outcome {
        let started = Instant::now();
        let r = parse_ratio(ratio).ok_or_else(|| Failure::parse(format!("ratio {ratio:?} is not a number")))?;
        let g = self.read_graph(path)?;
        self.report.solver = "approximation".into();
        self.report.seed = Some(seed);
        let (s, stats) = approximate_uds_with(&g, r, seed, &ApproxOptions::default()).map_err(|e| match e {
            ApproxError::InvalidRatio(_) => Failure::parse(format!("ratio must exceed 1, got {ratio}")),
            ApproxError::BlockTooLarge { .. } => Failure::limit(e.to_string()),
        })?;
        self.report.counter("ratio", r);
        self.report.counter("blocks", stats.blocks);
        self.report.counter("block_sizes", stats.block_sizes.clone());
        self.report.counter("mis_branches", stats.mis_branches);
        self.report.counter("subset_branches", stats.subset_branches.clone());
        self.report.counter("contexts", stats.contexts);
        self.report.counter("discards", stats.discards);
        self.emit_solution(&s, output, started)
    }

    fn generate(
        &mut self,
        kind: Kind,
        source: &Path,
        prefix: &Path,
        a: Option<usize>,
        certificate: Option<&Path>,
    ) -> Outcome {
        let started = Instant::now();
        let text = self.read(source)?;
        let with_suffix = |suffix: &str| {
            let mut p = prefix.as_os_str().to_owned();
            p.push(suffix);
            PathBuf::from(p)
        };
        let (graph, budget, meta, witness) = match kind {
            Kind::Is => {
                let inst = formats::parse_is_source(&text).map_err(|e| parse_failure(source, e))?;
                let a = a.unwrap_or(DEFAULT_BLOCK_SIZE);
                self.report.solver = "is-reduction".into();
                let out = gen_is_reduction(&inst, a).map_err(|e| Failure::parse(e.to_string()))?;
                let witness = match certificate {
                    Some(path) => {
                        let text = self.read(path)?;
                        let set =
                            formats::parse_vertex_list(&text, inst.graph.n()).map_err(|e| parse_failure(path, e))?;
                        Some(is_reduction_witness(&inst, a, &set).map_err(|e| certificate_failure(&e))?)
                    }
                    None => None,
                };
                let meta = is_metadata(&out, inst.k());
                (out.graph, out.budget, meta, witness)
            }
            Kind::Csp => {
                if a.is_some() {
                    return Err(Failure::parse("--block-size applies to the is reduction only"));
                }
                let inst = formats::parse_csp(&text).map_err(|e| parse_failure(source, e))?;
                self.report.solver = "csp-reduction".into();
                let out = gen_csp_reduction(&inst).map_err(|e| Failure::parse(e.to_string()))?;
                let witness = match certificate {
                    Some(path) => {
                        let text = self.read(path)?;
                        let assignment =
                            formats::parse_assignment(&text, inst.n).map_err(|e| parse_failure(path, e))?;
                        Some(csp_reduction_witness(&out, &assignment).map_err(|e| certificate_failure(&e))?)
                    }
                    None => None,
                };
                let meta = csp_metadata(&out);
                (out.graph, out.budget, meta, witness)
            }
        };
        self.report.counter("vertices", graph.n());
        self.report.counter("edges", graph.edge_count());
        self.report.counter("budget", budget);

        let graph_path = with_suffix(".graph");
        std::fs::write(&graph_path, formats::serialize_graph(&graph)).map_err(|e| io_failure(&graph_path, e))?;
        let meta_path = with_suffix(".meta.json");
        std::fs::write(&meta_path, json::render(&meta)).map_err(|e| io_failure(&meta_path, e))?;
        let mut summary = format!("vertices={} edges={} budget={}\n", graph.n(), graph.edge_count(), budget);
        if let Some(w) = witness {
            // independent re-check of what the constructor returned
            if let Err(e) = check_minimal(&graph, &w.set) {
                return Err(Failure::certificate(format!("witness rejected: {}", describe_minimality_error(&e))));
            }
            if w.size() < budget {
                return Err(Failure::certificate(format!(
                    "witness has size {} below the budget {budget}",
                    w.size()
                )));
            }
            let witness_path = with_suffix(".witness.json");
            std::fs::write(&witness_path, json::render(&solution_json(&w))).map_err(|e| io_failure(&witness_path, e))?;
            self.report.result_size = Some(w.size());
            writeln!(summary, "witness size={} ok", w.size()).unwrap();
        }
        self.emit(None, &summary)?;
        self.finish_report(started)
    }

    fn validate(&mut self, what: What, graph: &Path, artifact: &Path) -> Outcome {
        let g = self.read_graph(graph)?;
        let text = self.read(artifact)?;
        let line = match what {
            What::Solution => {
                let file = if text.trim_start().starts_with('{') {
                    json::parse_solution_json(&text, g.n())
                        .map_err(|e| Failure::parse(format!("{}: {e}", artifact.display())))?
                } else {
                    json::SolutionFile {
                        set: formats::parse_vertex_list(&text, g.n()).map_err(|e| parse_failure(artifact, e))?,
                        claimed: None,
                    }
                };
                let s = check_minimal(&g, &file.set)
                    .map_err(|e| Failure::certificate(describe_minimality_error(&e)))?;
                if let Some(claim) = file.claimed {
                    claim
                        .verify(&g)
                        .map_err(|e| Failure::certificate(format!("claimed split: {}", describe_minimality_error(&e))))?;
                }
                format!("ok size={}\n", s.size())
            }
            What::Decomp => {
                let d = formats::parse_decomposition(&text).map_err(|e| parse_failure(artifact, e))?;
                let width = d
                    .validate(&g)
                    .map_err(|e| Failure::decomposition(describe_decomposition_error(&e)))?;
                format!("ok width={width}\n")
            }
        };
        self.emit(None, &line)
    }

    fn bench(&mut self, suite: Suite, seed: u64, output: Option<&Path>) -> Outcome {
        let mut rows = vec![BenchRow::HEADER.to_string()];
        let timing = self.timing;
        let time = |start: Instant| timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        if matches!(suite, Suite::Dp | Suite::All) {
            for b in 3..=8 {
                let g = Graph::complete(b);
                let d = trivial_decomposition(&g);
                let start = Instant::now();
                let (s, stats) = solve_pathwidth_dp_with(&g, &d, &DpOptions::default()).expect("valid decomposition");
                let elapsed = time(start);
                let expected: u64 = d.bags().iter().map(|bag| 6u64.pow(bag.len() as u32)).sum();
                rows.push(
                    BenchRow {
                        solver: "dp",
                        instance: format!("K{b}"),
                        n: b,
                        param: stats.width.to_string(),
                        size: s.size(),
                        time_ms: elapsed,
                        table_entries: Some(stats.table_entries),
                        expected_entries: Some(expected),
                        transitions: Some(stats.transitions),
                        ok: stats.table_entries == expected,
                        ..BenchRow::default()
                    }
                    .csv(),
                );
            }
        }
        if matches!(suite, Suite::Oracle | Suite::All) {
            let mut rng = rng(seed);
            for n in 6..=12 {
                let g = Graph::random(n, 0.5, &mut rng);
                let instance = format!("gnp{n}-0.5-s{seed}");
                let start = Instant::now();
                let exact = brute_force_uds(&g, 20).expect("within the oracle limit");
                let oracle_time = time(start);
                let d = heuristic_decomposition(&g);
                let start = Instant::now();
                let (s, stats) = solve_pathwidth_dp_with(&g, &d, &DpOptions::default()).expect("valid decomposition");
                let dp_time = time(start);
                rows.push(
                    BenchRow {
                        solver: "oracle",
                        instance: instance.clone(),
                        n,
                        size: exact.size(),
                        time_ms: oracle_time,
                        ok: true,
                        ..BenchRow::default()
                    }
                    .csv(),
                );
                rows.push(
                    BenchRow {
                        solver: "dp",
                        instance,
                        n,
                        param: stats.width.to_string(),
                        size: s.size(),
                        time_ms: dp_time,
                        table_entries: Some(stats.table_entries),
                        transitions: Some(stats.transitions),
                        ok: s.size() == exact.size(),
                        ..BenchRow::default()
                    }
                    .csv(),
                );
            }
        }
        if matches!(suite, Suite::Approx | Suite::All) {
            let mut rng = rng(seed ^ 0xa11);
            for n in [10, 12, 14] {
                let p = [0.2, 0.4][rng.gen_range(0..2)];
                let g = Graph::random(n, p, &mut rng);
                let gamma = upper_domination_number(&g, 20).expect("within the oracle limit");
                for r in [2.0, 3.0, 4.0, 6.0] {
                    let start = Instant::now();
                    let (s, stats) =
                        approximate_uds_with(&g, r, seed, &ApproxOptions::default()).expect("valid ratio");
                    let elapsed = time(start);
                    let l = PartitionScheme::block_count(n, r);
                    let bound = 1u64 << n.div_ceil(l);
                    let most = stats.subset_branches.iter().copied().max().unwrap_or(0);
                    rows.push(
                        BenchRow {
                            solver: "approx",
                            instance: format!("gnp{n}-{p}-s{seed}"),
                            n,
                            param: r.to_string(),
                            size: s.size(),
                            time_ms: elapsed,
                            subset_branches: Some(most),
                            subset_bound: Some(bound),
                            ok: most <= bound && r * s.size() as f64 >= gamma as f64,
                            ..BenchRow::default()
                        }
                        .csv(),
                    );
                }
            }
        }
        let mut text = rows.join("\n");
        text.push('\n');
        self.emit(output, &text)
    }
}

fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Default)]
struct BenchRow {
    solver: &'static str,
    instance: String,
    n: usize,
    /// Width for the DP, ratio for the approximation.
    param: String,
    size: usize,
    time_ms: Option<f64>,
    table_entries: Option<u64>,
    expected_entries: Option<u64>,
    transitions: Option<u64>,
    subset_branches: Option<u64>,
    subset_bound: Option<u64>,
    ok: bool,
}

impl BenchRow {
    const HEADER: &'static str = "solver,instance,n,param,size,time_ms,table_entries,expected_entries,transitions,subset_branches,subset_bound,check";

    fn csv(&self) -> String {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map(|x| x.to_string()).unwrap_or_default()
        }
        [
            self.solver.to_string(),
            self.instance.clone(),
            self.n.to_string(),
            self.param.clone(),
            self.size.to_string(),
            opt(self.time_ms.map(|t| format!("{t:.3}"))),
            opt(self.table_entries),
            opt(self.expected_entries),
            opt(self.transitions),
            opt(self.subset_branches),
            opt(self.subset_bound),
            if self.ok { "ok" } else { "FAIL" }.to_string(),
        ]
        .join(",")
    }
}

/// `"3"`, `"2.5"` or `"3/2"`.
fn parse_ratio(text: &str) -> Option<f64> {
    let value = match text.split_once('/') {
        Some((p, q)) => p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?,
        None => text.trim().parse().ok()?,
    };
    value.is_finite().then_some(value)
}

/// Error text with 1-indexed vertices, as in the file formats.
fn describe_minimality_error(e: &MinimalityError) -> String {
    match *e {
        MinimalityError::NotDominating(v) => format!("NotDominating({})", v + 1),
        MinimalityError::NoPrivate(u) => format!("NoPrivate({})", u + 1),
        MinimalityError::VertexOutOfRange(v) => format!("VertexOutOfRange({})", v + 1),
        MinimalityError::InconsistentSplit => "InconsistentSplit".into(),
    }
}

/// Error text with 1-indexed vertices and event numbers.
fn describe_decomposition_error(e: &DecompositionError) -> String {
    use DecompositionError::*;
    match *e {
        VertexOutOfRange { vertex, position } => format!("VertexOutOfRange({}) at event {}", vertex + 1, position + 1),
        DoubleIntroduce { vertex, position } => format!("DoubleIntroduce({}) at event {}", vertex + 1, position + 1),
        ForgetBeforeIntroduce { vertex, position } => {
            format!("ForgetBeforeIntroduce({}) at event {}", vertex + 1, position + 1)
        }
        DoubleForget { vertex, position } => format!("DoubleForget({}) at event {}", vertex + 1, position + 1),
        NeverIntroduced(v) => format!("NeverIntroduced({})", v + 1),
        EdgeUncovered(u, v) => format!("EdgeUncovered({},{})", u + 1, v + 1),
        NonEmptyEnd => "NonEmptyEnd".into(),
        StructureMismatch(what) => format!("StructureMismatch: {what}"),
    }
}

/// Certificate problems keep the constructor's names; constraint numbers
/// and vertices are 1-indexed as in the source files.
fn certificate_failure(e: &ReductionError) -> Failure {
    use ReductionError::*;
    let msg = match e {
        NotIndependent(u, v) => format!("NotIndependent({},{})", u + 1, v + 1),
        VertexOutOfRange(v) => format!("VertexOutOfRange({})", v + 1),
        AssignmentUnsatisfying(c) => format!("AssignmentUnsatisfying({})", c + 1),
        AmbiguousAcceptedTuple(c) => format!("AmbiguousAcceptedTuple({})", c + 1),
        ValueOutOfDomain { variable, value } => format!("ValueOutOfDomain: variable {} has value {value}", variable + 1),
        WitnessRejected(m) => format!("WitnessRejected: {}", describe_minimality_error(m)),
        other => other.to_string(),
    };
    Failure::certificate(format!("certificate rejected: {msg}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        assert_eq!(parse_ratio("3"), Some(3.0));
        assert_eq!(parse_ratio("3/2"), Some(1.5));
        assert_eq!(parse_ratio("x"), None);
        assert_eq!(parse_ratio("1/0"), None);
    }

    #[test]
    fn messages_are_one_indexed() {
        assert_eq!(describe_minimality_error(&MinimalityError::NoPrivate(1)), "NoPrivate(2)");
        assert_eq!(
            describe_decomposition_error(&DecompositionError::EdgeUncovered(0, 1)),
            "EdgeUncovered(1,2)"
        );
    }

    #[test]
    fn help_exits_zero() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["updom", "--help"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().contains("oracle"));
        assert_eq!(run(["updom", "nonsense"], &mut Vec::new(), &mut err), 2);
    }

    #[test]
    fn bench_rows_are_stable_without_timing() {
        let render = || {
            let mut out = Vec::new();
            assert_eq!(run(["updom", "bench", "--suite", "dp", "--no-timing"], &mut out, &mut Vec::new()), 0);
            String::from_utf8(out).unwrap()
        };
        let text = render();
        assert_eq!(text, render());
        assert_eq!(text.lines().count(), 7);
        assert!(text.lines().skip(1).all(|l| l.ends_with(",ok")));
    }
}
