//! The `clawpack` command line: color, solve, verify, generate, decompose.
//!
//! Exit codes: 0 success, 1 I/O or malformed input, 2 structural
//! precondition failure, 3 solver cap exceeded, 4 invalid coloring.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use clawpack::bridged::tilde_construction;
use clawpack::canonical::ColoringError;
use clawpack::generators::{
    expand_to_clawfree, fixture, gen_bridged, gen_cubic_multigraph, gen_ring_of_diamonds,
    random_tree_spec, BlockSpec, ExpansionSpec, GenError,
};
use clawpack::graph::{emit_graph, parse_graph, GraphFormat, MultiGraph};
use clawpack::oracle::{solve_spacking, verify, OracleError, VerifyError, Violation, DEFAULT_CAP};
use clawpack::recognition::{build_bridge_tree, oum_decompose, ComponentKind, OumDecomposition};
use clawpack::rng::SplitMix64;
use clawpack::{color_claw_free_cubic, PackingColoring, SPackingSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "clawpack",
    version,
    about = "(1,1,2,2)-packing colorings of claw-free cubic graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color claw-free cubic graphs constructively and verify the result.
    Color(ColorArgs),
    /// Decide whether a graph has an S-packing coloring by exhaustive search.
    Solve(SolveArgs),
    /// Check a coloring file against a graph.
    Verify(VerifyArgs),
    /// Write a generated graph as an edge list.
    Generate(GenerateArgs),
    /// Print the bridge tree and the triangle/diamond structure.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input format; defaults to graph6 for `.g6` files and edge list otherwise.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Graph files, or `-` for stdin. A graph6 file may hold one graph per line.
    #[arg(required = true)]
    pub paths: Vec<PathBuf>,
    #[command(flatten)]
    pub input: InputArgs,
    /// Print one JSON report per graph.
    #[arg(long)]
    pub json: bool,
    /// Worker threads across input files.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "1,1,2,2")]
    pub spec: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// `vertex label` lines, or a JSON report from `color --json`.
    pub coloring: PathBuf,
    #[command(flatten)]
    pub input: InputArgs,
    /// Overrides the spec recorded in a JSON report.
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Ring of `--k` diamonds.
    Ring,
    /// Random 2-edge-connected cubic multigraph on `--n` vertices.
    Cubic,
    /// Triangle/diamond expansion of a random cubic multigraph on `--n` vertices.
    Expansion,
    /// Bridged graph from `--blocks`, or a random tree on `--k` blocks.
    Bridged,
    /// A named fixture (`--name`).
    Fixture,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Longest diamond string per edge for `expansion`.
    #[arg(long, default_value_t = 1)]
    pub max_string: usize,
    /// Comma-separated blocks: `k3`, `diamond`, `t<r>` (Type III with r attachments).
    #[arg(long)]
    pub blocks: Option<String>,
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Colored,
    Unsat,
    Error,
}

/// The result of coloring or solving one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: String,
    pub outcome: Outcome,
    pub spec: String,
    /// Label of vertex `v` at index `v`.
    pub coloring: Option<Vec<String>>,
    pub verified: bool,
    pub elapsed_ms: f64,
    pub error: Option<String>,
    pub exit_code: i32,
}

impl RunReport {
    fn error(input: &str, spec: &SPackingSpec, code: i32, msg: String, started: Instant) -> Self {
        RunReport {
            input: input.to_string(),
            outcome: Outcome::Error,
            spec: spec.to_string(),
            coloring: None,
            verified: false,
            elapsed_ms: elapsed_ms(started),
            error: Some(msg),
            exit_code: code,
        }
    }

    /// `vertex label` lines followed by `status` (or `UNSAT`).
    pub fn to_text(&self, status: &str) -> String {
        let mut out = String::new();
        match (&self.coloring, self.outcome) {
            (Some(labels), _) => {
                for (v, l) in labels.iter().enumerate() {
                    let _ = writeln!(out, "{v} {l}");
                }
                out.push_str(status);
                out.push('\n');
            }
            (None, Outcome::Unsat) => out.push_str("UNSAT\n"),
            (None, _) => {}
        }
        out
    }
}

fn elapsed_ms(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1000.0
}

/// Colors one graph, verifying before reporting success.
pub fn color_report(input: &str, g: &MultiGraph) -> RunReport {
    let started = Instant::now();
    let spec = SPackingSpec::s1122();
    let coloring = match color_claw_free_cubic(g) {
        Ok(c) => c,
        Err(e) => {
            let code = match e {
                ColoringError::Recognition(_) | ColoringError::PreconditionViolated(_) => {
                    EXIT_PRECONDITION
                }
                _ => EXIT_INVALID,
            };
            return RunReport::error(input, &spec, code, e.to_string(), started);
        }
    };
    if let Err(e) = verify(g, &coloring) {
        return RunReport::error(input, &spec, EXIT_INVALID, e.to_string(), started);
    }
    RunReport {
        input: input.to_string(),
        outcome: Outcome::Colored,
        spec: spec.to_string(),
        coloring: Some(labels(&coloring)),
        verified: true,
        elapsed_ms: elapsed_ms(started),
        error: None,
        exit_code: EXIT_OK,
    }
}

/// Runs the exact solver on one graph.
pub fn solve_report(input: &str, g: &MultiGraph, spec: &SPackingSpec, cap: usize) -> RunReport {
    let started = Instant::now();
    match solve_spacking(g, spec, cap) {
        Ok(Some(c)) => RunReport {
            input: input.to_string(),
            outcome: Outcome::Colored,
            spec: spec.to_string(),
            verified: verify(g, &c).is_ok(),
            coloring: Some(labels(&c)),
            elapsed_ms: elapsed_ms(started),
            error: None,
            exit_code: EXIT_OK,
        },
        Ok(None) => RunReport {
            input: input.to_string(),
            outcome: Outcome::Unsat,
            spec: spec.to_string(),
            coloring: None,
            verified: false,
            elapsed_ms: elapsed_ms(started),
            error: None,
            exit_code: EXIT_OK,
        },
        Err(e @ OracleError::CapExceeded { .. }) => {
            RunReport::error(input, spec, EXIT_CAP, e.to_string(), started)
        }
        Err(e) => RunReport::error(input, spec, EXIT_PRECONDITION, e.to_string(), started),
    }
}

fn labels(c: &PackingColoring) -> Vec<String> {
    (0..c.len()).map(|v| c.label(v)).collect()
}

/// A failure that ends a command with a specific exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

fn read_text(path: &Path, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
    }
}

fn format_for(path: &Path, arg: Option<FormatArg>) -> GraphFormat {
    match arg {
        Some(f) => f.into(),
        None if path.extension().is_some_and(|e| e == "g6") => GraphFormat::Graph6,
        None => GraphFormat::EdgeList,
    }
}

/// Graphs in a file with their descriptors; graph6 files hold one per line.
fn load_graphs(
    path: &Path,
    format: GraphFormat,
    stdin: &mut dyn Read,
) -> Result<Vec<(String, MultiGraph)>, Failure> {
    let text = read_text(path, stdin)?;
    let name = path.display().to_string();
    let bad = |e: clawpack::graph::GraphError| Failure::io(format!("{name}: {e}"));
    match format {
        GraphFormat::EdgeList => Ok(vec![(
            name.clone(),
            parse_graph(&text, format).map_err(bad)?,
        )]),
        GraphFormat::Graph6 => {
            let lines: Vec<&str> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            if lines.is_empty() {
                return Err(Failure::io(format!("{name}: empty input")));
            }
            let many = lines.len() > 1;
            lines
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let g = parse_graph(l, format).map_err(bad)?;
                    let desc = if many {
                        format!("{name}:{}", i + 1)
                    } else {
                        name.clone()
                    };
                    Ok((desc, g))
                })
                .collect()
        }
    }
}

fn load_one(path: &Path, format: GraphFormat, stdin: &mut dyn Read) -> Result<MultiGraph, Failure> {
    let mut graphs = load_graphs(path, format, stdin)?;
    if graphs.len() != 1 {
        return Err(Failure::io(format!(
            "{}: expected one graph",
            path.display()
        )));
    }
    Ok(graphs.pop().unwrap().1)
}

fn parse_spec(s: &str) -> Result<SPackingSpec, Failure> {
    s.parse()
        .map_err(|e| Failure::precondition(format!("spec `{s}`: {e}")))
}

/// Runs a parsed command; returns the exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Color(a) => cmd_color(&a, stdin, out, err),
        Command::Solve(a) => cmd_solve(&a, stdin, out),
        Command::Verify(a) => cmd_verify(&a, stdin, out),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Decompose(a) => cmd_decompose(&a, stdin, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_color(
    a: &ColorArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut jobs: Vec<(String, MultiGraph)> = Vec::new();
    for p in &a.paths {
        jobs.extend(load_graphs(p, format_for(p, a.input.format), stdin)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| Failure::io(format!("thread pool: {e}")))?;
    let reports: Vec<RunReport> = pool.install(|| {
        jobs.par_iter()
            .map(|(name, g)| color_report(name, g))
            .collect()
    });

    let many = reports.len() > 1;
    let mut code = EXIT_OK;
    for r in &reports {
        code = code.max(r.exit_code);
        if a.json {
            let line = serde_json::to_string(r).expect("report serializes");
            let _ = writeln!(out, "{line}");
            continue;
        }
        if many {
            let _ = writeln!(out, "# {}", r.input);
        }
        match &r.error {
            Some(e) => {
                let _ = writeln!(err, "{}: {e}", r.input);
            }
            None => {
                let _ = write!(out, "{}", r.to_text("VERIFIED"));
            }
        }
    }
    Ok(code)
}

fn cmd_solve(a: &SolveArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = parse_spec(&a.spec)?;
    let g = load_one(&a.path, format_for(&a.path, a.input.format), stdin)?;
    let r = solve_report(&a.path.display().to_string(), &g, &spec, a.cap);
    if let Some(e) = &r.error {
        return Err(Failure {
            code: r.exit_code,
            message: e.clone(),
        });
    }
    if a.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&r).expect("report serializes")
        );
    } else {
        let _ = write!(out, "{}", r.to_text("SAT"));
    }
    Ok(r.exit_code)
}

/// Reads `vertex label` lines, or the coloring inside a JSON report.
pub fn parse_coloring(
    text: &str,
    n: usize,
    spec_override: Option<SPackingSpec>,
) -> Result<PackingColoring, Failure> {
    if text.trim_start().starts_with('{') {
        let report: RunReport = serde_json::from_str(text.trim())
            .map_err(|e| Failure::io(format!("JSON report: {e}")))?;
        let spec = match spec_override {
            Some(s) => s,
            None => parse_spec(&report.spec)?,
        };
        let labels = report
            .coloring
            .ok_or_else(|| Failure::io("JSON report carries no coloring"))?;
        let lines: String = labels
            .iter()
            .enumerate()
            .map(|(v, l)| format!("{v} {l}\n"))
            .collect();
        return parse_lines(&lines, n, &spec);
    }
    parse_lines(text, n, &spec_override.unwrap_or_else(SPackingSpec::s1122))
}

fn parse_lines(text: &str, n: usize, spec: &SPackingSpec) -> Result<PackingColoring, Failure> {
    let mut classes: Vec<Option<usize>> = vec![None; n];
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |why: &str| Failure::io(format!("coloring line {}: {why}: `{line}`", no + 1));
        let mut parts = line.split_whitespace();
        let (Some(v), Some(l), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected `vertex label`"));
        };
        let v: usize = v.parse().map_err(|_| bad("bad vertex"))?;
        if v >= n {
            return Err(bad("vertex out of range"));
        }
        let class = spec.parse_label(l).ok_or_else(|| bad("unknown label"))?;
        if classes[v].replace(class).is_some() {
            return Err(bad("vertex colored twice"));
        }
    }
    let colored = classes.iter().filter(|c| c.is_some()).count();
    if colored < n {
        return Err(Failure::io(
            OracleError::PartialColoring { colored, n }.to_string(),
        ));
    }
    Ok(PackingColoring::new(
        spec.clone(),
        classes.into_iter().map(Option::unwrap).collect(),
    ))
}

fn describe_violation(spec: &SPackingSpec, v: &Violation) -> String {
    format!(
        "violation: class {} vertices {} and {} at distance {} (needs more than {})",
        spec.label(v.class),
        v.u,
        v.v,
        v.distance,
        spec.radius(v.class)
    )
}

fn cmd_verify(a: &VerifyArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = a.spec.as_deref().map(parse_spec).transpose()?;
    let g = load_one(&a.graph, format_for(&a.graph, a.input.format), stdin)?;
    let text = read_text(&a.coloring, stdin)?;
    let c = parse_coloring(&text, g.order(), spec)?;
    match verify(&g, &c) {
        Ok(()) => {
            let _ = writeln!(out, "OK");
            Ok(EXIT_OK)
        }
        Err(VerifyError::Violations(vs)) => {
            for v in &vs {
                let _ = writeln!(out, "{}", describe_violation(c.spec(), v));
            }
            Ok(EXIT_INVALID)
        }
        Err(VerifyError::Oracle(e)) => Err(Failure::io(e.to_string())),
    }
}

/// Parses `k3,diamond,t1,t2`.
pub fn parse_blocks(s: &str) -> Result<Vec<BlockSpec>, Failure> {
    s.split(',')
        .map(|b| {
            let b = b.trim().to_ascii_lowercase();
            match b.as_str() {
                "k3" | "triangle" => Ok(BlockSpec::Triangle),
                "diamond" | "d" => Ok(BlockSpec::Diamond),
                _ => b
                    .strip_prefix('t')
                    .and_then(|r| r.parse().ok())
                    .map(BlockSpec::TypeIII)
                    .ok_or_else(|| Failure::precondition(format!("unknown block `{b}`"))),
            }
        })
        .collect()
}

fn gen_failure(e: GenError) -> Failure {
    Failure::precondition(e.to_string())
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut rng = SplitMix64::new(a.seed);
    let g = match a.kind {
        GenKind::Ring => gen_ring_of_diamonds(a.k).map_err(gen_failure)?,
        GenKind::Cubic => gen_cubic_multigraph(a.n, &mut rng).map_err(gen_failure)?,
        GenKind::Expansion => {
            let h = gen_cubic_multigraph(a.n, &mut rng).map_err(gen_failure)?;
            let spec = ExpansionSpec::random(&h, a.max_string, &mut rng);
            expand_to_clawfree(&h, &spec).map_err(gen_failure)?
        }
        GenKind::Bridged => {
            let blocks = match &a.blocks {
                Some(b) => parse_blocks(b)?,
                None => random_tree_spec(a.k, &mut rng),
            };
            gen_bridged(&blocks, a.seed).map_err(gen_failure)?
        }
        GenKind::Fixture => {
            let name = a
                .name
                .as_deref()
                .ok_or_else(|| Failure::precondition("fixture needs --name"))?;
            fixture(name)
                .ok_or_else(|| Failure::precondition(format!("unknown fixture `{name}`")))?
                .graph
        }
    };
    let text = emit_graph(&g, a.format.into()).map_err(|e| Failure::precondition(e.to_string()))?;
    match &a.output {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::io(format!("{}: {e}", p.display())))?
        }
        None => {
            let _ = write!(out, "{text}");
        }
    }
    Ok(EXIT_OK)
}

/// One-line summary of a decomposition.
pub fn describe_oum(d: &OumDecomposition) -> String {
    match d {
        OumDecomposition::K4 => "K4".to_string(),
        OumDecomposition::RingOfDiamonds(r) => format!("ring of {} diamonds", r.len()),
        OumDecomposition::Built(b) => {
            let mut parallel = String::new();
            for (m, word) in [(2, "double"), (3, "triple")] {
                let count = b.h.simple_edges().iter().filter(|e| e.2 == m).count();
                if count > 0 {
                    let plural = if count == 1 { "" } else { "s" };
                    let _ = write!(parallel, ", {count} {word} edge{plural}");
                }
            }
            let parallel = parallel.trim_start_matches(", ");
            let mut lengths: Vec<usize> =
                b.string_lengths().into_iter().filter(|&l| l > 0).collect();
            lengths.sort_unstable_by(|x, y| y.cmp(x));
            let strings = if lengths.is_empty() {
                "none".to_string()
            } else {
                let l: Vec<String> = lengths.iter().map(usize::to_string).collect();
                format!("lengths {}", l.join(","))
            };
            let h = if parallel.is_empty() {
                format!("{} vertices", b.h.order())
            } else {
                format!("{} vertices ({parallel})", b.h.order())
            };
            format!("Built: H = {h}, strings: {strings}")
        }
    }
}

/// The decompose report as text.
pub fn decompose_text(g: &MultiGraph) -> Result<String, Failure> {
    let pre = |e: clawpack::recognition::RecognitionError| Failure::precondition(e.to_string());
    let tree = build_bridge_tree(g).map_err(pre)?;
    let mut out = String::new();
    let kind_name = |k: ComponentKind| match k {
        ComponentKind::Triangle => "K3",
        ComponentKind::Diamond => "diamond",
        ComponentKind::TypeIII => "TypeIII",
    };
    let mut summary = Vec::new();
    for k in [
        ComponentKind::Triangle,
        ComponentKind::Diamond,
        ComponentKind::TypeIII,
    ] {
        let count = tree.components.iter().filter(|c| c.kind == k).count();
        match count {
            0 => {}
            1 => summary.push(kind_name(k).to_string()),
            _ => summary.push(format!("{}×{count}", kind_name(k))),
        }
    }
    let _ = writeln!(
        out,
        "bridge tree {}; components: {}",
        tree.shape(),
        summary.join(", ")
    );
    if tree.components.len() == 1 {
        let d = oum_decompose(g).map_err(pre)?;
        let _ = writeln!(out, "{}", describe_oum(&d));
        return Ok(out);
    }
    for (i, c) in tree.components.iter().enumerate() {
        let role = if i == tree.root { ", root" } else { "" };
        let _ = write!(
            out,
            "component {i}: {} on {} vertices{role}",
            kind_name(c.kind),
            c.vertices.len()
        );
        if c.kind == ComponentKind::TypeIII {
            let sub = g.induced_subgraph(&c.vertices);
            let entry = match tree.attachment[i] {
                Some(a) => c
                    .vertices
                    .binary_search(&a.vertex)
                    .expect("attachment in component"),
                None => (0..sub.order())
                    .find(|&v| sub.degree(v) == 2)
                    .expect("root has a degree-2 vertex"),
            };
            let t = tilde_construction(&sub, entry)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            let d = oum_decompose(&t.graph).map_err(pre)?;
            let _ = write!(out, "; completion: {}", describe_oum(&d));
        }
        out.push('\n');
    }
    Ok(out)
}

fn cmd_decompose(
    a: &DecomposeArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let g = load_one(&a.path, format_for(&a.path, a.input.format), stdin)?;
    let text = decompose_text(&g)?;
    let _ = write!(out, "{text}");
    Ok(EXIT_OK)
}
