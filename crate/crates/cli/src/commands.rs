use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nil_core::classifier::{
    build_certificate, classify, cross_validate, verify_certificate, Certificate, ClassifierError, GraphFamily, Verification,
};
use nil_core::closure::{ClosureError, ClosureOracle, NormalityVerdict, OracleLimits, DEFAULT_BOX_BUDGET, DEFAULT_T_MAX};
use nil_core::ideal::{IdealError, MonomialIdeal};
use nil_core::wgraph::{GraphError, WeightedGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph_io::{self, ParseError};
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NOT_INTEGRALLY_CLOSED: i32 = 10;
pub const EXIT_NOT_NORMAL: i32 = 11;

#[derive(Debug, Parser)]
#[command(name = "nil", version, about = "Integral closure and normality of edge ideals of edge-weighted graphs")]
#[command(after_help = "Exit codes: 0 normal / success, 1 failed check or internal error, 2 input error, \
3 resource budget exceeded, 10 not integrally closed, 11 integrally closed but not normal.")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest power checked by the normality scan.
    #[arg(long = "tmax", global = true, default_value_t = DEFAULT_T_MAX, value_parser = clap::value_parser!(u32).range(1..))]
    pub t_max: u32,
    /// Maximum lattice points in the closure search box.
    #[arg(long, global = true, env = "NIL_BOX_BUDGET", default_value_t = DEFAULT_BOX_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub box_budget: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Seed for every random choice (sampling in `enumerate`).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral-closedness and normality verdicts with a certificate.
    Classify {
        file: PathBuf,
        /// Build a certificate for every located configuration.
        #[arg(long)]
        certificates: bool,
        /// Check certificates against the closure oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Generators of closure(I^k), of I^k, and their difference.
    Closure {
        file: PathBuf,
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Search for closure(I^t) != I^t for t = 1..=tmax.
    Normality { file: PathBuf },
    /// Compact-graph class of a connected graph without leaves.
    Compact { file: PathBuf },
    /// Cross-check classifier and oracle on every graph of a family.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        /// Comma-separated edge weights.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        weights: Vec<u64>,
        /// Connected graphs of every size up to max-vertices, instead of all
        /// graphs on exactly max-vertices vertices.
        #[arg(long)]
        connected: bool,
        /// Check only this many graphs, drawn with --seed.
        #[arg(long)]
        sample: Option<usize>,
        /// Refuse families with more vertices than this.
        #[arg(long, default_value_t = 6)]
        vertex_cap: usize,
    },
}

/// Exit code and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

enum Failure {
    Input(String),
    Budget(String),
    Internal(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ClosureError> for Failure {
    fn from(e: ClosureError) -> Self {
        match e {
            ClosureError::Ideal(i) => i.into(),
            ClosureError::AtPower { ref source, .. } if !matches!(**source, ClosureError::Ideal(_)) => {
                Failure::Budget(e.to_string())
            }
            ClosureError::AtPower { .. } => Failure::Input(e.to_string()),
            other => Failure::Budget(other.to_string()),
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::UnrecognizedCompact(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ClassifierError> for Failure {
    fn from(e: ClassifierError) -> Self {
        match e {
            ClassifierError::EdgelessGraph | ClassifierError::Ideal(_) | ClassifierError::WitnessLength { .. } => {
                Failure::Input(e.to_string())
            }
            ClassifierError::Closure(c) => c.into(),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn limits(config: &RunConfig) -> OracleLimits {
    OracleLimits { box_budget: config.box_budget, ..Default::default() }
}

fn render<T: Serialize>(config: &RunConfig, value: &T, text: impl FnOnce() -> String) -> String {
    match config.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => text(),
    }
}

fn load(file: &PathBuf) -> Result<WeightedGraph, Failure> {
    Ok(graph_io::read_graph_file(file)?)
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Classify { file, certificates, verify } => cmd_classify(&cli.config, file, *certificates, *verify),
        Command::Closure { file, k } => cmd_closure(&cli.config, file, *k),
        Command::Normality { file } => cmd_normality(&cli.config, file),
        Command::Compact { file } => cmd_compact(&cli.config, file),
        Command::Enumerate { max_vertices, weights, connected, sample, vertex_cap } => {
            cmd_enumerate(&cli.config, *max_vertices, weights, *connected, *sample, *vertex_cap)
        }
    };
    match result {
        Ok(o) => o,
        Err(Failure::Input(m)) => Outcome::fail(EXIT_INPUT, m),
        Err(Failure::Budget(m)) => Outcome::fail(EXIT_BUDGET, m),
        Err(Failure::Internal(m)) => Outcome::fail(EXIT_CHECK_FAILED, m),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(code, text)
            }
        }
    }
}

fn cmd_classify(config: &RunConfig, file: &PathBuf, all: bool, verify: bool) -> Result<Outcome, Failure> {
    let g = load(file)?;
    let report = classify(&g)?;
    let check = |c: Certificate| -> Result<Certificate, Failure> {
        if verify {
            Ok(verify_certificate(&g, &c, limits(config))?)
        } else {
            Ok(c)
        }
    };
    let primary = report.primary_certificate.clone().map(check).transpose()?;
    let others = if all {
        let mut out = Vec::new();
        for cfg in &report.found {
            match build_certificate(&g, cfg) {
                Ok(c) => out.push(check(c)?),
                // F4/F5 with a heavy cycle edge: covered by an F1-F3 certificate
                Err(ClassifierError::NontrivialCycleEdge { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
        Some(out)
    } else {
        None
    };
    let failed = primary.iter().chain(others.iter().flatten()).any(|c| c.verified == Verification::FailedVerification);
    let code = if failed {
        EXIT_CHECK_FAILED
    } else if !report.integrally_closed {
        EXIT_NOT_INTEGRALLY_CLOSED
    } else if !report.normal {
        EXIT_NOT_NORMAL
    } else {
        EXIT_OK
    };
    let json = ClassifyJson::new(&report, primary.as_ref(), others.as_deref());
    let out = render(config, &json, || {
        let mut s = String::new();
        writeln!(s, "integrally closed: {}", report.integrally_closed).unwrap();
        writeln!(s, "normal: {}", report.normal).unwrap();
        for c in &report.found {
            writeln!(s, "found {c}").unwrap();
        }
        for c in primary.iter().chain(others.iter().flatten()) {
            writeln!(
                s,
                "certificate {} at t = {}: {} ({})",
                c.config,
                c.t,
                c.witness.monomial(),
                verification_tag(c.verified)
            )
            .unwrap();
        }
        for n in &report.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    });
    Ok(Outcome::ok(code, out))
}

fn cmd_closure(config: &RunConfig, file: &PathBuf, k: u32) -> Result<Outcome, Failure> {
    let g = load(file)?;
    let ideal = MonomialIdeal::edge_ideal(&g)?;
    let mut oracle = ClosureOracle::new(&ideal, limits(config))?;
    let closure = oracle.closure_generators(k)?;
    let power = ideal.power(k)?;
    let mut difference = Vec::new();
    for c in closure.generators() {
        if !ideal.contains_power(c, k)? {
            difference.push(c.clone());
        }
    }
    let json = ClosureJson::new(k, &closure, &power, difference.clone());
    let out = render(config, &json, || {
        let mut s = String::new();
        writeln!(s, "closure of I^{k}: {closure}").unwrap();
        writeln!(s, "I^{k}: {power}").unwrap();
        let diff: Vec<String> = difference.iter().map(|d| d.monomial()).collect();
        writeln!(s, "difference: [{}]", diff.join(", ")).unwrap();
        s
    });
    Ok(Outcome::ok(EXIT_OK, out))
}

fn cmd_normality(config: &RunConfig, file: &PathBuf) -> Result<Outcome, Failure> {
    let g = load(file)?;
    let ideal = MonomialIdeal::edge_ideal(&g)?;
    let verdict = ClosureOracle::new(&ideal, limits(config))?.normality_scan(config.t_max)?;
    let json = NormalityJson::from(&verdict);
    let out = render(config, &json, || match &verdict {
        NormalityVerdict::NormalUpTo { t_max } => format!("normal up to t = {t_max} ({ONE_SIDED_NOTE})\n"),
        NormalityVerdict::CounterexampleAt { t, witness } => {
            format!("counterexample at t = {t}: {} in closure(I^{t}) but not in I^{t}\n", witness.monomial())
        }
    });
    Ok(Outcome::ok(EXIT_OK, out))
}

fn cmd_compact(config: &RunConfig, file: &PathBuf) -> Result<Outcome, Failure> {
    let g = load(file)?;
    let class = g.classify_compact()?;
    let json = CompactJson::from(&class);
    let out = render(config, &json, || {
        let mut s = format!("{} stems {:?}", class.kind, class.stems);
        if let Some(p) = &class.even_path {
            write!(s, " even path {p:?}").unwrap();
        }
        s.push('\n');
        s
    });
    Ok(Outcome::ok(EXIT_OK, out))
}

fn cmd_enumerate(
    config: &RunConfig,
    max_vertices: usize,
    weights: &[u64],
    connected: bool,
    sample: Option<usize>,
    vertex_cap: usize,
) -> Result<Outcome, Failure> {
    if max_vertices > vertex_cap {
        return Err(Failure::Input(format!("max-vertices {max_vertices} exceeds the vertex cap {vertex_cap}")));
    }
    if weights.is_empty() || weights.contains(&0) {
        return Err(Failure::Input("weights must be a nonempty list of positive integers".into()));
    }
    let family = GraphFamily { max_vertices, weights: weights.to_vec(), connected_only: connected };
    let report = match sample {
        None => cross_validate(&family, config.t_max, limits(config)),
        Some(count) => {
            let mut graphs = family.graphs();
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            graphs.shuffle(&mut rng);
            graphs.truncate(count);
            nil_core::classifier::cross_validate_graphs(graphs, config.t_max, limits(config))
        }
    };
    let json = EnumerateJson::new(max_vertices, weights, connected, &report);
    let code = if report.is_clean() { EXIT_OK } else { EXIT_CHECK_FAILED };
    let out = render(config, &json, || {
        let mut s = String::new();
        writeln!(s, "graphs checked: {}", report.graphs_checked).unwrap();
        writeln!(s, "not integrally closed: {}", report.not_integrally_closed).unwrap();
        writeln!(s, "integrally closed, not normal: {}", report.integrally_closed_not_normal).unwrap();
        writeln!(s, "normal: {}", report.normal).unwrap();
        writeln!(s, "certificates verified: {}", report.certificates_verified).unwrap();
        writeln!(s, "disagreements: {}", report.disagreements.len()).unwrap();
        for d in &report.disagreements {
            writeln!(s, "  {}: {}", graph_io::to_json(&d.graph), d.reason).unwrap();
        }
        writeln!(s, "skipped: {}", report.skipped.len()).unwrap();
        for k in &report.skipped {
            writeln!(s, "  {}: {}", graph_io::to_json(&k.graph), k.reason).unwrap();
        }
        writeln!(s, "note: {}", json.note).unwrap();
        s
    });
    Ok(Outcome::ok(code, out))
}
