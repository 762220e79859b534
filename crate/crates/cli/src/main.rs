use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use p5lab::experiments::{
    decompose_corpus, estimate_d, run_invariants, run_suite, write_csv, Caps, DecomposeOptions, DecomposeStatus,
    Report, RunHeader, Suite, SuiteOptions,
};
use p5lab::generators::{GenKind, GenSpec};
use p5lab::graph6::{parse_lines, to_graph6};
use p5lab::invariants::fractional::dual_weights;
use p5lab::{Error, Graph, Rational, WeightFunction};

/// Exact invariants, certificates and verification suites for P5-free graphs.
#[derive(Parser)]
#[command(name = "p5lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write generated graphs as graph6 lines.
    Gen(GenArgs),
    /// Exact α, ω, χ, χ*, Hall ratio and d̂ per input graph.
    Invariants(InvariantsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Maximum empirical exponent over a corpus.
    EstimateD(EstimateArgs),
    /// Search and validate a certificate per input graph.
    Decompose(DecomposeArgs),
    /// Blow up each input graph by a weight function.
    Blowup(BlowupArgs),
}

#[derive(Args)]
struct Io {
    /// graph6 input file; standard input when absent.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long)]
    hall_cap: Option<usize>,
    #[arg(long)]
    pair_cap: Option<usize>,
    #[arg(long)]
    blockade_cap: Option<usize>,
    #[arg(long)]
    corpus_cap: Option<usize>,
    /// Largest number of maximal stable sets fed to the χ* LP.
    #[arg(long)]
    stable_set_cap: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Result<Caps, Error> {
        let d = Caps::default();
        let caps = Caps {
            hall: self.hall_cap.unwrap_or(d.hall),
            pair: self.pair_cap.unwrap_or(d.pair),
            blockade: self.blockade_cap.unwrap_or(d.blockade),
            corpus: self.corpus_cap.unwrap_or(d.corpus),
            stable_sets: self.stable_set_cap.unwrap_or(d.stable_sets),
        };
        caps.validate()?;
        Ok(caps)
    }
}

#[derive(Args)]
struct GenArgs {
    /// One of all, gnp, cograph, tfc, blowup, rejection.
    #[arg(long)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    /// Edge probability as a rational, for gnp and rejection.
    #[arg(long)]
    p: Option<Rational>,
    #[arg(long, env = "P5LAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    io: Io,
    /// Also write the flat CSV projection here.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Seeded random instances; each suite has its own default.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, env = "P5LAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1/2")]
    eps: Rational,
    #[arg(long, default_value = "9")]
    d: Rational,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, default_value = "1/2")]
    eps: Rational,
    #[arg(long, default_value = "9")]
    d: Rational,
    /// Also run the anticomplete decomposition and record its trace.
    #[arg(long)]
    trace: bool,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct BlowupArgs {
    #[command(flatten)]
    io: Io,
    /// Comma-separated vertex weights for every input graph; defaults to the
    /// optimal fractional-colouring dual weights of each graph.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
}

/// Failure that maps onto an exit code.
enum Fail {
    Error(Error),
    /// Input line with a parse error.
    Line(usize, Error),
    /// The run finished but found failures.
    Found(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Error(e)
    }
}

impl Fail {
    fn io(path: &Path, e: io::Error) -> Self {
        Fail::Error(Error::Argument(format!("{}: {e}", path.display())))
    }

    fn code(&self) -> u8 {
        match self {
            Fail::Found(_) => 1,
            Fail::Line(..) => 2,
            Fail::Error(Error::Parse { .. } | Error::Argument(_)) => 2,
            Fail::Error(Error::Capability { .. }) => 3,
            Fail::Error(Error::Invariant { .. } | Error::Cancelled) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Fail::Error(e) => e.to_string(),
            Fail::Line(line, e) => format!("line {line}: {e}"),
            Fail::Found(m) => m.clone(),
        }
    }
}

type Run = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Invariants(a) => invariants(a),
        Command::Verify(a) => verify(a),
        Command::EstimateD(a) => estimate(a),
        Command::Decompose(a) => decompose(a),
        Command::Blowup(a) => blowup(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("p5lab: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_graphs(input: &Option<PathBuf>) -> Result<Vec<(usize, Graph)>, Fail> {
    let text = match input {
        Some(p) => fs::read_to_string(p).map_err(|e| Fail::io(p, e))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Fail::io(Path::new("<stdin>"), e))?;
            s
        }
    };
    parse_lines(&text).map_err(|(line, e)| Fail::Line(line, e))
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Run {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::io(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Fail::io(Path::new("<stdout>"), e)),
    }
}

fn write_report<R: Serialize>(out: &Option<PathBuf>, mut header: RunHeader, started: Instant, records: Vec<R>) -> Run {
    header.wall_time_s = started.elapsed().as_secs_f64();
    let mut text = serde_json::to_string_pretty(&Report { header, records }).expect("report serializes");
    text.push('\n');
    write_out(out, &text)
}

fn graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| to_graph6(g) + "\n").collect()
}

fn gen(a: GenArgs) -> Run {
    let spec = GenSpec {
        kind: a.kind,
        n: a.n,
        p: a.p,
        seed: a.seed,
        count: a.count,
    };
    write_out(&a.out, &graph6_lines(&spec.generate()?))
}

fn invariants(a: InvariantsArgs) -> Run {
    let started = Instant::now();
    let caps = a.caps.caps()?;
    let graphs = read_graphs(&a.io.input)?;
    let records = run_invariants(&graphs, &caps, a.jobs)?;
    if let Some(path) = &a.csv {
        let f = fs::File::create(path).map_err(|e| Fail::io(path, e))?;
        write_csv(&records, f)?;
    }
    write_report(&a.io.out, RunHeader::new("invariants", None, &caps), started, records)
}

fn verify(a: VerifyArgs) -> Run {
    let started = Instant::now();
    let opts = SuiteOptions {
        n_max: a.n_max,
        random: a.random,
        seed: a.seed,
        eps: a.eps,
        d: a.d,
        jobs: a.jobs,
        caps: a.caps.caps()?,
    };
    let outcome = run_suite(a.suite, &opts)?;
    let passed = outcome.passed();
    for f in &outcome.failures {
        eprintln!("FAIL {}: {}", f.graph6.as_deref().unwrap_or("-"), f.message);
    }
    eprintln!(
        "{} {}: {} instances, {} failures",
        if passed { "PASS" } else { "FAIL" },
        a.suite,
        outcome.instances,
        outcome.failure_count
    );
    let failures = outcome.failure_count;
    write_report(
        &a.out,
        RunHeader::new(a.suite.name(), Some(a.seed), &opts.caps),
        started,
        vec![outcome],
    )?;
    if passed {
        Ok(())
    } else {
        Err(Fail::Found(format!("suite {} found {failures} failures", a.suite)))
    }
}

fn estimate(a: EstimateArgs) -> Run {
    let started = Instant::now();
    let graphs = read_graphs(&a.io.input)?;
    let summary = estimate_d(graphs.iter().map(|(id, g)| (*id, g)));
    for s in &summary.skipped {
        eprintln!("warning: line {} skipped: {}", s.id, s.reason);
    }
    eprintln!("{}", summary.message);
    write_report(&a.io.out, RunHeader::new("estimate-d", None, &Caps::default()), started, vec![summary])
}

fn decompose(a: DecomposeArgs) -> Run {
    let started = Instant::now();
    let opts = DecomposeOptions {
        eps: a.eps,
        d: a.d,
        trace: a.trace,
        jobs: a.jobs,
        caps: a.caps.caps()?,
    };
    let graphs = read_graphs(&a.io.input)?;
    let records = decompose_corpus(&graphs, &opts)?;
    let failures: Vec<_> = records
        .iter()
        .filter(|r| r.status == DecomposeStatus::Failure)
        .collect();
    for r in &failures {
        eprintln!(
            "FAILURE line {} ({}): {}",
            r.id,
            r.graph6,
            r.reason.as_deref().unwrap_or("")
        );
    }
    let count = failures.len();
    write_report(&a.io.out, RunHeader::new("decompose", None, &opts.caps), started, records)?;
    if count == 0 {
        Ok(())
    } else {
        Err(Fail::Found(format!("{count} instances without a valid certificate")))
    }
}

fn blowup(a: BlowupArgs) -> Run {
    let graphs = read_graphs(&a.io.input)?;
    let mut out = Vec::with_capacity(graphs.len());
    for (line, g) in &graphs {
        let f = match &a.weights {
            Some(w) => WeightFunction(w.clone()),
            None => dual_weights(g)?.f,
        };
        match g.blow_up(&f) {
            Ok(j) => out.push(j),
            Err(e) => {
                eprintln!("p5lab: blow-up of line {line} failed");
                return Err(e.into());
            }
        }
    }
    write_out(&a.io.out, &graph6_lines(&out))
}
