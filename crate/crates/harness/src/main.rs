use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pebblab::explore::explore;
use pebblab::suites::{self, parse_range, Suite, VerifyOptions};
use pebblab::{Item, Report};
use pebblab_core::characterization::classify_with;
use pebblab_core::family::build;
use pebblab_core::invariants::{
    gamma, gamma_r, gamma_t, pebbling_number_with, pi_star_t_with, pi_star_with, EnumerationOptions,
    InvariantResult, PEBBLING_NUMBER_MAX_ORDER,
};
use pebblab_core::io::{parse_configuration, parse_graph, write_configuration, write_graph};
use pebblab_core::pebbling::{Pebbler, SearchOptions, DEFAULT_WEIGHT_BUDGET};
use pebblab_core::{Error, FamilySpec, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXIT_UNSOLVABLE: u8 = 1;
const EXIT_FORMAT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

/// Optimal pebbling and domination toolkit.
#[derive(Parser)]
#[command(name = "pebblab", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Ceiling on candidate configurations per enumeration.
    #[arg(long, global = true, default_value_t = EnumerationOptions::default().config_budget)]
    budget: u64,
    /// Largest configuration weight the reachability search accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_WEIGHT_BUDGET)]
    max_weight: u32,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

impl Global {
    fn enumeration(&self) -> EnumerationOptions {
        EnumerationOptions {
            config_budget: self.budget,
            search: SearchOptions { weight_budget: self.max_weight },
            parallel: self.jobs > 1,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a family spec (or a random tree) and print it.
    Gen {
        /// e.g. path:6, grid:4x5, corona:(cycle:5,complete:1), f:3,2,4
        spec: Option<String>,
        /// Random labeled tree on this many vertices, drawn with --seed.
        #[arg(long, conflicts_with = "spec")]
        tree: Option<usize>,
    },
    /// Check a configuration for solvability, or reachability of one target.
    Solve {
        graph: PathBuf,
        config: PathBuf,
        #[arg(long)]
        target: Option<usize>,
    },
    /// Compute pi, pistar, pistar_t:<t>, gamma, gamma_t or gamma_r.
    Invariant { graph: PathBuf, which: String },
    /// Predict pi*_2 up to five from domination structure.
    Classify {
        graph: PathBuf,
        /// Let the third vertex of a triple coincide with one of the pair.
        #[arg(long)]
        relaxed: bool,
        /// Also compute pi*_2 and exit 4 on a disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite and write a report stream.
    Verify(VerifyArgs),
    /// Search for light cap-2 configurations on the grid P_n x P_m.
    Explore {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 2)]
        cap: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// thm1, thm2-5, roman, trees, grids, corona, bounds or all.
    #[arg(required_unless_present = "replay")]
    suite: Option<String>,
    /// Vertex-count range, inclusive, e.g. 2..5.
    #[arg(long)]
    range: Option<String>,
    /// Record zero runtimes so reports are byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
    /// Include the exhaustive lower bounds for the larger grids.
    #[arg(long)]
    long: bool,
    #[arg(long)]
    relaxed: bool,
    #[arg(long, default_value_t = 200)]
    trees: usize,
    /// Re-validate every witness in an existing report instead of running.
    #[arg(long, conflicts_with = "suite")]
    replay: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Format(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. } | Error::WeightCapExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(Error::CapExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_FORMAT,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

struct Output {
    path: Option<PathBuf>,
    buf: String,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn flush(self) -> CliResult<()> {
        match &self.path {
            Some(p) => fs::write(p, &self.buf).map_err(|source| CliError::Io { path: p.clone(), source }),
            None => {
                let mut stdout = io::stdout().lock();
                stdout
                    .write_all(self.buf.as_bytes())
                    .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output { path: cli.global.out.clone(), buf: String::new() };
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_FORMAT);
    }
    ExitCode::from(code)
}

fn run(cli: &Cli, out: &mut Output) -> CliResult<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { spec, tree } => gen(spec.as_deref(), *tree, g.seed, out),
        Command::Solve { graph, config, target } => solve(graph, config, *target, g, out),
        Command::Invariant { graph, which } => invariant(graph, which, g, out),
        Command::Classify { graph, relaxed, check } => classify(graph, !relaxed, *check, g, out),
        Command::Verify(args) => verify(args, g, out),
        Command::Explore { n, m, cap } => explore_grid(*n, *m, *cap, g, out),
    }
}

fn gen(spec: Option<&str>, tree: Option<usize>, seed: u64, out: &mut Output) -> CliResult<u8> {
    let spec = match (spec, tree) {
        (Some(s), None) => s.parse::<FamilySpec>()?,
        (None, Some(n)) if n >= 2 => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            FamilySpec::PruferTree((0..n - 2).map(|_| rng.gen_range(0..n)).collect())
        }
        (None, Some(_)) => return Err(CliError::Format("a random tree needs at least 2 vertices".into())),
        _ => return Err(CliError::Format("give a family spec or --tree <n>".into())),
    };
    let graph = build(&spec)?.with_label(spec.to_string());
    out.buf.push_str(&write_graph(&graph));
    Ok(0)
}

fn solve(graph: &Path, config: &Path, target: Option<usize>, g: &Global, out: &mut Output) -> CliResult<u8> {
    let graph = read_graph(graph)?;
    let f = parse_configuration(&read(config)?, graph.order())?;
    let p = Pebbler::with_options(&graph, g.enumeration().search);
    if let Some(t) = target {
        if t >= graph.order() {
            return Err(Error::InvalidVertex { vertex: t, order: graph.order() }.into());
        }
        return Ok(match p.reachable(&f, t)? {
            Some(moves) => {
                out.line(moves.to_string());
                0
            }
            None => {
                out.line(format!("UNSOLVABLE v={t}"));
                EXIT_UNSOLVABLE
            }
        });
    }
    let cov = p.coverage(&f, true)?;
    let missing = cov.uncovered(graph.order());
    if !missing.is_empty() {
        let list: Vec<String> = missing.iter().map(ToString::to_string).collect();
        out.line(format!("UNSOLVABLE v={}", list.join(",")));
        return Ok(EXIT_UNSOLVABLE);
    }
    out.line("SOLVABLE");
    for moves in cov.per_target_witness.iter().flatten().flatten() {
        if !moves.steps.is_empty() {
            out.line(moves.to_string());
        }
    }
    Ok(0)
}

fn invariant(graph: &Path, which: &str, g: &Global, out: &mut Output) -> CliResult<u8> {
    let graph = read_graph(graph)?;
    let opts = g.enumeration();
    let result: std::result::Result<InvariantResult, Error> = match which {
        "pi" => pebbling_number_with(&graph, &opts, PEBBLING_NUMBER_MAX_ORDER),
        "pistar" => pi_star_with(&graph, &opts),
        "gamma" => gamma(&graph),
        "gamma_t" => gamma_t(&graph),
        "gamma_r" => gamma_r(&graph),
        other => match other.strip_prefix("pistar_t:").map(str::parse::<u32>) {
            Some(Ok(t)) => pi_star_t_with(&graph, t, &opts),
            _ => return Err(CliError::Format(format!("unknown invariant {other:?}"))),
        },
    };
    match result {
        Ok(r) => {
            out.line(format!("value {}", r.value));
            out.line(format!("witness {}", r.witness));
            out.line(format!("exhaustive {}", r.exhaustive));
            Ok(0)
        }
        Err(Error::BudgetExceeded { budget, lower_bound }) => {
            out.line(format!("BUDGET-EXCEEDED budget={budget} lower_bound={lower_bound}"));
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e.into()),
    }
}

fn classify(graph: &Path, distinct: bool, check: bool, g: &Global, out: &mut Output) -> CliResult<u8> {
    let graph = read_graph(graph)?;
    let c = classify_with(&graph, distinct)?;
    out.line(format!("predicted {}", c.predicted.name()));
    out.line(format!("certificate {}", Item::Certificate { certificate: c.certificate, distinct }));
    out.line(format!("gamma {}", c.gamma));
    out.line(format!("gamma_t {}", c.gamma_t));
    if !check {
        return Ok(0);
    }
    let pi2 = pi_star_t_with(&graph, 2, &g.enumeration())?.value;
    let agrees = c.predicted.matches(pi2);
    out.line(format!("pi2 {pi2}"));
    out.line(if agrees { "AGREE" } else { "DISAGREEMENT" });
    Ok(if agrees { 0 } else { EXIT_DISAGREEMENT })
}

fn verify(args: &VerifyArgs, g: &Global, out: &mut Output) -> CliResult<u8> {
    if let Some(path) = &args.replay {
        let report = Report::parse(&read(path)?)?;
        let failures = suites::replay(&report);
        for (i, reason) in &failures {
            let r = &report.records[*i];
            out.line(format!("REPLAY-FAIL\t{}\t{}\t{reason}", r.claim_id, r.instance));
        }
        out.line(format!("replayed {} records, {} failures", report.records.len(), failures.len()));
        return Ok(if failures.is_empty() { 0 } else { EXIT_UNSOLVABLE });
    }
    let suite: Suite = args.suite.as_deref().unwrap_or("all").parse().map_err(CliError::Format)?;
    let range = args.range.as_deref().map(parse_range).transpose().map_err(CliError::Format)?;
    let opts = VerifyOptions {
        range,
        seed: g.seed,
        jobs: g.jobs,
        config_budget: g.budget,
        weight_budget: g.max_weight,
        distinct: !args.relaxed,
        timing: !args.no_timing,
        long: args.long,
        trees: args.trees,
    };
    let report = suites::run(suite, &opts)?;
    out.buf.push_str(&report.to_text());
    let summary = report.summary();
    eprintln!("{summary}");
    Ok(if summary.fail > 0 {
        EXIT_UNSOLVABLE
    } else if summary.disagreement > 0 {
        EXIT_DISAGREEMENT
    } else {
        0
    })
}

fn explore_grid(n: usize, m: usize, cap: u32, g: &Global, out: &mut Output) -> CliResult<u8> {
    let graph = build(&FamilySpec::Grid(n, m))?;
    let opts = g.enumeration();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(g.jobs.max(1))
        .build()
        .map_err(|e| CliError::Format(e.to_string()))?;
    let e = pool.install(|| explore(&graph, cap, &opts))?;
    out.line(format!("grid {n}x{m} cap {cap}"));
    out.line(format!("best {}", write_configuration(&e.best).trim_end()));
    out.line(format!("weight {}", e.weight()));
    out.line(format!("bound {}", e.bound));
    if e.examined > 0 {
        out.line(format!("budget hit after {} candidates", e.examined));
    }
    out.line(format!("reference ceil(2n/3) = {}", (2 * graph.order()).div_ceil(3)));
    out.line("profile");
    for b in &e.blocks {
        let sources: Vec<String> = b.sources.iter().map(ToString::to_string).collect();
        out.line(format!(
            "  sources {} pebbles {} covered {} ratio {}",
            sources.join(","),
            b.pebbles,
            b.covered.len(),
            b.covering_ratio()
        ));
    }
    Ok(0)
}
