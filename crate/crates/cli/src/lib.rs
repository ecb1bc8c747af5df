//! Argument handling and subcommands for the `dicut` binary.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dicut_core::analysis::{self, CertificationReport};
use dicut_core::oracle::{self, DEFAULT_VERTEX_LIMIT};
use dicut_core::rounding::{self, DriveConfig, DriveOutcome, RoundingParams};
use dicut_core::sdp::{self, SdpInstance};
use dicut_core::{DirectedGraph, Error, SolverConfig, VectorSolution};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_CERTIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dicut", version, about = "Undirected cuts at least as large as the best directed cut")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Seed for solver restarts, hyperplanes and sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Tolerance: constraint feasibility for `solve`/`bench`, certification slack for `verify`.
    #[arg(long, visible_alias = "eps", global = true, allow_hyphen_values = true)]
    pub tol: Option<f64>,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the relaxation, round it and report the cut.
    Solve(SolveArgs),
    /// Exact Max-DiCut and Max-Cut values by enumeration.
    Oracle(OracleArgs),
    /// Round a dumped vector solution.
    Round(RoundArgs),
    /// Grid or sampling certificate for one of the analytic inequalities.
    Verify(VerifyArgs),
    /// Print `z,F` rows of F(x, y, z) for fixed x and y.
    #[command(name = "plot-F")]
    PlotF(PlotArgs),
    /// Run the pipeline on every `*.txt` graph in a directory and print a CSV table.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Edge-list graph file.
    pub graph: PathBuf,

    /// Solver restarts.
    #[arg(long, default_value_t = 5)]
    pub restarts: usize,

    /// Rounding budget (default: 64 rounds per threshold candidate).
    #[arg(long)]
    pub budget: Option<usize>,

    /// Skip the oracle comparison above this many vertices.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub vertex_limit: usize,

    /// Write the vector solution here.
    #[arg(long)]
    pub dump_vectors: Option<PathBuf>,

    /// Write the rounding transcript here.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub graph: PathBuf,

    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub vertex_limit: usize,
}

#[derive(Debug, Args)]
pub struct RoundArgs {
    pub graph: PathBuf,

    /// Vector dump written by `solve --dump-vectors`.
    pub vectors: PathBuf,

    /// Round once with this threshold and the `--seed` hyperplane instead of driving.
    #[arg(long)]
    pub a: Option<f64>,

    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    /// F(x, y, z) >= 0 on the reduced domain.
    #[value(name = "F")]
    F,
    /// G(x, y) >= 0 where F has a local minimum.
    #[value(name = "G")]
    G,
    /// The per-edge bound including the y = 1 edge.
    #[value(name = "bound")]
    Bound,
    /// Substitution identities at the stationary point.
    #[value(name = "subst")]
    Subst,
    /// Closed-form separation probability against the per-edge term.
    #[value(name = "config")]
    Config,
    /// Monte Carlo separation frequency of the rounding code.
    #[value(name = "config-mc")]
    ConfigMc,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub lemma: Lemma,

    /// Grid step for the lattice scans.
    #[arg(long, default_value_t = 0.005)]
    pub step: f64,

    /// Samples for `subst`, rounding samples per triple for `config-mc`.
    #[arg(long)]
    pub samples: Option<usize>,

    /// Triples for `config-mc`.
    #[arg(long, default_value_t = 100)]
    pub triples: usize,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub y: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub lo: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub hi: f64,
    #[arg(long, default_value_t = 0.005)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub dir: PathBuf,

    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub vertex_limit: usize,
}

const DEFAULT_CERT_TOL: f64 = 1e-9;

/// Parses `argv` (including the program name), runs the subcommand and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if let Some(threads) = cli.global.threads {
        // A second call within one process (tests) finds the pool already built.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } => EXIT_INFEASIBLE,
        _ => EXIT_INPUT,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> dicut_core::Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Solve(a) => solve(g, a, out, err),
        Command::Oracle(a) => oracle_cmd(g, a, out),
        Command::Round(a) => round_cmd(g, a, out, err),
        Command::Verify(a) => verify(g, a, out),
        Command::PlotF(a) => plot(a, out, err),
        Command::Bench(a) => bench(g, a, out, err),
    }
}

fn read_graph(path: &Path) -> dicut_core::Result<DirectedGraph> {
    DirectedGraph::parse(&fs::read_to_string(path)?)
}

fn solver_config(g: &GlobalOpts, restarts: usize) -> SolverConfig {
    let mut cfg = SolverConfig::with_seed(g.seed);
    cfg.restarts = restarts;
    if let Some(tol) = g.tol {
        cfg.feas_tol = tol;
    }
    cfg
}

struct Pipeline {
    inst: SdpInstance,
    solution: VectorSolution,
    drive: DriveOutcome,
}

fn pipeline(
    graph: &DirectedGraph,
    cfg: &SolverConfig,
    seed: u64,
    budget: Option<usize>,
) -> dicut_core::Result<Pipeline> {
    let inst = sdp::build_relaxation(graph)?;
    let solution = sdp::solve_relaxation(&inst, cfg)?;
    let drive = rounding::deterministic_drive(
        graph,
        &solution,
        &DriveConfig {
            budget,
            seed,
            ..DriveConfig::default()
        },
    )?;
    Ok(Pipeline {
        inst,
        solution,
        drive,
    })
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e)
}

fn solve(g: &GlobalOpts, a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> dicut_core::Result<i32> {
    let graph = read_graph(&a.graph)?;
    let cfg = solver_config(g, a.restarts);
    let p = pipeline(&graph, &cfg, g.seed, a.budget)?;
    if let Some(path) = &a.dump_vectors {
        fs::write(path, p.solution.to_text())?;
    }
    if let Some(path) = &a.transcript {
        fs::write(path, p.drive.transcript.to_text())?;
    }
    let exact = if graph.n() <= a.vertex_limit {
        Some(oracle::exact_dicut(&graph, a.vertex_limit)?)
    } else {
        None
    };
    let cut = p.drive.cut();
    let feas = sdp::check_feasibility(&p.inst, &p.solution, cfg.feas_tol)?;

    let mut s = String::new();
    match g.format {
        Format::Text => {
            let _ = writeln!(s, "vertices: {}", graph.n());
            let _ = writeln!(s, "edges: {}", graph.num_edges());
            let _ = writeln!(s, "sdp objective: {:.9}", p.solution.achieved_objective);
            let _ = writeln!(s, "worst violation: {:.3e}", feas.worst_violation);
            let _ = writeln!(s, "assignment: {}", p.drive.assignment());
            let _ = writeln!(s, "cut: {} ({:.9})", cut, cut.as_f64());
            let _ = writeln!(
                s,
                "rounds: {} of {} (target {}/{})",
                p.drive.rounds_used, p.drive.budget, p.drive.target_numerator, cut.edges
            );
            match &exact {
                Some(e) => {
                    let verdict = if cut >= e.value { "cut >= dicut" } else { "cut < dicut" };
                    let _ = writeln!(s, "oracle dicut: {} ({verdict})", e.value);
                }
                None => {
                    let _ = writeln!(s, "oracle dicut: skipped (n > {})", a.vertex_limit);
                }
            }
        }
        Format::Csv => {
            let _ = writeln!(s, "n,m,sdp,cut_numerator,edges,rounds,oracle_numerator");
            let _ = writeln!(
                s,
                "{},{},{:.9},{},{},{},{}",
                graph.n(),
                graph.num_edges(),
                p.solution.achieved_objective,
                cut.numerator,
                cut.edges,
                p.drive.rounds_used,
                exact.map(|e| e.value.numerator.to_string()).unwrap_or_default()
            );
        }
    }
    out.write_all(s.as_bytes()).map_err(io)?;
    if p.drive.shortfall {
        let _ = writeln!(err, "warning: rounding budget exhausted below the relaxation value");
        return Ok(EXIT_INFEASIBLE);
    }
    Ok(EXIT_OK)
}

fn oracle_cmd(g: &GlobalOpts, a: &OracleArgs, out: &mut dyn Write) -> dicut_core::Result<i32> {
    let graph = read_graph(&a.graph)?;
    let di = oracle::exact_dicut(&graph, a.vertex_limit)?;
    let un = oracle::exact_cut(&graph, a.vertex_limit)?;
    let s = match g.format {
        Format::Text => format!(
            "dicut: {} ({:.9})\ndicut witness: {}\ncut: {} ({:.9})\ncut witness: {}\n",
            di.value,
            di.value.as_f64(),
            di.witness,
            un.value,
            un.value.as_f64(),
            un.witness
        ),
        Format::Csv => format!(
            "dicut_numerator,cut_numerator,edges\n{},{},{}\n",
            di.value.numerator,
            un.value.numerator,
            graph.num_edges()
        ),
    };
    out.write_all(s.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn round_cmd(g: &GlobalOpts, a: &RoundArgs, out: &mut dyn Write, err: &mut dyn Write) -> dicut_core::Result<i32> {
    let graph = read_graph(&a.graph)?;
    let inst = sdp::build_relaxation(&graph)?;
    let mut sol = VectorSolution::parse(&inst, &fs::read_to_string(&a.vectors)?)?;
    sol.achieved_objective = sdp::sdp_objective(&inst, &sol)?;

    if let Some(threshold) = a.a {
        let t = rounding::randomized_round(&graph, &sol, RoundingParams::new(threshold, g.seed)?)?;
        out.write_all(t.to_text().as_bytes()).map_err(io)?;
        return Ok(EXIT_OK);
    }
    let drive = rounding::deterministic_drive(
        &graph,
        &sol,
        &DriveConfig {
            budget: a.budget,
            seed: g.seed,
            ..DriveConfig::default()
        },
    )?;
    out.write_all(drive.transcript.to_text().as_bytes()).map_err(io)?;
    if drive.shortfall {
        let _ = writeln!(err, "warning: rounding budget exhausted below the relaxation value");
        return Ok(EXIT_INFEASIBLE);
    }
    Ok(EXIT_OK)
}

fn verify(g: &GlobalOpts, a: &VerifyArgs, out: &mut dyn Write) -> dicut_core::Result<i32> {
    let tol = g.tol.unwrap_or(DEFAULT_CERT_TOL);
    let report = match a.lemma {
        Lemma::F => analysis::certify_f_nonneg(a.step, tol)?,
        Lemma::G => analysis::certify_g_nonneg(a.step, tol)?,
        Lemma::Bound => analysis::certify_bound(a.step, tol)?,
        Lemma::Config => analysis::certify_configuration(a.step, tol)?,
        Lemma::Subst => analysis::certify_substitutions(a.samples.unwrap_or(10_000), g.seed),
        Lemma::ConfigMc => {
            let mc = analysis::monte_carlo_configuration(a.triples, a.samples.unwrap_or(100_000), g.seed)?;
            let s = match g.format {
                Format::Csv => mc.to_text(),
                Format::Text => format!(
                    "Monte Carlo separation over {} triples x {} samples (seed {}): {}\n",
                    mc.triples.len(),
                    mc.samples,
                    mc.seed,
                    if mc.passed() { "PASS" } else { "FAIL" }
                ),
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if mc.passed() { EXIT_OK } else { EXIT_CERTIFICATION });
        }
    };
    write_report(g.format, &report, out)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_CERTIFICATION })
}

fn write_report(format: Format, r: &CertificationReport, out: &mut dyn Write) -> dicut_core::Result<()> {
    let s = match format {
        Format::Text => format!("{}\n", r.to_text()),
        Format::Csv => format!("{}\n{}\n", CertificationReport::CSV_HEADER, r.witness_csv_row()),
    };
    out.write_all(s.as_bytes()).map_err(io)
}

fn plot(a: &PlotArgs, out: &mut dyn Write, err: &mut dyn Write) -> dicut_core::Result<i32> {
    let curve = analysis::emit_f_curve(a.x, a.y, a.lo, a.hi, a.step)?;
    out.write_all(curve.to_csv().as_bytes()).map_err(io)?;
    if curve.omitted > 0 {
        let _ = writeln!(err, "omitted {} rows outside the valid z-range", curve.omitted);
    }
    Ok(EXIT_OK)
}

fn bench(g: &GlobalOpts, a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> dicut_core::Result<i32> {
    let mut files: Vec<PathBuf> = fs::read_dir(&a.dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.extension().is_some_and(|e| e == "txt"));
    files.sort();

    let cfg = solver_config(g, 5);
    let mut code = EXIT_OK;
    writeln!(out, "graph,n,m,oracle_dicut,sdp,cut,rounds,wall_ms").map_err(io)?;
    for path in &files {
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let started = Instant::now();
        let graph = read_graph(path)?;
        let p = match pipeline(&graph, &cfg, g.seed, None) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(err, "{name}: {e}");
                code = code.max(exit_code(&e));
                continue;
            }
        };
        let exact = if graph.n() <= a.vertex_limit {
            oracle::exact_dicut(&graph, a.vertex_limit)?.value.to_string()
        } else {
            String::new()
        };
        if p.drive.shortfall {
            let _ = writeln!(err, "{name}: rounding budget exhausted");
            code = code.max(EXIT_INFEASIBLE);
        }
        writeln!(
            out,
            "{name},{},{},{exact},{:.9},{},{},{:.3}",
            graph.n(),
            graph.num_edges(),
            p.solution.achieved_objective,
            p.drive.cut(),
            p.drive.rounds_used,
            started.elapsed().as_secs_f64() * 1e3
        )
        .map_err(io)?;
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("dicut").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_capture(&["verify", "--lemma", "H"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("invalid value"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["plot-F", "--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("--lo"));
    }

    #[test]
    fn missing_file_exits_one() {
        let (code, _, err) = run_capture(&["oracle", "/nonexistent/graph.txt"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn certification_csv() {
        let (code, out, _) = run_capture(&["verify", "--lemma", "G", "--step", "0.05", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("x,y,z,margin\n"));
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn failing_tolerance_exits_three() {
        // The configuration margin touches 0 up to rounding; a negative slack fails it.
        let (code, out, _) = run_capture(&["verify", "--lemma", "config", "--step", "0.1", "--tol", "-1e-3"]);
        assert_eq!(code, EXIT_CERTIFICATION, "{out}");
        assert!(out.contains("FAIL"));
    }
}
