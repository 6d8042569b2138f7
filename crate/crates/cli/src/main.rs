use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laptree::lemmas::{check_graph, check_params, solve_degree_sequences, LemmaReport, BOUND_TOLERANCE};
use laptree::search::{
    run_grid, search_cospectral_mates, verify_dls_with, GridOptions, GridSpec, SearchCheckpoint,
    SearchOptions, TreeFamily,
};
use laptree::spectra::{
    adjacency_charpoly, adjacency_matrix_in, eigen_tolerance, laplacian_charpoly, laplacian_matrix_in,
    symmetric_eigenvalues,
};
use laptree::{build_double_starlike, graph6_decode, graph6_encode, DoubleStarlikeParams, Graph, Verdict};
use serde::Serialize;
use serde_json::json;

mod format;

use format::{round_floats, sig12};

#[derive(Parser)]
#[command(name = "laptree", version, about = "Laplacian spectra of trees and double starlike trees")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest tree order the enumerator will visit.
    #[arg(long, global = true, env = "LAPTREE_CAP", default_value_t = laptree::DEFAULT_ENUMERATION_CAP,
          value_parser = positive_usize)]
    order_cap: usize,
    /// Absolute tolerance for floating-point lemma checks.
    #[arg(long, global = true, default_value_t = BOUND_TOLERANCE, value_parser = positive_f64)]
    tol: f64,
    /// Search worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixArg {
    Laplacian,
    Adjacency,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    AllTrees,
    DegreeMultiset,
}

#[derive(Args)]
struct ParamArgs {
    p: usize,
    n: usize,
    q: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<DoubleStarlikeParams, String> {
        DoubleStarlikeParams::new(self.p, self.n, self.q).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 encoding of H(p, n, q).
    Build(ParamArgs),
    /// Eigenvalues (and optionally the exact characteristic polynomial) of
    /// graphs given in graph6, on the command line or one per stdin line.
    Spectrum {
        graphs: Vec<String>,
        #[arg(long, value_enum, default_value_t = MatrixArg::Laplacian)]
        matrix: MatrixArg,
        #[arg(long)]
        exact: bool,
    },
    /// Run every applicable lemma check on H(p, n, q) or on graph6 input.
    CheckLemmas {
        #[arg(num_args = 3, value_names = ["P", "N", "Q"], conflicts_with = "graph6")]
        params: Vec<usize>,
        #[arg(long)]
        graph6: Option<String>,
    },
    /// Solve the degree-count constraints for trees cospectral with H(p, n, q).
    Degseq(ParamArgs),
    /// Exhaustively search all trees of the order of H(p, n, q) for a
    /// Laplacian-cospectral mate.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Resume from and keep updating this checkpoint.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Skip the float spectrum pre-filter.
        #[arg(long)]
        no_prefilter: bool,
        #[arg(long, hide = true)]
        max_trees: Option<usize>,
    },
    /// Cospectral mates of a tree among all trees or among trees with the
    /// same degree multiset.
    Mates {
        graph6: Option<String>,
        #[arg(long, value_enum, default_value_t = FamilyArg::AllTrees)]
        family: FamilyArg,
    },
    /// Verify every H(p, n, q) with n >= 2, p >= q >= 1 and order within
    /// --order-cap, appending JSON lines to --out.
    Grid {
        #[arg(long)]
        pmax: Option<usize>,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value = "grid.jsonl")]
        out: PathBuf,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, hide = true)]
        max_reports: Option<usize>,
        #[arg(long, hide = true)]
        max_trees: Option<usize>,
    },
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(x) if x >= 1 => Ok(x),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check or verdict came out negative: exit 1.
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("laptree: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Build(args) => build(cfg, &mut out, args),
        Command::Spectrum { graphs, matrix, exact } => {
            for g in inputs(graphs)? {
                spectrum(cfg, &mut out, &g, *matrix, *exact)?;
            }
            Ok(())
        }
        Command::CheckLemmas { params, graph6 } => check_lemmas(cfg, &mut out, params, graph6.as_deref()),
        Command::Degseq(args) => degseq(cfg, &mut out, args),
        Command::Verify { params, checkpoint, no_prefilter, max_trees } => {
            let opts = SearchOptions {
                cap: cfg.order_cap,
                prefilter: !no_prefilter,
                jobs: cfg.jobs,
                max_trees: *max_trees,
                checkpoint: checkpoint.clone(),
                ..SearchOptions::default()
            };
            verify(cfg, &mut out, params, opts)
        }
        Command::Mates { graph6, family } => {
            let graphs = inputs(graph6.as_slice())?;
            for g in graphs {
                mates(cfg, &mut out, &g, *family)?;
            }
            Ok(())
        }
        Command::Grid { pmax, qmax, nmax, out: path, checkpoint, max_reports, max_trees } => {
            let cap = cfg.order_cap;
            let spec = GridSpec {
                pmax: pmax.unwrap_or(cap),
                qmax: qmax.unwrap_or(cap),
                nmax: nmax.unwrap_or(cap),
                order_cap: cap,
            };
            let opts = GridOptions {
                search: SearchOptions { cap, jobs: cfg.jobs, max_trees: *max_trees, ..SearchOptions::default() },
                max_reports: *max_reports,
            };
            grid(cfg, &mut out, &spec, &opts, path, checkpoint.as_deref())
        }
    }
}

/// graph6 strings from argv, or one per non-empty stdin line when argv has none.
fn inputs(args: &[String]) -> Result<Vec<Graph>, Failure> {
    let lines: Vec<String> = if args.is_empty() {
        io::stdin().lock().lines().collect::<Result<_, _>>()?
    } else {
        args.to_vec()
    };
    let graphs: Vec<Graph> = lines
        .iter()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty())
        .map(|l| graph6_decode(l).map_err(|e| Failure::Usage(format!("{l:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Failure::Usage("no graph6 input".into()));
    }
    Ok(graphs)
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> Outcome {
    let mut v = serde_json::to_value(value)?;
    round_floats(&mut v);
    writeln!(out, "{v}")?;
    Ok(())
}

fn build(cfg: &Config, out: &mut impl Write, args: &ParamArgs) -> Outcome {
    let params = args.params()?;
    let g = build_double_starlike(params)?;
    match cfg.format {
        Format::Text => writeln!(out, "{}", graph6_encode(&g))?,
        Format::Json => emit_json(
            out,
            &json!({
                "params": params,
                "order": g.order(),
                "graph6": graph6_encode(&g),
                "edges": g.edges(),
            }),
        )?,
    }
    Ok(())
}

fn spectrum(cfg: &Config, out: &mut impl Write, g: &Graph, matrix: MatrixArg, exact: bool) -> Outcome {
    let m = match matrix {
        MatrixArg::Laplacian => laplacian_matrix_in::<i64>(g),
        MatrixArg::Adjacency => adjacency_matrix_in::<i64>(g),
    };
    let tol = eigen_tolerance(m.dim(), m.max_abs_entry() as f64);
    let eig: Vec<String> = symmetric_eigenvalues(&m.to_real::<f64>())
        .into_iter()
        .map(|x| sig12(if x.abs() <= tol { 0.0 } else { x }))
        .collect();
    let poly = exact.then(|| match matrix {
        MatrixArg::Laplacian => laplacian_charpoly(g),
        MatrixArg::Adjacency => adjacency_charpoly(g),
    });
    let kind = match matrix {
        MatrixArg::Laplacian => "laplacian",
        MatrixArg::Adjacency => "adjacency",
    };
    match cfg.format {
        Format::Text => {
            writeln!(out, "{}", eig.join(" "))?;
            if let Some(p) = &poly {
                let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                writeln!(out, "charpoly: [{}]", coeffs.join(", "))?;
            }
        }
        Format::Json => {
            let values: Vec<f64> = eig.iter().map(|s| s.parse().unwrap_or(f64::NAN)).collect();
            emit_json(
                out,
                &json!({
                    "graph6": graph6_encode(g),
                    "matrix": kind,
                    "eigenvalues": values,
                    "charpoly": poly,
                }),
            )?;
        }
    }
    Ok(())
}

fn print_lemma_report(cfg: &Config, out: &mut impl Write, r: &LemmaReport) -> Outcome {
    match cfg.format {
        Format::Json => emit_json(out, r)?,
        Format::Text => {
            writeln!(out, "{}", r.target)?;
            for c in &r.checks {
                let status = match (c.applicable, c.passed) {
                    (false, _) => "n/a ",
                    (true, true) => "PASS",
                    (true, false) => "FAIL",
                };
                writeln!(out, "  {status}  {}", c.lemma_id)?;
            }
            writeln!(out, "{}", if r.all_passed { "all checks passed" } else { "some checks FAILED" })?;
        }
    }
    Ok(())
}

fn check_lemmas(cfg: &Config, out: &mut impl Write, params: &[usize], graph6: Option<&str>) -> Outcome {
    let reports = if let [p, n, q] = params {
        vec![check_params(DoubleStarlikeParams::new(*p, *n, *q)?)?]
    } else {
        let args: Vec<String> = graph6.map(str::to_owned).into_iter().collect();
        inputs(&args)?.iter().map(check_graph).collect::<Result<Vec<_>, _>>()?
    };
    let mut all = true;
    for r in reports {
        let r = r.with_tolerance(cfg.tol);
        all &= r.all_passed;
        print_lemma_report(cfg, out, &r)?;
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn degseq(cfg: &Config, out: &mut impl Write, args: &ParamArgs) -> Outcome {
    let params = args.params()?;
    let sols = solve_degree_sequences(params)?;
    match cfg.format {
        Format::Json => emit_json(out, &json!({ "params": params, "solutions": sols }))?,
        Format::Text => {
            writeln!(out, "{params}: {} solution(s)", sols.len())?;
            for s in &sols {
                let parts: Vec<String> = (1..=s.max_degree)
                    .rev()
                    .filter(|&d| s.count(d) > 0)
                    .map(|d| format!("{d}^{}", s.count(d)))
                    .collect();
                writeln!(out, "  {}", parts.join(" "))?;
            }
        }
    }
    Ok(())
}

fn verify(cfg: &Config, out: &mut impl Write, args: &ParamArgs, opts: SearchOptions) -> Outcome {
    let params = args.params()?;
    let resume = match &opts.checkpoint {
        Some(path) if path.exists() => Some(SearchCheckpoint::load(path)?),
        _ => None,
    };
    let report = verify_dls_with(params, &opts, resume)?;
    match cfg.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => writeln!(
            out,
            "{params}: {} ({} trees of order {}, {} mates{}, {}s)",
            match report.verdict {
                Verdict::Determined => "determined",
                Verdict::NotDetermined => "not determined",
            },
            report.trees_examined,
            report.order,
            report.mates.len(),
            if report.enumeration_complete { "" } else { ", enumeration incomplete" },
            sig12(report.elapsed),
        )?,
    }
    if report.verdict == Verdict::Determined {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn mates(cfg: &Config, out: &mut impl Write, g: &Graph, family: FamilyArg) -> Outcome {
    let family = match family {
        FamilyArg::AllTrees => TreeFamily::AllTrees,
        FamilyArg::DegreeMultiset => TreeFamily::DegreeMultiset,
    };
    let opts = SearchOptions { cap: cfg.order_cap, jobs: cfg.jobs, ..SearchOptions::default() };
    let found = search_cospectral_mates(g, family, &opts)?;
    let mates: Vec<String> = found.mates.iter().map(graph6_encode).collect();
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({ "target": graph6_encode(g), "family": family, "examined": found.examined, "mates": mates }),
        )?,
        Format::Text => {
            writeln!(out, "{}: {} trees examined, {} mates", graph6_encode(g), found.examined, mates.len())?;
            for m in &mates {
                writeln!(out, "  {m}")?;
            }
        }
    }
    Ok(())
}

fn grid(
    cfg: &Config,
    out: &mut impl Write,
    spec: &GridSpec,
    opts: &GridOptions,
    path: &std::path::Path,
    checkpoint: Option<&std::path::Path>,
) -> Outcome {
    let summary = run_grid(spec, opts, path, checkpoint, |_| {})?;
    match cfg.format {
        Format::Json => emit_json(out, &summary)?,
        Format::Text => {
            writeln!(
                out,
                "{} of {} grid points done ({} resumed), {} determined{}",
                summary.completed,
                summary.points,
                summary.resumed_from,
                summary.determined,
                if summary.interrupted { ", stopped early" } else { "" },
            )?;
            for p in &summary.not_determined {
                writeln!(out, "  not determined: {p}")?;
            }
            for e in &summary.errors {
                writeln!(out, "  error: {e}")?;
            }
        }
    }
    if summary.not_determined.is_empty() && summary.errors.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
