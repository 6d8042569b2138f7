use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{verify_dls_with, write_atomic, DlsReport, GridCheckpoint, SearchCheckpoint, SearchOptions, Verdict};
use crate::error::{Error, Result};
use crate::graph::DoubleStarlikeParams;

/// Bounds of a parameter sweep over `n >= 2`, `p >= q >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub pmax: usize,
    pub qmax: usize,
    pub nmax: usize,
    pub order_cap: usize,
}

impl GridSpec {
    /// Every parameter triple whose order fits under `order_cap`.
    pub fn up_to_order(order_cap: usize) -> Self {
        GridSpec { pmax: order_cap, qmax: order_cap, nmax: order_cap, order_cap }
    }
}

/// Grid points ordered by graph order, then `p`, `q`, `n`.
pub fn grid_points(spec: &GridSpec) -> Vec<DoubleStarlikeParams> {
    let mut pts = Vec::new();
    for p in 1..=spec.pmax {
        for q in 1..=p.min(spec.qmax) {
            for n in 2..=spec.nmax {
                if n + p + q <= spec.order_cap {
                    pts.push(DoubleStarlikeParams { p, n, q });
                }
            }
        }
    }
    pts.sort_by_key(|t| (t.order(), t.p, t.q, t.n));
    pts
}

#[derive(Clone, Debug, Default)]
pub struct GridOptions {
    pub search: SearchOptions,
    /// Stop after writing this many reports in this run.
    pub max_reports: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GridSummary {
    pub points: usize,
    pub completed: usize,
    pub resumed_from: usize,
    pub determined: usize,
    pub not_determined: Vec<String>,
    /// Per-record failures; the grid carries on past them.
    pub errors: Vec<String>,
    pub interrupted: bool,
}

/// Reads the complete, parseable report lines of a results file and cuts
/// the file back to them, discarding a partial trailing line.
fn recover_results(path: &Path, points: &[DoubleStarlikeParams]) -> Result<Vec<DlsReport>> {
    let Ok(text) = fs::read_to_string(path) else {
        return Ok(Vec::new());
    };
    let mut reports = Vec::new();
    let mut keep = 0;
    for line in text.split_inclusive('\n') {
        if !line.ends_with('\n') {
            break;
        }
        let Ok(r) = serde_json::from_str::<DlsReport>(line.trim_end()) else {
            break;
        };
        if !points.contains(&r.params) {
            return Err(Error::Checkpoint(format!("results file entry {} ({}) is not a point of this grid", reports.len() + 1, r.params)));
        }
        keep += line.len();
        reports.push(r);
    }
    if keep < text.len() {
        OpenOptions::new().write(true).open(path)?.set_len(keep as u64)?;
    }
    Ok(reports)
}

/// Runs `verify_dls` over every grid point, appending one JSON report per
/// line to `results`. With a checkpoint path the run can be interrupted and
/// restarted: completed lines are kept and a scan in flight resumes from its
/// last level sequence.
pub fn run_grid(
    spec: &GridSpec,
    opts: &GridOptions,
    results: &Path,
    checkpoint: Option<&Path>,
    mut on_report: impl FnMut(&DlsReport),
) -> Result<GridSummary> {
    let points = grid_points(spec);
    let done = recover_results(results, &points)?;
    let mut summary = GridSummary { points: points.len(), resumed_from: done.len(), ..GridSummary::default() };
    for r in &done {
        tally(&mut summary, r);
    }
    let scan_path: Option<PathBuf> = checkpoint.map(|p| {
        let mut s = p.as_os_str().to_owned();
        s.push(".scan");
        PathBuf::from(s)
    });
    // the per-chunk scan file is newer than the grid checkpoint after a hard kill
    let todo: Vec<DoubleStarlikeParams> =
        points.iter().copied().filter(|pt| !done.iter().any(|r| r.params == *pt)).collect();
    let next = todo.first();
    let from_scan = scan_path.as_deref().and_then(|s| SearchCheckpoint::load(s).ok());
    let from_grid = match checkpoint {
        Some(cp) if cp.exists() => serde_json::from_slice::<GridCheckpoint>(&fs::read(cp)?)?.current,
        _ => None,
    };
    let mut pending = from_scan.filter(|c| Some(&c.params) == next).or(from_grid.filter(|c| Some(&c.params) == next));
    let mut out = OpenOptions::new().create(true).append(true).open(results)?;
    let mut written = 0;
    for &params in &todo {
        if opts.max_reports.is_some_and(|m| written >= m) {
            summary.interrupted = true;
            break;
        }
        let search = SearchOptions { checkpoint: scan_path.clone(), ..opts.search.clone() };
        let resume: Option<SearchCheckpoint> = pending.take();
        let report = match verify_dls_with(params, &search, resume) {
            Ok(r) => r,
            Err(e) => {
                summary.errors.push(format!("{params}: {e}"));
                continue;
            }
        };
        if !report.enumeration_complete {
            if let (Some(cp), Some(scan)) = (checkpoint, &scan_path) {
                let current = SearchCheckpoint::load(scan).ok();
                save(cp, summary.resumed_from + written, current)?;
            }
            summary.interrupted = true;
            break;
        }
        let mut line = serde_json::to_string(&report)?;
        line.push('\n');
        if let Err(e) = out.write_all(line.as_bytes()).and_then(|_| out.flush()) {
            summary.errors.push(format!("{params}: writing results: {e}"));
            continue;
        }
        written += 1;
        if let Some(cp) = checkpoint {
            if let Err(e) = save(cp, summary.resumed_from + written, None) {
                summary.errors.push(format!("{params}: writing checkpoint: {e}"));
            }
        }
        tally(&mut summary, &report);
        on_report(&report);
    }
    if let Some(scan) = &scan_path {
        let _ = fs::remove_file(scan);
    }
    Ok(summary)
}

fn save(path: &Path, completed: usize, current: Option<SearchCheckpoint>) -> Result<()> {
    write_atomic(path, &serde_json::to_vec_pretty(&GridCheckpoint { completed, current })?)
}

fn tally(summary: &mut GridSummary, r: &DlsReport) {
    summary.completed += 1;
    match r.verdict {
        Verdict::Determined => summary.determined += 1,
        Verdict::NotDetermined => summary.not_determined.push(r.params.to_string()),
    }
}
