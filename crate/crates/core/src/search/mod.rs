//! Exhaustive search for Laplacian-cospectral mates among trees.
//!
//! A graph sharing the Laplacian spectrum of a tree has the same number of
//! vertices, edges, components and spanning trees, so it is itself a tree;
//! scanning every free tree of the right order is therefore complete.

mod checkpoint;
mod grid;

use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    build_double_starlike, canonical_form, enumerate_free_trees_capped, enumerate_trees_with_degree_multiset,
    graph6_decode, graph6_encode, level_sequence_to_tree, DoubleStarlikeParams, FreeTrees, Graph,
    DEFAULT_ENUMERATION_CAP,
};
use crate::spectra::{laplacian_charpoly, laplacian_matrix_in, symmetric_eigenvalues, Polynomial};
use crate::IntPolynomial;

pub use checkpoint::{write_atomic, GridCheckpoint, SearchCheckpoint};
pub use grid::{grid_points, run_grid, GridOptions, GridSpec, GridSummary};

/// Largest eigenvalue gap the float pre-filter tolerates before declaring
/// two trees non-cospectral without the exact comparison.
pub const PREFILTER_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Determined,
    NotDetermined,
}

/// Which Laplacian is compared: the trees' own, or that of their
/// complements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumSide {
    Graph,
    Complement,
}

/// Outcome of an exhaustive determined-by-spectrum check. Field order is
/// the JSON key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DlsReport {
    pub target: String,
    pub params: DoubleStarlikeParams,
    pub order: usize,
    pub side: SpectrumSide,
    pub trees_examined: usize,
    pub charpoly: IntPolynomial,
    pub mates: Vec<String>,
    pub verdict: Verdict,
    pub elapsed: f64,
    pub enumeration_complete: bool,
    /// Only trees were scanned, which suffices because vertex, edge,
    /// component and spanning-tree counts are spectral invariants.
    pub trees_only: bool,
}

impl DlsReport {
    /// The report with `elapsed` zeroed, for run-to-run comparisons.
    pub fn without_timing(&self) -> Self {
        DlsReport { elapsed: 0.0, ..self.clone() }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub cap: usize,
    pub prefilter: bool,
    /// Worker threads; `0` uses the global rayon pool.
    pub jobs: usize,
    pub chunk_size: usize,
    /// Stop after examining this many trees in this run (the report then
    /// has `enumeration_complete == false`).
    pub max_trees: Option<usize>,
    /// Checkpoint written atomically after every chunk.
    pub checkpoint: Option<PathBuf>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            prefilter: true,
            jobs: 0,
            chunk_size: 512,
            max_trees: None,
            checkpoint: None,
        }
    }
}

/// Target-side data every candidate is compared against.
struct Target {
    side: SpectrumSide,
    poly: IntPolynomial,
    canon: Vec<u8>,
    spectrum: Vec<f64>,
    sum_sq_degrees: usize,
}

impl Target {
    fn new(t: &Graph, side: SpectrumSide) -> Result<Self> {
        Ok(Target {
            side,
            poly: side_charpoly(t, side),
            canon: canonical_form(t)?,
            spectrum: side_spectrum(t, side),
            sum_sq_degrees: t.degrees().iter().map(|d| d * d).sum(),
        })
    }

    /// `Some(graph6)` when `t` is a non-isomorphic cospectral mate.
    fn mate(&self, t: &Graph, prefilter: bool) -> Result<Option<String>> {
        // the sum of squared degrees is a Laplacian spectral invariant of
        // both a tree and its complement
        if t.degrees().iter().map(|d| d * d).sum::<usize>() != self.sum_sq_degrees {
            return Ok(None);
        }
        if prefilter {
            let s = side_spectrum(t, self.side);
            if s.iter().zip(&self.spectrum).any(|(a, b)| (a - b).abs() > PREFILTER_TOLERANCE) {
                return Ok(None);
            }
        }
        if side_charpoly(t, self.side) != self.poly || canonical_form(t)? == self.canon {
            return Ok(None);
        }
        Ok(Some(graph6_encode(t)))
    }
}

fn side_graph(g: &Graph, side: SpectrumSide) -> std::borrow::Cow<'_, Graph> {
    match side {
        SpectrumSide::Graph => std::borrow::Cow::Borrowed(g),
        SpectrumSide::Complement => std::borrow::Cow::Owned(g.complement()),
    }
}

fn side_charpoly(g: &Graph, side: SpectrumSide) -> Polynomial<BigInt> {
    laplacian_charpoly(&side_graph(g, side))
}

fn side_spectrum(g: &Graph, side: SpectrumSide) -> Vec<f64> {
    symmetric_eigenvalues(&laplacian_matrix_in::<i64>(&side_graph(g, side)).to_real::<f64>())
}

fn with_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Streams the free trees of `target`'s order through the mate test,
/// starting from `resume` when given.
fn scan_free_trees(
    params: DoubleStarlikeParams,
    target_graph: &Graph,
    side: SpectrumSide,
    opts: &SearchOptions,
    resume: Option<SearchCheckpoint>,
) -> Result<(SearchCheckpoint, bool)> {
    let order = target_graph.order();
    let target = Target::new(target_graph, side)?;
    let (mut trees, mut state) = match resume {
        Some(cp) => {
            cp.validate(params, order, side)?;
            let trees = match &cp.last_level_sequence {
                Some(last) => FreeTrees::resume_after(order, opts.cap, last)?,
                None => enumerate_free_trees_capped(order, opts.cap)?,
            };
            (trees, cp)
        }
        None => (enumerate_free_trees_capped(order, opts.cap)?, SearchCheckpoint::new(params, order, side)),
    };
    let started = Instant::now();
    let base_elapsed = state.elapsed;
    let mut budget = opts.max_trees.unwrap_or(usize::MAX);
    loop {
        let take = opts.chunk_size.max(1).min(budget);
        let chunk: Vec<Vec<usize>> = std::iter::from_fn(|| trees.next_level_sequence()).take(take).collect();
        if chunk.is_empty() {
            state.elapsed = base_elapsed + started.elapsed().as_secs_f64();
            if take == 0 {
                return Ok((state, false));
            }
            return Ok((state, true));
        }
        let found: Vec<Option<String>> = with_pool(opts.jobs, || {
            chunk
                .par_iter()
                .map(|levels| target.mate(&level_sequence_to_tree(levels), opts.prefilter))
                .collect::<Result<Vec<_>>>()
        })??;
        state.trees_examined += chunk.len();
        state.mates.extend(found.into_iter().flatten());
        state.last_level_sequence = chunk.last().cloned();
        state.elapsed = base_elapsed + started.elapsed().as_secs_f64();
        budget -= chunk.len();
        if let Some(path) = &opts.checkpoint {
            write_atomic(path, &serde_json::to_vec(&state)?)?;
        }
    }
}

fn report_from(target_graph: &Graph, state: SearchCheckpoint, complete: bool) -> DlsReport {
    let verdict = if complete && state.mates.is_empty() { Verdict::Determined } else { Verdict::NotDetermined };
    DlsReport {
        target: graph6_encode(&side_graph(target_graph, state.side)),
        params: state.params,
        order: state.order,
        side: state.side,
        trees_examined: state.trees_examined,
        charpoly: side_charpoly(target_graph, state.side),
        mates: state.mates,
        verdict,
        elapsed: state.elapsed,
        enumeration_complete: complete,
        trees_only: true,
    }
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderAboveCap { order, cap })
    } else {
        Ok(())
    }
}

/// Scans every free tree on `n + p + q` vertices for a non-isomorphic tree
/// with the same exact Laplacian characteristic polynomial as `H(p, n, q)`.
pub fn verify_dls(params: DoubleStarlikeParams) -> Result<DlsReport> {
    verify_dls_with(params, &SearchOptions::default(), None)
}

pub fn verify_dls_with(
    params: DoubleStarlikeParams,
    opts: &SearchOptions,
    resume: Option<SearchCheckpoint>,
) -> Result<DlsReport> {
    verify_side(params, SpectrumSide::Graph, opts, resume)
}

/// Same scan, comparing the Laplacian spectrum of the complement of
/// `H(p, n, q)` against the complements of all trees of its order.
pub fn verify_complement_dls(params: DoubleStarlikeParams, opts: &SearchOptions) -> Result<DlsReport> {
    verify_side(params, SpectrumSide::Complement, opts, None)
}

fn verify_side(
    params: DoubleStarlikeParams,
    side: SpectrumSide,
    opts: &SearchOptions,
    resume: Option<SearchCheckpoint>,
) -> Result<DlsReport> {
    let params = DoubleStarlikeParams::new(params.p, params.n, params.q)?;
    check_cap(params.order(), opts.cap)?;
    let h = build_double_starlike(params)?;
    let (state, complete) = scan_free_trees(params, &h, side, opts, resume)?;
    Ok(report_from(&h, state, complete))
}

/// Re-checks every mate of a report from scratch: same exact polynomial,
/// different canonical form.
pub fn verify_mates(report: &DlsReport) -> Result<bool> {
    let target = graph6_decode(&report.target)?;
    let target_tree = match report.side {
        SpectrumSide::Graph => target,
        SpectrumSide::Complement => target.complement(),
    };
    let canon = canonical_form(&target_tree)?;
    for m in &report.mates {
        let t = graph6_decode(m)?;
        if side_charpoly(&t, report.side) != report.charpoly || canonical_form(&t)? == canon {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeFamily {
    AllTrees,
    DegreeMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MateSearch {
    pub examined: usize,
    pub mates: Vec<Graph>,
}

/// All trees in `family` that are Laplacian-cospectral with the tree `g`
/// but not isomorphic to it. The degree-multiset family uses the two-hub
/// candidate generator when `g` has exactly two hubs and otherwise filters
/// the free trees by degree multiset.
pub fn search_cospectral_mates(g: &Graph, family: TreeFamily, opts: &SearchOptions) -> Result<MateSearch> {
    if !g.is_tree() {
        return Err(Error::NotATree { vertices: g.order(), edges: g.size() });
    }
    check_cap(g.order(), opts.cap)?;
    let target = Target::new(g, SpectrumSide::Graph)?;
    let degrees = g.degree_multiset();
    let pool: Vec<Graph> = match family {
        TreeFamily::AllTrees => enumerate_free_trees_capped(g.order(), opts.cap)?.collect(),
        TreeFamily::DegreeMultiset => match enumerate_trees_with_degree_multiset(&degrees) {
            Ok(trees) => trees,
            Err(Error::DegreeMultiset(_)) => enumerate_free_trees_capped(g.order(), opts.cap)?
                .filter(|t| t.degree_multiset() == degrees)
                .collect(),
            Err(e) => return Err(e),
        },
    };
    let hits: Vec<Option<String>> = with_pool(opts.jobs, || {
        pool.par_iter().map(|t| target.mate(t, opts.prefilter)).collect::<Result<Vec<_>>>()
    })??;
    let mates = pool
        .iter()
        .zip(hits)
        .filter_map(|(t, hit)| hit.map(|_| t.clone()))
        .collect();
    Ok(MateSearch { examined: pool.len(), mates })
}
