mod common;

use std::collections::HashSet;
use std::fs;

use laptree::search::*;
use laptree::spectra::laplacian_charpoly;
use laptree::{canonical_form, enumerate_free_trees, graph6_decode, DoubleStarlikeParams, Graph, Verdict};

fn params(p: usize, n: usize, q: usize) -> DoubleStarlikeParams {
    DoubleStarlikeParams::new(p, n, q).unwrap()
}

fn canon_set(gs: &[Graph]) -> HashSet<Vec<u8>> {
    gs.iter().map(|g| canonical_form(g).unwrap()).collect()
}

#[test]
fn examples_from_the_family() {
    let r = verify_dls(params(3, 4, 2)).unwrap();
    assert_eq!((r.verdict, r.trees_examined, r.mates.len()), (Verdict::Determined, 47, 0));
    let r = verify_dls(params(1, 2, 1)).unwrap();
    assert_eq!(r.verdict, Verdict::Determined);
    let r = verify_dls(params(4, 4, 3)).unwrap();
    assert_eq!((r.verdict, r.trees_examined), (Verdict::Determined, 235));
    assert!(r.trees_only && r.enumeration_complete);
    assert_eq!(r.charpoly, laplacian_charpoly(&graph6_decode(&r.target).unwrap()));
}

#[test]
fn trees_examined_is_the_free_tree_count() {
    for (p, n, q) in [(1, 2, 1), (2, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 3)] {
        let pr = params(p, n, q);
        let r = verify_dls(pr).unwrap();
        assert_eq!(r.trees_examined, enumerate_free_trees(pr.order()).unwrap().count());
    }
}

#[test]
fn finds_known_cospectral_pair_at_order_eleven() {
    // a Laplacian-cospectral pair of trees on 11 vertices
    let a = graph6_decode("JpCQ?C@?_?_").unwrap();
    let b = graph6_decode("JpCa?C@?GC?").unwrap();
    assert!(a.is_tree() && b.is_tree());
    assert_eq!(laplacian_charpoly(&a), laplacian_charpoly(&b));
    assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    for prefilter in [true, false] {
        let opts = SearchOptions { prefilter, ..SearchOptions::default() };
        let found = search_cospectral_mates(&a, TreeFamily::AllTrees, &opts).unwrap();
        assert_eq!(found.examined, 235);
        assert!(canon_set(&found.mates).contains(&canonical_form(&b).unwrap()));
        for m in &found.mates {
            assert_eq!(laplacian_charpoly(m), laplacian_charpoly(&a));
        }
    }
}

#[test]
fn prefilter_never_changes_mates() {
    for order in 2..=11 {
        for t in enumerate_free_trees(order).unwrap() {
            let with = search_cospectral_mates(&t, TreeFamily::AllTrees, &SearchOptions::default()).unwrap();
            let without = search_cospectral_mates(
                &t,
                TreeFamily::AllTrees,
                &SearchOptions { prefilter: false, ..SearchOptions::default() },
            )
            .unwrap();
            assert_eq!(with, without);
            if order <= 10 {
                assert!(with.mates.is_empty());
            }
        }
    }
}

#[test]
fn degree_family_restricts_the_pool() {
    let h = laptree::build_double_starlike(params(3, 5, 2)).unwrap();
    let found = search_cospectral_mates(&h, TreeFamily::DegreeMultiset, &SearchOptions::default()).unwrap();
    let pool = laptree::enumerate_trees_with_degree_multiset(&[4, 3, 2, 2, 2, 1, 1, 1, 1, 1]).unwrap();
    assert_eq!(found.examined, pool.len());
    assert!(found.mates.is_empty());
    // a single-hub tree falls back to filtering all trees
    let star = Graph::star(5);
    let found = search_cospectral_mates(&star, TreeFamily::DegreeMultiset, &SearchOptions::default()).unwrap();
    assert_eq!(found.examined, 1);
}

#[test]
fn cap_is_an_error() {
    let opts = SearchOptions { cap: 10, ..SearchOptions::default() };
    assert!(verify_dls_with(params(4, 4, 3), &opts, None).is_err());
    assert!(search_cospectral_mates(&Graph::path(12), TreeFamily::AllTrees, &opts).is_err());
}

#[test]
fn reports_agree_across_thread_counts() {
    let pr = params(4, 5, 3);
    let base = verify_dls_with(pr, &SearchOptions { jobs: 1, ..SearchOptions::default() }, None).unwrap();
    for (jobs, chunk) in [(2, 7), (3, 64), (0, 1000)] {
        let opts = SearchOptions { jobs, chunk_size: chunk, ..SearchOptions::default() };
        let r = verify_dls_with(pr, &opts, None).unwrap();
        assert_eq!(r.without_timing(), base.without_timing());
    }
    let a = search_cospectral_mates(&graph6_decode("JpCQ?C@?_?_").unwrap(), TreeFamily::AllTrees, &SearchOptions { jobs: 1, ..SearchOptions::default() }).unwrap();
    let b = search_cospectral_mates(&graph6_decode("JpCQ?C@?_?_").unwrap(), TreeFamily::AllTrees, &SearchOptions { jobs: 3, ..SearchOptions::default() }).unwrap();
    assert_eq!(a, b);
}

#[test]
fn resumed_scan_matches_uninterrupted() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("scan.json");
    let pr = params(4, 5, 3);
    let full = verify_dls(pr).unwrap();
    for stop in [1, 50, 311, 550] {
        let _ = fs::remove_file(&cp);
        let opts = SearchOptions { chunk_size: 13, max_trees: Some(stop), checkpoint: Some(cp.clone()), ..SearchOptions::default() };
        let partial = verify_dls_with(pr, &opts, None).unwrap();
        assert!(!partial.enumeration_complete);
        assert_eq!(partial.verdict, Verdict::NotDetermined);
        let state = SearchCheckpoint::load(&cp).unwrap();
        assert_eq!(state.trees_examined, partial.trees_examined);
        let opts = SearchOptions { checkpoint: Some(cp.clone()), ..SearchOptions::default() };
        let resumed = verify_dls_with(pr, &opts, Some(state)).unwrap();
        assert_eq!(resumed.without_timing(), full.without_timing());
        let a = serde_json::to_string(&resumed.without_timing()).unwrap();
        let b = serde_json::to_string(&full.without_timing()).unwrap();
        assert_eq!(a, b);
    }
    // a checkpoint for other parameters is refused
    let state = SearchCheckpoint::load(&cp).unwrap();
    assert!(verify_dls_with(params(3, 6, 3), &SearchOptions::default(), Some(state)).is_err());
}

#[test]
fn mates_reverify() {
    let r = verify_dls(params(3, 4, 2)).unwrap();
    assert!(verify_mates(&r).unwrap());
    // a forged mate is caught
    let mut forged = r.clone();
    forged.mates.push(laptree::graph6_encode(&Graph::path(9)));
    assert!(!verify_mates(&forged).unwrap());
    let mut same = r.clone();
    same.mates.push(r.target.clone());
    assert!(!verify_mates(&same).unwrap());
}

#[test]
fn complement_side_is_determined() {
    let r = verify_complement_dls(params(3, 4, 2), &SearchOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Determined);
    assert_eq!(r.side, SpectrumSide::Complement);
    assert_eq!(graph6_decode(&r.target).unwrap().complement(), laptree::build_double_starlike(params(3, 4, 2)).unwrap());
}

#[test]
fn report_json_shape() {
    let r = verify_dls(params(1, 2, 1)).unwrap();
    let s = serde_json::to_string(&r.without_timing()).unwrap();
    assert_eq!(
        s,
        r#"{"target":"Cq","params":{"p":1,"n":2,"q":1},"order":4,"side":"graph","trees_examined":2,"charpoly":["0","-4","10","-6","1"],"mates":[],"verdict":"determined","elapsed":0.0,"enumeration_complete":true,"trees_only":true}"#
    );
    let back: DlsReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r.without_timing());
}

fn strip_timing(text: &str) -> Vec<DlsReport> {
    text.lines().map(|l| serde_json::from_str::<DlsReport>(l).unwrap().without_timing()).collect()
}

#[test]
fn grid_points_are_ordered_and_cover_edge_cases() {
    let pts = grid_points(&GridSpec::up_to_order(8));
    assert!(pts.windows(2).all(|w| (w[0].order(), w[0].p, w[0].q, w[0].n) < (w[1].order(), w[1].p, w[1].q, w[1].n)));
    assert!(pts.iter().all(|t| t.n >= 2 && t.p >= t.q && t.order() <= 8));
    assert!(pts.iter().any(|t| t.p == t.q) && pts.iter().any(|t| t.q == 1));
    let limited = grid_points(&GridSpec { pmax: 2, qmax: 1, nmax: 3, order_cap: 8 });
    assert!(limited.iter().all(|t| t.p <= 2 && t.q == 1 && t.n <= 3));
}

#[test]
fn grid_resume_after_kill_matches_uninterrupted() {
    let dir = tempfile::tempdir().unwrap();
    let spec = GridSpec::up_to_order(10);
    let full_path = dir.path().join("full.jsonl");
    let summary = run_grid(&spec, &GridOptions::default(), &full_path, None, |_| {}).unwrap();
    assert_eq!(summary.completed, summary.points);
    assert_eq!(summary.determined, summary.points);
    let full = fs::read_to_string(&full_path).unwrap();

    let out = dir.path().join("part.jsonl");
    let cp = dir.path().join("grid.cp");
    // stop after a few reports
    let s1 = run_grid(&spec, &GridOptions { max_reports: Some(5), ..GridOptions::default() }, &out, Some(&cp), |_| {}).unwrap();
    assert!(s1.interrupted && s1.completed == 5);
    // stop in the middle of a scan
    let mid = GridOptions {
        search: SearchOptions { max_trees: Some(3), chunk_size: 1, ..SearchOptions::default() },
        max_reports: None,
    };
    let s2 = run_grid(&spec, &mid, &out, Some(&cp), |_| {}).unwrap();
    assert!(s2.interrupted && s2.resumed_from == 5);
    // a torn final line, as left by a hard kill during a write
    let mut text = fs::read_to_string(&out).unwrap();
    text.push_str("{\"target\":\"Cq\",\"par");
    fs::write(&out, text).unwrap();
    let s3 = run_grid(&spec, &GridOptions::default(), &out, Some(&cp), |_| {}).unwrap();
    assert!(!s3.interrupted);
    assert_eq!(s3.completed, s3.points);
    let resumed = fs::read_to_string(&out).unwrap();
    assert_eq!(strip_timing(&resumed), strip_timing(&full));
    assert_eq!(resumed.lines().count(), full.lines().count());
}
