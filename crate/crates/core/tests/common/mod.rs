//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use laptree::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Decodes a Prüfer sequence over `0..n` into the edge list of a labelled tree.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

/// Labelled trees on `0..n` whose vertex degrees are non-increasing in the
/// label, one per Prüfer sequence. Every tree has such a labelling, so
/// these cover all isomorphism classes.
pub fn degree_ordered_prufer_trees(n: usize, mut visit: impl FnMut(Graph)) {
    if n <= 2 {
        visit(if n == 2 { prufer_tree(2, &[]) } else { Graph::empty(n) });
        return;
    }
    let len = n - 2;
    // multiplicity of each label in the sequence is its degree minus one
    fn counts(rest: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for c in (1..=max.min(rest)).rev() {
            cur.push(c);
            counts(rest - c, c, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    counts(len, len, n, &mut Vec::new(), &mut all);
    fn fill(seq: &mut Vec<usize>, left: &mut Vec<usize>, n: usize, len: usize, visit: &mut dyn FnMut(Graph)) {
        if seq.len() == len {
            visit(prufer_tree(n, seq));
            return;
        }
        for v in 0..left.len() {
            if left[v] > 0 {
                left[v] -= 1;
                seq.push(v);
                fill(seq, left, n, len, visit);
                seq.pop();
                left[v] += 1;
            }
        }
    }
    for mut c in all {
        fill(&mut Vec::with_capacity(len), &mut c, n, len, &mut visit);
    }
}

/// Free-tree count by deduplicating degree-ordered Prüfer trees by
/// canonical form.
pub fn prufer_dedup_count(n: usize) -> usize {
    let mut seen = std::collections::HashSet::new();
    degree_ordered_prufer_trees(n, |t| {
        seen.insert(laptree::canonical_form(&t).unwrap());
    });
    seen.len()
}

/// Same count over every Prüfer sequence, without the degree ordering.
pub fn full_prufer_dedup_count(n: usize) -> usize {
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut seen = std::collections::HashSet::new();
    loop {
        seen.insert(laptree::canonical_form(&prufer_tree(n, &seq)).unwrap());
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
        seq[i] += 1;
    }
    seen.len()
}

/// Unlabelled free-tree counts by Otter's formula, orders `0..=max`.
pub fn otter_free_tree_counts(max: usize) -> Vec<u128> {
    // rooted trees: r(n+1) = (1/n) sum_{k=1}^{n} (sum_{d | k} d r(d)) r(n-k+1)
    let mut r = vec![0u128; max + 1];
    if max >= 1 {
        r[1] = 1;
    }
    for n in 1..max {
        let mut s = 0u128;
        for k in 1..=n {
            let inner: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            s += inner * r[n - k + 1];
        }
        r[n + 1] = s / n as u128;
    }
    let mut f = vec![0u128; max + 1];
    for n in 1..=max {
        // f(n) = r(n) - (1/2) [sum_{i+j=n} r(i) r(j) - r(n/2) (n even)]
        let conv: u128 = (1..n).map(|i| r[i] * r[n - i]).sum();
        let even = if n % 2 == 0 { r[n / 2] } else { 0 };
        f[n] = r[n] - (conv - even) / 2;
    }
    if max >= 1 {
        f[0] = 1;
    }
    f
}

/// Size of the automorphism group of a tree, counted from scratch by
/// rooting at the center(s).
pub fn tree_automorphisms(t: &Graph) -> BigInt {
    let n = t.order();
    if n <= 1 {
        return BigInt::one();
    }
    // centers by eccentricity
    let ecc: Vec<usize> = (0..n).map(|v| bfs_dist(t, v).into_iter().max().unwrap()).collect();
    let radius = *ecc.iter().min().unwrap();
    let centers: Vec<usize> = (0..n).filter(|&v| ecc[v] == radius).collect();
    if centers.len() == 1 {
        return rooted(t, centers[0], usize::MAX).1;
    }
    let (a, b) = (centers[0], centers[1]);
    let (ca, xa) = rooted(t, a, b);
    let (cb, xb) = rooted(t, b, a);
    let both = xa * xb;
    if ca == cb {
        both * 2
    } else {
        both
    }
}

fn bfs_dist(t: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; t.order()];
    d[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in t.neighbors(u) {
            if d[w] == usize::MAX {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
        }
    }
    d
}

/// (nested-string code, automorphisms fixing the root) of the subtree at
/// `v` with parent `parent`.
fn rooted(t: &Graph, v: usize, parent: usize) -> (String, BigInt) {
    let mut kids: Vec<(String, BigInt)> =
        t.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| rooted(t, w, v)).collect();
    kids.sort_by(|x, y| x.0.cmp(&y.0));
    let mut aut = BigInt::one();
    let mut i = 0;
    while i < kids.len() {
        let mut j = i;
        while j < kids.len() && kids[j].0 == kids[i].0 {
            aut *= &kids[j].1;
            j += 1;
        }
        for k in 1..=(j - i) {
            aut *= k;
        }
        i = j;
    }
    let code = format!("({})", kids.into_iter().map(|k| k.0).collect::<String>());
    (code, aut)
}

/// Brute-force isomorphism test for small graphs by permuting vertices.
pub fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() || a.degree_multiset() != b.degree_multiset() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn go(a: &Graph, b: &Graph, k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.order();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] || a.degree(k) != b.degree(c) {
                continue;
            }
            if (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], c)) {
                used[c] = true;
                perm[k] = c;
                if go(a, b, k + 1, perm, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    go(a, b, 0, &mut perm, &mut used)
}

/// Determinant by fraction-field Gaussian elimination with pivoting.
#[allow(clippy::needless_range_loop)]
pub fn rational_determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Laplacian with row and column 0 deleted, as plain integers.
pub fn reduced_laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Uniform random labelled tree on `n` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(n, &seq)
}

/// Random connected graph: a random tree plus each other pair with
/// probability `extra`.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let t = random_tree(rng, n);
    let mut edges = t.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !t.has_edge(u, v) && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph G(n, p), possibly disconnected.
pub fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Number of 4-cycles by checking every 4-subset in its three cyclic orders.
pub fn four_cycles_brute(g: &Graph) -> usize {
    let n = g.order();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for [w, x, y, z] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        if g.has_edge(w, x) && g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(z, w) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

/// Paths on three vertices by listing middle vertices' neighbour pairs.
pub fn p3_brute(g: &Graph) -> usize {
    let mut count = 0;
    for v in 0..g.order() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for _ in i + 1..nb.len() {
                count += 1;
            }
        }
    }
    count
}

/// Sorted eigenvalues of the real symmetric matrix `m` by cyclic Jacobi
/// rotations; independent of the library's QL solver.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

pub fn laplacian_f64(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as f64
                    } else if g.has_edge(i, j) {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}
