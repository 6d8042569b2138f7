//! AHU canonical encoding of free trees, rooted at the centre.

use super::Graph;
use crate::error::{Error, Result};

/// The one or two central vertices of a tree, found by repeatedly
/// stripping leaves.
pub fn tree_center(t: &Graph) -> Result<Vec<usize>> {
    ensure_tree(t)?;
    let n = t.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

fn ensure_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree { vertices: t.order(), edges: t.size() })
    }
}

fn rooted_encoding(t: &Graph, root: usize) -> Vec<u8> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut code = Vec::new();
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[u]);
        kids.sort_unstable();
        code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if u != root {
            child_codes[parent[u]].push(code.clone());
        }
    }
    code
}

/// Canonical byte string of a tree: equal for two trees exactly when they
/// are isomorphic.
pub fn canonical_form(t: &Graph) -> Result<Vec<u8>> {
    let centers = tree_center(t)?;
    Ok(centers
        .into_iter()
        .map(|c| rooted_encoding(t, c))
        .min()
        .expect("a tree has at least one centre"))
}
