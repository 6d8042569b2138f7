use super::{BoundCheck, BOUND_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::{build_double_starlike, graph6_encode, DoubleStarlikeParams, Graph};
use crate::spectra::laplacian_spectrum;

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    g.degree_multiset()
}

/// `d_1 + 1 <= mu_1 <= max over edges uv of (d_u (d_u + m_u) + d_v (d_v + m_v)) / (d_u + d_v)`,
/// with `m_u` the average degree of the neighbours of `u`.
pub fn check_mu1_degree_bounds(g: &Graph) -> Result<BoundCheck> {
    if g.size() == 0 {
        return Err(Error::Precondition("largest eigenvalue bounds need at least one edge".into()));
    }
    let deg = g.degrees();
    let avg_nbr = |v: usize| -> f64 {
        g.neighbors(v).iter().map(|&w| deg[w] as f64).sum::<f64>() / deg[v] as f64
    };
    let upper = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (du, dv) = (deg[u] as f64, deg[v] as f64);
            (du * (du + avg_nbr(u)) + dv * (dv + avg_nbr(v))) / (du + dv)
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let mu1 = laplacian_spectrum(g).nth(1);
    Ok(BoundCheck::new(
        "mu1-degree-bounds",
        graph6_encode(g),
        Some(g.max_degree() as f64 + 1.0),
        mu1,
        Some(upper),
        BOUND_TOLERANCE,
    ))
}

fn require_connected(g: &Graph, min_order: usize, what: &str) -> Result<()> {
    if g.order() < min_order || !g.is_connected() {
        return Err(Error::Precondition(format!(
            "{what} needs a connected graph on at least {min_order} vertices"
        )));
    }
    Ok(())
}

/// `mu_2 >= d_2` for connected graphs on at least three vertices.
pub fn check_mu2_lower_bound(g: &Graph) -> Result<BoundCheck> {
    require_connected(g, 3, "mu2 bound")?;
    let d2 = sorted_degrees(g)[1] as f64;
    let mu2 = laplacian_spectrum(g).nth(2);
    Ok(BoundCheck::new("mu2-second-degree", graph6_encode(g), Some(d2), mu2, None, BOUND_TOLERANCE))
}

/// `mu_3 >= d_3 - 1` for connected graphs on at least four vertices.
pub fn check_mu3_lower_bound(g: &Graph) -> Result<BoundCheck> {
    require_connected(g, 4, "mu3 bound")?;
    let d3 = sorted_degrees(g)[2] as f64;
    let mu3 = laplacian_spectrum(g).nth(3);
    Ok(BoundCheck::new("mu3-third-degree", graph6_encode(g), Some(d3 - 1.0), mu3, None, BOUND_TOLERANCE))
}

/// The three leading Laplacian eigenvalues of `H(p, n, q)` for `n >= 4`,
/// `p > q >= 2`:
/// `p+2 <= mu_1 <= p+2+1/(p+2)`, `q+2 <= mu_2 <= q+3+1/(q+2)`, `mu_3 < 4`.
pub fn check_double_starlike_bounds(params: DoubleStarlikeParams) -> Result<Vec<BoundCheck>> {
    let DoubleStarlikeParams { p, n, q } = params;
    if n < 4 || q < 2 || p <= q {
        return Err(Error::Precondition(format!("{params}: needs n >= 4 and p > q >= 2")));
    }
    let spec = laplacian_spectrum(&build_double_starlike(params)?);
    let (pf, qf) = (p as f64, q as f64);
    let label = params.to_string();
    Ok(vec![
        BoundCheck::new("h-mu1", label.clone(), Some(pf + 2.0), spec.nth(1), Some(pf + 2.0 + 1.0 / (pf + 2.0)), BOUND_TOLERANCE),
        BoundCheck::new("h-mu2", label.clone(), Some(qf + 2.0), spec.nth(2), Some(qf + 3.0 + 1.0 / (qf + 2.0)), BOUND_TOLERANCE),
        BoundCheck::new_strict_upper("h-mu3", label, spec.nth(3), 4.0, BOUND_TOLERANCE),
    ])
}
