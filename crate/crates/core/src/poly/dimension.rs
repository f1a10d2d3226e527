//! Dimension of the space of edge functions recognized by low-degree vertex
//! polynomials.
//!
//! For a graph `G` with proper coloring `c` and `r >= 1`, a tuple of
//! polynomials `{P_v}` with `deg P_v <= r - 1` is *consistent* when
//! `P_u(c(uv)) = P_v(c(uv))` on every edge. Writing each `P_v` by its `r`
//! coefficients, consistency is the kernel of a constraint matrix `K` with one
//! row per edge. Evaluating a consistent tuple on the edges is a linear map
//! `Phi`, and the recognized space is `Phi(ker K)`. Its dimension lower-bounds
//! the star weak saturation number `m_e(G, r)`.

use num_traits::{One, Zero};

use super::coloring::{hamming_coloring, EdgeColoring};
use super::matrix::RationalMatrix;
use crate::error::{Error, Result};
use crate::formulas::{binomial, me_hamming};
use crate::graph::Graph;
use crate::rational::Rational;

/// Default cap on `|V| * r` for [`dim_w_lower_bound_knd`].
pub const DEFAULT_VARIABLE_CAP: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimWReport {
    pub dim: usize,
    /// `|V| * r` polynomial coefficients.
    pub variables: usize,
    pub constraint_rows: usize,
    pub constraint_rank: usize,
    pub kernel_dim: usize,
    /// Columns span the recognized space, one row per edge id.
    pub image: RationalMatrix,
}

/// `powers[e][k] = c(e)^k` for `k < r`.
fn color_powers(c: &EdgeColoring, r: usize) -> Vec<Vec<Rational>> {
    c.colors()
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(r);
            let mut p = Rational::one();
            for _ in 0..r {
                row.push(p.clone());
                p *= x;
            }
            row
        })
        .collect()
}

/// Consistency constraints `P_u(c(uv)) - P_v(c(uv)) = 0`, one row per edge.
pub fn constraint_matrix(g: &Graph, c: &EdgeColoring, r: usize) -> RationalMatrix {
    let powers = color_powers(c, r);
    let mut k = RationalMatrix::zeros(g.edge_count(), g.vertex_count() * r);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        for (deg, p) in powers[id].iter().enumerate() {
            k.set(id, u * r + deg, p.clone());
            k.set(id, v * r + deg, -p.clone());
        }
    }
    k
}

/// Evaluation map: row `uv` reads off `P_u(c(uv))`.
pub fn evaluation_matrix(g: &Graph, c: &EdgeColoring, r: usize) -> RationalMatrix {
    let powers = color_powers(c, r);
    let mut phi = RationalMatrix::zeros(g.edge_count(), g.vertex_count() * r);
    for (id, &(u, _)) in g.edges().iter().enumerate() {
        for (deg, p) in powers[id].iter().enumerate() {
            phi.set(id, u * r + deg, p.clone());
        }
    }
    phi
}

pub fn dim_w_detailed(g: &Graph, c: &EdgeColoring, r: usize) -> Result<DimWReport> {
    c.check_proper(g)?;
    let variables = g.vertex_count() * r;
    if r == 0 {
        // Only the zero function is recognized without polynomials.
        return Ok(DimWReport {
            dim: 0,
            variables: 0,
            constraint_rows: g.edge_count(),
            constraint_rank: 0,
            kernel_dim: 0,
            image: RationalMatrix::zeros(g.edge_count(), 0),
        });
    }
    let k = constraint_matrix(g, c, r);
    let basis = k.kernel_basis();
    let kernel_dim = basis.len();
    let constraint_rank = variables - kernel_dim;

    let powers = color_powers(c, r);
    let mut image = RationalMatrix::zeros(g.edge_count(), kernel_dim);
    for (id, &(u, _)) in g.edges().iter().enumerate() {
        for (j, vec) in basis.iter().enumerate() {
            let value: Rational = powers[id]
                .iter()
                .enumerate()
                .map(|(deg, p)| p * &vec[u * r + deg])
                .fold(Rational::zero(), |acc, x| acc + x);
            image.set(id, j, value);
        }
    }
    let dim = image.rank();
    Ok(DimWReport {
        dim,
        variables,
        constraint_rows: g.edge_count(),
        constraint_rank,
        kernel_dim,
        image,
    })
}

/// Exact dimension of the recognized space for coloring `c` of `g`. For
/// `r = 0` the space is `{0}`.
pub fn dim_w(g: &Graph, c: &EdgeColoring, r: usize) -> Result<usize> {
    dim_w_detailed(g, c, r).map(|rep| rep.dim)
}

/// Computes the recognized-space dimension of `K_n^d` under the iterated
/// lifted prime coloring and checks it against `C(d+r, d+1)` from both sides.
pub fn dim_w_lower_bound_knd(n: usize, r: usize, d: usize) -> Result<usize> {
    dim_w_lower_bound_knd_with_cap(n, r, d, DEFAULT_VARIABLE_CAP)
}

pub fn dim_w_lower_bound_knd_with_cap(n: usize, r: usize, d: usize, cap: usize) -> Result<usize> {
    let upper = me_hamming(n, r, d)?;
    let variables = u32::try_from(d)
        .ok()
        .and_then(|d| n.checked_pow(d))
        .and_then(|v| v.checked_mul(r));
    match variables {
        Some(v) if v <= cap => {}
        _ => {
            return Err(Error::ResourceLimit {
                what: "polynomial coefficients",
                requested: (n as u128).saturating_pow(d as u32).saturating_mul(r as u128),
                limit: cap as u128,
            })
        }
    }
    let (g, c) = hamming_coloring(n, d)?;
    let dim = dim_w(&g, &c, r)?;
    let lower = binomial((d + r) as u64, (d + 1) as u64);
    if (dim as u128) < lower || (dim as u128) > upper {
        return Err(Error::Verification(format!(
            "dimension {dim} for n={n}, r={r}, d={d} is outside [{lower}, {upper}]"
        )));
    }
    Ok(dim)
}
