//! Explicit recognized functions on `K_n` under the prime product coloring.
//!
//! For every edge `uv` inside `{0, ..., r}` there is a family of vertex
//! polynomials of degree at most `r - 1` whose common edge values `phi_uv`
//! equal 1 on `uv` and vanish on every other edge inside `{0, ..., r}`. The
//! `C(r+1, 2)` functions are therefore linearly independent.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coloring::{product_coloring, EdgeColoring};
use super::matrix::RationalMatrix;
use super::polynomial::PolynomialR;
use crate::error::{Error, Result};
use crate::formulas::binomial;
use crate::graph::{make_complete, Graph};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub edge: (usize, usize),
    /// One polynomial per vertex of `K_n`.
    pub polynomials: Vec<PolynomialR>,
    /// `phi_uv` by edge id of `make_complete(n)`.
    pub values: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct WitnessFamily {
    pub n: usize,
    pub r: usize,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub witnesses: Vec<Witness>,
}

impl WitnessFamily {
    /// Witness value vectors as rows.
    pub fn value_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.witnesses.iter().map(|w| w.values.clone()).collect())
    }
}

/// Vertex polynomials for the witness attached to edge `uv`.
pub fn witness_polynomials(gamma: &[Rational], r: usize, u: usize, v: usize) -> Vec<PolynomialR> {
    let others: Vec<usize> = (0..=r).filter(|&k| k != u && k != v).collect();
    let anchor = &gamma[u] * &gamma[v];
    (0..gamma.len())
        .map(|i| {
            let gi = &gamma[i];
            if i <= r && i != u && i != v {
                PolynomialR::zero()
            } else if i == u || i == v {
                others.iter().fold(PolynomialR::constant(Rational::one()), |acc, &k| {
                    let root = gi * &gamma[k];
                    let denom = &anchor - &root;
                    &acc * &PolynomialR::linear_factor(&root).scale(&denom.recip())
                })
            } else {
                others.iter().fold(PolynomialR::constant(Rational::one()), |acc, &k| {
                    let gk = &gamma[k];
                    let root = gi * gk;
                    let scale = (gi - gk) / (gi * (&gamma[u] - gk) * (&gamma[v] - gk));
                    &acc * &PolynomialR::linear_factor(&root).scale(&scale)
                })
            }
        })
        .collect()
}

/// Builds and verifies the witness family for `n >= r + 1`, `r >= 1`.
///
/// Verification covers the degree bound, agreement of both endpoint
/// polynomials on every edge, the indicator pattern on the edges inside
/// `{0, ..., r}`, and full rank of the value vectors. Any failure is reported
/// as [`Error::Verification`].
pub fn lmekn_witnesses(n: usize, r: usize) -> Result<WitnessFamily> {
    if r == 0 || n <= r {
        return Err(Error::precondition(format!(
            "witnesses need r >= 1 and n >= r + 1, got n={n}, r={r}"
        )));
    }
    let graph = make_complete(n);
    let coloring = product_coloring(n)?;
    let gamma: Vec<Rational> = coloring
        .generators()
        .expect("product coloring has generators")
        .to_vec();

    let mut witnesses = Vec::new();
    for u in 0..=r {
        for v in u + 1..=r {
            let polynomials = witness_polynomials(&gamma, r, u, v);
            if let Some((i, p)) = polynomials
                .iter()
                .enumerate()
                .find(|(_, p)| p.degree().is_some_and(|deg| deg + 1 > r))
            {
                return Err(Error::Verification(format!(
                    "P^{u}{v}_{i} has degree {:?} > r - 1",
                    p.degree()
                )));
            }
            let mut values = Vec::with_capacity(graph.edge_count());
            for (id, &(i, j)) in graph.edges().iter().enumerate() {
                let x = coloring.color(id);
                let (pi, pj) = (polynomials[i].eval(x), polynomials[j].eval(x));
                if pi != pj {
                    return Err(Error::Verification(format!(
                        "witness {u}{v} disagrees on edge {i}{j}: {pi} vs {pj}"
                    )));
                }
                if j <= r {
                    let expected = if (i, j) == (u, v) { Rational::one() } else { Rational::zero() };
                    if pi != expected {
                        return Err(Error::Verification(format!(
                            "witness {u}{v} has value {pi} on edge {i}{j}, expected {expected}"
                        )));
                    }
                }
                values.push(pi);
            }
            witnesses.push(Witness {
                edge: (u, v),
                polynomials,
                values,
            });
        }
    }

    let family = WitnessFamily {
        n,
        r,
        graph,
        coloring,
        witnesses,
    };
    let want = binomial(r as u64 + 1, 2) as usize;
    let rank = family.value_matrix().rank();
    if rank != want {
        return Err(Error::Verification(format!(
            "witness family has rank {rank}, expected {want}"
        )));
    }
    Ok(family)
}

/// `gamma_u * gamma_v` as an integer, for diagnostics.
pub fn anchor_color(family: &WitnessFamily, u: usize, v: usize) -> BigInt {
    let id = family.graph.edge_id(u, v).expect("edge of K_n");
    family.coloring.color(id).to_integer()
}
