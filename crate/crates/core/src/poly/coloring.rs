//! Proper edge colorings by rational numbers.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::primes::{first_primes, largest_prime_factor, primes_above};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, make_complete, Graph};
use crate::rational::Rational;

/// Colors indexed by edge id of the graph they were built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Rational>,
    generators: Option<Vec<Rational>>,
}

impl EdgeColoring {
    pub fn from_colors(colors: Vec<Rational>) -> EdgeColoring {
        EdgeColoring {
            colors,
            generators: None,
        }
    }

    pub fn colors(&self) -> &[Rational] {
        &self.colors
    }

    pub fn color(&self, edge_id: usize) -> &Rational {
        &self.colors[edge_id]
    }

    /// Per-vertex generators when every color is `gamma_u * gamma_v`.
    pub fn generators(&self) -> Option<&[Rational]> {
        self.generators.as_deref()
    }

    /// Checks that the coloring covers `g` and that no two edges at a common
    /// vertex share a color.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::precondition(format!(
                "coloring has {} colors for {} edges",
                self.colors.len(),
                g.edge_count()
            )));
        }
        for v in 0..g.vertex_count() {
            let mut at_v: Vec<(&Rational, usize)> =
                g.incident_edges(v).iter().map(|&e| (&self.colors[e], e)).collect();
            at_v.sort();
            if let Some(w) = at_v.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::ImproperColoring {
                    first: g.edge(w[0].1),
                    second: g.edge(w[1].1),
                });
            }
        }
        Ok(())
    }

    /// Largest prime dividing the numerator or denominator of any color.
    fn largest_prime_in_image(&self) -> Result<u64> {
        let mut largest = 1;
        for c in &self.colors {
            for part in [c.numer(), c.denom()] {
                let value = part.abs().to_u64().ok_or_else(|| {
                    Error::precondition(format!("color {c} is too large to factor"))
                })?;
                largest = largest.max(largest_prime_factor(value));
            }
        }
        Ok(largest)
    }
}

fn prime_generators(primes: &[u64]) -> Vec<Rational> {
    primes
        .iter()
        .map(|&p| Rational::from_integer(BigInt::from(p)))
        .collect()
}

/// `c(uv) = gamma_u * gamma_v` on any graph. The generators must be distinct
/// and nonzero, which makes the coloring proper.
pub fn vertex_product_coloring(g: &Graph, generators: Vec<Rational>) -> Result<EdgeColoring> {
    if generators.len() != g.vertex_count() {
        return Err(Error::precondition(format!(
            "need {} generators, got {}",
            g.vertex_count(),
            generators.len()
        )));
    }
    if generators.iter().any(Zero::is_zero) {
        return Err(Error::precondition("generators must be nonzero"));
    }
    let mut sorted = generators.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::precondition("generators must be distinct"));
    }
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| &generators[u] * &generators[v])
        .collect();
    let coloring = EdgeColoring {
        colors,
        generators: Some(generators),
    };
    coloring.check_proper(g)?;
    Ok(coloring)
}

/// Coloring of `make_complete(n)` by `gamma_i * gamma_j` with `gamma_i` the
/// `i`-th prime. Distinct primes give pairwise distinct products.
pub fn product_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(Error::precondition(format!("product coloring needs n >= 2, got {n}")));
    }
    vertex_product_coloring(&make_complete(n), prime_generators(&first_primes(n)))
}

/// Extends a proper coloring of `g` to `g □ K_n` (the graph is returned as
/// well). Copies of `g` keep their colors, and the edge between `(a, i)` and
/// `(a, j)` gets `gamma_i * gamma_j` for fresh primes larger than every prime
/// occurring in the colors of `g`.
pub fn lift_coloring(g: &Graph, c: &EdgeColoring, n: usize) -> Result<(Graph, EdgeColoring)> {
    c.check_proper(g)?;
    let product = cartesian_product(g, &make_complete(n));
    let gammas = prime_generators(&primes_above(c.largest_prime_in_image()?, n));
    let colors = product
        .edges()
        .iter()
        .map(|&(x, y)| {
            let (a, i) = (x / n, x % n);
            let (b, j) = (y / n, y % n);
            if i == j {
                let id = g.edge_id(a, b).expect("copy edge comes from g");
                c.color(id).clone()
            } else {
                debug_assert_eq!(a, b);
                &gammas[i] * &gammas[j]
            }
        })
        .collect();
    let lifted = EdgeColoring {
        colors,
        generators: None,
    };
    lifted
        .check_proper(&product)
        .map_err(|e| Error::Verification(format!("lifted coloring is not proper: {e}")))?;
    Ok((product, lifted))
}

/// `K_n^d` with the coloring obtained by lifting [`product_coloring`] `d - 1`
/// times.
pub fn hamming_coloring(n: usize, d: usize) -> Result<(Graph, EdgeColoring)> {
    if d == 0 {
        return Err(Error::precondition("dimension d must be at least 1"));
    }
    let mut g = make_complete(n);
    let mut c = product_coloring(n)?;
    for _ in 1..d {
        (g, c) = lift_coloring(&g, &c, n)?;
    }
    Ok((g, c))
}
