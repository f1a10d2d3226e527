//! Explicit percolating sets on Hamming graphs and complete graphs.
//!
//! Vertex constructions are returned as [`VertexSet`]s over the row-major
//! index space of [`HammingSpace`]. Edge constructions are returned as
//! [`EdgeSet`]s whose ids refer to the graph built by [`make_complete`] or
//! [`HammingSpace::graph`] for the same parameters.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::engine::Process;
use crate::error::{Error, Result};
use crate::formulas::{ceil_half, delta};
use crate::graph::{make_complete, Graph, HammingSpace};
use crate::rational::Rational;
use crate::sets::{EdgeSet, VertexSet};

pub type Point = Vec<usize>;

/// A corner of `{0,1}^d`; coordinate `i` set means "measured from `n-1`".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerMask(Vec<bool>);

impl CornerMask {
    pub fn new(bits: Vec<bool>) -> CornerMask {
        CornerMask(bits)
    }

    pub fn zero(d: usize) -> CornerMask {
        CornerMask(vec![false; d])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Coordinatewise xor; the corners with `t_1 = t_2` are closed under it.
    pub fn compose(&self, other: &CornerMask) -> CornerMask {
        CornerMask(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }
}

/// The `2^(d-1)` corners with equal first two coordinates.
pub fn corner_masks(d: usize) -> Vec<CornerMask> {
    assert!(d >= 2, "corner masks need d >= 2");
    (0..1usize << d)
        .map(|bits| CornerMask((0..d).map(|i| bits >> (d - 1 - i) & 1 == 1).collect()))
        .filter(|t| t.0[0] == t.0[1])
        .collect()
}

/// A set of points of `[n]^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    n: usize,
    d: usize,
    points: BTreeSet<Point>,
}

impl Region {
    pub fn empty(n: usize, d: usize) -> Region {
        Region {
            n,
            d,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(n: usize, d: usize, points: I) -> Result<Region> {
        let mut region = Region::empty(n, d);
        for p in points {
            if p.len() != d || p.iter().any(|&x| x >= n) {
                return Err(Error::precondition(format!("point {p:?} is not in [{n}]^{d}")));
            }
            region.points.insert(p);
        }
        Ok(region)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.points.contains(p)
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn union(&self, other: &Region) -> Region {
        assert_eq!((self.n, self.d), (other.n, other.d));
        Region {
            n: self.n,
            d: self.d,
            points: self.points.union(&other.points).cloned().collect(),
        }
    }

    pub fn to_vertex_set(&self) -> VertexSet {
        let space = HammingSpace::new(self.n, self.d).expect("region has a valid space");
        let count = space.vertex_count().expect("region space fits in usize");
        VertexSet::from_indices(count, self.points.iter().map(|p| space.encode(p)))
            .expect("region points are in range")
    }
}

/// Reflects every point along the coordinates set in `t`:
/// `x_i = t_i (n - 1 - p_i) + (1 - t_i) p_i`.
pub fn reflect_region(p: &Region, t: &CornerMask) -> Region {
    assert_eq!(p.d, t.dimension(), "mask dimension must match the region");
    let n = p.n;
    Region {
        n,
        d: p.d,
        points: p
            .points
            .iter()
            .map(|pt| {
                pt.iter()
                    .zip(t.bits())
                    .map(|(&x, &flip)| if flip { n - 1 - x } else { x })
                    .collect()
            })
            .collect(),
    }
}

/// Union of the reflections of `p` over all corners with `t_1 = t_2`.
pub fn corner_union(p: &Region) -> Region {
    corner_masks(p.d)
        .iter()
        .fold(Region::empty(p.n, p.d), |acc, t| acc.union(&reflect_region(p, t)))
}

/// Optimal seed for `K_n^2`: points with `x + (n-1-y) < ceil(r/2)` or
/// `(n-1-x) + y < floor(r/2)`. Requires `n >= ceil(r/2) + 1`.
pub fn v_set_dim2(n: usize, r: usize) -> Result<VertexSet> {
    let s = ceil_half(r);
    if n <= s {
        return Err(Error::precondition(format!(
            "two-dimensional construction needs n >= ceil(r/2) + 1, got n={n}, r={r}"
        )));
    }
    let space = HammingSpace::new(n, 2)?;
    let f = r / 2;
    let members = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| {
        x + (n - 1 - y) < s || (n - 1 - x) + y < f
    });
    VertexSet::from_indices(n * n, members.map(|(x, y)| space.encode(&[x, y])))
}

fn require_corner_params(n: usize, r: usize, d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::precondition(format!("corner constructions need d >= 2, got d={d}")));
    }
    if n <= r {
        return Err(Error::precondition(format!(
            "corner constructions need n >= r + 1, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// Points of the simplex `x_1 + ... + x_d <= ceil(r/2) - 1` in `[n]^d`.
pub fn a_region(n: usize, r: usize, d: usize) -> Result<Region> {
    require_corner_params(n, r, d)?;
    let mut region = Region::empty(n, d);
    let s = ceil_half(r);
    if s == 0 {
        return Ok(region);
    }
    let mut point = vec![0; d];
    simplex_points(&mut point, 0, s - 1, n, &mut region.points);
    Ok(region)
}

fn simplex_points(point: &mut Point, i: usize, budget: usize, n: usize, out: &mut BTreeSet<Point>) {
    if i == point.len() {
        out.insert(point.clone());
        return;
    }
    for x in 0..=budget.min(n - 1) {
        point[i] = x;
        simplex_points(point, i + 1, budget - x, n, out);
    }
    point[i] = 0;
}

/// `x_1 + x_2 + delta * (x_3 + ... + x_d) < delta * (ceil(r/2) - 1)`, exactly.
fn in_carved_region(p: &[usize], r: usize) -> bool {
    let d = p.len();
    let dl = delta(d);
    let head = Rational::from_integer(BigInt::from(p[0] + p[1]));
    let tail = Rational::from_integer(BigInt::from(p[2..].iter().sum::<usize>()));
    let rhs = Rational::from_integer(BigInt::from(ceil_half(r) as i64 - 1));
    head + &dl * tail < dl * rhs
}

/// The simplex with its carved part removed.
pub fn c_region(n: usize, r: usize, d: usize) -> Result<Region> {
    let a = a_region(n, r, d)?;
    Region::from_points(
        n,
        d,
        a.points.into_iter().filter(|p| !in_carved_region(p, r)),
    )
}

/// Corner union of [`a_region`]; percolates `K_n^d` at threshold `r`.
pub fn a_set(n: usize, r: usize, d: usize) -> Result<VertexSet> {
    Ok(corner_union(&a_region(n, r, d)?).to_vertex_set())
}

/// Corner union of [`c_region`]; a smaller percolating set of `K_n^d`.
pub fn c_set(n: usize, r: usize, d: usize) -> Result<VertexSet> {
    Ok(corner_union(&c_region(n, r, d)?).to_vertex_set())
}

/// All edges of `K_n` inside `{0, ..., r}`.
pub fn star_seed_kn(n: usize, r: usize) -> Result<EdgeSet> {
    star_seed_knd(n, r, 1)
}

/// Layered star seed on `K_n^d`: the layer with last coordinate `t` carries
/// the seed for threshold `r - t` on `K_n^(d-1)`, for `t = 0..r`. Size
/// `C(d + r, d + 1)`.
pub fn star_seed_knd(n: usize, r: usize, d: usize) -> Result<EdgeSet> {
    if d == 0 {
        return Err(Error::precondition("star seed needs d >= 1"));
    }
    if n <= r {
        return Err(Error::precondition(format!(
            "star seed needs n >= r + 1, got n={n}, r={r}"
        )));
    }
    let g = if d == 1 {
        make_complete(n)
    } else {
        HammingSpace::new(n, d)?.graph()?
    };
    EdgeSet::from_pairs(&g, star_seed_pairs(n, r, d))
}

fn star_seed_pairs(n: usize, r: usize, d: usize) -> Vec<(usize, usize)> {
    if d == 1 {
        return (0..=r)
            .flat_map(|u| (u + 1..=r).map(move |v| (u, v)))
            .collect();
    }
    let mut out = Vec::new();
    for t in 0..r.min(n) {
        for (a, b) in star_seed_pairs(n, r - t, d - 1) {
            out.push((a * n + t, b * n + t));
        }
    }
    out
}

/// Seed for the edge form of percolation on `L(K_n)`: vertex `i` joined to the
/// last `ceil(r/2) - i` vertices for `i < ceil(r/2)`; for even `r` also the
/// edges `(n-3+2j-r/2, n-2+2j-r/2)` for `1 <= j <= ceil(r/4)`.
pub fn line_seed(n: usize, r: usize) -> Result<EdgeSet> {
    let s = ceil_half(r);
    if n < s + 2 {
        return Err(Error::precondition(format!(
            "line seed needs n >= ceil(r/2) + 2, got n={n}, r={r}"
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..s {
        for k in 1..=s - i {
            pairs.push((i, n - k));
        }
    }
    if r.is_multiple_of(2) {
        for j in 1..=r.div_ceil(4) {
            let u = n + 2 * j - 3 - r / 2;
            pairs.push((u, u + 1));
        }
    }
    let g = make_complete(n);
    let set = EdgeSet::from_pairs(&g, pairs.iter().copied())?;
    if set.len() != pairs.len() {
        return Err(Error::Verification(format!(
            "line seed for n={n}, r={r} produced a repeated edge"
        )));
    }
    Ok(set)
}

/// Named constructions, as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Optimal two-dimensional seed.
    V2,
    A,
    C,
    Star,
    Line,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "v2" => Ok(Family::V2),
            "a" => Ok(Family::A),
            "c" => Ok(Family::C),
            "star" => Ok(Family::Star),
            "line" => Ok(Family::Line),
            other => Err(Error::precondition(format!(
                "unknown family `{other}` (known: v2, a, c, star, line)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructedSeed {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl ConstructedSeed {
    pub fn len(&self) -> usize {
        match self {
            ConstructedSeed::Vertices(s) => s.len(),
            ConstructedSeed::Edges(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A construction together with the graph it lives on and the process it is
/// meant for.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub process: Process,
    pub seed: ConstructedSeed,
}

impl Construction {
    pub fn build(family: Family, n: usize, r: usize, d: usize) -> Result<Construction> {
        Ok(match family {
            Family::V2 => Construction {
                graph: HammingSpace::new(n, 2)?.graph()?,
                process: Process::Vertex,
                seed: ConstructedSeed::Vertices(v_set_dim2(n, r)?),
            },
            Family::A | Family::C => {
                let seed = if family == Family::A { a_set(n, r, d)? } else { c_set(n, r, d)? };
                Construction {
                    graph: HammingSpace::new(n, d)?.graph()?,
                    process: Process::Vertex,
                    seed: ConstructedSeed::Vertices(seed),
                }
            }
            Family::Star => Construction {
                seed: ConstructedSeed::Edges(star_seed_knd(n, r, d)?),
                graph: HammingSpace::new(n, d)?.graph()?,
                process: Process::Star,
            },
            Family::Line => Construction {
                seed: ConstructedSeed::Edges(line_seed(n, r)?),
                graph: make_complete(n),
                process: Process::Line,
            },
        })
    }

    /// Runs the matching process and reports whether everything activates.
    pub fn percolates(&self, r: usize) -> bool {
        use crate::engine::*;
        match (&self.seed, self.process) {
            (ConstructedSeed::Vertices(s), _) => is_percolating_vertices(&self.graph, r, s),
            (ConstructedSeed::Edges(s), Process::Star) => is_percolating_edges_star(&self.graph, r, s),
            (ConstructedSeed::Edges(s), _) => is_percolating_edges_linegraph(&self.graph, r, s),
        }
    }
}
