//! Exact V-polytope geometry: Minkowski sums, cartesian products,
//! dilatation, exact hull volume and the volume polynomial `Vol_n(tP + Q)`.
//!
//! Bodies are convex compact sets given by generating points; the convex
//! hull is implied and never materialized as an H-representation.

mod hull;
mod interp;
mod lp;

use std::collections::HashSet;
use std::fmt;
use std::ops::Index;

use num::bigint::BigInt;
use num::{Integer, One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{factorial, Rat};
use crate::seq::Seq;

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<Rat>);

impl Point {
    pub fn new(coords: Vec<Rat>) -> Point {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }
}

impl From<Vec<Rat>> for Point {
    fn from(coords: Vec<Rat>) -> Point {
        Point(coords)
    }
}

impl Index<usize> for Point {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

#[derive(Serialize, Deserialize)]
struct BodyRepr {
    dim: usize,
    vertices: Vec<Point>,
}

/// A V-polytope: ambient dimension plus a nonempty list of generating
/// points. Redundant (non-extreme) points are permitted; exact duplicates
/// are removed on construction. The JSON form is
/// `{"dim": n, "vertices": [["0","0"], ["1","0"], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BodyRepr", into = "BodyRepr")]
pub struct Body {
    dim: usize,
    vertices: Vec<Point>,
}

impl TryFrom<BodyRepr> for Body {
    type Error = Error;
    fn try_from(repr: BodyRepr) -> Result<Body> {
        Body::new(repr.dim, repr.vertices)
    }
}

impl From<Body> for BodyRepr {
    fn from(body: Body) -> BodyRepr {
        BodyRepr {
            dim: body.dim,
            vertices: body.vertices,
        }
    }
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} body on {} points", self.dim, self.vertices.len())
    }
}

impl Body {
    pub fn new(dim: usize, vertices: Vec<Point>) -> Result<Body> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if vertices.is_empty() {
            return Err(Error::EmptyVertices);
        }
        for (index, p) in vertices.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::PointDimension {
                    index,
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let mut seen = HashSet::new();
        let vertices: Vec<Point> = vertices
            .into_iter()
            .filter(|p| seen.insert(p.clone()))
            .collect();
        Ok(Body { dim, vertices })
    }

    /// A single-point body, e.g. for translations via Minkowski sum.
    pub fn point(p: Point) -> Result<Body> {
        let dim = p.dim();
        Body::new(dim, vec![p])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Dilatation by `t ≥ 0`: every generating point is multiplied by `t`.
    pub fn scale(&self, t: &Rat) -> Result<Body> {
        if t.is_negative() {
            return Err(Error::NegativeScale { value: t.clone() });
        }
        let vertices = self
            .vertices
            .iter()
            .map(|p| Point(p.0.iter().map(|c| c * t).collect()))
            .collect();
        Body::new(self.dim, vertices)
    }

    /// Exact Euclidean volume of the convex hull; zero when the hull is
    /// lower-dimensional.
    pub fn volume(&self) -> Rat {
        let n = self.dim;
        if self.vertices.len() <= n || affine_rank(&self.vertices) < n {
            return Rat::zero();
        }

        // Non-extreme generating points only slow the facet scan down.
        let kept = extreme_points(&self.vertices, n);

        // Clear denominators to land on an integer grid.
        let mut scale = BigInt::one();
        for p in &kept {
            for c in p.coords() {
                scale = scale.lcm(c.denom());
            }
        }
        let int_pts: Vec<Vec<BigInt>> = kept
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .map(|c| c.numer() * (&scale / c.denom()))
                    .collect()
            })
            .collect();

        let raw = if fits_i128(&int_pts, n) {
            let small: Vec<Vec<i128>> = int_pts
                .iter()
                .map(|p| p.iter().map(|c| c.to_i128().expect("bound checked")).collect())
                .collect();
            hull::hull_volume_times_factorial(&small, n)
        } else {
            hull::hull_volume_times_factorial(&int_pts, n)
        };

        Rat::integer(raw) / Rat::integer(factorial(n as u64) * scale.pow(n as u32))
    }
}

/// Affine dimension of a point set: the rank of the difference vectors,
/// computed by exact Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn affine_rank(points: &[Point]) -> usize {
    let base = &points[0];
    let dim = base.dim();
    let mut rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| (0..dim).map(|c| &p[c] - &base[c]).collect())
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &rows[rank][col];
                for c in col..dim {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Number of `dim`-subsets of `m` points, saturating.
fn subset_count(m: usize, dim: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..dim.min(m) {
        acc = acc.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Generating points that are extreme (vertices of the hull). The LP filter
/// costs Θ(m) simplex solves and only pays off once the Θ(m^n) facet scan
/// dominates, which at desk scale happens from dimension 4 up; everything
/// else is returned as-is. A point found interior is removed from the
/// candidate pool immediately; that keeps the hull and shrinks later LPs.
fn extreme_points(points: &[Point], dim: usize) -> Vec<Point> {
    if dim < 4 || points.len() <= dim + 1 || subset_count(points.len(), dim) < 300_000 {
        return points.to_vec();
    }
    let mut pool: Vec<&Point> = points.iter().collect();
    let mut i = 0;
    while i < pool.len() {
        let others: Vec<&[Rat]> = pool
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.coords())
            .collect();
        if lp::in_convex_hull(pool[i].coords(), &others) {
            pool.remove(i);
        } else {
            i += 1;
        }
    }
    pool.into_iter().cloned().collect()
}

/// Conservative overflow guard for the `i128` fast path: the largest
/// intermediate is bounded by `n! · (2B)^n · (m + 2) · 16`.
fn fits_i128(points: &[Vec<BigInt>], dim: usize) -> bool {
    let max_abs = points
        .iter()
        .flat_map(|p| p.iter())
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::one);
    let bound = factorial(dim as u64)
        * (BigInt::from(2) * max_abs).pow(dim as u32)
        * BigInt::from(points.len() + 2)
        * BigInt::from(16);
    bound < BigInt::from(i128::MAX)
}

/// Minkowski sum `A + B = {a + b}`: all pairwise vertex sums, deduplicated.
pub fn minkowski_sum(a: &Body, b: &Body) -> Result<Body> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    let mut vertices = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for p in &a.vertices {
        for q in &b.vertices {
            vertices.push(Point(
                p.coords()
                    .iter()
                    .zip(q.coords())
                    .map(|(x, y)| x + y)
                    .collect(),
            ));
        }
    }
    Body::new(a.dim, vertices)
}

/// Cartesian product `A × B ⊂ R^{l+d}`: concatenated coordinates over all
/// vertex pairs.
pub fn cartesian_product(a: &Body, b: &Body) -> Body {
    let mut vertices = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for p in &a.vertices {
        for q in &b.vertices {
            let mut coords = Vec::with_capacity(a.dim + b.dim);
            coords.extend(p.coords().iter().cloned());
            coords.extend(q.coords().iter().cloned());
            vertices.push(Point(coords));
        }
    }
    Body::new(a.dim + b.dim, vertices).expect("products of valid bodies are valid")
}

/// The standard simplex: hull of the origin and the unit basis points.
pub fn standard_simplex(n: usize) -> Result<Body> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut vertices = vec![Point::origin(n)];
    for i in 0..n {
        let mut coords = vec![Rat::zero(); n];
        coords[i] = Rat::one();
        vertices.push(Point(coords));
    }
    Body::new(n, vertices)
}

/// The standard simplex with coordinate `i` scaled by `lambda[i]`; the image
/// of the standard simplex under `Diag(λ_1, …, λ_n)`.
pub fn diag_simplex(lambda: &[Rat]) -> Result<Body> {
    if lambda.is_empty() {
        return Err(Error::EmptyLambda);
    }
    let n = lambda.len();
    let mut vertices = vec![Point::origin(n)];
    for (i, l) in lambda.iter().enumerate() {
        if !l.is_positive() {
            return Err(Error::NonPositiveParameter {
                name: "lambda",
                value: l.clone(),
            });
        }
        let mut coords = vec![Rat::zero(); n];
        coords[i] = l.clone();
        vertices.push(Point(coords));
    }
    Body::new(n, vertices)
}

/// Axis-aligned box `Π [0, edges[i]]`, a test fixture.
pub fn box_body(edges: &[Rat]) -> Result<Body> {
    if edges.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let n = edges.len();
    if n > hull::MAX_DIM {
        return Err(Error::DimensionBudget {
            dim: n,
            max: hull::MAX_DIM,
        });
    }
    for e in edges {
        if !e.is_positive() {
            return Err(Error::NonPositiveParameter {
                name: "edge",
                value: e.clone(),
            });
        }
    }
    let mut vertices = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let coords = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    edges[i].clone()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        vertices.push(Point(coords));
    }
    Body::new(n, vertices)
}

/// The coefficients of `Vol_n(tP + Q)` with their ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolPoly {
    pub dim: usize,
    pub coeffs: Seq,
}

impl VolPoly {
    /// Evaluates the polynomial at a dilation factor `t`.
    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.eval(t)
    }
}

/// Exact coefficients of `Vol_n(tP + Q)`: the volume is sampled at
/// `t = 0, 1, …, n` and the Vandermonde system is solved exactly.
///
/// The endpoint identities `a_0 = Vol(Q)` and `a_n = Vol(P)` and coefficient
/// nonnegativity are asserted; a failure would mean a defect in the volume
/// engine, not bad input.
pub fn volume_poly(p: &Body, q: &Body) -> Result<VolPoly> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            left: p.dim,
            right: q.dim,
        });
    }
    let n = p.dim;
    let mut values = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let scaled = p.scale(&Rat::integer(t as i64))?;
        values.push(minkowski_sum(&scaled, q)?.volume());
    }
    let coeffs = interp::interpolate_at_integer_nodes(&values);
    assert_eq!(coeffs[0], q.volume(), "constant term must equal Vol(Q)");
    assert_eq!(coeffs[n], p.volume(), "leading term must equal Vol(P)");
    assert!(
        coeffs.iter().all(|c| !c.is_negative()),
        "volume polynomial coefficients must be nonnegative"
    );
    Ok(VolPoly {
        dim: n,
        coeffs: Seq::new(coeffs)?,
    })
}

/// Paper-normalized mixed volume `V(P, …, P, Q, …, Q)` with `k` copies of
/// `P`: equals `k! (n−k)! a_k` for the `volume_poly` coefficient `a_k`.
pub fn mixed_volume(p: &Body, q: &Body, k: usize) -> Result<Rat> {
    let n = p.dim;
    if k > n {
        return Err(Error::MixedVolumeIndex { k, n });
    }
    let poly = volume_poly(p, q)?;
    Ok(Rat::integer(factorial(k as u64) * factorial((n - k) as u64)) * &poly.coeffs[k])
}
