//! Exact volume of the convex hull of an integer point set, by exhaustive
//! supporting-hyperplane enumeration and a pulling triangulation.
//!
//! Every candidate hyperplane spanned by an affinely independent `n`-subset
//! of the points is tested for support; each distinct supporting hyperplane
//! is a facet, triangulated recursively inside its own plane (coordinates
//! projected along a nonzero normal component) and coned to the
//! lexicographically smallest point. Volumes are summed as exact integer
//! determinants, so the result is bit-identical however the work is split.
//!
//! Arithmetic runs in `i128` when a conservative magnitude bound holds and
//! in `BigInt` otherwise.

use std::collections::HashSet;

use arrayvec::ArrayVec;
use itertools::Itertools;
use num::bigint::BigInt;
use num::{Integer, Signed, Zero};

/// Maximum ambient dimension the scan supports. Desk-scale by design: the
/// subset enumeration is Θ(m^n) and is not meant for high dimensions.
pub(crate) const MAX_DIM: usize = 12;

/// Integer coordinate scalar. `Clone + Ord` plus ring ops are enough; the
/// two instantiations are `i128` (fast path) and `BigInt` (fallback).
pub(crate) trait Coord: Clone + Ord + std::hash::Hash + Signed + Integer {
    fn to_bigint(&self) -> BigInt;
}

impl Coord for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coord for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Row-major matrix view used by the determinant expansion.
struct Mat<'a, T> {
    data: &'a [T],
    width: usize,
}

impl<T> Mat<'_, T> {
    fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.width + c]
    }
}

type Cols = ArrayVec<usize, MAX_DIM>;

/// Determinant of the square submatrix given by `rows` × `cols`, by Laplace
/// expansion along the first row. Sizes are at most `MAX_DIM`, so recursion
/// depth and the column scratch stay on the stack.
fn det<T: Coord>(m: &Mat<'_, T>, rows: &[usize], cols: &Cols) -> T {
    if rows.len() == 1 {
        return m.at(rows[0], cols[0]).clone();
    }
    if rows.len() == 2 {
        let a = m.at(rows[0], cols[0]).clone() * m.at(rows[1], cols[1]).clone();
        let b = m.at(rows[0], cols[1]).clone() * m.at(rows[1], cols[0]).clone();
        return a - b;
    }
    let mut acc = T::zero();
    let mut positive = true;
    for (k, &c) in cols.iter().enumerate() {
        let lead = m.at(rows[0], c);
        if !lead.is_zero() {
            let mut sub = cols.clone();
            sub.remove(k);
            let minor = det(m, &rows[1..], &sub);
            let term = lead.clone() * minor;
            acc = if positive { acc + term } else { acc - term };
        }
        positive = !positive;
    }
    acc
}

fn dot<T: Coord>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// A supporting hyperplane `⟨normal, x⟩ = offset` together with the indices
/// of the points lying on it, in ascending order.
struct Facet<T> {
    normal: Vec<T>,
    on: Vec<usize>,
}

/// Primitive, sign-normalized hyperplane through the points of `subset`, or
/// `None` when they are affinely dependent. The normal is the generalized
/// cross product of the difference vectors; dividing by the common gcd and
/// fixing the first nonzero component positive makes the representation
/// canonical, so hyperplanes can be deduplicated structurally.
#[allow(clippy::needless_range_loop)]
fn spanned_hyperplane<T: Coord>(pts: &[Vec<T>], subset: &[usize]) -> Option<(Vec<T>, T)> {
    let dim = pts[subset[0]].len();
    let base = &pts[subset[0]];
    let mut diffs: Vec<T> = Vec::with_capacity((subset.len() - 1) * dim);
    for &i in &subset[1..] {
        for c in 0..dim {
            diffs.push(pts[i][c].clone() - base[c].clone());
        }
    }
    let mat = Mat {
        data: &diffs,
        width: dim,
    };
    let rows: Vec<usize> = (0..subset.len() - 1).collect();

    let mut normal = vec![T::zero(); dim];
    let mut positive = true;
    for j in 0..dim {
        let mut cols = Cols::new();
        cols.extend((0..dim).filter(|&c| c != j));
        let minor = det(&mat, &rows, &cols);
        normal[j] = if positive { minor } else { T::zero() - minor };
        positive = !positive;
    }

    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    let mut g = T::zero();
    for v in &normal {
        g = g.gcd(v);
    }
    for v in normal.iter_mut() {
        *v = v.clone() / g.clone();
    }
    if normal
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative())
    {
        for v in normal.iter_mut() {
            *v = T::zero() - v.clone();
        }
    }
    let offset = dot(&normal, base);
    Some((normal, offset))
}

/// All distinct hyperplanes spanned by affinely independent `dim`-subsets
/// that support the full point set. The input must be deduplicated and span
/// an affine subspace of dimension `dim`.
fn supporting_hyperplanes<T: Coord>(pts: &[Vec<T>], dim: usize) -> Vec<Facet<T>> {
    let mut seen: HashSet<(Vec<T>, T)> = HashSet::new();
    let mut facets = Vec::new();
    for subset in (0..pts.len()).combinations(dim) {
        let Some((normal, offset)) = spanned_hyperplane(pts, &subset) else {
            continue;
        };
        let mut above = false;
        let mut below = false;
        let mut on = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let v = dot(&normal, p);
            match v.cmp(&offset) {
                std::cmp::Ordering::Equal => on.push(i),
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        if seen.insert((normal.clone(), offset)) {
            facets.push(Facet { normal, on });
        }
    }
    facets
}

/// Pulling triangulation of the convex hull of a full-dimensional,
/// deduplicated point set: simplices (as index lists of length `dim + 1`)
/// that cover the hull with disjoint interiors. Every facet not containing
/// the lexicographically smallest point is triangulated recursively in
/// projected coordinates and coned to that point.
fn triangulate<T: Coord>(pts: &[Vec<T>], dim: usize) -> Vec<Vec<usize>> {
    if dim == 1 {
        let imin = (0..pts.len()).min_by_key(|&i| &pts[i][0]).expect("nonempty");
        let imax = (0..pts.len()).max_by_key(|&i| &pts[i][0]).expect("nonempty");
        return vec![vec![imin, imax]];
    }
    let apex = (0..pts.len())
        .min_by_key(|&i| &pts[i])
        .expect("nonempty");
    let mut simplices = Vec::new();
    for facet in supporting_hyperplanes(pts, dim) {
        if facet.on.binary_search(&apex).is_ok() {
            continue;
        }
        let drop = facet
            .normal
            .iter()
            .position(|v| !v.is_zero())
            .expect("nonzero normal");
        let projected: Vec<Vec<T>> = facet
            .on
            .iter()
            .map(|&i| {
                pts[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != drop)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        for sub in triangulate(&projected, dim - 1) {
            let mut simplex: Vec<usize> = sub.into_iter().map(|si| facet.on[si]).collect();
            simplex.push(apex);
            simplices.push(simplex);
        }
    }
    simplices
}

/// `dim! ·` volume of the convex hull of a full-dimensional, deduplicated
/// integer point set — an exact integer.
pub(crate) fn hull_volume_times_factorial<T: Coord>(pts: &[Vec<T>], dim: usize) -> BigInt {
    assert!((1..=MAX_DIM).contains(&dim), "dimension out of range");
    let mut total = BigInt::zero();
    for simplex in triangulate(pts, dim) {
        let base = &pts[simplex[dim]];
        let mut diffs: Vec<T> = Vec::with_capacity(dim * dim);
        for &i in &simplex[..dim] {
            for c in 0..dim {
                diffs.push(pts[i][c].clone() - base[c].clone());
            }
        }
        let mat = Mat {
            data: &diffs,
            width: dim,
        };
        let rows: Vec<usize> = (0..dim).collect();
        let mut cols = Cols::new();
        cols.extend(0..dim);
        total += det(&mat, &rows, &cols).to_bigint().abs();
    }
    total
}
