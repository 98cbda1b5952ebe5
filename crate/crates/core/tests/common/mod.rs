//! Shared test support: an independent exact 2D hull/area oracle and seeded
//! random fixtures. The oracle deliberately shares no code with the volume
//! engine under test.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ulcgeo::{Body, Point, Rat};

/// Convex hull of exact 2D points by Andrew's monotone chain, returned
/// counterclockwise with collinear points dropped.
pub fn hull_2d(points: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    let mut pts: Vec<(Rat, Rat)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    fn cross(o: &(Rat, Rat), a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    }
    let build = |iter: &mut dyn Iterator<Item = &(Rat, Rat)>| {
        let mut chain: Vec<(Rat, Rat)> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && !cross(&chain[chain.len() - 2], &chain[chain.len() - 1], p).is_positive()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain.pop();
        chain
    };
    let mut hull = build(&mut pts.iter());
    hull.extend(build(&mut pts.iter().rev()));
    hull
}

/// Shoelace area of a polygon given in boundary order.
pub fn shoelace(polygon: &[(Rat, Rat)]) -> Rat {
    if polygon.len() < 3 {
        return Rat::zero();
    }
    let mut twice = Rat::zero();
    for i in 0..polygon.len() {
        let (x0, y0) = &polygon[i];
        let (x1, y1) = &polygon[(i + 1) % polygon.len()];
        twice += x0 * y1 - x1 * y0;
    }
    (twice / Rat::from(2)).abs()
}

/// Exact area of the convex hull of arbitrary 2D points.
pub fn polygon_area(points: &[(Rat, Rat)]) -> Rat {
    shoelace(&hull_2d(points))
}

pub fn body_as_pairs(body: &Body) -> Vec<(Rat, Rat)> {
    assert_eq!(body.dim(), 2);
    body.vertices()
        .iter()
        .map(|p| (p[0].clone(), p[1].clone()))
        .collect()
}

/// A random rational with numerator in `lo..=hi` and denominator in
/// `1..=den`.
pub fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rat {
    Rat::from((rng.random_range(lo..=hi), rng.random_range(1..=den)))
}

/// A random body on `points` generating points with small rational
/// coordinates; may be degenerate.
pub fn random_body(rng: &mut ChaCha8Rng, dim: usize, points: usize) -> Body {
    let vertices: Vec<Point> = (0..points)
        .map(|_| Point::new((0..dim).map(|_| random_rat(rng, -8, 8, 6)).collect()))
        .collect();
    Body::new(dim, vertices).expect("valid body")
}

/// A random body rejected and redrawn until its hull is full-dimensional.
pub fn random_full_dim_body(rng: &mut ChaCha8Rng, dim: usize, points: usize) -> Body {
    loop {
        let body = random_body(rng, dim, points);
        if body.volume().is_positive() {
            return body;
        }
    }
}

/// A strictly positive logconcave sequence: consecutive ratios drawn
/// positive and sorted descending, which is exactly logconcavity.
pub fn random_logconcave(rng: &mut ChaCha8Rng, max_extra_len: usize) -> ulcgeo::Seq {
    let mut ratios: Vec<Rat> = (0..rng.random_range(0..=max_extra_len))
        .map(|_| random_rat(rng, 1, 9, 9).abs())
        .collect();
    ratios.sort_by(|a, b| b.cmp(a));
    let mut coeffs = vec![random_rat(rng, 1, 9, 9).abs()];
    for r in &ratios {
        let next = coeffs.last().unwrap() * r;
        coeffs.push(next);
    }
    ulcgeo::Seq::new(coeffs).expect("nonempty")
}
