//! Geometry behaviour against an independent 2D oracle, hand-computed
//! fixtures, and the exact-arithmetic invariants of the volume engine.

mod common;

use std::collections::HashSet;

use common::{body_as_pairs, hull_2d, polygon_area, random_body, random_full_dim_body, random_rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ulcgeo::{
    box_body, cartesian_product, diag_simplex, minkowski_sum, mixed_volume, standard_simplex,
    volume_poly, Body, Error, Point, Rat, Seq,
};

fn segment(a: i64, b: i64) -> Body {
    Body::new(1, vec![Point::from_ints(&[a]), Point::from_ints(&[b])]).unwrap()
}

fn unit_square() -> Body {
    box_body(&[Rat::one(), Rat::one()]).unwrap()
}

fn rats(values: &[(i64, i64)]) -> Vec<Rat> {
    values.iter().map(|&v| Rat::from(v)).collect()
}

#[test]
fn scaling_examples() {
    let seg = segment(0, 1);
    let tripled = seg.scale(&Rat::from(3)).unwrap();
    assert_eq!(tripled.volume(), Rat::from(3));

    let collapsed = seg.scale(&Rat::zero()).unwrap();
    assert_eq!(collapsed.vertices().len(), 1);
    assert_eq!(collapsed.volume(), Rat::zero());

    assert_eq!(seg.scale(&Rat::one()).unwrap(), seg);
    assert!(matches!(
        seg.scale(&Rat::from(-1)),
        Err(Error::NegativeScale { .. })
    ));
}

#[test]
fn minkowski_sum_examples() {
    let sum = minkowski_sum(&segment(0, 1), &segment(0, 1)).unwrap();
    assert_eq!(sum.volume(), Rat::from(2));

    // adding a single point translates, leaving the volume unchanged
    let square = unit_square();
    let shift = Body::point(Point::from_ints(&[5, -3])).unwrap();
    let moved = minkowski_sum(&square, &shift).unwrap();
    assert_eq!(moved.volume(), square.volume());

    assert!(matches!(
        minkowski_sum(&square, &segment(0, 1)),
        Err(Error::DimensionMismatch { left: 2, right: 1 })
    ));
}

/// Standard triangle plus its Diag(2,1) image: the sum's hull vertices and
/// area are checked through the independent monotone-chain/shoelace oracle.
#[test]
fn triangle_sum_hull_matches_oracle() {
    let triangle = standard_simplex(2).unwrap();
    let stretched = diag_simplex(&rats(&[(2, 1), (1, 1)])).unwrap();
    let sum = minkowski_sum(&triangle, &stretched).unwrap();
    assert_eq!(sum.vertices().len(), 8); // 9 pairwise sums, one duplicate

    let hull = hull_2d(&body_as_pairs(&sum));
    let expected: HashSet<(Rat, Rat)> = [(0, 0), (3, 0), (2, 1), (0, 2)]
        .iter()
        .map(|&(x, y)| (Rat::from(x), Rat::from(y)))
        .collect();
    assert_eq!(hull.iter().cloned().collect::<HashSet<_>>(), expected);

    let area = polygon_area(&body_as_pairs(&sum));
    assert_eq!(area, Rat::from((7, 2)));
    assert_eq!(sum.volume(), area);
}

#[test]
fn cartesian_product_examples() {
    let square = cartesian_product(&segment(0, 1), &segment(0, 1));
    assert_eq!(square.dim(), 2);
    assert_eq!(square.volume(), Rat::one());

    let a = random_body(&mut ChaCha8Rng::seed_from_u64(5), 2, 4);
    let b = random_body(&mut ChaCha8Rng::seed_from_u64(6), 3, 5);
    let prod = cartesian_product(&a, &b);
    assert_eq!(prod.dim(), 5);
    assert_eq!(
        prod.vertices().len(),
        a.vertices().len() * b.vertices().len()
    );
}

#[test]
fn product_volume_multiplies() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..8 {
        let a = random_body(&mut rng, 2, 5);
        let b = random_body(&mut rng, 1, 3);
        assert_eq!(
            cartesian_product(&a, &b).volume(),
            a.volume() * b.volume()
        );
    }
}

#[test]
fn volume_fixtures() {
    assert_eq!(standard_simplex(3).unwrap().volume(), Rat::from((1, 6)));
    assert_eq!(unit_square().volume(), Rat::one());
    assert_eq!(box_body(&rats(&[(2, 1), (3, 1)])).unwrap().volume(), Rat::from(6));

    // a segment embedded in the plane is flat: volume zero
    let flat = Body::new(
        2,
        vec![Point::from_ints(&[0, 0]), Point::from_ints(&[2, 2])],
    )
    .unwrap();
    assert_eq!(flat.volume(), Rat::zero());

    // redundant interior points do not change the hull
    let with_interior = Body::new(
        2,
        vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[1, 1]),
            Point::from_ints(&[0, 1]),
            Point::new(rats(&[(1, 2), (1, 2)])),
        ],
    )
    .unwrap();
    assert_eq!(with_interior.volume(), Rat::one());
}

#[test]
fn simplex_fixture_vertices() {
    let simplex = standard_simplex(2).unwrap();
    let expected: HashSet<Point> = vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[0, 1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(
        simplex.vertices().iter().cloned().collect::<HashSet<_>>(),
        expected
    );

    let diag = diag_simplex(&rats(&[(2, 1), (1, 1)])).unwrap();
    assert!(diag
        .vertices()
        .contains(&Point::from_ints(&[2, 0])));

    assert!(standard_simplex(0).is_err());
    assert!(diag_simplex(&[Rat::zero()]).is_err());
    assert!(box_body(&[Rat::from(-2)]).is_err());
}

/// The engine's volume against the independent shoelace oracle on random
/// 2D point sets.
#[test]
fn volume_agrees_with_shoelace_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for points in [3usize, 4, 6, 9, 14] {
        for _ in 0..6 {
            let body = random_body(&mut rng, 2, points);
            assert_eq!(
                body.volume(),
                polygon_area(&body_as_pairs(&body)),
                "vertices {:?}",
                body.vertices()
            );
        }
    }
}

#[test]
fn volume_homogeneity_and_translation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for dim in [1usize, 2, 3] {
        for _ in 0..4 {
            let body = random_body(&mut rng, dim, dim + 4);
            let t = random_rat(&mut rng, 0, 6, 4).abs();
            let scaled = body.scale(&t).unwrap();
            assert_eq!(scaled.volume(), t.pow(dim as i32) * body.volume());

            let shift = Body::point(Point::new(
                (0..dim).map(|_| random_rat(&mut rng, -9, 9, 5)).collect(),
            ))
            .unwrap();
            let moved = minkowski_sum(&body, &shift).unwrap();
            assert_eq!(moved.volume(), body.volume());
        }
    }
}

#[test]
fn volume_poly_examples() {
    let poly = volume_poly(&segment(0, 3), &segment(0, 1)).unwrap();
    assert_eq!(poly.coeffs, Seq::from_ints(&[1, 3]));

    let square = unit_square();
    let poly = volume_poly(&square, &square).unwrap();
    assert_eq!(poly.coeffs, Seq::from_ints(&[1, 2, 1]));

    let poly = volume_poly(
        &diag_simplex(&rats(&[(2, 1), (1, 1)])).unwrap(),
        &standard_simplex(2).unwrap(),
    )
    .unwrap();
    assert_eq!(
        poly.coeffs,
        Seq::new(vec![Rat::from((1, 2)), Rat::from(2), Rat::one()]).unwrap()
    );

    assert!(matches!(
        volume_poly(&unit_square(), &segment(0, 1)),
        Err(Error::DimensionMismatch { .. })
    ));
}

/// Volumes at the interpolation nodes determine the volume at every other
/// dilation factor.
#[test]
fn volume_poly_extrapolates() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for dim in [2usize, 3] {
        let p = random_full_dim_body(&mut rng, dim, dim + 3);
        let q = random_full_dim_body(&mut rng, dim, dim + 3);
        let poly = volume_poly(&p, &q).unwrap();
        for t in [dim as i64 + 1, dim as i64 + 2] {
            let t = Rat::from(t);
            let direct = minkowski_sum(&p.scale(&t).unwrap(), &q).unwrap().volume();
            assert_eq!(poly.eval(&t), direct);
        }
    }
}

#[test]
fn mixed_volume_examples() {
    let square = unit_square();
    assert_eq!(mixed_volume(&square, &square, 1).unwrap(), Rat::from(2));

    // k = 0 recovers n! · Vol(Q)
    let q = random_full_dim_body(&mut ChaCha8Rng::seed_from_u64(31), 3, 6);
    assert_eq!(
        mixed_volume(&standard_simplex(3).unwrap(), &q, 0).unwrap(),
        Rat::from(6) * q.volume()
    );

    // the simplex against itself gives 1 for every k
    let simplex = standard_simplex(3).unwrap();
    for k in 0..=3 {
        assert_eq!(mixed_volume(&simplex, &simplex, k).unwrap(), Rat::one());
    }

    assert!(matches!(
        mixed_volume(&square, &square, 3),
        Err(Error::MixedVolumeIndex { k: 3, n: 2 })
    ));
}

/// In the plane, `V(P, Q) = Vol(P+Q) − Vol(P) − Vol(Q)` exactly.
#[test]
fn mixed_volume_symmetry_in_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..6 {
        let p = random_body(&mut rng, 2, 5);
        let q = random_body(&mut rng, 2, 5);
        let direct = minkowski_sum(&p, &q).unwrap().volume() - p.volume() - q.volume();
        assert_eq!(mixed_volume(&p, &q, 1).unwrap(), direct);
    }
}

/// Alexandrov–Fenchel consequence: volume polynomial coefficients are
/// ULC(n). The acceptance suite runs the bulk version.
#[test]
fn volume_poly_coefficients_are_ulc() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for dim in [2usize, 3] {
        for _ in 0..3 {
            let p = random_full_dim_body(&mut rng, dim, dim + 4);
            let q = random_full_dim_body(&mut rng, dim, dim + 4);
            let poly = volume_poly(&p, &q).unwrap();
            assert!(poly.coeffs.is_ulc(dim as u64).unwrap().holds());
        }
    }
}

/// Shared immutable bodies give identical exact volumes from any thread.
#[test]
fn volume_is_thread_safe() {
    let body = random_full_dim_body(&mut ChaCha8Rng::seed_from_u64(53), 3, 8);
    let expected = body.volume();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| scope.spawn(|| body.volume()))
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), expected);
        }
    });
}

#[test]
fn body_file_format() {
    let body: Body =
        serde_json::from_str(r#"{"dim": 2, "vertices": [["0","0"],["1","0"],["1/2","1/2"]]}"#)
            .unwrap();
    assert_eq!(body.dim(), 2);
    assert_eq!(body.vertices().len(), 3);
    let round: Body = serde_json::from_str(&serde_json::to_string(&body).unwrap()).unwrap();
    assert_eq!(round, body);

    // wrong coordinate count and zero denominators are rejected
    assert!(serde_json::from_str::<Body>(r#"{"dim": 2, "vertices": [["0"]]}"#).is_err());
    assert!(serde_json::from_str::<Body>(r#"{"dim": 1, "vertices": [["1/0"]]}"#).is_err());
    assert!(serde_json::from_str::<Body>(r#"{"dim": 1, "vertices": []}"#).is_err());

    // duplicated vertices collapse on construction
    let dup: Body =
        serde_json::from_str(r#"{"dim": 1, "vertices": [["0"],["1"],["0"]]}"#).unwrap();
    assert_eq!(dup.vertices().len(), 2);
}
