//! Exact-arithmetic toolkit for ultra-logconcave (ULC) sequences and the
//! convex geometry behind them.
//!
//! The crate has two halves that validate each other:
//!
//! * **Sequences** ([`seq`]): exact logconcavity / ULC / Newton inequality
//!   checkers, convolution, a positivity perturbation and a seeded ULC
//!   generator — all over arbitrary-precision rationals.
//! * **Geometry** ([`geom`]): V-polytopes with Minkowski sums, cartesian
//!   products, dilatation, exact hull volume and the volume polynomial
//!   `Vol_n(tP + Q)`, whose coefficient sequence is ULC(n) by the
//!   Alexandrov–Fenchel inequalities.
//!
//! [`shephard`] connects the two directions: every strictly positive ULC(n)
//! sequence is (up to a positive constant) the volume polynomial of a
//! diagonally scaled simplex against the standard simplex. [`liggett`] uses
//! that bridge to verify the convolution theorem — ULC(l) ⋆ ULC(d) is
//! ULC(l+d) — both combinatorially and geometrically, and [`counterexample`]
//! shows the nonnegativity hypothesis is essential: a signed family
//! satisfying the order-4 Newton inequalities whose self-convolution breaks
//! order 8.
//!
//! Everything is exact; there is no floating point anywhere in the crate.

// Errors carry their exact witnesses (sequences, both inequality sides);
// they are cold and the payload is the point.
#![allow(clippy::result_large_err)]

pub mod counterexample;
mod error;
pub mod geom;
pub mod liggett;
pub mod rat;
pub mod seq;
pub mod shephard;

pub use error::{Error, Result};
pub use geom::{
    box_body, cartesian_product, diag_simplex, minkowski_sum, mixed_volume, standard_simplex,
    volume_poly, Body, Point, VolPoly,
};
pub use rat::Rat;
pub use seq::{binom, CheckKind, Seq, Violation, ViolationReport};
pub use shephard::{forward_coeffs, realize, verify_realization, Realization};

#[cfg(test)]
mod concurrency {
    //! Everything is immutable after construction and free of interior
    //! mutability, so values can be shared across threads freely.

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn public_types_are_send_and_sync() {
        assert_send_sync::<crate::Rat>();
        assert_send_sync::<crate::Seq>();
        assert_send_sync::<crate::ViolationReport>();
        assert_send_sync::<crate::Point>();
        assert_send_sync::<crate::Body>();
        assert_send_sync::<crate::VolPoly>();
        assert_send_sync::<crate::Realization>();
        assert_send_sync::<crate::liggett::TheoremVerdict>();
        assert_send_sync::<crate::liggett::FuzzSummary>();
        assert_send_sync::<crate::counterexample::FamilyPoint>();
        assert_send_sync::<crate::Error>();
    }
}
