//! Realization of strictly positive ULC(n) sequences as volume polynomials
//! of a diagonally scaled simplex against the standard simplex, plus the
//! closed-form forward map for that pair.
//!
//! The forward formula is validated coefficientwise against the exact
//! geometry (see the `forward_formula_matches_geometry` tests and the
//! acceptance suite); the realization direction re-verifies every output
//! through the volume engine before returning it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{diag_simplex, standard_simplex, volume_poly, Body};
use crate::rat::{factorial, Rat};
use crate::seq::{binom, Seq};

/// A realized sequence: bodies `P = Diag(λ)·Δ` and `Q = Δ` whose volume
/// polynomial, times `proportionality`, reproduces the sequence exactly.
/// `λ` is weakly descending and strictly positive.
#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    n: usize,
    lambda: Vec<Rat>,
    proportionality: Rat,
    p: Body,
    q: Body,
}

impl Realization {
    /// Builds the bodies for a λ-vector and a proportionality constant,
    /// validating positivity and descent.
    pub fn new(lambda: Vec<Rat>, proportionality: Rat) -> Result<Realization> {
        if lambda.is_empty() {
            return Err(Error::EmptyLambda);
        }
        for (i, l) in lambda.iter().enumerate() {
            if !l.is_positive() {
                return Err(Error::NonPositiveParameter {
                    name: "lambda",
                    value: l.clone(),
                });
            }
            if i > 0 && lambda[i - 1] < *l {
                return Err(Error::NotDescending { index: i });
            }
        }
        if !proportionality.is_positive() {
            return Err(Error::NonPositiveParameter {
                name: "proportionality",
                value: proportionality,
            });
        }
        let n = lambda.len();
        let p = diag_simplex(&lambda)?;
        let q = standard_simplex(n)?;
        Ok(Realization {
            n,
            lambda,
            proportionality,
            p,
            q,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.lambda
    }

    pub fn proportionality(&self) -> &Rat {
        &self.proportionality
    }

    /// The body pair `(P, Q)`.
    pub fn bodies(&self) -> (&Body, &Body) {
        (&self.p, &self.q)
    }

    /// `proportionality · Vol_n(tP + Q)` coefficients, recomputed through
    /// the exact geometry.
    pub fn recovered_coeffs(&self) -> Seq {
        let poly = volume_poly(&self.p, &self.q).expect("realization bodies share a dimension");
        poly.coeffs.scale(&self.proportionality)
    }
}

/// Closed-form coefficients of `Vol_n(t·Diag(λ)Δ + Δ)` for a descending
/// positive λ: `a_k = C(n,k) · λ_1⋯λ_k / n!`.
///
/// This formula is a derived convenience, not an axiom: it is checked
/// against `volume_poly` by the test suite, and `realize` never trusts it
/// without re-verifying through the geometry.
pub fn forward_coeffs(lambda: &[Rat]) -> Result<Seq> {
    if lambda.is_empty() {
        return Err(Error::EmptyLambda);
    }
    for (i, l) in lambda.iter().enumerate() {
        if !l.is_positive() {
            return Err(Error::NonPositiveParameter {
                name: "lambda",
                value: l.clone(),
            });
        }
        if i > 0 && lambda[i - 1] < *l {
            return Err(Error::NotDescending { index: i });
        }
    }
    let n = lambda.len() as u64;
    let nfact = Rat::integer(factorial(n));
    let mut coeffs = Vec::with_capacity(lambda.len() + 1);
    let mut product = Rat::one();
    coeffs.push(Rat::one() / &nfact);
    for (k, l) in lambda.iter().enumerate() {
        product *= l;
        coeffs.push(binom(n, k as i64 + 1) * &product / &nfact);
    }
    Seq::new(coeffs)
}

/// Realizes a strictly positive ULC(n) sequence (n = length − 1) as a body
/// pair: `λ_k` is the ratio of consecutive binomial-normalized entries and
/// the proportionality constant is `a_0 · n!`. The output is verified
/// against the exact geometry before being returned; the sequence is matched
/// up to that positive constant only — the bodies are never rescaled to
/// absorb it.
pub fn realize(a: &Seq) -> Result<Realization> {
    let n = a.len() - 1;
    if n == 0 {
        return Err(Error::EmptyLambda);
    }
    for (index, value) in a.iter().enumerate() {
        if !value.is_positive() {
            return Err(Error::NotPositive {
                index,
                value: value.clone(),
            });
        }
    }
    let report = a.is_ulc(n as u64)?;
    if !report.holds() {
        return Err(Error::NotUlc {
            order: n as u64,
            report,
        });
    }

    let norm = |k: usize| &a[k] / binom(n as u64, k as i64);
    let lambda: Vec<Rat> = (1..=n).map(|k| norm(k) / norm(k - 1)).collect();
    let proportionality = &a[0] * Rat::integer(factorial(n as u64));
    let realization = Realization::new(lambda, proportionality)?;

    let recovered = realization.recovered_coeffs();
    if recovered != *a {
        return Err(Error::RealizationMismatch {
            expected: a.clone(),
            recovered,
        });
    }
    Ok(realization)
}

/// True iff `proportionality · Vol_n(tP + Q)` equals `a` coefficientwise.
pub fn verify_realization(a: &Seq, realization: &Realization) -> bool {
    realization.recovered_coeffs() == *a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(values: &[(i64, i64)]) -> Vec<Rat> {
        values.iter().map(|&v| Rat::from(v)).collect()
    }

    #[test]
    fn forward_segment() {
        let coeffs = forward_coeffs(&[Rat::from(3)]).unwrap();
        assert_eq!(coeffs, Seq::from_ints(&[1, 3]));
    }

    #[test]
    fn forward_two_dims() {
        let coeffs = forward_coeffs(&rats(&[(2, 1), (1, 1)])).unwrap();
        assert_eq!(
            coeffs,
            Seq::new(vec![Rat::from((1, 2)), Rat::from(2), Rat::one()]).unwrap()
        );
    }

    #[test]
    fn forward_all_ones_is_binomial_row() {
        let coeffs = forward_coeffs(&vec![Rat::one(); 4]).unwrap();
        let expected = Seq::new(
            (0..=4)
                .map(|k| binom(4, k) / Rat::from(24))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(coeffs, expected);
    }

    #[test]
    fn forward_rejects_bad_lambda() {
        assert!(matches!(forward_coeffs(&[]), Err(Error::EmptyLambda)));
        assert!(matches!(
            forward_coeffs(&rats(&[(1, 1), (2, 1)])),
            Err(Error::NotDescending { index: 1 })
        ));
        assert!(matches!(
            forward_coeffs(&[Rat::zero()]),
            Err(Error::NonPositiveParameter { .. })
        ));
    }

    #[test]
    fn realize_recovers_lambda_and_constant() {
        let a = Seq::new(vec![Rat::from((1, 2)), Rat::from(2), Rat::one()]).unwrap();
        let r = realize(&a).unwrap();
        assert_eq!(r.lambda(), rats(&[(2, 1), (1, 1)]).as_slice());
        assert_eq!(r.proportionality(), &Rat::one());
        assert!(verify_realization(&a, &r));
    }

    #[test]
    fn realize_equal_lambdas() {
        let a = Seq::new(vec![Rat::from(3), Rat::one(), Rat::from((1, 12))]).unwrap();
        let r = realize(&a).unwrap();
        assert_eq!(r.lambda(), rats(&[(1, 6), (1, 6)]).as_slice());
        assert_eq!(r.proportionality(), &Rat::from(6));
        assert!(verify_realization(&a, &r));
    }

    #[test]
    fn realize_is_scale_invariant_in_lambda() {
        let a = Seq::new(vec![Rat::from((1, 2)), Rat::from(2), Rat::one()]).unwrap();
        let s = Rat::from((7, 3));
        let scaled = a.scale(&s);
        let r = realize(&a).unwrap();
        let rs = realize(&scaled).unwrap();
        assert_eq!(r.lambda(), rs.lambda());
        assert_eq!(
            rs.proportionality().clone(),
            r.proportionality() * &s
        );
    }

    #[test]
    fn realize_rejects_bad_input() {
        assert!(matches!(
            realize(&Seq::from_ints(&[1, 0, 1])),
            Err(Error::NotPositive { index: 1, .. })
        ));
        assert!(matches!(
            realize(&Seq::from_ints(&[1, 1, 1])),
            Err(Error::NotUlc { order: 2, .. })
        ));
        assert!(matches!(
            realize(&Seq::from_ints(&[5])),
            Err(Error::EmptyLambda)
        ));
    }

    #[test]
    fn verify_detects_tampered_lambda() {
        let a = Seq::new(vec![Rat::from((1, 2)), Rat::from(2), Rat::one()]).unwrap();
        let r = realize(&a).unwrap();
        let mut lambda = r.lambda().to_vec();
        lambda[0] = &lambda[0] + Rat::one();
        let tampered = Realization::new(lambda, r.proportionality().clone()).unwrap();
        assert!(!verify_realization(&a, &tampered));
    }

    #[test]
    fn realization_constructor_rejects_unsorted_lambda() {
        assert!(matches!(
            Realization::new(rats(&[(1, 1), (2, 1)]), Rat::one()),
            Err(Error::NotDescending { index: 1 })
        ));
    }

    #[test]
    fn realize_inverts_forward_coeffs_exactly() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
        for n in 1..=3usize {
            for _ in 0..5 {
                let mut lambda: Vec<Rat> = (0..n)
                    .map(|_| Rat::from((rng.random_range(1..=12i64), rng.random_range(1..=7i64))))
                    .collect();
                lambda.sort_by(|a, b| b.cmp(a));
                let r = realize(&forward_coeffs(&lambda).unwrap()).unwrap();
                assert_eq!(r.lambda(), lambda.as_slice());
                // forward coefficients carry a_0 = 1/n!, so the constant is 1
                assert_eq!(r.proportionality(), &Rat::one());
            }
        }
    }

    /// The derived closed form against the exact geometry, n ≤ 3.
    #[test]
    fn forward_formula_matches_geometry() {
        let lambdas: Vec<Vec<Rat>> = vec![
            rats(&[(3, 1)]),
            rats(&[(1, 2)]),
            rats(&[(2, 1), (1, 1)]),
            rats(&[(5, 3), (5, 3)]),
            rats(&[(7, 2), (1, 3)]),
            rats(&[(3, 1), (2, 1), (1, 1)]),
            rats(&[(9, 4), (3, 2), (1, 7)]),
        ];
        for lambda in lambdas {
            let formula = forward_coeffs(&lambda).unwrap();
            let poly = volume_poly(
                &diag_simplex(&lambda).unwrap(),
                &standard_simplex(lambda.len()).unwrap(),
            )
            .unwrap();
            assert_eq!(formula, poly.coeffs, "lambda {lambda:?}");
        }
    }

    /// The raw formula applied to a non-descending λ is not the volume
    /// polynomial and fails the ULC check, while descending λ passes.
    #[test]
    fn ulc_iff_descending() {
        let descending = rats(&[(3, 1), (2, 1), (1, 2)]);
        let coeffs = forward_coeffs(&descending).unwrap();
        assert!(coeffs.is_ulc(3).unwrap().holds());

        // bypass the constructor's descent validation: evaluate the raw
        // product formula directly
        let unsorted = rats(&[(1, 2), (3, 1), (2, 1)]);
        let n = unsorted.len() as u64;
        let nfact = Rat::integer(factorial(n));
        let mut coeffs = vec![Rat::one() / &nfact];
        let mut product = Rat::one();
        for (k, l) in unsorted.iter().enumerate() {
            product *= l;
            coeffs.push(binom(n, k as i64 + 1) * &product / &nfact);
        }
        let raw = Seq::new(coeffs).unwrap();
        assert!(!raw.is_ulc(3).unwrap().holds());
    }
}
