//! The signed family `(1, a, 0, -b, 1)`: each member satisfies the Newton
//! inequalities of order 4, yet its self-convolution can break the order-8
//! Newton inequality at index 5. The deciding quantity is
//! `c_5² / (c_4 c_6) = 2a² / (b²(1 - ab))` measured against
//! `C(8,5)² / (C(8,4) C(8,6)) = 8/5`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::seq::{binom, Seq};

/// One evaluated family member, all fields exact.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyPoint {
    pub a_param: Rat,
    pub b_param: Rat,
    /// `(1, a, 0, -b, 1)`.
    pub seq: Seq,
    /// Its self-convolution.
    pub conv: Seq,
    /// `c_5² / (c_4 c_6)`, cross-checked against the closed form.
    pub ratio: Rat,
    /// `C(8,5)² / (C(8,4) C(8,6)) = 8/5`.
    pub threshold: Rat,
    /// True iff the order-8 Newton inequality fails at index 5.
    pub violated: bool,
}

/// The order-8 comparison threshold `8/5`.
pub fn newton_threshold() -> Rat {
    binom(8, 5).square() / (binom(8, 4) * binom(8, 6))
}

/// Evaluates the family at `(a, b)`. Requires `a, b > 0` and `ab < 1`, so
/// that `c_4 = 2(1 - ab)` stays positive and the ratio keeps its meaning.
pub fn family_point(a_param: &Rat, b_param: &Rat) -> Result<FamilyPoint> {
    if !a_param.is_positive() {
        return Err(Error::NonPositiveParameter {
            name: "a",
            value: a_param.clone(),
        });
    }
    if !b_param.is_positive() {
        return Err(Error::NonPositiveParameter {
            name: "b",
            value: b_param.clone(),
        });
    }
    let ab = a_param * b_param;
    if ab >= Rat::one() {
        return Err(Error::ParameterDomain {
            reason: format!("need a*b < 1, got {ab}"),
        });
    }

    let seq = Seq::new(vec![
        Rat::one(),
        a_param.clone(),
        Rat::zero(),
        -b_param.clone(),
        Rat::one(),
    ])
    .expect("nonempty");
    let conv = seq.convolve(&seq);

    let direct = conv[5].square() / (&conv[4] * &conv[6]);
    let closed_form =
        Rat::from(2) * a_param.square() / (b_param.square() * (Rat::one() - ab));
    assert_eq!(direct, closed_form, "closed form must match the convolution");

    let threshold = newton_threshold();
    let violated = direct < threshold;
    Ok(FamilyPoint {
        a_param: a_param.clone(),
        b_param: b_param.clone(),
        seq,
        conv,
        ratio: direct,
        threshold,
        violated,
    })
}

/// Walks the family along `a = ε², b = ε`, where the ratio collapses to
/// `2ε² / (1 - ε³)` and shrinks to zero with ε. Each ε must lie in
/// `(0, 1/2]`.
pub fn limit_scan(epsilons: &[Rat]) -> Result<Vec<FamilyPoint>> {
    let half = Rat::from((1, 2));
    epsilons
        .iter()
        .map(|eps| {
            if !eps.is_positive() || *eps > half {
                return Err(Error::ParameterDomain {
                    reason: format!("epsilon must lie in (0, 1/2], got {eps}"),
                });
            }
            family_point(&eps.square(), eps)
        })
        .collect()
}
