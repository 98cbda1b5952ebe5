//! Finite exact-rational sequences and the logconcavity / ultra-logconcavity
//! / Newton inequality checkers, together with convolution, the positivity
//! perturbation and a seeded ULC generator.

use std::fmt;
use std::ops::Index;

use num::bigint::BigInt;
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{ser::SerializeStruct, Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::shephard::forward_coeffs;

/// Exact binomial coefficient `C(n, k)`, with the usual out-of-range
/// convention: zero when `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> Rat {
    if k < 0 || k as u64 > n {
        return Rat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::integer(acc)
}

/// Which inequality a [`ViolationReport`] speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Logconcave,
    Ulc,
    Newton,
    Nonnegativity,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::Logconcave => "logconcave",
            CheckKind::Ulc => "ulc",
            CheckKind::Newton => "newton",
            CheckKind::Nonnegativity => "nonnegativity",
        };
        f.write_str(s)
    }
}

/// Witness for a failed inequality: the index `i` of Eq-style checks and the
/// two exact sides, with `lhs < rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Outcome of one of the inequality checkers. `violation` is `None` exactly
/// when the property holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport {
    pub kind: CheckKind,
    pub violation: Option<Violation>,
}

impl ViolationReport {
    fn ok(kind: CheckKind) -> Self {
        ViolationReport {
            kind,
            violation: None,
        }
    }

    fn fail(kind: CheckKind, index: usize, lhs: Rat, rhs: Rat) -> Self {
        ViolationReport {
            kind,
            violation: Some(Violation { index, lhs, rhs }),
        }
    }

    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{} holds", self.kind),
            Some(v) => write!(
                f,
                "{} fails at index {}: {} < {}",
                self.kind, v.index, v.lhs, v.rhs
            ),
        }
    }
}

impl Serialize for ViolationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if self.violation.is_some() { 5 } else { 2 };
        let mut st = serializer.serialize_struct("ViolationReport", fields)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("holds", &self.holds())?;
        if let Some(v) = &self.violation {
            st.serialize_field("index", &v.index)?;
            st.serialize_field("lhs", &v.lhs)?;
            st.serialize_field("rhs", &v.rhs)?;
        }
        st.end()
    }
}

/// Finite sequence `(a_0, …, a_m)` of exact rationals; doubles as the
/// coefficient vector of the polynomial `Σ a_i t^i`. Always nonempty.
///
/// The JSON form is an array of rationals, e.g. `["1", "1/2", 3]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rat>", into = "Vec<Rat>")]
pub struct Seq(Vec<Rat>);

impl TryFrom<Vec<Rat>> for Seq {
    type Error = Error;
    fn try_from(coeffs: Vec<Rat>) -> Result<Seq> {
        Seq::new(coeffs)
    }
}

impl From<Seq> for Vec<Rat> {
    fn from(seq: Seq) -> Vec<Rat> {
        seq.0
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Index<usize> for Seq {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Seq {
    pub fn new(coeffs: Vec<Rat>) -> Result<Seq> {
        if coeffs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Seq(coeffs))
    }

    /// Fixture helper. Panics on an empty slice.
    pub fn from_ints(coeffs: &[i64]) -> Seq {
        Seq::new(coeffs.iter().map(|&c| Rat::from(c)).collect()).expect("nonempty")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(Rat::is_positive)
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: &Rat) -> Seq {
        Seq(self.0.iter().map(|c| c * s).collect())
    }

    /// Evaluates `Σ a_i t^i` by Horner's rule.
    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Convolution `c_k = Σ_{i+j=k} a_i b_j`; the coefficient vector of the
    /// product of the two associated polynomials.
    pub fn convolve(&self, other: &Seq) -> Seq {
        let mut out = vec![Rat::zero(); self.len() + other.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Seq(out)
    }

    fn nonneg_violation(&self) -> Option<Violation> {
        self.0.iter().position(Rat::is_negative).map(|i| Violation {
            index: i,
            lhs: self.0[i].clone(),
            rhs: Rat::zero(),
        })
    }

    fn order_check(&self, order: u64) -> Result<()> {
        if order < (self.len() - 1) as u64 {
            Err(Error::OrderTooSmall {
                order,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The Newton-style inequality shared by the ULC and signed checks:
    /// `(a_i / C(d,i))² ≥ (a_{i-1} / C(d,i-1)) (a_{i+1} / C(d,i+1))`.
    fn newton_body(&self, order: u64, kind: CheckKind) -> ViolationReport {
        let norm = |j: usize| &self.0[j] / binom(order, j as i64);
        for i in 1..self.len().saturating_sub(1) {
            let lhs = norm(i).square();
            let rhs = norm(i - 1) * norm(i + 1);
            if lhs < rhs {
                return ViolationReport::fail(kind, i, lhs, rhs);
            }
        }
        ViolationReport::ok(kind)
    }

    /// Logconcavity check: nonnegative entries with `a_i² ≥ a_{i-1} a_{i+1}`
    /// on interior indices. Sequences of length ≤ 2 hold vacuously.
    pub fn is_logconcave(&self) -> ViolationReport {
        if let Some(v) = self.nonneg_violation() {
            return ViolationReport {
                kind: CheckKind::Nonnegativity,
                violation: Some(v),
            };
        }
        for i in 1..self.len().saturating_sub(1) {
            let lhs = self.0[i].square();
            let rhs = &self.0[i - 1] * &self.0[i + 1];
            if lhs < rhs {
                return ViolationReport::fail(CheckKind::Logconcave, i, lhs, rhs);
            }
        }
        ViolationReport::ok(CheckKind::Logconcave)
    }

    /// Ultra-logconcavity of order `d ≥ m`: the termwise quotient by the
    /// binomial row `C(d, i)` is logconcave, and all entries are nonnegative.
    pub fn is_ulc(&self, order: u64) -> Result<ViolationReport> {
        self.order_check(order)?;
        if let Some(v) = self.nonneg_violation() {
            return Ok(ViolationReport {
                kind: CheckKind::Nonnegativity,
                violation: Some(v),
            });
        }
        Ok(self.newton_body(order, CheckKind::Ulc))
    }

    /// Newton inequalities of order `d`: the same inequality as [`is_ulc`]
    /// but with signed entries permitted.
    ///
    /// [`is_ulc`]: Seq::is_ulc
    pub fn newton_check(&self, order: u64) -> Result<ViolationReport> {
        self.order_check(order)?;
        Ok(self.newton_body(order, CheckKind::Newton))
    }

    /// Replaces the zero entries of a nonnegative ULC(`order`) sequence with
    /// small positive values, keeping the sequence ULC(`order`) and moving no
    /// entry by more than `eps`. The original support must be contiguous;
    /// entries on it are returned unchanged.
    ///
    /// Zeros are filled one index at a time, alternating between the left and
    /// right ends of the support; each new entry is `min(eps, half the
    /// largest value admitted by the adjacent inequality)`.
    pub fn perturb_positive(&self, order: u64, eps: &Rat) -> Result<Seq> {
        if !eps.is_positive() {
            return Err(Error::NonPositiveParameter {
                name: "eps",
                value: eps.clone(),
            });
        }
        let report = self.is_ulc(order)?;
        if !report.holds() {
            return Err(Error::NotUlc { order, report });
        }

        let m = self.len() - 1;
        let support: Vec<usize> = (0..=m).filter(|&i| !self.0[i].is_zero()).collect();

        // Targets in fill order, each tagged with the side it extends.
        enum Side {
            Left,
            Right,
        }
        let mut targets: Vec<(usize, Side)> = Vec::new();
        if support.is_empty() {
            targets.extend((0..=m).map(|i| (i, Side::Right)));
        } else {
            let (s, e) = (support[0], support[support.len() - 1]);
            for i in s..=e {
                if self.0[i].is_zero() {
                    return Err(Error::NonContiguousSupport { index: i });
                }
            }
            let mut left = (s as i64) - 1;
            let mut right = e + 1;
            let mut take_left = true;
            while left >= 0 || right <= m {
                if (take_left && left >= 0) || right > m {
                    targets.push((left as usize, Side::Left));
                    left -= 1;
                } else {
                    targets.push((right, Side::Right));
                    right += 1;
                }
                take_left = !take_left;
            }
        }

        let mut out = self.0.clone();
        for (j, side) in targets {
            // Largest value the adjacent inequality admits for out[j], if any
            // neighbour pair constrains it.
            let bound = match side {
                Side::Right if j >= 2 && !out[j - 2].is_zero() => {
                    let prev = &out[j - 1] / binom(order, (j - 1) as i64);
                    let prev2 = &out[j - 2] / binom(order, (j - 2) as i64);
                    Some(binom(order, j as i64) * prev.square() / prev2)
                }
                Side::Left if j + 2 <= m && !out[j + 2].is_zero() => {
                    let next = &out[j + 1] / binom(order, (j + 1) as i64);
                    let next2 = &out[j + 2] / binom(order, (j + 2) as i64);
                    Some(binom(order, j as i64) * next.square() / next2)
                }
                _ => None,
            };
            out[j] = match bound {
                Some(b) => (b / Rat::from(2)).min(eps.clone()),
                None => eps.clone(),
            };
        }

        let result = Seq(out);
        debug_assert!(result.is_ulc(order).map(|r| r.holds()).unwrap_or(false));
        Ok(result)
    }

    /// Deterministic strictly-positive ULC(`order`) sequence of the given
    /// length (at most `order + 1` entries).
    ///
    /// A descending positive λ-vector and a positive scale are drawn from a
    /// ChaCha stream seeded with `seed`; the volume-polynomial forward
    /// formula then yields a full-length ULC(`order`) sequence, which is
    /// truncated and re-checked (prefix truncation drops inequalities, so the
    /// re-check is a guard, not a search).
    pub fn random_ulc(order: u64, len: usize, seed: u64) -> Result<Seq> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        if len as u64 > order + 1 {
            return Err(Error::OrderTooSmall { order, len });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if order == 0 {
            return Seq::new(vec![Rat::integer(rng.random_range(1..=10i64))]);
        }
        for _ in 0..16 {
            let mut lambda: Vec<Rat> = (0..order)
                .map(|_| {
                    Rat::new(rng.random_range(1..=100i64), rng.random_range(1..=100i64))
                        .expect("nonzero denominator")
                })
                .collect();
            lambda.sort_by(|a, b| b.cmp(a));
            let scale = Rat::integer(rng.random_range(1..=10i64));
            let full = forward_coeffs(&lambda)?.scale(&scale);
            let truncated = Seq::new(full.coeffs()[..len].to_vec())?;
            if truncated.is_ulc(order)?.holds() {
                return Ok(truncated);
            }
        }
        unreachable!("prefix truncation preserves ULC")
    }
}
