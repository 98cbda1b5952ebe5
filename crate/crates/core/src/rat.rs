//! Exact rational scalars.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in canonical form: positive denominator, coprime to
/// the numerator. This is the scalar for every coefficient, coordinate and
/// volume in the crate; no floating point appears anywhere.
///
/// The textual form is `"p/q"` (or just `"p"` for integers), both in
/// [`Display`](fmt::Display) and in the JSON file formats.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom`, reducing to canonical form. Rejects a zero
    /// denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Rat> {
        let numer = numer.into();
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::InvalidRational {
                input: format!("{numer}/{denom}"),
                reason: "denominator is zero",
            });
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn integer(value: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero, like integer division.
    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, exp: i32) -> Rat {
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = Rat(&acc.0 * &self.0);
        }
        acc
    }

}

/// `n!` as an arbitrary-precision integer.
pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

impl From<i64> for Rat {
    fn from(value: i64) -> Rat {
        Rat::integer(value)
    }
}

/// Convenience for fixtures: `Rat::from((p, q))`. Panics if `q == 0`.
impl From<(i64, i64)> for Rat {
    fn from((numer, denom): (i64, i64)) -> Rat {
        Rat::new(numer, denom).expect("nonzero denominator")
    }
}

impl From<BigInt> for Rat {
    fn from(value: BigInt) -> Rat {
        Rat::integer(value)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let invalid = |reason| Error::InvalidRational {
            input: s.to_string(),
            reason,
        };
        let mut parts = s.split('/');
        let numer = parts
            .next()
            .filter(|p| !p.is_empty())
            .ok_or_else(|| invalid("missing numerator"))?;
        let numer: BigInt = numer.parse().map_err(|_| invalid("malformed numerator"))?;
        let denom: BigInt = match parts.next() {
            None => BigInt::one(),
            Some(d) => d.parse().map_err(|_| invalid("malformed denominator"))?,
        };
        if parts.next().is_some() {
            return Err(invalid("more than one '/'"));
        }
        if denom.is_zero() {
            return Err(invalid("denominator is zero"));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Rat, D::Error> {
        struct RatVisitor;

        impl de::Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
                Ok(Rat::integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
                Ok(Rat::integer(BigInt::from(v)))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

macro_rules! impl_assign {
    ($trait:ident, $method:ident, $op:ident) => {
        impl $trait for Rat {
            fn $method(&mut self, rhs: Rat) {
                *self = std::mem::replace(self, Rat::zero()).$op(rhs);
            }
        }
        impl $trait<&Rat> for Rat {
            fn $method(&mut self, rhs: &Rat) {
                *self = std::mem::replace(self, Rat::zero()).$op(rhs);
            }
        }
    };
}

impl_assign!(AddAssign, add_assign, add);
impl_assign!(SubAssign, sub_assign, sub);
impl_assign!(MulAssign, mul_assign, mul);
impl_assign!(DivAssign, div_assign, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl One for Rat {
    fn one() -> Rat {
        Rat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "5", "-7", "1/2", "-3/4", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn parse_canonicalizes() {
        let r: Rat = "4/6".parse().unwrap();
        assert_eq!(r, Rat::from((2, 3)));
        assert_eq!(r.to_string(), "2/3");
        // negative denominators move the sign to the numerator
        let r: Rat = "1/-2".parse().unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denom().is_positive());
    }

    #[test]
    fn parse_rejects_bad_input() {
        for s in ["", "/2", "1/", "1/0", "1.5", "1/2/3", "a", " 1"] {
            assert!(s.parse::<Rat>().is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rat::from((1, 3));
        let sum = &third + &third + &third;
        assert_eq!(sum, Rat::one());
        assert_eq!(Rat::from((1, 2)) * Rat::from((2, 5)), Rat::from((1, 5)));
        assert_eq!(Rat::from((7, 2)).pow(2), Rat::from((49, 4)));
        assert_eq!(Rat::from((-2, 3)).abs(), Rat::from((2, 3)));
    }

    #[test]
    fn serde_accepts_strings_and_integers() {
        let r: Rat = serde_json::from_str("\"3/4\"").unwrap();
        assert_eq!(r, Rat::from((3, 4)));
        let r: Rat = serde_json::from_str("42").unwrap();
        assert_eq!(r, Rat::from(42));
        assert!(serde_json::from_str::<Rat>("\"1/0\"").is_err());
        assert!(serde_json::from_str::<Rat>("1.5").is_err());
        assert_eq!(serde_json::to_string(&Rat::from((3, 4))).unwrap(), "\"3/4\"");
    }
}
