//! Exact arbitrary-precision rational scalars.
//!
//! Every slope, threshold and wall in this crate is a `Rational`; there is
//! no floating point anywhere in the engine. Values are always kept in
//! lowest terms with a positive denominator (guaranteed by the underlying
//! `num-rational` representation).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number, stored in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if this rational is an integer that fits in i64.
    pub fn to_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Largest integer `<= self`.
    pub fn floor_int(&self) -> i64 {
        self.0
            .floor()
            .numer()
            .to_i64()
            .expect("floor exceeds i64 range")
    }

    /// Smallest integer `>= self`.
    pub fn ceil_int(&self) -> i64 {
        self.0
            .ceil()
            .numer()
            .to_i64()
            .expect("ceil exceeds i64 range")
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Shorthand constructor: `rat(2, 7)` is 2/7.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

/// Shorthand constructor for integer values.
pub fn rint(n: i64) -> Rational {
    Rational::from_int(n)
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((self.0).$m(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((&self.0).$m(rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error produced when parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"n"` and `"n/d"` with optional sign on the numerator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError("empty string".into()));
        }
        let (numer_s, denom_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let numer = BigInt::from_str(numer_s)
            .map_err(|_| ParseRationalError(format!("bad numerator in {s:?}")))?;
        let denom = match denom_s {
            Some(d) => BigInt::from_str(d)
                .map_err(|_| ParseRationalError(format!("bad denominator in {s:?}")))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(ParseRationalError(format!("zero denominator in {s:?}")));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(DeError::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_lowest_terms() {
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(-2, 4).to_string(), "-1/2");
        assert_eq!(rat(4, -2).to_string(), "-2");
        assert_eq!(rint(0).to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["1/6", "-12/5", "0", "16", "-4", "22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(Rational::from_str("1/0").is_err());
        assert!(Rational::from_str("").is_err());
        assert!(Rational::from_str("a/b").is_err());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(rat(7, 2).floor_int(), 3);
        assert_eq!(rat(7, 2).ceil_int(), 4);
        assert_eq!(rat(-7, 2).floor_int(), -4);
        assert_eq!(rat(-7, 2).ceil_int(), -3);
        assert_eq!(rint(5).floor_int(), 5);
        assert_eq!(rint(5).ceil_int(), 5);
    }
}
