//! Intervals on the extended rational line.
//!
//! Endpoints may be infinite; infinite endpoints are always open.

use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// One end of an extended interval.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Endpoint::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Endpoint::Finite(_))
    }
}

/// An interval over the extended rational line with explicit endpoint
/// closedness. Infinite endpoints are always open.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtendedInterval {
    pub lower: Endpoint,
    pub upper: Endpoint,
    pub lower_closed: bool,
    pub upper_closed: bool,
}

impl ExtendedInterval {
    pub fn new(lower: Endpoint, upper: Endpoint, lower_closed: bool, upper_closed: bool) -> Self {
        let lower_closed = lower_closed && lower.is_finite();
        let upper_closed = upper_closed && upper.is_finite();
        ExtendedInterval {
            lower,
            upper,
            lower_closed,
            upper_closed,
        }
    }

    /// Closed interval `[lo, hi]`.
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), true, true)
    }

    /// Open interval `(lo, hi)`.
    pub fn open(lo: Rational, hi: Rational) -> Self {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), false, false)
    }

    /// Half-open interval `[lo, hi)`.
    pub fn closed_open(lo: Rational, hi: Rational) -> Self {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), true, false)
    }

    /// Half-open interval `(lo, hi]`.
    pub fn open_closed(lo: Rational, hi: Rational) -> Self {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), false, true)
    }

    /// The whole extended line `(-inf, +inf)`.
    pub fn all() -> Self {
        Self::new(Endpoint::NegInf, Endpoint::PosInf, false, false)
    }

    /// The single point `[x, x]`.
    pub fn point(x: Rational) -> Self {
        Self::closed(x.clone(), x)
    }

    /// `[lo, +inf)` shape, i.e. closed at the finite end.
    pub fn at_least(lo: Rational) -> Self {
        Self::new(Endpoint::Finite(lo), Endpoint::PosInf, true, false)
    }

    /// `(-inf, hi]`.
    pub fn at_most(hi: Rational) -> Self {
        Self::new(Endpoint::NegInf, Endpoint::Finite(hi), false, true)
    }

    pub fn is_empty(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Endpoint::Finite(lo), Endpoint::Finite(hi)) => {
                lo > hi || (lo == hi && !(self.lower_closed && self.upper_closed))
            }
            (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => true,
            _ => false,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let lower_ok = match &self.lower {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Finite(lo) => {
                if self.lower_closed {
                    lo <= x
                } else {
                    lo < x
                }
            }
        };
        let upper_ok = match &self.upper {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Finite(hi) => {
                if self.upper_closed {
                    x <= hi
                } else {
                    x < hi
                }
            }
        };
        lower_ok && upper_ok
    }

    pub fn is_finite(&self) -> bool {
        self.lower.is_finite() && self.upper.is_finite()
    }

    pub fn intersect(&self, other: &ExtendedInterval) -> ExtendedInterval {
        let (lower, lower_closed) = max_lower(
            (&self.lower, self.lower_closed),
            (&other.lower, other.lower_closed),
        );
        let (upper, upper_closed) = min_upper(
            (&self.upper, self.upper_closed),
            (&other.upper, other.upper_closed),
        );
        ExtendedInterval::new(lower.clone(), upper.clone(), lower_closed, upper_closed)
    }

    /// True when `self` and `other` overlap or share a closed endpoint, so
    /// that their union is a single interval.
    pub fn touches(&self, other: &ExtendedInterval) -> bool {
        if self.is_empty() || other.is_empty() {
            return false;
        }
        let meet = self.intersect(other);
        if !meet.is_empty() {
            return true;
        }
        // Adjacent with at least one closed side at the shared point.
        let adjacent = |a: &ExtendedInterval, b: &ExtendedInterval| match (&a.upper, &b.lower) {
            (Endpoint::Finite(x), Endpoint::Finite(y)) => {
                x == y && (a.upper_closed || b.lower_closed)
            }
            _ => false,
        };
        adjacent(self, other) || adjacent(other, self)
    }

    /// Union with `other`, assuming `touches`.
    fn merge(&self, other: &ExtendedInterval) -> ExtendedInterval {
        let (lower, lower_closed) = min_lower(
            (&self.lower, self.lower_closed),
            (&other.lower, other.lower_closed),
        );
        let (upper, upper_closed) = max_upper(
            (&self.upper, self.upper_closed),
            (&other.upper, other.upper_closed),
        );
        ExtendedInterval::new(lower.clone(), upper.clone(), lower_closed, upper_closed)
    }
}

fn cmp_lower(a: (&Endpoint, bool), b: (&Endpoint, bool)) -> std::cmp::Ordering {
    // Lower bounds: closed sorts before open at the same point.
    a.0.cmp(b.0).then_with(|| b.1.cmp(&a.1))
}

fn cmp_upper(a: (&Endpoint, bool), b: (&Endpoint, bool)) -> std::cmp::Ordering {
    // Upper bounds: open sorts before closed at the same point.
    a.0.cmp(b.0).then_with(|| a.1.cmp(&b.1))
}

fn max_lower<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_lower(a, b).is_ge() {
        a
    } else {
        b
    }
}

fn min_lower<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_lower(a, b).is_le() {
        a
    } else {
        b
    }
}

fn max_upper<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_upper(a, b).is_ge() {
        a
    } else {
        b
    }
}

fn min_upper<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_upper(a, b).is_le() {
        a
    } else {
        b
    }
}

/// Merge a collection of intervals into a sorted list of disjoint intervals.
pub fn merge_union(intervals: Vec<ExtendedInterval>) -> Vec<ExtendedInterval> {
    let mut items: Vec<ExtendedInterval> = intervals.into_iter().filter(|i| !i.is_empty()).collect();
    items.sort_by(|a, b| {
        cmp_lower((&a.lower, a.lower_closed), (&b.lower, b.lower_closed))
            .then_with(|| cmp_upper((&a.upper, a.upper_closed), (&b.upper, b.upper_closed)))
    });
    let mut out: Vec<ExtendedInterval> = Vec::new();
    for item in items {
        match out.last_mut() {
            Some(last) if last.touches(&item) => {
                *last = last.merge(&item);
            }
            _ => out.push(item),
        }
    }
    out
}

impl fmt::Display for ExtendedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = match &self.lower {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "+inf".to_string(),
            Endpoint::Finite(r) => r.to_string(),
        };
        let hi = match &self.upper {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "+inf".to_string(),
            Endpoint::Finite(r) => r.to_string(),
        };
        let lb = if self.lower_closed { '[' } else { '(' };
        let ub = if self.upper_closed { ']' } else { ')' };
        write!(f, "{lb}{lo}, {hi}{ub}")
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Endpoint::NegInf => serializer.serialize_str("-inf"),
            Endpoint::PosInf => serializer.serialize_str("+inf"),
            Endpoint::Finite(r) => r.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Endpoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        match s.as_str() {
            "-inf" => Ok(Endpoint::NegInf),
            "+inf" => Ok(Endpoint::PosInf),
            other => other
                .parse::<Rational>()
                .map(Endpoint::Finite)
                .map_err(DeError::custom),
        }
    }
}

impl Serialize for ExtendedInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ExtendedInterval", 4)?;
        st.serialize_field("lo", &self.lower)?;
        st.serialize_field("hi", &self.upper)?;
        st.serialize_field("lo_closed", &self.lower_closed)?;
        st.serialize_field("hi_closed", &self.upper_closed)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExtendedInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lo: Endpoint,
            hi: Endpoint,
            lo_closed: bool,
            hi_closed: bool,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(ExtendedInterval::new(raw.lo, raw.hi, raw.lo_closed, raw.hi_closed))
    }
}
