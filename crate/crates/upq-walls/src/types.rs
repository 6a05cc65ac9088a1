//! Validated domain records: bundle types and curve data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The discrete type t = (p, q, a, b) of a twisted U(p,q)-Higgs bundle:
/// ranks and degrees of the two summands. Zero-rank summands carry zero
/// degree, which makes sub/quotient type arithmetic total.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HiggsType {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

impl HiggsType {
    /// Validate and build a type. With `require_main`, both ranks must be
    /// at least one.
    pub fn validate(p: i64, q: i64, a: i64, b: i64, require_main: bool) -> Result<Self> {
        if p < 0 || q < 0 {
            return Err(Error::Rank(format!("negative rank in ({p},{q},{a},{b})")));
        }
        if p == 0 && q == 0 {
            return Err(Error::Rank("both ranks are zero".into()));
        }
        if require_main && (p == 0 || q == 0) {
            return Err(Error::Rank(format!(
                "main type requires p >= 1 and q >= 1, got ({p},{q})"
            )));
        }
        if p == 0 && a != 0 {
            return Err(Error::Degree(format!("p = 0 forces a = 0, got a = {a}")));
        }
        if q == 0 && b != 0 {
            return Err(Error::Degree(format!("q = 0 forces b = 0, got b = {b}")));
        }
        Ok(HiggsType { p, q, a, b })
    }

    /// Validate as a main type (p, q >= 1).
    pub fn main(p: i64, q: i64, a: i64, b: i64) -> Result<Self> {
        Self::validate(p, q, a, b, true)
    }

    pub fn is_main(&self) -> bool {
        self.p >= 1 && self.q >= 1
    }

    pub fn total_rank(&self) -> i64 {
        self.p + self.q
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &HiggsType) -> HiggsType {
        HiggsType {
            p: self.p + other.p,
            q: self.q + other.q,
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }

    /// Componentwise difference (not validated).
    pub fn minus(&self, other: &HiggsType) -> (i64, i64, i64, i64) {
        (
            self.p - other.p,
            self.q - other.q,
            self.a - other.a,
            self.b - other.b,
        )
    }
}

impl fmt::Display for HiggsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.p, self.q, self.a, self.b)
    }
}

impl fmt::Debug for HiggsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Genus and twisting degree of the base curve. `canonical` marks L = K,
/// in which case deg(L) = 2g - 2 is enforced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CurveData {
    pub genus: i64,
    pub deg_l: i64,
    pub canonical: bool,
}

impl CurveData {
    pub fn new(genus: i64, deg_l: i64, canonical: bool) -> Result<Self> {
        if genus < 0 {
            return Err(Error::Curve(format!("negative genus {genus}")));
        }
        if canonical && deg_l != 2 * genus - 2 {
            return Err(Error::Curve(format!(
                "canonical twist requires deg(L) = 2g-2 = {}, got {deg_l}",
                2 * genus - 2
            )));
        }
        Ok(CurveData {
            genus,
            deg_l,
            canonical,
        })
    }

    /// The canonical twist L = K of a genus-g curve.
    pub fn canonical(genus: i64) -> Result<Self> {
        Self::new(genus, 2 * genus - 2, true)
    }

    /// Non-canonical twist of given degree.
    pub fn twisted(genus: i64, deg_l: i64) -> Result<Self> {
        Self::new(genus, deg_l, false)
    }
}
