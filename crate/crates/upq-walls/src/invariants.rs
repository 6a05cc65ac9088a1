//! Closed-form invariants of types: slopes, Toledo invariant, Euler
//! characteristics, expected dimension, Milnor–Wood feasibility, symmetry
//! transforms, and genericity tests.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::rational::{rint, Rational};
use crate::types::{CurveData, HiggsType};

/// Slope μ(t) = (a+b)/(p+q).
pub fn mu(t: &HiggsType) -> Rational {
    Rational::new(t.a + t.b, t.p + t.q)
}

/// α-slope μ_α(t) = μ(t) + α·p/(p+q).
pub fn mu_alpha(t: &HiggsType, alpha: &Rational) -> Rational {
    mu(t) + alpha * &Rational::new(t.p, t.p + t.q)
}

/// Toledo invariant τ(t) = 2(qa − pb)/(p+q).
pub fn toledo(t: &HiggsType) -> Rational {
    Rational::new(2 * (t.q * t.a - t.p * t.b), t.p + t.q)
}

/// Euler characteristic of the two-term deformation complex between an
/// ordered pair of types:
///
///   χ(t′,t) = (1−g)(p′p + q′q − p′q − q′p) + (q′−p′)(b−a) + (q−p)(a′−b′)
///             − (pq′ + p′q)·deg(L).
///
/// Zero-rank types are allowed in either slot.
pub fn chi(t_sub: &HiggsType, t: &HiggsType, c: &CurveData) -> i64 {
    let (p1, q1, a1, b1) = (t_sub.p, t_sub.q, t_sub.a, t_sub.b);
    let (p, q, a, b) = (t.p, t.q, t.a, t.b);
    (1 - c.genus) * (p1 * p + q1 * q - p1 * q - q1 * p)
        + (q1 - p1) * (b - a)
        + (q - p) * (a1 - b1)
        - (p * q1 + p1 * q) * c.deg_l
}

/// Expected dimension of the smooth moduli space:
/// 1 − χ(t,t) = (g−1)(q−p)² + 2pq·deg(L) + 1.
pub fn expected_dimension(t: &HiggsType, c: &CurveData) -> i64 {
    1 - chi(t, t, c)
}

/// Which branch of the upper Toledo bound applies at a given α.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum UpperRegime {
    AboveMinusDegL,
    AtOrBelowMinusDegL,
}

/// Which branch of the lower Toledo bound applies at a given α.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum LowerRegime {
    BelowDegL,
    AtOrAboveDegL,
}

/// Interval of Toledo values not excluded at parameter α. May be empty
/// (tau_min > tau_max), signalling infeasibility of the whole rank pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MwInterval {
    pub tau_min: Rational,
    pub tau_max: Rational,
    pub regime_upper: UpperRegime,
    pub regime_lower: LowerRegime,
}

impl MwInterval {
    pub fn contains(&self, tau: &Rational) -> bool {
        &self.tau_min <= tau && tau <= &self.tau_max
    }

    pub fn is_empty(&self) -> bool {
        self.tau_min > self.tau_max
    }
}

/// Toledo bounds at parameter α for ranks (p,q), both at least one.
///
/// Upper bound: min{p,q}(deg L − α|p−q|/(p+q)) when α > −deg L, and
/// −α·2pq/(p+q) otherwise; lower bound mirrored at deg L. The two branches
/// agree in value at α = ∓deg L, so the boundary assignment is value-neutral.
pub fn mw_interval(p: i64, q: i64, alpha: &Rational, c: &CurveData) -> MwInterval {
    assert!(p >= 1 && q >= 1, "mw_interval needs p, q >= 1");
    let dl = rint(c.deg_l);
    let n = p + q;
    let m = rint(p.min(q));
    let skew = Rational::new((p - q).abs(), n);
    let cross = Rational::new(2 * p * q, n);

    let (tau_max, regime_upper) = if alpha > &(-&dl) {
        (&m * &(&dl - &(alpha * &skew)), UpperRegime::AboveMinusDegL)
    } else {
        (-(alpha * &cross), UpperRegime::AtOrBelowMinusDegL)
    };
    let (tau_min, regime_lower) = if alpha < &dl {
        (&m * &(-(alpha * &skew) - &dl), LowerRegime::BelowDegL)
    } else {
        (-(alpha * &cross), LowerRegime::AtOrAboveDegL)
    };
    MwInterval {
        tau_min,
        tau_max,
        regime_upper,
        regime_lower,
    }
}

/// Necessary condition for α-semistable objects of type t to exist:
/// τ(t) within the Milnor–Wood bounds at α.
pub fn mw_feasible(t: &HiggsType, alpha: &Rational, c: &CurveData) -> bool {
    mw_interval(t.p, t.q, alpha, c).contains(&toledo(t))
}

/// Type of the dual object: (p,q,−a,−b). α-stability of the dual is
/// (−α)-stability of the original.
pub fn dual_type(t: &HiggsType) -> HiggsType {
    HiggsType {
        p: t.p,
        q: t.q,
        a: -t.a,
        b: -t.b,
    }
}

/// Type of the summand swap: (q,p,b,a). α-stability corresponds to
/// (−α)-stability of the original.
pub fn sigma_type(t: &HiggsType) -> HiggsType {
    HiggsType {
        p: t.q,
        q: t.p,
        a: t.b,
        b: t.a,
    }
}

/// Coprimality facts controlling whether α-independent strictly
/// semistable objects can exist for the type.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenericityFlags {
    pub coprime_rank_sum_exists_m: bool,
    pub coprime_pq: bool,
    pub alpha_independent_possible: bool,
}

/// Scan one residue period: gcd(p+q, a+b−mp) depends only on
/// (a+b−mp) mod (p+q), so m ∈ [0, p+q) is exhaustive.
pub fn genericity(t: &HiggsType) -> GenericityFlags {
    let n = t.p + t.q;
    let coprime_rank_sum_exists_m =
        (0..n).any(|m| n.gcd(&(t.a + t.b - m * t.p)) == 1);
    let coprime_pq = t.p.gcd(&t.q) == 1;
    GenericityFlags {
        coprime_rank_sum_exists_m,
        coprime_pq,
        alpha_independent_possible: !(coprime_rank_sum_exists_m || (coprime_pq && t.p != t.q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn t(p: i64, q: i64, a: i64, b: i64) -> HiggsType {
        HiggsType { p, q, a, b }
    }

    fn c22() -> CurveData {
        CurveData::canonical(2).unwrap()
    }

    #[test]
    fn slopes() {
        assert_eq!(mu(&t(1, 1, 0, 0)), rint(0));
        assert_eq!(mu(&t(3, 2, 0, 2)), rat(2, 5));
        assert_eq!(mu(&t(2, 1, 0, -1)), rat(-1, 3));
        assert_eq!(mu_alpha(&t(3, 2, 0, 2), &rat(1, 6)), rat(1, 2));
        assert_eq!(mu_alpha(&t(1, 1, 0, 0), &rint(0)), rint(0));
        assert_eq!(mu_alpha(&t(1, 1, 0, 0), &rint(2)), rint(1));
    }

    #[test]
    fn toledo_values() {
        assert_eq!(toledo(&t(3, 2, 0, 2)), rat(-12, 5));
        assert_eq!(toledo(&t(2, 2, 3, 3)), rint(0));
        assert_eq!(toledo(&t(2, 1, 0, -1)), rat(4, 3));
    }

    #[test]
    fn chi_values() {
        let c = c22();
        assert_eq!(chi(&t(3, 2, 0, 2), &t(3, 2, 0, 2), &c), -25);
        assert_eq!(chi(&t(1, 0, 0, 0), &t(2, 1, 0, 1), &c), -4);
        let c10 = CurveData::twisted(1, 0).unwrap();
        assert_eq!(chi(&t(1, 1, 0, 0), &t(1, 1, 0, 0), &c10), 0);
    }

    #[test]
    fn dimensions() {
        let c = c22();
        assert_eq!(expected_dimension(&t(3, 2, 0, 2), &c), 26);
        assert_eq!(expected_dimension(&t(2, 1, 0, 1), &c), 10);
        assert_eq!(expected_dimension(&t(1, 1, 0, 0), &c), 5);
    }

    #[test]
    fn mw_intervals() {
        let c = c22();
        let i0 = mw_interval(2, 1, &rint(0), &c);
        assert_eq!((i0.tau_min.clone(), i0.tau_max.clone()), (rint(-2), rint(2)));

        let im3 = mw_interval(2, 1, &rint(-3), &c);
        assert_eq!((im3.tau_min, im3.tau_max), (rint(-1), rint(4)));
        assert_eq!(im3.regime_upper, UpperRegime::AtOrBelowMinusDegL);
        assert_eq!(im3.regime_lower, LowerRegime::BelowDegL);

        let i2 = mw_interval(2, 1, &rint(2), &c);
        assert_eq!((i2.tau_min, i2.tau_max), (rat(-8, 3), rat(4, 3)));
        assert_eq!(i2.regime_upper, UpperRegime::AboveMinusDegL);
        assert_eq!(i2.regime_lower, LowerRegime::AtOrAboveDegL);
    }

    #[test]
    fn mw_feasibility() {
        let c = c22();
        assert!(mw_feasible(&t(3, 2, 0, 2), &rint(0), &c));
        assert!(!mw_feasible(&t(2, 1, 6, -1), &rint(0), &c));
        assert!(mw_feasible(&t(1, 1, 0, 0), &rint(0), &c));
    }

    #[test]
    fn transforms() {
        assert_eq!(dual_type(&t(3, 2, 0, 2)), t(3, 2, 0, -2));
        assert_eq!(dual_type(&t(2, 1, 0, 1)), t(2, 1, 0, -1));
        assert_eq!(dual_type(&dual_type(&t(5, 3, -4, 7))), t(5, 3, -4, 7));
        assert_eq!(sigma_type(&t(3, 2, 0, 2)), t(2, 3, 2, 0));
        assert_eq!(sigma_type(&t(2, 1, 0, 1)), t(1, 2, 1, 0));
        assert_eq!(sigma_type(&sigma_type(&t(4, 1, 2, -3))), t(4, 1, 2, -3));
    }

    #[test]
    fn genericity_flags() {
        let g = genericity(&t(2, 1, 0, 1));
        assert!(g.coprime_pq);
        assert!(!g.alpha_independent_possible);

        let g = genericity(&t(2, 2, 1, 0));
        assert!(g.coprime_rank_sum_exists_m);
        assert!(!g.alpha_independent_possible);

        let g = genericity(&t(2, 2, 0, 0));
        assert!(!g.coprime_rank_sum_exists_m);
        assert!(g.alpha_independent_possible);
    }
}
