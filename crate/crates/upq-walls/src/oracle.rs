//! Independent brute-force verifiers.
//!
//! Everything here re-derives slope, criticality, Milnor–Wood and range
//! arithmetic directly from the defining inequalities instead of calling
//! the engine modules, so that engine bugs cannot self-validate. Engine
//! functions appear only as the *subjects* of the metamorphic checks.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Endpoint, ExtendedInterval};
use crate::rational::{rint, Rational};
use crate::theorem_engine::Decomposition;
use crate::types::{CurveData, HiggsType};

/// Outcome of a verification suite.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OracleReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mismatch {
    pub description: String,
    pub expected: String,
    pub actual: String,
}

impl OracleReport {
    fn from_parts(checked: usize, mismatches: Vec<Mismatch>) -> Self {
        OracleReport {
            passed: mismatches.is_empty(),
            checked,
            mismatches,
        }
    }

    pub fn merge(mut self, other: OracleReport) -> OracleReport {
        self.checked += other.checked;
        self.mismatches.extend(other.mismatches);
        self.passed = self.mismatches.is_empty();
        self
    }
}

// ---------------------------------------------------------------------
// Local arithmetic, kept deliberately separate from the engine modules.

fn local_mu_alpha(t: &HiggsType, alpha: &Rational) -> Rational {
    (rint(t.a + t.b) + alpha * &rint(t.p)) / rint(t.p + t.q)
}

fn local_toledo(t: &HiggsType) -> Rational {
    Rational::new(2 * (t.q * t.a - t.p * t.b), t.p + t.q)
}

fn local_chi(t1: &HiggsType, t: &HiggsType, c: &CurveData) -> i64 {
    (1 - c.genus) * (t1.p * t.p + t1.q * t.q - t1.p * t.q - t1.q * t.p)
        + (t1.q - t1.p) * (t.b - t.a)
        + (t.q - t.p) * (t1.a - t1.b)
        - (t.p * t1.q + t1.p * t.q) * c.deg_l
}

/// Toledo bounds at α, straight from the case split.
fn local_mw_bounds(p: i64, q: i64, alpha: &Rational, c: &CurveData) -> (Rational, Rational) {
    let dl = rint(c.deg_l);
    let m = rint(p.min(q));
    let skew = Rational::new((p - q).abs(), p + q);
    let cross = Rational::new(2 * p * q, p + q);
    let upper = if alpha > &(-&dl) {
        &m * &(&dl - &(alpha * &skew))
    } else {
        -(alpha * &cross)
    };
    let lower = if alpha < &dl {
        &m * &(-(alpha * &skew) - &dl)
    } else {
        -(alpha * &cross)
    };
    (lower, upper)
}

fn local_mw_feasible(t: &HiggsType, alpha: &Rational, c: &CurveData) -> bool {
    let (lo, hi) = local_mw_bounds(t.p, t.q, alpha, c);
    let tau = local_toledo(t);
    lo <= tau && tau <= hi
}

/// Membership of α in the admissible range, for p ≠ q; trivially true for
/// p = q.
fn local_in_alpha_range(t: &HiggsType, alpha: &Rational, c: &CurveData) -> bool {
    if t.p == t.q {
        return true;
    }
    let diff = Rational::new(t.a, t.p) - Rational::new(t.b, t.q);
    let dl = rint(c.deg_l);
    let gap = rint((t.q - t.p).abs());
    let lead = rint(2 * t.p.max(t.q)) / &gap;
    let span = rint(t.p + t.q) / &gap;
    let lo = if diff > -&dl {
        -(&lead * &diff) - &span * &dl
    } else {
        -&diff
    };
    let hi = if diff < dl {
        -(&lead * &diff) + &span * &dl
    } else {
        -&diff
    };
    &lo <= alpha && alpha <= &hi
}

fn local_valid(p: i64, q: i64, a: i64, b: i64) -> bool {
    p >= 0 && q >= 0 && (p, q) != (0, 0) && (p != 0 || a == 0) && (q != 0 || b == 0)
}

// ---------------------------------------------------------------------

/// Pointwise criticality test: scan all admissible (p′,q′) and check
/// whether the forced degree sum s = n′·μ_α(t) − α·p′ is an integer.
pub fn is_critical(t: &HiggsType, alpha: &Rational) -> (bool, Vec<(i64, i64, i64)>) {
    let mut witnesses = Vec::new();
    let n = t.p + t.q;
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) || p1 * n == t.p * (p1 + q1) {
                continue;
            }
            let n1 = p1 + q1;
            let s = (rint((t.a + t.b) * n1) + alpha * &rint(n1 * t.p - p1 * n)) / rint(n);
            if let Some(s) = s.to_integer() {
                witnesses.push((p1, q1, s));
            }
        }
    }
    (!witnesses.is_empty(), witnesses)
}

/// Scan-based wall recovery: every critical value in the window has a
/// reduced denominator dividing some |p′(p+q) − p·n′|, so scanning those
/// denominators and filtering by `is_critical` is exhaustive.
pub fn walls_by_scan(t: &HiggsType, window: &ExtendedInterval) -> Result<Vec<Rational>> {
    let (lo, hi) = match (&window.lower, &window.upper) {
        (Endpoint::Finite(lo), Endpoint::Finite(hi)) => (lo.clone(), hi.clone()),
        _ => return Err(Error::WindowUnbounded),
    };
    let n = t.p + t.q;
    let mut denoms = BTreeSet::new();
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) {
                continue;
            }
            let d = (p1 * n - t.p * (p1 + q1)).abs();
            if d != 0 {
                denoms.insert(d);
            }
        }
    }
    let mut found = BTreeSet::new();
    for d in denoms {
        let k_lo = (&lo * &rint(d)).ceil_int();
        let k_hi = (&hi * &rint(d)).floor_int();
        for k in k_lo..=k_hi {
            let alpha = Rational::new(k, d);
            if window.contains(&alpha) && is_critical(t, &alpha).0 {
                found.insert(alpha);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Degree radius that makes the brute-force loop provably exhaustive for
/// the filtered decomposition set at α_c.
pub fn required_radius(t: &HiggsType, c: &CurveData, alpha_c: &Rational) -> i64 {
    let mut required: i64 = 0;
    let mut bump = |v: i64| {
        if v.abs() > required {
            required = v.abs();
        }
    };
    bump(t.a);
    bump(t.b);
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) || (p1, q1) == (t.p, t.q) {
                continue;
            }
            let n1 = p1 + q1;
            let s1_rat = rint(n1) * &local_mu_alpha(t, alpha_c) - alpha_c * &rint(p1);
            let Some(s1) = s1_rat.to_integer() else {
                continue;
            };
            bump(s1);
            if p1 >= 1 && q1 >= 1 {
                // τ(t1) = 2a1 − 2·p1·s1/n1 must satisfy the Milnor–Wood
                // bounds, which caps |a1| and thus |b1| = |s1 − a1|.
                let (lo, hi) = local_mw_bounds(p1, q1, alpha_c, c);
                let base = Rational::new(2 * p1 * s1, n1);
                let a_lo = ((&lo + &base) / rint(2)).ceil_int();
                let a_hi = ((&hi + &base) / rint(2)).floor_int();
                if a_lo <= a_hi {
                    bump(a_lo);
                    bump(a_hi);
                    bump(s1 - a_lo);
                    bump(s1 - a_hi);
                }
            }
        }
    }
    required
}

/// Exhaustive quadruple loop over rank and degree splits with
/// |a₁|,|b₁| ≤ degree_radius, applying the same validity, slope,
/// Milnor–Wood and range filters as the engine — but via the local
/// re-implementations above.
pub fn decompositions_bruteforce(
    t: &HiggsType,
    c: &CurveData,
    alpha_c: &Rational,
    degree_radius: i64,
) -> Result<Vec<Decomposition>> {
    if c.deg_l < 1 {
        return Err(Error::DegLNonpositive(c.deg_l));
    }
    let required = required_radius(t, c, alpha_c);
    if degree_radius < required {
        return Err(Error::RadiusTooSmall {
            radius: degree_radius,
            required,
        });
    }
    let slope = local_mu_alpha(t, alpha_c);
    let part_ok = |part: &HiggsType| {
        if part.p < 1 || part.q < 1 {
            return true;
        }
        local_mw_feasible(part, alpha_c, c)
            && (part.p == part.q || local_in_alpha_range(part, alpha_c, c))
    };
    let mut out = Vec::new();
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) || (p1, q1) == (t.p, t.q) {
                continue;
            }
            for a1 in -degree_radius..=degree_radius {
                for b1 in -degree_radius..=degree_radius {
                    let (p2, q2, a2, b2) = (t.p - p1, t.q - q1, t.a - a1, t.b - b1);
                    if !local_valid(p1, q1, a1, b1) || !local_valid(p2, q2, a2, b2) {
                        continue;
                    }
                    let t1 = HiggsType { p: p1, q: q1, a: a1, b: b1 };
                    let t2 = HiggsType { p: p2, q: q2, a: a2, b: b2 };
                    if t1 > t2 {
                        continue;
                    }
                    if local_mu_alpha(&t1, alpha_c) != slope {
                        continue;
                    }
                    if !part_ok(&t1) || !part_ok(&t2) {
                        continue;
                    }
                    let same_sign_ranks = (t1.p - t1.q >= 0 && t2.p - t2.q >= 0)
                        || (t1.p - t1.q <= 0 && t2.p - t2.q <= 0);
                    out.push(Decomposition {
                        chi_12: local_chi(&t2, &t1, c),
                        chi_21: local_chi(&t1, &t2, c),
                        same_sign_ranks,
                        t1,
                        t2,
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| (x.t1, x.t2).cmp(&(y.t1, y.t2)));
    out.dedup();
    Ok(out)
}

// ---------------------------------------------------------------------
// Metamorphic identity suite over the engine.

fn mm(description: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Mismatch {
    Mismatch {
        description: description.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Deterministic componentwise splits of t used for the additivity check;
/// zero-rank parts get zero degrees so that every part is valid.
fn sample_splits(t: &HiggsType) -> Vec<(HiggsType, HiggsType)> {
    let mut out = Vec::new();
    for (p1, q1) in [(0, 1), (1, 0), (1, 1), (t.p, 0), (0, t.q), (t.p - 1, t.q)] {
        if p1 < 0 || q1 < 0 || p1 > t.p || q1 > t.q {
            continue;
        }
        if (p1, q1) == (0, 0) || (p1, q1) == (t.p, t.q) {
            continue;
        }
        let a1 = if p1 == 0 {
            0
        } else if p1 == t.p {
            t.a
        } else {
            t.a.div_euclid(2)
        };
        let b1 = if q1 == 0 {
            0
        } else if q1 == t.q {
            t.b
        } else {
            t.b.div_euclid(2)
        };
        let t1 = HiggsType { p: p1, q: q1, a: a1, b: b1 };
        let t2 = HiggsType {
            p: t.p - p1,
            q: t.q - q1,
            a: t.a - a1,
            b: t.b - b1,
        };
        if local_valid(t1.p, t1.q, t1.a, t1.b) && local_valid(t2.p, t2.q, t2.a, t2.b) {
            out.push((t1, t2));
        }
    }
    out.dedup();
    out
}

fn negated_wall_set(walls: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = walls.iter().map(|w| -w).collect();
    out.sort();
    out
}

fn fmt_walls(walls: &[Rational]) -> String {
    let parts: Vec<String> = walls.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

type ChiFn = dyn Fn(&HiggsType, &HiggsType, &CurveData) -> i64 + Sync;

/// Identity suite with an injectable χ implementation (used by the test
/// suite for fault injection).
pub fn verify_identities_with(chi_fn: &ChiFn, sweep: &[(HiggsType, CurveData)]) -> OracleReport {
    let results: Vec<(usize, Vec<Mismatch>)> = sweep
        .par_iter()
        .map(|(t, c)| verify_one(chi_fn, t, c))
        .collect();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (n, mut ms) in results {
        checked += n;
        mismatches.append(&mut ms);
    }
    OracleReport::from_parts(checked, mismatches)
}

pub fn verify_identities(sweep: &[(HiggsType, CurveData)]) -> OracleReport {
    verify_identities_with(&crate::invariants::chi, sweep)
}

fn verify_one(chi_fn: &ChiFn, t: &HiggsType, c: &CurveData) -> (usize, Vec<Mismatch>) {
    use crate::invariants::{dual_type, mw_interval, sigma_type, toledo};
    use crate::parameter_space::{alpha_range, enumerate_walls};

    let mut checked = 0;
    let mut bad = Vec::new();

    // Dimension identity.
    checked += 1;
    let closed_form = (c.genus - 1) * (t.q - t.p) * (t.q - t.p) + 2 * t.p * t.q * c.deg_l + 1;
    let via_chi = 1 - chi_fn(t, t, c);
    if via_chi != closed_form {
        bad.push(mm(
            format!("dimension identity for {t} at g={}, dL={}", c.genus, c.deg_l),
            closed_form,
            via_chi,
        ));
    }

    // χ additivity on deterministic splits.
    for (t1, t2) in sample_splits(t) {
        checked += 1;
        let whole = chi_fn(t, t, c);
        let parts = chi_fn(&t1, &t1, c) + chi_fn(&t2, &t2, c) + chi_fn(&t1, &t2, c)
            + chi_fn(&t2, &t1, c);
        if whole != parts {
            bad.push(mm(
                format!("chi additivity for {t} = {t1} + {t2}"),
                whole,
                parts,
            ));
        }
    }

    // Toledo antisymmetry under both involutions.
    checked += 1;
    if toledo(&dual_type(t)) != -toledo(t) {
        bad.push(mm(
            format!("toledo antisymmetry under dual for {t}"),
            -local_toledo(t),
            toledo(&dual_type(t)),
        ));
    }
    checked += 1;
    if toledo(&sigma_type(t)) != -toledo(t) {
        bad.push(mm(
            format!("toledo antisymmetry under sigma for {t}"),
            -local_toledo(t),
            toledo(&sigma_type(t)),
        ));
    }

    // Wall-set symmetry on a fixed symmetric window.
    let window = ExtendedInterval::closed(rint(-3), rint(3));
    let alphas = |walls: Vec<crate::parameter_space::Wall>| -> Vec<Rational> {
        walls.into_iter().map(|w| w.alpha_c).collect()
    };
    let base = enumerate_walls(t, c, &window).map(alphas);
    for (name, other) in [("sigma", sigma_type(t)), ("dual", dual_type(t))] {
        checked += 1;
        let transformed = enumerate_walls(&other, c, &window).map(alphas);
        match (&base, &transformed) {
            (Ok(b), Ok(tr)) => {
                let expect = negated_wall_set(b);
                if &expect != tr {
                    bad.push(mm(
                        format!("wall symmetry under {name} for {t}"),
                        fmt_walls(&expect),
                        fmt_walls(tr),
                    ));
                }
            }
            _ => bad.push(mm(
                format!("wall symmetry under {name} for {t}"),
                "both enumerations succeed",
                "error",
            )),
        }
    }

    // Range reflection under sigma.
    checked += 1;
    let r = alpha_range(t, c);
    let rs = alpha_range(&sigma_type(t), c);
    let reflected_ok = match (
        (&r.range.lower, &r.range.upper),
        (&rs.range.lower, &rs.range.upper),
    ) {
        ((Endpoint::Finite(lo), Endpoint::Finite(hi)), (Endpoint::Finite(lo2), Endpoint::Finite(hi2))) => {
            lo2 == &-hi && hi2 == &-lo
        }
        ((Endpoint::NegInf, Endpoint::PosInf), (Endpoint::NegInf, Endpoint::PosInf)) => true,
        _ => false,
    };
    if !reflected_ok {
        bad.push(mm(
            format!("range reflection under sigma for {t}"),
            r.range.to_string(),
            rs.range.to_string(),
        ));
    }

    // Milnor–Wood symmetry at α = 0.
    checked += 1;
    let mw = mw_interval(t.p, t.q, &rint(0), c);
    let m = rint(t.p.min(t.q) * c.deg_l);
    if mw.tau_min != -&m || mw.tau_max != m {
        bad.push(mm(
            format!("MW symmetry at alpha=0 for {t}"),
            format!("[-{m}, {m}]", m = t.p.min(t.q) * c.deg_l),
            format!("[{}, {}]", mw.tau_min, mw.tau_max),
        ));
    }

    (checked, bad)
}

/// Cross-check the engine's walls and decompositions against the
/// independent scan and brute force, on one input.
pub fn cross_check(t: &HiggsType, c: &CurveData, window: &ExtendedInterval) -> Result<OracleReport> {
    let mut checked = 0;
    let mut bad = Vec::new();

    let engine_walls = crate::parameter_space::enumerate_walls(t, c, window)?;
    let scanned = walls_by_scan(t, window)?;
    checked += 1;
    let engine_alphas: Vec<Rational> = engine_walls.iter().map(|w| w.alpha_c.clone()).collect();
    if engine_alphas != scanned {
        bad.push(mm(
            format!("wall set for {t} on {window}"),
            fmt_walls(&scanned),
            fmt_walls(&engine_alphas),
        ));
    }

    for wall in &engine_walls {
        checked += 1;
        // Denominator-bound soundness for the enumerated wall.
        let denom_ok = {
            let n = t.p + t.q;
            let mut ok = false;
            'outer: for p1 in 0..=t.p {
                for q1 in 0..=t.q {
                    let d = (p1 * n - t.p * (p1 + q1)).abs();
                    if d != 0 && (rint(d) * &wall.alpha_c).is_integer() {
                        ok = true;
                        break 'outer;
                    }
                }
            }
            ok
        };
        if !denom_ok {
            bad.push(mm(
                format!("denominator bound for wall {} of {t}", wall.alpha_c),
                "reduced denominator divides some |p'(p+q) - p n'|",
                wall.alpha_c.to_string(),
            ));
        }

        checked += 1;
        if !is_critical(t, &wall.alpha_c).0 {
            bad.push(mm(
                format!("criticality of wall {} of {t}", wall.alpha_c),
                "critical",
                "not critical",
            ));
        }

        checked += 1;
        let radius = required_radius(t, c, &wall.alpha_c);
        match decompositions_bruteforce(t, c, &wall.alpha_c, radius) {
            Ok(brute) => {
                if brute != wall.decompositions {
                    bad.push(mm(
                        format!("decompositions at wall {} of {t}", wall.alpha_c),
                        format!("{} pairs (brute force)", brute.len()),
                        format!("{} pairs (engine)", wall.decompositions.len()),
                    ));
                }
            }
            Err(e) => bad.push(mm(
                format!("decompositions at wall {} of {t}", wall.alpha_c),
                "brute force succeeds",
                e.to_string(),
            )),
        }
    }

    // Chamber samples must be non-critical.
    for chamber in crate::parameter_space::chambers(t, c, window)? {
        checked += 1;
        if is_critical(t, &chamber.sample_alpha).0 {
            bad.push(mm(
                format!("chamber sample {} of {t}", chamber.sample_alpha),
                "non-critical",
                "critical",
            ));
        }
    }

    Ok(OracleReport::from_parts(checked, bad))
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
    fn criticality() {
        let (hit, ws) = is_critical(&t(3, 2, 0, 2), &rat(1, 6));
        assert!(hit);
        assert_eq!(ws, vec![(0, 2, 1), (3, 0, 1)]);
        assert!(!is_critical(&t(3, 2, 0, 2), &rint(0)).0);
        assert!(!is_critical(&t(1, 1, 0, 0), &rint(1)).0);
    }

    #[test]
    fn scan_walls() {
        let w = walls_by_scan(&t(1, 1, 0, 0), &ExtendedInterval::closed(rint(-3), rint(3)))
            .unwrap();
        assert_eq!(w, vec![rint(-2), rint(0), rint(2)]);

        let w = walls_by_scan(&t(3, 2, 0, 2), &ExtendedInterval::closed(rint(0), rint(1)))
            .unwrap();
        assert_eq!(w, vec![rat(1, 6), rint(1)]);

        let w = walls_by_scan(&t(2, 1, 0, 1), &ExtendedInterval::closed_open(rint(0), rint(1)))
            .unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn brute_force_decompositions() {
        let c = c22();
        assert!(decompositions_bruteforce(&t(3, 2, 0, 2), &c, &rat(1, 6), 10)
            .unwrap()
            .is_empty());

        let brute = decompositions_bruteforce(&t(3, 2, 0, 2), &c, &rint(1), 10).unwrap();
        let engine =
            crate::theorem_engine::enumerate_decompositions(&t(3, 2, 0, 2), &c, &rint(1)).unwrap();
        assert_eq!(brute, engine);

        let brute = decompositions_bruteforce(&t(1, 1, 0, 0), &c, &rint(0), 5).unwrap();
        assert_eq!(brute.len(), 1);
        assert_eq!(brute[0].t1, t(0, 1, 0, 0));
        assert_eq!(brute[0].t2, t(1, 0, 0, 0));

        assert!(matches!(
            decompositions_bruteforce(&t(3, 2, 0, 2), &c, &rint(1), 0),
            Err(Error::RadiusTooSmall { .. })
        ));
    }

    #[test]
    fn identities_hold() {
        let sweep = vec![
            (t(1, 1, 0, 0), c22()),
            (t(3, 2, 0, 2), c22()),
            (t(2, 1, 0, 1), c22()),
        ];
        let report = verify_identities(&sweep);
        assert!(report.passed, "{:?}", report.mismatches);
        assert!(report.checked >= 6);
    }

    #[test]
    fn fault_injection_is_detected() {
        let corrupt = |t1: &HiggsType, t2: &HiggsType, c: &CurveData| {
            crate::invariants::chi(t1, t2, c) + 1
        };
        let sweep = vec![(t(3, 2, 0, 2), c22())];
        let report = verify_identities_with(&corrupt, &sweep);
        assert!(!report.passed);
        assert!(report
            .mismatches
            .iter()
            .any(|m| m.description.contains("dimension identity")));
    }

    #[test]
    fn cross_check_flagship() {
        let report = cross_check(
            &t(3, 2, 0, 2),
            &c22(),
            &ExtendedInterval::closed(rint(0), rint(1)),
        )
        .unwrap();
        assert!(report.passed, "{:?}", report.mismatches);
    }
}
