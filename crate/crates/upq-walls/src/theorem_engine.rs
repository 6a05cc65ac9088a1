//! Theorem hypotheses as exact predicates: H² vanishing windows,
//! smoothness verdicts, equal-slope decomposition enumeration with
//! Milnor–Wood filtering, flip-locus codimension bounds, birationality
//! across a wall, irreducibility, Toledo meaningful ranges, and the p=q
//! GL-comparison window.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{merge_union, ExtendedInterval};
use crate::invariants::{chi, expected_dimension, genericity, mu_alpha, mw_interval, toledo};
use crate::rational::{rint, Rational};
use crate::types::{CurveData, HiggsType};

/// Which clause contributed an interval to the vanishing window.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum VanishingSource {
    /// α = 0 alone suffices (degenerate interval [0,0]).
    AlphaZero,
    /// q = 1, p ≥ 2, deg L > 2g−2: the special open interval around
    /// p(μV−μW).
    Q1Special,
    /// The [0, U₂) regime for positive α.
    RegimePositiveAlpha,
    /// The (L₃, 0] regime for negative α.
    RegimeNegativeAlpha,
    /// q = 1 range extension: vanishing for every α ≥ 0.
    Q1RangeAllNonnegative,
    /// q = 1 range extension: vanishing for every α ≤ 0.
    Q1RangeAllNonpositive,
}

/// Union of parameter intervals on which H² of the deformation complex
/// vanishes. `stable_only` marks the deg L = 2g−2 case, where vanishing
/// is only guaranteed for stable objects.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VanishingWindow {
    pub intervals: Vec<ExtendedInterval>,
    pub stable_only: bool,
    pub sources: Vec<VanishingSource>,
}

impl VanishingWindow {
    pub fn contains(&self, alpha: &Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(alpha))
    }
}

pub fn h2_vanishing_window(t: &HiggsType, c: &CurveData) -> Result<VanishingWindow> {
    if c.deg_l < 1 {
        return Err(Error::DegLNonpositive(c.deg_l));
    }
    let min_dl = 2 * c.genus - 2;
    if c.deg_l < min_dl {
        return Err(Error::Hypothesis {
            deg_l: c.deg_l,
            min: min_dl,
        });
    }
    let (p, q) = (t.p, t.q);
    let diff = Rational::new(t.a, p) - Rational::new(t.b, q);
    let dl = rint(c.deg_l);
    let coef = Rational::new(2 * p * q, p.min(q) * (p - q).abs() + p + q);

    let mut intervals = Vec::new();
    let mut sources = Vec::new();

    // α = 0 vanishes on its own whenever the degree hypothesis holds.
    intervals.push(ExtendedInterval::point(rint(0)));
    sources.push(VanishingSource::AlphaZero);

    if diff > -&dl {
        let u2 = &coef * &(-&diff - &dl) + &dl;
        if u2 > rint(0) {
            intervals.push(ExtendedInterval::closed_open(rint(0), u2));
            sources.push(VanishingSource::RegimePositiveAlpha);
        }
    }
    if diff < dl {
        let l3 = &coef * &(-&diff + &dl) - &dl;
        if l3 < rint(0) {
            intervals.push(ExtendedInterval::open_closed(l3, rint(0)));
            sources.push(VanishingSource::RegimeNegativeAlpha);
        }
    }
    if q == 1 && p >= 2 && c.deg_l > min_dl {
        let center = rint(p) * &diff;
        let width = rint((p + 1) * (c.deg_l - min_dl));
        intervals.push(ExtendedInterval::open(&center - &width, &center + &width));
        sources.push(VanishingSource::Q1Special);
        // Range extensions: the whole half-line when the admissible range
        // already lies inside the special interval.
        let cut = rint(min_dl) - rint((p - 2) * (c.deg_l - min_dl));
        if center > cut {
            intervals.push(ExtendedInterval::at_least(rint(0)));
            sources.push(VanishingSource::Q1RangeAllNonnegative);
        }
        if center < -cut {
            intervals.push(ExtendedInterval::at_most(rint(0)));
            sources.push(VanishingSource::Q1RangeAllNonpositive);
        }
    }

    Ok(VanishingWindow {
        intervals: merge_union(intervals),
        stable_only: c.deg_l == min_dl,
        sources,
    })
}

/// Uniform envelope for theorem applicability. `applicable` is the
/// conjunction of the listed condition booleans.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub applicable: bool,
    pub conclusion: String,
    pub window_used: ExtendedInterval,
    pub conditions: Vec<(String, bool)>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn build(
        conclusion_when_applicable: &str,
        window_used: ExtendedInterval,
        conditions: Vec<(String, bool)>,
        notes: Vec<String>,
    ) -> Verdict {
        let applicable = conditions.iter().all(|(_, ok)| *ok);
        Verdict {
            applicable,
            conclusion: if applicable {
                conclusion_when_applicable.to_string()
            } else {
                "not applicable".to_string()
            },
            window_used,
            conditions,
            notes,
        }
    }
}

pub fn smoothness_verdict(t: &HiggsType, c: &CurveData, alpha: &Rational) -> Result<Verdict> {
    let window = h2_vanishing_window(t, c)?;
    let in_window = window.contains(alpha);
    let window_used = window
        .intervals
        .iter()
        .find(|i| i.contains(alpha))
        .or_else(|| window.intervals.first())
        .cloned()
        .unwrap_or_else(|| ExtendedInterval::closed_open(rint(0), rint(0)));
    let mut notes = Vec::new();
    if window.stable_only {
        notes.push("deg L = 2g-2: smoothness holds on the stable locus only".to_string());
    }
    if window.sources.contains(&VanishingSource::Q1Special) {
        notes.push(
            "q=1 clause uses the conservative half-width (p+1)(deg L - 2g + 2)".to_string(),
        );
    }
    let dim = expected_dimension(t, c);
    Ok(Verdict::build(
        &format!("smooth of dimension {dim}"),
        window_used,
        vec![(
            "alpha_in_h2_vanishing_window".to_string(),
            in_window,
        )],
        notes,
    ))
}

/// One equal-slope 2-step splitting t = t1 ⊕ t2. `chi_12` is the Euler
/// characteristic of the complex of homomorphisms from part 2 to part 1,
/// i.e. chi(t2, t1); `chi_21` is the reverse, chi(t1, t2).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    pub t1: HiggsType,
    pub t2: HiggsType,
    pub chi_12: i64,
    pub chi_21: i64,
    pub same_sign_ranks: bool,
}

fn valid_part(p: i64, q: i64, a: i64, b: i64) -> bool {
    p >= 0 && q >= 0 && (p, q) != (0, 0) && (p != 0 || a == 0) && (q != 0 || b == 0)
}

/// Necessary conditions for a full-rank part to support α_c-semistable
/// objects: Milnor–Wood feasibility, and (when its ranks differ)
/// membership of α_c in its own admissible range.
fn part_supported(part: &HiggsType, alpha_c: &Rational, c: &CurveData) -> bool {
    if part.p < 1 || part.q < 1 {
        return true;
    }
    if !mw_interval(part.p, part.q, alpha_c, c).contains(&toledo(part)) {
        return false;
    }
    part.p == part.q || crate::parameter_space::alpha_range(part, c).range.contains(alpha_c)
}

/// All unordered pairs (t1,t2) with t1 ⊕ t2 = t, both parts valid, equal
/// α_c-slopes, and both parts passing the support filters. Pairs are
/// normalized so that t1 ≤ t2 and the list is sorted.
pub fn enumerate_decompositions(
    t: &HiggsType,
    c: &CurveData,
    alpha_c: &Rational,
) -> Result<Vec<Decomposition>> {
    if c.deg_l < 1 {
        return Err(Error::DegLNonpositive(c.deg_l));
    }
    let slope = mu_alpha(t, alpha_c);
    let mut out = Vec::new();
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) || (p1, q1) == (t.p, t.q) {
                continue;
            }
            let n1 = p1 + q1;
            // Equal slopes force the degree sum s1 = n1·μ_α(t) − α_c·p1.
            let s1_rat = rint(n1) * &slope - alpha_c * &rint(p1);
            let Some(s1) = s1_rat.to_integer() else {
                continue;
            };
            let (p2, q2) = (t.p - p1, t.q - q1);
            let a1_candidates: Vec<i64> = if p1 == 0 {
                vec![0]
            } else if q1 == 0 {
                vec![s1]
            } else if p2 == 0 {
                vec![t.a]
            } else if q2 == 0 {
                vec![s1 - t.b]
            } else {
                // Both parts full rank: τ(t1) = 2a1 − 2·p1·s1/n1 must lie
                // in the Milnor–Wood interval of (p1,q1) at α_c, which
                // bounds a1 to a finite integer range.
                let mw = mw_interval(p1, q1, alpha_c, c);
                if mw.is_empty() {
                    continue;
                }
                let base = Rational::new(2 * p1 * s1, n1);
                let lo = (&mw.tau_min + &base) / rint(2);
                let hi = (&mw.tau_max + &base) / rint(2);
                (lo.ceil_int()..=hi.floor_int()).collect()
            };
            for a1 in a1_candidates {
                let b1 = s1 - a1;
                let (a2, b2) = (t.a - a1, t.b - b1);
                if !valid_part(p1, q1, a1, b1) || !valid_part(p2, q2, a2, b2) {
                    continue;
                }
                let t1 = HiggsType { p: p1, q: q1, a: a1, b: b1 };
                let t2 = HiggsType { p: p2, q: q2, a: a2, b: b2 };
                if t1 > t2 {
                    continue; // the mirrored rank split produces this pair
                }
                if !part_supported(&t1, alpha_c, c) || !part_supported(&t2, alpha_c, c) {
                    continue;
                }
                let same_sign_ranks = (t1.p - t1.q >= 0 && t2.p - t2.q >= 0)
                    || (t1.p - t1.q <= 0 && t2.p - t2.q <= 0);
                out.push(Decomposition {
                    chi_12: chi(&t2, &t1, c),
                    chi_21: chi(&t1, &t2, c),
                    same_sign_ranks,
                    t1,
                    t2,
                });
            }
        }
    }
    out.sort_by(|x, y| (x.t1, x.t2).cmp(&(y.t1, y.t2)));
    out.dedup();
    Ok(out)
}

/// Codimension lower bounds for the two flip loci at a wall, from the
/// 2-step decompositions. `bound_plus` is for the locus destabilized
/// just below the wall, `bound_minus` just above.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FlipBounds {
    pub bound_plus: i64,
    pub bound_minus: i64,
    pub warnings: Vec<String>,
}

pub fn flip_codim_bound(
    t: &HiggsType,
    c: &CurveData,
    alpha_c: &Rational,
) -> Result<Option<FlipBounds>> {
    let decs = enumerate_decompositions(t, c, alpha_c)?;
    if decs.is_empty() {
        return Ok(None);
    }
    let ratio = Rational::new(t.p, t.p + t.q);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut all = Vec::new();
    let mut warnings = Vec::new();
    for d in &decs {
        // Estimate per JH order: −chi(t_sub, t_quot). A sub with rank
        // ratio below p/(p+q) destabilizes below the wall (the S⁺ side);
        // above the ratio it destabilizes above the wall (S⁻).
        for (sub, v) in [(&d.t1, -d.chi_21), (&d.t2, -d.chi_12)] {
            all.push(v);
            let r = Rational::new(sub.p, sub.p + sub.q);
            if r < ratio {
                plus.push(v);
            } else if r > ratio {
                minus.push(v);
            }
        }
        if !d.same_sign_ranks {
            warnings.push(format!(
                "decomposition {} + {} has opposite-sign rank differences",
                d.t1, d.t2
            ));
        }
    }
    let overall = *all.iter().min().expect("nonempty");
    let bound_plus = plus.iter().min().copied().unwrap_or(overall);
    let bound_minus = minus.iter().min().copied().unwrap_or(overall);
    if bound_plus <= 0 || bound_minus <= 0 {
        warnings.push("a codimension bound is not positive; the estimate is vacuous".into());
    }
    Ok(Some(FlipBounds {
        bound_plus,
        bound_minus,
        warnings,
    }))
}

/// Case-(1) upper endpoint of the wall-crossing window for q ≤ p:
/// 2pq/(pq−q²+p+q)·(b/q − a/p − dl) + dl.
fn case1_upper(t: &HiggsType, dl: &Rational) -> Rational {
    let (p, q) = (t.p, t.q);
    let diff = Rational::new(t.a, p) - Rational::new(t.b, q);
    Rational::new(2 * p * q, p * q - q * q + p + q) * (-&diff - dl) + dl
}

/// Case-(2) lower endpoint for p ≤ q: 2pq/(pq−p²+p+q)·(b/q − a/p + dl) − dl.
fn case2_lower(t: &HiggsType, dl: &Rational) -> Rational {
    let (p, q) = (t.p, t.q);
    let diff = Rational::new(t.a, p) - Rational::new(t.b, q);
    Rational::new(2 * p * q, p * q - p * p + p + q) * (-&diff + dl) - dl
}

/// Whether the moduli spaces on the two sides of the wall α_c are
/// birationally equivalent. The ε-formulation "0 ≤ α_c ± ε < W₁" for
/// arbitrarily small ε > 0 is equivalent to α_c ∈ (0, W₁), and mirrored
/// for the negative case.
pub fn birationality_verdict(
    t: &HiggsType,
    c: &CurveData,
    alpha_c: &Rational,
) -> Result<Verdict> {
    if c.deg_l < 1 {
        return Err(Error::DegLNonpositive(c.deg_l));
    }
    let point = ExtendedInterval::point(alpha_c.clone());
    let walls = crate::parameter_space::enumerate_walls(t, c, &point)?;
    let is_wall = !walls.is_empty();
    let numerical_only = is_wall && walls[0].decompositions.is_empty();

    let dl = rint(c.deg_l);
    let diff = Rational::new(t.a, t.p) - Rational::new(t.b, t.q);
    let zero = rint(0);

    let case1_shape = t.q <= t.p && diff > -&dl;
    let case2_shape = t.p <= t.q && diff < dl;
    let w1 = case1_upper(t, &dl);
    let w2 = case2_lower(t, &dl);
    let in_case1 = case1_shape && alpha_c > &zero && alpha_c < &w1;
    let in_case2 = case2_shape && alpha_c < &zero && alpha_c > &w2;

    let window_used = if case1_shape && (in_case1 || !in_case2) {
        ExtendedInterval::closed_open(zero.clone(), w1)
    } else if case2_shape {
        ExtendedInterval::open_closed(w2, zero.clone())
    } else {
        ExtendedInterval::closed_open(zero.clone(), zero)
    };

    let mut notes = Vec::new();
    if numerical_only {
        notes.push(
            "wall is numerical-only: no valid decomposition, flip loci are empty at type level"
                .to_string(),
        );
    }
    let full = !genericity(t).alpha_independent_possible;
    let conclusion = if full {
        "full moduli spaces birational"
    } else {
        "stable loci birational"
    };
    Ok(Verdict::build(
        conclusion,
        window_used,
        vec![
            ("alpha_is_critical_value".to_string(), is_wall),
            (
                "adjacent_parameters_in_case_window".to_string(),
                in_case1 || in_case2,
            ),
        ],
        notes,
    ))
}

/// Whether the moduli space at α is irreducible: canonical twist,
/// coprime rank and degree sums, Toledo bound, and α in a wall-crossing
/// window reaching down to 0.
pub fn irreducibility_verdict(t: &HiggsType, c: &CurveData, alpha: &Rational) -> Verdict {
    let dl = rint(2 * c.genus - 2);
    let diff = Rational::new(t.a, t.p) - Rational::new(t.b, t.q);
    let zero = rint(0);
    let tau = toledo(t);
    let tau_ok = tau.abs() <= rint(t.p.min(t.q) * (2 * c.genus - 2));

    let case1_shape = t.q <= t.p && diff > -&dl;
    let case2_shape = t.p <= t.q && diff < dl;
    let w1 = case1_upper(t, &dl);
    let w2 = case2_lower(t, &dl);
    let in_case1 = case1_shape && alpha >= &zero && alpha < &w1;
    let in_case2 = case2_shape && alpha <= &zero && alpha > &w2;

    let window_used = if case1_shape && (in_case1 || !in_case2) {
        ExtendedInterval::closed_open(zero.clone(), w1)
    } else if case2_shape {
        ExtendedInterval::open_closed(w2, zero.clone())
    } else {
        ExtendedInterval::closed_open(zero.clone(), zero)
    };

    Verdict::build(
        "irreducible",
        window_used,
        vec![
            ("canonical_twist".to_string(), c.canonical),
            (
                "coprime_rank_and_degree_sums".to_string(),
                (t.p + t.q).gcd(&(t.a + t.b)) == 1,
            ),
            ("toledo_within_milnor_wood_bound".to_string(), tau_ok),
            ("alpha_in_case_window".to_string(), in_case1 || in_case2),
        ],
        Vec::new(),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ToledoCase {
    Case1,
    Case2,
    Neither,
}

/// Which Toledo range (if any) makes the wall-crossing statement
/// meaningful for this type, together with the range itself.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ToledoRange {
    pub case: ToledoCase,
    pub interval: Option<ExtendedInterval>,
}

pub fn toledo_meaningful_range(t: &HiggsType, c: &CurveData) -> ToledoRange {
    let tau = toledo(t);
    let dl = rint(c.deg_l);
    let cross = Rational::new(2 * t.p * t.q, t.p + t.q) * &dl;
    let case1 = ExtendedInterval::open(-&cross, -(rint(t.q - 1) * &dl));
    let case2 = ExtendedInterval::open(rint(t.p - 1) * &dl, cross);
    if case1.contains(&tau) {
        ToledoRange {
            case: ToledoCase::Case1,
            interval: Some(case1),
        }
    } else if case2.contains(&tau) {
        ToledoRange {
            case: ToledoCase::Case2,
            interval: Some(case2),
        }
    } else {
        ToledoRange {
            case: ToledoCase::Neither,
            interval: None,
        }
    }
}

/// For p = q: the α-windows on which α-semistability implies
/// semistability of the associated GL(2p) Higgs bundle.
pub fn gl_comparison_window(t: &HiggsType, c: &CurveData) -> Verdict {
    let equal_ranks = t.p == t.q;
    if !equal_ranks {
        return Verdict::build(
            "",
            ExtendedInterval::closed_open(rint(0), rint(0)),
            vec![("equal_ranks".to_string(), false)],
            Vec::new(),
        );
    }
    let p = t.p;
    let dl = rint(c.deg_l);
    let wd = Rational::new(t.b, t.q) - Rational::new(t.a, t.p); // μ(W) − μ(V)
    let zero = rint(0);
    let mut notes = Vec::new();
    let mut window_used = ExtendedInterval::closed_open(zero.clone(), zero.clone());

    if -&wd > -&dl {
        let alpha_0 = rint(p) * &(&wd - &dl) + &dl;
        let win = ExtendedInterval::closed_open(zero.clone(), alpha_0);
        notes.push(format!("nonnegative window {win}"));
        if !win.is_empty() {
            window_used = win;
        }
    }
    if -&wd < dl {
        let alpha_0p = rint(p) * &(&wd + &dl) - &dl;
        let win = ExtendedInterval::open_closed(alpha_0p, zero.clone());
        notes.push(format!("nonpositive window {win}"));
        if window_used.is_empty() && !win.is_empty() {
            window_used = win;
        }
    }
    Verdict::build(
        "alpha-semistability implies GL(2p) semistability on the window",
        window_used,
        vec![("equal_ranks".to_string(), true)],
        notes,
    )
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
    fn vanishing_windows() {
        let w = h2_vanishing_window(&t(3, 2, 0, 2), &c22()).unwrap();
        assert_eq!(
            w.intervals,
            vec![ExtendedInterval::closed_open(rint(0), rat(2, 7))]
        );
        assert!(w.stable_only);

        let w = h2_vanishing_window(&t(2, 1, 0, 1), &CurveData::twisted(2, 3).unwrap()).unwrap();
        assert_eq!(w.intervals, vec![ExtendedInterval::open(rint(-5), rint(1))]);
        assert!(!w.stable_only);

        let w = h2_vanishing_window(&t(2, 1, 0, 1), &c22()).unwrap();
        assert_eq!(
            w.intervals,
            vec![ExtendedInterval::closed_open(rint(0), rint(1))]
        );
        assert!(w.stable_only);
        assert!(!w.sources.contains(&VanishingSource::Q1Special));

        assert!(matches!(
            h2_vanishing_window(&t(2, 1, 0, 1), &CurveData::twisted(2, 1).unwrap()),
            Err(Error::Hypothesis { .. })
        ));
    }

    #[test]
    fn smoothness() {
        let c = c22();
        let v = smoothness_verdict(&t(3, 2, 0, 2), &c, &rat(1, 5)).unwrap();
        assert!(v.applicable);
        assert!(v.conclusion.contains("26"), "{}", v.conclusion);

        let v = smoothness_verdict(&t(3, 2, 0, 2), &c, &rat(1, 2)).unwrap();
        assert!(!v.applicable);

        let v = smoothness_verdict(&t(1, 1, 0, 0), &c, &rint(0)).unwrap();
        assert!(v.applicable);
        assert!(v.conclusion.contains('5'), "{}", v.conclusion);
    }

    #[test]
    fn decompositions_at_flagship_walls() {
        let c = c22();
        assert!(enumerate_decompositions(&t(3, 2, 0, 2), &c, &rat(1, 6))
            .unwrap()
            .is_empty());

        let decs = enumerate_decompositions(&t(3, 2, 0, 2), &c, &rint(1)).unwrap();
        let target = decs
            .iter()
            .find(|d| d.t1 == t(1, 1, 0, 1) && d.t2 == t(2, 1, 0, 1))
            .expect("pair (1,1,0,1)+(2,1,0,1) present");
        assert_eq!(target.chi_21, -5);

        let decs = enumerate_decompositions(&t(1, 1, 0, 0), &c, &rint(0)).unwrap();
        assert!(decs
            .iter()
            .any(|d| d.t1 == t(0, 1, 0, 0) && d.t2 == t(1, 0, 0, 0)));
    }

    #[test]
    fn flip_bounds() {
        let c = c22();
        assert!(flip_codim_bound(&t(3, 2, 0, 2), &c, &rat(1, 6))
            .unwrap()
            .is_none());
        let b = flip_codim_bound(&t(1, 1, 0, 0), &c, &rint(0)).unwrap().unwrap();
        assert_eq!((b.bound_plus, b.bound_minus), (1, 1));
    }

    #[test]
    fn birationality() {
        let c = c22();
        let v = birationality_verdict(&t(3, 2, 0, 2), &c, &rat(1, 6)).unwrap();
        assert!(v.applicable);
        assert_eq!(v.conclusion, "full moduli spaces birational");
        assert!(v.notes.iter().any(|n| n.contains("numerical-only")));
        assert_eq!(
            v.window_used,
            ExtendedInterval::closed_open(rint(0), rat(2, 7))
        );

        let v = birationality_verdict(&t(3, 2, 0, 2), &c, &rint(1)).unwrap();
        assert!(!v.applicable);

        // Empty case-(1) window [0, -1).
        let v = birationality_verdict(&t(2, 1, 0, -1), &c, &rint(0)).unwrap();
        assert!(!v.applicable);
        assert_eq!(
            v.window_used,
            ExtendedInterval::closed_open(rint(0), rint(-1))
        );
    }

    #[test]
    fn irreducibility() {
        let c = c22();
        let v = irreducibility_verdict(&t(3, 2, 0, 2), &c, &rat(1, 5));
        assert!(v.applicable);
        assert_eq!(v.conclusion, "irreducible");

        let v = irreducibility_verdict(&t(2, 2, 0, 0), &c, &rint(0));
        assert!(!v.applicable);
        assert!(v
            .conditions
            .iter()
            .any(|(n, ok)| n.contains("coprime") && !ok));

        let v = irreducibility_verdict(&t(2, 1, 0, -1), &c, &rint(0));
        assert!(!v.applicable);
    }

    #[test]
    fn toledo_ranges() {
        let c = c22();
        let r = toledo_meaningful_range(&t(3, 2, 0, 2), &c);
        assert_eq!(r.case, ToledoCase::Case1);
        assert_eq!(
            r.interval,
            Some(ExtendedInterval::open(rat(-24, 5), rint(-2)))
        );

        let r = toledo_meaningful_range(&t(2, 1, 0, -1), &c);
        assert_eq!(r.case, ToledoCase::Neither);

        let r = toledo_meaningful_range(&t(2, 3, 2, 0), &c);
        assert_eq!(r.case, ToledoCase::Case2);
        assert_eq!(r.interval, Some(ExtendedInterval::open(rint(2), rat(24, 5))));
    }

    #[test]
    fn gl_windows() {
        let c = c22();
        let v = gl_comparison_window(&t(2, 2, 0, 1), &c);
        assert!(v.applicable);
        assert!(v
            .notes
            .iter()
            .any(|n| n.contains("[0, -1)")), "{:?}", v.notes);

        let v = gl_comparison_window(&t(2, 2, 3, 0), &c);
        assert!(v.notes.iter().any(|n| n.contains("(-1, 0]")), "{:?}", v.notes);

        let v = gl_comparison_window(&t(3, 2, 0, 2), &c);
        assert!(!v.applicable);
    }
}
