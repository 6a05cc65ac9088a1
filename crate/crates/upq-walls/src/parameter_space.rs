//! The α-line for a fixed type: admissible parameter range, Higgs-field
//! structure thresholds, wall (critical value) enumeration with integer
//! witnesses, wall refinement, and chamber decomposition.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Endpoint, ExtendedInterval};
use crate::rational::{rint, Rational};
use crate::theorem_engine::{enumerate_decompositions, Decomposition};
use crate::types::{CurveData, HiggsType};

/// Admissible parameter range: a finite closed interval [α_m, α_M] when
/// p ≠ q, the whole line when p = q.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ParamRange {
    pub range: ExtendedInterval,
    pub finite: bool,
}

/// μ(V) − μ(W) = a/p − b/q, the slope difference driving every regime
/// split below.
fn slope_diff(t: &HiggsType) -> Rational {
    Rational::new(t.a, t.p) - Rational::new(t.b, t.q)
}

/// The admissible range [α_m, α_M] for p ≠ q; (−∞, +∞) for p = q.
///
/// α_m = −(2·max{p,q}/|q−p|)(μV−μW) − ((p+q)/|q−p|)·deg L when
/// μV−μW > −deg L, and −(μV−μW) otherwise; α_M is the mirror with
/// +deg L and the cut at μV−μW < deg L.
pub fn alpha_range(t: &HiggsType, c: &CurveData) -> ParamRange {
    if t.p == t.q {
        return ParamRange {
            range: ExtendedInterval::all(),
            finite: false,
        };
    }
    let diff = slope_diff(t);
    let dl = rint(c.deg_l);
    let gap = rint((t.q - t.p).abs());
    let lead = rint(2 * t.p.max(t.q)) / &gap;
    let span = rint(t.p + t.q) / &gap;
    let alpha_m = if diff > -&dl {
        -(&lead * &diff) - &span * &dl
    } else {
        -&diff
    };
    let alpha_big = if diff < dl {
        -(&lead * &diff) + &span * &dl
    } else {
        -diff
    };
    ParamRange {
        range: ExtendedInterval::closed(alpha_m, alpha_big),
        finite: true,
    }
}

/// Threshold values at which the Higgs-field structure clauses switch.
/// `alpha_i` is populated when q ≤ p (length q), `alpha_prime_j` when
/// p ≤ q (length p); `alpha_t` and `alpha_t_prime` are surjectivity
/// thresholds, present only when their defining slope condition holds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Thresholds {
    pub alpha_i: Vec<Rational>,
    pub alpha_prime_j: Vec<Rational>,
    pub alpha_t: Option<Rational>,
    pub alpha_t_prime: Option<Rational>,
}

pub fn thresholds(t: &HiggsType, c: &CurveData) -> Thresholds {
    let (p, q) = (t.p, t.q);
    let n = p + q;
    let dl = rint(c.deg_l);
    // μ(W) − μ(V)
    let wd = -slope_diff(t);
    let two_pq = rint(2 * p * q);

    let alpha_i = if q <= p {
        (0..q)
            .map(|i| {
                &two_pq / &rint(q * (p - q) + (i + 1) * n) * (&wd - &dl) + &dl
            })
            .collect()
    } else {
        Vec::new()
    };
    let alpha_prime_j = if p <= q {
        (0..p)
            .map(|j| {
                &two_pq / &rint(p * (q - p) + (j + 1) * n) * (&wd + &dl) - &dl
            })
            .collect()
    } else {
        Vec::new()
    };
    let alpha_t = if p >= q && wd > -&dl {
        Some(&two_pq / &rint(p * q - q * q + n) * (&wd + &dl) - &dl)
    } else {
        None
    };
    let alpha_t_prime = if p <= q && wd < dl {
        Some(&two_pq / &rint(p * q - p * p + n) * (&wd - &dl) + &dl)
    } else {
        None
    };
    Thresholds {
        alpha_i,
        alpha_prime_j,
        alpha_t,
        alpha_t_prime,
    }
}

/// What is known about one Higgs field from threshold comparisons alone.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FieldStatus {
    Injective,
    Zero,
    /// Kernel rank is at most the given value.
    KernelRankAtMost(i64),
    /// Kernel rank is at least the given value.
    KernelRankAtLeast(i64),
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum TriState {
    True,
    False,
    Unknown,
}

/// Structure flags for β and γ at a given parameter, derived solely from
/// the threshold clauses; `Unknown` whenever no clause applies.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldProfile {
    pub beta_status: FieldStatus,
    pub gamma_status: FieldStatus,
    pub beta_surjective: TriState,
    pub gamma_surjective: TriState,
    pub extreme_note: Option<String>,
}

impl FieldProfile {
    pub fn unknown() -> Self {
        FieldProfile {
            beta_status: FieldStatus::Unknown,
            gamma_status: FieldStatus::Unknown,
            beta_surjective: TriState::Unknown,
            gamma_surjective: TriState::Unknown,
            extreme_note: None,
        }
    }
}

pub fn field_profile(t: &HiggsType, c: &CurveData, alpha: &Rational) -> Result<FieldProfile> {
    let range = alpha_range(t, c);
    if !range.range.contains(alpha) {
        return Err(Error::OutOfRange {
            alpha: alpha.to_string(),
            range: range.range.to_string(),
        });
    }
    let th = thresholds(t, c);
    let diff = slope_diff(t);
    let dl = rint(c.deg_l);
    let (p, q) = (t.p, t.q);

    // β: W → V⊗L, kernel rank at most q. Clauses apply when p ≥ q.
    // With μV−μW > −deg L the α_i increase with i and α < α_i bounds the
    // kernel rank above by i; with μV−μW < −deg L they decrease and
    // α < α_i bounds it below by i+2 (β = 0 at the top index q−2).
    let beta_status = if p >= q && diff > -&dl {
        match th.alpha_i.iter().position(|a| alpha < a) {
            Some(0) => FieldStatus::Injective,
            Some(i) => FieldStatus::KernelRankAtMost(i as i64),
            None => FieldStatus::Unknown,
        }
    } else if p >= q && diff < -&dl {
        match (0..q.saturating_sub(1) as usize)
            .rev()
            .find(|&i| alpha < &th.alpha_i[i])
        {
            Some(i) if i as i64 == q - 2 => FieldStatus::Zero,
            Some(i) => FieldStatus::KernelRankAtLeast(i as i64 + 2),
            None => FieldStatus::Unknown,
        }
    } else {
        FieldStatus::Unknown
    };

    // γ: V → W⊗L, kernel rank at most p; mirror clauses when p ≤ q with
    // the comparison α > α′_j and the regime cut at μV−μW = deg L.
    let gamma_status = if p <= q && diff < dl {
        match th.alpha_prime_j.iter().position(|a| alpha > a) {
            Some(0) => FieldStatus::Injective,
            Some(j) => FieldStatus::KernelRankAtMost(j as i64),
            None => FieldStatus::Unknown,
        }
    } else if p <= q && diff > dl {
        match (0..p.saturating_sub(1) as usize)
            .rev()
            .find(|&j| alpha > &th.alpha_prime_j[j])
        {
            Some(j) if j as i64 == p - 2 => FieldStatus::Zero,
            Some(j) => FieldStatus::KernelRankAtLeast(j as i64 + 2),
            None => FieldStatus::Unknown,
        }
    } else {
        FieldStatus::Unknown
    };

    let gamma_surjective = match &th.alpha_t {
        Some(at) if alpha > at => TriState::True,
        _ => TriState::Unknown,
    };
    let beta_surjective = match &th.alpha_t_prime {
        Some(atp) if alpha < atp => TriState::True,
        _ => TriState::Unknown,
    };

    let mut notes: Vec<String> = Vec::new();
    if range.finite {
        if let (Endpoint::Finite(lo), Endpoint::Finite(hi)) =
            (&range.range.lower, &range.range.upper)
        {
            if alpha == hi {
                if diff < dl {
                    notes.push("rk(gamma) = min{p,q} at alpha = alpha_M".into());
                } else if diff > dl {
                    notes.push("gamma = 0 at alpha = alpha_M".into());
                }
            }
            if alpha == lo {
                if diff > -&dl {
                    notes.push("rk(beta) = min{p,q} at alpha = alpha_m".into());
                } else if diff < -&dl {
                    notes.push("beta = 0 at alpha = alpha_m".into());
                }
            }
        }
    }

    Ok(FieldProfile {
        beta_status,
        gamma_status,
        beta_surjective,
        gamma_surjective,
        extreme_note: if notes.is_empty() {
            None
        } else {
            Some(notes.join("; "))
        },
    })
}

/// Integer data of a critical-value witness: a sub-type rank pair and the
/// degree sum s = a′ + b′. Individual (a′,b′) splits only matter for
/// decompositions, not for criticality.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct WitnessTriple {
    pub p_sub: i64,
    pub q_sub: i64,
    pub s_sub: i64,
}

/// The unique α at which the witness equalizes α-slopes:
/// α = ((a+b)n′ − s(p+q)) / (p′(p+q) − p·n′) with n′ = p′+q′. None only
/// if the denominator vanishes, which the witness invariants exclude.
pub fn wall_from_witness(t: &HiggsType, w: &WitnessTriple) -> Option<Rational> {
    let n = t.p + t.q;
    let n1 = w.p_sub + w.q_sub;
    let den = w.p_sub * n - t.p * n1;
    if den == 0 {
        return None;
    }
    Some(Rational::new((t.a + t.b) * n1 - w.s_sub * n, den))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WallStatus {
    /// The integer criticality condition holds but no valid type
    /// decomposition exists: a spurious wall.
    Numerical,
    /// At least one valid equal-slope 2-decomposition exists.
    Decomposable,
}

/// A critical value with its witnesses and refinement data.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Wall {
    pub alpha_c: Rational,
    pub witnesses: Vec<WitnessTriple>,
    pub status: WallStatus,
    pub decompositions: Vec<Decomposition>,
}

/// All admissible rank pairs (p′,q′): within the rank box, not both zero,
/// and with p′/n′ ≠ p/(p+q) so the slope equation has a unique solution.
fn admissible_rank_pairs(t: &HiggsType) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p1 in 0..=t.p {
        for q1 in 0..=t.q {
            if (p1, q1) == (0, 0) {
                continue;
            }
            // p1/(p1+q1) != p/(p+q)  <=>  p1(p+q) != p(p1+q1)
            if p1 * (t.p + t.q) == t.p * (p1 + q1) {
                continue;
            }
            out.push((p1, q1));
        }
    }
    out
}

/// Every wall in the (finite) window, sorted, with all witnesses attached
/// and refinement applied. For fixed (p′,q′) the witness α-values form an
/// arithmetic progression in s, so the s-range is solved per rank pair.
pub fn enumerate_walls(
    t: &HiggsType,
    c: &CurveData,
    window: &ExtendedInterval,
) -> Result<Vec<Wall>> {
    let (lo, hi) = match (&window.lower, &window.upper) {
        (Endpoint::Finite(lo), Endpoint::Finite(hi)) => (lo.clone(), hi.clone()),
        _ => return Err(Error::WindowUnbounded),
    };
    let n = t.p + t.q;
    let d = t.a + t.b;
    let mut found: BTreeMap<Rational, Vec<WitnessTriple>> = BTreeMap::new();
    for (p1, q1) in admissible_rank_pairs(t) {
        let n1 = p1 + q1;
        // alpha(s) = (d*n1 - s*n) / den with den = p1*n - p*n1 != 0,
        // hence s(alpha) = (d*n1 - alpha*den) / n.
        let den = p1 * n - t.p * n1;
        let s_at = |alpha: &Rational| (rint(d * n1) - alpha * &rint(den)) / rint(n);
        let (s_a, s_b) = (s_at(&lo), s_at(&hi));
        let (s_min, s_max) = if s_a <= s_b { (s_a, s_b) } else { (s_b, s_a) };
        for s in s_min.ceil_int()..=s_max.floor_int() {
            let w = WitnessTriple {
                p_sub: p1,
                q_sub: q1,
                s_sub: s,
            };
            let alpha = wall_from_witness(t, &w).expect("admissible pair has nonzero denominator");
            if window.contains(&alpha) {
                found.entry(alpha).or_default().push(w);
            }
        }
    }
    found
        .into_iter()
        .map(|(alpha_c, mut witnesses)| {
            witnesses.sort();
            refine_wall(
                t,
                Wall {
                    alpha_c,
                    witnesses,
                    status: WallStatus::Numerical,
                    decompositions: Vec::new(),
                },
                c,
            )
        })
        .collect()
}

/// Attach the valid 2-decompositions at the wall and classify it as
/// Decomposable (some exist) or Numerical (spurious).
pub fn refine_wall(t: &HiggsType, wall: Wall, c: &CurveData) -> Result<Wall> {
    let decompositions = enumerate_decompositions(t, c, &wall.alpha_c)?;
    let status = if decompositions.is_empty() {
        WallStatus::Numerical
    } else {
        WallStatus::Decomposable
    };
    Ok(Wall {
        status,
        decompositions,
        ..wall
    })
}

/// A maximal open wall-free subinterval of the window, with a provably
/// non-critical sample point and its field profile.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Chamber {
    pub interval: ExtendedInterval,
    pub sample_alpha: Rational,
    pub profile: FieldProfile,
}

pub fn chambers(t: &HiggsType, c: &CurveData, window: &ExtendedInterval) -> Result<Vec<Chamber>> {
    let (lo, hi) = match (&window.lower, &window.upper) {
        (Endpoint::Finite(lo), Endpoint::Finite(hi)) => (lo.clone(), hi.clone()),
        _ => return Err(Error::WindowUnbounded),
    };
    let walls = enumerate_walls(t, c, window)?;
    let mut bounds = vec![lo];
    bounds.extend(walls.iter().map(|w| w.alpha_c.clone()));
    bounds.push(hi);
    bounds.sort();
    bounds.dedup();
    let mut out = Vec::new();
    for pair in bounds.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        if x >= y {
            continue;
        }
        let sample = (x + y) / rint(2);
        // Samples outside the admissible range get an all-Unknown profile:
        // no structural clause is available there.
        let profile = match field_profile(t, c, &sample) {
            Ok(p) => p,
            Err(Error::OutOfRange { .. }) => FieldProfile::unknown(),
            Err(e) => return Err(e),
        };
        out.push(Chamber {
            interval: ExtendedInterval::open(x.clone(), y.clone()),
            sample_alpha: sample,
            profile,
        });
    }
    Ok(out)
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
    fn ranges() {
        let r = alpha_range(&t(3, 2, 0, 2), &c22());
        assert!(r.finite);
        assert_eq!(r.range, ExtendedInterval::closed(rint(-4), rint(16)));

        let r = alpha_range(&t(1, 1, 0, 0), &c22());
        assert!(!r.finite);
        assert_eq!(r.range, ExtendedInterval::all());

        let r = alpha_range(&t(2, 1, 6, -1), &c22());
        assert_eq!(r.range, ExtendedInterval::closed(rint(-22), rint(-4)));
    }

    #[test]
    fn threshold_values() {
        let th = thresholds(&t(3, 2, 0, 2), &c22());
        assert_eq!(th.alpha_i[0], rat(2, 7));
        assert_eq!(th.alpha_t, Some(rat(22, 7)));
        assert_eq!(th.alpha_prime_j, Vec::<Rational>::new());
        assert_eq!(th.alpha_t_prime, None);

        let th = thresholds(&t(2, 1, 0, 1), &c22());
        assert_eq!(th.alpha_i[0], rint(1));
    }

    #[test]
    fn profiles() {
        let c = c22();
        let pr = field_profile(&t(3, 2, 0, 2), &c, &rint(0)).unwrap();
        assert_eq!(pr.beta_status, FieldStatus::Injective);
        assert_eq!(pr.gamma_surjective, TriState::Unknown);

        let pr = field_profile(&t(3, 2, 0, 2), &c, &rint(4)).unwrap();
        assert_eq!(pr.gamma_surjective, TriState::True);

        let pr = field_profile(&t(2, 1, 6, -1), &c, &rint(-4)).unwrap();
        let note = pr.extreme_note.unwrap();
        assert!(note.contains("gamma = 0"), "{note}");

        assert!(matches!(
            field_profile(&t(3, 2, 0, 2), &c, &rint(20)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn witness_walls() {
        let w = |p_sub, q_sub, s_sub| WitnessTriple { p_sub, q_sub, s_sub };
        assert_eq!(
            wall_from_witness(&t(3, 2, 0, 2), &w(3, 0, 1)),
            Some(rat(1, 6))
        );
        assert_eq!(wall_from_witness(&t(1, 1, 0, 0), &w(1, 0, -1)), Some(rint(2)));
        assert_eq!(wall_from_witness(&t(1, 1, 0, 0), &w(0, 1, 0)), Some(rint(0)));
    }

    #[test]
    fn wall_enumeration() {
        let c = c22();
        let alphas = |walls: &[Wall]| walls.iter().map(|w| w.alpha_c.clone()).collect::<Vec<_>>();

        let walls =
            enumerate_walls(&t(1, 1, 0, 0), &c, &ExtendedInterval::closed(rint(-3), rint(3)))
                .unwrap();
        assert_eq!(alphas(&walls), vec![rint(-2), rint(0), rint(2)]);

        let walls =
            enumerate_walls(&t(3, 2, 0, 2), &c, &ExtendedInterval::closed(rint(0), rint(1)))
                .unwrap();
        assert_eq!(alphas(&walls), vec![rat(1, 6), rint(1)]);
        assert_eq!(walls[0].status, WallStatus::Numerical);
        assert!(walls[0].decompositions.is_empty());
        assert_eq!(walls[1].status, WallStatus::Decomposable);

        let walls =
            enumerate_walls(&t(2, 1, 0, 1), &c, &ExtendedInterval::closed(rint(0), rint(2)))
                .unwrap();
        assert_eq!(alphas(&walls), vec![rint(1)]);

        assert!(matches!(
            enumerate_walls(&t(1, 1, 0, 0), &c, &ExtendedInterval::all()),
            Err(Error::WindowUnbounded)
        ));
    }

    #[test]
    fn wall_witnesses_at_one_sixth() {
        let c = c22();
        let walls =
            enumerate_walls(&t(3, 2, 0, 2), &c, &ExtendedInterval::closed(rint(0), rint(1)))
                .unwrap();
        let w16 = &walls[0];
        assert_eq!(w16.alpha_c, rat(1, 6));
        assert_eq!(
            w16.witnesses,
            vec![
                WitnessTriple { p_sub: 0, q_sub: 2, s_sub: 1 },
                WitnessTriple { p_sub: 3, q_sub: 0, s_sub: 1 },
            ]
        );
    }

    #[test]
    fn chamber_decomposition() {
        let c = c22();
        let ch = chambers(&t(3, 2, 0, 2), &c, &ExtendedInterval::closed(rint(0), rint(1))).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[0].interval, ExtendedInterval::open(rint(0), rat(1, 6)));
        assert_eq!(ch[0].sample_alpha, rat(1, 12));
        assert_eq!(ch[1].interval, ExtendedInterval::open(rat(1, 6), rint(1)));
        assert_eq!(ch[1].sample_alpha, rat(7, 12));

        let ch = chambers(&t(1, 1, 0, 0), &c, &ExtendedInterval::closed(rint(-3), rint(3))).unwrap();
        let ivs: Vec<_> = ch.iter().map(|c| c.interval.clone()).collect();
        assert_eq!(
            ivs,
            vec![
                ExtendedInterval::open(rint(-3), rint(-2)),
                ExtendedInterval::open(rint(-2), rint(0)),
                ExtendedInterval::open(rint(0), rint(2)),
                ExtendedInterval::open(rint(2), rint(3)),
            ]
        );

        let ch = chambers(&t(2, 1, 0, 1), &c, &ExtendedInterval::closed(rint(0), rint(2))).unwrap();
        let ivs: Vec<_> = ch.iter().map(|c| c.interval.clone()).collect();
        assert_eq!(
            ivs,
            vec![
                ExtendedInterval::open(rint(0), rint(1)),
                ExtendedInterval::open(rint(1), rint(2)),
            ]
        );
    }
}
