//! Full-analysis reports and their text / JSON / SVG renderings, plus the
//! small parsers shared by the CLI.
//!
//! The JSON field layout is the stable machine interface; the text
//! renderer is explicitly unstable. Every rational serializes as a
//! lowest-terms string and no floating point appears in any output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Endpoint, ExtendedInterval};
use crate::invariants::{expected_dimension, genericity, mu, mw_interval, toledo, GenericityFlags};
use crate::oracle::{cross_check, verify_identities, OracleReport};
use crate::parameter_space::{
    alpha_range, chambers, enumerate_walls, thresholds, FieldProfile, Thresholds, WallStatus,
};
use crate::rational::{rint, Rational};
use crate::theorem_engine::{
    birationality_verdict, flip_codim_bound, irreducibility_verdict, smoothness_verdict,
    toledo_meaningful_range, Decomposition, ToledoCase, Verdict,
};
use crate::types::{CurveData, HiggsType};

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub self_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvariantsBlock {
    pub mu: Rational,
    pub toledo: Rational,
    pub dimension: i64,
    pub mw_at_zero: (Rational, Rational),
    pub genericity: GenericityFlags,
    pub toledo_case: ToledoCase,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RangeBlock {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WallReport {
    pub alpha: Rational,
    pub status: WallStatus,
    pub witnesses: Vec<(i64, i64, i64)>,
    pub decompositions: Vec<Decomposition>,
    pub codim_bounds: Option<(i64, i64)>,
    pub birational: Verdict,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChamberVerdicts {
    pub smoothness: Verdict,
    pub irreducibility: Verdict,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChamberReport {
    pub lo: Rational,
    pub hi: Rational,
    pub sample: Rational,
    pub profile: FieldProfile,
    pub verdicts: ChamberVerdicts,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    #[serde(rename = "type")]
    pub higgs_type: HiggsType,
    pub curve: CurveData,
    pub window: ExtendedInterval,
    pub invariants: InvariantsBlock,
    pub range: RangeBlock,
    pub thresholds: Thresholds,
    pub walls: Vec<WallReport>,
    pub chambers: Vec<ChamberReport>,
    pub self_check: Option<OracleReport>,
}

/// Smoothness verdict that degrades the degree-hypothesis failure into an
/// inapplicable verdict instead of aborting the whole report.
fn smoothness_or_note(t: &HiggsType, c: &CurveData, alpha: &Rational) -> Result<Verdict> {
    match smoothness_verdict(t, c, alpha) {
        Ok(v) => Ok(v),
        Err(Error::Hypothesis { deg_l, min }) => Ok(Verdict {
            applicable: false,
            conclusion: "not applicable".to_string(),
            window_used: ExtendedInterval::closed_open(rint(0), rint(0)),
            conditions: vec![("deg_l_at_least_2g_minus_2".to_string(), false)],
            notes: vec![format!("deg L = {deg_l} is below the required {min}")],
        }),
        Err(e) => Err(e),
    }
}

pub fn analyze(
    t: &HiggsType,
    c: &CurveData,
    window: Option<ExtendedInterval>,
    options: AnalyzeOptions,
) -> Result<AnalysisReport> {
    let range = alpha_range(t, c);
    let window = match window {
        Some(w) => {
            if !w.is_finite() {
                return Err(Error::WindowUnbounded);
            }
            w
        }
        None if range.finite => range.range.clone(),
        None => return Err(Error::WindowRequired),
    };

    let mw0 = mw_interval(t.p, t.q, &rint(0), c);
    let invariants = InvariantsBlock {
        mu: mu(t),
        toledo: toledo(t),
        dimension: expected_dimension(t, c),
        mw_at_zero: (mw0.tau_min, mw0.tau_max),
        genericity: genericity(t),
        toledo_case: toledo_meaningful_range(t, c).case,
    };

    let walls = enumerate_walls(t, c, &window)?
        .into_iter()
        .map(|w| {
            let codim_bounds = flip_codim_bound(t, c, &w.alpha_c)?
                .map(|b| (b.bound_plus, b.bound_minus));
            let birational = birationality_verdict(t, c, &w.alpha_c)?;
            Ok(WallReport {
                witnesses: w
                    .witnesses
                    .iter()
                    .map(|wit| (wit.p_sub, wit.q_sub, wit.s_sub))
                    .collect(),
                alpha: w.alpha_c,
                status: w.status,
                decompositions: w.decompositions,
                codim_bounds,
                birational,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let chamber_reports = chambers(t, c, &window)?
        .into_iter()
        .map(|ch| {
            let smoothness = smoothness_or_note(t, c, &ch.sample_alpha)?;
            let irreducibility = irreducibility_verdict(t, c, &ch.sample_alpha);
            let (lo, hi) = match (&ch.interval.lower, &ch.interval.upper) {
                (Endpoint::Finite(lo), Endpoint::Finite(hi)) => (lo.clone(), hi.clone()),
                _ => unreachable!("chambers of a finite window are finite"),
            };
            Ok(ChamberReport {
                lo,
                hi,
                sample: ch.sample_alpha,
                profile: ch.profile,
                verdicts: ChamberVerdicts {
                    smoothness,
                    irreducibility,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let self_check = if options.self_check {
        let report = cross_check(t, c, &window)?
            .merge(verify_identities(&[(*t, *c)]));
        Some(report)
    } else {
        None
    };

    Ok(AnalysisReport {
        higgs_type: *t,
        curve: *c,
        window,
        invariants,
        range: RangeBlock {
            lo: range.range.lower,
            hi: range.range.upper,
        },
        thresholds: thresholds(t, c),
        walls,
        chambers: chamber_reports,
        self_check,
    })
}

pub fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Text => render_text(report),
        Format::Svg => render_svg(report),
    }
}

fn render_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn endpoint_str(e: &Endpoint) -> String {
    match e {
        Endpoint::NegInf => "-inf".to_string(),
        Endpoint::PosInf => "+inf".to_string(),
        Endpoint::Finite(r) => r.to_string(),
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let t = &r.higgs_type;
    let c = &r.curve;
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(
        &mut out,
        format!(
            "type {t}  genus {}  deg L {}{}",
            c.genus,
            c.deg_l,
            if c.canonical { " (canonical)" } else { "" }
        ),
    );
    push(&mut out, format!("window {}", r.window));
    push(
        &mut out,
        format!(
            "range [{}, {}]",
            endpoint_str(&r.range.lo),
            endpoint_str(&r.range.hi)
        ),
    );
    push(
        &mut out,
        format!(
            "mu = {}  toledo = {}  dimension = {}",
            r.invariants.mu, r.invariants.toledo, r.invariants.dimension
        ),
    );
    push(
        &mut out,
        format!(
            "MW interval at alpha=0: [{}, {}]  toledo case: {:?}",
            r.invariants.mw_at_zero.0, r.invariants.mw_at_zero.1, r.invariants.toledo_case
        ),
    );
    push(
        &mut out,
        format!(
            "genericity: coprime_rank_sum_exists_m={} coprime_pq={} alpha_independent_possible={}",
            r.invariants.genericity.coprime_rank_sum_exists_m,
            r.invariants.genericity.coprime_pq,
            r.invariants.genericity.alpha_independent_possible
        ),
    );
    if !r.thresholds.alpha_i.is_empty() {
        let vals: Vec<String> = r.thresholds.alpha_i.iter().map(|v| v.to_string()).collect();
        push(&mut out, format!("alpha_i: {}", vals.join(", ")));
    }
    if !r.thresholds.alpha_prime_j.is_empty() {
        let vals: Vec<String> = r
            .thresholds
            .alpha_prime_j
            .iter()
            .map(|v| v.to_string())
            .collect();
        push(&mut out, format!("alpha'_j: {}", vals.join(", ")));
    }
    if let Some(at) = &r.thresholds.alpha_t {
        push(&mut out, format!("alpha_t: {at}"));
    }
    if let Some(atp) = &r.thresholds.alpha_t_prime {
        push(&mut out, format!("alpha_t': {atp}"));
    }
    if r.walls.is_empty() {
        push(&mut out, "walls: none in window".to_string());
    } else {
        push(&mut out, format!("walls ({}):", r.walls.len()));
        for w in &r.walls {
            let status = match w.status {
                WallStatus::Numerical => "numerical",
                WallStatus::Decomposable => "decomposable",
            };
            let wits: Vec<String> = w
                .witnesses
                .iter()
                .map(|(p, q, s)| format!("({p},{q},{s})"))
                .collect();
            push(
                &mut out,
                format!("  alpha = {}  [{status}]  witnesses {}", w.alpha, wits.join(" ")),
            );
            for d in &w.decompositions {
                push(
                    &mut out,
                    format!(
                        "    split {} + {}  chi_12={} chi_21={}",
                        d.t1, d.t2, d.chi_12, d.chi_21
                    ),
                );
            }
            if let Some((bp, bm)) = w.codim_bounds {
                push(&mut out, format!("    codim bounds: S+ >= {bp}, S- >= {bm}"));
            }
            push(
                &mut out,
                format!(
                    "    birational: {}{}",
                    w.birational.conclusion,
                    if w.birational.notes.is_empty() {
                        String::new()
                    } else {
                        format!("  ({})", w.birational.notes.join("; "))
                    }
                ),
            );
        }
    }
    push(&mut out, format!("chambers ({}):", r.chambers.len()));
    for ch in &r.chambers {
        push(
            &mut out,
            format!(
                "  ({}, {})  sample {}  smoothness: {}  irreducibility: {}",
                ch.lo, ch.hi, ch.sample, ch.verdicts.smoothness.conclusion,
                ch.verdicts.irreducibility.conclusion
            ),
        );
    }
    if let Some(sc) = &r.self_check {
        push(
            &mut out,
            format!(
                "self-check: {} ({} checks, {} mismatches)",
                if sc.passed { "passed" } else { "FAILED" },
                sc.checked,
                sc.mismatches.len()
            ),
        );
        for m in &sc.mismatches {
            push(
                &mut out,
                format!("  {}: expected {}, got {}", m.description, m.expected, m.actual),
            );
        }
    }
    out
}

/// Pixel x-coordinate of α on the number line, computed exactly and only
/// then floored to an integer.
fn svg_x(alpha: &Rational, lo: &Rational, hi: &Rational, left: i64, width: i64) -> i64 {
    let span = hi - lo;
    if span.is_zero() {
        return left;
    }
    let frac = (alpha - lo) / span;
    (rint(left) + frac * rint(width)).floor_int()
}

fn render_svg(r: &AnalysisReport) -> String {
    let (lo, hi) = match (&r.window.lower, &r.window.upper) {
        (Endpoint::Finite(lo), Endpoint::Finite(hi)) => (lo.clone(), hi.clone()),
        _ => (rint(0), rint(1)),
    };
    let (left, width, axis_y) = (60i64, 680i64, 90i64);
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"170\" \
         viewBox=\"0 0 800 170\">\n",
    );
    s.push_str(&format!(
        "  <title>alpha-line for type {} on {}</title>\n",
        r.higgs_type, r.window
    ));
    // Shaded smoothness windows (per chamber verdicts, drawn from the
    // verdict windows clipped to the display window).
    let mut shaded: Vec<(i64, i64)> = Vec::new();
    for ch in &r.chambers {
        if !ch.verdicts.smoothness.applicable {
            continue;
        }
        let w = ch.verdicts.smoothness.window_used.intersect(&r.window);
        if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&w.lower, &w.upper) {
            if a < b {
                shaded.push((
                    svg_x(a, &lo, &hi, left, width),
                    svg_x(b, &lo, &hi, left, width),
                ));
            }
        }
    }
    shaded.sort();
    shaded.dedup();
    for (x1, x2) in shaded {
        s.push_str(&format!(
            "  <rect x=\"{x1}\" y=\"{}\" width=\"{}\" height=\"40\" fill=\"#cde8cd\"/>\n",
            axis_y - 20,
            (x2 - x1).max(1)
        ));
    }
    // Axis.
    s.push_str(&format!(
        "  <line x1=\"{left}\" y1=\"{axis_y}\" x2=\"{}\" y2=\"{axis_y}\" stroke=\"black\"/>\n",
        left + width
    ));
    for (alpha, label) in [(&lo, true), (&hi, true)]
        .iter()
        .map(|(a, l)| ((*a).clone(), *l))
    {
        let x = svg_x(&alpha, &lo, &hi, left, width);
        s.push_str(&format!(
            "  <line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"black\"/>\n",
            axis_y - 6,
            axis_y + 6
        ));
        if label {
            s.push_str(&format!(
                "  <text x=\"{x}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{alpha}</text>\n",
                axis_y + 24
            ));
        }
    }
    // Wall ticks: solid for decomposable, dashed for numerical.
    for w in &r.walls {
        let x = svg_x(&w.alpha, &lo, &hi, left, width);
        let dash = match w.status {
            WallStatus::Decomposable => "",
            WallStatus::Numerical => " stroke-dasharray=\"4 3\"",
        };
        s.push_str(&format!(
            "  <line class=\"wall\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" \
             stroke=\"#b03030\" stroke-width=\"2\"{dash}/>\n",
            axis_y - 30,
            axis_y + 30
        ));
        s.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" \
             fill=\"#b03030\">{}</text>\n",
            axis_y - 36,
            w.alpha
        ));
    }
    // Chamber labels at their sample points.
    for ch in &r.chambers {
        let x = svg_x(&ch.sample, &lo, &hi, left, width);
        s.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\" \
             fill=\"#305080\">({}, {})</text>\n",
            axis_y + 44,
            ch.lo, ch.hi
        ));
    }
    s.push_str("</svg>\n");
    s
}

// ---------------------------------------------------------------------
// CLI argument parsers (also exercised by the fuzz targets).

/// Parse a type spec "P,Q,A,B" into a validated main type.
pub fn parse_type_spec(s: &str) -> Result<HiggsType> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::InvalidInput(format!(
            "type spec must be P,Q,A,B, got {s:?}"
        )));
    }
    let mut vals = [0i64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("bad integer {part:?} in type spec")))?;
    }
    HiggsType::main(vals[0], vals[1], vals[2], vals[3])
}

/// Parse a window spec "LO,HI" (rationals) into a closed interval.
pub fn parse_window(s: &str) -> Result<ExtendedInterval> {
    let (lo_s, hi_s) = s
        .split_once(',')
        .ok_or_else(|| Error::InvalidInput(format!("window must be LO,HI, got {s:?}")))?;
    let lo: Rational = lo_s
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad window endpoint: {e}")))?;
    let hi: Rational = hi_s
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad window endpoint: {e}")))?;
    if lo > hi {
        return Err(Error::InvalidInput(format!(
            "window endpoints out of order: {lo} > {hi}"
        )));
    }
    Ok(ExtendedInterval::closed(lo, hi))
}

/// Parse a rational CLI argument ("n" or "n/d").
pub fn parse_rational_arg(s: &str) -> Result<Rational> {
    s.trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad rational: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn flagship() -> AnalysisReport {
        let t = HiggsType { p: 3, q: 2, a: 0, b: 2 };
        let c = CurveData::canonical(2).unwrap();
        analyze(
            &t,
            &c,
            Some(ExtendedInterval::closed(rint(0), rint(1))),
            AnalyzeOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn flagship_report_shape() {
        let r = flagship();
        assert_eq!(r.invariants.mu, rat(2, 5));
        assert_eq!(r.invariants.dimension, 26);
        assert_eq!(r.walls.len(), 2);
        assert_eq!(r.walls[0].alpha, rat(1, 6));
        assert!(r.walls[0].codim_bounds.is_none());
        assert!(r.walls[1].codim_bounds.is_some());
        assert_eq!(r.chambers.len(), 2);
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let r = flagship();
        let a = render(&r, Format::Json);
        let b = render(&r, Format::Json);
        assert_eq!(a, b);
        let parsed: AnalysisReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed, r);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["walls"][0]["alpha"], "1/6");
    }

    #[test]
    fn text_mentions_empty_walls() {
        let t = HiggsType { p: 2, q: 1, a: 0, b: 1 };
        let c = CurveData::canonical(2).unwrap();
        let r = analyze(
            &t,
            &c,
            Some(ExtendedInterval::closed(rint(0), rat(1, 2))),
            AnalyzeOptions::default(),
        )
        .unwrap();
        let text = render(&r, Format::Text);
        assert!(text.contains("walls: none in window"), "{text}");
    }

    #[test]
    fn svg_structure() {
        let r = flagship();
        let svg = render(&r, Format::Svg);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("class=\"wall\"").count(), r.walls.len());
        let bytes = svg.as_bytes();
        let has_decimal = bytes.windows(3).any(|w| {
            w[1] == b'.' && w[0].is_ascii_digit() && w[2].is_ascii_digit()
        });
        assert!(!has_decimal, "no floating point in SVG output");
    }

    #[test]
    fn window_required_for_equal_ranks() {
        let t = HiggsType { p: 2, q: 2, a: 0, b: 0 };
        let c = CurveData::canonical(2).unwrap();
        assert!(matches!(
            analyze(&t, &c, None, AnalyzeOptions::default()),
            Err(Error::WindowRequired)
        ));
    }

    #[test]
    fn parsers() {
        assert_eq!(
            parse_type_spec("3,2,0,2").unwrap(),
            HiggsType { p: 3, q: 2, a: 0, b: 2 }
        );
        assert!(parse_type_spec("3,2,0").is_err());
        assert!(parse_type_spec("3,2,x,2").is_err());
        assert!(parse_type_spec("0,2,0,2").is_err());

        assert_eq!(
            parse_window("-1/2,3").unwrap(),
            ExtendedInterval::closed(rat(-1, 2), rint(3))
        );
        assert!(parse_window("3,1").is_err());
        assert!(parse_window("1").is_err());
    }
}
