use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use upq_walls::error::Error;
use upq_walls::interval::ExtendedInterval;
use upq_walls::oracle::{cross_check, verify_identities, OracleReport};
use upq_walls::parameter_space::alpha_range;
use upq_walls::rational::Rational;
use upq_walls::report::{
    analyze, parse_rational_arg, parse_type_spec, parse_window, render, AnalyzeOptions, Format,
};
use upq_walls::theorem_engine::{
    birationality_verdict, flip_codim_bound, gl_comparison_window, irreducibility_verdict,
    smoothness_verdict,
};
use upq_walls::types::{CurveData, HiggsType};

#[derive(Parser)]
#[command(name = "upq-walls", version, about = "Exact wall-and-chamber analysis for twisted U(p,q)-Higgs bundle types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Type as P,Q,A,B (main form: p >= 1, q >= 1)
    #[arg(long = "type", value_name = "P,Q,A,B")]
    type_spec: String,
    /// Genus of the base curve (g >= 2)
    #[arg(long)]
    genus: i64,
    /// Use the canonical twist L = K (deg L = 2g-2)
    #[arg(long, conflicts_with = "deg_l")]
    canonical: bool,
    /// Twist degree deg L
    #[arg(long = "degL", value_name = "D")]
    deg_l: Option<i64>,
    /// Parameter window LO,HI (rationals); defaults to the finite alpha-range
    #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = CliFormat::Text)]
    format: CliFormat,
    /// Write output to PATH instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFormat {
    Text,
    Json,
    Svg,
}

impl From<CliFormat> for Format {
    fn from(f: CliFormat) -> Format {
        match f {
            CliFormat::Text => Format::Text,
            CliFormat::Json => Format::Json,
            CliFormat::Svg => Format::Svg,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: invariants, walls, chambers, verdicts
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Run the independent oracle against the engine and report mismatches
        #[arg(long)]
        self_check: bool,
    },
    /// Enumerate walls in the window
    Walls {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate chambers in the window
    Chambers {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Theorem verdicts at a parameter value (--alpha) or a wall (--wall)
    Verdict {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Chamber parameter value (smoothness / irreducibility / GL comparison)
        #[arg(long, value_name = "X", conflicts_with = "wall", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Wall value (birationality / flip codimension bounds)
        #[arg(long, value_name = "X", allow_hyphen_values = true)]
        wall: Option<String>,
    },
    /// Oracle suite: identities plus a full engine/oracle cross-check
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Batch analysis over all valid main types up to the given bounds (JSON lines)
    Sweep {
        /// Maximum of p and q
        #[arg(long, value_name = "RMAX")]
        ranks: i64,
        /// Maximum of |a| and |b|
        #[arg(long, value_name = "DMAX")]
        degrees: i64,
        #[arg(long)]
        genus: i64,
        #[arg(long, conflicts_with = "deg_l")]
        canonical: bool,
        #[arg(long = "degL", value_name = "D")]
        deg_l: Option<i64>,
        /// Window LO,HI applied to every type (p = q types are skipped without it)
        #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
}

struct ResolvedInput {
    t: HiggsType,
    c: CurveData,
    window: Option<ExtendedInterval>,
}

fn resolve_input(input: &InputArgs) -> Result<ResolvedInput, Error> {
    let t = parse_type_spec(&input.type_spec)?;
    let c = match (input.canonical, input.deg_l) {
        (true, None) => CurveData::canonical(input.genus)?,
        (false, Some(d)) => CurveData::twisted(input.genus, d)?,
        (false, None) => {
            return Err(Error::InvalidInput(
                "one of --canonical or --degL is required".to_string(),
            ))
        }
        (true, Some(_)) => unreachable!("clap conflicts_with"),
    };
    let window = input.window.as_deref().map(parse_window).transpose()?;
    Ok(ResolvedInput { t, c, window })
}

fn emit(output: &OutputArgs, body: &str) -> Result<(), Error> {
    match &output.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}"))),
        None => {
            print!("{body}");
            std::io::stdout()
                .flush()
                .map_err(|e| Error::InvalidInput(format!("stdout: {e}")))
        }
    }
}

fn json_body<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Exit status distinguishing user error (1) from an engine/oracle
/// disagreement (2).
enum Failure {
    Input(Error),
    Consistency(OracleReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            input,
            output,
            self_check,
        } => {
            let ResolvedInput { t, c, window } = resolve_input(&input)?;
            let report = analyze(&t, &c, window, AnalyzeOptions { self_check })?;
            let failed = report
                .self_check
                .as_ref()
                .filter(|sc| !sc.passed)
                .cloned();
            emit(&output, &render(&report, output.format.into()))?;
            match failed {
                Some(sc) => Err(Failure::Consistency(sc)),
                None => Ok(()),
            }
        }
        Command::Walls { input, output } => {
            let ResolvedInput { t, c, window } = resolve_input(&input)?;
            let report = analyze(&t, &c, window, AnalyzeOptions::default())?;
            match output.format {
                CliFormat::Json => emit(&output, &json_body(&report.walls)),
                _ => {
                    let mut body = String::new();
                    if report.walls.is_empty() {
                        body.push_str("walls: none in window\n");
                    }
                    for w in &report.walls {
                        body.push_str(&format!("{}\t{:?}\n", w.alpha, w.status));
                    }
                    emit(&output, &body)
                }
            }?;
            Ok(())
        }
        Command::Chambers { input, output } => {
            let ResolvedInput { t, c, window } = resolve_input(&input)?;
            let report = analyze(&t, &c, window, AnalyzeOptions::default())?;
            match output.format {
                CliFormat::Json => emit(&output, &json_body(&report.chambers)),
                _ => {
                    let mut body = String::new();
                    for ch in &report.chambers {
                        body.push_str(&format!(
                            "({}, {})\tsample {}\n",
                            ch.lo, ch.hi, ch.sample
                        ));
                    }
                    emit(&output, &body)
                }
            }?;
            Ok(())
        }
        Command::Verdict {
            input,
            output,
            alpha,
            wall,
        } => {
            let ResolvedInput { t, c, .. } = resolve_input(&input)?;
            let body = match (alpha, wall) {
                (Some(a), None) => {
                    let a: Rational = parse_rational_arg(&a)?;
                    let smooth = smoothness_verdict(&t, &c, &a)?;
                    let irr = irreducibility_verdict(&t, &c, &a);
                    let gl = gl_comparison_window(&t, &c);
                    match output.format {
                        CliFormat::Json => json_body(&serde_json::json!({
                            "alpha": a,
                            "smoothness": smooth,
                            "irreducibility": irr,
                            "gl_comparison": gl,
                        })),
                        _ => format!(
                            "alpha = {a}\nsmoothness: {}\nirreducibility: {}\ngl comparison: {}\n",
                            smooth.conclusion, irr.conclusion, gl.conclusion
                        ),
                    }
                }
                (None, Some(w)) => {
                    let a: Rational = parse_rational_arg(&w)?;
                    let bir = birationality_verdict(&t, &c, &a)?;
                    let codim = flip_codim_bound(&t, &c, &a)?;
                    match output.format {
                        CliFormat::Json => json_body(&serde_json::json!({
                            "wall": a,
                            "birational": bir,
                            "codim_bounds": codim,
                        })),
                        _ => {
                            let codim_line = match &codim {
                                Some(b) => format!("S+ >= {}, S- >= {}", b.bound_plus, b.bound_minus),
                                None => "no decompositions".to_string(),
                            };
                            format!(
                                "wall = {a}\nbirational: {}{}\ncodim bounds: {codim_line}\n",
                                bir.conclusion,
                                if bir.notes.is_empty() {
                                    String::new()
                                } else {
                                    format!(" ({})", bir.notes.join("; "))
                                }
                            )
                        }
                    }
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "exactly one of --alpha or --wall is required".to_string(),
                    )
                    .into())
                }
            };
            emit(&output, &body)?;
            Ok(())
        }
        Command::Check { input, output } => {
            let ResolvedInput { t, c, window } = resolve_input(&input)?;
            let range = alpha_range(&t, &c);
            let window = match window {
                Some(w) => w,
                None if range.finite => range.range,
                None => return Err(Error::WindowRequired.into()),
            };
            let report = cross_check(&t, &c, &window)?.merge(verify_identities(&[(t, c)]));
            let body = match output.format {
                CliFormat::Json => json_body(&report),
                _ => {
                    let mut s = format!(
                        "self-check: {} ({} checks, {} mismatches)\n",
                        if report.passed { "passed" } else { "FAILED" },
                        report.checked,
                        report.mismatches.len()
                    );
                    for m in &report.mismatches {
                        s.push_str(&format!(
                            "  {}: expected {}, got {}\n",
                            m.description, m.expected, m.actual
                        ));
                    }
                    s
                }
            };
            emit(&output, &body)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Consistency(report))
            }
        }
        Command::Sweep {
            ranks,
            degrees,
            genus,
            canonical,
            deg_l,
            window,
            out,
        } => {
            if ranks < 1 || degrees < 0 {
                return Err(Error::InvalidInput(
                    "sweep bounds must satisfy --ranks >= 1, --degrees >= 0".to_string(),
                )
                .into());
            }
            let c = match (canonical, deg_l) {
                (true, None) => CurveData::canonical(genus)?,
                (false, Some(d)) => CurveData::twisted(genus, d)?,
                (false, None) => {
                    return Err(Error::InvalidInput(
                        "one of --canonical or --degL is required".to_string(),
                    )
                    .into())
                }
                (true, Some(_)) => unreachable!("clap conflicts_with"),
            };
            let window = window.as_deref().map(parse_window).transpose()?;

            let mut inputs = Vec::new();
            for p in 1..=ranks {
                for q in 1..=ranks {
                    for a in -degrees..=degrees {
                        for b in -degrees..=degrees {
                            if let Ok(t) = HiggsType::main(p, q, a, b) {
                                inputs.push(t);
                            }
                        }
                    }
                }
            }

            let pool = sweep_pool()?;
            let window_ref = &window;
            let c_ref = &c;
            let lines: Vec<String> = pool.install(|| {
                use rayon::prelude::*;
                inputs
                    .par_iter()
                    .map(|t| sweep_line(t, c_ref, window_ref))
                    .collect()
            });
            let mut body = String::new();
            for line in lines {
                body.push_str(&line);
                body.push('\n');
            }
            let output = OutputArgs {
                format: CliFormat::Json,
                out,
            };
            emit(&output, &body)?;
            Ok(())
        }
    }
}

fn sweep_pool() -> Result<rayon::ThreadPool, Error> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("UPQ_WALLS_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| Error::InvalidInput(format!("UPQ_WALLS_THREADS must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))
}

/// One compact JSON line per type; per-type errors become an "error" field
/// rather than aborting the batch.
fn sweep_line(t: &HiggsType, c: &CurveData, window: &Option<ExtendedInterval>) -> String {
    let range = alpha_range(t, c);
    let window = match window {
        Some(w) => Some(w.clone()),
        None if range.finite => Some(range.range.clone()),
        None => None,
    };
    let result = match window {
        Some(w) => analyze(t, c, Some(w), AnalyzeOptions::default()),
        None => Err(Error::WindowRequired),
    };
    match result {
        Ok(report) => {
            let walls: Vec<&Rational> = report.walls.iter().map(|w| &w.alpha).collect();
            serde_json::to_string(&serde_json::json!({
                "type": report.higgs_type,
                "window": report.window,
                "dimension": report.invariants.dimension,
                "toledo": report.invariants.toledo,
                "walls": walls,
                "chambers": report.chambers.len(),
            }))
            .expect("serializable")
        }
        Err(e) => serde_json::to_string(&serde_json::json!({
            "type": t,
            "error": e.to_string(),
        }))
        .expect("serializable"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(0),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Consistency(report)) => {
            eprintln!(
                "internal consistency failure: {} mismatches across {} checks",
                report.mismatches.len(),
                report.checked
            );
            for m in &report.mismatches {
                eprintln!("  {}: expected {}, got {}", m.description, m.expected, m.actual);
            }
            ExitCode::from(2)
        }
    }
}
