use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mahler_core::algebra::{parse_rat, Rat, RatMatrix, TruncatedSeries};
use mahler_core::analytic::{
    boundary_report, default_radii, profile_csv, radial_profile, singular_orbit, Orbit,
    OrbitPolicy,
};
use mahler_core::dichotomy::{classify, dfinite_guess, rational_reconstruct, SearchBounds};
use mahler_core::mahler::{
    convergence_radius_bound, expand, guess_equation, minimize, solution_space, verify,
    MahlerEquation, Verification,
};
use mahler_core::regular::{
    automaton_export, is_automatic_prefix, kernel_elements, linear_representation, regular_rank,
    thue_morse, Automaticity, SequencePrefix,
};
use mahler_core::structure::decompose;
use serde_json::{json, Value};

use crate::document::SeriesDocument;
use crate::dsl::{format_equation, parse_equation_detailed};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "mahler", version, about = "Exact tools for Mahler functional equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized procedures. Every current subcommand is
    /// deterministic, so the value only has to parse.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Args)]
pub struct EqArgs {
    /// Equation in the text syntax, e.g. "F(z) - (1-z)*F(z^2) = 0".
    #[arg(long, conflicts_with = "eq_file")]
    pub eq: Option<String>,
    /// File holding the equation text.
    #[arg(long)]
    pub eq_file: Option<PathBuf>,
    /// Radix; forces the equation's radix or supplies a sequence's.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Series document (JSON); when absent the series is expanded from the
    /// equation.
    #[arg(long)]
    pub series: Option<PathBuf>,
    /// Comma-separated leading coefficients for the expansion.
    #[arg(long, default_value = "1")]
    pub prefix: String,
    /// Truncation order of the expansion.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Number of leading values compared; defaults to `L / k^depth`.
    #[arg(long)]
    pub cmp_len: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand the solution with a given prefix.
    Expand {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, default_value = "1")]
        prefix: String,
        #[arg(long, default_value_t = 64)]
        order: usize,
    },
    /// Basis of the truncated solution space.
    Space {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, default_value_t = 64)]
        order: usize,
    },
    /// Check a series against an equation.
    Verify {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Search for an equation satisfied by a series.
    GuessEq {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 2)]
        d_max: usize,
        #[arg(long, default_value_t = 4)]
        deg_bound: usize,
    },
    /// Reduce an equation to minimal order.
    Minimize {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, default_value_t = 256)]
        order: usize,
    },
    /// Look for a rational solution with an exact certificate.
    Rationalize {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 8)]
        deg_bound: usize,
    },
    /// Look for a linear differential equation satisfied by a series.
    Dfinite {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 2)]
        ode_order: usize,
        #[arg(long, default_value_t = 4)]
        ode_deg: usize,
    },
    /// Rational certificate or evidence against rationality at bounds.
    Classify {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 8)]
        deg_bound: usize,
        #[arg(long, default_value_t = 2)]
        ode_order: usize,
        #[arg(long, default_value_t = 4)]
        ode_deg: usize,
    },
    /// Distinct k-kernel sequences and the closure check.
    Kernel {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Rank of the k-kernel.
    Rank {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        kernel: KernelArgs,
    },
    /// Linear representation over the base-k digits.
    Represent {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        kernel: KernelArgs,
    },
    /// Automaton reading base-k digits, most significant first.
    Automaton {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        kernel: KernelArgs,
    },
    /// Split the solution into H and the infinite product.
    Decompose {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Lower bound for the radius of convergence.
    Radius {
        #[command(flatten)]
        eq: EqArgs,
    },
    /// Predicted singular angles on the unit circle.
    Orbit {
        #[command(flatten)]
        eq: EqArgs,
        /// Starting angle in (0, 2pi]; accepts numbers and forms like
        /// "2pi" or "pi/3".
        #[arg(long, default_value = "2pi", value_parser = parse_angle)]
        theta: f64,
        /// Equation order when no equation is given.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        /// Follow one branch instead of the whole tree.
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, default_value_t = 64)]
        width: usize,
    },
    /// |f| along a ray inside the unit disk.
    Profile {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value = "0", value_parser = parse_angle)]
        theta: f64,
        /// Comma-separated radii.
        #[arg(long)]
        radii: Option<String>,
    },
    /// Poles, or radial profiles and orbits on a root-of-unity grid.
    Report {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, default_value_t = 8)]
        deg_bound: usize,
        #[arg(long, default_value_t = 2)]
        ode_order: usize,
        #[arg(long, default_value_t = 4)]
        ode_deg: usize,
        #[arg(long, default_value_t = 3)]
        grid_m: u32,
        #[arg(long)]
        radii: Option<String>,
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// First values of the Thue-Morse sequence.
    ThueMorse {
        #[arg(long, default_value_t = 16)]
        count: u64,
    },
}

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().replace(' ', "").to_ascii_lowercase();
    let bad = || format!("cannot read {s:?} as an angle");
    let Some(idx) = t.find("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let head = t[..idx].trim_end_matches('*');
    let tail = &t[idx + 2..];
    let factor = if head.is_empty() {
        1.0
    } else {
        head.parse::<f64>().map_err(|_| bad())?
    };
    let divisor = match tail.strip_prefix('/') {
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
        None if tail.is_empty() => 1.0,
        None => return Err(bad()),
    };
    Ok(factor * PI / divisor)
}

fn parse_radii(s: &Option<String>) -> Result<Vec<f64>, CliError> {
    match s {
        None => Ok(default_radii()),
        Some(s) => s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("bad radius {x:?}")))
            })
            .collect(),
    }
}

fn parse_prefix(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_rat(x).ok_or_else(|| CliError::Usage(format!("bad coefficient {x:?}"))))
        .collect()
}

/// Result of one subcommand before rendering.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub dot: Option<String>,
    pub default_format: Format,
    pub code: i32,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            csv: None,
            dot: None,
            default_format: Format::Json,
            code: 0,
        }
    }

    fn code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }

    pub fn render(&self, format: Option<Format>) -> Result<String, CliError> {
        let format = format.unwrap_or(self.default_format);
        let mut s = match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
            Format::Text => self.text.clone(),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::Usage("this subcommand has no CSV output".into()))?,
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| CliError::Usage("this subcommand has no DOT output".into()))?,
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Ok(s)
    }
}

fn load_equation(args: &EqArgs) -> Result<Option<MahlerEquation>, CliError> {
    let text = match (&args.eq, &args.eq_file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        (None, None) => return Ok(None),
    };
    Ok(Some(parse_equation_detailed(text.trim(), args.k)?.equation))
}

fn require_equation(args: &EqArgs) -> Result<MahlerEquation, CliError> {
    load_equation(args)?.ok_or_else(|| CliError::Usage("--eq or --eq-file is required".into()))
}

/// The series and its radix, read from `--series` or expanded from the
/// equation.
fn load_series(
    eq: Option<&MahlerEquation>,
    eq_args: &EqArgs,
    args: &SeriesArgs,
    default_order: usize,
) -> Result<(TruncatedSeries, Option<usize>), CliError> {
    if let Some(path) = &args.series {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let doc = SeriesDocument::parse(&text)?;
        let k = eq_args.k.or(doc.k).or(eq.map(|e| e.k()));
        return Ok((doc.to_series()?, k));
    }
    let eq = eq.ok_or_else(|| CliError::Usage("--series or an equation is required".into()))?;
    let f = expand(eq, &parse_prefix(&args.prefix)?, args.order.unwrap_or(default_order))?;
    Ok((f, Some(eq.k())))
}

fn series_json(f: &TruncatedSeries, k: Option<usize>) -> Value {
    serde_json::to_value(SeriesDocument::from_series(f, k)).expect("documents serialize")
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn strings(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn matrix_json(m: &RatMatrix) -> Value {
    json!((0..m.rows()).map(|i| strings(m.row(i))).collect::<Vec<_>>())
}

fn sequence(
    eq_args: &EqArgs,
    series: &SeriesArgs,
    default_order: usize,
) -> Result<SequencePrefix, CliError> {
    let eq = load_equation(eq_args)?;
    let (f, k) = load_series(eq.as_ref(), eq_args, series, default_order)?;
    let k = k.ok_or_else(|| CliError::Usage("the radix is unknown; pass --k".into()))?;
    Ok(SequencePrefix::from_series(&f, k)?)
}

fn cmp_len_for(s: &SequencePrefix, args: &KernelArgs) -> usize {
    args.cmp_len
        .unwrap_or_else(|| s.len() / (s.k() as u64).saturating_pow(args.depth as u32).max(1) as usize)
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Expand { eq, prefix, order } => {
            let e = require_equation(eq)?;
            let f = expand(&e, &parse_prefix(prefix)?, *order)?;
            Ok(Output::new(series_json(&f, Some(e.k())), join(f.coeffs())))
        }
        Command::Space { eq, order } => {
            let e = require_equation(eq)?;
            let basis = solution_space(&e, *order);
            let text = basis.iter().map(|b| join(b.coeffs())).collect::<Vec<_>>().join("\n");
            Ok(Output::new(
                json!({
                    "equation": format_equation(&e),
                    "order": order,
                    "dimension": basis.len(),
                    "basis": basis.iter().map(|b| series_json(b, Some(e.k()))).collect::<Vec<_>>(),
                }),
                format!("dimension {}\n{text}", basis.len()),
            ))
        }
        Command::Verify { eq, series } => {
            let e = require_equation(eq)?;
            let (f, _) = load_series(Some(&e), eq, series, 64)?;
            Ok(match verify(&e, &f) {
                Verification::Pass => {
                    Output::new(json!({"verdict": "pass", "order": f.order()}), "pass".into())
                }
                Verification::FailsAt(i) => Output::new(
                    json!({"verdict": "fail", "order": f.order(), "first_failure": i}),
                    format!("fail at z^{i}"),
                )
                .code(1),
            })
        }
        Command::GuessEq {
            eq,
            series,
            d_max,
            deg_bound,
        } => {
            let given = load_equation(eq)?;
            let (f, k) = load_series(given.as_ref(), eq, series, 256)?;
            let k = k.ok_or_else(|| CliError::Usage("the radix is unknown; pass --k".into()))?;
            Ok(match guess_equation(&f, k, *d_max, *deg_bound)? {
                Some(found) => Output::new(
                    json!({
                        "found": true,
                        "equation": format_equation(&found),
                        "k": k,
                        "order": found.order(),
                        "max_degree": found.max_degree(),
                    }),
                    format_equation(&found),
                ),
                None => Output::new(
                    json!({"found": false, "k": k, "d_max": d_max, "deg_bound": deg_bound}),
                    "no equation within the bounds".into(),
                )
                .code(1),
            })
        }
        Command::Minimize { eq, order } => {
            let e = require_equation(eq)?;
            let m = minimize(&e, *order)?;
            Ok(Output::new(
                json!({
                    "input": format_equation(&e),
                    "minimized": format_equation(&m),
                    "order_before": e.order(),
                    "order_after": m.order(),
                }),
                format_equation(&m),
            ))
        }
        Command::Rationalize {
            eq,
            series,
            deg_bound,
        } => {
            let e = require_equation(eq)?;
            let (f, _) = load_series(Some(&e), eq, series, 64)?;
            Ok(match rational_reconstruct(&e, &f, *deg_bound)? {
                Some(c) => {
                    let text = c.candidate.to_string();
                    Output::new(json!({"found": true, "certificate": c}), text)
                }
                None => Output::new(
                    json!({"found": false, "deg_bound": deg_bound}),
                    "no rational solution within the degree bound".into(),
                )
                .code(1),
            })
        }
        Command::Dfinite {
            eq,
            series,
            ode_order,
            ode_deg,
        } => {
            let given = load_equation(eq)?;
            let (f, _) = load_series(given.as_ref(), eq, series, 256)?;
            Ok(match dfinite_guess(&f, *ode_order, *ode_deg)? {
                Some(c) => {
                    let text = c
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, p)| format!("({p})*D^{i}F"))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    Output::new(json!({"found": true, "candidate": c}), format!("{text} = 0"))
                }
                None => Output::new(
                    json!({"found": false, "ode_order": ode_order, "ode_deg": ode_deg}),
                    "no differential equation within the bounds".into(),
                )
                .code(1),
            })
        }
        Command::Classify {
            eq,
            series,
            deg_bound,
            ode_order,
            ode_deg,
        } => {
            let e = require_equation(eq)?;
            let (f, _) = load_series(Some(&e), eq, series, 256)?;
            let bounds = SearchBounds {
                rational_deg: *deg_bound,
                ode_order: *ode_order,
                ode_deg: *ode_deg,
            };
            let c = classify(&e, &f, bounds)?;
            let json = serde_json::to_value(&c).expect("classification serializes");
            let text = json["verdict"].as_str().unwrap_or_default().to_string();
            let text = match json.pointer("/certificate/candidate") {
                Some(Value::String(r)) => format!("{text} {r}"),
                _ => text,
            };
            Ok(Output::new(json, text))
        }
        Command::Kernel { eq, series, depth } => {
            let s = sequence(eq, series, 1024)?;
            let elements = kernel_elements(&s, *depth)?;
            let status = is_automatic_prefix(&s, *depth)?;
            let shown = (s.len() / (s.k() as u64).pow(*depth as u32) as usize).min(16);
            let mut text = String::new();
            for el in &elements {
                let _ = writeln!(
                    text,
                    "l{}r{}: {}",
                    el.level,
                    el.residue,
                    join(&el.values[..shown])
                );
            }
            let _ = write!(
                text,
                "{}",
                match status {
                    Automaticity::Closed(n) => format!("closed with {n} elements"),
                    Automaticity::NotClosedAtDepth => "not closed at this depth".into(),
                }
            );
            Ok(Output::new(
                json!({
                    "k": s.k(),
                    "depth": depth,
                    "count": elements.len(),
                    "elements": elements.iter().map(|el| json!({
                        "level": el.level,
                        "residue": el.residue,
                        "head": strings(&el.values[..shown]),
                    })).collect::<Vec<_>>(),
                    "automaticity": status,
                }),
                text,
            ))
        }
        Command::Rank { eq, series, kernel } => {
            let s = sequence(eq, series, 1024)?;
            let cmp = cmp_len_for(&s, kernel);
            let r = regular_rank(&s, kernel.depth, cmp)?;
            Ok(Output::new(
                json!({"k": s.k(), "depth": kernel.depth, "cmp_len": cmp, "rank": r}),
                r.to_string(),
            ))
        }
        Command::Represent { eq, series, kernel } => {
            let s = sequence(eq, series, 1024)?;
            let cmp = cmp_len_for(&s, kernel);
            let rep = linear_representation(&s, kernel.depth, cmp)?;
            let mut text = format!("rank {}\nu = [{}]\nv = [{}]", rep.rank(), join(&rep.u), join(&rep.v));
            for (j, m) in rep.digit_matrices.iter().enumerate() {
                let _ = write!(text, "\nA{j} =");
                for i in 0..m.rows() {
                    let _ = write!(text, "\n  [{}]", join(m.row(i)));
                }
            }
            Ok(Output::new(
                json!({
                    "k": rep.k(),
                    "rank": rep.rank(),
                    "digit_order": "lsd",
                    "u": strings(&rep.u),
                    "v": strings(&rep.v),
                    "digit_matrices": rep.digit_matrices.iter().map(matrix_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Automaton { eq, series, kernel } => {
            let s = sequence(eq, series, 1024)?;
            let cmp = cmp_len_for(&s, kernel);
            let a = automaton_export(&linear_representation(&s, kernel.depth, cmp)?)?;
            let mut text = String::new();
            for (i, st) in a.states.iter().enumerate() {
                let targets: Vec<String> =
                    a.transitions[i].iter().map(|&t| a.states[t].label()).collect();
                let _ = writeln!(text, "{} / {} -> {}", st.label(), st.output, targets.join(" "));
            }
            let mut out = Output::new(
                json!({
                    "k": a.k,
                    "digit_order": "msd",
                    "initial": a.states[0].label(),
                    "states": a.states.iter().map(|st| json!({
                        "label": st.label(),
                        "output": st.output.to_string(),
                    })).collect::<Vec<_>>(),
                    "transitions": a.transitions,
                }),
                text,
            );
            out.dot = Some(a.to_dot());
            out.default_format = Format::Dot;
            Ok(out)
        }
        Command::Decompose { eq, series } => {
            let e = require_equation(eq)?;
            let (f, _) = load_series(Some(&e), eq, series, 256)?;
            let d = decompose(&e, &f)?;
            let text = format!(
                "rho = {}\ndelta0 = {}\nGamma = {}\nH = {}\nrank evidence = {}",
                d.gamma_data.rho,
                d.gamma_data.delta0,
                d.gamma_data.gamma,
                join(d.h.coeffs()),
                d.h_rank_evidence.map_or("unavailable".into(), |r| r.to_string())
            );
            Ok(Output::new(
                json!({
                    "rho": d.gamma_data.rho.to_string(),
                    "delta0": d.gamma_data.delta0,
                    "gamma": d.gamma_data.gamma.to_string(),
                    "product": series_json(&d.product, Some(e.k())),
                    "h": series_json(&d.h, Some(e.k())),
                    "rank_depth": d.rank_depth,
                    "rank_cmp_len": d.rank_cmp_len,
                    "h_rank_evidence": d.h_rank_evidence,
                }),
                text,
            ))
        }
        Command::Radius { eq } => {
            let e = require_equation(eq)?;
            let r = convergence_radius_bound(&e);
            Ok(Output::new(
                serde_json::to_value(&r).expect("radius serializes"),
                r.radius.to_string(),
            ))
        }
        Command::Orbit {
            eq,
            theta,
            d,
            steps,
            j,
            width,
        } => {
            let given = load_equation(eq)?;
            let k = eq
                .k
                .or(given.as_ref().map(|e| e.k()))
                .ok_or_else(|| CliError::Usage("pass --k or an equation".into()))?;
            let d = d
                .or(given.as_ref().map(|e| e.order()))
                .ok_or_else(|| CliError::Usage("pass --d or an equation".into()))?;
            let policy = match j {
                Some(j) => OrbitPolicy::Fixed(*j),
                None => OrbitPolicy::AllPaths { width: *width },
            };
            let orbit = singular_orbit(*theta, k, d, *steps, policy)?;
            let text = match &orbit {
                Orbit::Path(p) => join(&p.angles),
                Orbit::Tree(t) => t
                    .levels
                    .iter()
                    .map(|l| join(l.iter().map(|n| n.angle)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok(Output::new(serde_json::to_value(&orbit).expect("orbit serializes"), text))
        }
        Command::Profile {
            eq,
            series,
            theta,
            radii,
        } => {
            let given = load_equation(eq)?;
            let (f, _) = load_series(given.as_ref(), eq, series, 2048)?;
            let rows = radial_profile(&f, *theta, &parse_radii(radii)?)?;
            let csv = profile_csv(&rows);
            let mut out = Output::new(json!(rows), csv.clone());
            out.csv = Some(csv);
            out.default_format = Format::Csv;
            Ok(out)
        }
        Command::Report {
            eq,
            series,
            deg_bound,
            ode_order,
            ode_deg,
            grid_m,
            radii,
            steps,
        } => {
            let e = require_equation(eq)?;
            let (f, _) = load_series(Some(&e), eq, series, 1024)?;
            let bounds = SearchBounds {
                rational_deg: *deg_bound,
                ode_order: *ode_order,
                ode_deg: *ode_deg,
            };
            let c = classify(&e, &f, bounds)?;
            let report = boundary_report(&e, &f, &c, *grid_m, &parse_radii(radii)?, *steps)?;
            let json = json!({"classification": c, "report": report});
            let text = match &json["report"]["kind"] {
                Value::String(kind) => kind.clone(),
                _ => String::new(),
            };
            Ok(Output::new(json, text))
        }
        Command::ThueMorse { count } => {
            let values: Vec<i64> = (0..*count).map(thue_morse).collect();
            let mut out = Output::new(json!({"values": values}), join(&values));
            out.default_format = Format::Text;
            Ok(out)
        }
    }
}
