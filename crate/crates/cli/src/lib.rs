//! The `sixcube` command line: problem files in, curves, points and
//! verified identities out.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! code, so the whole front end can be driven in-process.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_traits::Zero;
use sixcube_core::prelude::*;
use sixcube_core::Error;

mod problem;

pub use problem::Problem;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error(transparent)]
    Math(#[from] Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a failed verification, 3 for a degenerate mathematical input,
    /// 2 for anything wrong with the input itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(Error::VerificationFailed { .. }) => 1,
            CliError::Math(e) if e.is_degeneracy() => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sixcube",
    version,
    about = "Exact elliptic-curve solutions of sixth-power/cube equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the quartic model v^2 = a4 u^4 + ... + a0 and q.
    Build {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the Weierstrass coefficients and discriminant.
    Transform {
        #[arg(long)]
        input: PathBuf,
    },
    /// List h = p/s with |p|, s <= bound whose quartic has a square constant.
    SearchH {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        bound: u64,
    },
    /// List small rational points on the quartic and their images.
    Points {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        bound: u64,
    },
    /// Stream verified integer identities from multiples of the generators.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Overrides "nmax" from the problem file.
        #[arg(long)]
        nmax: Option<u32>,
        /// Also walk sums k1 P1 + k2 P2 + ... of two or more generators.
        #[arg(long)]
        combine: bool,
        #[arg(long)]
        keep_trivial: bool,
        /// Print the primitive representative of each scaling class.
        #[arg(long)]
        primitive: bool,
        /// Point-search bound used when the file lists no generators.
        #[arg(long, default_value_t = 20)]
        search_bound: u64,
    },
    /// Check a candidate solution exactly.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Groups "x;y;X;Y", entries within a group separated by commas.
        #[arg(long, required_unless_present = "identity", conflicts_with = "identity")]
        solution: Option<String>,
        /// An identity line as printed by `solve`.
        #[arg(long)]
        identity: Option<String>,
    },
    /// Stream every nontrivial solution in a box, up to sign and side symmetry.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        sextic_bound: u32,
        #[arg(long)]
        cubic_bound: u32,
    },
}

/// Parses `args` (including the program name), executes the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    Problem::parse(&text)
}

fn context(problem: &Problem) -> Result<TransformContext, CliError> {
    Ok(to_weierstrass(&build_quartic(&problem.family, &problem.params)?)?)
}

fn key_values(out: &mut dyn Write, pairs: &[(&str, &dyn Display)]) -> std::io::Result<()> {
    for (key, value) in pairs {
        writeln!(out, "{key}={value}")?;
    }
    Ok(())
}

/// Runs one command, returning the exit code on success.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Build { input } => {
            let problem = load(input)?;
            let m = build_quartic(&problem.family, &problem.params)?;
            key_values(
                out,
                &[
                    ("a4", &m.a4),
                    ("a3", &m.a3),
                    ("a2", &m.a2),
                    ("a1", &m.a1),
                    ("a0", &m.constant()),
                    ("q", &m.q),
                ],
            )?;
        }
        Command::Transform { input } => {
            let ctx = context(&load(input)?)?;
            let e = ctx.curve();
            key_values(
                out,
                &[
                    ("a1", e.a1()),
                    ("a2", e.a2()),
                    ("a3", e.a3()),
                    ("a4", e.a4()),
                    ("a6", e.a6()),
                    ("discriminant", e.discriminant()),
                ],
            )?;
        }
        Command::SearchH { input, bound } => {
            let p = load(input)?;
            let hits = search_h(
                &p.family,
                p.params.cubic_u(),
                p.params.cubic_v(),
                p.params.sextic_u(),
                *bound,
            )?;
            for (h, model) in hits {
                writeln!(out, "h={h}  q={}", model.q)?;
            }
        }
        Command::Points { input, bound } => {
            let ctx = context(&load(input)?)?;
            for hit in point_search(&ctx, *bound) {
                writeln!(out, "u={}  v={}  P={}", hit.u, hit.v, hit.point)?;
            }
        }
        Command::Solve {
            input,
            nmax,
            combine,
            keep_trivial,
            primitive,
            search_bound,
        } => {
            let problem = load(input)?;
            let ctx = context(&problem)?;
            let generators = match &problem.generators {
                Some(g) => g.clone(),
                None => {
                    let found: Vec<CurvePoint> = point_search(&ctx, *search_bound)
                        .into_iter()
                        .map(|hit| hit.point)
                        .find(|p| ctx.cubic_to_quartic(p).is_ok())
                        .into_iter()
                        .collect();
                    let shown: Vec<String> = found.iter().map(ToString::to_string).collect();
                    writeln!(
                        out,
                        "# generators: {} (point search, bound {search_bound})",
                        shown.join(" ")
                    )?;
                    found
                }
            };
            for (i, g) in generators.iter().enumerate() {
                if !ctx.curve().contains_point(g) {
                    return Err(CliError::Malformed(format!("generators[{i}]: {g} is not on the curve")));
                }
            }
            let opts = GenerateOptions {
                nmax: nmax.unwrap_or(problem.nmax),
                combine: *combine,
                keep_trivial: *keep_trivial,
                primitive: *primitive,
            };
            let single = generators.len() == 1;
            for emission in generate(&problem.family, &problem.params, &ctx, &generators, opts)? {
                let e = emission?;
                let r = residual(&problem.family, &e.solution.values)?;
                if !r.is_zero() || !e.identity.holds() {
                    return Err(Error::VerificationFailed {
                        residual: Box::new(Rational::from_integer(r)),
                    }
                    .into());
                }
                let k = match &e.label {
                    PointLabel::Multiple { k, .. } if single => k.to_string(),
                    label => label.to_string(),
                };
                let flag = if e.trivial { "  (trivial)" } else { "" };
                writeln!(
                    out,
                    "k={k}  P={}  t={}  {}{flag}",
                    e.point, e.solution.scale, e.identity
                )?;
            }
        }
        Command::Verify {
            input,
            solution,
            identity,
        } => {
            let problem = load(input)?;
            let tuple = match (solution, identity) {
                (Some(text), _) => parse_tuple(text)?,
                (None, Some(text)) => Identity::parse(text)
                    .and_then(|id| id.to_solution(&problem.family))
                    .map_err(|e| CliError::Malformed(e.to_string()))?
                    .map(|v| Rational::from_integer(v.clone())),
                (None, None) => return Err(CliError::Malformed("give --solution or --identity".into())),
            };
            let r = residual(&problem.family, &tuple).map_err(|e| CliError::Malformed(e.to_string()))?;
            if r.is_zero() {
                writeln!(out, "OK residual=0")?;
            } else {
                writeln!(out, "FAIL residual={r}")?;
                return Ok(1);
            }
        }
        Command::Oracle {
            input,
            sextic_bound,
            cubic_bound,
        } => {
            let problem = load(input)?;
            for s in brute_force(&problem.family, *sextic_bound, *cubic_bound) {
                writeln!(out, "{}  {}", s.values, display_identity(&problem.family, &s.values))?;
            }
        }
    }
    Ok(0)
}

/// Reads `"x1,x2;y1;X1,X2;Y1"`: four groups of comma-separated rationals.
pub fn parse_tuple(text: &str) -> Result<RationalSolution, CliError> {
    let groups: Vec<&str> = text.split(';').collect();
    if groups.len() != 4 {
        return Err(CliError::Malformed(format!(
            "solution: expected four ';'-separated groups, found {}",
            groups.len()
        )));
    }
    let mut parsed = Vec::with_capacity(4);
    for (name, group) in ["x", "y", "X", "Y"].into_iter().zip(groups) {
        let entries = group
            .split(',')
            .enumerate()
            .map(|(i, s)| {
                parse_rational(s.trim())
                    .ok_or_else(|| CliError::Malformed(format!("solution {name}[{i}]: cannot read {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push(entries);
    }
    let yr = parsed.pop().unwrap_or_default();
    let xr = parsed.pop().unwrap_or_default();
    let y = parsed.pop().unwrap_or_default();
    let x = parsed.pop().unwrap_or_default();
    Ok(SolutionTuple::new(x, y, xr, yr))
}
