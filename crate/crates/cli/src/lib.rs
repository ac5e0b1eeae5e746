//! Command-line front end for `tropical-core`.
//!
//! Every command prints one JSON object `{"command", "input", "result"}` on
//! standard output. Diagnostics go to standard error. Exit status is 0 on
//! success, 2 for usage and parse errors, 1 for domain errors.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;
use tropical_core::canon::{Comparison, PowerDivisibility};
use tropical_core::ideals::{congruent_mod, radical_member};
use tropical_core::univariate::{factor, roots};
use tropical_core::variety::{dominance_graph, variety_cells, variety_included};
use tropical_core::{canonicalize, MaxPlus, Polynomial, Rational};

use parse::{parse_all, Convention, ParseError};
use render::BoundingBox;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] tropical_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Domain(e) if e.is_usage() => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Log,
    Classical,
}

#[derive(Debug, Parser)]
#[command(name = "tropical", version, about = "Exact max-plus polynomial algebra")]
struct Cli {
    /// How numeric literals are read.
    #[arg(long, value_enum, default_value = "log", global = true)]
    convention: ConventionArg,
    /// Base of the logarithm for the classical convention.
    #[arg(long, global = true)]
    base: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal and maximal representatives of the canonical class.
    Canon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Roots with multiplicities of a univariate polynomial.
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Linear factorization of a univariate polynomial.
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Equality as functions, with a separating point when different.
    Equal {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Whether DIVISOR divides DIVIDEND; prints the cofactor.
    Divides {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
    },
    /// Least k with DIVISOR | POWERED^k, searched up to --kmax.
    DividesPower {
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        powered: String,
        #[arg(long, default_value_t = 64)]
        kmax: u32,
    },
    /// Whether CANDIDATE lies in the radical of the ideal of GENERATOR.
    RadicalMember {
        #[arg(allow_hyphen_values = true)]
        candidate: String,
        #[arg(allow_hyphen_values = true)]
        generator: String,
    },
    /// Whether LEFT and RIGHT agree on the variety of --mod.
    Congruent {
        #[arg(long = "mod", allow_hyphen_values = true)]
        modulus: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Cells of the variety; optionally an SVG picture for two variables.
    Variety {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// xmin,ymin,xmax,ymax
        #[arg(long, default_value = "-5,-5,5,5", allow_hyphen_values = true)]
        bbox: String,
    },
    /// Dominance graph; optionally written as DOT.
    Graph {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn rational_arg(text: &str, what: &str) -> Result<Rational, CliError> {
    match parse::parse(text, &Convention::Log) {
        Ok(parse::Expr::Literal(c)) => c.into_value().ok_or_else(|| CliError::Usage(format!("{what} must be finite"))),
        _ => Err(CliError::Usage(format!("{what}: expected a rational, found '{text}'"))),
    }
}

fn bounding_box(text: &str) -> Result<BoundingBox, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [xmin, ymin, xmax, ymax] = parts.as_slice() else {
        return Err(CliError::Usage("--bbox expects xmin,ymin,xmax,ymax".into()));
    };
    let b = BoundingBox {
        xmin: rational_arg(xmin, "--bbox")?,
        ymin: rational_arg(ymin, "--bbox")?,
        xmax: rational_arg(xmax, "--bbox")?,
        ymax: rational_arg(ymax, "--bbox")?,
    };
    if b.xmin >= b.xmax || b.ymin >= b.ymax {
        return Err(CliError::Usage("--bbox must have xmin < xmax and ymin < ymax".into()));
    }
    Ok(b)
}

struct Output {
    result: Value,
    extra: Vec<(&'static str, Value)>,
}

impl From<Value> for Output {
    fn from(result: Value) -> Self {
        Output { result, extra: Vec::new() }
    }
}

fn univariate(p: Polynomial<MaxPlus>) -> Result<Polynomial<MaxPlus>, CliError> {
    if p.arity() != 1 {
        return Err(tropical_core::Error::NotUnivariate(p.arity()).into());
    }
    Ok(p)
}

fn execute(cli: &Cli, stderr: &mut dyn Write) -> Result<(&'static str, Vec<String>, Output), CliError> {
    let convention = match (cli.convention, &cli.base) {
        (ConventionArg::Log, None) => Convention::Log,
        (ConventionArg::Log, Some(_)) => return Err(CliError::Usage("--base requires --convention classical".into())),
        (ConventionArg::Classical, None) => return Err(CliError::Usage("--convention classical requires --base".into())),
        (ConventionArg::Classical, Some(b)) => {
            let base = rational_arg(b, "--base")?;
            if base <= Rational::from_integer(0.into()) || base == Rational::from_integer(1.into()) {
                return Err(CliError::Usage("--base must be positive and different from 1".into()));
            }
            Convention::Classical { base }
        }
    };
    let polys = |texts: &[&String]| -> Result<Vec<Polynomial<MaxPlus>>, CliError> {
        let texts: Vec<&str> = texts.iter().map(|s| s.as_str()).collect();
        Ok(parse_all(&texts, &convention)?)
    };
    let inputs = |texts: &[&String]| texts.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    Ok(match &cli.command {
        Command::Canon { expr } => {
            let p = polys(&[expr])?.remove(0);
            let r = canonicalize(&p);
            let out = json!({
                "min": render::polynomial(&r.min_representative()),
                "max": render::polynomial(&r.max_representative()),
            });
            ("canon", inputs(&[expr]), out.into())
        }
        Command::Roots { expr } => {
            let p = univariate(polys(&[expr])?.remove(0))?;
            ("roots", inputs(&[expr]), render::roots(&roots(&p)?).into())
        }
        Command::Factor { expr } => {
            let p = univariate(polys(&[expr])?.remove(0))?;
            ("factor", inputs(&[expr]), render::factorization(&factor(&p)?).into())
        }
        Command::Equal { left, right } => {
            let ps = polys(&[left, right])?;
            let out = match canonicalize(&ps[0]).compare(&canonicalize(&ps[1]))? {
                Comparison::Equal => Value::Bool(true).into(),
                Comparison::Separated(w) => Output { result: Value::Bool(false), extra: vec![("witness", render::point(&w))] },
            };
            ("equal", inputs(&[left, right]), out)
        }
        Command::Divides { divisor, dividend } => {
            let ps = polys(&[divisor, dividend])?;
            let q = canonicalize(&ps[1]).divide(&canonicalize(&ps[0]))?;
            let out = q.as_ref().map_or(Value::Null, render::class);
            ("divides", inputs(&[divisor, dividend]), out.into())
        }
        Command::DividesPower { divisor, powered, kmax } => {
            let ps = polys(&[divisor, powered])?;
            let (p, q) = (canonicalize(&ps[0]), canonicalize(&ps[1]));
            let out = match p.divides_power(&q, *kmax)? {
                PowerDivisibility::Divides { exponent, cofactor } => {
                    json!({"k": exponent, "cofactor": render::class(&cofactor)})
                }
                PowerDivisibility::NotWithin { bound } => {
                    let included = variety_included(&p, &q)?;
                    let _ = writeln!(
                        stderr,
                        "no k <= {bound} found; the varieties are {}",
                        if included { "nested, so a larger bound would succeed" } else { "not nested, so no power is divisible" }
                    );
                    Value::Null
                }
            };
            ("divides-power", inputs(&[divisor, powered]), out.into())
        }
        Command::RadicalMember { candidate, generator } => {
            let ps = polys(&[candidate, generator])?;
            let out = radical_member(&canonicalize(&ps[0]), &canonicalize(&ps[1]))?;
            ("radical-member", inputs(&[candidate, generator]), Value::Bool(out).into())
        }
        Command::Congruent { modulus, left, right } => {
            let ps = polys(&[modulus, left, right])?;
            let out = congruent_mod(&canonicalize(&ps[1]), &canonicalize(&ps[2]), &canonicalize(&ps[0]))?;
            ("congruent", inputs(&[modulus, left, right]), Value::Bool(out).into())
        }
        Command::Variety { expr, svg, bbox } => {
            let p = polys(&[expr])?.remove(0);
            let bbox = bounding_box(bbox)?;
            let v = variety_cells(&canonicalize(&p));
            if let Some(path) = svg {
                if p.arity() != 2 {
                    return Err(CliError::Usage(format!("--svg needs two variables, found {}", p.arity())));
                }
                std::fs::write(path, render::svg(&v, &bbox))?;
            }
            ("variety", inputs(&[expr]), render::variety(&v).into())
        }
        Command::Graph { expr, dot } => {
            let p = polys(&[expr])?.remove(0);
            let g = dominance_graph(&canonicalize(&p));
            if let Some(path) = dot {
                std::fs::write(path, render::dot(&g))?;
            }
            ("graph", inputs(&[expr]), render::graph(&g).into())
        }
    })
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    match execute(&cli, stderr) {
        Ok((command, input, out)) => {
            let mut envelope = serde_json::Map::new();
            envelope.insert("command".into(), json!(command));
            envelope.insert("input".into(), json!(input));
            envelope.insert("result".into(), out.result);
            for (k, v) in out.extra {
                envelope.insert(k.into(), v);
            }
            match writeln!(stdout, "{}", Value::Object(envelope)) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
