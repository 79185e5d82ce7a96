//! `spreadpoly <gen|triangle|verify|eval|series> [args] [--method M] [--format text|json|csv] [--max-n N]`
//!
//! [`run`] is a pure function of argv: it returns the exit code and both
//! output streams instead of printing, so the binary and the tests share it.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fmt;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use spreadpoly_core::gf::{expand, gf_of, GfKind};
use spreadpoly_core::sequences::{
    chebyshev_t, fibonacci, lucas, spread_z_univariate, triangle, univariate_l, wildberger_spread, z_polynomial,
    FibMethod, LucasMethod, SpreadMethod, ZMethod,
};
use spreadpoly_core::{BiPoly, BigRat, UniPoly};

use crate::format::{parse_rational, triangle_csv, triangle_json, triangle_text, PolyJson};
use crate::verify::{parse_selection, render_reports, run_suites};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "spreadpoly", version, about = "Exact bivariate spread, Fibonacci and Lucas polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one polynomial of a family.
    Gen {
        /// F, L, Z (bivariate) or l, Zx, S, T (univariate).
        family: String,
        n: u32,
        #[arg(long)]
        method: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print rows 1..=N of the coefficient triangle of Z_n.
    Triangle {
        #[arg(value_name = "N")]
        size: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites (`all` or one suite name).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// Evaluate a polynomial exactly at rational literals (`p/q` or integers).
    Eval {
        family: String,
        n: u32,
        #[arg(allow_hyphen_values = true)]
        x0: String,
        /// Required for F, L and Z; not accepted by univariate families.
        #[arg(allow_hyphen_values = true)]
        s0: Option<String>,
        #[arg(long)]
        method: Option<String>,
    },
    /// Print the series coefficients of z^0..=z^N of a generating function.
    Series {
        /// fibonacci, lucas or z_shifted.
        kind: String,
        #[arg(value_name = "N")]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Poly {
    Bi(BiPoly),
    Uni(UniPoly),
}

impl Poly {
    fn json(&self, family: &str, n: u32) -> PolyJson {
        match self {
            Poly::Bi(p) => PolyJson::from_bipoly(family, n, p),
            Poly::Uni(p) => PolyJson::from_unipoly(family, n, p),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Poly::Bi(p) => p.fmt(f),
            Poly::Uni(p) => p.fmt(f),
        }
    }
}

fn parse_method<M>(family: &str, method: Option<&str>, default: M) -> Result<M, String>
where
    M: std::str::FromStr,
{
    match method {
        None => Ok(default),
        Some(m) => m.parse().map_err(|_| format!("unknown method `{m}` for family {family}")),
    }
}

fn only_recurrence(family: &str, method: Option<&str>) -> Result<(), String> {
    match method {
        None | Some("recurrence") => Ok(()),
        Some(m) => Err(format!("unknown method `{m}` for family {family} (only `recurrence`)")),
    }
}

fn build(family: &str, n: u32, method: Option<&str>) -> Result<Poly, String> {
    Ok(match family {
        "F" => Poly::Bi(fibonacci(n, parse_method(family, method, FibMethod::Recurrence)?)),
        "L" => Poly::Bi(lucas(n, parse_method(family, method, LucasMethod::Recurrence)?).map_err(|e| e.to_string())?),
        "Z" => Poly::Bi(z_polynomial(n, parse_method(family, method, ZMethod::Recurrence)?)),
        "Zx" => Poly::Uni(spread_z_univariate(n, parse_method(family, method, SpreadMethod::ViaL)?)),
        "l" => {
            only_recurrence(family, method)?;
            Poly::Uni(univariate_l(n))
        }
        "T" => {
            only_recurrence(family, method)?;
            Poly::Uni(chebyshev_t(n))
        }
        "S" => {
            if let Some(m) = method {
                return Err(format!("family S takes no --method (got `{m}`)"));
            }
            Poly::Uni(wildberger_spread(n))
        }
        _ => return Err(format!("unknown family `{family}` (expected F, L, Z, l, Zx, S or T)")),
    })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(msg) => Outcome::usage(msg),
    }
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Gen { family, n, method, format } => {
            let p = build(&family, n, method.as_deref())?;
            Ok(Outcome::ok(match format {
                Format::Text => format!("{p}\n"),
                Format::Json => format!("{}\n", p.json(&family, n).to_json()),
                Format::Csv => return Err("csv output is only available for `triangle`".into()),
            }))
        }
        Command::Triangle { size, format } => {
            let t = triangle(size).map_err(|_| format!("triangle size must be at least 1 (got {size})"))?;
            Ok(Outcome::ok(match format {
                Format::Text => triangle_text(&t),
                Format::Json => format!("{}\n", triangle_json(&t)),
                Format::Csv => triangle_csv(&t),
            }))
        }
        Command::Verify { suite, max_n } => {
            let suites = parse_selection(&suite)?;
            let reports = run_suites(&suites, max_n);
            let code = if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAILED };
            Ok(Outcome { code, stdout: render_reports(&reports), stderr: String::new() })
        }
        Command::Eval { family, n, x0, s0, method } => {
            let x0 = parse_rational(&x0).map_err(|e| e.to_string())?;
            let s0 = s0.map(|s| parse_rational(&s)).transpose().map_err(|e| e.to_string())?;
            let value: BigRat = match (build(&family, n, method.as_deref())?, s0) {
                (Poly::Bi(p), Some(s0)) => p.evaluate(&x0, &s0),
                (Poly::Bi(_), None) => return Err(format!("family {family} needs both x0 and s0")),
                (Poly::Uni(p), None) => p.evaluate(&x0),
                (Poly::Uni(_), Some(_)) => return Err(format!("family {family} is univariate; drop s0")),
            };
            Ok(Outcome::ok(format!("{value}\n")))
        }
        Command::Series { kind, n, format } => {
            let k: GfKind =
                kind.parse().map_err(|_| format!("unknown series `{kind}` (expected fibonacci, lucas or z_shifted)"))?;
            let series = expand(&gf_of(k), n).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(match format {
                Format::Text => series.iter().map(|p| format!("{p}\n")).collect(),
                Format::Json => {
                    let items: Vec<PolyJson> =
                        series.iter().enumerate().map(|(i, p)| PolyJson::from_bipoly(k.name(), i as u32, p)).collect();
                    format!("{}\n", serde_json::to_string(&items).expect("plain data serializes"))
                }
                Format::Csv => return Err("csv output is only available for `triangle`".into()),
            }))
        }
    }
}
