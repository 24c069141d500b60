//! `apery` command-line front end.
//!
//! Every subcommand prints one JSON object per line (or CSV rows where
//! supported) and maps its outcome to an exit status: 0 ok, 1 a requested
//! check failed, 2 usage error, 3 precision error.

use std::ffi::OsString;
use std::io::Write;

use apery_core::analytic::{
    beukers_integral, cf_convergent, constant_digits, limit_rates, reference_catalan, reference_zeta4,
    zeta4_series,
};
use apery_core::certificate::{build_certificate, verify_telescoping};
use apery_core::exact::{rat, ExactRational};
use apery_core::hypergeom::{coefficient_quadruple, partial_fractions};
use apery_core::sequences::{asymptotic_report, check_inclusions, pair, pairs, Family, InclusionMode};
use apery_core::{BigFloat, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
    UsageError,
    PrecisionError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::UsageError => 2,
            Status::PrecisionError => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    /// Every record that was printed, in order.
    pub records: Vec<Value>,
}

#[derive(Parser, Debug)]
#[command(name = "apery", version, about = "Exact and high-precision tools for the Catalan and zeta(4) recurrences")]
struct Cli {
    /// Suppress log output on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    /// Output format; CSV is available for pair, range and check.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Catalan,
    Zeta4,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Catalan => Family::Catalan,
            FamilyArg::Zeta4 => Family::Zeta4,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Proved,
    Strong,
}

impl From<ModeArg> for InclusionMode {
    fn from(m: ModeArg) -> InclusionMode {
        match m {
            ModeArg::Proved => InclusionMode::Proved,
            ModeArg::Strong => InclusionMode::Strong,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact (u_n, v_n) for one n.
    Pair {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
    },
    /// Stream pairs for 0..=n-max.
    Range {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: u64,
    },
    /// Denominator inclusions for 0..=n-max.
    Check {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Partial-fraction table and linear-form coefficients (Catalan kernel).
    Decompose {
        #[arg(long)]
        n: u64,
    },
    /// Exact telescoping verification for 1..=n-max.
    Certify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n_max: u64,
    },
    /// Continued-fraction convergent compared with v_n/u_n.
    Cf {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
    },
    /// Decimal digits of the constant via the recurrence.
    Digits {
        #[arg(long, value_enum)]
        constant: FamilyArg,
        #[arg(long)]
        digits: u32,
    },
    /// Double-integral representation of the Catalan linear form.
    Integral {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        digits: u32,
    },
    /// Series representation of the zeta(4) linear form.
    Series {
        #[arg(long, value_enum)]
        constant: FamilyArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        digits: u32,
    },
    /// Per-step logarithmic growth and decay rates.
    Asymptotics {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        digits: u32,
    },
}

/// Parses a `"p/q"` (or integer) string produced by this tool.
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    s.parse().ok()
}

fn q(r: &ExactRational) -> String {
    r.to_string()
}

fn sci(x: &BigFloat, sig: usize) -> String {
    x.to_scientific(sig)
}

#[derive(Serialize)]
struct PairRecord {
    n: u64,
    u: String,
    v: String,
}

#[derive(Serialize)]
struct InclusionRecord {
    family: &'static str,
    n: u64,
    mode: &'static str,
    pass_u: bool,
    pass_v: bool,
    witness_u: Option<String>,
    witness_v: Option<String>,
}

#[derive(Serialize)]
struct DecomposeRecord {
    n: u64,
    table: [Vec<String>; 3],
    u: String,
    u_prime: String,
    u_double_prime: String,
    v: String,
    matches_sequence: bool,
}

#[derive(Serialize)]
struct CertifyRecord {
    n: u64,
    telescoping: bool,
    s_at_zero: String,
}

#[derive(Serialize)]
struct CfRecord {
    family: &'static str,
    n: u64,
    value: String,
    equals_ratio: bool,
}

#[derive(Serialize)]
struct DigitsRecord {
    constant: &'static str,
    digits: u32,
    value: String,
    n_used: u64,
    error_bound: String,
}

#[derive(Serialize)]
struct ResidualRecord {
    n: u64,
    digits: u32,
    value: String,
    linear_form: String,
    residual: String,
    passed: bool,
}

#[derive(Serialize)]
struct AsymptoticsRecord {
    family: &'static str,
    n: u64,
    digits: u32,
    rate_u: String,
    rate_form: String,
    limit_u: String,
    limit_form: String,
}

struct Emitter<'a, W: Write> {
    out: &'a mut W,
    format: Format,
    records: Vec<Value>,
    header_written: bool,
}

impl<W: Write> Emitter<'_, W> {
    fn emit<T: Serialize>(&mut self, record: &T) -> std::io::Result<()> {
        let value = serde_json::to_value(record).expect("records serialize");
        match self.format {
            Format::Json => writeln!(self.out, "{value}")?,
            Format::Csv => {
                let obj = value.as_object().expect("records are objects");
                if !self.header_written {
                    let header: Vec<&str> = obj.keys().map(String::as_str).collect();
                    writeln!(self.out, "{}", header.join(","))?;
                    self.header_written = true;
                }
                let row: Vec<String> = obj
                    .values()
                    .map(|v| match v {
                        Value::String(s) => s.clone(),
                        Value::Null => String::new(),
                        other => other.to_string(),
                    })
                    .collect();
                writeln!(self.out, "{}", row.join(","))?;
            }
        }
        self.records.push(value);
        Ok(())
    }
}

enum Failure {
    Usage(String),
    Precision(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PrecisionTooLow(_) | Error::NonConvergence(_) => Failure::Precision(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn pow10_neg(e: u32) -> BigFloat {
    use apery_core::ExactInteger;
    BigFloat::from_rational(&ExactRational::from((1, ExactInteger::from(ExactInteger::u_pow_u(10, e)))), 30)
}

fn linear_form(u: &ExactRational, v: &ExactRational, c: &BigFloat) -> BigFloat {
    &c.mul_rational(u) - &BigFloat::from_rational(v, c.digits())
}

/// Runs one command line (including the program name) and writes its
/// records to `out`; diagnostics go to stderr.
pub fn run<I, T, W>(argv: I, out: &mut W) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    Status::Ok
                }
                _ => {
                    eprint!("{e}");
                    Status::UsageError
                }
            };
            return CommandResult { status, records: Vec::new() };
        }
    };
    let level = if cli.quiet { log::LevelFilter::Off } else { log::LevelFilter::Info };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
    log::set_max_level(level);

    let mut emitter = Emitter {
        out,
        format: cli.format,
        records: Vec::new(),
        header_written: false,
    };
    let outcome = dispatch(cli.command, cli.format, &mut emitter);
    let records = emitter.records;
    let status = match outcome {
        Ok(true) => Status::Ok,
        Ok(false) => Status::VerificationFailed,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            Status::UsageError
        }
        Err(Failure::Precision(msg)) => {
            eprintln!("error: {msg}");
            Status::PrecisionError
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            Status::UsageError
        }
    };
    CommandResult { status, records }
}

/// `Ok(false)` when a requested verification failed.
fn dispatch<W: Write>(command: Command, format: Format, em: &mut Emitter<'_, W>) -> Result<bool, Failure> {
    let csv_ok = matches!(command, Command::Pair { .. } | Command::Range { .. } | Command::Check { .. });
    if format == Format::Csv && !csv_ok {
        return Err(Failure::Usage("CSV output is only available for pair, range and check".into()));
    }
    match command {
        Command::Pair { family, n } => {
            let p = pair(family.into(), n);
            em.emit(&PairRecord { n, u: q(&p.u), v: q(&p.v) })?;
            Ok(true)
        }
        Command::Range { family, n_max } => {
            for p in pairs(family.into(), n_max) {
                em.emit(&PairRecord { n: p.n, u: q(&p.u), v: q(&p.v) })?;
            }
            Ok(true)
        }
        Command::Check { family, n_max, mode } => {
            let mut all = true;
            for n in 0..=n_max {
                let r = check_inclusions(family.into(), n, mode.into());
                all &= r.passed();
                if !r.passed() {
                    log::warn!("{} inclusion fails at n = {n}", r.mode);
                }
                em.emit(&InclusionRecord {
                    family: r.family.name(),
                    n,
                    mode: r.mode.name(),
                    pass_u: r.pass_u,
                    pass_v: r.pass_v,
                    witness_u: r.witness_u.map(|w| w.to_string()),
                    witness_v: r.witness_v.map(|w| w.to_string()),
                })?;
            }
            Ok(all)
        }
        Command::Decompose { n } => {
            let table = partial_fractions(n);
            let quad = coefficient_quadruple(n);
            let p = pair(Family::Catalan, n);
            let matches = quad.u_prime == p.u * 8u32 && quad.v == p.v * 8u32;
            let row = |j: usize| table.row(j).iter().map(q).collect::<Vec<_>>();
            em.emit(&DecomposeRecord {
                n,
                table: [row(0), row(1), row(2)],
                u: q(&quad.u),
                u_prime: q(&quad.u_prime),
                u_double_prime: q(&quad.u_double_prime),
                v: q(&quad.v),
                matches_sequence: matches,
            })?;
            Ok(matches)
        }
        Command::Certify { family, n_max } => {
            if family != FamilyArg::Catalan {
                return Err(Failure::Usage("a telescoping certificate is only available for catalan".into()));
            }
            let mut all = true;
            for n in 1..=n_max {
                log::info!("certifying n = {n}");
                let ok = verify_telescoping(n)?;
                let s0 = build_certificate(n)?.big_s.eval(&rat(0, 1))?;
                all &= ok && s0 == 0;
                em.emit(&CertifyRecord { n, telescoping: ok, s_at_zero: q(&s0) })?;
            }
            Ok(all)
        }
        Command::Cf { family, n } => {
            let c = cf_convergent(family.into(), n)?;
            let equal = c.value == pair(family.into(), n).ratio();
            em.emit(&CfRecord {
                family: c.family.name(),
                n,
                value: q(&c.value),
                equals_ratio: equal,
            })?;
            Ok(equal)
        }
        Command::Digits { constant, digits } => {
            if digits == 0 {
                return Err(Failure::Usage("--digits must be at least 1".into()));
            }
            let d = constant_digits(constant.into(), digits);
            em.emit(&DigitsRecord {
                constant: d.constant.name(),
                digits,
                value: d.value,
                n_used: d.n_used,
                error_bound: sci(&d.error_bound, 3),
            })?;
            Ok(true)
        }
        Command::Integral { n, digits } => {
            // The integral equals 8·(−1)^n·(u_nG − v_n).
            let integral = beukers_integral(n, digits)?;
            let p = pair(Family::Catalan, n);
            let form = linear_form(&p.u, &p.v, &reference_catalan(digits + 15));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let residual = (&integral.mul_rational(&rat(sign, 8)) - &form).abs();
            let passed = residual < pow10_neg(digits.saturating_sub(1));
            em.emit(&ResidualRecord {
                n,
                digits,
                value: sci(&integral, digits as usize + 2),
                linear_form: sci(&form, digits as usize + 2),
                residual: sci(&residual, 3),
                passed,
            })?;
            Ok(passed)
        }
        Command::Series { constant, n, digits } => {
            if constant != FamilyArg::Zeta4 {
                return Err(Failure::Usage("the series is only available for zeta4".into()));
            }
            let series = zeta4_series(n, digits)?;
            let p = pair(Family::Zeta4, n);
            let form = linear_form(&p.u, &p.v, &reference_zeta4(digits + 15));
            let residual = (&series - &form).abs();
            let passed = residual < pow10_neg(digits.saturating_sub(1));
            em.emit(&ResidualRecord {
                n,
                digits,
                value: sci(&series, digits as usize + 2),
                linear_form: sci(&form, digits as usize + 2),
                residual: sci(&residual, 3),
                passed,
            })?;
            Ok(passed)
        }
        Command::Asymptotics { family, n, digits } => {
            let family: Family = family.into();
            let r = asymptotic_report(family, n, digits)?;
            let (lu, lf) = limit_rates(family, 30);
            em.emit(&AsymptoticsRecord {
                family: family.name(),
                n,
                digits,
                rate_u: sci(&r.rate_u, 12),
                rate_form: sci(&r.rate_form, 12),
                limit_u: sci(&lu, 12),
                limit_form: sci(&lf, 12),
            })?;
            Ok(true)
        }
    }
}
