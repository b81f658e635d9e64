//! Thin command-line front end over the library: enumeration, census,
//! half-cyclotomic construction, and oracle verification, with stable
//! machine-readable output.
//!
//! Exit codes: 0 success, 1 mathematical domain error or failed
//! verification, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ssav::census::{count, exists_dimension, gap_dimensions};
use ssav::error::Error;
use ssav::htclassify::enumerate;
use ssav::numthy::{cyclotomic, inverse_phi};
use ssav::oracle::{
    is_supersingular_exact, is_weil_structured, root_modulus_check, supersingularity_bound,
};
use ssav::psipoly::{psi, psi_two};
use ssav::report::{records_csv, records_json_lines, records_text, summary_table};
use ssav::Sign;

#[derive(Parser)]
#[command(
    name = "ssav",
    about = "Characteristic polynomials of simple supersingular abelian varieties over finite fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic (a prime).
    #[arg(long)]
    p: u64,
    /// Exponent of the field size q = p^n.
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// List every isogeny class of dimension g over F_{p^n}.
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        g: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count the isogeny classes of dimension g over F_{p^n}.
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        g: u32,
    },
    /// Existence verdict for dimension g over all finite fields.
    Exists {
        #[arg(long)]
        g: u64,
    },
    /// Gap dimensions up to a bound, one per line.
    Gaps {
        #[arg(long)]
        max: u64,
    },
    /// Print a half-cyclotomic polynomial (odd prime p, or --two +/-).
    Psi {
        /// Odd prime index (roots twisted by the Legendre symbol mod p).
        #[arg(long, conflicts_with = "two")]
        p: Option<u64>,
        /// Radicand sign for the level-8 family: + for sqrt(2), - for sqrt(-2).
        #[arg(long, allow_hyphen_values = true)]
        two: Option<String>,
        /// Odd cofactor t.
        #[arg(long)]
        t: u64,
    },
    /// Print the m-th cyclotomic polynomial.
    Cyclotomic {
        #[arg(long)]
        m: u64,
    },
    /// All m with phi(m) = k, one per line (empty output when none exist).
    InversePhi {
        #[arg(long)]
        k: u64,
    },
    /// Classification table for dimensions 1..max-g over one field.
    Table {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "max-g")]
        max_g: u32,
    },
    /// Run every oracle check on the enumeration; nonzero exit on failure.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        g: u32,
        /// Relative tolerance for the numeric root-modulus check.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Enumerate { field, g, format } => {
            let records = enumerate(field.p, field.n, g)?;
            let rendered = match format {
                Format::Text => records_text(&records),
                Format::Json => records_json_lines(&records),
                Format::Csv => records_csv(&records),
            };
            if !rendered.is_empty() {
                println!("{rendered}");
            }
        }
        Command::Count { field, g } => {
            println!("{}", count(field.p, field.n, g)?);
        }
        Command::Exists { g } => {
            if g == 0 {
                return Err(Error::OutOfRange("dimension g must be >= 1".into()));
            }
            println!("{}", exists_dimension(g).as_str());
        }
        Command::Gaps { max } => {
            for g in gap_dimensions(max) {
                println!("{g}");
            }
        }
        Command::Psi { p, two, t } => {
            let poly = match (p, two) {
                (Some(p), None) => psi(p, t)?,
                (None, Some(sign)) => {
                    let sign = match sign.as_str() {
                        "+" | "plus" => Sign::Plus,
                        "-" | "minus" => Sign::Minus,
                        other => {
                            return Err(Error::BadArguments(format!(
                                "--two expects + or -, got {other}"
                            )))
                        }
                    };
                    psi_two(t, sign)?
                }
                _ => {
                    return Err(Error::BadArguments(
                        "psi needs exactly one of --p or --two".into(),
                    ))
                }
            };
            println!("{poly}");
        }
        Command::Cyclotomic { m } => {
            if m == 0 {
                return Err(Error::OutOfRange("m must be >= 1".into()));
            }
            println!("{}", cyclotomic(m));
        }
        Command::InversePhi { k } => {
            if k == 0 {
                return Err(Error::OutOfRange("k must be >= 1".into()));
            }
            for m in inverse_phi(k) {
                println!("{m}");
            }
        }
        Command::Table { field, max_g } => {
            print!("{}", summary_table(field.p, field.n, max_g)?);
        }
        Command::Verify { field, g, tol } => {
            let records = enumerate(field.p, field.n, g)?;
            let q = ssav::numthy::prime_power(field.p, field.n);
            let mut failures = 0usize;
            for rec in &records {
                let structured = is_weil_structured(&rec.char_poly, &q)?;
                let bound = supersingularity_bound(rec.weil_poly.degree().unwrap());
                let exact = is_supersingular_exact(&rec.weil_poly, &q, bound);
                let modulus = root_modulus_check(&rec.weil_poly, &q, tol)?;
                let dimension_ok =
                    rec.weil_poly.degree().unwrap() as u64 * rec.e as u64 == 2 * g as u64;
                let ok = structured && exact.is_some() && modulus && dimension_ok;
                if !ok {
                    failures += 1;
                }
                println!(
                    "{} weil={} structure={} exact={} modulus={} dim={}",
                    if ok { "ok  " } else { "FAIL" },
                    rec.weil_poly,
                    structured,
                    exact.map_or("absent".to_string(), |n| format!("N={n}")),
                    modulus,
                    dimension_ok,
                );
            }
            println!(
                "verified {} record(s), {} failure(s)",
                records.len(),
                failures
            );
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
