mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use filterint::exactnum::{parse_rational, to_ratio_string, PrimeModulus};
use filterint::gegx::{
    interlacing_check, verify_fixed_parameter, verify_gegenbauer_symbolic, verify_interlacing,
    verify_wz, verify_xn_congruences, verify_xn_properties, verify_xn_routes, xn_closed,
    xn_mod_prime,
};
use filterint::integrate::{filter_integrals, verify_cross_terms, verify_family, verify_laguerre_identities};
use filterint::orthopoly::generate;
use filterint::polyring::{isolate_roots, reduce_mod_prime};
use filterint::quadrature::numeric_filter_integral;
use filterint::report::Verdict;
use filterint::{Error, Execution, Family, Rational, VerificationReport};

use output::{write_records, OutputRecord, Query};

#[derive(Parser, Debug)]
#[command(name = "filterint", version, about = "Exact filter integrals of classical orthogonal polynomials")]
struct Cli {
    /// Reserved; accepted and ignored.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// legendre, hermite, chebyshev-t, chebyshev-u, laguerre or gegenbauer
    #[arg(long)]
    family: String,
    /// Gegenbauer parameter as p/q in lowest terms (a > -1/2, a != 0)
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of A_n, lowest degree first
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
    },
    /// The filter integral of A_n
    Integral {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Gauss points for numeric mode (default n + 2)
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// One record per n in a range
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_from: u64,
        #[arg(long)]
        n_to: u64,
        #[arg(long, value_enum)]
        format: Format,
    },
    /// The polynomials X_n(a)
    Xn {
        #[arg(long)]
        n: u64,
        #[arg(long, group = "what")]
        coeffs: bool,
        #[arg(long, group = "what")]
        zeros: bool,
        #[arg(long, group = "what")]
        modq: Option<u64>,
        #[arg(long, group = "what")]
        interlace: bool,
    },
    /// Run verification suites; exit 1 on any exact mismatch
    Verify {
        #[arg(long, conflicts_with = "all")]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_a(a: &Option<String>) -> Result<Option<Rational>, Failure> {
    a.as_deref()
        .map(|s| parse_rational(s, true))
        .transpose()
        .map_err(usage)
}

fn family(args: &FamilyArgs) -> Result<Family, Failure> {
    Family::from_name(&args.family, parse_a(&args.a)?).map_err(usage)
}

fn exact_record(fam: &Family, n: u64, value: &filterint::IntegralValue) -> OutputRecord {
    OutputRecord {
        family: fam.name().to_string(),
        n,
        a: fam.param().map(to_ratio_string),
        exact_coefficient: to_ratio_string(&value.coeff),
        constant_tag: value.tag.as_str().to_string(),
        numeric_value: value.to_f64(fam.param()),
        verdict: None,
    }
}

fn integral_value(fam: &Family, n: u64) -> filterint::IntegralValue {
    filter_integrals(fam, n, Execution::Sequential)
        .pop()
        .unwrap_or_else(|| filterint::IntegralValue::zero(fam.tag()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { family: f, n } => {
            let fam = family(&f)?;
            let p = generate(&fam, n as usize);
            let coeffs: Vec<String> = p.coeffs().iter().map(to_ratio_string).collect();
            writeln!(out, "{}", coeffs.join(", "))?;
        }
        Command::Integral { family: f, n, mode, points, format } => {
            let fam = family(&f)?;
            let value = integral_value(&fam, n);
            let mut record = exact_record(&fam, n, &value);
            if mode == Mode::Numeric {
                let m = points.unwrap_or(n as usize + 2);
                let numeric = numeric_filter_integral(&fam, n as usize, m).map_err(usage)?;
                let exact = record.numeric_value.unwrap_or(f64::NAN);
                let ok = if exact == 0.0 {
                    numeric.abs() < 1e-10
                } else {
                    ((numeric - exact) / exact).abs() <= 1e-10
                };
                record.numeric_value = Some(numeric);
                record.verdict = Some(if ok { "match" } else { "mismatch" }.to_string());
            }
            let query = Query::new("integral", &fam).with("n", n).with("mode", format!("{mode:?}").to_lowercase());
            write_records(out, format, &query, &[record])?;
        }
        Command::Table { family: f, n_from, n_to, format } => {
            let fam = family(&f)?;
            if n_from > n_to {
                return Err(Failure::Usage(format!("--n-from {n_from} exceeds --n-to {n_to}")));
            }
            let values = filter_integrals(&fam, n_to, Execution::default());
            let records: Vec<OutputRecord> = (n_from..=n_to)
                .map(|n| match n {
                    0 => exact_record(&fam, 0, &filterint::IntegralValue::zero(fam.tag())),
                    _ => exact_record(&fam, n, &values[n as usize - 1]),
                })
                .collect();
            let query = Query::new("table", &fam).with("n_from", n_from).with("n_to", n_to);
            write_records(out, format, &query, &records)?;
        }
        Command::Xn { n, coeffs, zeros, modq, interlace } => {
            if n == 0 {
                return Err(Failure::Usage("X_n is defined for n >= 1".into()));
            }
            let x = xn_closed(n);
            if coeffs {
                let c: Vec<String> = x.coeffs().iter().map(to_ratio_string).collect();
                writeln!(out, "{}", c.join(", "))?;
            } else if zeros {
                for b in isolate_roots(&x) {
                    writeln!(
                        out,
                        "({}, {}] ~ {:.12}",
                        to_ratio_string(&b.lo),
                        to_ratio_string(&b.hi),
                        b.midpoint_f64()
                    )?;
                }
            } else if let Some(q) = modq {
                let q = PrimeModulus::new(q).map_err(usage)?;
                let reduced = reduce_mod_prime(&x, q).map_err(usage)?;
                writeln!(out, "X_{n} = {reduced}")?;
                // the congruence claim is about X_q itself
                if n == q.get() {
                    let check = xn_mod_prime(q);
                    write!(out, "{check}")?;
                    if !check.passed() {
                        return Err(Failure::Mismatch);
                    }
                }
            } else if interlace {
                let report = interlacing_check(n).map_err(usage)?;
                let verdict = report.entries.iter().find_map(|e| match e.verdict {
                    Verdict::Informational(v) => Some(v),
                    _ => None,
                });
                writeln!(out, "interlacing Z_{n} / Z_{}: {}", n - 1, verdict.unwrap_or(false))?;
            } else {
                writeln!(out, "{}", x.display_in("a"))?;
            }
        }
        Command::Verify { family: f, a, all, n_max } => {
            let reports = if all || f.is_none() {
                verify_all(n_max)
            } else {
                let fam = Family::from_name(f.as_deref().unwrap_or_default(), parse_a(&a)?).map_err(usage)?;
                verify_one(&fam, n_max)
            };
            let mut ok = true;
            for r in &reports {
                write!(out, "{r}")?;
                ok &= r.passed();
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn verify_one(fam: &Family, n_max: u64) -> Vec<VerificationReport> {
    let exec = Execution::default();
    let mut out = vec![verify_family(fam, n_max, exec), verify_cross_terms(fam, n_max, exec)];
    match fam {
        Family::Laguerre => out.push(verify_laguerre_identities(n_max, exec)),
        Family::Gegenbauer(a) => {
            out.push(verify_fixed_parameter(a.value(), n_max, exec).expect("validated parameter"))
        }
        _ => {}
    }
    out
}

fn verify_all(n_max: u64) -> Vec<VerificationReport> {
    let exec = Execution::default();
    let mut out = Vec::new();
    for fam in Family::FIXED {
        out.extend(verify_one(&fam, n_max));
    }
    for a in ["1/2", "1", "3/2", "2", "7/3"] {
        let fam = Family::gegenbauer(parse_rational(a, true).expect("literal")).expect("admissible");
        out.extend(verify_one(&fam, n_max));
    }
    out.push(verify_gegenbauer_symbolic(n_max.min(40), exec));
    out.push(verify_xn_routes(n_max, exec));
    out.push(verify_xn_properties(n_max, n_max.min(30), exec));
    out.push(verify_xn_congruences(97, exec));
    out.push(verify_wz(n_max, exec));
    if n_max >= 2 {
        out.push(verify_interlacing(n_max.min(30), exec).expect("X_n vanishes at -n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `filterint --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => {
            eprintln!("verification failed: see MISMATCH lines above");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

