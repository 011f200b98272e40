//! `hurwitz`: command-line front end.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage or input.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz::cf::fold_increment;
use hurwitz::exact::decimal;
use hurwitz::geometry::{check_validity, explore_automaton, is_full, Validity};
use hurwitz::spectrum::{
    build_xi, encode_base_b, estimate_exponent, modulus_digits, schedule_from_tau,
    w_variant_from_bits, XiNumber, XiVariant,
};
use hurwitz::zaremba::{
    brute_force_min_k, certify, verify_certificate, ZarembaBase, ZarembaCertificate,
};
use hurwitz::{
    evaluate, fold, fold_unit, hcf_expand, CfSequence, Error, GaussianInt, GaussianRational,
};
use num_rational::BigRational;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact Hurwitz continued fractions over the Gaussian integers"
)]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Records,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Hurwitz expansions.
    #[command(subcommand)]
    Hcf(HcfCommand),
    /// Finite continued fractions.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Validity of digit sequences.
    #[command(subcommand)]
    Validity(ValidityCommand),
    /// The prototype-set automaton.
    #[command(subcommand)]
    Prototype(PrototypeCommand),
    /// Zaremba certificates and exhaustive search.
    #[command(subcommand)]
    Zaremba(ZarembaCommand),
    /// Build a number by iterated folding along a tau schedule.
    Xi(XiArgs),
    /// Digits of a Gaussian integer in base -A±i, most significant first.
    Encode {
        #[arg(long, allow_hyphen_values = true)]
        base: GaussianInt,
        #[arg(allow_hyphen_values = true)]
        z: GaussianInt,
    },
}

#[derive(Subcommand)]
enum HcfCommand {
    /// Expand a Gaussian rational such as "10/27" or "(5-6i)/(-2+i)^4".
    Expand {
        #[arg(allow_hyphen_values = true)]
        z: GaussianRational,
        #[arg(long, value_enum, default_value = "records")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CfCommand {
    /// Value of "[a0; a1, ..., an]".
    Eval {
        #[arg(allow_hyphen_values = true)]
        cf: CfSequence,
    },
    /// Fold with middle term x, or with the unit rule.
    Fold {
        #[arg(allow_hyphen_values = true)]
        cf: CfSequence,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "unit",
            required_unless_present = "unit"
        )]
        x: Option<GaussianInt>,
        #[arg(long)]
        unit: bool,
    },
}

#[derive(Subcommand)]
enum ValidityCommand {
    /// Classify a comma-separated digit list; exits 1 when invalid.
    Check {
        #[arg(allow_hyphen_values = true)]
        digits: String,
    },
}

#[derive(Subcommand)]
enum PrototypeCommand {
    /// Explore the automaton from the open square.
    Explore {
        /// Print the transition table as state,digit,next.
        #[arg(long)]
        export: bool,
    },
}

#[derive(Subcommand)]
enum ZarembaCommand {
    /// Build and verify a certificate for base^power.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        base: ZarembaBase,
        #[arg(long)]
        power: u32,
        /// Certify every power from 1 up to --power.
        #[arg(long)]
        all: bool,
        /// Write the records to this file instead of standard output.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "records")]
        format: Format,
    },
    /// Re-verify certificate records read from a file.
    Verify { file: PathBuf },
    /// Exhaustive optimum for a denominator.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        den: GaussianInt,
        #[arg(long, default_value_t = hurwitz::zaremba::DEFAULT_ORACLE_CAP)]
        cap: u64,
    },
}

#[derive(Args)]
struct XiArgs {
    #[arg(long, allow_hyphen_values = true)]
    base: GaussianInt,
    #[arg(long)]
    tau: BigRational,
    #[arg(long, default_value = "1")]
    lambda: BigRational,
    #[arg(long)]
    stages: usize,
    /// "general", "unit", or "w:<bits>" for an interleaved schedule.
    /// Default: unit when tau = 2, general otherwise.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_)
            | Error::CertificateRejected { .. }
            | Error::StageViolation { .. }
            | Error::SeedNotFull
            | Error::AutomatonDidNotClose { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (out, code) = match run(cli.command) {
        Ok(out) => (out, 0),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (String::new(), 2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            (String::new(), 1)
        }
    };
    print!("{out}");
    ExitCode::from(code)
}

/// Output printed before a verification failure is reported.
fn check_failed(out: String, msg: String) -> Outcome {
    print!("{out}");
    Err(Failure::Check(msg))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Hcf(HcfCommand::Expand { z, format }) => hcf(&z, format),
        Command::Cf(CfCommand::Eval { cf }) => Ok(format!("{}\n", evaluate(&cf)?)),
        Command::Cf(CfCommand::Fold { cf, x, unit }) => cf_fold(&cf, x, unit),
        Command::Validity(ValidityCommand::Check { digits }) => validity(&digits),
        Command::Prototype(PrototypeCommand::Explore { export }) => prototype(export),
        Command::Zaremba(ZarembaCommand::Certify {
            base,
            power,
            all,
            emit,
            format,
        }) => zaremba_certify(base, power, all, emit, format),
        Command::Zaremba(ZarembaCommand::Verify { file }) => zaremba_verify(&file),
        Command::Zaremba(ZarembaCommand::Search { den, cap }) => {
            let r = brute_force_min_k(&den, cap)?;
            Ok(format!(
                "denominator = {den}\nnumerator = {}\nk_sq = {}\ndigits = {}\n",
                r.numerator,
                r.k_sq,
                join(&r.expansion.digits)
            ))
        }
        Command::Xi(args) => xi(args),
        Command::Encode { base, z } => Ok(format!("{}\n", encode_base_b(&z, &base)?)),
    }
}

fn join(digits: &[GaussianInt]) -> String {
    digits
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn hcf(z: &GaussianRational, format: Format) -> Outcome {
    let e = hcf_expand(z)?;
    let table = e.convergents();
    let mut out = String::new();
    let cf = e.to_cf();
    match format {
        Format::Records => {
            writeln!(out, "value = {z}").unwrap();
            writeln!(out, "expansion = {cf}").unwrap();
            writeln!(out, "digits = {}", join(&e.digits)).unwrap();
            writeln!(out, "max_digit_norm = {}", e.max_digit_norm()).unwrap();
            for n in 0..=table.last_index() {
                let (p, q) = table.pair(n)?;
                writeln!(out, "convergent {n} = ({p})/({q})").unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,digit,p,q").unwrap();
            for n in 0..=table.last_index() {
                let (p, q) = table.pair(n)?;
                let a = if n == 0 { &cf.head } else { &cf.tail[n - 1] };
                writeln!(out, "{n},{a},{p},{q}").unwrap();
            }
        }
    }
    Ok(out)
}

fn cf_fold(cf: &CfSequence, x: Option<GaussianInt>, unit: bool) -> Outcome {
    let x = if unit {
        GaussianInt::one()
    } else {
        x.expect("clap requires x or --unit")
    };
    let folded = if unit { fold_unit(cf)? } else { fold(cf, &x)? };
    let before = evaluate(cf)?;
    let after = evaluate(&folded)?;
    let increment = fold_increment(cf, &x)?;
    let out = format!("folded = {folded}\nvalue = {after}\nincrement = {increment}\n");
    if &after - &before != increment {
        return check_failed(
            out,
            "folded value differs from the predicted increment".into(),
        );
    }
    Ok(out)
}

fn validity(digits: &str) -> Outcome {
    let digits = hurwitz::cf::parse_digit_list(digits)?;
    let report = check_validity(&digits)?;
    let labels: Vec<String> = report
        .trace
        .states
        .iter()
        .map(|&s| hurwitz::geometry::shared_automaton().map(|a| a.label(s).to_string()))
        .collect::<Result<_, _>>()?;
    let mut out = format!(
        "verdict = {}\ntrace = {}\n",
        report.verdict,
        labels.join(" ")
    );
    if report.verdict != Validity::Invalid {
        writeln!(out, "full = {}", is_full(&digits)?).unwrap();
    }
    if let Some(w) = &report.boundary_witness {
        writeln!(out, "boundary_point = {w}").unwrap();
    }
    if report.verdict == Validity::Invalid {
        return check_failed(out, "the cylinder is empty".into());
    }
    Ok(out)
}

fn prototype(export: bool) -> Outcome {
    let a = explore_automaton()?;
    if export {
        return Ok(a.export());
    }
    let mut out = format!("states = {}\n", a.len());
    for s in a.states() {
        writeln!(out, "{} = {}", s.label, s.region).unwrap();
    }
    Ok(out)
}

fn csv_row(c: &ZarembaCertificate) -> String {
    format!(
        "{},{},{},{},{},{}\n",
        c.base,
        c.power,
        c.numerator,
        c.digits.len(),
        c.k_sq(),
        c.transcript.all_passed()
    )
}

fn zaremba_certify(
    base: ZarembaBase,
    power: u32,
    all: bool,
    emit: Option<PathBuf>,
    format: Format,
) -> Outcome {
    let powers = if all { 1..=power } else { power..=power };
    let mut body = String::new();
    if format == Format::Csv {
        body.push_str("base,power,numerator,length,k_sq,verified\n");
    }
    for k in powers {
        let c = certify(base, k)?;
        match format {
            Format::Records => {
                if !body.is_empty() {
                    body.push('\n');
                }
                body.push_str(&c.to_record());
            }
            Format::Csv => body.push_str(&csv_row(&c)),
        }
    }
    match emit {
        Some(path) => {
            fs::write(&path, &body)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(body),
    }
}

fn zaremba_verify(file: &PathBuf) -> Outcome {
    let text =
        fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let mut out = String::new();
    let mut failed = 0;
    for record in text.split("\n\n").filter(|r| !r.trim().is_empty()) {
        match ZarembaCertificate::from_record(record) {
            Ok(c) => {
                let t = verify_certificate(&c);
                writeln!(
                    out,
                    "({})^{}: {}",
                    c.base,
                    c.power,
                    if t.all_passed() { "pass" } else { "FAIL" }
                )
                .unwrap();
                if !t.all_passed() {
                    failed += 1;
                }
            }
            Err(e @ Error::Parse(_)) => return Err(e.into()),
            Err(e) => {
                writeln!(out, "rejected: {e}").unwrap();
                failed += 1;
            }
        }
    }
    if failed > 0 {
        return check_failed(out, format!("{failed} certificate(s) failed verification"));
    }
    Ok(out)
}

fn parse_variant(
    spec: Option<&str>,
    tau_is_two: bool,
) -> Result<(XiVariant, Option<Vec<bool>>), Failure> {
    let bad = |s: &str| {
        Failure::Usage(format!(
            "unknown variant {s:?}; use general, unit or w:<bits>"
        ))
    };
    match spec {
        None if tau_is_two => Ok((XiVariant::UnitFold, None)),
        None | Some("general") => Ok((XiVariant::General, None)),
        Some("unit") => Ok((XiVariant::UnitFold, None)),
        Some(s) => {
            let bits = s.strip_prefix("w:").ok_or_else(|| bad(s))?;
            let bits = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(bad(s)),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((XiVariant::General, Some(bits)))
        }
    }
}

fn xi(args: XiArgs) -> Outcome {
    if args.stages == 0 {
        return Err(Failure::Usage("--stages must be at least 1".into()));
    }
    let two = BigRational::from_integer(2.into());
    let (variant, bits) = parse_variant(args.variant.as_deref(), args.tau == two)?;
    // w-variants interleave a free slot before each fold, so need half as many
    let count = if bits.is_some() {
        args.stages / 2 + 3
    } else {
        args.stages + 2
    };
    let ts = schedule_from_tau(&args.tau, &args.lambda, &args.base, count)?;
    let schedule = match &bits {
        Some(bits) => w_variant_from_bits(&ts.schedule, &args.base, bits)?,
        None => ts.schedule.clone(),
    };
    let b = &args.base;
    let x = build_xi(b, &[b.pow(schedule.v0())], &schedule, variant, args.stages)?;
    let out = xi_table(&x, args.format);
    if !x.all_checks_pass() {
        let bad: Vec<String> = x
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.m.to_string())
            .collect();
        return check_failed(
            out,
            format!("stage checks failed at stages {}", bad.join(", ")),
        );
    }
    Ok(out)
}

/// `b^u` when the middle digit is exactly that power, else the digit itself.
fn middle(x: &XiNumber, u: u64, digit: &GaussianInt) -> String {
    if u > 1 && *digit == x.base.pow(u) {
        format!("b^{u}")
    } else {
        digit.to_string()
    }
}

fn xi_table(x: &XiNumber, format: Format) -> String {
    let norm = x.base.norm();
    let v = x.schedule.v();
    let brackets = estimate_exponent(x, x.stages.len());
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("stage,v,u,middle,length,q_digits,series,designated,sandwich,sandwich_exp,mu_lo,mu_hi\n");
    }
    for (st, check) in x.stages.iter().zip(&x.checks) {
        let bracket = brackets.iter().find(|e| e.m == st.m);
        let (lo, hi) = bracket.map_or((String::from("-"), String::from("-")), |e| {
            (
                decimal(&e.bracket.lo, 6, true),
                decimal(&e.bracket.hi, 6, false),
            )
        });
        // the sandwich brackets |xi - xi^m| between 1/2 and 3/2 of |b|^-v_{m+1}
        let fields = [
            ("stage", st.m.to_string()),
            ("v", st.v.to_string()),
            ("u", st.u.to_string()),
            ("middle", middle(x, st.u, &st.middle)),
            ("length", st.len.to_string()),
            ("q_digits", modulus_digits(&norm, st.v).to_string()),
            ("series", check.series_agrees.to_string()),
            ("designated", check.designated.to_string()),
            ("sandwich", check.sandwich.to_string()),
            ("sandwich_exp", v[st.m + 1].to_string()),
            ("mu_lo", lo),
            ("mu_hi", hi),
        ];
        match format {
            Format::Csv => {
                let row: Vec<&str> = fields.iter().map(|f| f.1.as_str()).collect();
                writeln!(out, "{}", row.join(",")).unwrap();
            }
            Format::Records => {
                if st.m > 1 {
                    out.push('\n');
                }
                for (k, val) in &fields {
                    writeln!(out, "{k} = {val}").unwrap();
                }
            }
        }
    }
    out
}
