//! delsch: verify congruence families for Delannoy / Schroeder numbers
//! modulo odd prime powers, dump sequence tables, and probe the exact
//! rational identities behind them.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use delsch_core::harness::{CheckSelection, EngineChoice, OutputFormat, ParamPolicy, RunConfig};
use delsch_core::{identities, report, representations, sequences};
use delsch_core::{Engine, PrimePowerModulus, SequenceKind};

#[derive(Parser)]
#[command(
    name = "delsch",
    version,
    about = "Exact verification of Delannoy/Schroeder congruences modulo prime powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered congruence checks over a range of odd primes.
    Verify(VerifyArgs),
    /// Print a sequence table modulo p^e.
    Sequences(SequencesArgs),
    /// Check the exact binomial-sum identities over the rationals.
    Identities(IdentitiesArgs),
    /// Represent a prime by a supported quadratic form.
    Repr(ReprArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Dp,
    Holonomic,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Jsonl,
}

#[derive(Args)]
struct VerifyArgs {
    /// Smallest prime to test (>= 3).
    #[arg(long, default_value_t = 3)]
    pmin: u64,
    /// Largest prime to test.
    #[arg(long)]
    pmax: u64,
    /// Comma-separated check ids, or all | theorems | conjectures.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
    engine: EngineArg,
    /// Sample this many m values per prime instead of sweeping 1..p-1.
    #[arg(long)]
    m_sample: Option<u64>,
    /// Sample this many x values per prime instead of sweeping 0..p-1.
    #[arg(long)]
    x_sample: Option<u64>,
    /// Seed for the sampled parameter draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SequencesArgs {
    /// Odd prime modulus base.
    #[arg(long)]
    p: u64,
    /// Exponent e of the modulus p^e.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Largest index to print.
    #[arg(long)]
    nmax: usize,
    /// delannoy | delannoy-x:R | schroeder | catalan | s-small | euler |
    /// bernoulli | pell | pell-companion | fibonacci | lucas
    /// (R is an integer or NUM/DEN rational, e.g. delannoy-x:-1/4).
    #[arg(long)]
    kind: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
    engine: EngineArg,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Check the identities for every n up to this bound.
    #[arg(long)]
    nmax: u64,
}

#[derive(Args)]
struct ReprArgs {
    /// Odd prime to represent.
    #[arg(long)]
    p: u64,
    /// Form coefficients a,b meaning a*x^2 + b*y^2.
    #[arg(long)]
    form: String,
}

fn parse_checks(arg: &str) -> CheckSelection {
    match arg {
        "all" => CheckSelection::All,
        "theorems" => CheckSelection::Theorems,
        "conjectures" => CheckSelection::Conjectures,
        list => CheckSelection::Ids(
            list.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
        ),
    }
}

fn parse_kind(arg: &str, modulus: PrimePowerModulus) -> anyhow::Result<SequenceKind> {
    Ok(match arg {
        "delannoy" => SequenceKind::Delannoy,
        "schroeder" => SequenceKind::Schroeder,
        "catalan" => SequenceKind::Catalan,
        "s-small" => SequenceKind::SSmall,
        "euler" => SequenceKind::EulerNumber,
        "bernoulli" => SequenceKind::Bernoulli,
        "pell" => SequenceKind::Pell,
        "pell-companion" => SequenceKind::PellCompanion,
        "fibonacci" => SequenceKind::Fibonacci,
        "lucas" => SequenceKind::Lucas,
        other => {
            let Some(spec) = other.strip_prefix("delannoy-x:") else {
                bail!("unknown sequence kind '{other}'");
            };
            let (num, den) = match spec.split_once('/') {
                Some((n, d)) => (
                    n.parse::<i64>().context("bad numerator")?,
                    d.parse::<i64>().context("bad denominator")?,
                ),
                None => (spec.parse::<i64>().context("bad x value")?, 1),
            };
            SequenceKind::DelannoyX(modulus.residue_of_rational(num, den)?)
        }
    })
}

fn run_verify(args: &VerifyArgs) -> anyhow::Result<i32> {
    let mut config = RunConfig::new(args.pmin, args.pmax);
    config.checks = parse_checks(&args.checks);
    config.engine = match args.engine {
        EngineArg::Dp => EngineChoice::Dp,
        EngineArg::Holonomic => EngineChoice::Holonomic,
        EngineArg::Both => EngineChoice::Both,
    };
    if let Some(count) = args.m_sample {
        config.m_policy = ParamPolicy::Sample { count, seed: args.seed };
    }
    if let Some(count) = args.x_sample {
        config.x_policy = ParamPolicy::Sample { count, seed: args.seed };
    }
    config.format = match args.format {
        FormatArg::Table => OutputFormat::Table,
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Jsonl => OutputFormat::Jsonl,
    };
    config.out = args.out.clone();

    let report_data = delsch_core::run(&config)?;
    match &config.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            report::write_report(&mut w, &report_data, config.format)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            report::write_report(&mut w, &report_data, config.format)?;
            w.flush()?;
        }
    }
    if !matches!(config.format, OutputFormat::Table) || config.out.is_some() {
        eprintln!("{}", report::summary_line(&report_data.summary));
    }
    for failure in report_data.failures().take(20) {
        eprintln!(
            "FAIL {} p={} params={} lhs={} rhs={} (mod {})",
            failure.check_id,
            failure.p,
            failure.params.to_json(),
            failure.lhs,
            failure.rhs,
            failure.modulus
        );
    }
    Ok(report_data.exit_code())
}

fn run_sequences(args: &SequencesArgs) -> anyhow::Result<i32> {
    let modulus = PrimePowerModulus::new(args.p, args.power)?;
    let kind = parse_kind(&args.kind, modulus)?;
    let engine = match args.engine {
        EngineArg::Dp => Engine::Dp,
        EngineArg::Holonomic => Engine::Holonomic,
        EngineArg::Both => bail!("sequences takes a single engine, dp or holonomic"),
    };
    let table = sequences::build(kind, args.nmax, modulus, engine)?;
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    let width = args.nmax.to_string().len();
    for (n, value) in table.values().iter().enumerate() {
        writeln!(w, "{n:>width$} {value}")?;
    }
    w.flush()?;
    Ok(0)
}

fn run_identities(args: &IdentitiesArgs) -> anyhow::Result<i32> {
    let mut ok = true;
    let mut report_suite = |name: &str, bound: u64, pass: bool| {
        println!("{}: n <= {} {}", name, bound, if pass { "ok" } else { "FAIL" });
        ok &= pass;
    };

    let alt = (0..=args.nmax).all(identities::lemma31_check);
    report_suite("alternating reciprocal sums (s = 1, 2)", args.nmax, alt);

    let plain = (0..=args.nmax).all(identities::remark31_identity_check);
    report_suite("plain reciprocal sum", args.nmax, plain);

    let half = args.nmax.min(40);
    let points = identities::symmetric_sample_points(half as i64);
    let sym = identities::remark12_symmetry_check(half, &points);
    report_suite("polynomial reflection symmetry", half, sym);

    Ok(if ok { 0 } else { 2 })
}

fn run_repr(args: &ReprArgs) -> anyhow::Result<i32> {
    let Some((a, b)) = args.form.split_once(',') else {
        bail!("--form expects two comma-separated coefficients, e.g. 1,3");
    };
    let a: u64 = a.trim().parse().context("bad coefficient a")?;
    let b: u64 = b.trim().parse().context("bad coefficient b")?;
    let r = representations::represent(args.p, a, b)?;
    if r.found {
        println!(
            "{} = {}*{}^2 + {}*{}^2  (x = {}, y = {})",
            args.p, a, r.x, b, r.y, r.x, r.y
        );
        Ok(0)
    } else {
        println!("{} has no representation as {}x^2 + {}y^2", args.p, a, b);
        Ok(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Sequences(args) => run_sequences(args),
        Command::Identities(args) => run_identities(args),
        Command::Repr(args) => run_repr(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
