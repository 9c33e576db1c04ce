use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use irreducia::audit::{self, AuditConfig};
use irreducia::corpus::{self, ExhaustiveCorpus, Family, FamilySpec, Sign};
use irreducia::oracle::{self, OracleConfig};
use irreducia::report::FactorizationRecord;
use irreducia::{
    analyze, parse_poly, AnalysisConfig, CriteriaConfig, Criterion, Error, OracleMode, RootMode,
};

/// Irreducibility criteria for integer polynomials.
#[derive(Parser)]
#[command(name = "irreducia", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the criteria on one polynomial.
    Analyze(AnalyzeArgs),
    /// Print the exact irreducible factorization.
    Factor(FactorArgs),
    /// Check criterion verdicts against the oracle over a corpus.
    Audit(AuditArgs),
    /// Print polynomials, one per line, as coefficient lists.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootModeArg {
    Symbolic,
    Numeric,
}

impl From<RootModeArg> for RootMode {
    fn from(m: RootModeArg) -> Self {
        match m {
            RootModeArg::Symbolic => RootMode::Symbolic,
            RootModeArg::Numeric => RootMode::Numeric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    On,
    Off,
    Auto,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// `4,4,0,1` or `z^3 + 4z + 4`
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Comma-separated criterion names, or `all`.
    #[arg(long, default_value = "all")]
    criteria: String,
    #[arg(long, value_enum, default_value = "symbolic")]
    root_mode: RootModeArg,
    #[arg(long, value_enum, default_value = "auto")]
    oracle: OracleArg,
    #[arg(long, default_value_t = 8)]
    max_oracle_degree: usize,
}

#[derive(Args)]
struct FactorArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
}

#[derive(Args)]
struct AuditArgs {
    /// Exhaustive corpus degree (or random corpus degree with `--seed`).
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, default_value_t = 3)]
    coeff_bound: i64,
    /// Comma-separated families (`P1,P4`); audits their parameter grids.
    #[arg(long)]
    families: Option<String>,
    /// Audit a random corpus with this seed instead of the exhaustive one.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "symbolic")]
    root_mode: RootModeArg,
    #[arg(long, default_value = "all")]
    criteria: String,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a0: Option<i64>,
    /// P2: `a_1,…,a_m`; P3: `a_1,…,a_{m-1}`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: Sign,
    /// P4: `j + 1` signs, for `a_1..a_j` then `z^m`; default all `+`.
    #[arg(long, allow_hyphen_values = true)]
    signs: Option<String>,
    #[arg(long, conflicts_with_all = ["family", "random"])]
    exhaustive: bool,
    #[arg(long, conflicts_with = "family")]
    random: bool,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, default_value_t = 2)]
    coeff_bound: i64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Exit codes.
const OK: u8 = 0;
const INPUT_ERROR: u8 = 1;
const CONTRADICTION: u8 = 2;
const NO_CONCLUSION: u8 = 3;

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(INPUT_ERROR)
}

fn parse_criteria(text: &str) -> Result<Vec<Criterion>, Error> {
    if text.trim() == "all" {
        return Ok(Criterion::ALL.to_vec());
    }
    text.split(',').map(|s| s.trim().parse()).collect()
}

fn parse_list<T: std::str::FromStr<Err = Error>>(text: &str) -> Result<Vec<T>, Error> {
    text.split(',').map(|s| s.trim().parse()).collect()
}

fn parse_ints(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("malformed integer `{}`", s.trim())))
        })
        .collect()
}

fn run_analyze(args: AnalyzeArgs) -> ExitCode {
    let f = match parse_poly(&args.poly) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let criteria = match parse_criteria(&args.criteria) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let config = AnalysisConfig {
        criteria,
        criteria_config: CriteriaConfig {
            root_mode: args.root_mode.into(),
            ..CriteriaConfig::default()
        },
        oracle: match args.oracle {
            OracleArg::On => OracleMode::On,
            OracleArg::Off => OracleMode::Off,
            OracleArg::Auto => OracleMode::Auto,
        },
        max_oracle_degree: args.max_oracle_degree,
    };
    let report = match analyze(&f, &config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match args.format {
        Format::Json => emit(&format!("{}\n", report.to_json())),
        Format::Text => emit(&report.to_text()),
    }
    if !report.is_consistent() {
        eprintln!("error: the oracle contradicts the strongest conclusion");
        ExitCode::from(CONTRADICTION)
    } else if report.is_decisive() {
        ExitCode::from(OK)
    } else {
        ExitCode::from(NO_CONCLUSION)
    }
}

fn run_factor(args: FactorArgs) -> ExitCode {
    let f = match parse_poly(&args.poly) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let config = OracleConfig {
        max_degree: args.max_degree,
        ..OracleConfig::default()
    };
    let r = match oracle::factor_with(&f, &config) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match args.format {
        Format::Text => {
            let mut text = format!("{r}\ncontent: {}\n", r.content);
            for (g, e) in &r.factors {
                text.push_str(&format!("factor: {g}  multiplicity: {e}\n"));
            }
            text.push_str(&format!("irreducible factors: {}\n", r.count()));
            emit(&text);
        }
        Format::Json => emit(&format!("{}\n", FactorizationRecord::from(&r).to_json())),
    }
    ExitCode::from(OK)
}

fn run_audit(args: AuditArgs) -> ExitCode {
    let criteria = match parse_criteria(&args.criteria) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let config = AuditConfig {
        criteria,
        criteria_config: CriteriaConfig {
            root_mode: args.root_mode.into(),
            ..CriteriaConfig::default()
        },
        jobs: args.jobs,
        ..AuditConfig::default()
    };
    let mut failures = 0u64;

    if let Some(list) = &args.families {
        let families: Vec<Family> = match parse_list(list) {
            Ok(f) => f,
            Err(e) => return fail(e),
        };
        let checks = match audit::audit_families(&families, &config) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        for family in &families {
            let mine: Vec<_> = checks.iter().filter(|c| c.spec.family() == *family).collect();
            let passed = mine.iter().filter(|c| c.passed).count();
            let mut text = format!(
                "{family}: {} instances, {passed} as constructed, criterion {}\n",
                mine.len(),
                audit::family_criterion(*family)
            );
            for c in mine.iter().filter(|c| !c.passed) {
                let got = c.outcome.as_ref().map(|o| o.conclusion.to_string());
                text.push_str(&format!(
                    "  FAILED {}: expected {}, got {}\n",
                    c.poly,
                    c.expected,
                    got.as_deref().unwrap_or("an error")
                ));
            }
            emit(&text);
            failures += (mine.len() - passed) as u64;
        }
    }

    if args.families.is_none() || args.max_degree.is_some() || args.seed.is_some() {
        let max_degree = args.max_degree.unwrap_or(4);
        let summary = match args.seed {
            Some(seed) => corpus::gen_random(args.count, max_degree, args.coeff_bound, seed)
                .and_then(|polys| audit::audit_polys(&polys, &config)),
            None => ExhaustiveCorpus::new(max_degree, args.coeff_bound)
                .and_then(|c| audit::audit_exhaustive(&c, &config)),
        };
        match summary {
            Ok(s) => {
                emit(&s.to_text());
                failures += s.violation_count();
            }
            Err(e) => return fail(e),
        }
    }

    if failures == 0 {
        ExitCode::from(OK)
    } else {
        ExitCode::from(CONTRADICTION)
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::InvalidArgument(format!("missing --{flag}")))
}

fn family_spec(args: &GenArgs, family: Family) -> Result<FamilySpec, Error> {
    Ok(match family {
        Family::P1 => FamilySpec::P1 {
            p: require(args.p, "p")?,
            m: require(args.m, "m")?,
            n: require(args.n, "n")?,
            sign: args.sign,
        },
        Family::P2 => FamilySpec::P2 {
            p: require(args.p, "p")?,
            k: require(args.k, "k")?,
            d: args.d.unwrap_or(1),
            sign: args.sign,
            coeffs: parse_ints(&require(args.coeffs.clone(), "coeffs")?)?,
        },
        Family::P3 => FamilySpec::P3 {
            p: require(args.p, "p")?,
            k: require(args.k, "k")?,
            d: args.d.unwrap_or(1),
            sign: args.sign,
            a0: require(args.a0, "a0")?,
            coeffs: match &args.coeffs {
                Some(c) => parse_ints(c)?,
                None => Vec::new(),
            },
        },
        Family::P4 => {
            let j = require(args.j, "j")?;
            FamilySpec::P4 {
                a: require(args.a, "a")?,
                b: args.b.unwrap_or(1),
                m: require(args.m, "m")?,
                j,
                signs: match &args.signs {
                    Some(s) => parse_list(s)?,
                    None => vec![Sign::Plus; j + 1],
                },
            }
        }
    })
}

fn run_gen(args: GenArgs) -> ExitCode {
    let out = io::stdout();
    let mut out = BufWriter::new(out.lock());
    let result: Result<(), Error> = (|| {
        if args.exhaustive {
            for f in corpus::gen_exhaustive(args.max_degree, args.coeff_bound)? {
                writeln!(out, "{}", f.to_list()).ok();
            }
        } else if args.random {
            for f in corpus::gen_random(args.count, args.max_degree, args.coeff_bound, args.seed)? {
                writeln!(out, "{}", f.to_list()).ok();
            }
        } else {
            let family = require(args.family, "family (or --exhaustive / --random)")?;
            let f = corpus::gen_family(&family_spec(&args, family)?)?;
            writeln!(out, "{}", f.to_list()).ok();
        }
        Ok(())
    })();
    out.flush().ok();
    match result {
        Ok(()) => ExitCode::from(OK),
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { OK };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Factor(a) => run_factor(a),
        Command::Audit(a) => run_audit(a),
        Command::Gen(a) => run_gen(a),
    }
}
