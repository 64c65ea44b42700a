//! Command-line front end: single spectrum/minimal-polynomial queries,
//! full tables, exhaustive verification sweeps, and cache management.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use specrep::characters::{
    an_character_value, load_character_cache, mn_character, parse_signed, save_character_cache,
    AnCharLabel, AnClass,
};
use specrep::classifier::{
    an_character_labels, an_classes, classify_an, classify_sn, verify_range, ClassifiedResult,
    Group,
};
use specrep::partitions::{partitions_of, CycleType, Partition};
use specrep::spectrum::{spectrum_oracle, CharSpec, ClassSpec, SpectrumSet};

#[derive(Parser)]
#[command(
    name = "specrep",
    version,
    about = "Exact eigenvalue spectra and minimal polynomials of permutations \
             in irreducible representations of S_n and A_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for persisted character tables; falls back to
    /// SPECREP_CACHE_DIR, then ./.specrep-cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal polynomial of rho_lambda(sigma) from the case analysis.
    Minpoly(QueryArgs),
    /// Eigenvalue exponent set; with --oracle, exact multiplicities too.
    Spectrum(QueryArgs),
    /// Exact character value chi_lambda on a class.
    Character(CharacterArgs),
    /// Every (character, class) row at degree n.
    Table(TableArgs),
    /// Exhaustive classifier-vs-oracle sweep up to degree n.
    Verify(VerifyArgs),
    /// Manage persisted character tables.
    Cache(CacheArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::S => Group::Symmetric,
            GroupArg::A => Group::Alternating,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Partition, e.g. 4,1; split characters carry a sign: 2,2+
    #[arg(long)]
    lambda: String,
    /// Cycle type, e.g. 3,2,2; split classes carry a sign: 3,1-
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cross-check the answer against the character-theoretic oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct CharacterArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Resource ceiling for sweep-sized commands.
    #[arg(long, default_value_t = 12)]
    ceiling: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Verify every degree up to this bound.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Resource ceiling for sweep-sized commands.
    #[arg(long, default_value_t = 12)]
    ceiling: usize,
    /// Report file; defaults to specrep-verify-GROUPN.json.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CacheArgs {
    #[command(subcommand)]
    action: CacheAction,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Precompute and persist character tables for every degree up to n.
    Warm {
        #[arg(long)]
        n: usize,
    },
    /// Remove persisted tables.
    Clear,
    /// List persisted tables.
    Status,
}

enum Query {
    S(Partition, CycleType),
    A(AnCharLabel, AnClass),
}

impl Query {
    fn parse(group: GroupArg, lambda: &str, mu: &str) -> anyhow::Result<Query> {
        match group {
            GroupArg::S => {
                let (lam, lam_sign) = parse_signed(lambda)?;
                let (m, mu_sign) = parse_signed(mu)?;
                if lam_sign.is_some() || mu_sign.is_some() {
                    bail!("split signs only apply to the alternating group");
                }
                Ok(Query::S(lam, CycleType::new(m)))
            }
            GroupArg::A => Ok(Query::A(AnCharLabel::parse(lambda)?, AnClass::parse(mu)?)),
        }
    }

    fn classify(&self) -> anyhow::Result<ClassifiedResult> {
        Ok(match self {
            Query::S(lambda, mu) => classify_sn(lambda, mu)?,
            Query::A(chi, cls) => classify_an(chi, cls)?,
        })
    }

    fn oracle(&self) -> anyhow::Result<SpectrumSet> {
        Ok(match self {
            Query::S(lambda, mu) => {
                spectrum_oracle(&CharSpec::from(lambda.clone()), &ClassSpec::from(mu.clone()))?
            }
            Query::A(chi, cls) => {
                spectrum_oracle(&CharSpec::from(chi.clone()), &ClassSpec::from(cls.clone()))?
            }
        })
    }

    fn group_name(&self) -> &'static str {
        match self {
            Query::S(..) => "S",
            Query::A(..) => "A",
        }
    }

    fn lambda_string(&self) -> String {
        match self {
            Query::S(lambda, _) => lambda.to_string(),
            Query::A(chi, _) => chi.to_string(),
        }
    }

    fn mu_string(&self) -> String {
        match self {
            Query::S(_, mu) => mu.to_string(),
            Query::A(_, cls) => cls.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let cache_dir = resolve_cache_dir(cli.cache_dir.as_deref());
    match cli.command {
        Command::Minpoly(args) => cmd_minpoly(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Character(args) => cmd_character(args),
        Command::Table(args) => cmd_table(args, &cache_dir),
        Command::Verify(args) => cmd_verify(args, &cache_dir),
        Command::Cache(args) => cmd_cache(args, &cache_dir),
    }
}

fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    if let Ok(dir) = std::env::var("SPECREP_CACHE_DIR") {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    PathBuf::from(".specrep-cache")
}

/// Best-effort preload of persisted character tables; results never depend
/// on cache hits.
fn preload_caches(dir: &Path, n_max: usize) {
    for n in 2..=n_max {
        let _ = load_character_cache(dir, n);
    }
}

fn cmd_minpoly(args: QueryArgs) -> anyhow::Result<ExitCode> {
    let query = Query::parse(args.group, &args.lambda, &args.mu)?;
    let result = query.classify()?;
    let oracle_verdict = if args.oracle {
        let oracle = query.oracle()?;
        Some(result.spectrum().same_exponents(&oracle))
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let doc = serde_json::json!({
                "group": query.group_name(),
                "lambda": query.lambda_string(),
                "mu": query.mu_string(),
                "case": result.case().roman(),
                "minpoly": result.minpoly().to_json(),
                "oracle": oracle_verdict.map(|ok| if ok { "agree" } else { "mismatch" }),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => {
            println!("{} [case {}]", result.minpoly().display(), result.case());
            if let Some(ok) = oracle_verdict {
                println!("oracle: {}", if ok { "agree" } else { "MISMATCH" });
            }
        }
    }
    Ok(exit_for(oracle_verdict))
}

fn cmd_spectrum(args: QueryArgs) -> anyhow::Result<ExitCode> {
    let query = Query::parse(args.group, &args.lambda, &args.mu)?;
    let result = query.classify()?;
    let spectrum = if args.oracle {
        query.oracle()?
    } else {
        result.spectrum().clone()
    };
    let agree = if args.oracle {
        Some(result.spectrum().same_exponents(&spectrum))
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let mut doc = spectrum.to_json();
            doc["case"] = serde_json::json!(result.case().roman());
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => {
            println!("{spectrum} [case {}]", result.case());
            if let Some(mults) = spectrum.multiplicities() {
                let parts: Vec<String> =
                    mults.iter().map(|(e, m)| format!("{e}:{m}")).collect();
                println!("multiplicities: {}", parts.join(" "));
            }
            if let Some(ok) = agree {
                println!("classifier: {}", if ok { "agree" } else { "MISMATCH" });
            }
        }
    }
    Ok(exit_for(agree))
}

fn exit_for(verdict: Option<bool>) -> ExitCode {
    match verdict {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn cmd_character(args: CharacterArgs) -> anyhow::Result<ExitCode> {
    let query = Query::parse(args.group, &args.lambda, &args.mu)?;
    let display = match &query {
        Query::S(lambda, mu) => mn_character(lambda, mu)?.to_string(),
        Query::A(chi, cls) => an_character_value(chi, cls)?.to_string(),
    };
    match args.format {
        Format::Json => {
            let doc = serde_json::json!({
                "group": query.group_name(),
                "lambda": query.lambda_string(),
                "mu": query.mu_string(),
                "value": display,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => println!("{display}"),
    }
    Ok(ExitCode::SUCCESS)
}

struct Row {
    lambda: String,
    mu: String,
    split: String,
    order: u64,
    case: String,
    minpoly: String,
    exponents: Vec<u64>,
}

fn table_rows(group: Group, n: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    match group {
        Group::Symmetric => {
            let all = partitions_of(n);
            for lambda in &all {
                for mu in &all {
                    let cls = CycleType::new(mu.clone());
                    let r = classify_sn(lambda, &cls).expect("valid pair");
                    rows.push(Row {
                        lambda: lambda.to_string(),
                        mu: cls.to_string(),
                        split: String::new(),
                        order: cls.order(),
                        case: r.case().roman().to_string(),
                        minpoly: r.minpoly().display(),
                        exponents: r.spectrum().exponents().iter().copied().collect(),
                    });
                }
            }
        }
        Group::Alternating => {
            for chi in an_character_labels(n) {
                for cls in an_classes(n) {
                    let r = classify_an(&chi, &cls).expect("valid pair");
                    rows.push(Row {
                        lambda: chi.to_string(),
                        mu: cls.cycle_type().to_string(),
                        split: cls.split().map(|s| s.to_string()).unwrap_or_default(),
                        order: cls.order(),
                        case: r.case().roman().to_string(),
                        minpoly: r.minpoly().display(),
                        exponents: r.spectrum().exponents().iter().copied().collect(),
                    });
                }
            }
        }
    }
    rows
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn cmd_table(args: TableArgs, cache_dir: &Path) -> anyhow::Result<ExitCode> {
    if args.n > args.ceiling {
        bail!(
            "n = {} exceeds the resource ceiling {} (raise --ceiling to override)",
            args.n,
            args.ceiling
        );
    }
    preload_caches(cache_dir, args.n);
    let rows = table_rows(args.group.into(), args.n);
    let mut lines: Vec<String> = Vec::with_capacity(rows.len() + 1);
    match args.format {
        Format::Csv => {
            lines.push("lambda,mu,split,order,case,minpoly,exponents".to_string());
            for r in &rows {
                let exps = r
                    .exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                lines.push(format!(
                    "{},{},{},{},{},{},{}",
                    csv_quote(&r.lambda),
                    csv_quote(&r.mu),
                    r.split,
                    r.order,
                    r.case,
                    csv_quote(&r.minpoly),
                    exps
                ));
            }
        }
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "lambda": r.lambda,
                        "mu": r.mu,
                        "split": r.split,
                        "order": r.order,
                        "case": r.case,
                        "minpoly": r.minpoly,
                        "exponents": r.exponents,
                    })
                })
                .collect();
            lines.push(serde_json::to_string_pretty(&docs)?);
        }
        Format::Text => {
            for r in &rows {
                let exps = r
                    .exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                lines.push(format!(
                    "{} | {}{} | o={} | case {} | {} | {{{}}}",
                    r.lambda, r.mu, r.split, r.order, r.case, r.minpoly, exps
                ));
            }
        }
    }
    stream_lines(&lines)
}

/// Streams rows to stdout, treating a closed pipe (table | head) as a
/// normal early exit.
fn stream_lines(lines: &[String]) -> anyhow::Result<ExitCode> {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in lines {
        if let Err(e) = writeln!(out, "{line}") {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                return Ok(ExitCode::SUCCESS);
            }
            return Err(e.into());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs, cache_dir: &Path) -> anyhow::Result<ExitCode> {
    if args.n > args.ceiling {
        bail!(
            "n = {} exceeds the resource ceiling {} (raise --ceiling to override)",
            args.n,
            args.ceiling
        );
    }
    preload_caches(cache_dir, args.n);
    let group: Group = args.group.into();
    let report = verify_range(args.n, group, args.workers);
    for slice in &report.per_n {
        println!(
            "n={}: {} pairs, {} mismatches, {} ms",
            slice.n,
            slice.pairs_checked,
            slice.mismatches.len(),
            slice.elapsed_ms
        );
    }
    let path = args
        .report
        .unwrap_or_else(|| PathBuf::from(format!("specrep-verify-{group}{}.json", args.n)));
    fs::write(&path, serde_json::to_string_pretty(&report)?)
        .with_context(|| format!("writing {}", path.display()))?;
    println!("report: {}", path.display());
    if report.is_clean() {
        println!("verdict: all spectra agree");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verdict: {} MISMATCHES", report.total_mismatches);
        Ok(ExitCode::from(1))
    }
}

fn cmd_cache(args: CacheArgs, cache_dir: &Path) -> anyhow::Result<ExitCode> {
    match args.action {
        CacheAction::Warm { n } => {
            for k in 2..=n {
                let path = save_character_cache(cache_dir, k)
                    .with_context(|| format!("writing cache for n = {k}"))?;
                println!("wrote {}", path.display());
            }
        }
        CacheAction::Clear => {
            let mut removed = 0;
            if cache_dir.is_dir() {
                for entry in fs::read_dir(cache_dir)? {
                    let entry = entry?;
                    let name = entry.file_name().to_string_lossy().into_owned();
                    if name.starts_with("specrep-chars-") && name.ends_with(".json") {
                        fs::remove_file(entry.path())?;
                        removed += 1;
                    }
                }
            }
            println!("removed {removed} cache files from {}", cache_dir.display());
        }
        CacheAction::Status => {
            println!("cache dir: {}", cache_dir.display());
            if cache_dir.is_dir() {
                let mut names: Vec<String> = fs::read_dir(cache_dir)?
                    .filter_map(|e| e.ok())
                    .map(|e| e.file_name().to_string_lossy().into_owned())
                    .filter(|n| n.starts_with("specrep-chars-"))
                    .collect();
                names.sort();
                for name in names {
                    println!("  {name}");
                }
            } else {
                println!("  (not present)");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
