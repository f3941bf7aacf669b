//! `thetarank`: Θ-ranks, first occurrences, branching and verification from the command line.
//!
//! Output is one JSON object per line unless `--format tsv` is given.
//! Exit codes: 0 ok, 1 domain error (printed as JSON), 2 usage or parse error.

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use thetarank::correspondence::{underline_theta, PairCase};
use thetarank::family::{enumerate_symbols_with_ceiling, enumerate_unipotent_with_ceiling, DEFAULT_MAX_RANK};
use thetarank::theta::{first_occurrence, theta_rank_symbol, tower_occurrences, Tower};
use thetarank::verify::{run_suite, suite_names, SuiteParams, SuiteReport};
use thetarank::{
    branching, theta_rank, witness, Error, FamilyKind, GroupFamily, LusztigDatum, ParseError, Symbol, UnipotentChar,
    Witness, World,
};

#[derive(Parser)]
#[command(name = "thetarank", version, about = "Θ-rank of characters of finite classical groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Rank (or unitary rank) and defect of a symbol.
    Rank {
        symbol: String,
        /// `spo` for rk, `u` for rk_U.
        #[arg(long, default_value = "spo")]
        world: String,
    },
    /// Θ-rank of the unipotent character of a symbol.
    ThetaRank {
        #[arg(long)]
        world: String,
        symbol: String,
    },
    /// Θ-rank of an arbitrary character given by its datum.
    ThetaRankGeneral {
        /// JSON file, `-` for stdin, or the JSON text itself.
        #[arg(long)]
        datum: String,
    },
    /// All unipotent symbols of a family.
    Enumerate {
        #[arg(long)]
        family: String,
        /// Extra columns: theta-rank, upsilon, defect (comma separated).
        #[arg(long, value_delimiter = ',')]
        with: Vec<String>,
    },
    /// First occurrence of a unipotent character in a theta tower.
    FirstOccurrence {
        #[arg(long)]
        tower: String,
        /// Family of the symbol; defaults to the source family of the tower.
        #[arg(long)]
        family: Option<String>,
        /// Odd orthogonal sign twist.
        #[arg(long)]
        sgn: bool,
        symbol: String,
    },
    /// Underline-theta image of a symbol.
    UnderlineTheta {
        #[arg(long)]
        case: String,
        /// Target symbol rank (dimension for unitary cases).
        #[arg(long)]
        target: u64,
        symbol: String,
    },
    /// Successors of a unipotent character, with Θ-ranks.
    Branch {
        symbol: String,
        /// Family kind, or `kind:N` to also check the parameter.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        steps: u64,
    },
    /// A character of prescribed Θ-rank.
    Witness {
        /// `kind:N`, or a kind together with `--n`.
        #[arg(long)]
        family: String,
        #[arg(short, long)]
        n: Option<u64>,
        #[arg(short, long)]
        k: u64,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_rank: u64,
        #[arg(long, default_value_t = 10)]
        max_udim: u64,
    },
    /// Θ-rank and first-occurrence table of a family up to a bound.
    Tables {
        /// Family kind.
        #[arg(long)]
        family: String,
        #[arg(long)]
        max: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::Usage(format!("error: {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(p) => p.into(),
            other => Failure::Domain(other),
        }
    }
}

type Rows = Vec<Map<String, Value>>;

fn row(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m,
        _ => unreachable!("rows are objects"),
    }
}

fn parse<T: FromStr<Err = ParseError>>(text: &str) -> Result<T, Failure> {
    text.parse::<T>().map_err(Failure::from)
}

fn ceiling() -> Result<u64, Failure> {
    match std::env::var("THETA_MAX_RANK") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("error: THETA_MAX_RANK must be a non-negative integer at '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_RANK),
    }
}

/// `kind` or `kind:N`; a bare kind takes `n` from `fallback`.
fn family_arg(text: &str, fallback: impl FnOnce(FamilyKind) -> Option<u64>) -> Result<GroupFamily, Failure> {
    if text.contains(':') {
        return parse(text);
    }
    let kind: FamilyKind = parse(text)?;
    match fallback(kind) {
        Some(n) => Ok(GroupFamily::new(kind, n)),
        None => Err(Failure::Usage(format!("error: family needs a parameter (kind:N) at '{text}'"))),
    }
}

fn rank(symbol: &str, world: &str) -> Result<Rows, Failure> {
    let s: Symbol = parse(symbol)?;
    let world: World = parse(world)?;
    Ok(vec![match world {
        World::SpO => row(json!({ "rank": s.rank(), "defect": s.defect() })),
        World::U => row(json!({ "rank_u": s.rank_u(), "defect": s.defect() })),
    }])
}

fn theta_rank_cmd(world: &str, symbol: &str) -> Result<Rows, Failure> {
    let world: World = parse(world)?;
    let s: Symbol = parse(symbol)?;
    Ok(vec![row(json!({ "theta_rank": theta_rank_symbol(world, &s)? }))])
}

fn theta_rank_general(datum: &str) -> Result<Rows, Failure> {
    let text = if datum == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("error: cannot read stdin: {e}")))?;
        buf
    } else if datum.trim_start().starts_with('{') {
        datum.to_string()
    } else {
        std::fs::read_to_string(datum)
            .map_err(|e| Failure::Usage(format!("error: cannot read datum file ({e}) at '{datum}'")))?
    };
    if serde_json::from_str::<Value>(&text).is_err() {
        let token = text.split_whitespace().next().unwrap_or("").to_string();
        return Err(Failure::Usage(format!("error: datum is not valid JSON at '{token}'")));
    }
    let d = LusztigDatum::from_json(&text)?;
    Ok(vec![row(json!({ "family": d.group(), "theta_rank": d.theta_rank() }))])
}

fn enumerate(family: &str, with: &[String]) -> Result<Rows, Failure> {
    let family: GroupFamily = parse(family)?;
    for w in with {
        if !["theta-rank", "upsilon", "defect"].contains(&w.as_str()) {
            return Err(Failure::Usage(format!("error: unknown column at '{w}'")));
        }
    }
    let symbols = enumerate_symbols_with_ceiling(family, ceiling()?)?;
    let world = family.kind.world();
    let mut rows = Vec::new();
    for s in symbols {
        let mut r = row(json!({ "family": family, "symbol": s }));
        for w in with {
            let v = match w.as_str() {
                "theta-rank" => json!(theta_rank_symbol(world, &s)?),
                "upsilon" => json!(s.upsilon().to_string()),
                _ => json!(s.defect()),
            };
            r.insert(w.replace('-', "_"), v);
        }
        rows.push(r);
    }
    Ok(rows)
}

fn first_occurrence_cmd(tower: &str, family: Option<&str>, sgn: bool, symbol: &str) -> Result<Rows, Failure> {
    let tower: Tower = parse(tower)?;
    let s: Symbol = parse(symbol)?;
    let family = match family {
        Some(f) => family_arg(f, |k| Some(k.size_of(&s)))?,
        None => GroupFamily::new(tower.source(), tower.source().size_of(&s)),
    };
    let c = UnipotentChar::new(family, &s, sgn)?;
    let dimension = first_occurrence(&c, tower)?;
    Ok(vec![row(json!({ "input": c.symbol, "family": c.family, "tower": tower, "dimension": dimension }))])
}

fn underline_theta_cmd(case: &str, target: u64, symbol: &str) -> Result<Rows, Failure> {
    let case: PairCase = parse(case)?;
    let s: Symbol = parse(symbol)?;
    let img = underline_theta(case, &s, target)?;
    Ok(vec![row(json!({ "lambda": img.lambda, "tau": img.tau, "defect": img.defect }))])
}

fn branch(symbol: &str, family: &str, steps: u64) -> Result<Rows, Failure> {
    let s: Symbol = parse(symbol)?;
    let family = family_arg(family, |k| Some(k.size_of(&s)))?;
    let c = UnipotentChar::new(family, &s, false)?;
    let mut rows = Vec::new();
    for step in 1..=steps {
        let m = family.n + step * family.step();
        for next in branching::induced_set(&c, m)? {
            rows.push(row(json!({
                "step": step,
                "family": next.family,
                "symbol": next.symbol,
                "theta_rank": theta_rank(&next),
            })));
        }
    }
    Ok(rows)
}

fn witness_cmd(family: &str, n: Option<u64>, k: u64) -> Result<Rows, Failure> {
    let family = family_arg(family, |_| n)?;
    let w = witness(family, k)?;
    let (kind, value) = match &w {
        Witness::Unipotent(c) => ("unipotent", json!({ "symbol": c.symbol, "sgn": c.sgn })),
        Witness::Datum(d) => ("datum", serde_json::to_value(d).expect("datum serializes")),
    };
    Ok(vec![row(json!({ "family": family, "k": k, "kind": kind, "witness": value, "theta_rank": w.theta_rank() }))])
}

fn tables(family: &str, max: u64) -> Result<Rows, Failure> {
    let kind: FamilyKind = parse(family)?;
    let ceiling = ceiling()?;
    let mut rows = Vec::new();
    for n in 0..=max {
        for c in enumerate_unipotent_with_ceiling(GroupFamily::new(kind, n), ceiling)? {
            let occ = tower_occurrences(&c)?;
            rows.push(row(json!({
                "family": c.family,
                "symbol": c.symbol,
                "sgn": c.sgn,
                "theta_rank": theta_rank(&c),
                "first_tower": occ[0].0,
                "first_occurrence": occ[0].2,
                "second_tower": occ[1].0,
                "second_occurrence": occ[1].2,
            })));
        }
    }
    Ok(rows)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit(out: &mut impl Write, format: Format, rows: &Rows) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", Value::Object(r.clone()))?;
            }
        }
        Format::Tsv => {
            if let Some(first) = rows.first() {
                writeln!(out, "{}", first.keys().cloned().collect::<Vec<_>>().join("\t"))?;
            }
            for r in rows {
                writeln!(out, "{}", r.values().map(cell).collect::<Vec<_>>().join("\t"))?;
            }
        }
    }
    Ok(())
}

fn verify(out: &mut impl Write, format: Format, suite: &str, max_rank: u64, max_udim: u64) -> Result<bool, Failure> {
    let names: Vec<&str> = if suite == "all" { suite_names() } else { vec![suite] };
    if suite != "all" && !suite_names().contains(&suite) {
        return Err(Failure::Usage(format!("error: unknown suite at '{suite}'")));
    }
    let params = SuiteParams { max_rank, max_udim, ceiling: ceiling()? };
    if format == Format::Tsv {
        writeln!(out, "{}", SuiteReport::TSV_HEADER).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut all = true;
    for name in names {
        let report = run_suite(name, &params)?;
        all &= report.passed;
        let line = if format == Format::Json { report.to_json() } else { report.to_tsv() };
        writeln!(out, "{line}").map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(all)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let rows = match &cli.command {
        Command::Rank { symbol, world } => rank(symbol, world)?,
        Command::ThetaRank { world, symbol } => theta_rank_cmd(world, symbol)?,
        Command::ThetaRankGeneral { datum } => theta_rank_general(datum)?,
        Command::Enumerate { family, with } => enumerate(family, with)?,
        Command::FirstOccurrence { tower, family, sgn, symbol } => {
            first_occurrence_cmd(tower, family.as_deref(), *sgn, symbol)?
        }
        Command::UnderlineTheta { case, target, symbol } => underline_theta_cmd(case, *target, symbol)?,
        Command::Branch { symbol, family, steps } => branch(symbol, family, *steps)?,
        Command::Witness { family, n, k } => witness_cmd(family, *n, *k)?,
        Command::Tables { family, max } => tables(family, *max)?,
        Command::Verify { suite, max_rank, max_udim } => {
            return verify(&mut out, cli.format, suite, *max_rank, *max_udim);
        }
    };
    emit(&mut out, cli.format, &rows).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.render().to_string();
            eprintln!("{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(line)) => {
            eprintln!("{line}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            println!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            ExitCode::from(1)
        }
    }
}
