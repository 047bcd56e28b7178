//! Command line front end. Every subcommand is a thin adapter over the
//! library; the binary only forwards its arguments to [`run`].
//!
//! Exit status: 0 on success, 1 on parse or domain errors, 2 when a
//! verification fails (for example `verify` on a non-cycle).

use std::io::Write;
use std::ops::RangeInclusive;
use std::sync::mpsc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cycle::{cycle_sum, parse_entries, QuiddityCycle};
use crate::enumerate::{classify_parallel, enumerate_parallel, EnumerationTask, PartitionDone};
use crate::error::{Error, Result};
use crate::frieze::make_frieze;
use crate::gauss::verify_gauss_irreducible;
use crate::io::{
    read_cycle, to_json, CycleDocument, EnumerationDocument, FriezeDocument, GaussDocument,
    ReportDocument, TreeDocument,
};
use crate::reduce::decompose;
use crate::ring::{Domain, RingElement, Sign, SubsetSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "frieze-lab", version, about = "Exact computations with lambda-quiddity cycles and frieze patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the product identity and print lambda.
    Verify(CycleArgs),
    /// Glue two cycles along one seam.
    Sum(SumArgs),
    /// Render the frieze pattern of a cycle.
    Frieze(CycleArgs),
    /// Split a cycle recursively into irreducible summands.
    Decompose(DecomposeArgs),
    /// List all cycles over a finite candidate set.
    Enumerate(EnumerateArgs),
    /// Sort enumerated orbits into reducible and irreducible ones.
    Classify(ClassifyArgs),
    /// Build and check a member of the Gaussian irreducible family.
    Gauss(GaussArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct DomainArg {
    #[arg(short = 'd', long = "domain", default_value = "Z", help = "Coefficient domain: Z, Q, Z[i] or Z/n")]
    pub domain: String,
}

impl DomainArg {
    fn parse(&self) -> Result<Domain> {
        self.domain.parse()
    }
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    #[command(flatten)]
    pub domain: DomainArg,
    /// Comma-separated entries, e.g. "1,2,1,2".
    #[arg(allow_hyphen_values = true, required_unless_present = "file")]
    pub cycle: Option<String>,
    /// JSON cycle document to read instead of an inline cycle.
    #[arg(long, conflicts_with = "cycle")]
    pub file: Option<String>,
    #[arg(short = 'f', long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[command(flatten)]
    pub domain: DomainArg,
    #[arg(allow_hyphen_values = true)]
    pub first: String,
    #[arg(allow_hyphen_values = true)]
    pub second: String,
    #[arg(short = 'f', long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub cycle: CycleArgs,
    /// Subset for the summands: whole, nonneg, pos, norm:B or list:a,b,...
    #[arg(short = 's', long, default_value = "whole")]
    pub subset: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub domain: DomainArg,
    /// Candidate entries: "lo..hi", "box:R" (Gaussian a+bi with |a|,|b| <= R)
    /// or a comma-separated list.
    #[arg(short = 'c', long, allow_hyphen_values = true)]
    pub candidates: String,
    /// Worker threads for the search.
    #[arg(short = 'j', long, env = "FRIEZE_LAB_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Report search progress on stderr.
    #[arg(long)]
    pub progress: bool,
    #[arg(short = 'f', long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(short = 'm', long)]
    pub length: usize,
    /// Keep only cycles with this lambda (1 or -1).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<i64>,
    /// One representative per dihedral orbit.
    #[arg(long)]
    pub dedup: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// A length "m" or an inclusive range "lo..hi".
    #[arg(short = 'm', long)]
    pub length: String,
    #[arg(short = 's', long, default_value = "whole")]
    pub subset: String,
}

#[derive(Debug, Args)]
pub struct GaussArgs {
    #[arg(short = 'k', long)]
    pub k: usize,
    #[arg(short = 'f', long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    execute(&cli.command, out, err)
}

pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            if e.is_verification_failure() {
                EXIT_VERIFY
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn load_cycle(args: &CycleArgs) -> Result<QuiddityCycle> {
    let domain = args.domain.parse()?;
    match (&args.file, &args.cycle) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            CycleDocument::from_json(&text)?.to_cycle()
        }
        (None, Some(text)) => read_cycle(domain, text),
        (None, None) => Err(Error::parse("", "no cycle given")),
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify(args) => verify(args, out),
        Command::Sum(args) => {
            let d = args.domain.parse()?;
            let a = read_cycle(d, &args.first)?;
            let b = read_cycle(d, &args.second)?;
            let s = cycle_sum(&a, &b)?;
            match args.format {
                Format::Json => writeln!(out, "{}", to_json(&CycleDocument::from_cycle(&s))),
                _ => writeln!(out, "{s} (lambda = {})", s.lambda()),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Frieze(args) => {
            let c = load_cycle(args)?;
            let f = make_frieze(&c);
            match args.format {
                Format::Json => writeln!(out, "{}", to_json(&FriezeDocument::from_frieze(&f))),
                _ => writeln!(out, "{}tame: {}", f.render_text(), f.is_tame()),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Decompose(args) => {
            let c = load_cycle(&args.cycle)?;
            let subset = SubsetSpec::parse(c.domain(), &args.subset)?;
            let tree = decompose(&c, &subset)?;
            let text = match args.cycle.format {
                Format::Json => format!("{}\n", to_json(&TreeDocument::from_tree(&tree))),
                Format::Dot => tree.to_dot(),
                Format::Text => {
                    let mut s = tree.render_text();
                    s.push_str("irreducible leaves:\n");
                    for leaf in tree.leaves() {
                        s.push_str(&format!("  ({leaf}) lambda = {}\n", leaf.lambda()));
                    }
                    s
                }
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate(args) => enumerate(args, out, err),
        Command::Classify(args) => classify(args, out, err),
        Command::Gauss(args) => {
            let r = verify_gauss_irreducible(args.k)?;
            match args.format {
                Format::Json => writeln!(out, "{}", to_json(&GaussDocument::from_report(&r))),
                _ => writeln!(
                    out,
                    "k = {}\ncycle = ({}) lambda = {}\nlength = {}\ninterior entries = {}\nunit entries = {}\nx[1,{}] = {}\nirreducible over Z[i]: {}",
                    r.k,
                    r.cycle,
                    r.cycle.lambda(),
                    r.cycle.len(),
                    r.entries.len(),
                    r.unit_entries.len(),
                    2 * r.k + 5,
                    r.marker,
                    r.irreducible()
                ),
            }
            .map_err(io_err)?;
            Ok(if r.irreducible() { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn verify(args: &CycleArgs, out: &mut dyn Write) -> Result<i32> {
    let lambda = match load_cycle(args) {
        Ok(c) => Some(c.lambda()),
        Err(Error::NotACycle(_)) => None,
        Err(e) => return Err(e),
    };
    let text = match (args.format, lambda) {
        (Format::Json, l) => format!(
            "{}\n",
            to_json(&serde_json::json!({ "cycle": l.is_some(), "lambda": l.map(|l| l.to_i8()) }))
        ),
        (_, Some(l)) => format!("lambda = {l}\n"),
        (_, None) => "not a lambda-cycle\n".to_string(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(if lambda.is_some() { EXIT_OK } else { EXIT_VERIFY })
}

/// `lo..hi`, `box:R` or a comma-separated list of literals.
pub fn parse_candidates(domain: Domain, text: &str) -> Result<Vec<RingElement>> {
    if let Some(r) = text.strip_prefix("box:") {
        if domain != Domain::Gaussian {
            return Err(Error::Domain("box candidates need Z[i]".into()));
        }
        let r: i64 = r.parse().map_err(|_| Error::parse(text, "bad box radius"))?;
        return Ok((-r..=r)
            .flat_map(|a| (-r..=r).map(move |b| RingElement::gaussian(a, b)))
            .collect());
    }
    if let Ok(range) = parse_range(text) {
        return Ok(range.map(|v| RingElement::from_int(domain, v)).collect());
    }
    parse_entries(domain, text)
}

fn parse_range(text: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::parse(text, "expected lo..hi");
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn parse_lengths(text: &str) -> Result<RangeInclusive<usize>> {
    if let Ok(m) = text.trim().parse::<usize>() {
        return Ok(m..=m);
    }
    let r = parse_range(text)?;
    if *r.start() < 0 || r.is_empty() {
        return Err(Error::parse(text, "empty length range"));
    }
    Ok(*r.start() as usize..=*r.end() as usize)
}

/// Runs `work` on a helper thread and forwards its progress reports to `err`
/// as they arrive.
fn with_progress<T: Send>(
    enabled: bool,
    length: usize,
    err: &mut dyn Write,
    work: impl FnOnce(&(dyn Fn(PartitionDone) + Sync)) -> T + Send,
) -> T {
    let (tx, rx) = mpsc::channel::<PartitionDone>();
    std::thread::scope(|scope| {
        let handle = scope.spawn(move || {
            let report = |p: PartitionDone| {
                if enabled {
                    let _ = tx.send(p);
                }
            };
            work(&report)
        });
        for p in rx {
            let _ = writeln!(
                err,
                "progress: m={length} partition {}/{} nodes={} cycles={}",
                p.index + 1,
                p.partitions,
                p.stats.nodes_visited,
                p.stats.cycles_found
            );
        }
        handle.join().expect("search thread panicked")
    })
}

fn enumerate(args: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let s = &args.search;
    let d = s.domain.parse()?;
    let lambda = match args.lambda {
        None => None,
        Some(v) => Some(Sign::from_i64(v).ok_or_else(|| Error::parse(&v.to_string(), "lambda must be 1 or -1"))?),
    };
    let task = EnumerationTask::new(d, parse_candidates(d, &s.candidates)?, args.length)?
        .with_lambda(lambda)
        .with_dedup(args.dedup);
    let (cycles, stats) =
        with_progress(s.progress, args.length, err, |cb| enumerate_parallel(&task, s.jobs, cb))?;
    let text = match s.format {
        Format::Json => {
            let doc = EnumerationDocument {
                domain: d.tag().into(),
                n: d.modulus(),
                length: task.length(),
                candidates: task.candidates().iter().map(|x| x.to_string()).collect(),
                lambda_filter: task.lambda_filter().map(|l| l.to_i8().into()),
                dedup: task.dedup(),
                stats: stats.into(),
                cycles: cycles.iter().map(CycleDocument::from_cycle).collect(),
            };
            format!("{}\n", to_json(&doc))
        }
        _ => {
            let mut t = String::new();
            for c in &cycles {
                t.push_str(&format!("{c} (lambda = {})\n", c.lambda()));
            }
            t.push_str(&format!(
                "total: {} cycles ({} visited nodes)\n",
                cycles.len(),
                stats.nodes_visited
            ));
            t
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn classify(args: &ClassifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let s = &args.search;
    let d = s.domain.parse()?;
    let subset = SubsetSpec::parse(d, &args.subset)?;
    let candidates = parse_candidates(d, &s.candidates)?;
    let lengths = parse_lengths(&args.length)?;
    let mut docs = Vec::new();
    for m in lengths {
        let task = EnumerationTask::new(d, candidates.clone(), m)?;
        let report = with_progress(s.progress, m, err, |cb| classify_parallel(&task, &subset, s.jobs, cb))?;
        match s.format {
            Format::Json => docs.push(ReportDocument::from_report(&report)),
            _ => out.write_all(report.render_table().as_bytes()).map_err(io_err)?,
        }
    }
    if s.format == Format::Json {
        writeln!(out, "{}", to_json(&docs)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("frieze-lab").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_examples() {
        assert_eq!(run_args(&["verify", "-d", "Z", "0,0"]), (0, "lambda = -1\n".into(), String::new()));
        let (code, out, _) = run_args(&["verify", "-d", "Z", "1,2"]);
        assert_eq!((code, out.as_str()), (2, "not a lambda-cycle\n"));
        let (code, _, err) = run_args(&["verify", "-d", "Z", "1,x"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error[E_PARSE]"));
    }

    #[test]
    fn sum_example() {
        let (code, out, _) = run_args(&["sum", "-d", "Z", "3,0,-3,0", "-1,-1,-1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2,0,-3,-1,-1 (lambda = -1)\n");
        let (code, _, err) = run_args(&["sum", "-d", "Z", "3,0,-3,1", "-1,-1,-1"]);
        assert_eq!(code, 2);
        assert!(err.contains("E_NOT_A_CYCLE"));
    }

    #[test]
    fn candidate_syntax() {
        assert_eq!(parse_candidates(Domain::Integer, "-2..2").unwrap().len(), 5);
        assert_eq!(parse_candidates(Domain::Integer, "0,1,5").unwrap().len(), 3);
        assert_eq!(parse_candidates(Domain::Gaussian, "box:1").unwrap().len(), 9);
        assert!(parse_candidates(Domain::Integer, "box:1").is_err());
        assert_eq!(parse_lengths("3..7").unwrap(), 3..=7);
        assert_eq!(parse_lengths("4").unwrap(), 4..=4);
        assert!(parse_lengths("5..3").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
