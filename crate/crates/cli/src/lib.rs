//! Command-line front end for `sppm-core`.
//!
//! [`run_command`] takes an argument vector and returns the exit code and
//! both output streams, so the binary is a thin wrapper and the commands can
//! be tested in-process.

pub mod format;

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sppm_core::oracle::{
    self, brute_partition_count, brute_partition_witnesses, brute_perm_count,
    brute_perm_occurrences, census, CensusPattern, RunOptions, VerificationReport,
};
use sppm_core::{
    dispatch_contains, partition_count, partition_of_rgf, perm_contains, perm_count,
    perm_of_partition, reduce_perm, rgf_contains, rgf_count, rgf_of, MatchResult,
};

use crate::format::{parse_partition, parse_permutation, parse_rgf};

/// Relation holds / command succeeded.
pub const EXIT_HOLDS: i32 = 0;
/// Relation does not hold.
pub const EXIT_NOT_HOLDS: i32 = 1;
/// Usage, parse or domain error.
pub const EXIT_ERROR: i32 = 2;
/// A verification run found a mismatch.
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "sppm", version, about = "Pattern containment in permutations and set partitions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether TEXT contains PATTERN (exit 0 if it does, 1 if not).
    Contains(RelationArgs),
    /// Count occurrences of PATTERN in TEXT.
    Count(RelationArgs),
    /// Map a permutation to its pair partition of [2n].
    Reduce { permutation: String },
    /// Recover the permutation from a pair partition of [2n].
    InvertReduce { partition: String },
    /// Encode a partition as a restricted growth word (or decode with --inverse).
    Rgf {
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Word containment between two restricted growth words.
    RgfContains {
        text: String,
        pattern: String,
        #[arg(long)]
        witness: bool,
    },
    /// Count partitions of [n] avoiding and containing PATTERN, for n = 1..=max-n.
    Census {
        pattern: String,
        #[arg(long, value_enum, default_value_t = NotionArg::Partition)]
        notion: NotionArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the reduction exhaustively against brute force.
    Verify {
        #[arg(long, value_enum, default_value_t = NotionArg::Partition)]
        notion: NotionArg,
        /// Defaults to 6 (partition) or 5 (rgf).
        #[arg(long)]
        max_n: Option<usize>,
        /// Defaults to 4 (partition) or 3 (rgf).
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct RelationArgs {
    text: String,
    pattern: String,
    #[arg(long, value_enum, default_value_t = Kind::Partition)]
    kind: Kind,
    /// For partitions, match their restricted growth words instead.
    #[arg(long, value_enum, default_value_t = NotionArg::Partition)]
    notion: NotionArg,
    /// Print the lexicographically least witness.
    #[arg(long)]
    witness: bool,
    /// Use brute-force enumeration instead of the search engines.
    #[arg(long)]
    oracle: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Plain,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Perm,
    Partition,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum NotionArg {
    Partition,
    Rgf,
}

/// One result line. Fields are emitted in declaration order and only when set.
#[derive(Serialize, Debug, Default)]
struct OutputRecord {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    contains: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<String>,
}

#[derive(Serialize)]
struct CensusRecord {
    n: usize,
    pattern: String,
    notion: String,
    avoiders: u64,
    containers: u64,
}

#[derive(Serialize)]
struct MismatchRecord {
    check: String,
    text: String,
    pattern: String,
    engine: String,
    oracle: String,
}

#[derive(Serialize)]
struct VerifyRecord {
    command: &'static str,
    notion: String,
    max_n: usize,
    max_k: usize,
    pairs_checked: u64,
    count_pairs_checked: u64,
    passed: bool,
    mismatches: Vec<MismatchRecord>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Session<'a> {
    format: Format,
    stdin: &'a mut dyn Read,
    stdin_lines: Option<std::vec::IntoIter<String>>,
    out: String,
}

impl Session<'_> {
    /// Resolves `-` to the next nonempty line of standard input.
    fn arg(&mut self, value: &str) -> Result<String, Failure> {
        if value != "-" {
            return Ok(value.to_string());
        }
        if self.stdin_lines.is_none() {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf)?;
            let lines: Vec<String> = buf
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect();
            self.stdin_lines = Some(lines.into_iter());
        }
        self.stdin_lines
            .as_mut()
            .and_then(Iterator::next)
            .ok_or_else(|| Failure("standard input has no more lines".to_string()))
    }

    fn emit(&mut self, record: &OutputRecord, plain: impl FnOnce(&mut String)) {
        match self.format {
            Format::Json => {
                self.out.push_str(&serde_json::to_string(record).expect("serializable"));
                self.out.push('\n');
            }
            Format::Plain => plain(&mut self.out),
        }
    }

    fn emit_match(&mut self, command: &'static str, result: &MatchResult, show_witness: bool) -> i32 {
        let witness = result
            .witness
            .as_ref()
            .filter(|_| show_witness)
            .map(|w| w.as_slice().to_vec());
        let record = OutputRecord {
            command,
            contains: Some(result.contains),
            witness: witness.clone(),
            ..Default::default()
        };
        self.emit(&record, |out| {
            let _ = writeln!(out, "{}", result.contains);
            if let Some(w) = &witness {
                let _ = writeln!(out, "{}", join(w));
            }
        });
        if result.contains {
            EXIT_HOLDS
        } else {
            EXIT_NOT_HOLDS
        }
    }

    fn emit_result(&mut self, command: &'static str, result: String) -> i32 {
        let record = OutputRecord {
            command,
            result: Some(result.clone()),
            ..Default::default()
        };
        self.emit(&record, |out| {
            let _ = writeln!(out, "{result}");
        });
        EXIT_HOLDS
    }
}

fn join(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Runs one command. `stdin` is read only when a positional argument is `-`.
pub fn run_command<I, T>(argv: I, stdin: &mut dyn Read) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutput {
                    code: EXIT_HOLDS,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut session = Session {
        format: cli.format,
        stdin,
        stdin_lines: None,
        out: String::new(),
    };
    match dispatch(&mut session, cli.command) {
        Ok((code, stderr)) => CommandOutput {
            code,
            stdout: session.out,
            stderr,
        },
        Err(Failure(message)) => CommandOutput {
            code: EXIT_ERROR,
            stdout: session.out,
            stderr: format!("error: {message}\n"),
        },
    }
}

fn dispatch(s: &mut Session<'_>, command: Command) -> Result<(i32, String), Failure> {
    let code = match command {
        Command::Contains(args) => contains(s, args)?,
        Command::Count(args) => count(s, args)?,
        Command::Reduce { permutation } => {
            let pi = parse_permutation(&s.arg(&permutation)?)?;
            s.emit_result("reduce", reduce_perm(&pi).as_partition().to_string())
        }
        Command::InvertReduce { partition } => {
            let sigma = parse_partition(&s.arg(&partition)?)?;
            s.emit_result("invert-reduce", perm_of_partition(&sigma)?.to_string())
        }
        Command::Rgf { input, inverse } => {
            let input = s.arg(&input)?;
            let result = if inverse {
                partition_of_rgf(&parse_rgf(&input)?).to_string()
            } else {
                rgf_of(&parse_partition(&input)?).to_string()
            };
            s.emit_result("rgf", result)
        }
        Command::RgfContains {
            text,
            pattern,
            witness,
        } => {
            let text = parse_rgf(&s.arg(&text)?)?;
            let pattern = parse_rgf(&s.arg(&pattern)?)?;
            s.emit_match("rgf-contains", &rgf_contains(&text, &pattern), witness)
        }
        Command::Census {
            pattern,
            notion,
            max_n,
            force,
            jobs,
        } => {
            let raw = s.arg(&pattern)?;
            let pattern = match notion {
                NotionArg::Partition => CensusPattern::Partition(parse_partition(&raw)?),
                NotionArg::Rgf => CensusPattern::Rgf(parse_rgf(&raw)?),
            };
            let opts = RunOptions { force, jobs };
            for n in 1..=max_n {
                let row = census(n, &pattern, opts)?;
                let record = CensusRecord {
                    n: row.n,
                    pattern: row.pattern.to_string(),
                    notion: row.notion.to_string(),
                    avoiders: row.avoiders,
                    containers: row.containers,
                };
                match s.format {
                    Format::Json => {
                        s.out.push_str(&serde_json::to_string(&record)?);
                        s.out.push('\n');
                    }
                    Format::Plain => {
                        let _ = writeln!(
                            s.out,
                            "n={} pattern={} notion={} avoiders={} containers={}",
                            record.n, record.pattern, record.notion, record.avoiders, record.containers
                        );
                    }
                }
            }
            EXIT_HOLDS
        }
        Command::Verify {
            notion,
            max_n,
            max_k,
            force,
            jobs,
        } => return verify(s, notion, max_n, max_k, RunOptions { force, jobs }),
    };
    Ok((code, String::new()))
}

fn contains(s: &mut Session<'_>, args: RelationArgs) -> Result<i32, Failure> {
    let text = s.arg(&args.text)?;
    let pattern = s.arg(&args.pattern)?;
    let result = match (args.kind, args.notion) {
        (Kind::Perm, NotionArg::Rgf) => {
            return Err(Failure("--notion rgf applies to partitions only".to_string()))
        }
        (Kind::Perm, NotionArg::Partition) => {
            let (text, pattern) = (parse_permutation(&text)?, parse_permutation(&pattern)?);
            if args.oracle {
                match brute_perm_occurrences(&text, &pattern).into_iter().next() {
                    Some(o) => MatchResult::found(sppm_core::Witness::Occurrence(o)),
                    None => MatchResult::absent(),
                }
            } else {
                perm_contains(&text, &pattern)
            }
        }
        (Kind::Partition, NotionArg::Partition) => {
            let (text, pattern) = (parse_partition(&text)?, parse_partition(&pattern)?);
            if args.oracle {
                match brute_partition_witnesses(&text, &pattern).into_iter().next() {
                    Some(t) => MatchResult::found(sppm_core::Witness::Subset(t)),
                    None => MatchResult::absent(),
                }
            } else {
                dispatch_contains(&text, &pattern)
            }
        }
        (Kind::Partition, NotionArg::Rgf) => {
            let (text, pattern) = (parse_partition(&text)?, parse_partition(&pattern)?);
            rgf_contains(&rgf_of(&text), &rgf_of(&pattern))
        }
    };
    Ok(s.emit_match("contains", &result, args.witness))
}

fn count(s: &mut Session<'_>, args: RelationArgs) -> Result<i32, Failure> {
    let text = s.arg(&args.text)?;
    let pattern = s.arg(&args.pattern)?;
    let n = match (args.kind, args.notion) {
        (Kind::Perm, NotionArg::Rgf) => {
            return Err(Failure("--notion rgf applies to partitions only".to_string()))
        }
        (Kind::Perm, NotionArg::Partition) => {
            let (text, pattern) = (parse_permutation(&text)?, parse_permutation(&pattern)?);
            if args.oracle {
                brute_perm_count(&text, &pattern)
            } else {
                perm_count(&text, &pattern)
            }
        }
        (Kind::Partition, NotionArg::Partition) => {
            let (text, pattern) = (parse_partition(&text)?, parse_partition(&pattern)?);
            if args.oracle {
                brute_partition_count(&text, &pattern)
            } else {
                partition_count(&text, &pattern)
            }
        }
        (Kind::Partition, NotionArg::Rgf) => {
            let (text, pattern) = (parse_partition(&text)?, parse_partition(&pattern)?);
            rgf_count(&rgf_of(&text), &rgf_of(&pattern))
        }
    };
    let record = OutputRecord {
        command: "count",
        count: Some(n),
        ..Default::default()
    };
    s.emit(&record, |out| {
        let _ = writeln!(out, "{n}");
    });
    Ok(EXIT_HOLDS)
}

fn verify(
    s: &mut Session<'_>,
    notion: NotionArg,
    max_n: Option<usize>,
    max_k: Option<usize>,
    opts: RunOptions,
) -> Result<(i32, String), Failure> {
    let (report, label): (VerificationReport, &str) = match notion {
        NotionArg::Partition => (
            oracle::verify_reduction(max_n.unwrap_or(6), max_k.unwrap_or(4), opts)?,
            "partition",
        ),
        NotionArg::Rgf => (
            oracle::verify_rgf_coincidence(max_n.unwrap_or(5), max_k.unwrap_or(3), opts)?,
            "rgf",
        ),
    };
    let code = if report.passed() {
        EXIT_HOLDS
    } else {
        EXIT_MISMATCH
    };
    match s.format {
        Format::Json => {
            let record = VerifyRecord {
                command: "verify",
                notion: label.to_string(),
                max_n: report.max_n,
                max_k: report.max_k,
                pairs_checked: report.pairs_checked,
                count_pairs_checked: report.count_pairs_checked,
                passed: report.passed(),
                mismatches: report
                    .mismatches
                    .iter()
                    .map(|m| MismatchRecord {
                        check: m.check.to_string(),
                        text: m.text.clone(),
                        pattern: m.pattern.clone(),
                        engine: m.engine.clone(),
                        oracle: m.oracle.clone(),
                    })
                    .collect(),
            };
            s.out.push_str(&serde_json::to_string(&record)?);
            s.out.push('\n');
        }
        Format::Plain => {
            let out = &mut s.out;
            let _ = writeln!(out, "verify {label}: max_n={} max_k={}", report.max_n, report.max_k);
            let _ = writeln!(
                out,
                "pairs checked: {} (counts: {})",
                report.pairs_checked, report.count_pairs_checked
            );
            for m in &report.mismatches {
                let _ = writeln!(
                    out,
                    "mismatch [{}] text={} pattern={} engine={} oracle={}",
                    m.check, m.text, m.pattern, m.engine, m.oracle
                );
            }
            let _ = writeln!(out, "mismatches: {}", report.mismatches.len());
            let _ = writeln!(out, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
            let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
        }
    }
    Ok((code, String::new()))
}
