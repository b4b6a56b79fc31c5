//! Command-line front end.
//!
//! Results go to `out`, diagnostics to `err`. Exit codes: 0 success, 1 parse
//! or spec error, 2 no sequencing / invalid ordering, 3 strict bound violated,
//! 4 internal self-check failure.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::groups::{Element, Group, GroupError, GroupSpec};
use crate::pipeline::{sequence, sweep, Method, PipelineError, SequenceOptions, SweepMode, SweepOptions};
use crate::rectify::{rectify, RectifyError, RectifyOptions};
use crate::sequencing::{is_sequencing, SequencingError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_SEQUENCED: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "weak-freiman", version, about = "Sequencings of small subsets of cyclic, dihedral, semidirect and dicyclic groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a sequencing of a set.
    Sequence {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "auto", value_parser = ["auto", "constructive", "search"])]
        method: String,
        #[arg(long)]
        strict_bounds: bool,
        /// Node budget for backtracking search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check whether an ordering is a sequencing.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        ordering: String,
    },
    /// Rectify a set into an infinite group.
    Rectify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        strict_bounds: bool,
    },
    /// Sequence every (or a sample of) k-subset of G \ {0}.
    Sweep {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value = "auto", value_parser = ["auto", "constructive", "search"])]
        method: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

fn sequencing_code(e: &SequencingError) -> i32 {
    match e {
        SequencingError::NotFound
        | SequencingError::BudgetExhausted(_)
        | SequencingError::CounterexampleFound(_)
        | SequencingError::SearchFallbackFailed(_) => EXIT_NOT_SEQUENCED,
        SequencingError::ConstructionFailed(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn rectify_code(e: &RectifyError) -> i32 {
    match e {
        RectifyError::BoundViolated { .. } => EXIT_BOUND,
        RectifyError::RankCertificateMismatch { .. }
        | RectifyError::SelfCheckFailed(_)
        | RectifyError::NoMultiplierFound { .. } => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

pub fn exit_code(e: &PipelineError) -> i32 {
    match e {
        PipelineError::Group(_) | PipelineError::Sweep(_) => EXIT_INPUT,
        PipelineError::Sequencing(e) => sequencing_code(e),
        PipelineError::Rectify(e) => rectify_code(e),
        PipelineError::PullBackFailed(_) => EXIT_INTERNAL,
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::input(e.to_string())
    }
}

pub fn parse_group(text: &str) -> Result<Group, GroupError> {
    let spec: GroupSpec = serde_json::from_str(text).map_err(|e| GroupError::Decode(format!("group spec: {e}")))?;
    spec.validate()
}

pub fn parse_elements(group: &Group, text: &str) -> Result<Vec<Element>, GroupError> {
    let v: Value = serde_json::from_str(text).map_err(|e| GroupError::Decode(format!("element list: {e}")))?;
    group.decode_elements(&v)
}

fn render(out: &mut dyn Write, format: Output, json: &Value, text: &str) -> std::io::Result<()> {
    match format {
        Output::Json => writeln!(out, "{json}"),
        Output::Text => write!(out, "{text}"),
    }
}

fn table(group: &Group, ordering: &[Element], sums: &[Element]) -> String {
    let rows: Vec<(String, String, String)> = sums
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let x = if i == 0 { "-".to_string() } else { ordering[i - 1].to_string() };
            (i.to_string(), x, s.to_string())
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(1).max(3);
    let mut s = format!("group {}\n{:>w0$}  {:<w1$}  s_i\n", group.spec(), "i", "x_i");
    for (i, x, sum) in rows {
        s.push_str(&format!("{i:>w0$}  {x:<w1$}  {sum}\n"));
    }
    s
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    };
    match cli.command {
        Command::Sequence {
            group,
            set,
            method,
            strict_bounds,
            budget,
        } => {
            let g = parse_group(&group)?;
            let set = parse_elements(&g, &set)?;
            let opts = SequenceOptions {
                method: method.parse::<Method>().map_err(Failure::input)?,
                strict_bounds,
                budget,
            };
            let o = sequence(&g, &set, &opts)?;
            for d in &o.diagnostics {
                writeln!(err, "note: {d}").map_err(io)?;
            }
            let text = format!("path {}\n{}", o.path, table(&g, &o.sequencing.ordering, &o.sequencing.partial_sums));
            render(out, cli.output, &o.to_json(&g), &text).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { group, ordering } => {
            let g = parse_group(&group)?;
            let ord = parse_elements(&g, &ordering)?;
            let s = is_sequencing(&g, &ord).map_err(|e| Failure::from(PipelineError::from(e)))?;
            let json = serde_json::json!({
                "group": g.spec(),
                "ordering": g.encode_elements(&s.ordering),
                "partial_sums": g.encode_elements(&s.partial_sums),
                "valid": s.valid,
                "terminal_exception_used": s.terminal_exception_used,
                "collision": s.collision.map(|(i, j)| serde_json::json!({"i": i, "j": j})),
            });
            let mut text = table(&g, &s.ordering, &s.partial_sums);
            match s.collision {
                None => text.push_str("valid sequencing\n"),
                Some((i, j)) => text.push_str(&format!("not a sequencing: s_{i} = s_{j}\n")),
            }
            render(out, cli.output, &json, &text).map_err(io)?;
            if let Some((i, j)) = s.collision {
                writeln!(err, "partial sums s_{i} and s_{j} coincide").map_err(io)?;
                return Ok(EXIT_NOT_SEQUENCED);
            }
            Ok(EXIT_OK)
        }
        Command::Rectify {
            group,
            set,
            order,
            strict_bounds,
        } => {
            let g = parse_group(&group)?;
            let set = parse_elements(&g, &set)?;
            let r = rectify(&g, &set, RectifyOptions { strict_bounds, order }).map_err(|e| Failure::from(PipelineError::from(e)))?;
            let mut text = format!("{} -> {}\n", r.source_group.spec(), r.target_group.spec());
            for (a, b) in r.pairing() {
                text.push_str(&format!("  {a}  ->  {b}\n"));
            }
            text.push_str(&format!(
                "cleared by {}; bound {} (spf {}, required {}): {}\n",
                r.cleared_by,
                r.bound.mode,
                r.bound.spf,
                r.bound.required,
                if r.bound.satisfied { "satisfied" } else { "not satisfied" }
            ));
            render(out, cli.output, &r.to_json(), &text).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            group,
            k,
            sample,
            seed,
            workers,
            method,
        } => {
            let g = parse_group(&group)?;
            let opts = SweepOptions {
                mode: match sample {
                    Some(count) => SweepMode::Sample { count, seed },
                    None => SweepMode::Exhaustive,
                },
                workers,
                method: method.parse::<Method>().map_err(Failure::input)?,
            };
            let r = sweep(&g, k, &opts)?;
            let mut text = format!(
                "group {}  k {}\nsubsets tested  {}\nall sequenced   {}\nfallbacks       {}\nfailures        {}\n",
                g.spec(),
                k,
                r.subsets_tested,
                r.all_sequenced,
                r.fallbacks,
                r.failures.len()
            );
            if let Some(f) = r.failures.first() {
                let shown: Vec<String> = f.set.iter().map(|a| a.to_string()).collect();
                text.push_str(&format!("first failure   #{} {{{}}}: {}\n", f.index, shown.join(", "), f.diagnostics));
            }
            render(out, cli.output, &r.to_json(), &text).map_err(io)?;
            Ok(if r.all_sequenced { EXIT_OK } else { EXIT_NOT_SEQUENCED })
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
