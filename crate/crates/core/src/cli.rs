//! Command-line front end. [`run`] parses arguments and returns the exit code
//! with the text to print, so the binary stays a thin wrapper.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
//! violation, 3 verification mismatch.

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::maya::RimHookSpec;
use crate::oracle::{verify_space, VerifyOptions};
use crate::qdegree::{graded_degree, greedy_min_degree, ChainTrace, DegreeVector};
use crate::weyl::{CosetRep, FlagShape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qmindeg", version, about = "Minimal quantum degrees on partial flags via Maya diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal degree of q in σ^v ⋆ σ_w
    Mindeg(MindegArgs),
    /// Apply one generalized qt-rim hook to v
    Rimhook(RimhookArgs),
    /// Decide w <= v in Bruhat order
    Bruhat(PairArgs),
    /// Check every pair of a small shape against the brute-force oracles
    Verify(VerifyArgs),
    /// List the cosets of a shape
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct FlagArg {
    /// Flag shape as `i1,...,ik/n`
    #[arg(long = "flag")]
    flag: String,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[command(flatten)]
    flag: FlagArg,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
}

#[derive(Debug, Args)]
struct MindegArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Emit a JSON record instead of text
    #[arg(long)]
    json: bool,
    /// Print the Maya diagrams of the rim-hook chain
    #[arg(long)]
    show_chain: bool,
    /// ANSI colors in diagrams (ignored when NO_COLOR is set)
    #[arg(long)]
    color: bool,
}

#[derive(Debug, Args)]
struct RimhookArgs {
    #[command(flatten)]
    flag: FlagArg,
    #[arg(long)]
    v: String,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    color: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    flag: FlagArg,
    #[arg(long, default_value_t = 1)]
    cap_margin: u32,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    flag: FlagArg,
    #[arg(long)]
    count_only: bool,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(err: &Error) -> Self {
        let code = if err.is_internal() { EXIT_INTERNAL } else { EXIT_USAGE };
        Outcome { code, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagRecord {
    pub n: usize,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub q: usize,
    pub t: usize,
    pub degree: DegreeVector,
    pub coset: String,
}

/// JSON form of a `mindeg` result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub flag: FlagRecord,
    pub v: String,
    pub w: String,
    pub min_degree: DegreeVector,
    pub exponent_form: String,
    pub graded_degree: u64,
    pub chain: Vec<ChainRecord>,
}

impl OutputRecord {
    pub fn from_trace(trace: &ChainTrace) -> Result<Self, Error> {
        let shape = trace.start.shape();
        Ok(OutputRecord {
            flag: FlagRecord { n: shape.n(), dims: shape.dims().to_vec() },
            v: trace.start.to_string(),
            w: trace.target.to_string(),
            min_degree: trace.total.clone(),
            exponent_form: trace.total.exponent_form(),
            graded_degree: graded_degree(shape, &trace.total)?,
            chain: trace
                .steps
                .iter()
                .map(|s| ChainRecord {
                    q: s.spec.q,
                    t: s.spec.t,
                    degree: s.degree.clone(),
                    coset: s.result.to_string(),
                })
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let color_allowed = std::env::var_os("NO_COLOR").is_none();
    let result = match cli.command {
        Command::Mindeg(a) => mindeg(&a, color_allowed),
        Command::Rimhook(a) => rimhook(&a, color_allowed),
        Command::Bruhat(a) => bruhat(&a),
        Command::Verify(a) => verify(&a),
        Command::Enumerate(a) => enumerate(&a),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn parse_pair(p: &PairArgs) -> Result<(FlagShape, CosetRep, CosetRep), Error> {
    let shape: FlagShape = p.flag.flag.parse()?;
    let v = CosetRep::parse(&shape, &p.v)?;
    let w = CosetRep::parse(&shape, &p.w)?;
    Ok((shape, v, w))
}

fn mindeg(a: &MindegArgs, color_allowed: bool) -> Result<Outcome, Error> {
    let (_, v, w) = parse_pair(&a.pair)?;
    let (_, trace) = greedy_min_degree(&v, &w)?;
    let record = OutputRecord::from_trace(&trace)?;
    if a.json {
        return Ok(Outcome::ok(record.to_json() + "\n"));
    }
    let mut out = format!(
        "{}\n{}\ngraded degree: {}\n",
        record.min_degree, record.exponent_form, record.graded_degree
    );
    if a.show_chain {
        out.push('\n');
        out.push_str(&render_chain(&trace, a.color && color_allowed));
    }
    Ok(Outcome::ok(out))
}

/// The target diagram followed by every node of the chain, with each arrow
/// labeled by its hook and degree.
pub fn render_chain(trace: &ChainTrace, color: bool) -> String {
    let mut out = format!("w = {}\n{}\n", trace.target, trace.target.to_maya().render(color));
    out.push_str(&format!("v_0 = {}\n{}", trace.start, trace.start.to_maya().render(color)));
    for (i, step) in trace.steps.iter().enumerate() {
        out.push_str(&format!(
            "--{} {}-->\nv_{} = {}\n{}",
            step.spec,
            step.degree.exponent_form(),
            i + 1,
            step.result,
            step.result.to_maya().render(color)
        ));
    }
    out
}

fn rimhook(a: &RimhookArgs, color_allowed: bool) -> Result<Outcome, Error> {
    let shape: FlagShape = a.flag.flag.parse()?;
    let v = CosetRep::parse(&shape, &a.v)?;
    let spec = RimHookSpec::new(&shape, a.q, a.t)?;
    let before = v.to_maya();
    let after = before.rim_hook(spec)?;
    let color = a.color && color_allowed;
    Ok(Outcome::ok(format!(
        "{}\nbefore:\n{}after:\n{}",
        after.to_coset()?,
        before.render(color),
        after.render(color)
    )))
}

fn bruhat(a: &PairArgs) -> Result<Outcome, Error> {
    let (_, v, w) = parse_pair(a)?;
    Ok(Outcome::ok(format!("{}\n", w.to_maya().leq(&v.to_maya())?)))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Error> {
    let shape: FlagShape = a.flag.flag.parse()?;
    let report = verify_space(&shape, VerifyOptions { cap_margin: a.cap_margin, jobs: a.jobs.max(1) })?;
    let code = if report.is_success() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { code, stdout: report.to_string(), stderr: String::new() })
}

fn enumerate(a: &EnumerateArgs) -> Result<Outcome, Error> {
    let shape: FlagShape = a.flag.flag.parse()?;
    if a.count_only {
        return Ok(Outcome::ok(format!("{}\n", shape.coset_count())));
    }
    let mut out = String::new();
    for c in shape.cosets() {
        out.push_str(&c.to_string());
        out.push('\n');
    }
    Ok(Outcome::ok(out))
}
