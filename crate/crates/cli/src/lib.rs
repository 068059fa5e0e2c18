//! Argument handling for the `plactic` binary.
//!
//! Exit status: 0 on success or when a sweep finds nothing, 1 when a sweep
//! finds a counterexample, 2 on usage and budget errors or an interrupted
//! sweep.

use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plactic::enumeration::Counter;
use plactic::harness::Instance;
use plactic::{
    centralizer::centralizer_words, count_by_shapes, count_centralizer, expand_binomial_with, in_centralizer,
    p_tableau, run_sweep, Budget, Cancel, Conjecture, Family, SweepConfig, SweepReport, Verdict, Word,
};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "plactic", version, about = "Centralizers in the plactic monoid")]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Word-enumeration budget (default: $PLACTIC_BUDGET or 10^8)
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the insertion tableau P(w)
    Ptab { w: Word },
    /// Decide whether uw and wu have the same insertion tableau
    Commutes { u: Word, w: Word },
    /// List the words of C(u) of a given length and alphabet, in lexicographic order
    Centralizer {
        u: Word,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        max: u32,
    },
    /// Count the words of C(u) of a given length and alphabet
    Count {
        u: Word,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Expand c_{n,m}(u) as a polynomial in m in the basis C(m,k)
    Expand {
        u: Word,
        #[arg(long)]
        len: usize,
        /// Sample the counts by brute force instead of by shapes
        #[arg(long)]
        brute: bool,
    },
    /// Search a finite range for counterexamples to a conjecture
    Conjecture(ConjectureArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Shape formula when u has one, brute force otherwise
    Auto,
    Shapes,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Which {
    Maxri,
    Stability,
    Coeffs,
    Rc,
}

impl From<Which> for Conjecture {
    fn from(w: Which) -> Self {
        match w {
            Which::Maxri => Conjecture::MaxRi,
            Which::Stability => Conjecture::Stability,
            Which::Coeffs => Conjecture::Coefficients,
            Which::Rc => Conjecture::Rc,
        }
    }
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    which: Which,
    /// Check this u only
    #[arg(long)]
    u: Option<Word>,
    /// Largest letter of u
    #[arg(long)]
    u_max: Option<u32>,
    /// Largest length of u
    #[arg(long)]
    u_len: Option<usize>,
    /// Bound on max u + |u|
    #[arg(long, conflicts_with = "no_u_sum")]
    u_sum: Option<u32>,
    /// Drop the bound on max u + |u|
    #[arg(long)]
    no_u_sum: bool,
    /// Largest letter of w
    #[arg(long)]
    w_max: Option<u32>,
    /// Largest length of w
    #[arg(long)]
    w_len: Option<usize>,
    /// Largest power of u (stability)
    #[arg(long)]
    k_max: Option<usize>,
    /// Fixed m (rc)
    #[arg(long)]
    m: Option<u32>,
    /// Largest n (coeffs)
    #[arg(long)]
    n_max: Option<usize>,
    /// Number of lexicographic blocks processed in parallel
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Stop after this many seconds and report what was checked
    #[arg(long)]
    time_limit: Option<f64>,
    /// Report elapsed_ms as 0
    #[arg(long)]
    no_timing: bool,
    /// Print every instance, not only counterexamples
    #[arg(long)]
    verbose: bool,
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, out, err, &Cancel::new())
}

/// [`run`] with a cancellation token for long sweeps.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, cancel: &Cancel) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, cancel) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<i32, Box<dyn std::error::Error>>;

fn dispatch(cli: Cli, out: &mut dyn Write, cancel: &Cancel) -> Outcome {
    let budget = match cli.budget {
        Some(0) => return Err("budget must be positive".into()),
        Some(b) => Budget(b),
        None => Budget::from_env(),
    };
    let json = cli.json;
    match cli.command {
        Command::Ptab { w } => {
            let p = p_tableau(&w);
            if json {
                writeln!(out, "{}", json!({ "w": w, "p": p.rows() }))?;
            } else if !p.is_empty() {
                writeln!(out, "{p}")?;
            }
        }
        Command::Commutes { u, w } => {
            let c = in_centralizer(&u, &w);
            if json {
                writeln!(out, "{}", json!({ "u": u, "w": w, "commutes": c }))?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Centralizer { u, len, max } => {
            let words = centralizer_words(&u, len, max, budget)?;
            if json {
                writeln!(out, "{}", json!({ "u": u, "len": len, "max": max, "words": words }))?;
            } else {
                for w in &words {
                    writeln!(out, "{w}")?;
                }
            }
        }
        Command::Count { u, len, max, method } => {
            let family = Family::from_word(&u);
            let count = match (method, family) {
                (Method::Brute, _) | (Method::Auto, Err(_)) => count_centralizer(&u, len, max, budget)?.into(),
                (_, Ok(f)) => count_by_shapes(f, len, max)?,
                (Method::Shapes, Err(e)) => return Err(e.into()),
            };
            if json {
                writeln!(out, "{}", json!({ "u": u, "len": len, "max": max, "count": count.to_string() }))?;
            } else {
                writeln!(out, "{count}")?;
            }
        }
        Command::Expand { u, len, brute } => {
            let counter = if brute { Counter::BruteForce(budget) } else { Counter::Shapes };
            let poly = expand_binomial_with(&u, len, counter)?;
            if json {
                writeln!(out, "{}", json!({ "u": u, "len": len, "coefficients": poly, "polynomial": poly.to_string() }))?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::Conjecture(args) => return conjecture(args, budget, json, out, cancel),
    }
    Ok(EXIT_OK)
}

fn sweep_config(args: &ConjectureArgs, budget: Budget) -> SweepConfig {
    let mut cfg = SweepConfig::new(args.which.into());
    if cfg.conjecture == Conjecture::Rc {
        cfg.w_length = 4;
    }
    cfg.budget = budget;
    cfg.shards = args.shards;
    cfg.u = args.u.clone();
    if args.u.is_some() {
        cfg.u_sum = None;
    }
    if let Some(v) = args.u_max {
        cfg.u_alphabet = v;
    }
    if let Some(v) = args.u_len {
        cfg.u_length = v;
    }
    if args.no_u_sum {
        cfg.u_sum = None;
    } else if let Some(v) = args.u_sum {
        cfg.u_sum = Some(v);
    }
    if let Some(v) = args.w_max {
        cfg.w_alphabet = v;
    }
    if let Some(v) = args.w_len {
        cfg.w_length = v;
    }
    if let Some(v) = args.k_max {
        cfg.k_bound = v;
    }
    cfg.rc_m = args.m;
    if let Some(v) = args.n_max {
        cfg.n_max = v;
    }
    cfg
}

fn conjecture(args: ConjectureArgs, budget: Budget, json: bool, out: &mut dyn Write, cancel: &Cancel) -> Outcome {
    let cfg = sweep_config(&args, budget);
    let cancel = match args.time_limit {
        Some(s) if s.is_finite() && s >= 0.0 => cancel.with_limit(Duration::from_secs_f64(s)),
        Some(_) => return Err("time limit must be a nonnegative number of seconds".into()),
        None => cancel.clone(),
    };
    let mut report = run_sweep(&cfg, &cancel)?;
    if args.no_timing {
        report = report.without_timing();
    }
    if json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write_report(&report, args.verbose, out)?;
    }
    Ok(exit_code(&report))
}

/// Counterexamples dominate; an interrupted sweep without any is an error.
pub fn exit_code(report: &SweepReport) -> i32 {
    if !report.counterexamples.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else if report.verdict == Verdict::Incomplete {
        EXIT_USAGE
    } else {
        EXIT_OK
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Counterexample => "counterexample",
        Verdict::Incomplete => "incomplete",
    }
}

fn range_line(cfg: &SweepConfig) -> String {
    let us = match (&cfg.u, cfg.u_sum) {
        (Some(u), _) => format!("u = {u}"),
        (None, Some(s)) => format!("u in [{}]^<={} with max u + |u| <= {s}", cfg.u_alphabet, cfg.u_length),
        (None, None) => format!("u in [{}]^<={}", cfg.u_alphabet, cfg.u_length),
    };
    let ws = format!("w in [{}]^<={}", cfg.w_alphabet, cfg.w_length);
    match cfg.conjecture {
        Conjecture::MaxRi => format!("{us}, {ws}"),
        Conjecture::Stability => format!("{us}, {ws}, k <= {}", cfg.k_bound),
        Conjecture::Coefficients => format!("2 <= n <= {}", cfg.n_max),
        Conjecture::Rc => match cfg.rc_m {
            Some(m) => format!("{us}, m = {m}, {ws}"),
            None => format!("{us}, every m >= max u, {ws}"),
        },
    }
}

fn instance_line(i: &Instance) -> String {
    let mut head = format!("u={}", i.u);
    if let Some(m) = i.m {
        head.push_str(&format!(" m={m}"));
    }
    if let Some(n) = i.n {
        head = format!("n={n}");
    }
    format!("  {head}: {} ({})", verdict_name(i.verdict), i.detail)
}

fn write_report(report: &SweepReport, verbose: bool, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{}: {}", report.conjecture, verdict_name(report.verdict))?;
    writeln!(out, "range: {}", range_line(&report.config))?;
    writeln!(out, "checked: {}", report.checked)?;
    for i in &report.instances {
        let notable = i.verdict != Verdict::Holds || i.k_containment.is_some_and(|k| k > 1);
        if verbose || notable || report.instances.len() == 1 {
            writeln!(out, "{}", instance_line(i))?;
        }
    }
    for c in &report.counterexamples {
        let mut line = format!("counterexample: u={} w={}", c.u, c.w);
        if let Some(k) = c.k {
            line.push_str(&format!(" k={k}"));
        }
        if let Some(m) = c.m {
            line.push_str(&format!(" m={m}"));
        }
        writeln!(out, "{line}: {}", c.detail)?;
    }
    writeln!(out, "elapsed_ms: {}", report.elapsed_ms)
}
