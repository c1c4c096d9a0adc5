//! Command-line front end for `ulrich-core`: runs certificates, solvers,
//! condition checks and Picard effectivity queries, printing JSON or an
//! aligned table.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ulrich_core::certify::{self, Options, IDS};
use ulrich_core::diophantine::{sextic_a_range, solve_632num, solve_conto, DEFAULT_A_MAX};
use ulrich_core::picard::decide_effective;
use ulrich_core::ulrich::{check_conditions, VarietyParams};
use ulrich_core::Certificate;

pub mod parse;
mod table;

pub use parse::{parse_class, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default enumeration bound.
pub const AMAX_ENV: &str = "ULRICH_AMAX";

#[derive(Parser, Debug)]
#[command(name = "ulrich", version, about = "Exact certificates for Ulrich twisted tangent bundles")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one certificate, or `all`.
    Certify {
        /// Certificate id from `ulrich list`, or `all`.
        id: String,
        /// Largest c for quadric-curves [default: 20].
        #[arg(long)]
        max_c: Option<i64>,
        /// Enumeration bound for conto and k1-surface [default: 64, or ULRICH_AMAX].
        #[arg(long)]
        a_max: Option<i64>,
        /// Largest degree for grado [default: 8].
        #[arg(long)]
        d_max: Option<i64>,
    },
    /// Enumerate the solutions of a Diophantine system.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
        /// Enumeration bound for conto [default: 64, or ULRICH_AMAX].
        #[arg(long)]
        a_max: Option<i64>,
    },
    /// Run every applicable necessary condition on the given invariants.
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        k: i64,
        #[arg(long = "KH")]
        kh: Option<i64>,
        #[arg(long = "K2")]
        k2: Option<i64>,
        #[arg(long)]
        c2: Option<i64>,
        #[arg(long)]
        chi: Option<i64>,
    },
    /// Picard lattice queries on blowups of the plane.
    Picard {
        #[command(subcommand)]
        query: PicardQuery,
    },
    /// List the certificate ids.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    Conto,
    #[value(name = "632num")]
    Sextic,
}

#[derive(Subcommand, Debug)]
enum PicardQuery {
    /// Decide effectivity of a class `(a; b1, ..., br)`.
    Eff {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Runs with `ULRICH_AMAX` taken from the process environment.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let env = std::env::var(AMAX_ENV).ok();
    run_with_env(args, env.as_deref())
}

/// Runs one command line. `amax_env` plays the role of `ULRICH_AMAX`.
pub fn run_with_env<I, S>(args: I, amax_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let default_a_max = match amax_env {
        None => DEFAULT_A_MAX,
        Some(v) => match v.trim().parse::<i64>() {
            Ok(n) => n,
            Err(_) => return Outcome::usage(format!("{AMAX_ENV} must be an integer, got `{v}`")),
        },
    };
    let fmt = cli.format;
    match cli.command {
        Command::Certify { id, max_c, a_max, d_max } => {
            let defaults = Options::default();
            let opts = Options {
                a_max: a_max.unwrap_or(default_a_max),
                max_c: max_c.unwrap_or(defaults.max_c),
                d_max: d_max.unwrap_or(defaults.d_max),
                ..defaults
            };
            run_certify(&id, &opts, fmt)
        }
        Command::Solve { problem, a_max } => run_solve(problem, a_max.unwrap_or(default_a_max), fmt),
        Command::Check { n, d, g, k, kh, k2, c2, chi } => run_check(n, d, g, k, [kh, k2, c2, chi], fmt),
        Command::Picard { query: PicardQuery::Eff { class } } => run_picard_eff(&class, fmt),
        Command::List => run_list(fmt),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn run_certify(id: &str, opts: &Options, fmt: Format) -> Outcome {
    let certs: Vec<Certificate> = if id == "all" {
        certify::certify_all(opts)
    } else {
        match certify::certify(id, opts) {
            Ok(c) => vec![c],
            Err(e) => return Outcome::usage(format!("{e}; run `ulrich list` for the ids")),
        }
    };
    let code = if certs.iter().all(|c| c.status.is_success()) { EXIT_OK } else { EXIT_MISMATCH };
    let stdout = match fmt {
        Format::Json if id == "all" => to_json(&certs),
        Format::Json => to_json(&certs[0]),
        Format::Table => certs.iter().map(table::certificate).collect::<Vec<_>>().join("\n"),
    };
    Outcome { code, stdout, stderr: String::new() }
}

#[derive(Serialize)]
struct SolveReport {
    problem: &'static str,
    bound: String,
    count: usize,
    solutions: Vec<String>,
}

fn run_solve(problem: Problem, a_max: i64, fmt: Format) -> Outcome {
    let report = match problem {
        Problem::Conto => match solve_conto(a_max) {
            Ok(sols) => SolveReport {
                problem: "conto",
                bound: format!("a <= {a_max}"),
                count: sols.len(),
                solutions: sols.iter().map(|s| join_class(s.a, &s.c)).collect(),
            },
            Err(e) => return Outcome::usage(e),
        },
        Problem::Sextic => {
            let (lo, hi) = sextic_a_range();
            let sols = solve_632num();
            SolveReport {
                problem: "632num",
                bound: format!("{lo} <= a <= {hi}"),
                count: sols.len(),
                solutions: sols.iter().map(|s| join_class(s.a, &s.b)).collect(),
            }
        }
    };
    let stdout = match fmt {
        Format::Json => to_json(&report),
        Format::Table => {
            let mut out = format!("{} ({}): {} solutions\n", report.problem, report.bound, report.count);
            for s in &report.solutions {
                out.push_str(&format!("  {s}\n"));
            }
            out
        }
    };
    Outcome::ok(stdout)
}

fn join_class(a: i64, b: &[i64]) -> String {
    let parts: Vec<String> = b.iter().map(i64::to_string).collect();
    format!("({a};{})", parts.join(","))
}

#[derive(Serialize)]
struct ConditionRow {
    name: String,
    detail: String,
    pass: bool,
}

#[derive(Serialize)]
struct CheckReport {
    n: i64,
    d: i64,
    g: i64,
    k: i64,
    all_pass: bool,
    conditions: Vec<ConditionRow>,
}

fn run_check(n: i64, d: i64, g: i64, k: i64, extra: [Option<i64>; 4], fmt: Format) -> Outcome {
    let mut p = match VarietyParams::new(n, d, g, k) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let [kh, k2, c2, chi] = extra;
    p.kh = kh;
    p.k2 = k2;
    p.c2 = c2;
    p.chi = chi;
    let conditions: Vec<ConditionRow> = check_conditions(&p)
        .into_iter()
        .map(|c| ConditionRow { name: c.name, detail: c.detail, pass: c.pass })
        .collect();
    let all_pass = conditions.iter().all(|c| c.pass);
    let report = CheckReport { n, d, g, k, all_pass, conditions };
    let stdout = match fmt {
        Format::Json => to_json(&report),
        Format::Table => {
            let rows: Vec<[String; 3]> = report
                .conditions
                .iter()
                .map(|c| [c.name.clone(), if c.pass { "pass" } else { "FAIL" }.into(), c.detail.clone()])
                .collect();
            format!("(n={n}, d={d}, g={g}, k={k})\n{}", table::grid(&["condition", "result", "detail"], &rows))
        }
    };
    Outcome { code: if all_pass { EXIT_OK } else { EXIT_MISMATCH }, stdout, stderr: String::new() }
}

#[derive(Serialize)]
struct EffReport {
    class: String,
    effective: bool,
    h0: i64,
    reduction: Vec<String>,
}

fn run_picard_eff(src: &str, fmt: Format) -> Outcome {
    let class = match parse_class(src) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let verdict = match decide_effective(&class) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e),
    };
    let report = EffReport {
        class: class.to_string(),
        effective: verdict.effective,
        h0: verdict.h0,
        reduction: verdict.trace.iter().map(ToString::to_string).collect(),
    };
    let stdout = match fmt {
        Format::Json => to_json(&report),
        Format::Table => {
            let mut out = format!("{}  effective = {}  h0 = {}\n", report.class, report.effective, report.h0);
            for e in &report.reduction {
                out.push_str(&format!("  - {e}\n"));
            }
            out
        }
    };
    Outcome::ok(stdout)
}

#[derive(Serialize)]
struct ListEntry {
    id: &'static str,
    description: &'static str,
}

fn run_list(fmt: Format) -> Outcome {
    let entries: Vec<ListEntry> = IDS.iter().map(|&(id, description)| ListEntry { id, description }).collect();
    let stdout = match fmt {
        Format::Json => to_json(&entries),
        Format::Table => {
            let rows: Vec<[String; 2]> =
                entries.iter().map(|e| [e.id.to_string(), e.description.to_string()]).collect();
            table::grid(&["id", "description"], &rows)
        }
    };
    Outcome::ok(stdout)
}
