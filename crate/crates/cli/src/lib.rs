//! Scenario loading, execution and report rendering behind the `simlab`
//! binary.

pub mod execute;
pub mod render;
pub mod scenario;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use simlab::constructions::{narrowness, tri_f, tri_g, tri_pi, tri_pi_inverse};
use simlab::machines::{compile_rec_to_cm, run_cm, run_tm, CmProgram, TmProgram};
use simlab::recdsl::parse_term;
use simlab::{Domain, Encoding, Outcome, Value};

pub use execute::{execute, ExecuteError, RunOutput, STRICT_SUBSET};
pub use render::{render_output, render_report, Format};
pub use scenario::{load_scenario, parse_scenario, Check, InputSpec, PlanSpec, RawSample, Scenario, ScenarioError};

/// Exit code for usage and validation errors.
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "simlab", version, about = "Check simulation claims between models of computation")]
pub struct Cli {
    /// Per-evaluation fuel (overrides the scenario plan)
    #[arg(long, global = true)]
    pub fuel: Option<u64>,
    /// Input indices as a..b or a..=b (overrides the scenario plan)
    #[arg(long, global = true)]
    pub inputs: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled plans
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Test a random subset of this many inputs
    #[arg(long, global = true)]
    pub sample: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a scenario file
    Run { scenario: PathBuf },
    /// Evaluate the triangular-array maps
    Tri {
        #[arg(long, value_enum)]
        op: TriOp,
        #[arg(long, default_value_t = 1)]
        i: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
        /// Argument; defaults to every index in --inputs
        #[arg(long)]
        n: Option<u64>,
        /// Prefix length for --op cycles
        #[arg(long, default_value_t = 100)]
        prefix: u64,
    },
    /// Apply an encoding (or its partial inverse with --decode)
    Encode {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        r: u64,
        /// Value to encode; defaults to every canonical element in --inputs
        #[arg(long)]
        value: Option<String>,
        #[arg(long)]
        decode: bool,
    },
    /// Compile a term
    Compile {
        #[arg(long)]
        term: String,
        #[arg(long, value_enum, default_value_t = Target::Cm)]
        target: Target,
    },
    /// Run a machine program (.tm or .cm) on one input
    Exec {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long)]
        input: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TriOp {
    F,
    G,
    Pi,
    PiInverse,
    Cycles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Stripe,
    Bits,
    Godel,
    TriPi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Cm,
}

/// What a command printed and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completed {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Completed {
    fn ok(stdout: String) -> Self {
        Completed { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Completed { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I) -> Completed
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Completed::ok(text)
            } else {
                Completed { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(done) => done,
        Err(msg) => Completed::usage(msg),
    }
}

fn input_indices(cli: &Cli) -> Result<Option<(u64, u64)>, String> {
    match &cli.inputs {
        None => Ok(None),
        Some(text) => match InputSpec::parse_range(text)? {
            InputSpec::Range(lo, hi) => Ok(Some((lo, hi))),
            InputSpec::List(_) => unreachable!("ranges parse to ranges"),
        },
    }
}

/// Applies the global overrides to a loaded scenario.
pub fn apply_overrides(s: &mut Scenario, cli: &Cli) -> Result<(), String> {
    let range = input_indices(cli)?;
    if let Some(plan) = &mut s.plan {
        if let Some(f) = cli.fuel {
            plan.fuel = f;
        }
        if let Some((lo, hi)) = range {
            plan.inputs = InputSpec::Range(lo, hi);
        }
        if let Some(count) = cli.sample {
            plan.sample = Some(RawSample { count, seed: cli.seed.unwrap_or(0) });
        } else if let (Some(seed), Some(sample)) = (cli.seed, &mut plan.sample) {
            sample.seed = seed;
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Completed, String> {
    match &cli.command {
        Command::Run { scenario } => {
            let mut s = load_scenario(scenario).map_err(|e| e.to_string())?;
            apply_overrides(&mut s, cli)?;
            let out = execute(&s).map_err(|e| e.to_string())?;
            Ok(Completed { code: out.exit_code(), stdout: render_output(&out, cli.format), stderr: String::new() })
        }
        Command::Tri { op, i, j, n, prefix } => tri(cli, *op, *i, *j, *n, *prefix),
        Command::Encode { scheme, d, r, value, decode } => encode(cli, *scheme, *d, *r, value.as_deref(), *decode),
        Command::Compile { term, target: Target::Cm } => {
            let t = parse_term(term).map_err(|e| e.to_string())?;
            let p = compile_rec_to_cm(&t).map_err(|e| e.to_string())?;
            Ok(Completed::ok(match cli.format {
                Format::Text => format!("{p}"),
                Format::Structured => json_line(&serde_json::json!({ "term": t.to_string(), "cm": p.to_string() })),
            }))
        }
        Command::Exec { machine, input } => exec(cli, machine, input),
    }
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn indices(cli: &Cli, single: Option<u64>) -> Result<Vec<u64>, String> {
    match (single, input_indices(cli)?) {
        (Some(n), _) => Ok(vec![n]),
        (None, Some((lo, hi))) => Ok((lo..=hi).collect()),
        (None, None) => Err("give --n or --inputs".into()),
    }
}

fn tri(cli: &Cli, op: TriOp, i: u64, j: u64, n: Option<u64>, prefix: u64) -> Result<Completed, String> {
    if op == TriOp::Cycles {
        let report = narrowness(&Encoding::tri_pi(), prefix).map_err(|e| e.to_string())?;
        return Ok(Completed::ok(match cli.format {
            Format::Structured => json_line(&serde_json::to_value(&report).expect("report serializes")),
            Format::Text => {
                let mut s = String::new();
                for c in &report.cycles {
                    let words: Vec<String> = c.iter().map(ToString::to_string).collect();
                    s.push_str(&format!("({})\n", words.join(" ")));
                }
                s
            }
        }));
    }
    if op == TriOp::G && i == 0 {
        return Err("g needs --i ≥ 1".into());
    }
    let (bi, bj) = (BigUint::from(i), BigUint::from(j));
    let mut rows = Vec::new();
    for k in indices(cli, n)? {
        let x = BigUint::from(k);
        let y = match op {
            TriOp::F => tri_f(&bi, &bj, &x),
            TriOp::G => tri_g(&bi, &x),
            TriOp::Pi => tri_pi(&x),
            TriOp::PiInverse => tri_pi_inverse(&x),
            TriOp::Cycles => unreachable!(),
        };
        rows.push((k, y));
    }
    Ok(Completed::ok(match cli.format {
        Format::Text => rows.iter().map(|(k, y)| format!("{k} {y}\n")).collect(),
        Format::Structured => json_line(&serde_json::Value::Array(
            rows.iter().map(|(k, y)| serde_json::json!({ "n": k, "value": y.to_string() })).collect(),
        )),
    }))
}

fn encode(cli: &Cli, scheme: Scheme, d: u64, r: u64, value: Option<&str>, decode: bool) -> Result<Completed, String> {
    let e = match scheme {
        Scheme::Stripe => Encoding::stripe(d, r).map_err(|e| e.to_string())?,
        Scheme::Bits => Encoding::bits(),
        Scheme::Godel => Encoding::godel(),
        Scheme::TriPi => Encoding::tri_pi(),
    };
    let domain = if decode { e.target() } else { e.source() };
    let inputs: Vec<Value> = match value {
        Some(v) => vec![Value::parse(domain, v).map_err(|e| e.to_string())?],
        None => match input_indices(cli)? {
            Some((lo, hi)) => (lo..=hi).map(|k| domain.canonical(&BigUint::from(k))).collect(),
            None => return Err("give --value or --inputs".into()),
        },
    };
    let mut rows = Vec::new();
    for x in &inputs {
        let y = if decode {
            e.decode(x).map_err(|e| e.to_string())?.map_or("⊥".to_string(), |v| v.to_string())
        } else {
            e.encode(x).map_err(|e| e.to_string())?.to_string()
        };
        rows.push((x.to_string(), y));
    }
    Ok(Completed::ok(match cli.format {
        Format::Text => rows.iter().map(|(x, y)| format!("{x} {y}\n")).collect(),
        Format::Structured => json_line(&serde_json::json!({
            "encoding": e.to_string(),
            "direction": if decode { "decode" } else { "encode" },
            "values": rows.iter().map(|(x, y)| serde_json::json!({ "input": x, "output": y })).collect::<Vec<_>>(),
        })),
    }))
}

fn exec(cli: &Cli, machine: &std::path::Path, input: &str) -> Result<Completed, String> {
    let fuel = cli.fuel.unwrap_or(1_000_000);
    if fuel == 0 {
        return Err("fuel must be at least 1".into());
    }
    let text = std::fs::read_to_string(machine).map_err(|e| format!("{}: {e}", machine.display()))?;
    let ext = machine.extension().and_then(|e| e.to_str()).unwrap_or("");
    let outcome: Outcome<Value> = match ext {
        "tm" => {
            let p: TmProgram = text.parse().map_err(|e| format!("{}: {e}", machine.display()))?;
            let Value::Bits(b) = Value::parse(Domain::Bits, input).map_err(|e| e.to_string())? else { unreachable!() };
            run_tm(&p, &b, fuel).map_err(|e| e.to_string())?.map(Value::Bits)
        }
        "cm" => {
            let p: CmProgram = text.parse().map_err(|e| format!("{}: {e}", machine.display()))?;
            let n: BigUint = input.trim().parse().map_err(|e| format!("bad natural `{input}`: {e}"))?;
            run_cm(&p, &n, fuel).map_err(|e| e.to_string())?.map(Value::Nat)
        }
        other => return Err(format!("{}: unknown machine type `.{other}` (use .tm or .cm)", machine.display())),
    };
    // converged 0, certified divergence 1, out of fuel 2
    let code = match outcome {
        Outcome::Converged(_) => 0,
        Outcome::Diverged => 1,
        Outcome::FuelExhausted => 2,
    };
    let stdout = match cli.format {
        Format::Text => format!("{outcome}\n"),
        Format::Structured => json_line(
            &serde_json::json!({ "machine": machine.display().to_string(), "input": input, "fuel": fuel, "outcome": outcome }),
        ),
    };
    Ok(Completed { code, stdout, stderr: String::new() })
}
