//! Command-line front end: every library operation behind a subcommand,
//! with text and machine-readable (JSON) output.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::construct::{self, ConstructionRequest};
use crate::crt::{self, Constraint, LineCongruenceSystem};
use crate::error::{Error, Result};
use crate::line::Line;
use crate::pillai::{self, Caps};
use crate::zi::{self, GaussInt};

#[derive(Debug, Parser)]
#[command(name = "gaussline", version, about = "Coprimality windows on Gaussian lines")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// worker threads for exhaustive scans (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// max divisibility period scanned exhaustively
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub scan_cap: u64,

    /// max window evaluations in budgeted searches
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,

    /// construction seed (selects among the infinitely many solutions)
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaussian-integer arithmetic
    Zi {
        #[command(subcommand)]
        op: ZiOp,
    },
    /// Line inspection and divisor-set queries
    Line {
        #[command(subcommand)]
        op: LineOp,
    },
    /// Chinese remainder solving, in Z[i] or on a line
    Crt {
        #[command(flatten)]
        line: LineSpecArg,
        /// Z[i] congruences "residue,modulus;residue,modulus;..."
        #[arg(long, conflicts_with_all = ["points", "canon"])]
        pairs: Option<String>,
        /// line constraints "mu@b;mu@b;..."
        #[arg(long)]
        constraints: Option<String>,
    },
    /// Construct lines with prescribed divisors and exclusions
    Construct {
        /// divisor constraints "mu@b;mu@b;..."
        #[arg(long, default_value = "")]
        constraints: String,
        /// rational primes = 3 (mod 4) to exclude, comma separated
        #[arg(long, default_value = "")]
        exclude_inert: String,
        /// non-rational Gaussian primes to exclude, comma separated
        #[arg(long, default_value = "")]
        exclude_split: String,
        /// number of distinct lines to emit
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Window analysis, certification, witness search, bound tables
    Pillai {
        #[command(subcommand)]
        op: PillaiOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZiOp {
    Norm { z: GaussIntArg },
    Nu { z: GaussIntArg },
    Gcd { z: GaussIntArg, w: GaussIntArg },
    Prime { z: GaussIntArg },
    PrimesOver { p: u64 },
}

#[derive(Debug, Clone)]
pub struct GaussIntArg(pub GaussInt);

impl std::str::FromStr for GaussIntArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(GaussIntArg(s.parse()?))
    }
}

#[derive(Debug, Args)]
pub struct LineSpecArg {
    /// line through two points: "z1;z2"
    #[arg(long)]
    pub points: Option<String>,
    /// canonical form "alpha0;delta" (validated)
    #[arg(long, conflicts_with = "points")]
    pub canon: Option<String>,
}

impl LineSpecArg {
    fn to_line(&self) -> Result<Line> {
        match (&self.points, &self.canon) {
            (Some(p), None) => Line::parse_spec(&format!("points: {p}")),
            (None, Some(c)) => Line::parse_spec(&format!("canon: {c}")),
            _ => Err(Error::Parse("exactly one of --points/--canon is required".into())),
        }
    }

    fn echo(&self) -> serde_json::Value {
        json!({ "points": self.points, "canon": self.canon })
    }
}

#[derive(Debug, Subcommand)]
pub enum LineOp {
    /// canonical form, big_delta, primitivity, norm polynomial
    Info {
        #[command(flatten)]
        line: LineSpecArg,
    },
    /// is a Gaussian prime in the divisor set?
    DivisorTest {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        prime: GaussIntArg,
    },
    /// divisibility residue of beta along the line
    Member {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        beta: GaussIntArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum PillaiOp {
    /// partner structure of the window alpha_{k+1..k+n}
    Report {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: u64,
    },
    /// exhaustively certify that no bad window of length n exists
    Certify {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        n: u64,
    },
    /// budgeted search for a bad window of length n
    Find {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        n: u64,
    },
    /// smallest certified bad-window length up to n-max
    G {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        n_max: u64,
    },
    /// best certificate per n in [n-lo, n-hi]
    ExploreG {
        #[command(flatten)]
        line: LineSpecArg,
        #[arg(long)]
        n_lo: u64,
        #[arg(long)]
        n_hi: u64,
    },
    /// B_t bound: single value (--t) or full table statistics (--limit)
    Bound {
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        limit: Option<u64>,
    },
}

/// Everything a run emits: echoed inputs, payload, caps, timing.
#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: serde_json::Value,
    pub result: serde_json::Value,
    pub caps: Caps,
    pub elapsed_ms: u64,
}

pub fn parse_constraints(s: &str) -> Result<Vec<Constraint>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|part| {
            let (mu, b) = part
                .trim()
                .split_once('@')
                .ok_or_else(|| Error::Parse(format!("constraint must be mu@b, got {part:?}")))?;
            Ok(Constraint {
                mu: mu.trim().parse()?,
                b: b.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad index in {part:?}")))?,
            })
        })
        .collect()
}

fn parse_zi_list(s: &str) -> Result<Vec<GaussInt>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse()).collect()
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad integer {p:?}"))))
        .collect()
}

fn parse_pairs(s: &str) -> Result<Vec<(GaussInt, GaussInt)>> {
    s.split(';')
        .map(|part| {
            let (r, m) = part
                .trim()
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("pair must be residue,modulus, got {part:?}")))?;
            Ok((r.trim().parse()?, m.trim().parse()?))
        })
        .collect()
}

fn line_info_json(line: &Line) -> serde_json::Value {
    let p = line.norm_poly();
    json!({
        "alpha0": line.alpha0().to_string(),
        "delta": line.delta().to_string(),
        "big_delta": line.big_delta().to_string(),
        "primitive": line.is_primitive(),
        "norm_poly": { "a2": p.a2.to_string(), "a1": p.a1.to_string(), "a0": p.a0.to_string() },
        "discriminant": p.discriminant().to_string(),
    })
}

/// Execute a parsed command; the payload carries the operation result.
pub fn execute(cli: &Cli) -> Result<Envelope> {
    let caps = Caps { scan_cap: cli.scan_cap, budget: cli.budget };
    let started = Instant::now();
    let (command, inputs, result) = match &cli.command {
        Command::Zi { op } => run_zi(op)?,
        Command::Line { op } => run_line(op, &caps)?,
        Command::Crt { line, pairs, constraints } => run_crt(line, pairs, constraints, &caps)?,
        Command::Construct { constraints, exclude_inert, exclude_split, count } => {
            run_construct(constraints, exclude_inert, exclude_split, *count, cli.seed)?
        }
        Command::Pillai { op } => run_pillai(op, &caps)?,
    };
    Ok(Envelope {
        command,
        inputs,
        result,
        caps,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

type Payload = (String, serde_json::Value, serde_json::Value);

fn run_zi(op: &ZiOp) -> Result<Payload> {
    Ok(match op {
        ZiOp::Norm { z } => (
            "zi norm".into(),
            json!({ "z": z.0.to_string() }),
            json!({ "norm": z.0.norm().to_string() }),
        ),
        ZiOp::Nu { z } => (
            "zi nu".into(),
            json!({ "z": z.0.to_string() }),
            json!({ "nu": z.0.nu()?.to_string() }),
        ),
        ZiOp::Gcd { z, w } => (
            "zi gcd".into(),
            json!({ "z": z.0.to_string(), "w": w.0.to_string() }),
            json!({ "gcd": zi::gcd(&z.0, &w.0)?.to_string() }),
        ),
        ZiOp::Prime { z } => (
            "zi prime".into(),
            json!({ "z": z.0.to_string() }),
            json!({ "prime": zi::is_gaussian_prime(&z.0) }),
        ),
        ZiOp::PrimesOver { p } => (
            "zi primes-over".into(),
            json!({ "p": p }),
            json!({
                "primes": zi::primes_over(*p)?.iter().map(|z| z.to_string()).collect::<Vec<_>>()
            }),
        ),
    })
}

fn run_line(op: &LineOp, caps: &Caps) -> Result<Payload> {
    Ok(match op {
        LineOp::Info { line } => {
            let l = line.to_line()?;
            ("line info".into(), line.echo(), line_info_json(&l))
        }
        LineOp::DivisorTest { line, prime } => {
            let l = line.to_line()?;
            let verdict = l.prime_in_divisor_set(&prime.0)?;
            (
                "line divisor-test".into(),
                json!({ "line": line.echo(), "prime": prime.0.to_string() }),
                json!({ "in_divisor_set": verdict }),
            )
        }
        LineOp::Member { line, beta } => {
            let l = line.to_line()?;
            let idx = l.member_index(&beta.0, caps.scan_cap)?;
            (
                "line member".into(),
                json!({ "line": line.echo(), "beta": beta.0.to_string() }),
                json!({ "index": idx, "nu": beta.0.nu()?.to_string() }),
            )
        }
    })
}

fn run_crt(
    line: &LineSpecArg,
    pairs: &Option<String>,
    constraints: &Option<String>,
    caps: &Caps,
) -> Result<Payload> {
    if let Some(pairs) = pairs {
        let parsed = parse_pairs(pairs)?;
        let (x, m) = crt::crt_zi(&parsed)?;
        return Ok((
            "crt".into(),
            json!({ "pairs": pairs }),
            json!({ "residue": x.to_string(), "modulus": m.to_string() }),
        ));
    }
    let l = line.to_line()?;
    let cons = constraints
        .as_deref()
        .ok_or_else(|| Error::Parse("crt needs --pairs or a line with --constraints".into()))?;
    let sys = LineCongruenceSystem { constraints: parse_constraints(cons)? };
    let (t, m) = crt::crt_line(&l, &sys, caps.scan_cap)?;
    Ok((
        "crt".into(),
        json!({ "line": line.echo(), "constraints": cons }),
        json!({ "t": t.to_string(), "modulus": m.to_string() }),
    ))
}

fn run_construct(
    constraints: &str,
    exclude_inert: &str,
    exclude_split: &str,
    count: u64,
    seed: u64,
) -> Result<Payload> {
    let req = ConstructionRequest {
        div_constraints: parse_constraints(constraints)?,
        excluded_inert: parse_u64_list(exclude_inert)?,
        excluded_split: parse_zi_list(exclude_split)?,
        seed,
    };
    let traces = construct::construct_stream(&req, count)?;
    let result = json!({
        "lines": traces
            .iter()
            .map(|t| json!({
                "line": t.line.to_string(),
                "trace": serde_json::to_value(t).expect("trace serializes"),
                "text": construct::trace_to_text(t),
            }))
            .collect::<Vec<_>>()
    });
    Ok((
        "construct".into(),
        json!({
            "constraints": constraints,
            "exclude_inert": exclude_inert,
            "exclude_split": exclude_split,
            "count": count,
            "seed": seed,
        }),
        result,
    ))
}

fn run_pillai(op: &PillaiOp, caps: &Caps) -> Result<Payload> {
    Ok(match op {
        PillaiOp::Report { line, k, n } => {
            let l = line.to_line()?;
            let rep = pillai::window_report(&l, &BigInt::from(*k), *n, caps.scan_cap)?;
            (
                "pillai report".into(),
                json!({ "line": line.echo(), "k": k, "n": n }),
                serde_json::to_value(&rep).expect("report serializes"),
            )
        }
        PillaiOp::Certify { line, n } => {
            let l = line.to_line()?;
            let cert = pillai::certify_no_bad_window(&l, *n, caps.scan_cap)?;
            (
                "pillai certify".into(),
                json!({ "line": line.echo(), "n": n }),
                serde_json::to_value(&cert).expect("certificate serializes"),
            )
        }
        PillaiOp::Find { line, n } => {
            let l = line.to_line()?;
            let cert = pillai::find_bad_window(&l, *n, caps)?;
            (
                "pillai find".into(),
                json!({ "line": line.echo(), "n": n }),
                serde_json::to_value(&cert).expect("certificate serializes"),
            )
        }
        PillaiOp::G { line, n_max } => {
            let l = line.to_line()?;
            let rep = pillai::g_of_line(&l, *n_max, caps)?;
            (
                "pillai g".into(),
                json!({ "line": line.echo(), "n_max": n_max }),
                serde_json::to_value(&rep).expect("report serializes"),
            )
        }
        PillaiOp::ExploreG { line, n_lo, n_hi } => {
            let l = line.to_line()?;
            let certs = pillai::explore_g(&l, *n_lo, *n_hi, caps)?;
            (
                "pillai explore-g".into(),
                json!({ "line": line.echo(), "n_lo": n_lo, "n_hi": n_hi }),
                serde_json::to_value(&certs).expect("certificates serialize"),
            )
        }
        PillaiOp::Bound { t, limit } => match (t, limit) {
            (Some(t), None) => (
                "pillai bound".into(),
                json!({ "t": t }),
                json!({ "b": pillai::bound_b(*t) }),
            ),
            (None, Some(limit)) => {
                let table = pillai::bound_table(*limit);
                (
                    "pillai bound".into(),
                    json!({ "limit": limit }),
                    json!({
                        "limit": table.limit,
                        "threshold": table.threshold,
                        "b_at_limit": table.value(*limit),
                    }),
                )
            }
            _ => return Err(Error::Parse("pillai bound needs exactly one of --t/--limit".into())),
        },
    })
}

/// Render the envelope per the selected format.
pub fn render(envelope: &Envelope, format: Format) -> String {
    match format {
        Format::Machine => {
            serde_json::to_string_pretty(envelope).expect("envelope serializes")
        }
        Format::Text => {
            let mut out = format!("command: {}\n", envelope.command);
            render_value(&mut out, "result", &envelope.result, 0);
            out.push_str(&format!("elapsed_ms: {}\n", envelope.elapsed_ms));
            out
        }
    }
}

fn render_value(out: &mut String, key: &str, v: &serde_json::Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        serde_json::Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, val) in map {
                render_value(out, k, val, depth + 1);
            }
        }
        serde_json::Value::Array(items) => {
            out.push_str(&format!("{pad}{key}: [{} items]\n", items.len()));
            for (i, val) in items.iter().enumerate() {
                render_value(out, &i.to_string(), val, depth + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {other}\n")),
    }
}

/// Full CLI entry point: parse, run, print; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, everything else is usage
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        // ignore failure: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match execute(&cli) {
        Ok(envelope) => {
            use std::io::Write;
            // ignore write failure so a closed pipe (e.g. `| head`) exits cleanly
            let _ = writeln!(std::io::stdout(), "{}", render(&envelope, cli.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
