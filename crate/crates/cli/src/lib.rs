//! Command-line front end: argument handling, rendering and the JSON envelope.
//!
//! [`run`] takes the full argument list (program name first) and returns the exit code and
//! the text for stdout, so the binary is a thin wrapper and tests need no subprocess.

pub mod chart;
pub mod parse;
pub mod verify;

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use equibezout_core::euler::{bezout_report, BundleSum, EulerReport};
use equibezout_core::projmod::{basis, ProjSpace, Rules};
use equibezout_core::variants::{borel_map, compare, z_fixed, z_map};
use equibezout_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "equibezout", version, about = "Euler classes of sums of line bundles over C2-equivariant projective spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the basis of the cohomology of X(p,q) in the gradings m*W1 + ...
    Basis {
        p: u32,
        q: u32,
        #[arg(allow_negative_numbers = true)]
        m: i32,
        #[arg(long)]
        json: bool,
    },
    /// Euler class of a sum of line bundles, computed two ways and cross-checked.
    Euler {
        p: u32,
        q: u32,
        /// For example "2*O(3)+xO(-1)".
        bundles: String,
        #[arg(long, value_enum, default_value_t = Theory::Burnside)]
        coeffs: Theory,
        #[arg(long)]
        json: bool,
    },
    /// Randomized and exhaustive self-checks.
    Verify {
        #[arg(long, env = "EQUIBEZOUT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        pmax: u32,
        #[arg(long, default_value_t = 6)]
        qmax: u32,
        #[arg(long, default_value_t = 5)]
        dmax: i64,
        #[arg(long)]
        json: bool,
    },
    /// ASCII chart of the cohomology of a point over the columns lo..hi.
    Chart {
        #[arg(allow_hyphen_values = true)]
        range: String,
    },
    /// Compare the Euler classes of two bundle sums in each theory.
    Compare {
        p: u32,
        q: u32,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Theory {
    Burnside,
    Zconst,
    Borel,
}

/// The JSON shape shared by every command; fields that do not apply are null.
#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    inputs: Value,
    ranks: Value,
    degrees: Value,
    grading: Value,
    coefficients: Value,
    checks: Value,
    theory: Value,
    result: Value,
}

impl Envelope {
    fn new(command: &'static str, inputs: Value) -> Self {
        Envelope {
            command,
            inputs,
            ranks: Value::Null,
            degrees: Value::Null,
            grading: Value::Null,
            coefficients: Value::Null,
            checks: Value::Null,
            theory: Value::Null,
            result: Value::Null,
        }
    }

    fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Maps library errors to exit codes: bad input is a usage error, the rest are failures.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::EmptySpace | Error::Grading(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn fail(e: Error) -> (i32, String) {
    (error_code(&e), format!("error: {e}\n"))
}

/// Runs the command line `args` and returns the exit code and standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Basis { p, q, m, json } => cmd_basis(p, q, m, json),
        Command::Euler { p, q, bundles, coeffs, json } => cmd_euler(p, q, &bundles, coeffs, json),
        Command::Verify { seed, count, pmax, qmax, dmax, json } => {
            Ok(cmd_verify(verify::VerifyConfig { seed, count, pmax, qmax, dmax }, json))
        }
        Command::Chart { range } => match chart::parse_range(&range) {
            Ok((lo, hi)) => Ok((EXIT_OK, chart::chart(lo, hi))),
            Err(why) => Err(Error::Parse(why)),
        },
        Command::Compare { p, q, left, right, json } => cmd_compare(p, q, &left, &right, json),
    };
    result.unwrap_or_else(fail)
}

fn cmd_basis(p: u32, q: u32, m: i32, json: bool) -> Result<(i32, String), Error> {
    let sp = ProjSpace::new(p, q)?;
    let rows = basis(sp, m);
    if json {
        let mut env = Envelope::new("basis", json!({ "p": p, "q": q, "m": m }));
        env.result = Value::Array(
            rows.iter()
                .enumerate()
                .map(|(i, x)| {
                    json!({ "i": i, "monomial": x.to_string(), "position": to_value(&x.position()),
                            "grading": x.grading().to_string() })
                })
                .collect(),
        );
        return Ok((EXIT_OK, env.render()));
    }
    let mut out = format!("basis of {sp} in m = {m}\n");
    for (i, x) in rows.iter().enumerate() {
        let pos = x.position();
        let _ = writeln!(out, "P{i} = {x}    (A, B) = ({}, {})    grading {}", pos.a, pos.b, x.grading());
    }
    Ok((EXIT_OK, out))
}

fn bundle_sum(p: u32, q: u32, text: &str) -> Result<BundleSum, Error> {
    BundleSum::parse(ProjSpace::new(p, q)?, text)
}

fn cmd_euler(p: u32, q: u32, text: &str, theory: Theory, json: bool) -> Result<(i32, String), Error> {
    let f = bundle_sum(p, q, text)?;
    let report = bezout_report(&f, None)?;
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
    let (class, coefficients) = theory_class(&report, theory);
    if json {
        let mut env = Envelope::new("euler", json!({ "p": p, "q": q, "bundles": f.to_string(), "coeffs": theory }));
        env.ranks = to_value(&report.ranks);
        env.degrees = to_value(&report.degrees);
        env.grading = json!(report.grading);
        env.coefficients = coefficients;
        env.checks = to_value(&report.checks);
        env.theory = to_value(&theory);
        env.result = json!({
            "class": class,
            "case": report.case,
            "product": report.product,
            "closed": report.closed,
            "p_form": report.p_form,
            "in_tilde_t": report.in_tilde_t,
        });
        return Ok((code, env.render()));
    }
    Ok((code, render_euler(&f, &report, theory, &class)))
}

/// The class in the chosen theory, as text and as a coefficient list.
fn theory_class(report: &EulerReport, theory: Theory) -> (String, Value) {
    let x = &report.class;
    match theory {
        Theory::Burnside => (report.p_form.clone(), to_value(&report.coefficients)),
        Theory::Zconst => {
            let z = z_map(x);
            let coeffs = z
                .coeff_vector()
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| json!({ "i": i, "scalar": c.to_string() }))
                .collect();
            (z.to_string(), Value::Array(coeffs))
        }
        Theory::Borel => {
            let b = borel_map(x, report.ranks.n1);
            let coeffs = b
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| json!({ "i": i, "scalar": c.to_string() }))
                .collect();
            (b.to_string(), Value::Array(coeffs))
        }
    }
}

fn render_euler(f: &BundleSum, r: &EulerReport, theory: Theory, class: &str) -> String {
    let mut out = String::new();
    let (n, d) = (r.ranks, r.degrees);
    let _ = writeln!(out, "F = {f} on {}", f.space());
    let _ = writeln!(out, "ranks: n = {}, n0 = {}, n1 = {}", n.n, n.n0, n.n1);
    let _ = writeln!(out, "degrees: D = {}, D0 = {}, D1 = {}", d.delta, d.delta0, d.delta1);
    let _ = writeln!(out, "grading: {}", r.grading);
    let _ = writeln!(out, "product: {}", r.product);
    let _ = writeln!(out, "closed form (case {}): {}", r.case, r.closed);
    let _ = writeln!(out, "coefficients:");
    if r.coefficients.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for c in &r.coefficients {
        let _ = writeln!(out, "  P{}: {}", c.i, c.scalar);
    }
    match theory {
        Theory::Burnside => {
            let _ = writeln!(out, "e(F) = {class}");
        }
        Theory::Zconst => {
            let _ = writeln!(out, "constant Z coefficients: e(F) = {class}");
            let _ = writeln!(out, "fixed points mod 2: {}", z_fixed(&z_map(&r.class)));
        }
        Theory::Borel => {
            let _ = writeln!(out, "Borel: e(F) = {class}");
        }
    }
    let _ = writeln!(out, "checks:");
    for c in &r.checks {
        let mark = if c.pass { "pass" } else { "FAIL" };
        let _ = write!(out, "  {mark}  {}", c.name);
        if !c.pass {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
    out
}

fn cmd_verify(config: verify::VerifyConfig, json: bool) -> (i32, String) {
    let outcome = verify::verify(&config, Rules::standard());
    let code = if outcome.ok() { EXIT_OK } else { EXIT_FAILURE };
    if json {
        let mut env = Envelope::new("verify", to_value(&config));
        let mut suites = vec![to_value(&outcome.instances)];
        suites.extend(outcome.suites.iter().map(to_value));
        env.checks = Value::Array(suites);
        env.result = json!({ "ok": outcome.ok(), "counterexample": to_value(&outcome.counterexample) });
        return (code, env.render());
    }
    let mut out = format!("seed {}\n", config.seed);
    let i = &outcome.instances;
    let _ = writeln!(out, "{}/{} {}", i.passed, i.total, if i.ok() { "ok" } else { "FAILED" });
    for s in &outcome.suites {
        let _ = writeln!(out, "{}: {}/{} {}", s.name, s.passed, s.total, if s.ok() { "ok" } else { "FAILED" });
        for why in &s.failures {
            let _ = writeln!(out, "  {why}");
        }
    }
    if let Some(c) = &outcome.counterexample {
        let _ = writeln!(out, "counterexample: {} on X({},{}) fails {}", c.bundles, c.p, c.q, c.failed.join(", "));
    }
    (code, out)
}

fn cmd_compare(p: u32, q: u32, left: &str, right: &str, json: bool) -> Result<(i32, String), Error> {
    let (f, g) = (bundle_sum(p, q, left)?, bundle_sum(p, q, right)?);
    let c = compare(&f, &g)?;
    if json {
        let mut env = Envelope::new("compare", json!({ "p": p, "q": q, "left": c.left, "right": c.right }));
        env.degrees = json!([to_value(&c.degrees_left), to_value(&c.degrees_right)]);
        env.ranks = json!([to_value(&f.ranks()), to_value(&g.ranks())]);
        env.theory = json!(c.verdicts.iter().map(|v| v.theory).collect::<Vec<_>>());
        env.result = to_value(&c);
        return Ok((EXIT_OK, env.render()));
    }
    let mut out = format!("A = {} and B = {} on {}\n", c.left, c.right, f.space());
    let (a, b) = (c.degrees_left, c.degrees_right);
    let _ = writeln!(out, "degrees: A ({}, {}, {}), B ({}, {}, {})", a.delta, a.delta0, a.delta1, b.delta, b.delta0, b.delta1);
    for v in &c.verdicts {
        let verdict = if v.equal { "equal" } else { "differ" };
        let _ = writeln!(out, "{}: {verdict}", v.theory);
        let _ = writeln!(out, "  A: {}", v.left);
        let _ = writeln!(out, "  B: {}", v.right);
    }
    let _ = writeln!(out, "borel fixed points: {}", c.borel_fixed_points);
    Ok((EXIT_OK, out))
}
