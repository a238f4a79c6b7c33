//! Command-line front end for the `natprod` library.
//!
//! [`run_command`] is the whole program minus process plumbing: it takes an
//! argv, returns the exit code and both output streams, and never touches
//! stdout itself, so tests can drive it directly.

use std::fmt;
use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use natprod::json::{matrix_from_json, matrix_to_json, poly_from_json, poly_to_json, super_from_json, super_to_json};
use natprod::structures::{
    analyze_with, ideal_generated, idempotents_in, is_smarandache, AnalyzeOptions, Carrier, Operation, SubgroupWitness,
};
use natprod::text::{parse_matrix, parse_poly, parse_super};
use natprod::verify::{run_suite, Suite, VerifyOptions};
use natprod::{solve_binomial, solve_quadratic, AlgebraError, Domain, MatPoly, Matrix, RootSet, Shape, SuperMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "natprod", version, about = "Exact natural-product matrix algebra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for every sampled check.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Sample count for sampled checks.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Scalar domain for text literals: Z, Q, Zn:<n>, Z+ or Q+.
    #[arg(long, default_value = "Q", value_parser = parse_domain, global = true)]
    domain: Domain,
    /// Integration constant.
    #[arg(long = "const", global = true, allow_hyphen_values = true)]
    constant: Option<String>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Matrix and super matrix operations.
    Eval {
        #[arg(value_enum)]
        op: EvalOp,
        inputs: Vec<String>,
    },
    /// Matrix-coefficient polynomial operations.
    Poly {
        #[arg(value_enum)]
        op: PolyOp,
        /// `monic` takes an optional leading `natural` or `usual`.
        inputs: Vec<String>,
    },
    /// Finite-structure analysis over a carrier such as `masks:2x2`, `zn:3:1x2@add` or `list`.
    Analyze {
        #[arg(value_enum)]
        op: AnalyzeOp,
        carrier: String,
        /// Generator for `ideal` first, then the members of a `list` carrier.
        inputs: Vec<String>,
    },
    /// Main complement (orthogonal support pattern) of a matrix.
    Complement { input: String },
    /// Run a built-in suite: paper-examples, laws or census.
    Verify { suite: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EvalOp {
    Add,
    Nprod,
    Uprod,
    Inv,
    Orth,
    Divides,
    ParseRender,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolyOp {
    Add,
    Nmul,
    Umul,
    Diff,
    Int,
    Degree,
    Monic,
    Solve,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AnalyzeOp {
    Carrier,
    Idempotents,
    Ideal,
    Smarandache,
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Algebra(AlgebraError),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Algebra(e) => write!(f, "error: {e}"),
        }
    }
}

/// Errors that are answers about the mathematics rather than bad input.
fn is_negative_finding(e: &AlgebraError) -> bool {
    matches!(
        e,
        AlgebraError::NotInvertible { .. }
            | AlgebraError::NotClosed { .. }
            | AlgebraError::NotMonicizable { .. }
            | AlgebraError::SingularLead
            | AlgebraError::NoRationalRoot { .. }
            | AlgebraError::ZeroDivisorEntry { .. }
            | AlgebraError::NotAUnit(..)
    )
}

struct Outcome {
    text: String,
    json: Value,
    negative: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Outcome {
        Outcome { text: text.into(), json, negative: false }
    }
}

pub fn run_command<I, S>(argv: I) -> RunReport
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                RunReport { exit_code: code, stdout: rendered, stderr: String::new() }
            } else {
                RunReport { exit_code: code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let mut stdout = match cli.format {
                Format::Text => out.text,
                Format::Json => natprod::json::to_canonical_string(&out.json),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            RunReport { exit_code: if out.negative { EXIT_NEGATIVE } else { EXIT_OK }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = match &e {
                CliError::Algebra(a) if is_negative_finding(a) => EXIT_NEGATIVE,
                _ => EXIT_USAGE,
            };
            let stdout = match (&e, cli.format) {
                (CliError::Algebra(a), Format::Json) if code == EXIT_NEGATIVE => {
                    natprod::json::to_canonical_string(&json!({ "error": a.to_string() })) + "\n"
                }
                _ => String::new(),
            };
            RunReport { exit_code: code, stdout, stderr: format!("{e}\n") }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.verb {
        Verb::Eval { op, inputs } => eval(cli, *op, inputs),
        Verb::Poly { op, inputs } => poly(cli, *op, inputs),
        Verb::Analyze { op, carrier, inputs } => analyze(cli, *op, carrier, inputs),
        Verb::Complement { input } => complement(cli, input),
        Verb::Verify { suite } => verify(cli, suite),
    }
}

enum Source {
    Text(String),
    Json(Value),
}

/// Inline literals start with `[`; anything else is a path.
fn load(input: &str) -> Result<Source, CliError> {
    let t = input.trim_start();
    let content = if t.starts_with('[') {
        input.to_string()
    } else {
        fs::read_to_string(input).map_err(|e| CliError::Usage(format!("cannot read `{input}`: {e}")))?
    };
    if content.trim_start().starts_with('{') {
        let v = serde_json::from_str(&content).map_err(|e| {
            AlgebraError::Parse { line: e.line(), col: e.column(), msg: format!("invalid JSON: {e}") }
        })?;
        Ok(Source::Json(v))
    } else {
        Ok(Source::Text(content))
    }
}

fn load_super(input: &str, domain: Domain) -> Result<SuperMatrix, CliError> {
    Ok(match load(input)? {
        Source::Text(t) => parse_super(&t, domain)?,
        Source::Json(v) => super_from_json(&v)?,
    })
}

fn load_matrix(input: &str, domain: Domain) -> Result<Matrix, CliError> {
    Ok(match load(input)? {
        Source::Text(t) => parse_matrix(&t, domain)?,
        Source::Json(v) => matrix_from_json(&v)?,
    })
}

fn load_poly(input: &str, domain: Domain) -> Result<MatPoly, CliError> {
    Ok(match load(input)? {
        Source::Text(t) => parse_poly(&t, domain)?,
        Source::Json(v) => poly_from_json(&v)?,
    })
}

fn arity<'a>(inputs: &'a [String], n: usize, what: &str) -> Result<&'a [String], CliError> {
    if inputs.len() == n {
        Ok(inputs)
    } else {
        Err(CliError::Usage(format!("{what} takes {n} input(s), got {}", inputs.len())))
    }
}

fn super_out(s: &SuperMatrix) -> Outcome {
    if s.ptype().is_trivial() {
        Outcome::ok(s.base().to_string(), matrix_to_json(s.base()))
    } else {
        Outcome::ok(s.to_string(), super_to_json(s))
    }
}

fn matrix_out(m: &Matrix) -> Outcome {
    Outcome::ok(m.to_string(), matrix_to_json(m))
}

fn poly_out(p: &MatPoly) -> Outcome {
    Outcome::ok(p.to_string(), poly_to_json(p))
}

fn eval(cli: &Cli, op: EvalOp, inputs: &[String]) -> Result<Outcome, CliError> {
    let d = cli.domain;
    match op {
        EvalOp::Add | EvalOp::Nprod => {
            let ins = arity(inputs, 2, "this operation")?;
            let (a, b) = (load_super(&ins[0], d)?, load_super(&ins[1], d)?);
            let r = if matches!(op, EvalOp::Add) { a.add(&b)? } else { a.nproduct(&b)? };
            Ok(super_out(&r))
        }
        EvalOp::Uprod => {
            let ins = arity(inputs, 2, "uprod")?;
            Ok(matrix_out(&load_matrix(&ins[0], d)?.uproduct(&load_matrix(&ins[1], d)?)?))
        }
        EvalOp::Inv => {
            let ins = arity(inputs, 1, "inv")?;
            Ok(super_out(&load_super(&ins[0], d)?.inverse()?))
        }
        EvalOp::Orth => {
            let ins = arity(inputs, 2, "orth")?;
            let (a, b) = (load_super(&ins[0], d)?, load_super(&ins[1], d)?);
            let orth = a.is_orthogonal(&b)?;
            let product = a.nproduct(&b)?;
            let text = if orth { "orthogonal".to_string() } else { format!("not orthogonal: product {}", product.base()) };
            Ok(Outcome { text, json: json!({ "orthogonal": orth, "product": matrix_to_json(product.base()) }), negative: !orth })
        }
        EvalOp::Divides => {
            let ins = arity(inputs, 2, "divides")?;
            let (a, b) = (load_matrix(&ins[0], d)?, load_matrix(&ins[1], d)?);
            Ok(match a.divides(&b)? {
                Some(q) => Outcome::ok(q.to_string(), json!({ "divides": true, "quotient": matrix_to_json(&q) })),
                None => Outcome {
                    text: format!("{a} does not divide {b}"),
                    json: json!({ "divides": false }),
                    negative: true,
                },
            })
        }
        EvalOp::ParseRender => {
            let ins = arity(inputs, 1, "parse-render")?;
            Ok(super_out(&load_super(&ins[0], d)?))
        }
    }
}

fn roots_out(r: &RootSet) -> Outcome {
    let roots: Vec<Value> = r.roots.iter().map(matrix_to_json).collect();
    let mut text: Vec<String> = r.roots.iter().map(|m| format!("x = {m}")).collect();
    if r.independent_signs {
        text.push("componentwise sign changes of these roots are also roots".into());
    }
    match &r.reason {
        Some(e) if r.roots.is_empty() => Outcome {
            text: format!("no root: {e}"),
            json: json!({ "roots": roots, "reason": e.to_string() }),
            negative: true,
        },
        _ => Outcome::ok(text.join("\n"), json!({ "roots": roots, "independent_signs": r.independent_signs })),
    }
}

fn solve(p: &MatPoly) -> Result<Outcome, CliError> {
    let degs: Vec<usize> = p.terms().keys().copied().collect();
    let k = p.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    if k == 0 {
        return Err(CliError::Usage("cannot solve a constant polynomial".into()));
    }
    if degs.iter().all(|&d| d == 0 || d == k) {
        let c = p.coeff(0).neg()?;
        let k = u32::try_from(k).map_err(|_| CliError::Usage("degree too large".into()))?;
        return Ok(roots_out(&solve_binomial(&p.coeff(k as usize), &c, k)?));
    }
    if k == 2 {
        return Ok(roots_out(&solve_quadratic(&p.coeff(2), &p.coeff(1), &p.coeff(0))?));
    }
    Err(CliError::Usage("solve handles `a * x^k + c` and quadratics".into()))
}

fn poly(cli: &Cli, op: PolyOp, inputs: &[String]) -> Result<Outcome, CliError> {
    let d = cli.domain;
    match op {
        PolyOp::Add | PolyOp::Nmul | PolyOp::Umul => {
            let ins = arity(inputs, 2, "this operation")?;
            let (a, b) = (load_poly(&ins[0], d)?, load_poly(&ins[1], d)?);
            let r = match op {
                PolyOp::Add => a.add(&b)?,
                PolyOp::Nmul => a.mul_natural(&b)?,
                _ => a.mul_usual(&b)?,
            };
            Ok(poly_out(&r))
        }
        PolyOp::Diff => Ok(poly_out(&load_poly(&arity(inputs, 1, "diff")?[0], d)?.derivative())),
        PolyOp::Int => {
            let p = load_poly(&arity(inputs, 1, "int")?[0], d)?;
            let c = cli.constant.as_deref().map(|c| load_matrix(c, p.domain())).transpose()?;
            Ok(poly_out(&p.integrate(c.as_ref())?))
        }
        PolyOp::Degree => {
            let p = load_poly(&arity(inputs, 1, "degree")?[0], d)?;
            let text = p.degree().map_or("none".to_string(), |k| k.to_string());
            Ok(Outcome::ok(text, json!({ "degree": p.degree() })))
        }
        PolyOp::Monic => {
            let (mode, rest) = match inputs.first().map(String::as_str) {
                Some("natural") => ("natural", &inputs[1..]),
                Some("usual") => ("usual", &inputs[1..]),
                _ => ("natural", inputs),
            };
            let p = load_poly(&arity(rest, 1, "monic")?[0], d)?;
            let r = if mode == "usual" { p.monicize_usual()? } else { p.monicize_natural()? };
            Ok(poly_out(&r))
        }
        PolyOp::Solve => solve(&load_poly(&arity(inputs, 1, "solve")?[0], d)?),
    }
}

fn parse_shape(s: &str) -> Result<Shape, CliError> {
    let bad = || CliError::Usage(format!("bad shape `{s}` (expected RxC)"));
    let (r, c) = s.split_once('x').ok_or_else(bad)?;
    Ok(Shape::new(r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?)?)
}

/// Carrier token plus the domain its members live in.
fn build_carrier(cli: &Cli, token: &str, members: &[String]) -> Result<(Carrier, Domain), CliError> {
    let (body, op) = match token.rsplit_once('@') {
        Some((b, "nprod")) => (b, Operation::NaturalProduct),
        Some((b, "add")) => (b, Operation::Addition),
        Some((_, other)) => return Err(CliError::Usage(format!("unknown operation `{other}` (expected add or nprod)"))),
        None => (token, Operation::NaturalProduct),
    };
    let parts: Vec<&str> = body.split(':').collect();
    match parts.as_slice() {
        ["masks", s] => Ok((Carrier::masks(parse_shape(s)?, op)?, Domain::Int)),
        ["zn", n, s] => {
            let n: u64 = n.parse().map_err(|_| CliError::Usage(format!("bad modulus `{n}`")))?;
            Ok((Carrier::all_matrices(parse_shape(s)?, n, op)?, Domain::Mod(n)))
        }
        ["list"] => {
            if members.is_empty() {
                return Err(CliError::Usage("a list carrier needs at least one member".into()));
            }
            let els = members.iter().map(|m| load_matrix(m, cli.domain)).collect::<Result<Vec<_>, _>>()?;
            Ok((Carrier::explicit(els, op)?, cli.domain))
        }
        _ => Err(CliError::Usage(format!("unknown carrier `{token}` (expected masks:RxC, zn:N:RxC or list)"))),
    }
}

fn witness_json(w: &SubgroupWitness) -> Value {
    json!({
        "idempotent": matrix_to_json(&w.idempotent),
        "order": w.elements.len(),
        "elements": w.elements.iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

fn list_text(ms: &[Matrix]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("\n")
}

fn analyze(cli: &Cli, op: AnalyzeOp, token: &str, inputs: &[String]) -> Result<Outcome, CliError> {
    let (generator, members) = match op {
        AnalyzeOp::Ideal => match inputs.split_first() {
            Some((g, rest)) => (Some(g.as_str()), rest),
            None => return Err(CliError::Usage("ideal needs a generator".into())),
        },
        _ => (None, inputs),
    };
    let (carrier, domain) = build_carrier(cli, token, members)?;
    if !token.starts_with("list") && !members.is_empty() {
        return Err(CliError::Usage("only list carriers take member inputs".into()));
    }
    match op {
        AnalyzeOp::Carrier => {
            let opts = AnalyzeOptions { seed: cli.seed, samples: cli.samples.unwrap_or(AnalyzeOptions::default().samples) };
            let rep = analyze_with(&carrier, opts)?;
            let negative = !(rep.closed && rep.associative);
            Ok(Outcome { text: rep.to_text(), json: rep.to_json(), negative })
        }
        AnalyzeOp::Idempotents => {
            let ids = idempotents_in(&carrier);
            Ok(Outcome::ok(
                format!("{} idempotents in {}\n{}", ids.len(), carrier.describe(), list_text(&ids)),
                json!({
                    "carrier": carrier.describe(),
                    "count": ids.len(),
                    "idempotents": ids.iter().map(matrix_to_json).collect::<Vec<_>>(),
                }),
            ))
        }
        AnalyzeOp::Ideal => {
            let g = load_matrix(generator.expect("checked"), domain)?;
            let rep = ideal_generated(&carrier, &g)?;
            Ok(Outcome::ok(
                format!("<{}> has {} elements\n{}", g, rep.cardinality(), list_text(&rep.elements)),
                json!({
                    "generator": matrix_to_json(&g),
                    "cardinality": rep.cardinality(),
                    "elements": rep.elements.iter().map(matrix_to_json).collect::<Vec<_>>(),
                }),
            ))
        }
        AnalyzeOp::Smarandache => Ok(match is_smarandache(&carrier)? {
            Some(w) => Outcome::ok(
                format!(
                    "Smarandache: proper subgroup of order {} at idempotent {}\n{}",
                    w.elements.len(),
                    w.idempotent,
                    list_text(&w.elements)
                ),
                json!({ "carrier": carrier.describe(), "smarandache": true, "witness": witness_json(&w) }),
            ),
            None => Outcome {
                text: format!("{} has no proper subgroup of order at least 2", carrier.describe()),
                json: json!({ "carrier": carrier.describe(), "smarandache": false }),
                negative: true,
            },
        }),
    }
}

fn complement(cli: &Cli, input: &str) -> Result<Outcome, CliError> {
    let m = load_matrix(input, cli.domain)?;
    let mask = m.main_complement();
    Ok(Outcome::ok(
        mask.to_string(),
        json!({ "matrix": matrix_to_json(&m), "complement": matrix_to_json(&mask.to_matrix(Domain::Int)), "dim": mask.popcount() }),
    ))
}

fn verify(cli: &Cli, suite: &str) -> Result<Outcome, CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Usage)?;
    let opts = VerifyOptions { seed: cli.seed, samples: cli.samples.unwrap_or(VerifyOptions::default().samples) };
    let rep = run_suite(suite, opts);
    Ok(Outcome { text: rep.to_text(), json: rep.to_json(), negative: !rep.passed() })
}
