//! Command-line front end for the `polystab` library.
//!
//! [`run`] parses arguments, dispatches one command and returns the text to
//! print together with the process exit code: 0 when the analysis ran
//! (whatever its verdict), 1 for library errors such as violated hypotheses,
//! 2 for parse, usage and I/O errors.

pub mod parse;
pub mod report;

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_traits::{Signed, Zero};
use polystab::sturm::cauchy_index_nudged;
use polystab::{
    alternate_sign_violation, cauchy_index, check_parity_sign_rule, complex_spectrum_check,
    count_real_roots, degenerate_form, descartes_bound, extend_certificate, half_plane_counts,
    hb_polynomials, interlacing_certificate, is_hurwitz_stable, isolate_real_roots, newton_like,
    numeric_half_plane_counts_from, numeric_roots, parity_sign_pattern, real_spectrum_check,
    Bound, Error, FailedCondition, GaussianRational, Parity, RationalPolynomial,
    RealizationResult, SpectrumCandidate,
};
use serde_json::{json, Map, Value};

use crate::parse::{parse_bound, parse_coefficients, parse_polynomial, parse_spectrum, ParseError};
use crate::report::SCHEMA_VERSION;

#[derive(Debug, Parser)]
#[command(name = "polystab", version, about = "Exact half-plane root analysis of rational polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every analysis that applies to the polynomial
    Analyze(PolyArgs),
    /// Hurwitz stability with the even/odd interlacing witnesses
    Stability(PolyArgs),
    /// Roots with positive, negative and zero real part
    Counts(PolyArgs),
    /// Interlacing certificate for the real and imaginary parts on the imaginary axis
    Interlace(PolyArgs),
    /// Coefficient sign rules
    Signs(PolyArgs),
    /// Newton-like coefficient inequalities and their equality cases
    Newton(PolyArgs),
    /// Realizability of a spectrum by a nonnegative matrix
    Niep(NiepArgs),
    /// Isolating intervals for the real roots
    Isolate(PolyArgs),
    /// Cauchy index of num/den over an interval
    Cauchy(CauchyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["poly", "coeffs", "file"])))]
pub struct PolyArgs {
    /// Polynomial such as "x^5 - x^4 + 3x^3 - 4x + 1"
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Comma-separated coefficients, highest power first
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// File with one polynomial per line; blank lines and `#` comments are skipped
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub json: bool,
    /// Cross-check half-plane counts against the numeric root finder
    #[arg(long)]
    pub verify: bool,
    /// Starting precision in bits for --verify
    #[arg(long, default_value_t = 128)]
    pub precision: u32,
}

#[derive(Debug, Args)]
pub struct NiepArgs {
    /// Comma-separated list such as "2, -1+1i, -1-1i"; the first entry is rho
    #[arg(long, allow_hyphen_values = true)]
    pub spectrum: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CauchyArgs {
    /// Numerator polynomial
    #[arg(long, allow_hyphen_values = true)]
    pub num: String,
    /// Denominator polynomial
    #[arg(long, allow_hyphen_values = true)]
    pub den: String,
    #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
    pub from: String,
    #[arg(long, default_value = "+inf", allow_hyphen_values = true)]
    pub to: String,
    /// Move an endpoint that is a pole inward instead of failing
    #[arg(long)]
    pub nudge: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(String, ParseError),
    Io(String),
    Library(Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Library(_) => 1,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Parse(input, e) => json!({
                "code": "E_PARSE",
                "message": e.to_string(),
                "input": input,
                "offset": e.offset,
                "expected": e.expected,
            }),
            Failure::Io(msg) => json!({ "code": "E_IO", "message": msg }),
            Failure::Library(e) => json!({ "code": e.code(), "message": e.to_string() }),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Failure::Parse(input, e) => format!("error[E_PARSE]: {e}\n  input: {input}"),
            Failure::Io(msg) => format!("error[E_IO]: {msg}"),
            Failure::Library(e) => format!("error[{}]: {e}", e.code()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn parsed<T>(input: &str, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Parse(input.to_string(), e))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze(_) => "analyze",
        Command::Stability(_) => "stability",
        Command::Counts(_) => "counts",
        Command::Interlace(_) => "interlace",
        Command::Signs(_) => "signs",
        Command::Newton(_) => "newton",
        Command::Niep(_) => "niep",
        Command::Isolate(_) => "isolate",
        Command::Cauchy(_) => "cauchy",
    }
}

pub fn execute(command: &Command) -> Outcome {
    let name = command_name(command);
    let (output, results) = match command {
        Command::Niep(a) => (&a.output, vec![niep(a)]),
        Command::Cauchy(a) => (&a.output, vec![cauchy(a)]),
        Command::Analyze(a)
        | Command::Stability(a)
        | Command::Counts(a)
        | Command::Interlace(a)
        | Command::Signs(a)
        | Command::Newton(a)
        | Command::Isolate(a) => (&a.output, polynomial_command(name, a)),
    };
    let code = results
        .iter()
        .map(|r| r.as_ref().map_or_else(Failure::exit_code, |_| 0))
        .max()
        .unwrap_or(0);
    let reports: Vec<Value> = results
        .iter()
        .map(|r| {
            let mut top = Map::new();
            top.insert("schema_version".into(), json!(SCHEMA_VERSION));
            top.insert("command".into(), json!(name));
            match r {
                Ok(body) => {
                    for (k, v) in body {
                        top.insert(k.clone(), v.clone());
                    }
                }
                Err(f) => {
                    top.insert("error".into(), f.to_json());
                }
            }
            Value::Object(top)
        })
        .collect();
    if output.json {
        let value = if reports.len() == 1 {
            reports.into_iter().next().expect("one report")
        } else {
            Value::Array(reports)
        };
        let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
        return Outcome { code, stdout: text, stderr: String::new() };
    }
    let mut stdout = String::new();
    let mut stderr = String::new();
    for r in &results {
        match r {
            Ok(body) => {
                if let Some(h) = headline(name, body) {
                    stdout.push_str(&h);
                    stdout.push('\n');
                }
                stdout.push_str(&report::render_text(&Value::Object(body.clone())));
            }
            Err(f) => {
                stderr.push_str(&f.to_text());
                stderr.push('\n');
            }
        }
    }
    Outcome { code, stdout, stderr }
}

fn headline(name: &str, body: &Map<String, Value>) -> Option<String> {
    match name {
        "stability" => body["stability"]["verdict"].as_str().map(str::to_string),
        "niep" => body["realization"]["realizable"]
            .as_bool()
            .map(|r| if r { "REALIZABLE" } else { "NOT REALIZABLE" }.to_string()),
        _ => None,
    }
}

type Body = Map<String, Value>;

fn read_inputs(a: &PolyArgs) -> Result<Vec<String>, Failure> {
    if let Some(p) = &a.poly {
        return Ok(vec![p.clone()]);
    }
    if let Some(c) = &a.coeffs {
        return Ok(vec![c.clone()]);
    }
    let path = a.file.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let lines: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    if lines.is_empty() {
        return Err(Failure::Io(format!("{}: no polynomials", path.display())));
    }
    Ok(lines)
}

fn polynomial_command(name: &str, a: &PolyArgs) -> Vec<Result<Body, Failure>> {
    let inputs = match read_inputs(a) {
        Ok(i) => i,
        Err(f) => return vec![Err(f)],
    };
    inputs
        .iter()
        .map(|text| {
            let f = if a.coeffs.is_some() {
                parsed(text, parse_coefficients(text))?
            } else {
                parsed(text, parse_polynomial(text))?
            };
            analyze_polynomial(name, &f, &a.output)
        })
        .collect()
}

fn input_block(f: &RationalPolynomial) -> Value {
    json!({
        "polynomial": report::polynomial(f),
        "degree": f.degree(),
        "coefficients": report::coefficients(f),
    })
}

/// Runs the analyses for `name` on `f`. Failures of the main analysis are
/// returned as errors; in `analyze` each block records its own error instead.
fn analyze_polynomial(name: &str, f: &RationalPolynomial, out: &OutputArgs) -> Result<Body, Failure> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    if f.is_constant() {
        return Err(Error::DegreeZero.into());
    }
    let mut body = Body::new();
    body.insert("input".into(), input_block(f));
    let monic = f.monic();
    if &monic != f {
        body.insert("normalized".into(), report::polynomial(&monic));
    }
    let everything = name == "analyze";
    let block = |r: Result<Value, Error>| -> Result<Value, Failure> {
        match r {
            Ok(v) => Ok(v),
            Err(e) if everything => Ok(report::error(&e)),
            Err(e) => Err(e.into()),
        }
    };
    if everything || name == "counts" {
        body.insert("counts".into(), block(half_plane_counts(&monic).map(|c| report::counts(&c)))?);
    }
    if everything || name == "stability" {
        body.insert("stability".into(), block(is_hurwitz_stable(&monic).map(|s| report::stability(&s)))?);
    }
    if everything || name == "interlace" {
        body.insert("interlacing".into(), block(interlace_block(&monic))?);
    }
    if everything || name == "isolate" {
        body.insert("real_roots".into(), block(isolate_real_roots(&monic).map(|r| report::roots(&r)))?);
    }
    if everything || name == "signs" {
        body.insert("signs".into(), block(signs_block(f))?);
    }
    if everything || name == "newton" {
        body.insert("newton".into(), block(newton_block(f))?);
    }
    if out.verify {
        body.insert("verify".into(), block(verify_block(&monic, out.precision))?);
    }
    Ok(body)
}

fn interlace_block(f: &RationalPolynomial) -> Result<Value, Error> {
    let (p, q) = hb_polynomials(f)?;
    let mut out = Map::new();
    out.insert("p".into(), report::polynomial(&p));
    out.insert("q".into(), report::polynomial(&q));
    let counts = half_plane_counts(f)?;
    out.insert("counts".into(), report::counts(&counts));
    let cert = interlacing_certificate(f)?;
    out.insert("certificate".into(), report::certificate(&cert, cert.verify(&p, &q)));
    let extension = match extend_certificate(f, &cert) {
        Ok(ext) => report::certificate(&ext, ext.verify(&p, &q)),
        Err(Error::NotApplicable(reason)) => json!({ "applicable": false, "reason": reason }),
        Err(e) => return Err(e),
    };
    out.insert("extension".into(), extension);
    Ok(Value::Object(out))
}

fn signs_block(f: &RationalPolynomial) -> Result<Value, Error> {
    f.require_monic()?;
    let counts = half_plane_counts(f)?;
    let positive = count_real_roots(f, &Bound::Finite(Default::default()), &Bound::PosInf)?;
    let degenerate = match f.degree() {
        0 | 1 => None,
        _ => {
            // f = (x - r) g only makes sense when r is a rational root
            isolate_real_roots(f)?
                .iter()
                .filter_map(|r| r.as_exact().filter(|v| v.is_positive()).cloned())
                .next()
                .and_then(|r| f.exact_div(&RationalPolynomial::linear_factor(&r)))
                .and_then(|g| degenerate_form(&g))
        }
    };
    Ok(json!({
        "one_positive_root_hypothesis": counts.n_plus == 1 && positive == 1,
        "descartes": report::descartes(&descartes_bound(f)?),
        "even_pattern": report::pattern(&parity_sign_pattern(f, Parity::Even)?),
        "odd_pattern": report::pattern(&parity_sign_pattern(f, Parity::Odd)?),
        "parity_rule_holds": check_parity_sign_rule(f)?,
        "alternate_rule_violation": alternate_sign_violation(f)?,
        "cofactor_degenerate_form": degenerate.map_or(Value::Null, |(mu, h)| json!({
            "mu": report::rational(&mu),
            "h": report::polynomial(&h),
        })),
    }))
}

fn newton_block(f: &RationalPolynomial) -> Result<Value, Error> {
    let classes = newton_like(f)?;
    let mut v = report::newton(&classes);
    if let Value::Object(m) = &mut v {
        m.insert(
            "degenerate_form".into(),
            degenerate_form(f).map_or(Value::Null, |(mu, h)| {
                json!({ "mu": report::rational(&mu), "h": report::polynomial(&h) })
            }),
        );
    }
    Ok(v)
}

fn verify_block(f: &RationalPolynomial, precision: u32) -> Result<Value, Error> {
    let exact = half_plane_counts(f)?;
    let numeric = numeric_half_plane_counts_from(f, precision)?;
    let roots = numeric_roots(f, precision)
        .map(|rs| Value::Array(rs.iter().map(report::numeric_root).collect()))
        .unwrap_or_else(|e| report::error(&e));
    Ok(json!({
        "precision_bits": precision,
        "numeric_counts": report::counts(&numeric),
        "agrees": numeric == exact,
        "numeric_roots": roots,
    }))
}

fn niep(a: &NiepArgs) -> Result<Body, Failure> {
    let entries = parsed(&a.spectrum, parse_spectrum(&a.spectrum))?;
    let sigma = SpectrumCandidate::new(entries);
    let mut body = Body::new();
    body.insert(
        "input".into(),
        json!({ "spectrum": sigma.entries().iter().map(report::gaussian).collect::<Vec<_>>() }),
    );
    let self_conjugate = sigma.is_self_conjugate();
    body.insert(
        "power_sums".into(),
        json!({
            "s1": report::gaussian(&sigma.power_sum(1)),
            "s2": report::gaussian(&sigma.power_sum(2)),
        }),
    );
    body.insert("self_conjugate".into(), json!(self_conjugate));
    let result = match complex_spectrum_check(&sigma) {
        Ok(r) => r,
        Err(Error::NotSelfConjugate) => RealizationResult {
            realizable: false,
            failed_condition: Some(FailedCondition::SelfConjugate),
            matrix: None,
            alpha: None,
        },
        Err(e) => return Err(e.into()),
    };
    body.insert("realization".into(), report::realization(&result));
    if let Some(m) = &result.matrix {
        let chi = polystab::characteristic_polynomial(m);
        body.insert("characteristic_polynomial".into(), report::polynomial(&chi));
        if a.output.verify {
            let expected = sigma.char_poly()?;
            body.insert("verify".into(), json!({ "charpoly_matches": chi == expected }));
        }
    }
    if let Some(reals) = real_nonpositive_tail(sigma.entries()) {
        let (rho, rest) = reals.split_first().expect("nonempty");
        let r = real_spectrum_check(rho, rest)?;
        body.insert("real_spectrum".into(), report::realization(&r));
    }
    Ok(body)
}

/// The entries as reals when every entry is real and all but the first are nonpositive.
fn real_nonpositive_tail(entries: &[GaussianRational]) -> Option<Vec<polystab::Rational>> {
    if entries.is_empty() || entries.iter().any(|z| !z.im.is_zero()) {
        return None;
    }
    if entries[0].re.is_negative() || entries[1..].iter().any(|z| z.re.is_positive()) {
        return None;
    }
    Some(entries.iter().map(|z| z.re.clone()).collect())
}

fn cauchy(a: &CauchyArgs) -> Result<Body, Failure> {
    let q = parsed(&a.num, parse_polynomial(&a.num))?;
    let p = parsed(&a.den, parse_polynomial(&a.den))?;
    let theta = parsed(&a.from, parse_bound(&a.from))?;
    let phi = parsed(&a.to, parse_bound(&a.to))?;
    let (index, used_theta, used_phi) = if a.nudge {
        cauchy_index_nudged(&q, &p, &theta, &phi)?
    } else {
        (cauchy_index(&q, &p, &theta, &phi)?, theta.clone(), phi.clone())
    };
    let mut body = Body::new();
    body.insert(
        "input".into(),
        json!({
            "numerator": report::polynomial(&q),
            "denominator": report::polynomial(&p),
            "interval": [report::bound(&theta), report::bound(&phi)],
        }),
    );
    body.insert("index".into(), json!(index));
    if a.nudge {
        body.insert("interval_used".into(), json!([report::bound(&used_theta), report::bound(&used_phi)]));
    }
    Ok(body)
}
