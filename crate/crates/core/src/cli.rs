//! Command-line front end: `table`, `eval`, `numbers` and `verify`, each
//! rendering JSON (default), CSV or LaTeX.
//!
//! Exit codes: 0 on success, 1 on a pole or a failed check, 2 on a usage
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{parse_rational, to_decimal, IntPolynomial, PolyPseudoLog, Rational};
use crate::construct::canonical;
use crate::error::Error;
use crate::eval::eval_exact;
use crate::numbers::{bernoulli, eulerian_row, stirling2_row, tangent_row};
use crate::verify::{CheckId, CheckReport, VerifyConfig};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NumberKind {
    Stirling2,
    Eulerian,
    Tangent,
    Bernoulli,
}

#[derive(Debug, Parser)]
#[command(name = "polypseudolog", version, about = "Exact tables, evaluations and identity checks for Li_{-n}(z)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerators and denominator exponents of Li_{-n}(z) for n = 0..=RANGE.
    Table {
        #[arg(long, default_value_t = 8)]
        range: usize,
    },
    /// Exact value of Li_{-n}(z) at a rational point "p/q".
    Eval {
        n: usize,
        #[arg(allow_hyphen_values = true, value_parser = parse_rational_arg)]
        z: Rational,
        /// Also print a decimal rounded to DIGITS fractional digits.
        #[arg(long, value_name = "DIGITS")]
        approx: Option<usize>,
    },
    /// Stirling, Eulerian or tangent triangle rows 0..=RANGE, or B_0..B_RANGE.
    Numbers {
        #[arg(value_enum)]
        kind: NumberKind,
        #[arg(long, default_value_t = 9)]
        range: usize,
    },
    /// Run the identity battery; exits 1 if any check fails.
    Verify {
        /// Upper order for every check (defaults vary per check).
        #[arg(long)]
        range: Option<usize>,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check_arg)]
        checks: Vec<CheckId>,
        /// Randomized mode: reseed random inputs and add random sample points.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_check_arg(s: &str) -> Result<CheckId, String> {
    s.parse()
}

/// Text produced by a command and the exit code it calls for.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match execute(&cli.command, cli.format) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &outcome.text),
        None => io::stdout().lock().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.code)
}

/// Runs a parsed command. Mathematical errors (a pole) come back as `Err`.
pub fn execute(command: &Command, format: OutputFormat) -> Result<Outcome, Error> {
    match *command {
        Command::Table { range } => Ok(Outcome::ok(render_table(range, format))),
        Command::Eval { n, ref z, approx } => render_eval(n, z, approx, format).map(Outcome::ok),
        Command::Numbers { kind, range } => Ok(Outcome::ok(render_numbers(kind, range, format))),
        Command::Verify { range, ref checks, seed } => {
            let mut config = range.map_or_else(VerifyConfig::default, VerifyConfig::with_range);
            if let Some(seed) = seed {
                config = config.randomized(seed);
            }
            let ids: Vec<CheckId> = if checks.is_empty() { CheckId::ALL.to_vec() } else { checks.clone() };
            let reports = config.run_all(&ids);
            let all_pass = reports.iter().all(CheckReport::passed);
            Ok(Outcome { text: render_reports(&reports, format), code: if all_pass { 0 } else { 1 } })
        }
    }
}

fn json_int(value: &BigInt) -> serde_json::Number {
    value.to_string().parse().expect("integer literals are valid JSON numbers")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    text
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_list(values: &[BigInt]) -> String {
    let joined: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("\"{}\"", joined.join(" "))
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let (num, den) = (r.numer(), r.denom());
    if num < &BigInt::from(0) {
        format!("-\\frac{{{}}}{{{den}}}", -num)
    } else {
        format!("\\frac{{{num}}}{{{den}}}")
    }
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    numerator: Vec<serde_json::Number>,
    den_exp: usize,
}

#[derive(Serialize)]
struct TableDoc {
    rows: Vec<TableRow>,
}

pub fn render_table(n_max: usize, format: OutputFormat) -> String {
    let rows: Vec<PolyPseudoLog> = (0..=n_max).map(canonical).collect();
    match format {
        OutputFormat::Json => to_json(&TableDoc {
            rows: rows
                .iter()
                .map(|f| TableRow {
                    n: f.order(),
                    numerator: f.numerator().coeffs().iter().map(json_int).collect(),
                    den_exp: f.denominator_exponent(),
                })
                .collect(),
        }),
        OutputFormat::Csv => {
            let mut out = String::from("n,numerator,den_exp\n");
            for f in &rows {
                out.push_str(&format!("{},{},{}\n", f.order(), csv_list(f.numerator().coeffs()), f.denominator_exponent()));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            for (i, f) in rows.iter().enumerate() {
                let end = if i + 1 == rows.len() { "." } else { "," };
                out.push_str(&format!("&{}{} \\\\\n", latex_pseudolog(f), end));
            }
            out.push_str("\\end{align*}\n");
            out
        }
    }
}

fn latex_li(n: usize) -> String {
    if n == 0 {
        "\\mathrm{Li}_{0}".to_string()
    } else {
        format!("\\mathrm{{Li}}_{{-{n}}}")
    }
}

fn latex_poly(p: &IntPolynomial) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c == &BigInt::from(0) {
            continue;
        }
        let negative = c < &BigInt::from(0);
        let mag = if negative { -c.clone() } else { c.clone() };
        let unit = mag == BigInt::from(1);
        let term = match (i, unit) {
            (0, _) => mag.to_string(),
            (1, true) => "z".to_string(),
            (1, false) => format!("{mag}z"),
            (_, true) => format!("z^{{{i}}}"),
            (_, false) => format!("{mag}z^{{{i}}}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        out.push_str(&term);
    }
    out
}

/// `z (1+z) (rest)/(1-z)^{m}`, pulling out the `z` factor always and the
/// `1+z` factor when it divides the numerator.
pub fn latex_pseudolog(f: &PolyPseudoLog) -> String {
    let z = IntPolynomial::from_i64(&[0, 1]);
    let one_plus_z = IntPolynomial::from_i64(&[1, 1]);
    let mut rest = f.numerator().div_exact(&z).expect("numerator has a factor z");
    let mut factors = String::from("z");
    if f.order() >= 1 {
        if let Some(q) = rest.div_exact(&one_plus_z) {
            factors.push_str(" (1+z)");
            rest = q;
        }
    }
    if rest != IntPolynomial::one() {
        factors.push_str(&format!(" ({})", latex_poly(&rest)));
    }
    let m = f.denominator_exponent();
    let den = if m == 1 { "(1-z)".to_string() } else { format!("(1-z)^{{{m}}}") };
    format!("{}(z) = {factors}/{den}", latex_li(f.order()))
}

#[derive(Serialize)]
struct EvalDoc {
    n: usize,
    z: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
}

pub fn render_eval(n: usize, z: &Rational, approx: Option<usize>, format: OutputFormat) -> Result<String, Error> {
    let value = eval_exact(n, z)?;
    let approx_text = approx.map(|d| to_decimal(&value, d));
    Ok(match format {
        OutputFormat::Json => to_json(&EvalDoc { n, z: z.to_string(), value: value.to_string(), approx: approx_text }),
        OutputFormat::Csv => {
            let (header, tail) = match &approx_text {
                Some(a) => (",approx", format!(",{a}")),
                None => ("", String::new()),
            };
            format!("n,z,value{header}\n{n},{z},{value}{tail}\n")
        }
        OutputFormat::Latex => {
            let mut line = format!("{}\\left({}\\right) = {}", latex_li(n), latex_rational(z), latex_rational(&value));
            if let Some(a) = approx_text {
                line.push_str(&format!(" \\approx {a}"));
            }
            line.push('\n');
            line
        }
    })
}

#[derive(Serialize)]
struct TriangleDoc {
    kind: &'static str,
    rows: Vec<Vec<serde_json::Number>>,
}

#[derive(Serialize)]
struct BernoulliDoc {
    kind: &'static str,
    values: Vec<String>,
}

fn kind_name(kind: NumberKind) -> &'static str {
    match kind {
        NumberKind::Stirling2 => "stirling2",
        NumberKind::Eulerian => "eulerian",
        NumberKind::Tangent => "tangent",
        NumberKind::Bernoulli => "bernoulli",
    }
}

pub fn render_numbers(kind: NumberKind, n_max: usize, format: OutputFormat) -> String {
    let row_of = match kind {
        NumberKind::Stirling2 => stirling2_row,
        NumberKind::Eulerian => eulerian_row,
        NumberKind::Tangent => tangent_row,
        NumberKind::Bernoulli => return render_bernoulli(n_max, format),
    };
    let rows: Vec<Vec<BigInt>> = (0..=n_max).map(row_of).collect();
    match format {
        OutputFormat::Json => to_json(&TriangleDoc {
            kind: kind_name(kind),
            rows: rows.iter().map(|r| r.iter().map(json_int).collect()).collect(),
        }),
        OutputFormat::Csv => {
            let mut out = String::from("n,row\n");
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", csv_list(row)));
            }
            out
        }
        OutputFormat::Latex => {
            // Tangent rows and columns start at 1, the others at 0.
            let first = usize::from(kind == NumberKind::Tangent);
            let cols: Vec<String> = (first..=n_max).map(|k| k.to_string()).collect();
            let mut out = format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(cols.len()));
            out.push_str(&format!("$n\\backslash k$ & {} \\\\\n\\hline\n", cols.join(" & ")));
            for (n, row) in rows.iter().enumerate().skip(first) {
                let cells: Vec<String> = row[first..].iter().map(ToString::to_string).collect();
                out.push_str(&format!("{n} & {} \\\\\n", cells.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

fn render_bernoulli(n_max: usize, format: OutputFormat) -> String {
    let values: Vec<Rational> = (0..=n_max).map(bernoulli).collect();
    match format {
        OutputFormat::Json => {
            to_json(&BernoulliDoc { kind: "bernoulli", values: values.iter().map(ToString::to_string).collect() })
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (n, b) in values.iter().enumerate() {
                out.push_str(&format!("{n},{b}\n"));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            for (n, b) in values.iter().enumerate() {
                out.push_str(&format!("B_{{{n}}} &= {} \\\\\n", latex_rational(b)));
            }
            out.push_str("\\end{align*}\n");
            out
        }
    }
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    all_pass: bool,
    reports: &'a [CheckReport],
}

pub fn render_reports(reports: &[CheckReport], format: OutputFormat) -> String {
    let all_pass = reports.iter().all(CheckReport::passed);
    match format {
        OutputFormat::Json => to_json(&VerifyDoc { all_pass, reports }),
        OutputFormat::Csv => {
            let mut out = String::from("check_id,n_min,n_max,status,witness_n,witness_z,expected,actual\n");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                let (wn, wz, exp, act) = match &r.first_failure {
                    Some(w) => (w.n.to_string(), w.z.clone().unwrap_or_default(), w.expected.clone(), w.actual.clone()),
                    None => Default::default(),
                };
                let fields = [
                    r.check_id.to_string(),
                    r.order_range.0.to_string(),
                    r.order_range.1.to_string(),
                    status.to_string(),
                    wn,
                    wz,
                    exp,
                    act,
                ];
                let cells: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{l|c|c}\ncheck & orders & status \\\\\n\\hline\n");
            for r in reports {
                let status = if r.passed() { "pass".to_string() } else { format!("fail at $n = {}$", r.first_failure.as_ref().map_or(0, |w| w.n)) };
                out.push_str(&format!(
                    "\\texttt{{{}}} & ${}..{}$ & {status} \\\\\n",
                    r.check_id.name().replace('_', "\\_"),
                    r.order_range.0,
                    r.order_range.1
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
