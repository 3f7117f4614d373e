//! Command-line front end. Every command prints one JSON document (or a
//! short text rendering) on stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::funcrel::{
    catalog, closed_form_special, fn_rel, load_catalog, verify_fr01, verify_funcrel_grid,
    verify_relation, verify_values, verify_weyl_grid, Report,
};
use crate::numeric::{g2_lattice, zeta_g2_int, G2Exponents, HPReal, SummationConfig};
use crate::roots::{
    functional_sum_terms, parabolic_transversal, reduced_transversal, reduction_terms,
    ExponentTuple, SimpleSubset, WeylElement,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Settings shared by every command. Flags override `ROOTZETA_*`
/// environment variables, which override the defaults.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Working precision in bits
    #[arg(
        long = "precision",
        global = true,
        env = "ROOTZETA_PRECISION",
        default_value_t = 128
    )]
    pub precision_bits: u32,
    /// Target absolute error of each lattice sum
    #[arg(
        long,
        global = true,
        env = "ROOTZETA_TOLERANCE",
        default_value_t = 1e-10
    )]
    pub tolerance: f64,
    /// Largest outer cutoff allowed
    #[arg(long, global = true, env = "ROOTZETA_MAX_OUTER", default_value_t = 1 << 20)]
    pub max_outer: u64,
    #[arg(
        long,
        global = true,
        value_enum,
        env = "ROOTZETA_OUTPUT",
        default_value = "json"
    )]
    pub output: OutputFormat,
    /// Catalog file replacing the bundled one
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Tolerance for numeric comparisons in closed-form and verify
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub check_tol: f64,
}

impl RunConfig {
    pub fn summation(&self) -> Result<SummationConfig> {
        SummationConfig::new(self.precision_bits, self.tolerance, self.max_outer)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rootzeta",
    version,
    about = "Zeta-functions of the G2 root system"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Catalog,
    Fr01,
    FuncrelGrid,
    Weyl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reduction {
    W0s1,
    W0s2,
}

impl Reduction {
    fn element(self) -> WeylElement {
        let i = match self {
            Reduction::W0s1 => 1,
            Reduction::W0s2 => 2,
        };
        WeylElement::longest().compose(&WeylElement::simple(i))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate zeta_2(s; G2), or the symmetrized sum S(s, I) with --ssum
    Eval {
        /// Simple subset I (1 or 2) for the symmetrized sum
        #[arg(long)]
        ssum: Option<usize>,
        /// Real value for one slot, as SLOT=VALUE with SLOT in 1..=6
        #[arg(long)]
        var: Option<String>,
        /// Six integer exponents, or five together with --var
        #[arg(required = true, allow_negative_numbers = true)]
        exps: Vec<i64>,
    },
    /// Closed form of zeta_2(2a, b, b, 2c-1, d, d; G2)
    ClosedForm { a: i64, b: i64, c: i64, d: i64 },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Values of s for the fr01 suite
        #[arg(long, num_args = 1..)]
        s: Vec<i64>,
    },
    /// Weyl group data for a simple subset
    Weyl {
        #[arg(long = "I")]
        subset: usize,
        #[arg(long, value_enum)]
        reduction: Option<Reduction>,
        /// Integer exponent tuple for the signed terms
        #[arg(long, num_args = 6, allow_negative_numbers = true)]
        s: Option<Vec<i64>>,
    },
}

/// Result of one command: the JSON document, its text rendering and
/// whether every check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

fn subset_from(i: usize) -> Result<SimpleSubset> {
    SimpleSubset::new(&[i])
}

fn parse_var(spec: &str) -> Result<(usize, f64)> {
    let (slot, value) = spec
        .split_once('=')
        .ok_or_else(|| Error::InvalidInput(format!("--var expects SLOT=VALUE, got {spec:?}")))?;
    let slot: usize = slot
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad slot in {spec:?}")))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad value in {spec:?}")))?;
    if !(1..=6).contains(&slot) {
        return Err(Error::InvalidInput(format!(
            "slot must lie in 1..=6, got {slot}"
        )));
    }
    Ok((slot - 1, value))
}

fn build_exponents(exps: &[i64], var: Option<&str>) -> Result<G2Exponents> {
    match var {
        None => {
            let arr: [i64; 6] = exps.try_into().map_err(|_| {
                Error::InvalidInput(format!("expected 6 exponents, got {}", exps.len()))
            })?;
            Ok(G2Exponents(arr.map(|e| e as f64)))
        }
        Some(spec) => {
            let (slot, value) = parse_var(spec)?;
            if exps.len() != 5 {
                return Err(Error::InvalidInput(format!(
                    "with --var expected 5 exponents, got {}",
                    exps.len()
                )));
            }
            let mut out = Vec::with_capacity(6);
            out.extend(exps[..slot].iter().map(|&e| e as f64));
            out.push(value);
            out.extend(exps[slot..].iter().map(|&e| e as f64));
            Ok(G2Exponents(out.try_into().expect("six entries")))
        }
    }
}

fn hp_json(x: &HPReal) -> Value {
    json!({ "value": x.to_decimal(30), "error_bound": x.error_bound() })
}

/// Puts `"schema"` first in a JSON object.
fn with_schema(v: Value) -> Value {
    match v {
        Value::Object(body) => {
            let mut map = serde_json::Map::new();
            map.insert("schema".into(), json!(SCHEMA_VERSION));
            map.extend(body);
            Value::Object(map)
        }
        other => other,
    }
}

fn cmd_eval(
    run: &RunConfig,
    ssum: Option<usize>,
    var: Option<&str>,
    exps: &[i64],
) -> Result<Outcome> {
    let cfg = run.summation()?;
    let s = build_exponents(exps, var)?;
    let subset = ssum.map(subset_from).transpose()?;
    let start = Instant::now();
    let result = g2_lattice(subset, &s)?.evaluate(&cfg)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let json = json!({
        "command": "eval",
        "exponents": s.0,
        "ssum": subset.map(|i| i.indices()),
        "value": result.value.to_decimal(30),
        "error_bound": result.value.error_bound(),
        "terms_summed": result.terms_summed,
        "outer_cutoff": result.outer_cutoff,
        "wall_ms": wall_ms,
    });
    let label = match subset {
        Some(i) => format!("S({s}, I = {i})"),
        None => format!("zeta_2({s}; G2)"),
    };
    let text = format!("{label} = {}\n", result.value);
    Ok(Outcome {
        json,
        text,
        pass: true,
    })
}

fn cmd_closed_form(run: &RunConfig, a: i64, b: i64, c: i64, d: i64) -> Result<Outcome> {
    let cfg = run.summation()?;
    let kv = closed_form_special(a, b, c, d)?;
    let numeric = kv.expr.eval_numeric(&cfg)?;
    let lattice = zeta_g2_int(&kv.args, &cfg)?;
    let diff = numeric.distance(&lattice);
    let pass = numeric.agrees_with(&lattice, run.check_tol);
    let shown = kv.expr.display_form();
    let json = json!({
        "command": "closed-form",
        "args": kv.args.0,
        "expr": shown,
        "display": shown.to_string(),
        "normalized": kv.expr,
        "numeric": hp_json(&numeric),
        "lattice": hp_json(&lattice),
        "diff": diff,
        "tol": run.check_tol,
        "pass": pass,
    });
    let text = format!(
        "zeta_2{} = {}\n  closed form  {}\n  lattice sum  {}\n  diff {:.3e} ({})\n",
        kv.args,
        shown,
        numeric,
        lattice,
        diff,
        if pass { "pass" } else { "FAIL" }
    );
    Ok(Outcome { json, text, pass })
}

fn report_text(r: &Report) -> String {
    format!(
        "{} {}  diff {:.3e}  ({:.0} ms)\n",
        if r.pass { "pass" } else { "FAIL" },
        r.target,
        r.diff,
        r.wall_ms
    )
}

fn cmd_verify(run: &RunConfig, suite: Suite, s_values: &[i64]) -> Result<Outcome> {
    let cfg = run.summation()?;
    let tol = run.check_tol;
    let reports: Vec<Report> = match suite {
        Suite::Catalog => {
            let values = match &run.catalog {
                Some(path) => load_catalog(&std::fs::read_to_string(path)?)?,
                None => catalog()?,
            };
            verify_values(&values, &cfg, tol)?
        }
        Suite::Fr01 => {
            let s_values = if s_values.is_empty() {
                vec![1, 2, 3, 4]
            } else {
                s_values.to_vec()
            };
            s_values
                .iter()
                .map(|&s| verify_fr01(s, &cfg, tol))
                .collect::<Result<_>>()?
        }
        Suite::FuncrelGrid => {
            if s_values.is_empty() {
                verify_funcrel_grid(&cfg, tol)?
            } else {
                let mut out = Vec::new();
                for bits in 0..32u32 {
                    let p: [i64; 5] = std::array::from_fn(|i| 1 + ((bits >> (4 - i)) & 1) as i64);
                    for &s in s_values {
                        if p.iter().sum::<i64>() + s >= 7 {
                            out.push(verify_relation(
                                &fn_rel(p[0], p[1], p[2], p[3], p[4], s)?,
                                &cfg,
                                tol,
                            )?);
                        }
                    }
                }
                out
            }
        }
        Suite::Weyl => verify_weyl_grid(&cfg, tol)?,
    };
    let pass = reports.iter().all(|r| r.pass);
    let suite_name = suite
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let passed = reports.iter().filter(|r| r.pass).count();
    let mut text: String = reports.iter().map(report_text).collect();
    text.push_str(&format!(
        "{suite_name}: {passed}/{} passed\n",
        reports.len()
    ));
    let json = json!({
        "command": "verify",
        "suite": suite_name,
        "pass": pass,
        "reports": reports,
    });
    Ok(Outcome { json, text, pass })
}

fn cmd_weyl(subset: usize, reduction: Option<Reduction>, s: Option<&[i64]>) -> Result<Outcome> {
    let subset = subset_from(subset)?;
    let transversal = parabolic_transversal(subset);
    let words: Vec<String> = transversal.iter().map(|w| w.word_string()).collect();
    let tuple = s
        .map(|v| -> Result<ExponentTuple> {
            let arr: [i64; 6] = v
                .try_into()
                .map_err(|_| Error::InvalidInput("--s expects 6 integers".into()))?;
            ExponentTuple::new(arr)
        })
        .transpose()?;
    let mut json = json!({
        "command": "weyl",
        "subset": subset.indices(),
        "transversal": words,
    });
    let mut text = format!("W^{subset} = {{{}}}\n", words.join(", "));
    if let Some(t) = &tuple {
        let terms = functional_sum_terms(subset, t);
        let list: Vec<Value> = terms
            .iter()
            .zip(&transversal)
            .map(|(term, w)| json!({ "word": w.word_string(), "sign": term.sign, "exps": term.exps.0 }))
            .collect();
        for (term, w) in terms.iter().zip(&transversal) {
            let sign = if term.sign > 0 { '+' } else { '-' };
            text.push_str(&format!(
                "  {sign} zeta_2{}   [{}]\n",
                term.exps,
                w.word_string()
            ));
        }
        json["terms"] = Value::Array(list);
    }
    if let Some(red) = reduction {
        let w1 = red.element();
        let kept = reduced_transversal(subset, &w1);
        let kept_words: Vec<String> = kept.iter().map(|w| w.word_string()).collect();
        json["reduction"] = json!({ "w1": w1.word_string(), "kept": kept_words });
        text.push_str(&format!(
            "W^I \\ w1 W^I = {{{}}} for w1 = {}\n",
            kept_words.join(", "),
            w1.word_string()
        ));
        if let Some(t) = &tuple {
            let terms = reduction_terms(subset, &w1, t)?;
            let list: Vec<Value> = terms
                .iter()
                .zip(&kept)
                .map(|(term, w)| json!({ "word": w.word_string(), "sign": term.sign, "exps": term.exps.0 }))
                .collect();
            for term in &terms {
                let sign = if term.sign > 0 { '+' } else { '-' };
                text.push_str(&format!("  {sign} zeta_2{}\n", term.exps));
            }
            json["reduction"]["terms"] = Value::Array(list);
        }
    }
    Ok(Outcome {
        json,
        text,
        pass: true,
    })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let mut out = match &cli.command {
        Command::Eval { ssum, var, exps } => cmd_eval(&cli.run, *ssum, var.as_deref(), exps),
        Command::ClosedForm { a, b, c, d } => cmd_closed_form(&cli.run, *a, *b, *c, *d),
        Command::Verify { suite, s } => cmd_verify(&cli.run, *suite, s),
        Command::Weyl {
            subset,
            reduction,
            s,
        } => cmd_weyl(*subset, *reduction, s.as_deref()),
    }?;
    out.json = with_schema(out.json);
    Ok(out)
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CatalogMismatch(_) => 1,
        _ => 2,
    }
}

fn error_json(e: &Error) -> Value {
    with_schema(json!({ "error": e.to_string() }))
}

/// Parses `args`, runs the command and returns the exit code together with
/// what should go to stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                (0, rendered, String::new())
            } else {
                (2, String::new(), rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let stdout = match cli.run.output {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&out.json).expect("json renders") + "\n"
                }
                OutputFormat::Text => out.text,
            };
            (if out.pass { 0 } else { 1 }, stdout, String::new())
        }
        Err(e) => {
            let stdout = match cli.run.output {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&error_json(&e)).expect("json renders") + "\n"
                }
                OutputFormat::Text => String::new(),
            };
            (exit_code(&e), stdout, format!("error: {e}\n"))
        }
    }
}
