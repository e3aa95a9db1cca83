//! `toricface`: presentation ideals, initial ideals, regular subdivisions and
//! graded Betti numbers of toric face rings.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use toric_face::betti::{check_cancel, hochster_sr, BettiContext, BettiError, SimplicialComplex, DEFAULT_CLASS_CAP};
use toric_face::complex::{validate, ComplexError, MonoidalComplex};
use toric_face::document::ComplexDocument;
use toric_face::exact::{format_rational, Field};
use toric_face::grobner::Monomial;
use toric_face::ring::{presentation_ideal_with, DEFAULT_DEGREE_BOUND};
use toric_face::subdiv::{classify_with, subdivision, ClassifyOptions, SubdivError, DEFAULT_RADICAL_CAP};

const EXIT_VALIDATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "toricface", version, about = "Computations with toric face rings of monoidal complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Input complex document (JSON).
    file: PathBuf,
    /// Coefficient field: `q` or `fp:<prime>`.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
    class_cap: usize,
    #[arg(long, default_value_t = DEFAULT_RADICAL_CAP)]
    radical_cap: u32,
    /// Degree bound for binomial generators of the face toric ideals.
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree_bound: u64,
    /// Print Betti tables as TSV instead of JSON.
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the complex axioms.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Presentation ideal `I_M = A + B`.
    Present {
        #[command(flatten)]
        common: Common,
    },
    /// Initial ideal for a weight vector and its classification.
    Initial {
        #[command(flatten)]
        common: Common,
        /// Comma-separated weights, one per generator in document order.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Regular subdivision induced by a weight vector.
    Subdivide {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weights: Option<String>,
    },
    /// Graded Betti numbers in one degree.
    Betti {
        #[command(flatten)]
        common: Common,
        /// Degree as `name:multiplicity` pairs.
        #[arg(long)]
        degree: String,
    },
    /// Betti numbers of the Stanley–Reisner ring at a squarefree degree.
    Hochster {
        #[command(flatten)]
        common: Common,
        /// Comma-separated generator names; may be empty.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Search for failures of cancellation in the grading monoid.
    Cancel {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Present { .. } => "present",
            Command::Initial { .. } => "initial",
            Command::Subdivide { .. } => "subdivide",
            Command::Betti { .. } => "betti",
            Command::Hochster { .. } => "hochster",
            Command::Cancel { .. } => "cancel",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Validate { common }
            | Command::Present { common }
            | Command::Initial { common, .. }
            | Command::Subdivide { common, .. }
            | Command::Betti { common, .. }
            | Command::Hochster { common, .. }
            | Command::Cancel { common } => common,
        }
    }
}

#[derive(Serialize)]
struct ResultDocument {
    command: Vec<String>,
    input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    payload: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorObject>,
    warnings: Vec<String>,
}

#[derive(Serialize, Debug)]
struct ErrorObject {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<Value>,
}

struct Failure {
    code: u8,
    error: ErrorObject,
    payload: Option<Value>,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, error: ErrorObject { kind: "parse", message: message.into(), detail: None }, payload: None }
    }
}

impl From<ComplexError> for Failure {
    fn from(e: ComplexError) -> Failure {
        match e {
            ComplexError::Invalid(v) => Failure {
                code: EXIT_VALIDATION,
                error: ErrorObject { kind: "validation", message: violation_message(&v.message, v.condition), detail: Some(json!(v)) },
                payload: None,
            },
            other => Failure::parse(other.to_string()),
        }
    }
}

fn violation_message(message: &str, condition: u8) -> String {
    format!("condition {condition} violated: {message}")
}

impl From<BettiError> for Failure {
    fn from(e: BettiError) -> Failure {
        match e {
            BettiError::ClassOverflow { cap } => Failure {
                code: EXIT_CAP,
                error: ErrorObject { kind: "class_overflow", message: e.to_string(), detail: Some(json!({ "cap": cap })) },
                payload: None,
            },
            other => Failure::parse(other.to_string()),
        }
    }
}

impl From<SubdivError> for Failure {
    fn from(e: SubdivError) -> Failure {
        match &e {
            SubdivError::RadicalCapExceeded { generator, cap } => Failure {
                code: EXIT_CAP,
                error: ErrorObject {
                    kind: "radical_cap_exceeded",
                    message: e.to_string(),
                    detail: Some(json!({ "generator": generator, "cap": cap })),
                },
                payload: None,
            },
            _ => Failure::parse(e.to_string()),
        }
    }
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    if s == "q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Failure::parse(format!("invalid field {s:?}; expected q or fp:<prime>")))?;
    if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Failure::parse(format!("{p} is not prime")));
    }
    Ok(Field::Prime(p))
}

fn parse_weights(given: Option<&str>, mc: &MonoidalComplex) -> Result<Vec<u64>, Failure> {
    match given {
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Failure::parse(format!("invalid weight {t:?}"))))
            .collect(),
        None => mc
            .weights()
            .map(<[u64]>::to_vec)
            .ok_or_else(|| Failure::parse("no --weights given and the document has no generator weights")),
    }
}

fn generator(mc: &MonoidalComplex, name: &str) -> Result<usize, Failure> {
    mc.generator_index(name).ok_or_else(|| Failure::parse(format!("unknown generator {name:?}")))
}

fn parse_degree(s: &str, mc: &MonoidalComplex) -> Result<Monomial, Failure> {
    let mut e = vec![0u32; mc.num_generators()];
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, k) = part.rsplit_once(':').ok_or_else(|| Failure::parse(format!("invalid degree entry {part:?}")))?;
        let k: u32 = k.parse().map_err(|_| Failure::parse(format!("invalid multiplicity in {part:?}")))?;
        e[generator(mc, name)?] += k;
    }
    Ok(Monomial(e))
}

fn table(t: &BTreeMap<usize, usize>) -> Value {
    json!(t.iter().map(|(i, b)| (i.to_string(), *b)).collect::<BTreeMap<String, usize>>())
}

fn tsv(rows: &[(&str, &BTreeMap<usize, usize>)]) -> String {
    let mut out = String::from("table\ti\tbeta\n");
    for (name, t) in rows {
        for (i, b) in t.iter() {
            out.push_str(&format!("{name}\t{i}\t{b}\n"));
        }
    }
    out
}

enum Output {
    Json(Value, Vec<String>),
    Text(String),
}

fn run(cmd: &Command, text: &str) -> Result<Output, Failure> {
    let common = cmd.common();
    let doc = ComplexDocument::from_json(text).map_err(|e| Failure::parse(e.to_string()))?;
    if let Command::Validate { .. } = cmd {
        let report = validate(&doc)?;
        if report.passed {
            return Ok(Output::Json(json!(report), Vec::new()));
        }
        let v = report.violation.clone().expect("failed report has a violation");
        return Err(Failure {
            code: EXIT_VALIDATION,
            error: ErrorObject { kind: "validation", message: violation_message(&v.message, v.condition), detail: Some(json!(v)) },
            payload: Some(json!(report)),
        });
    }
    let field = parse_field(&common.field)?;
    let mc = MonoidalComplex::from_document(&doc)?;
    let names = mc.names();
    let fmt_names = |es: &[usize]| -> Vec<String> { es.iter().map(|&e| names[e].clone()).collect() };
    let (payload, warnings): (Value, Vec<String>) = match cmd {
        Command::Validate { .. } => unreachable!(),
        Command::Present { .. } => {
            let ideal = presentation_ideal_with(&mc, common.degree_bound);
            (json!(ideal.to_strings()), ideal.warnings.clone())
        }
        Command::Initial { weights, .. } => {
            let w = parse_weights(weights.as_deref(), &mc)?;
            let opts = ClassifyOptions { radical_cap: common.radical_cap, degree_bound: common.degree_bound };
            let c = classify_with(&mc, &w, opts)?;
            let ini: Vec<String> = c.initial_ideal.iter().map(|p| p.format(names)).collect();
            (
                json!({
                    "weights": w,
                    "initial_ideal": ini,
                    "j_ideal": c.j.to_strings(),
                    "classification": c.classification,
                }),
                c.j.warnings.clone(),
            )
        }
        Command::Subdivide { weights, .. } => {
            let w = parse_weights(weights.as_deref(), &mc)?;
            let sub = subdivision(&mc, &w)?;
            let cells: Vec<Value> = sub
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "face": mc.faces()[c.host].id,
                        "dim": c.dim,
                        "generators": fmt_names(&c.bottom),
                        "maximal": c.maximal,
                    })
                })
                .collect();
            let heights: BTreeMap<String, Option<String>> = sub
                .heights
                .iter()
                .enumerate()
                .map(|(e, h)| (names[e].clone(), h.as_ref().map(format_rational)))
                .collect();
            let n_gens: Vec<Vec<String>> = sub.maximal_cells().map(|c| fmt_names(&c.bottom)).collect();
            (
                json!({
                    "weights": w,
                    "cells": cells,
                    "heights": heights,
                    "n_generators": n_gens,
                    "vanishing": fmt_names(&sub.vanishing),
                }),
                Vec::new(),
            )
        }
        Command::Betti { degree, .. } => {
            let h = parse_degree(degree, &mc)?;
            let ctx = BettiContext::new(&mc, common.class_cap);
            let class = ctx.class_of(&h)?;
            let g = ctx.graded_betti(&h, field)?;
            let k = ctx.koszul_component(&h, field)?;
            let koszul = k.betti_table();
            if common.tsv {
                return Ok(Output::Text(tsv(&[("betti", &g.betti), ("relative", &g.relative), ("koszul", &koszul)])));
            }
            let mut warnings = ctx.ideal().warnings.clone();
            if !g.disagreements.is_empty() {
                warnings.push(format!(
                    "relative homology of the divisor complexes differs from the Koszul homology at i = {:?}",
                    g.disagreements
                ));
            }
            (
                json!({
                    "degree": h.format(names),
                    "class": class.members.iter().map(|m| m.format(names)).collect::<Vec<_>>(),
                    "method": g.method,
                    "betti": table(&g.betti),
                    "relative": table(&g.relative),
                    "koszul": table(&koszul),
                    "koszul_dims": k.dims.iter().map(|(i, d)| (i.to_string(), *d)).collect::<BTreeMap<_, _>>(),
                    "disagreements": g.disagreements,
                }),
                warnings,
            )
        }
        Command::Hochster { subset, .. } => {
            let mut w: Vec<usize> = subset
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| generator(&mc, s))
                .collect::<Result<_, _>>()?;
            w.sort_unstable();
            w.dedup();
            let delta = SimplicialComplex::from_monoidal(&mc);
            let b = hochster_sr(&delta, &w, field);
            if common.tsv {
                return Ok(Output::Text(tsv(&[("hochster", &b)])));
            }
            let mut warnings = Vec::new();
            if mc.faces().iter().any(|f| f.members.len() != f.dim) {
                warnings.push("the complex is not simplicial with free face monoids; using its generator complex".into());
            }
            (json!({ "subset": fmt_names(&w), "betti": table(&b) }), warnings)
        }
        Command::Cancel { .. } => {
            let r = check_cancel(&mc, common.class_cap)?;
            (json!(r), Vec::new())
        }
    };
    Ok(Output::Json(payload, warnings))
}

fn emit(doc: &ResultDocument) {
    println!("{}", serde_json::to_string_pretty(doc).expect("result serializes"));
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let f = Failure::parse(e.render().to_string().trim().to_string());
            emit(&ResultDocument { command: echo, input_digest: None, payload: None, error: Some(f.error), warnings: Vec::new() });
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let text = match std::fs::read(&cli.command.common().file) {
        Ok(bytes) => bytes,
        Err(e) => {
            let f = Failure::parse(format!("cannot read {}: {e}", cli.command.common().file.display()));
            emit(&ResultDocument { command: echo, input_digest: None, payload: None, error: Some(f.error), warnings: Vec::new() });
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let digest = hex::encode(Sha256::digest(&text));
    let mut command = vec![cli.command.name().to_string()];
    command.extend(echo.into_iter().skip(1));
    let result = match std::str::from_utf8(&text) {
        Ok(s) => run(&cli.command, s),
        Err(e) => Err(Failure::parse(format!("input is not UTF-8: {e}"))),
    };
    match result {
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(payload, warnings)) => {
            emit(&ResultDocument { command, input_digest: Some(digest), payload: Some(payload), error: None, warnings });
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&ResultDocument {
                command,
                input_digest: Some(digest),
                payload: f.payload,
                error: Some(f.error),
                warnings: Vec::new(),
            });
            ExitCode::from(f.code)
        }
    }
}
