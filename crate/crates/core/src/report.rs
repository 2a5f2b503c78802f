//! Text and line-delimited JSON rendering of results.
//!
//! Every JSON line is one object whose first key is `kind`. Keys always
//! appear, in the order listed below; absent values are `null`.
//! Polynomials are in canonical text form, 1-based indices throughout.
//!
//! * `wada`: `link, field, degree, removed_generator, numerator,
//!   denominator, quotient, warning`
//! * `classical`: `link, components, polynomial`
//! * `torres`: `link, check, verdict, deleted_component, linking_numbers,
//!   degree, field, lhs, rhs, quotient, epsilons, epsilon_rho,
//!   bracket_constant, predicted`; one record per check (`divisibility`,
//!   `bracket`, `prediction`, `block-structure`, or `classical`).
//!   `epsilons` lists `ε_1 … ε_{n−1}` of `T^n + Σ ε_k T^{n−k} + (−1)^n`;
//!   `epsilon_rho` is `ε` of `T² − εT + 1` (so `−ε_1`, degree 2 only);
//!   `bracket_constant` is the collapsed bracket when `T = 1`
//! * `selftest`: `suite, verdict, cases, failures, messages`

use std::fmt::Write;

use serde::Serialize;

use crate::algebra::{LaurentPoly, Scalar};
use crate::selftest::SuiteResult;
use crate::torres::{BracketReading, ClassicalTorresReport, TorresReport, Verdict};
use crate::wada::WadaInvariant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    JsonLines,
}

fn poly(p: &LaurentPoly, n: usize) -> String {
    p.canonical_unit_form(n).to_string()
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

#[derive(Serialize)]
struct WadaRecord<'a> {
    kind: &'static str,
    link: &'a str,
    field: String,
    degree: usize,
    removed_generator: &'a str,
    numerator: String,
    denominator: String,
    quotient: Option<String>,
    warning: Option<&'a str>,
}

pub fn wada(link: &str, w: &WadaInvariant, format: Format) -> String {
    let n = w.degree;
    match format {
        Format::JsonLines => json(&WadaRecord {
            kind: "wada",
            link,
            field: w.numerator.field().to_string(),
            degree: n,
            removed_generator: &w.removed_label,
            numerator: poly(&w.numerator, n),
            denominator: w.denominator.to_string(),
            quotient: w.quotient.as_ref().map(|q| poly(q, n)),
            warning: w.warning.as_deref(),
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "link:        {link}").unwrap();
            writeln!(s, "field:       {}", w.numerator.field()).unwrap();
            writeln!(s, "degree:      {n}").unwrap();
            writeln!(s, "removed:     {}", w.removed_label).unwrap();
            writeln!(s, "numerator:   {}", poly(&w.numerator, n)).unwrap();
            writeln!(s, "denominator: {}", w.denominator).unwrap();
            match &w.quotient {
                Some(q) => writeln!(s, "quotient:    {}", poly(q, n)).unwrap(),
                None => writeln!(s, "quotient:    (not a polynomial)").unwrap(),
            }
            if let Some(msg) = &w.warning {
                writeln!(s, "warning:     {msg}").unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct ClassicalRecord<'a> {
    kind: &'static str,
    link: &'a str,
    components: usize,
    polynomial: String,
}

pub fn classical(link: &str, components: usize, p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::JsonLines => json(&ClassicalRecord {
            kind: "classical",
            link,
            components,
            polynomial: p.to_string(),
        }),
        Format::Text => format!("{link}: Δ = {p}\n"),
    }
}

#[derive(Serialize)]
struct TorresRecord<'a> {
    kind: &'static str,
    link: &'a str,
    check: &'static str,
    verdict: Verdict,
    deleted_component: usize,
    linking_numbers: &'a [i64],
    degree: usize,
    field: String,
    lhs: Option<String>,
    rhs: Option<String>,
    quotient: Option<String>,
    epsilons: Option<Vec<String>>,
    epsilon_rho: Option<String>,
    bracket_constant: Option<String>,
    predicted: Option<Vec<String>>,
}

pub fn torres(link: &str, r: &TorresReport, format: Format) -> String {
    let n = r.degree;
    let quotient = r.quotient.as_ref().map(|q| poly(q, n));
    let (epsilons, epsilon_rho) = match &r.bracket {
        Some(BracketReading::Identified(b)) => (Some(scalars(&b.epsilons)), b.epsilon_rho().map(|e| e.to_string())),
        _ => (None, None),
    };
    let collapsed = match &r.bracket {
        Some(BracketReading::NotIdentifiable { constant }) => Some(constant.to_string()),
        _ => None,
    };
    let predicted = r.predicted.as_deref().map(scalars);
    match format {
        Format::JsonLines => {
            let base = |check, verdict| TorresRecord {
                kind: "torres",
                link,
                check,
                verdict,
                deleted_component: r.deleted_component + 1,
                linking_numbers: &r.linking_numbers,
                degree: n,
                field: r.field.to_string(),
                lhs: None,
                rhs: None,
                quotient: None,
                epsilons: None,
                epsilon_rho: None,
                bracket_constant: None,
                predicted: None,
            };
            let mut out = String::new();
            out.push_str(&json(&TorresRecord {
                lhs: Some(poly(&r.lhs, n)),
                rhs: Some(poly(&r.rhs_base, n)),
                quotient: quotient.clone(),
                ..base("divisibility", r.divisibility)
            }));
            out.push_str(&json(&TorresRecord {
                quotient: quotient.clone(),
                epsilons: epsilons.clone(),
                epsilon_rho: epsilon_rho.clone(),
                bracket_constant: collapsed.clone(),
                ..base("bracket", r.bracket_verdict)
            }));
            out.push_str(&json(&TorresRecord {
                epsilons: epsilons.clone(),
                predicted: predicted.clone(),
                ..base("prediction", r.prediction_verdict)
            }));
            out.push_str(&json(&base("block-structure", r.block_verdict)));
            out
        }
        Format::Text => {
            let mut s = String::new();
            let l: Vec<String> = r.linking_numbers.iter().map(i64::to_string).collect();
            writeln!(s, "link:              {link}").unwrap();
            writeln!(s, "deleted component: {} of {}", r.deleted_component + 1, r.components).unwrap();
            writeln!(s, "linking numbers:   ({})  total {}", l.join(", "), r.total_linking).unwrap();
            writeln!(s, "representation:    degree {} over {}", n, r.field).unwrap();
            writeln!(s, "removed generator: {} (reduced: {})", r.removed_label, r.removed_label_reduced).unwrap();
            writeln!(s, "lhs numerator:     {}", poly(&r.lhs, n)).unwrap();
            writeln!(s, "rhs numerator:     {}", poly(&r.rhs_base, n)).unwrap();
            writeln!(
                s,
                "quotient:          {}",
                quotient.as_deref().unwrap_or("-")
            )
            .unwrap();
            let div = match r.divisibility {
                Verdict::Pass => "DIVISIBLE".to_string(),
                Verdict::Degenerate => "DEGENERATE (reduced numerator is 0, lhs is 0)".to_string(),
                v => v.to_string(),
            };
            writeln!(s, "divisibility:      {div}").unwrap();
            let bracket = match (&r.bracket, r.bracket_verdict) {
                (Some(BracketReading::NotIdentifiable { constant }), _) => {
                    format!("NOT-IDENTIFIABLE (T = 1, bracket constant {constant})")
                }
                (_, v) => format!("BRACKET-{v}"),
            };
            writeln!(s, "bracket:           {bracket}").unwrap();
            if let Some(e) = &epsilons {
                writeln!(s, "epsilons:          ({})", e.join(", ")).unwrap();
            }
            if let Some(e) = &epsilon_rho {
                writeln!(s, "epsilon (T²−εT+1): {e}").unwrap();
            }
            if let Some(p) = &predicted {
                writeln!(s, "predicted:         ({})  {}", p.join(", "), r.prediction_verdict).unwrap();
            }
            writeln!(s, "block structure:   {}", r.block_verdict).unwrap();
            s
        }
    }
}

pub fn classical_torres(link: &str, r: &ClassicalTorresReport, format: Format) -> String {
    match format {
        Format::JsonLines => json(&TorresRecord {
            kind: "torres",
            link,
            check: "classical",
            verdict: if r.degenerate { Verdict::Degenerate } else { r.verdict },
            deleted_component: r.deleted_component + 1,
            linking_numbers: &r.linking_numbers,
            degree: 1,
            field: "Q".into(),
            lhs: Some(r.lhs.to_string()),
            rhs: Some(r.rhs.to_string()),
            quotient: None,
            epsilons: None,
            epsilon_rho: None,
            bracket_constant: None,
            predicted: None,
        }),
        Format::Text => {
            let note = if r.degenerate { " (both sides 0)" } else { "" };
            format!(
                "{link}: delete {} of {}: Δ_L(t',1) = {}  vs  {}  {}{note}\n",
                r.deleted_component + 1,
                r.components,
                r.lhs,
                r.rhs,
                r.verdict
            )
        }
    }
}

#[derive(Serialize)]
struct SuiteRecord<'a> {
    kind: &'static str,
    suite: &'a str,
    verdict: Verdict,
    cases: usize,
    failures: usize,
    messages: &'a [String],
}

pub fn selftest(results: &[SuiteResult], format: Format) -> String {
    let mut out = String::new();
    for r in results {
        let verdict = if r.passed() { Verdict::Pass } else { Verdict::Fail };
        match format {
            Format::JsonLines => out.push_str(&json(&SuiteRecord {
                kind: "selftest",
                suite: r.name,
                verdict,
                cases: r.cases,
                failures: r.failures,
                messages: &r.messages,
            })),
            Format::Text => {
                writeln!(
                    out,
                    "{verdict:<5} {:<30} {:>5} cases {:>3} failures  {:>8.1?}",
                    r.name, r.cases, r.failures, r.elapsed
                )
                .unwrap();
                for m in &r.messages {
                    writeln!(out, "      {m}").unwrap();
                }
            }
        }
    }
    out
}

fn json<T: Serialize>(record: &T) -> String {
    let mut s = serde_json::to_string(record).expect("records serialize");
    s.push('\n');
    s
}
