//! The format-independent result of a command and its three renderings.
//!
//! [`JsonDoc`] is exactly the JSON output: rendering as JSON serializes
//! it, rendering as a table or CSV lays the same data out line by line,
//! and parsing the JSON back yields an equal value.
//!
//! Weights are carried as exact fractions.  `num`/`den` give the
//! coefficient the weight was computed with: multiples of λ when
//! `lambda_bound` is null, a plain rational when `lambda_bound` records
//! the substituted value.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use homring::LambdaRational;

use crate::LambdaSetting;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonDoc {
    pub command: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<JsonRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Vec<JsonDistEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Vec<JsonReportEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRow {
    pub key: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ibar: Option<String>,
    pub phi: String,
    pub mobius: i64,
    pub weight: JsonWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonWeight {
    pub num: String,
    pub den: String,
    pub lambda_bound: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonDistEntry {
    pub weight: JsonWeight,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReportEntry {
    pub n: u64,
    pub pass: bool,
    pub zero_weight_ok: bool,
    pub h1_witnesses: Vec<JsonH1Witness>,
    pub h2_residuals: Vec<JsonH2Residual>,
    pub t_table: Vec<JsonTEntry>,
    pub inversion_mismatches: Vec<JsonInversionMismatch>,
    pub route_disagreements: Vec<JsonRouteDisagreement>,
    pub routes_checked: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonH1Witness {
    pub x: u64,
    pub y: u64,
    pub weight_x: JsonWeight,
    pub weight_y: JsonWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonH2Residual {
    pub ideal: u64,
    pub size: u64,
    pub residual: JsonWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTEntry {
    pub ideal: u64,
    pub value: JsonWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonInversionMismatch {
    pub ideal: u64,
    pub candidate: JsonWeight,
    pub inverted: JsonWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRouteDisagreement {
    pub x: u64,
    pub values: Vec<JsonRouteValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRouteValue {
    pub route: String,
    pub weight: JsonWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl JsonWeight {
    pub fn new(weight: &LambdaRational, lambda: &LambdaSetting) -> JsonWeight {
        JsonWeight {
            num: weight.coefficient().numer().to_string(),
            den: weight.coefficient().denom().to_string(),
            lambda_bound: lambda.bound().map(|b| b.coefficient_string()),
        }
    }

    fn value(&self) -> LambdaRational {
        let num: BigInt = self.num.parse().expect("weight numerators are integers");
        let den: BigInt = self.den.parse().expect("weight denominators are integers");
        LambdaRational::from_ratio(BigRational::new(num, den))
    }

    /// The human reading: symbolic multiples of λ, or a plain rational
    /// when a bound was substituted.
    pub fn display(&self) -> String {
        let value = self.value();
        if self.lambda_bound.is_some() {
            value.coefficient_string()
        } else {
            value.to_string()
        }
    }
}

impl JsonReportEntry {
    /// Names of the checks this entry failed, empty when it passed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.zero_weight_ok {
            out.push("w0");
        }
        if !self.h1_witnesses.is_empty() {
            out.push("h1");
        }
        if self.h2_residuals.iter().any(|r| r.residual.num != "0") {
            out.push("h2");
        }
        if !self.inversion_mismatches.is_empty() {
            out.push("inversion");
        }
        if !self.route_disagreements.is_empty() {
            out.push("routes");
        }
        out
    }
}

impl JsonDoc {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_delimited('\t', |s| s.to_string()),
            OutputFormat::Csv => self.render_delimited(',', csv_field),
            OutputFormat::Json => {
                let mut text =
                    serde_json::to_string_pretty(self).expect("documents serialize");
                text.push('\n');
                text
            }
        }
    }

    /// Column headers for the tabular formats, fixed per command.
    fn headers(&self) -> Vec<&'static str> {
        match self.command.as_str() {
            "table" => vec!["x", "phi", "mu", "w"],
            "ring" => vec!["i", "ibar", "phi", "mu", "w"],
            "mobius" | "phi" => vec!["m", "phi", "mu", "w"],
            "verify" => vec!["n", "result"],
            "enumerator" => vec!["w", "count"],
            other => unreachable!("unknown command {other}"),
        }
    }

    fn render_delimited(&self, sep: char, escape: fn(&str) -> String) -> String {
        let mut lines: Vec<Vec<String>> = Vec::new();
        lines.push(self.headers().iter().map(|h| h.to_string()).collect());
        if let Some(rows) = &self.rows {
            for row in rows {
                let mut cells = vec![row.key.clone()];
                if let Some(ibar) = &row.ibar {
                    cells.push(ibar.clone());
                }
                cells.push(row.phi.clone());
                cells.push(row.mobius.to_string());
                cells.push(row.weight.display());
                lines.push(cells);
            }
        }
        if let Some(dist) = &self.distribution {
            for entry in dist {
                lines.push(vec![entry.weight.display(), entry.count.to_string()]);
            }
        }
        if let Some(report) = &self.report {
            for entry in report {
                let failures = entry.failures();
                let result = if failures.is_empty() {
                    "pass".to_string()
                } else {
                    format!("FAIL({})", failures.join(","))
                };
                lines.push(vec![entry.n.to_string(), result]);
            }
        }
        let mut out = String::new();
        for cells in lines {
            let escaped: Vec<String> = cells.iter().map(|c| escape(c)).collect();
            let _ = writeln!(out, "{}", escaped.join(&sep.to_string()));
        }
        out
    }
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
