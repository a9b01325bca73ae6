//! One function per subcommand, each producing a [`JsonDoc`].

use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use serde_json::{Map, Value};

use homring::codes::{CodeError, GeneratorMatrix};
use homring::numtheory::{classical_mobius, classical_phi, factor};
use homring::oracle::{self, OracleError, VerificationReport};
use homring::ringspec::{PirSpec, RingSpecError};
use homring::zn::{ZnError, ZnRing};
use homring::LambdaRational;

use crate::document::{
    JsonDistEntry, JsonDoc, JsonH1Witness, JsonH2Residual, JsonInversionMismatch,
    JsonReportEntry, JsonRouteDisagreement, JsonRouteValue, JsonRow, JsonTEntry, JsonWeight,
};
use crate::range::RangeSpec;
use crate::{CliError, LambdaSetting};

/// Largest modulus `table` will print.
pub const MAX_TABLE_MODULUS: u64 = 1_000_000;
/// Largest exponent grid `ring` will print.
pub const MAX_RING_GRID: u128 = 1_000_000;
/// Largest argument `mobius` and `phi` factor by trial division.
pub const MAX_CLASSICAL_ARGUMENT: u64 = 1_000_000_000_000;
/// Largest modulus `verify` re-derives from first principles.
pub const MAX_VERIFY_MODULUS: u64 = oracle::MAX_ORACLE_N;

fn params(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn lambda_param(lambda: &LambdaSetting) -> Value {
    match lambda.bound() {
        None => Value::Null,
        Some(b) => Value::String(b.coefficient_string()),
    }
}

fn map_oracle(e: OracleError) -> CliError {
    match e {
        OracleError::Ring(g @ ZnError::NumericalGuard { .. }) => {
            CliError::Numerical(g.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn map_code(e: CodeError) -> CliError {
    match e {
        CodeError::Ring(g @ ZnError::NumericalGuard { .. }) => {
            CliError::Numerical(g.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

/// The weight table of `Z_n`: one row per element.
pub fn cmd_table(n: u64, lambda: &LambdaSetting) -> Result<JsonDoc, CliError> {
    if !(2..=MAX_TABLE_MODULUS).contains(&n) {
        return Err(CliError::Usage(format!(
            "modulus must be between 2 and {MAX_TABLE_MODULUS}, got {n}"
        )));
    }
    let ring = ZnRing::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let effective = lambda.effective();
    let rows = ring
        .elements()
        .map(|el| JsonRow {
            key: el.value().to_string(),
            ibar: None,
            phi: el.ring_phi().to_string(),
            mobius: el.ring_mobius(),
            weight: JsonWeight::new(&el.weight(&effective), lambda),
        })
        .collect();
    Ok(JsonDoc {
        command: "table".into(),
        params: params(vec![("n", n.into()), ("lambda", lambda_param(lambda))]),
        rows: Some(rows),
        distribution: None,
        report: None,
    })
}

/// The symbolic weight grid of a product of chain rings: one row per
/// exponent tuple, in lexicographic order.
pub fn cmd_ring(spec_text: &str, lambda: &LambdaSetting) -> Result<JsonDoc, CliError> {
    let spec: PirSpec = spec_text
        .parse()
        .map_err(|e: RingSpecError| CliError::Usage(e.to_string()))?;
    if spec.grid_size() > MAX_RING_GRID {
        return Err(CliError::Usage(format!(
            "exponent grid has {} tuples, the limit is {MAX_RING_GRID}",
            spec.grid_size()
        )));
    }
    let effective = lambda.effective();
    let bottom = spec.bottom();
    let rows = spec
        .tuples()
        .map(|tuple| {
            let bound = "tuples enumerated from the spec are always bound";
            JsonRow {
                key: tuple.to_string(),
                ibar: Some(spec.complement(&tuple).expect(bound).to_string()),
                phi: spec.phi(&tuple).expect(bound).to_string(),
                mobius: spec.mobius(&tuple, &bottom).expect(bound),
                weight: JsonWeight::new(&spec.weight(&tuple, &effective).expect(bound), lambda),
            }
        })
        .collect();
    Ok(JsonDoc {
        command: "ring".into(),
        params: params(vec![
            ("spec", spec.to_string().into()),
            ("cardinality", spec.cardinality().to_string().into()),
            ("lambda", lambda_param(lambda)),
        ]),
        rows: Some(rows),
        distribution: None,
        report: None,
    })
}

fn classical_row(m: u64, lambda: &LambdaSetting) -> Result<JsonRow, CliError> {
    if m == 0 || m > MAX_CLASSICAL_ARGUMENT {
        return Err(CliError::Usage(format!(
            "argument must be between 1 and {MAX_CLASSICAL_ARGUMENT}, got {m}"
        )));
    }
    let factored = factor(m).expect("m is nonzero");
    let phi = classical_phi(&factored);
    let mobius = classical_mobius(&factored);
    let weight =
        LambdaRational::weight_from(mobius, &BigUint::from(phi), &lambda.effective());
    Ok(JsonRow {
        key: m.to_string(),
        ibar: None,
        phi: phi.to_string(),
        mobius,
        weight: JsonWeight::new(&weight, lambda),
    })
}

/// The classical Möbius row of `m`, with φ and the derived weight.
pub fn cmd_mobius(m: u64, lambda: &LambdaSetting) -> Result<JsonDoc, CliError> {
    Ok(JsonDoc {
        command: "mobius".into(),
        params: params(vec![("m", m.into()), ("lambda", lambda_param(lambda))]),
        rows: Some(vec![classical_row(m, lambda)?]),
        distribution: None,
        report: None,
    })
}

/// The Euler φ row of `m`, with μ and the derived weight.
pub fn cmd_phi(m: u64, lambda: &LambdaSetting) -> Result<JsonDoc, CliError> {
    Ok(JsonDoc {
        command: "phi".into(),
        params: params(vec![("m", m.into()), ("lambda", lambda_param(lambda))]),
        rows: Some(vec![classical_row(m, lambda)?]),
        distribution: None,
        report: None,
    })
}

fn weight_pair(w: &LambdaRational, lambda: &LambdaSetting) -> JsonWeight {
    JsonWeight::new(w, lambda)
}

fn report_entry(report: &VerificationReport, lambda: &LambdaSetting) -> JsonReportEntry {
    JsonReportEntry {
        n: report.n,
        pass: report.pass(),
        zero_weight_ok: report.zero_weight_ok,
        h1_witnesses: report
            .h1_witnesses
            .iter()
            .map(|w| JsonH1Witness {
                x: w.x,
                y: w.y,
                weight_x: weight_pair(&w.weight_x, lambda),
                weight_y: weight_pair(&w.weight_y, lambda),
            })
            .collect(),
        h2_residuals: report
            .h2_residuals
            .iter()
            .map(|r| JsonH2Residual {
                ideal: r.ideal_label,
                size: r.size,
                residual: weight_pair(&r.residual, lambda),
            })
            .collect(),
        t_table: report
            .t_table
            .iter()
            .map(|t| JsonTEntry {
                ideal: t.ideal_label,
                value: weight_pair(&t.value, lambda),
            })
            .collect(),
        inversion_mismatches: report
            .inversion_mismatches
            .iter()
            .map(|m| JsonInversionMismatch {
                ideal: m.ideal_label,
                candidate: weight_pair(&m.candidate, lambda),
                inverted: weight_pair(&m.inverted, lambda),
            })
            .collect(),
        route_disagreements: report
            .route_disagreements
            .iter()
            .map(|d| JsonRouteDisagreement {
                x: d.x,
                values: d
                    .values
                    .iter()
                    .map(|(route, w)| JsonRouteValue {
                        route: route.clone(),
                        weight: weight_pair(w, lambda),
                    })
                    .collect(),
            })
            .collect(),
        routes_checked: report.routes_checked.clone(),
    }
}

/// Re-derives every weight table in the range from first principles and
/// checks the axioms; the second value is false when any check failed.
pub fn cmd_verify(
    range: RangeSpec,
    lambda: &LambdaSetting,
) -> Result<(JsonDoc, bool), CliError> {
    if range.from < 2 || range.to > MAX_VERIFY_MODULUS {
        return Err(CliError::Usage(format!(
            "verify range must lie within 2..{MAX_VERIFY_MODULUS}, got {range}"
        )));
    }
    let effective = lambda.effective();
    let mut entries = Vec::with_capacity(range.len() as usize);
    let mut all_pass = true;
    for n in range.iter() {
        let report = oracle::verify_ring(n, &effective).map_err(map_oracle)?;
        all_pass &= report.pass();
        entries.push(report_entry(&report, lambda));
    }
    let doc = JsonDoc {
        command: "verify".into(),
        params: params(vec![
            ("from", range.from.into()),
            ("to", range.to.into()),
            ("lambda", lambda_param(lambda)),
        ]),
        rows: None,
        distribution: None,
        report: Some(entries),
    };
    Ok((doc, all_pass))
}

/// The homogeneous weight enumerator of the code generated by the matrix
/// in `file`.
pub fn cmd_enumerator(file: &Path, lambda: &LambdaSetting) -> Result<JsonDoc, CliError> {
    let text = fs::read_to_string(file).map_err(|e| {
        CliError::Usage(format!("cannot read {}: {e}", file.display()))
    })?;
    enumerator_from_text(&file.display().to_string(), &text, lambda)
}

/// [`cmd_enumerator`] on matrix text that is already in memory.
pub fn enumerator_from_text(
    name: &str,
    text: &str,
    lambda: &LambdaSetting,
) -> Result<JsonDoc, CliError> {
    let matrix: GeneratorMatrix = text.parse().map_err(map_code)?;
    let distribution = matrix
        .weight_enumerator(&lambda.effective())
        .map_err(map_code)?;
    let entries = distribution
        .counts()
        .iter()
        .map(|(weight, &count)| JsonDistEntry {
            weight: JsonWeight::new(weight, lambda),
            count,
        })
        .collect();
    Ok(JsonDoc {
        command: "enumerator".into(),
        params: params(vec![
            ("file", name.into()),
            ("n", matrix.n().into()),
            ("k", (matrix.row_count() as u64).into()),
            ("len", (matrix.block_length() as u64).into()),
            ("lambda", lambda_param(lambda)),
        ]),
        rows: None,
        distribution: Some(entries),
        report: None,
    })
}
