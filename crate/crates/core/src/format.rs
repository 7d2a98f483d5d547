//! JSON arrangement files.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "hyperplanes": [["1", "0", "0"], ["0", "1", "-1/2"]],
//!   "labels": ["x", "y-1/2"]
//! }
//! ```
//!
//! Rows are `[a_1, ..., a_l, c]` for the form `a . z + c`, with entries given
//! as integers or rational strings. Over a number field
//! (`"field": {"min_poly": [1, 1, 1]}`, coefficients ascending) each entry
//! is a list of rationals, read as a polynomial in the generator; a bare
//! rational is also accepted. Matroid input replaces `hyperplanes` by
//! `circuits` (1-based index lists) with optional `rank` and `infinity`, as
//! in [`Arrangement::from_circuits`].

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{Arrangement, Realization};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, NfElem, NumberField, Rational};
use crate::sets::IndexSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    MinPoly { min_poly: Vec<i64> },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Name("Q".into())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperplanes: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Parse an arrangement file. With `essentialize`, realized input is first
/// replaced by its quotient by the center.
pub fn parse_arrangement(text: &str, essentialize: bool) -> Result<Arrangement> {
    let file: ArrangementFile = serde_json::from_str(text)
        .map_err(|e| Error::Syntax { line: e.line(), message: e.to_string() })?;
    let at = |key: &str, i: usize, message: String| Error::Syntax {
        line: element_line(text, key, i).unwrap_or(1),
        message,
    };
    let arr = match (&file.hyperplanes, &file.circuits) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse("give either `hyperplanes` or `circuits`, not both".into()))
        }
        (None, None) => return Err(Error::Parse("missing `hyperplanes` or `circuits`".into())),
        (Some(rows), None) => {
            let real = realization(&file.field, rows, &at)?;
            let built = if essentialize {
                Arrangement::essentialize(real)
            } else {
                Arrangement::from_realization(real)
            };
            built.map_err(|e| match e {
                Error::ZeroForm { index } => at("hyperplanes", index - 1, e.to_string()),
                other => other,
            })?
        }
        (None, Some(circuits)) => {
            let mut size = circuits.iter().flatten().copied().max().unwrap_or(0);
            size = size.max(file.infinity.unwrap_or(0));
            if let Some(labels) = &file.labels {
                size = size.max(labels.len() + usize::from(file.infinity.is_some()));
            }
            let mut zero_based = Vec::with_capacity(circuits.len());
            for (i, c) in circuits.iter().enumerate() {
                if c.contains(&0) {
                    return Err(at("circuits", i, "circuit indices are 1-based".into()));
                }
                zero_based.push(c.iter().map(|x| x - 1).collect::<Vec<_>>());
            }
            let infinity = match file.infinity {
                Some(0) => return Err(Error::Parse("`infinity` is 1-based".into())),
                other => other.map(|x| x - 1),
            };
            Arrangement::from_circuits(size, &zero_based, file.rank, infinity)?
        }
    };
    match file.labels {
        Some(labels) => arr.with_labels(labels),
        None => Ok(arr),
    }
}

fn realization(
    field: &FieldSpec,
    rows: &[Vec<Value>],
    at: &dyn Fn(&str, usize, String) -> Error,
) -> Result<Realization> {
    if let Some(width) = rows.first().map(Vec::len) {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(at(
                    "hyperplanes",
                    i,
                    format!("hyperplane {} has {} entries, expected {width}", i + 1, row.len()),
                ));
            }
        }
    }
    match field {
        FieldSpec::Name(name) if name == "Q" || name == "QQ" => {
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let parsed: Result<Vec<Rational>> = row.iter().map(rational_value).collect();
                out.push(parsed.map_err(|e| at("hyperplanes", i, format!("hyperplane {}: {e}", i + 1)))?);
            }
            Ok(Realization::Rational(out))
        }
        FieldSpec::Name(other) => Err(Error::Parse(format!("unknown field `{other}`"))),
        FieldSpec::MinPoly { min_poly } => {
            let k = NumberField::new(min_poly.iter().map(|&c| c.into()).collect())?;
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let parsed: Result<Vec<NfElem>> = row.iter().map(|v| field_value(&k, v)).collect();
                out.push(parsed.map_err(|e| at("hyperplanes", i, format!("hyperplane {}: {e}", i + 1)))?);
            }
            Ok(Realization::NumberField(k, out))
        }
    }
}

fn rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("`{other}` is not an integer or rational string"))),
    }
}

fn field_value(k: &Arc<NumberField>, v: &Value) -> Result<NfElem> {
    match v {
        Value::Array(coeffs) => {
            Ok(k.element(coeffs.iter().map(rational_value).collect::<Result<Vec<_>>>()?))
        }
        other => Ok(k.from_rational(rational_value(other)?)),
    }
}

/// Line on which the `index`-th element of the array under `key` starts.
fn element_line(text: &str, key: &str, index: usize) -> Option<usize> {
    let needle = format!("\"{key}\"");
    let start = text.find(&needle)? + needle.len();
    let open = start + text[start..].find('[')?;
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    let mut seen = 0usize;
    let mut expecting = true;
    for (off, ch) in text[open..].char_indices() {
        let pos = open + off;
        if in_string {
            match ch {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => in_string = false,
                _ => {}
            }
            continue;
        }
        match ch {
            '[' | '{' => {
                if depth == 1 && expecting {
                    if seen == index {
                        return Some(text[..pos].matches('\n').count() + 1);
                    }
                    seen += 1;
                    expecting = false;
                }
                depth += 1;
            }
            ']' | '}' => {
                depth -= 1;
                if depth == 0 {
                    return None;
                }
            }
            ',' if depth == 1 => expecting = true,
            c if depth == 1 && expecting && !c.is_whitespace() => {
                if seen == index {
                    return Some(text[..pos].matches('\n').count() + 1);
                }
                seen += 1;
                expecting = false;
                in_string = c == '"';
            }
            '"' => in_string = true,
            _ => {}
        }
    }
    None
}

/// File describing `arr`. Realized arrangements keep their forms; the others
/// are written as the circuits of their cone of size at most its rank,
/// which together with `rank` and `infinity` determine the matroid.
pub fn arrangement_file(arr: &Arrangement) -> ArrangementFile {
    let labels = Some(arr.labels().to_vec());
    match arr.realization() {
        Some(Realization::Rational(rows)) => ArrangementFile {
            field: FieldSpec::default(),
            hyperplanes: Some(
                rows.iter()
                    .map(|r| r.iter().map(|x| Value::String(x.to_string())).collect())
                    .collect(),
            ),
            labels,
            ..Default::default()
        },
        Some(Realization::NumberField(k, rows)) => ArrangementFile {
            field: FieldSpec::MinPoly {
                min_poly: k
                    .modulus()
                    .iter()
                    .map(|c| i64::try_from(c).expect("minimal polynomial fits in i64"))
                    .collect(),
            },
            hyperplanes: Some(
                rows.iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| {
                                Value::Array(
                                    x.coeffs().iter().map(|c| Value::String(c.to_string())).collect(),
                                )
                            })
                            .collect()
                    })
                    .collect(),
            ),
            labels,
            ..Default::default()
        },
        None => {
            let rank = arr.cone().full_rank();
            let circuits = arr
                .cone()
                .circuits()
                .into_iter()
                .filter(|c| c.len() <= rank)
                .map(|c: IndexSet| c.iter().map(|i| i + 1).collect())
                .collect();
            ArrangementFile {
                field: FieldSpec::default(),
                circuits: Some(circuits),
                rank: Some(rank),
                infinity: Some(arr.infinity() + 1),
                labels,
                ..Default::default()
            }
        }
    }
}

/// Pretty JSON with one hyperplane row or circuit per line.
pub fn write_arrangement(arr: &Arrangement) -> String {
    let file = arrangement_file(arr);
    let mut out = String::from("{\n");
    let field = serde_json::to_string(&file.field).expect("serializable");
    out.push_str(&format!("  \"field\": {field}"));
    let mut list = |key: &str, items: Vec<String>| {
        out.push_str(&format!(",\n  \"{key}\": [\n"));
        out.push_str(
            &items.iter().map(|s| format!("    {s}")).collect::<Vec<_>>().join(",\n"),
        );
        out.push_str("\n  ]");
    };
    if let Some(rows) = &file.hyperplanes {
        list("hyperplanes", rows.iter().map(|r| serde_json::to_string(r).expect("serializable")).collect());
    }
    if let Some(circuits) = &file.circuits {
        list("circuits", circuits.iter().map(|c| serde_json::to_string(c).expect("serializable")).collect());
    }
    if let Some(rank) = file.rank {
        out.push_str(&format!(",\n  \"rank\": {rank}"));
    }
    if let Some(inf) = file.infinity {
        out.push_str(&format!(",\n  \"infinity\": {inf}"));
    }
    if let Some(labels) = &file.labels {
        out.push_str(&format!(",\n  \"labels\": {}", serde_json::to_string(labels).expect("serializable")));
    }
    out.push_str("\n}\n");
    out
}
