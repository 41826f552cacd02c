//! Document types and input/output plumbing for the command line: point and
//! group-element documents, report serialization, and the three input shapes
//! (single document, array, one document per line).

use std::io::Read;

use poincare_orbits::nalgebra::{Matrix4, Vector3};
use serde::{Deserialize, Serialize};

use poincare_orbits::{
    involution, CoadjointPoint, ComponentLabel, FourVector, InvolutionKind, LorentzAlgebraElement,
    LorentzMatrix, PoincareElement, ToleranceConfig,
};

/// Error reported to the user as a single JSON line on stderr.
#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub detail: String,
}

impl CliError {
    pub fn new(kind: &'static str, detail: impl Into<String>) -> Self {
        Self {
            kind,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            error: &'a str,
            detail: &'a str,
        }
        serde_json::to_string(&Doc {
            error: self.kind,
            detail: &self.detail,
        })
        .expect("two plain strings always serialize")
    }
}

/// How the input was shaped, reproduced on output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Single,
    Array,
    Lines,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub l: [f64; 3],
    pub g: [f64; 3],
}

/// A coadjoint point: M as {l, g} parameters or as an explicit matrix, plus
/// the momentum covector P.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    #[serde(rename = "M", skip_serializing_if = "Option::is_none", default)]
    pub m: Option<AlgebraDoc>,
    #[serde(rename = "M_matrix", skip_serializing_if = "Option::is_none", default)]
    pub m_matrix: Option<[[f64; 4]; 4]>,
    #[serde(rename = "P")]
    pub p: [f64; 4],
}

/// A group element (S, C) with S given as a row-major 4x4 matrix.
#[derive(Serialize, Clone, Debug)]
pub struct ElementDoc {
    #[serde(rename = "S")]
    pub s: [[f64; 4]; 4],
    #[serde(rename = "C")]
    pub c: [f64; 4],
}

/// Group-element input: either an explicit {S, C} pair or one of the named
/// reflections as {"involution": "space"} / {"involution": "time"}.
#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ElementInput {
    #[serde(rename = "S", default)]
    pub s: Option<[[f64; 4]; 4]>,
    #[serde(rename = "C", default)]
    pub c: Option<[f64; 4]>,
    #[serde(default)]
    pub involution: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct LabelsDoc {
    pub energy: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub helicity: Option<&'static str>,
}

impl From<&ComponentLabel> for LabelsDoc {
    fn from(l: &ComponentLabel) -> Self {
        Self {
            energy: l.energy_sign.as_str(),
            spin: l.spin_sign.map(|s| s.as_str()),
            helicity: l.helicity_sign.map(|s| s.as_str()),
        }
    }
}

/// Classification (and optionally normal-form) report for one point. Field
/// order is part of the output contract; casimirs is the pair [C1, C2].
#[derive(Serialize, Debug)]
pub struct Report {
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cvk_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<PointDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ElementDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub casimirs: [f64; 2],
    pub marginal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

#[derive(Serialize, Debug)]
pub struct InvariantsDoc {
    #[serde(rename = "C1")]
    pub c1: f64,
    #[serde(rename = "C2")]
    pub c2: f64,
    #[serde(rename = "W")]
    pub w: [f64; 4],
}

fn finite(values: impl IntoIterator<Item = f64>, what: &str) -> Result<(), CliError> {
    for v in values {
        if !v.is_finite() {
            return Err(CliError::new(
                "validation",
                format!("{what} contains a non-finite entry"),
            ));
        }
    }
    Ok(())
}

fn matrix_from_rows(rows: &[[f64; 4]; 4]) -> Matrix4<f64> {
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    Matrix4::from_row_slice(&flat)
}

fn rows_from_matrix(m: &Matrix4<f64>) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = m[(i, j)];
        }
    }
    out
}

impl PointDoc {
    pub fn to_point(&self, tol: &ToleranceConfig) -> Result<CoadjointPoint, CliError> {
        finite(self.p.iter().copied(), "P")?;
        let m = match (&self.m, &self.m_matrix) {
            (Some(_), Some(_)) => {
                return Err(CliError::new(
                    "validation",
                    "give M either as {l, g} or as M_matrix, not both",
                ))
            }
            (None, None) => {
                return Err(CliError::new(
                    "validation",
                    "missing M: give {l, g} parameters or an M_matrix",
                ))
            }
            (Some(alg), None) => {
                finite(alg.l.iter().chain(alg.g.iter()).copied(), "M")?;
                LorentzAlgebraElement::new(Vector3::from(alg.l), Vector3::from(alg.g))
            }
            (None, Some(rows)) => {
                finite(rows.iter().flatten().copied(), "M_matrix")?;
                LorentzAlgebraElement::from_matrix(&matrix_from_rows(rows), tol)
                    .map_err(|e| CliError::new("validation", e.to_string()))?
            }
        };
        Ok(CoadjointPoint::new(m, FourVector::from(self.p)))
    }

    pub fn from_point(nu: &CoadjointPoint) -> Self {
        Self {
            m: Some(AlgebraDoc {
                l: [nu.m.l.x, nu.m.l.y, nu.m.l.z],
                g: [nu.m.g.x, nu.m.g.y, nu.m.g.z],
            }),
            m_matrix: None,
            p: nu.p.as_array(),
        }
    }
}

impl ElementDoc {
    pub fn from_element(g: &PoincareElement) -> Self {
        Self {
            s: rows_from_matrix(g.s.matrix()),
            c: g.c.as_array(),
        }
    }
}

impl ElementInput {
    pub fn to_element(&self, tol: &ToleranceConfig) -> Result<PoincareElement, CliError> {
        if let Some(name) = &self.involution {
            if self.s.is_some() || self.c.is_some() {
                return Err(CliError::new(
                    "validation",
                    "give either an involution name or an explicit {S, C} pair, not both",
                ));
            }
            let kind = match name.as_str() {
                "space" => InvolutionKind::Space,
                "time" => InvolutionKind::Time,
                other => {
                    return Err(CliError::new(
                        "validation",
                        format!("unknown involution {other:?}: expected \"space\" or \"time\""),
                    ))
                }
            };
            return Ok(involution(kind));
        }
        let (s, c) = match (&self.s, &self.c) {
            (Some(s), Some(c)) => (s, c),
            _ => {
                return Err(CliError::new(
                    "validation",
                    "element needs both S and C, or an involution name",
                ))
            }
        };
        finite(s.iter().flatten().chain(c.iter()).copied(), "element")?;
        let s = LorentzMatrix::new(matrix_from_rows(s), tol)
            .map_err(|e| CliError::new("validation", e.to_string()))?;
        Ok(PoincareElement::new(s, FourVector::from(*c)))
    }
}

/// Read the whole input: a path, or `-` for stdin.
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::new("io", format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", format!("reading {path}: {e}")))
    }
}

/// Batch parser for any document type: first try the whole text as one JSON
/// value (a single document or an array), then fall back to one document per
/// line.
pub fn parse_documents<T: for<'de> Deserialize<'de>>(
    text: &str,
) -> Result<(Vec<T>, Shape), CliError> {
    if text.trim().is_empty() {
        return Err(CliError::new("parse", "empty input"));
    }
    if let Ok(value) = serde_json::from_str::<serde_json::Value>(text) {
        return match value {
            serde_json::Value::Array(items) => {
                let mut docs = Vec::with_capacity(items.len());
                for (i, item) in items.into_iter().enumerate() {
                    docs.push(
                        serde_json::from_value(item)
                            .map_err(|e| CliError::new("parse", format!("array item {i}: {e}")))?,
                    );
                }
                Ok((docs, Shape::Array))
            }
            other => {
                let doc = serde_json::from_value(other)
                    .map_err(|e| CliError::new("parse", e.to_string()))?;
                Ok((vec![doc], Shape::Single))
            }
        };
    }
    let mut docs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        docs.push(
            serde_json::from_str(line)
                .map_err(|e| CliError::new("parse", format!("line {}: {e}", i + 1)))?,
        );
    }
    if docs.is_empty() {
        return Err(CliError::new("parse", "no documents in input"));
    }
    Ok((docs, Shape::Lines))
}

/// Write a line to stdout. A broken pipe means the downstream reader went
/// away, which is a normal end of conversation, not an error.
fn emit(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::new("io", format!("writing output: {e}"))),
    }
}

/// Print documents following the input shape. `--pretty` promotes line
/// streams to an indented array so the output stays one valid JSON value.
pub fn write_docs<T: Serialize>(docs: &[T], shape: Shape, pretty: bool) -> Result<(), CliError> {
    let out = match (shape, pretty) {
        (Shape::Single, false) => serde_json::to_string(&docs[0]),
        (Shape::Single, true) => serde_json::to_string_pretty(&docs[0]),
        (Shape::Array, false) => serde_json::to_string(&docs),
        (Shape::Array, true) | (Shape::Lines, true) => serde_json::to_string_pretty(&docs),
        (Shape::Lines, false) => {
            let mut lines = Vec::with_capacity(docs.len());
            for d in docs {
                lines.push(
                    serde_json::to_string(d)
                        .map_err(|e| CliError::new("io", format!("serializing output: {e}")))?,
                );
            }
            return emit(&lines.join("\n"));
        }
    };
    emit(&out.map_err(|e| CliError::new("io", format!("serializing output: {e}")))?)
}
