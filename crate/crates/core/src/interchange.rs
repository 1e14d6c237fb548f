//! The on-disk interchange format: a single JSON document holding the
//! structure constants with scalars in the textual grammar. Unknown fields
//! are rejected; emitted bytes are deterministic for a fixed algebra.
//!
//! `mult` entries are `[i, j, k, "scalar"]` with e_i·e_j ∋ scalar·e_k;
//! `comult` entries are `[k, i, j, "scalar"]` with Δ(e_k) ∋ scalar·e_i⊗e_j;
//! `unit`/`counit` are scalar arrays and the optional `antipode` is a dense
//! row-major scalar array. Indices are 0-based.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{parse_scalar, CycNumber};
use crate::hopf::{FinHopfAlgebra, HopfError};
use crate::linalg::{FieldMatrix, SparseTensor3};

#[derive(Debug, thiserror::Error)]
pub enum InterchangeError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("scalar at {context}: {message}")]
    Scalar { context: String, message: String },
    #[error("structure: {0}")]
    Structure(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    name: String,
    dim: usize,
    cyclotomic_order: u32,
    mult: Vec<(u32, u32, u32, String)>,
    comult: Vec<(u32, u32, u32, String)>,
    unit: Vec<String>,
    counit: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<String>>,
}

/// Serializes an algebra to canonical JSON bytes (sorted tensor entries,
/// canonical scalar strings, two-space indentation, trailing newline).
pub fn to_bytes(h: &FinHopfAlgebra) -> Result<Vec<u8>, InterchangeError> {
    let doc = Document {
        name: h.name().to_string(),
        dim: h.dim(),
        cyclotomic_order: h.cyc_order(),
        mult: h
            .mult()
            .iter()
            .map(|(&(i, j, k), v)| (i, j, k, v.to_string()))
            .collect(),
        comult: h
            .comult()
            .iter()
            .map(|(&(k, i, j), v)| (k, i, j, v.to_string()))
            .collect(),
        unit: h.unit_vector().iter().map(|v| v.to_string()).collect(),
        counit: h.counit_vector().iter().map(|v| v.to_string()).collect(),
        antipode: h
            .antipode()
            .map(|s| s.entries().iter().map(|v| v.to_string()).collect()),
    };
    let mut bytes = serde_json::to_vec_pretty(&doc)?;
    bytes.push(b'\n');
    Ok(bytes)
}

pub fn write_file(h: &FinHopfAlgebra, path: &std::path::Path) -> Result<(), InterchangeError> {
    std::fs::write(path, to_bytes(h)?)?;
    Ok(())
}

/// Parses an algebra from interchange JSON, validating shapes and scalar
/// syntax; the result still needs verify_axioms before being trusted.
pub fn from_bytes(bytes: &[u8]) -> Result<FinHopfAlgebra, InterchangeError> {
    let doc: Document = serde_json::from_slice(bytes)?;
    let order = doc.cyclotomic_order;
    if order == 0 {
        return Err(InterchangeError::Structure(
            "cyclotomic_order must be positive".into(),
        ));
    }
    let parse = |s: &str, context: String| -> Result<CycNumber, InterchangeError> {
        parse_scalar(s, order).map_err(|e| InterchangeError::Scalar {
            context,
            message: e.to_string(),
        })
    };
    let d = doc.dim;
    let mut mult = SparseTensor3::new((d, d, d), order);
    for (pos, (i, j, k, s)) in doc.mult.iter().enumerate() {
        let v = parse(s, format!("mult[{pos}]"))?;
        mult.set((*i, *j, *k), v)
            .map_err(|e| InterchangeError::Structure(format!("mult[{pos}]: {e}")))?;
    }
    let mut comult = SparseTensor3::new((d, d, d), order);
    for (pos, (k, i, j, s)) in doc.comult.iter().enumerate() {
        let v = parse(s, format!("comult[{pos}]"))?;
        comult
            .set((*k, *i, *j), v)
            .map_err(|e| InterchangeError::Structure(format!("comult[{pos}]: {e}")))?;
    }
    if doc.unit.len() != d || doc.counit.len() != d {
        return Err(InterchangeError::Structure(
            "unit/counit length must equal dim".into(),
        ));
    }
    let unit = doc
        .unit
        .iter()
        .enumerate()
        .map(|(i, s)| parse(s, format!("unit[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let counit = doc
        .counit
        .iter()
        .enumerate()
        .map(|(i, s)| parse(s, format!("counit[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut h = FinHopfAlgebra::new(doc.name, d, order, mult, comult, unit, counit)?;
    if let Some(entries) = doc.antipode {
        if entries.len() != d * d {
            return Err(InterchangeError::Structure(
                "antipode must be a dense dim×dim array".into(),
            ));
        }
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(i, s)| parse(s, format!("antipode[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let s = FieldMatrix::new(d, d, order, parsed)
            .map_err(|e| InterchangeError::Structure(e.to_string()))?;
        h = h.with_antipode(s)?;
    }
    Ok(h)
}

pub fn read_file(path: &std::path::Path) -> Result<FinHopfAlgebra, InterchangeError> {
    let bytes = std::fs::read(path)?;
    from_bytes(&bytes)
}
