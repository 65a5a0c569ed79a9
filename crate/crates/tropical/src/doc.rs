//! JSON document format for the CLI.
//!
//! Schema: `{"kind": "...", "carrier": "maxtimes" | "minplus",
//! "entries": [[...]]}`.  Max-times payloads are finite nonnegative
//! numbers; min-plus payloads are finite numbers or the string `"inf"`
//! (JSON has no infinity literal).  Numbers are emitted with 17
//! significant digits so every document round-trips bit-exactly, and the
//! emitter is deterministic byte for byte.

use std::fmt;

use serde_json::Value;

use crate::error::TropError;
use crate::matrix::TropMatrix;
use crate::vector::TropVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Vector,
    Matrix,
    Generators,
    Configuration,
}

impl DocKind {
    fn name(self) -> &'static str {
        match self {
            DocKind::Vector => "vector",
            DocKind::Matrix => "matrix",
            DocKind::Generators => "generators",
            DocKind::Configuration => "configuration",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "vector" => Some(DocKind::Vector),
            "matrix" => Some(DocKind::Matrix),
            "generators" => Some(DocKind::Generators),
            "configuration" => Some(DocKind::Configuration),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    MaxTimes,
    MinPlus,
}

impl Carrier {
    fn name(self) -> &'static str {
        match self {
            Carrier::MaxTimes => "maxtimes",
            Carrier::MinPlus => "minplus",
        }
    }
}

/// One-line diagnostic for malformed documents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError(pub String);

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocError {}

impl From<TropError> for DocError {
    fn from(e: TropError) -> Self {
        DocError(e.to_string())
    }
}

/// An in-memory CLI document: a rectangular numeric payload tagged with
/// its kind and carrier.  Min-plus infinity is stored as `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub kind: DocKind,
    pub carrier: Carrier,
    pub entries: Vec<Vec<f64>>,
}

impl Document {
    pub fn new(kind: DocKind, carrier: Carrier, entries: Vec<Vec<f64>>) -> Result<Self, DocError> {
        let doc = Document { kind, carrier, entries };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), DocError> {
        if self.entries.is_empty() || self.entries[0].is_empty() {
            return Err(DocError("entries must be a nonempty rectangular array".into()));
        }
        let n = self.entries[0].len();
        for row in &self.entries {
            if row.len() != n {
                return Err(DocError("entries must be rectangular".into()));
            }
            for &x in row {
                match self.carrier {
                    Carrier::MaxTimes if !(x.is_finite() && x >= 0.0) => {
                        return Err(DocError(format!(
                            "maxtimes payload must be finite and nonnegative, got {x}"
                        )));
                    }
                    Carrier::MinPlus if !(x.is_finite() || x == f64::INFINITY) => {
                        return Err(DocError(format!(
                            "minplus payload must be finite or \"inf\", got {x}"
                        )));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| DocError(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| DocError("document must be a JSON object".into()))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .and_then(DocKind::parse)
            .ok_or_else(|| {
                DocError("\"kind\" must be vector|matrix|generators|configuration".into())
            })?;
        let carrier = match obj.get("carrier").and_then(Value::as_str) {
            Some("maxtimes") => Carrier::MaxTimes,
            Some("minplus") => Carrier::MinPlus,
            _ => return Err(DocError("\"carrier\" must be maxtimes or minplus".into())),
        };
        let rows = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| DocError("\"entries\" must be an array of arrays".into()))?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| DocError("\"entries\" must be an array of arrays".into()))?;
            let mut parsed = Vec::with_capacity(cells.len());
            for cell in cells {
                parsed.push(parse_number(cell, carrier)?);
            }
            entries.push(parsed);
        }
        Document::new(kind, carrier, entries)
    }

    /// Deterministic serialization with fixed key order and 17
    /// significant digits.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\"kind\":\"");
        out.push_str(self.kind.name());
        out.push_str("\",\"carrier\":\"");
        out.push_str(self.carrier.name());
        out.push_str("\",\"entries\":[");
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for (j, &x) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                if x == f64::INFINITY {
                    out.push_str("\"inf\"");
                } else {
                    out.push_str(&format_sig17(x));
                }
            }
            out.push(']');
        }
        out.push_str("]}");
        out
    }

    pub fn vector(v: &TropVector) -> Document {
        Document {
            kind: DocKind::Vector,
            carrier: Carrier::MaxTimes,
            entries: vec![v.coords().to_vec()],
        }
    }

    pub fn matrix(m: &TropMatrix) -> Document {
        Document {
            kind: DocKind::Matrix,
            carrier: Carrier::MaxTimes,
            entries: m.row_slices().map(<[f64]>::to_vec).collect(),
        }
    }

    pub fn to_vector(&self) -> Result<TropVector, DocError> {
        if self.kind != DocKind::Vector || self.entries.len() != 1 {
            return Err(DocError("expected a vector document with one row".into()));
        }
        self.require_maxtimes()?;
        Ok(TropVector::new(self.entries[0].clone())?)
    }

    pub fn to_matrix(&self) -> Result<TropMatrix, DocError> {
        if self.kind != DocKind::Matrix {
            return Err(DocError("expected a matrix document".into()));
        }
        self.require_maxtimes()?;
        Ok(TropMatrix::from_rows(self.entries.clone())?)
    }

    pub fn to_generators(&self) -> Result<Vec<TropVector>, DocError> {
        if self.kind != DocKind::Generators {
            return Err(DocError("expected a generators document".into()));
        }
        self.require_maxtimes()?;
        self.entries
            .iter()
            .map(|row| TropVector::new(row.clone()).map_err(DocError::from))
            .collect()
    }

    pub fn configuration_rows(&self) -> Result<&[Vec<f64>], DocError> {
        if self.kind != DocKind::Configuration {
            return Err(DocError("expected a configuration document".into()));
        }
        self.require_maxtimes()?;
        Ok(&self.entries)
    }

    fn require_maxtimes(&self) -> Result<(), DocError> {
        if self.carrier != Carrier::MaxTimes {
            return Err(DocError("this operation needs a maxtimes document".into()));
        }
        Ok(())
    }
}

fn parse_number(cell: &Value, carrier: Carrier) -> Result<f64, DocError> {
    match cell {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| DocError(format!("unrepresentable number {n}"))),
        Value::String(s) if s == "inf" && carrier == Carrier::MinPlus => Ok(f64::INFINITY),
        other => Err(DocError(format!("bad payload entry {other}"))),
    }
}

/// A floating-point number with 17 significant digits, enough to make the
/// decimal round trip exact.
pub fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let doc = Document::new(
            DocKind::Matrix,
            Carrier::MaxTimes,
            vec![vec![0.0, 1.0 / 3.0], vec![0.5, 2.0]],
        )
        .unwrap();
        let text = doc.to_json();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn minplus_infinity() {
        let doc = Document::new(
            DocKind::Vector,
            Carrier::MinPlus,
            vec![vec![1.5, f64::INFINITY]],
        )
        .unwrap();
        let text = doc.to_json();
        assert!(text.contains("\"inf\""));
        assert_eq!(Document::parse(&text).unwrap(), doc);
    }

    #[test]
    fn rejections() {
        assert!(Document::parse("not json").is_err());
        assert!(Document::parse("{\"kind\":\"nope\",\"carrier\":\"maxtimes\",\"entries\":[[1]]}").is_err());
        assert!(Document::parse("{\"kind\":\"vector\",\"carrier\":\"maxtimes\",\"entries\":[[-1]]}").is_err());
        assert!(Document::parse("{\"kind\":\"vector\",\"carrier\":\"maxtimes\",\"entries\":[[\"inf\"]]}").is_err());
        assert!(Document::parse("{\"kind\":\"matrix\",\"carrier\":\"maxtimes\",\"entries\":[[1,2],[3]]}").is_err());
        assert!(Document::parse("{\"kind\":\"vector\",\"carrier\":\"minplus\",\"entries\":[[\"inf\",0]]}").is_ok());
    }

    #[test]
    fn conversions() {
        let m = Document::parse("{\"kind\":\"matrix\",\"carrier\":\"maxtimes\",\"entries\":[[1,0],[0,1]]}")
            .unwrap();
        assert_eq!(m.to_matrix().unwrap(), TropMatrix::identity(2));
        assert!(m.to_vector().is_err());

        let g = Document::parse(
            "{\"kind\":\"generators\",\"carrier\":\"maxtimes\",\"entries\":[[1,0,1],[0,1,1]]}",
        )
        .unwrap();
        assert_eq!(g.to_generators().unwrap().len(), 2);
    }
}
