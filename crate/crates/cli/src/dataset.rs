//! Knot table rows stored as JSON lines.
//!
//! Each non-blank line is an object:
//!
//! ```json
//! {"name": "4_1", "braid": "{1,-2,1,-2}", "strands": 3, "coloring": ["-1 + t", "-1 + 2t", "0"]}
//! ```
//!
//! Optional fields are `delta`, `factors`, `coloring`, `factor_colorings`
//! (one entry per factor, `null` to skip) and `note`.

use std::fmt;
use std::path::Path;

use alexq_core::braid::parse_braid;
use alexq_core::burau::reduced_alexander;
use alexq_core::{BraidWord, LaurentPoly};
use serde::{Deserialize, Serialize};

pub const BUILTIN: &str = include_str!("../data/builtin.jsonl");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawRecord {
    pub name: String,
    pub braid: String,
    pub strands: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_colorings: Option<Vec<Option<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleRecord {
    pub name: String,
    pub braid: BraidWord,
    pub delta: Option<LaurentPoly>,
    pub factors: Vec<LaurentPoly>,
    pub expected_coloring: Option<Vec<LaurentPoly>>,
    /// Aligned with `factors`.
    pub factor_colorings: Vec<Option<Vec<LaurentPoly>>>,
    pub note: Option<String>,
    /// 1-based line in the source.
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatasetErrorKind {
    Io(String),
    Json(String),
    Braid(String),
    Polynomial { field: String, message: String },
    ColoringLength { field: String, expected: usize, found: usize },
    FactorColoringsLength { factors: usize, found: usize },
    DeltaMismatch { stated: String, computed: String },
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetError {
    pub source: String,
    pub line: usize,
    /// 1-based index among the non-blank rows.
    pub row: usize,
    pub kind: DatasetErrorKind,
}

impl DatasetError {
    /// A stated Alexander polynomial that disagrees with the braid is a failed
    /// check; everything else is malformed input.
    pub fn is_check_failure(&self) -> bool {
        matches!(self.kind, DatasetErrorKind::DeltaMismatch { .. })
    }
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{} (row {}): ", self.source, self.line, self.row)?;
        match &self.kind {
            DatasetErrorKind::Io(e) => write!(f, "cannot read dataset: {e}"),
            DatasetErrorKind::Json(e) => write!(f, "invalid JSON: {e}"),
            DatasetErrorKind::Braid(e) => write!(f, "invalid braid: {e}"),
            DatasetErrorKind::Polynomial { field, message } => write!(f, "invalid polynomial in `{field}`: {message}"),
            DatasetErrorKind::ColoringLength { field, expected, found } => {
                write!(f, "`{field}` has {found} entries, braid has {expected} strands")
            }
            DatasetErrorKind::FactorColoringsLength { factors, found } => {
                write!(f, "`factor_colorings` has {found} entries for {factors} factors")
            }
            DatasetErrorKind::DeltaMismatch { stated, computed } => {
                write!(f, "stated delta {stated} differs from computed {computed} beyond a unit")
            }
            DatasetErrorKind::Empty => f.write_str("dataset has no rows"),
        }
    }
}

impl std::error::Error for DatasetError {}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Replace every generator `σ_i^{±1}` by `σ_i^{∓1}` (mirror image), for
    /// files written in the opposite crossing convention.
    pub invert_signs: bool,
}

fn parse_poly(text: &str, field: &str) -> Result<LaurentPoly, DatasetErrorKind> {
    text.parse()
        .map_err(|e: alexq_core::Error| DatasetErrorKind::Polynomial { field: field.to_owned(), message: e.to_string() })
}

fn parse_tuple(values: &[String], field: &str, strands: usize) -> Result<Vec<LaurentPoly>, DatasetErrorKind> {
    if values.len() != strands {
        return Err(DatasetErrorKind::ColoringLength { field: field.to_owned(), expected: strands, found: values.len() });
    }
    values.iter().map(|v| parse_poly(v, field)).collect()
}

impl ExampleRecord {
    pub fn from_raw(raw: RawRecord, line: usize, opts: LoadOptions) -> Result<Self, DatasetErrorKind> {
        let mut braid = parse_braid(&raw.braid, Some(raw.strands)).map_err(|e| DatasetErrorKind::Braid(e.to_string()))?;
        if opts.invert_signs {
            braid = braid.mirror();
        }
        let n = braid.strands();
        let delta = raw.delta.as_deref().map(|d| parse_poly(d, "delta")).transpose()?;
        let factors = raw
            .factors
            .unwrap_or_default()
            .iter()
            .enumerate()
            .map(|(i, f)| parse_poly(f, &format!("factors[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let expected_coloring = raw.coloring.as_deref().map(|c| parse_tuple(c, "coloring", n)).transpose()?;
        let factor_colorings = match raw.factor_colorings {
            None => vec![None; factors.len()],
            Some(fc) if fc.len() != factors.len() => {
                return Err(DatasetErrorKind::FactorColoringsLength { factors: factors.len(), found: fc.len() })
            }
            Some(fc) => fc
                .iter()
                .enumerate()
                .map(|(i, c)| c.as_deref().map(|c| parse_tuple(c, &format!("factor_colorings[{i}]"), n)).transpose())
                .collect::<Result<Vec<_>, _>>()?,
        };
        let record = Self {
            name: raw.name,
            braid,
            delta,
            factors,
            expected_coloring,
            factor_colorings,
            note: raw.note,
            line,
        };
        record.check_delta()?;
        Ok(record)
    }

    fn check_delta(&self) -> Result<(), DatasetErrorKind> {
        let Some(stated) = &self.delta else { return Ok(()) };
        let computed = reduced_alexander(&self.braid).map_err(|e| DatasetErrorKind::Braid(e.to_string()))?;
        if stated.normalize_unit() != computed {
            return Err(DatasetErrorKind::DeltaMismatch { stated: stated.to_string(), computed: computed.to_string() });
        }
        Ok(())
    }
}

/// Parses JSON-lines text; `source` names the input in diagnostics.
pub fn parse_dataset(text: &str, source: &str, opts: LoadOptions) -> Result<Vec<ExampleRecord>, DatasetError> {
    let mut records = Vec::new();
    let mut row = 0;
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        row += 1;
        let err = |kind| DatasetError { source: source.to_owned(), line: idx + 1, row, kind };
        let raw: RawRecord = serde_json::from_str(line).map_err(|e| err(DatasetErrorKind::Json(e.to_string())))?;
        records.push(ExampleRecord::from_raw(raw, idx + 1, opts).map_err(err)?);
    }
    if records.is_empty() {
        return Err(DatasetError { source: source.to_owned(), line: 0, row: 0, kind: DatasetErrorKind::Empty });
    }
    Ok(records)
}

pub fn load_dataset(path: &Path, opts: LoadOptions) -> Result<Vec<ExampleRecord>, DatasetError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| DatasetError { source: source.clone(), line: 0, row: 0, kind: DatasetErrorKind::Io(e.to_string()) })?;
    parse_dataset(&text, &source, opts)
}

pub fn builtin() -> Vec<ExampleRecord> {
    parse_dataset(BUILTIN, "<builtin>", LoadOptions::default()).expect("bundled dataset is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_rows() {
        let rows = builtin();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["3_1", "8_15", "8_20", "L9n27"]);
        assert_eq!(rows[1].factors.len(), 2);
        assert!(rows[2].note.is_some());
    }

    #[test]
    fn diagnostics_name_the_line() {
        let text = "{\"name\":\"a\",\"braid\":\"{1,1,1}\",\"strands\":2}\n\n{\"name\":\"b\",\"braid\":\"{1,5}\",\"strands\":3}\n";
        let err = parse_dataset(text, "x.jsonl", LoadOptions::default()).unwrap_err();
        assert_eq!((err.line, err.row), (3, 2));
        assert!(matches!(err.kind, DatasetErrorKind::Braid(_)));
        assert!(err.to_string().starts_with("x.jsonl:3 (row 2): invalid braid"));
    }

    #[test]
    fn rejects_bad_rows() {
        let opts = LoadOptions::default();
        let bad = [
            r#"{"name":"a","braid":"{1,1,1}","strands":2,"coloring":["1"]}"#,
            r#"{"name":"a","braid":"{1,1,1}","strands":2,"delta":"1+t"}"#,
            r#"{"name":"a","braid":"{1,1,1}","strands":2,"delta":"1+"}"#,
            r#"{"name":"a","braid":"{1,1,1}","strands":2,"colour":["1","0"]}"#,
            r#"{"name":"a","braid":"{1,1,1}","strands":2,"factors":["t^2-t+1"],"factor_colorings":[]}"#,
            "",
        ];
        let kinds: Vec<_> = bad.iter().map(|t| parse_dataset(t, "-", opts).unwrap_err().kind).collect();
        assert!(matches!(kinds[0], DatasetErrorKind::ColoringLength { expected: 2, found: 1, .. }));
        assert!(matches!(kinds[1], DatasetErrorKind::DeltaMismatch { .. }));
        assert!(matches!(kinds[2], DatasetErrorKind::Polynomial { .. }));
        assert!(matches!(kinds[3], DatasetErrorKind::Json(_)));
        assert!(matches!(kinds[4], DatasetErrorKind::FactorColoringsLength { factors: 1, found: 0 }));
        assert_eq!(kinds[5], DatasetErrorKind::Empty);
    }

    #[test]
    fn delta_matches_up_to_unit_and_signs_invert() {
        let text = r#"{"name":"m","braid":"{1,1,1}","strands":2,"delta":"-t^-3 + t^-2 - t^-1"}"#;
        let rows = parse_dataset(text, "-", LoadOptions { invert_signs: true }).unwrap();
        assert_eq!(rows[0].braid.letters(), &[-1, -1, -1]);
    }

    #[test]
    fn raw_records_round_trip() {
        for line in BUILTIN.lines().filter(|l| !l.trim().is_empty()) {
            let raw: RawRecord = serde_json::from_str(line).unwrap();
            let again: RawRecord = serde_json::from_str(&serde_json::to_string(&raw).unwrap()).unwrap();
            assert_eq!(raw, again);
        }
    }
}
