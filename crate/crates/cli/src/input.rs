//! Matrix files: bare CSV or a JSON document.
//!
//! CSV: one row per line, comma-separated entries, no header. Blank lines
//! are ignored. JSON: `{"rows": n, "cols": k, "domain": "int", "data": [[..], ..]}`
//! with entries given as strings or numbers.

use std::fs;
use std::path::Path;

use cullis_core::{ApproxReal, Domain, ExactInteger, ExactRational, Matrix, Ring};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed matrix document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("row {row}, column {col}: {source}")]
    Entry {
        row: usize,
        col: usize,
        #[source]
        source: cullis_core::Error,
    },
    #[error("entry at row {row}, column {col} must be a string or number")]
    EntryType { row: usize, col: usize },
    #[error("document declares {declared:?} but data is {actual:?}")]
    Shape {
        declared: (usize, usize),
        actual: (usize, usize),
    },
    #[error("document domain {document} conflicts with --scalar {flag}")]
    DomainConflict { document: Domain, flag: Domain },
    #[error("unknown domain {0:?}")]
    UnknownDomain(String),
    #[error(transparent)]
    Matrix(#[from] cullis_core::Error),
}

/// The structured input document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    #[serde(default)]
    pub domain: Option<String>,
    pub data: Vec<Vec<serde_json::Value>>,
}

/// A matrix whose scalar domain was chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Int(Matrix<ExactInteger>),
    Rational(Matrix<ExactRational>),
    Float(Matrix<ApproxReal>),
}

impl AnyMatrix {
    pub fn domain(&self) -> Domain {
        match self {
            AnyMatrix::Int(_) => Domain::Int,
            AnyMatrix::Rational(_) => Domain::Rational,
            AnyMatrix::Float(_) => Domain::Float,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Int(m) => m.shape(),
            AnyMatrix::Rational(m) => m.shape(),
            AnyMatrix::Float(m) => m.shape(),
        }
    }
}

fn build<T: Ring>(cells: &[Vec<String>]) -> Result<Matrix<T>, InputError> {
    let rows = cells
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, text)| {
                    T::parse(text).map_err(|source| InputError::Entry {
                        row: i + 1,
                        col: j + 1,
                        source,
                    })
                })
                .collect::<Result<Vec<T>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows)?)
}

/// Parses a grid of entry texts under `domain`.
pub fn matrix_from_cells(cells: &[Vec<String>], domain: Domain) -> Result<AnyMatrix, InputError> {
    Ok(match domain {
        Domain::Int => AnyMatrix::Int(build(cells)?),
        Domain::Rational => AnyMatrix::Rational(build(cells)?),
        Domain::Float => AnyMatrix::Float(build(cells)?),
    })
}

pub fn parse_csv(text: &str, domain: Domain) -> Result<AnyMatrix, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut cells = Vec::new();
    for record in reader.records() {
        let record = record?;
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        cells.push(record.iter().map(str::to_owned).collect());
    }
    matrix_from_cells(&cells, domain)
}

pub fn parse_document(text: &str, flag: Option<Domain>) -> Result<AnyMatrix, InputError> {
    let doc: MatrixDocument = serde_json::from_str(text)?;
    let declared = doc
        .domain
        .as_deref()
        .map(|d| {
            d.parse::<Domain>()
                .map_err(|_| InputError::UnknownDomain(d.to_owned()))
        })
        .transpose()?;
    let domain = match (declared, flag) {
        (Some(d), Some(f)) if d != f => {
            return Err(InputError::DomainConflict {
                document: d,
                flag: f,
            })
        }
        (Some(d), _) => d,
        (None, Some(f)) => f,
        (None, None) => Domain::Int,
    };
    let actual = (doc.data.len(), doc.data.first().map_or(0, Vec::len));
    if actual != (doc.rows, doc.cols) || doc.data.iter().any(|r| r.len() != doc.cols) {
        return Err(InputError::Shape {
            declared: (doc.rows, doc.cols),
            actual,
        });
    }
    let cells = doc
        .data
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| match v {
                    serde_json::Value::String(s) => Ok(s.clone()),
                    serde_json::Value::Number(n) => Ok(n.to_string()),
                    _ => Err(InputError::EntryType {
                        row: i + 1,
                        col: j + 1,
                    }),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    matrix_from_cells(&cells, domain)
}

/// Reads a matrix file. Files whose first non-blank character is `{` are
/// treated as JSON documents, anything else as CSV.
pub fn read_matrix(path: &Path, flag: Option<Domain>) -> Result<AnyMatrix, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if text.trim_start().starts_with('{') {
        parse_document(&text, flag)
    } else {
        parse_csv(&text, flag.unwrap_or(Domain::Int))
    }
}
