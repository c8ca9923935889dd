use std::io::Read;

use serde::Deserialize;
use tetmedial_core::SixEdgeLengths;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One tetrahedron to report on. Lengths are kept raw so that invalid values
/// become a per-record error rather than a parse failure.
#[derive(Debug, Clone, PartialEq)]
pub struct InputRecord {
    pub id: String,
    pub edges: [f64; 6],
}

impl InputRecord {
    pub fn lengths(&self) -> Result<SixEdgeLengths, tetmedial_core::Error> {
        SixEdgeLengths::from_array(self.edges)
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid header {found:?}: expected `a,b,c,d,e,f` or `id,a,b,c,d,e,f`")]
    Header { found: Vec<String> },

    #[error("record {record} (line {line}): expected {expected} fields, found {found}")]
    Arity {
        record: usize,
        line: u64,
        expected: usize,
        found: usize,
    },

    #[error("record {record} (line {line}): field `{field}` is not a number: {value:?}")]
    Number {
        record: usize,
        line: u64,
        field: &'static str,
        value: String,
    },

    #[error("record {record}: {source}")]
    Csv {
        record: usize,
        #[source]
        source: csv::Error,
    },

    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

const FIELDS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Reads all records from `reader`. Record order is preserved; ids default
/// to the 1-based record index.
pub fn parse_records<R: Read>(reader: R, format: Format) -> Result<Vec<InputRecord>, ParseError> {
    match format {
        Format::Csv => parse_csv(reader),
        Format::Json => parse_json(reader),
    }
}

fn parse_csv<R: Read>(reader: R) -> Result<Vec<InputRecord>, ParseError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);
    let header = rdr
        .headers()
        .map_err(|source| ParseError::Csv { record: 0, source })?
        .clone();
    let fields: Vec<&str> = header.iter().collect();
    let has_id = if fields == FIELDS {
        false
    } else if fields.first() == Some(&"id") && fields[1..] == FIELDS {
        true
    } else {
        return Err(ParseError::Header {
            found: fields.iter().map(|s| s.to_string()).collect(),
        });
    };
    let width = if has_id { 7 } else { 6 };

    let mut out = Vec::new();
    for (k, row) in rdr.records().enumerate() {
        let record = k + 1;
        let row = row.map_err(|source| ParseError::Csv { record, source })?;
        let line = row.position().map_or(0, |p| p.line());
        if row.len() != width {
            return Err(ParseError::Arity {
                record,
                line,
                expected: width,
                found: row.len(),
            });
        }
        let offset = usize::from(has_id);
        let mut edges = [0.0; 6];
        for (slot, (name, raw)) in edges
            .iter_mut()
            .zip(FIELDS.iter().zip(row.iter().skip(offset)))
        {
            *slot = raw.trim().parse().map_err(|_| ParseError::Number {
                record,
                line,
                field: name,
                value: raw.to_string(),
            })?;
        }
        let id = match has_id {
            true if !row[0].is_empty() => row[0].to_string(),
            _ => record.to_string(),
        };
        out.push(InputRecord { id, edges });
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRecord {
    id: Option<String>,
    edges: [f64; 6],
}

fn parse_json<R: Read>(reader: R) -> Result<Vec<InputRecord>, ParseError> {
    let raw: Vec<JsonRecord> = serde_json::from_reader(reader).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(raw
        .into_iter()
        .enumerate()
        .map(|(k, r)| InputRecord {
            id: r.id.unwrap_or_else(|| (k + 1).to_string()),
            edges: r.edges,
        })
        .collect())
}
