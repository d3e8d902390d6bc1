//! File formats: survey CSV, interval-table CSV/JSON, and the canonical
//! result document.
//!
//! Readers reject malformed input with positional messages and never return
//! partial data. The result writer renders numbers with 15 significant
//! digits and sorted keys, so serialize-parse-serialize is byte-stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multivalued::{parse_observations, MultiValuedVariable};
use crate::projection::SymcaResult;
use crate::table::{CountInterval, IntervalTable};

/// Supported on-disk encodings for interval tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    /// Header row of column labels, row label first on each line, cells as
    /// `lo:hi`.
    Csv,
    /// `{row_labels, col_labels, cells}` with cells as `[lo, hi]` pairs.
    Json,
}

/// Reads a two-column survey where each cell lists the selected modalities
/// joined by `|`. Returns one variable per column, observed on the same
/// individuals, with lexicographically sorted vocabularies.
pub fn read_survey_csv(bytes: &[u8]) -> Result<(MultiValuedVariable, MultiValuedVariable)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let headers = reader.headers()?.clone();
    if headers.len() != 2 {
        return Err(Error::SurveyColumnCount(headers.len()));
    }
    let mut left: Vec<Vec<String>> = Vec::new();
    let mut right: Vec<Vec<String>> = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record?;
        let row = idx + 1; // 1-based data row for messages
        if record.len() != 2 {
            return Err(Error::RaggedRow {
                row,
                got: record.len(),
                expected: 2,
            });
        }
        for (cell, out) in record.iter().zip([&mut left, &mut right]) {
            if cell.is_empty() {
                return Err(Error::EmptyCell { row });
            }
            let labels: Vec<String> = cell.split('|').map(|l| l.trim().to_owned()).collect();
            if labels.iter().any(|l| l.is_empty()) {
                return Err(Error::EmptyLabel { row });
            }
            out.push(labels);
        }
    }
    if left.is_empty() {
        return Err(Error::EmptyInput);
    }
    let x = parse_observations(&headers[0], &left, None::<&[&str]>)?;
    let y = parse_observations(&headers[1], &right, None::<&[&str]>)?;
    Ok((x, y))
}

fn parse_count(raw: &str, row: usize, col: usize) -> Result<u64> {
    raw.trim().parse().map_err(|_| Error::InvalidCell {
        row,
        col,
        msg: format!("invalid count `{raw}`"),
    })
}

fn read_interval_table_csv(bytes: &[u8]) -> Result<IntervalTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r?,
        None => return Err(Error::EmptyInput),
    };
    if header.len() < 2 {
        return Err(Error::ShortTableHeader);
    }
    let col_labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let mut row_labels = Vec::new();
    let mut cells = Vec::new();
    for (i, record) in records.enumerate() {
        let record = record?;
        if record.len() != header.len() {
            return Err(Error::RaggedRow {
                row: i,
                got: record.len(),
                expected: header.len(),
            });
        }
        row_labels.push(record[0].to_owned());
        let mut row = Vec::with_capacity(col_labels.len());
        for (j, cell) in record.iter().skip(1).enumerate() {
            let (lo_raw, hi_raw) = cell.split_once(':').ok_or_else(|| Error::InvalidCell {
                row: i,
                col: j,
                msg: format!("expected `lo:hi`, got `{cell}`"),
            })?;
            let lo = parse_count(lo_raw, i, j)?;
            let hi = parse_count(hi_raw, i, j)?;
            if lo > hi {
                return Err(Error::InvertedInterval {
                    row: i,
                    col: j,
                    lo,
                    hi,
                });
            }
            row.push(CountInterval::new(lo, hi));
        }
        cells.push(row);
    }
    if row_labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    IntervalTable::new(row_labels, col_labels, cells)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    cells: Vec<Vec<(u64, u64)>>,
}

fn read_interval_table_json(bytes: &[u8]) -> Result<IntervalTable> {
    let raw: RawTable = serde_json::from_slice(bytes)?;
    if raw.cells.len() != raw.row_labels.len() {
        return Err(Error::InvalidTable(format!(
            "{} cell rows for {} row labels",
            raw.cells.len(),
            raw.row_labels.len()
        )));
    }
    let mut cells = Vec::with_capacity(raw.cells.len());
    for (i, row) in raw.cells.into_iter().enumerate() {
        if row.len() != raw.col_labels.len() {
            return Err(Error::RaggedRow {
                row: i,
                got: row.len(),
                expected: raw.col_labels.len(),
            });
        }
        let mut out = Vec::with_capacity(row.len());
        for (j, (lo, hi)) in row.into_iter().enumerate() {
            if lo > hi {
                return Err(Error::InvertedInterval {
                    row: i,
                    col: j,
                    lo,
                    hi,
                });
            }
            out.push(CountInterval::new(lo, hi));
        }
        cells.push(out);
    }
    IntervalTable::new(raw.row_labels, raw.col_labels, cells)
}

/// Parses an interval table in the requested format.
pub fn read_interval_table(bytes: &[u8], format: TableFormat) -> Result<IntervalTable> {
    match format {
        TableFormat::Csv => read_interval_table_csv(bytes),
        TableFormat::Json => read_interval_table_json(bytes),
    }
}

/// Serializes an interval table to its JSON form (pretty-printed,
/// deterministic field order).
pub fn write_interval_table_json(t: &IntervalTable) -> String {
    let raw = RawTable {
        row_labels: t.row_labels().to_vec(),
        col_labels: t.col_labels().to_vec(),
        cells: t
            .cells()
            .iter()
            .map(|row| row.iter().map(|c| (c.lo, c.hi)).collect())
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("table serialization cannot fail");
    s.push('\n');
    s
}

/// Flat, order-stable view of an analysis result: per modality, the center
/// coordinate and the rectangle bounds on every retained axis.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDoc {
    pub cols: Vec<ModalitySummary>,
    pub eigenvalues: Vec<f64>,
    pub inertia_share: Vec<f64>,
    pub rows: Vec<ModalitySummary>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModalitySummary {
    pub coords: Vec<f64>,
    pub label: String,
    pub rect_hi: Vec<f64>,
    pub rect_lo: Vec<f64>,
}

impl SymcaResult {
    /// Flattens the result into its document form.
    pub fn to_doc(&self) -> ResultDoc {
        let axes = self.ca.n_axes;
        let rows = (0..self.ca.n_rows)
            .map(|i| ModalitySummary {
                coords: (0..axes).map(|a| self.ca.row_coords[a][i]).collect(),
                label: self.ca.row_labels[i].clone(),
                rect_hi: (0..axes).map(|a| self.row_rect[a][i].hi).collect(),
                rect_lo: (0..axes).map(|a| self.row_rect[a][i].lo).collect(),
            })
            .collect();
        let cols = (0..self.ca.n_cols)
            .map(|j| ModalitySummary {
                coords: (0..axes).map(|a| self.ca.col_coords[a][j]).collect(),
                label: self.ca.col_labels[j].clone(),
                rect_hi: (0..axes).map(|a| self.col_rect[a][j].hi).collect(),
                rect_lo: (0..axes).map(|a| self.col_rect[a][j].lo).collect(),
            })
            .collect();
        ResultDoc {
            cols,
            eigenvalues: self.ca.eigenvalues.clone(),
            inertia_share: self.ca.inertia_share.clone(),
            rows,
        }
    }
}

/// 15 significant digits, scientific notation; zero is rendered bare so
/// negative zero cannot leak into the output.
fn fmt_sig15(x: f64) -> String {
    if x == 0.0 {
        "0".to_owned()
    } else {
        format!("{x:.14e}")
    }
}

fn push_number_array(out: &mut String, values: &[f64]) {
    out.push('[');
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&fmt_sig15(*v));
    }
    out.push(']');
}

fn push_modalities(out: &mut String, items: &[ModalitySummary]) {
    out.push('[');
    for (k, m) in items.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str("{\"coords\":");
        push_number_array(out, &m.coords);
        out.push_str(",\"label\":");
        out.push_str(&serde_json::to_string(&m.label).expect("string serialization"));
        out.push_str(",\"rect_hi\":");
        push_number_array(out, &m.rect_hi);
        out.push_str(",\"rect_lo\":");
        push_number_array(out, &m.rect_lo);
        out.push('}');
    }
    out.push(']');
}

/// Canonical JSON for a result document: keys sorted, numbers at 15
/// significant digits, byte-identical for identical inputs.
pub fn write_result_doc(doc: &ResultDoc) -> String {
    let mut out = String::new();
    out.push_str("{\"cols\":");
    push_modalities(&mut out, &doc.cols);
    out.push_str(",\"eigenvalues\":");
    push_number_array(&mut out, &doc.eigenvalues);
    out.push_str(",\"inertia_share\":");
    push_number_array(&mut out, &doc.inertia_share);
    out.push_str(",\"rows\":");
    push_modalities(&mut out, &doc.rows);
    out.push_str("}\n");
    out
}

/// Canonical JSON for an analysis result.
pub fn write_result_json(r: &SymcaResult) -> String {
    write_result_doc(&r.to_doc())
}

/// Parses and structurally validates a result document.
pub fn read_result_json(bytes: &[u8]) -> Result<ResultDoc> {
    let doc: ResultDoc = serde_json::from_slice(bytes)?;
    let axes = doc.eigenvalues.len();
    if doc.inertia_share.len() != axes {
        return Err(Error::InvalidResult(format!(
            "{} inertia shares for {} eigenvalues",
            doc.inertia_share.len(),
            axes
        )));
    }
    for (what, items) in [("row", &doc.rows), ("column", &doc.cols)] {
        for m in items {
            if m.coords.len() != axes || m.rect_lo.len() != axes || m.rect_hi.len() != axes {
                return Err(Error::InvalidResult(format!(
                    "{what} `{}` does not cover {axes} axes",
                    m.label
                )));
            }
            for a in 0..axes {
                if m.rect_lo[a] > m.rect_hi[a] {
                    return Err(Error::InvalidResult(format!(
                        "{what} `{}` has an inverted rectangle on axis {a}",
                        m.label
                    )));
                }
            }
        }
    }
    Ok(doc)
}
