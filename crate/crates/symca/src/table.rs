//! Interval contingency tables and their center tables.
//!
//! Crossing two multi-valued variables yields, per cell, the minimum and
//! maximum joint count over all single-answer completions of the data. The
//! fast path computes both bounds with two integer matrix products
//! (meet-with-meet and join-with-join); `brute_force_interval_contingency`
//! re-derives the same table by enumerating every completion pair and is
//! kept as an executable cross-check.

use crate::error::{Error, Result};
use crate::multivalued::{BinaryMatrix, MultiValuedVariable};

/// A closed integer interval `[lo, hi]` of joint counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountInterval {
    pub lo: u64,
    pub hi: u64,
}

impl CountInterval {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Exact midpoint; half-integers are representable in binary floating
    /// point, so no rounding is involved at realistic scales.
    pub fn mid(&self) -> f64 {
        (self.lo + self.hi) as f64 * 0.5
    }
}

impl std::fmt::Display for CountInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A closed real interval, used for profiles and factorial rectangles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Contingency table whose cells are count intervals. Rows are the
/// modalities of the first variable, columns those of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalTable {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    cells: Vec<Vec<CountInterval>>,
}

impl IntervalTable {
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        cells: Vec<Vec<CountInterval>>,
    ) -> Result<Self> {
        if row_labels.is_empty() || col_labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        unique_labels(&row_labels)?;
        unique_labels(&col_labels)?;
        if cells.len() != row_labels.len() {
            return Err(Error::InvalidTable(format!(
                "{} cell rows for {} row labels",
                cells.len(),
                row_labels.len()
            )));
        }
        for (i, row) in cells.iter().enumerate() {
            if row.len() != col_labels.len() {
                return Err(Error::RaggedRow {
                    row: i,
                    got: row.len(),
                    expected: col_labels.len(),
                });
            }
            for (j, cell) in row.iter().enumerate() {
                if cell.lo > cell.hi {
                    return Err(Error::InvertedInterval {
                        row: i,
                        col: j,
                        lo: cell.lo,
                        hi: cell.hi,
                    });
                }
            }
        }
        Ok(Self {
            row_labels,
            col_labels,
            cells,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn cell(&self, i: usize, j: usize) -> CountInterval {
        self.cells[i][j]
    }

    pub fn cells(&self) -> &[Vec<CountInterval>] {
        &self.cells
    }

    /// True when every cell is a point interval.
    pub fn is_degenerate(&self) -> bool {
        self.cells
            .iter()
            .all(|row| row.iter().all(|c| c.is_degenerate()))
    }

    /// Midpoint table, the input of the classic analysis.
    pub fn centers(&self) -> CenterTable {
        CenterTable {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            cells: self
                .cells
                .iter()
                .map(|row| row.iter().map(|c| c.mid()).collect())
                .collect(),
        }
    }

    /// Removes rows and columns whose center margin is zero (all cells
    /// `[0,0]`). Returns the reduced table plus the dropped labels.
    pub fn drop_empty(&self) -> Result<(IntervalTable, Vec<String>, Vec<String>)> {
        let keep_rows: Vec<usize> = (0..self.n_rows())
            .filter(|&i| self.cells[i].iter().any(|c| c.hi > 0))
            .collect();
        let keep_cols: Vec<usize> = (0..self.n_cols())
            .filter(|&j| (0..self.n_rows()).any(|i| self.cells[i][j].hi > 0))
            .collect();
        let dropped_rows: Vec<String> = (0..self.n_rows())
            .filter(|i| !keep_rows.contains(i))
            .map(|i| self.row_labels[i].clone())
            .collect();
        let dropped_cols: Vec<String> = (0..self.n_cols())
            .filter(|j| !keep_cols.contains(j))
            .map(|j| self.col_labels[j].clone())
            .collect();
        if keep_rows.is_empty() || keep_cols.is_empty() {
            return Err(Error::EmptyInput);
        }
        let table = IntervalTable::new(
            keep_rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            keep_cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            keep_rows
                .iter()
                .map(|&i| keep_cols.iter().map(|&j| self.cells[i][j]).collect())
                .collect(),
        )?;
        Ok((table, dropped_rows, dropped_cols))
    }
}

fn unique_labels(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Nonnegative real table of interval midpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterTable {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    cells: Vec<Vec<f64>>,
}

impl CenterTable {
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        cells: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if row_labels.is_empty() || col_labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        unique_labels(&row_labels)?;
        unique_labels(&col_labels)?;
        if cells.len() != row_labels.len() {
            return Err(Error::InvalidTable(format!(
                "{} cell rows for {} row labels",
                cells.len(),
                row_labels.len()
            )));
        }
        for (i, row) in cells.iter().enumerate() {
            if row.len() != col_labels.len() {
                return Err(Error::RaggedRow {
                    row: i,
                    got: row.len(),
                    expected: col_labels.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidCell {
                        row: i,
                        col: j,
                        msg: format!("cell must be a finite nonnegative number, got {v}"),
                    });
                }
            }
        }
        Ok(Self {
            row_labels,
            col_labels,
            cells,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn cell(&self, i: usize, j: usize) -> f64 {
        self.cells[i][j]
    }

    pub fn cells(&self) -> &[Vec<f64>] {
        &self.cells
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.cells.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        (0..self.n_cols())
            .map(|j| self.cells.iter().map(|row| row[j]).sum())
            .collect()
    }

    pub fn total(&self) -> f64 {
        self.cells.iter().flat_map(|r| r.iter()).sum()
    }

    pub fn transpose(&self) -> CenterTable {
        CenterTable {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            cells: (0..self.n_cols())
                .map(|j| (0..self.n_rows()).map(|i| self.cells[i][j]).collect())
                .collect(),
        }
    }

    /// Pure report on whether the table can be analysed as-is.
    pub fn validate_for_analysis(&self) -> TableDiagnostics {
        let row_sums = self.row_sums();
        let col_sums = self.col_sums();
        TableDiagnostics {
            grand_total: self.total(),
            zero_rows: (0..self.n_rows()).filter(|&i| row_sums[i] == 0.0).collect(),
            zero_cols: (0..self.n_cols()).filter(|&j| col_sums[j] == 0.0).collect(),
            rank_bound: (self.n_rows() - 1).min(self.n_cols() - 1),
        }
    }
}

/// Analysis-readiness report for a center table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableDiagnostics {
    pub grand_total: f64,
    pub zero_rows: Vec<usize>,
    pub zero_cols: Vec<usize>,
    /// Largest possible number of non-trivial axes, `min(n-1, p-1)`.
    pub rank_bound: usize,
}

impl TableDiagnostics {
    pub fn analyzable(&self) -> bool {
        self.grand_total > 0.0
            && self.zero_rows.is_empty()
            && self.zero_cols.is_empty()
            && self.rank_bound >= 1
    }

    /// Human-readable issues, empty when the table is analyzable as-is.
    pub fn issues(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.grand_total <= 0.0 {
            out.push("zero grand total".to_owned());
        }
        for &i in &self.zero_rows {
            out.push(format!("zero row margin at index {i}"));
        }
        for &j in &self.zero_cols {
            out.push(format!("zero column margin at index {j}"));
        }
        if self.rank_bound < 1 {
            out.push("no non-trivial axes".to_owned());
        }
        out
    }
}

/// Builds the interval contingency table of two multi-valued variables with
/// two exact integer matrix products: lower bounds from the meet matrices,
/// upper bounds from the join matrices.
pub fn interval_contingency(
    x: &MultiValuedVariable,
    y: &MultiValuedVariable,
) -> Result<IntervalTable> {
    if x.individuals() != y.individuals() {
        return Err(Error::IndividualCountMismatch {
            left: x.individuals(),
            right: y.individuals(),
        });
    }
    let lo = x.meet_matrix().transpose_multiply(&y.meet_matrix());
    let hi = x.join_matrix().transpose_multiply(&y.join_matrix());
    let cells = lo
        .into_iter()
        .zip(hi)
        .map(|(lr, hr)| {
            lr.into_iter()
                .zip(hr)
                .map(|(l, h)| CountInterval::new(l, h))
                .collect()
        })
        .collect();
    IntervalTable::new(x.modalities().to_vec(), y.modalities().to_vec(), cells)
}

/// Classic contingency table of one completion pair, as a plain triple-loop
/// integer product. Deliberately written out so the enumeration cross-check
/// shares nothing with the fast path.
fn completion_contingency(x: &BinaryMatrix, y: &BinaryMatrix) -> Vec<Vec<u64>> {
    let m = x.rows();
    let n = x.cols();
    let p = y.cols();
    let mut k = vec![vec![0u64; p]; n];
    for a in 0..n {
        for b in 0..p {
            let mut s = 0u64;
            for i in 0..m {
                s += (x.get(i, a) * y.get(i, b)) as u64;
            }
            k[a][b] = s;
        }
    }
    k
}

/// Exhaustive reference for [`interval_contingency`]: enumerates every pair
/// of completions, forms each classic contingency table and keeps the
/// entrywise minima and maxima.
pub fn brute_force_interval_contingency(
    x: &MultiValuedVariable,
    y: &MultiValuedVariable,
    limit: u64,
) -> Result<IntervalTable> {
    if x.individuals() != y.individuals() {
        return Err(Error::IndividualCountMismatch {
            left: x.individuals(),
            right: y.individuals(),
        });
    }
    let pairs = x.completion_count().saturating_mul(y.completion_count());
    if pairs > limit as u128 {
        return Err(Error::EnumerationTooLarge {
            count: pairs,
            limit,
        });
    }
    let n = x.modality_count();
    let p = y.modality_count();
    let mut lo: Option<Vec<Vec<u64>>> = None;
    let mut hi: Option<Vec<Vec<u64>>> = None;
    for xc in x.enumerate_completions(limit)? {
        for yc in y.enumerate_completions(limit)? {
            let k = completion_contingency(&xc, &yc);
            match (&mut lo, &mut hi) {
                (Some(lo), Some(hi)) => {
                    for a in 0..n {
                        for b in 0..p {
                            lo[a][b] = lo[a][b].min(k[a][b]);
                            hi[a][b] = hi[a][b].max(k[a][b]);
                        }
                    }
                }
                _ => {
                    lo = Some(k.clone());
                    hi = Some(k);
                }
            }
        }
    }
    // Observation sets are non-empty, so at least one pair exists.
    let lo = lo.expect("at least one completion pair");
    let hi = hi.expect("at least one completion pair");
    let cells = lo
        .into_iter()
        .zip(hi)
        .map(|(lr, hr)| {
            lr.into_iter()
                .zip(hr)
                .map(|(l, h)| CountInterval::new(l, h))
                .collect()
        })
        .collect();
    IntervalTable::new(x.modalities().to_vec(), y.modalities().to_vec(), cells)
}
