use thiserror::Error;

use crate::Side;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across parsing, table construction and
/// analysis. Positional variants carry enough context to point at the
/// offending individual, cell or axis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: no observations")]
    EmptyInput,

    #[error("empty observation set at individual {0}")]
    EmptyObservationSet(usize),

    #[error("unknown label `{label}` at individual {individual}")]
    UnknownLabel { label: String, individual: usize },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("variables cover different individual counts: {left} vs {right}")]
    IndividualCountMismatch { left: usize, right: usize },

    #[error("enumeration too large: {count} completions exceed limit {limit}")]
    EnumerationTooLarge { count: u128, limit: u64 },

    #[error("zero {side} margin at index {index}")]
    ZeroMargin { side: Side, index: usize },

    #[error("table needs at least 2 rows and 2 columns for a non-trivial axis")]
    DegenerateDimensions,

    #[error("eigensolver did not converge within {0} sweeps")]
    EigenConvergence(usize),

    #[error("{what} index {index} out of range (length {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("axis {axis} is not retained (result has {retained} axes)")]
    AxisNotRetained { axis: usize, retained: usize },

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("table shape {t_rows}x{t_cols} does not match analysis shape {a_rows}x{a_cols}")]
    ShapeMismatch {
        t_rows: usize,
        t_cols: usize,
        a_rows: usize,
        a_cols: usize,
    },

    #[error("csv parse error: {0}")]
    Csv(#[from] csv::Error),

    #[error("empty cell at data row {row}")]
    EmptyCell { row: usize },

    #[error("empty modality label at data row {row}")]
    EmptyLabel { row: usize },

    #[error("data row {row} has {got} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("survey must have exactly 2 columns, found {0}")]
    SurveyColumnCount(usize),

    #[error("table header needs at least two fields (corner + column labels)")]
    ShortTableHeader,

    #[error("invalid cell at ({row},{col}): {msg}")]
    InvalidCell { row: usize, col: usize, msg: String },

    #[error("inverted interval at ({row},{col}): {lo} > {hi}")]
    InvertedInterval {
        row: usize,
        col: usize,
        lo: u64,
        hi: u64,
    },

    #[error("invalid table structure: {0}")]
    InvalidTable(String),

    #[error("json parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid result document: {0}")]
    InvalidResult(String),

    #[error("invalid plot spec: {0}")]
    InvalidPlot(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
