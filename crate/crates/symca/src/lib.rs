//! Correspondence analysis for multiple-selection categorical data.
//!
//! When respondents may tick several answers, the usual contingency table
//! is not unique: each combination of single answers yields its own table.
//! This crate summarizes all of them at once as an *interval* contingency
//! table (entrywise minimum and maximum joint counts, computed with two
//! integer matrix products), runs classic correspondence analysis on the
//! interval midpoints, and projects each modality's feasible profiles as a
//! rectangle per factorial axis instead of a single point. Every closed
//! form is paired with a brute-force enumeration that re-derives it on
//! small instances; see [`verify`].
//!
//! The pipeline in one expression:
//!
//! ```
//! use symca::{interval_contingency, parse_observations, symca};
//!
//! let eyes = parse_observations(
//!     "eyes",
//!     &[vec!["green", "blue"], vec!["brown"], vec!["green"]],
//!     None::<&[&str]>,
//! )
//! .unwrap();
//! let hair = parse_observations(
//!     "hair",
//!     &[vec!["black"], vec!["black"], vec!["blond"]],
//!     None::<&[&str]>,
//! )
//! .unwrap();
//! let table = interval_contingency(&eyes, &hair).unwrap();
//! let result = symca(&table, 2).unwrap();
//! assert_eq!(result.ca.n_axes, result.ca.eigenvalues.len());
//! ```

// Index-based loops mirror the subscripts of the underlying formulas.
#![allow(clippy::needless_range_loop)]

pub mod ca;
pub mod cli;
mod error;
pub mod io;
mod linalg;
pub mod multivalued;
pub mod plot;
pub mod projection;
pub mod table;
pub mod verify;

pub use ca::{
    chi2_col_distance, chi2_row_distance, column_profiles, correspondence_analysis, row_profiles,
    supplementary_projection, total_inertia, CaResult,
};
pub use error::{Error, Result};
pub use io::{
    read_interval_table, read_result_json, read_survey_csv, write_interval_table_json,
    write_result_doc, write_result_json, ModalitySummary, ResultDoc, TableFormat,
};
pub use multivalued::{parse_observations, BinaryMatrix, Completions, MultiValuedVariable};
pub use plot::{render_principal_plane_svg, render_result_svg, PlotSpec};
pub use projection::{
    column_rectangle, interval_profiles, row_rectangle, symca, vertex_projection_oracle,
    IntervalProfileMatrix, SymcaResult, DEFAULT_VERTEX_LIMIT,
};
pub use table::{
    brute_force_interval_contingency, interval_contingency, CenterTable, CountInterval, Interval,
    IntervalTable, TableDiagnostics,
};

/// Which side of the table an operation works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Row,
    Column,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Row => write!(f, "row"),
            Side::Column => write!(f, "column"),
        }
    }
}
