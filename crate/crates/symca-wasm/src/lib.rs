//! Browser-facing wrappers around the symca pipeline.
//!
//! Three operations cover the interactive demo: build an interval table
//! from a survey, analyze a table into the result document, and render the
//! principal plane as SVG. Everything crosses the boundary as strings
//! (JSON/CSV in, JSON/SVG out), so the page needs no extra glue. The
//! `imp` module holds the target-independent logic; the exported functions
//! only translate errors into JS exceptions.

use wasm_bindgen::prelude::*;

mod imp {
    use symca::{
        interval_contingency, read_interval_table, read_survey_csv,
        render_principal_plane_svg, symca as run_symca, write_interval_table_json,
        write_result_json, PlotSpec, Result, TableFormat,
    };

    fn detect_format(text: &str) -> TableFormat {
        if text.trim_start().starts_with('{') {
            TableFormat::Json
        } else {
            TableFormat::Csv
        }
    }

    pub fn table_from_survey(survey_csv: &str) -> Result<String> {
        let (x, y) = read_survey_csv(survey_csv.as_bytes())?;
        let table = interval_contingency(&x, &y)?;
        Ok(write_interval_table_json(&table))
    }

    pub fn analyze_table(table_text: &str, axes: usize) -> Result<String> {
        let table = read_interval_table(table_text.as_bytes(), detect_format(table_text))?;
        let requested = if axes == 0 { usize::MAX } else { axes };
        let result = run_symca(&table, requested)?;
        Ok(write_result_json(&result))
    }

    pub fn render_plane(
        table_text: &str,
        axis_a: usize,
        axis_b: usize,
        width: u32,
        height: u32,
    ) -> Result<String> {
        let table = read_interval_table(table_text.as_bytes(), detect_format(table_text))?;
        let result = run_symca(&table, usize::MAX)?;
        let spec = PlotSpec {
            axis_a,
            axis_b,
            width,
            height,
            ..PlotSpec::default()
        };
        render_principal_plane_svg(&result, &spec)
    }
}

/// Survey CSV (two columns, selections joined by `|`) to interval table
/// JSON.
#[wasm_bindgen]
pub fn table_from_survey(survey_csv: &str) -> Result<String, JsError> {
    imp::table_from_survey(survey_csv).map_err(into_js)
}

/// Full analysis of an interval table (JSON or CSV, auto-detected).
/// `axes = 0` retains every non-trivial axis.
#[wasm_bindgen]
pub fn analyze_table(table_text: &str, axes: usize) -> Result<String, JsError> {
    imp::analyze_table(table_text, axes).map_err(into_js)
}

/// Renders the plane spanned by two retained axes of an interval table.
#[wasm_bindgen]
pub fn render_plane(
    table_text: &str,
    axis_a: usize,
    axis_b: usize,
    width: u32,
    height: u32,
) -> Result<String, JsError> {
    imp::render_plane(table_text, axis_a, axis_b, width, height).map_err(into_js)
}

fn into_js(e: symca::Error) -> JsError {
    JsError::new(&e.to_string())
}
