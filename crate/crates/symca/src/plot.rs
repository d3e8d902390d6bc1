//! Deterministic SVG rendering of the principal plane.
//!
//! Row and column modalities are drawn as rectangles spanning their
//! projection intervals on the two chosen axes; a modality with no slack on
//! either axis collapses to a fixed-size point marker so it stays visible.
//! Element order, attribute order and number formatting are all fixed, so
//! identical inputs produce identical bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::io::{ModalitySummary, ResultDoc};
use crate::projection::SymcaResult;

/// Styling and geometry for [`render_principal_plane_svg`].
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// Horizontal axis (index into the retained axes).
    pub axis_a: usize,
    /// Vertical axis; must differ from `axis_a`.
    pub axis_b: usize,
    pub width: u32,
    pub height: u32,
    /// Blank border around the drawing area, in pixels.
    pub margin: u32,
    pub row_color: String,
    pub row_opacity: f64,
    pub col_color: String,
    pub col_opacity: f64,
    pub font_size: u32,
    /// Decimal places for pixel coordinates in the output.
    pub decimals: usize,
}

impl Default for PlotSpec {
    fn default() -> Self {
        Self {
            axis_a: 0,
            axis_b: 1,
            width: 800,
            height: 600,
            margin: 60,
            row_color: "#d62728".to_owned(),
            row_opacity: 0.35,
            col_color: "#1f77b4".to_owned(),
            col_opacity: 0.35,
            font_size: 12,
            decimals: 2,
        }
    }
}

/// Width below which a projection interval counts as a point (matches the
/// tolerance used for the degenerate-table checks).
const POINT_WIDTH: f64 = 1e-12;
/// Radius of the point marker: a 3-pixel dot.
const MARKER_RADIUS: f64 = 1.5;

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

struct Frame {
    xmin: f64,
    ymin: f64,
    sx: f64,
    sy: f64,
    height: f64,
    margin: f64,
    decimals: usize,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.margin + (x - self.xmin) * self.sx
    }

    fn py(&self, y: f64) -> f64 {
        self.height - self.margin - (y - self.ymin) * self.sy
    }

    fn fmt(&self, v: f64) -> String {
        let v = if v == 0.0 { 0.0 } else { v };
        format!("{v:.*}", self.decimals)
    }
}

fn expand(min: f64, max: f64) -> (f64, f64) {
    let span = max - min;
    if span <= 0.0 {
        (min - 0.5, max + 0.5)
    } else {
        (min - 0.05 * span, max + 0.05 * span)
    }
}

/// Renders the plane spanned by two retained axes of a result document.
pub fn render_result_svg(doc: &ResultDoc, spec: &PlotSpec) -> Result<String> {
    let axes = doc.eigenvalues.len();
    if spec.axis_a == spec.axis_b {
        return Err(Error::InvalidPlot("plot axes must differ".to_owned()));
    }
    for axis in [spec.axis_a, spec.axis_b] {
        if axis >= axes {
            return Err(Error::AxisNotRetained {
                axis,
                retained: axes,
            });
        }
    }
    if spec.width == 0 || spec.height == 0 {
        return Err(Error::InvalidPlot("canvas must have positive size".to_owned()));
    }
    if 2 * spec.margin >= spec.width.min(spec.height) {
        return Err(Error::InvalidPlot(format!(
            "margin {} leaves no drawing area on a {}x{} canvas",
            spec.margin, spec.width, spec.height
        )));
    }

    let (a, b) = (spec.axis_a, spec.axis_b);
    // Data window: every rectangle plus the origin.
    let mut xmin: f64 = 0.0;
    let mut xmax: f64 = 0.0;
    let mut ymin: f64 = 0.0;
    let mut ymax: f64 = 0.0;
    for m in doc.rows.iter().chain(&doc.cols) {
        xmin = xmin.min(m.rect_lo[a]);
        xmax = xmax.max(m.rect_hi[a]);
        ymin = ymin.min(m.rect_lo[b]);
        ymax = ymax.max(m.rect_hi[b]);
    }
    let (xmin, xmax) = expand(xmin, xmax);
    let (ymin, ymax) = expand(ymin, ymax);

    let width = spec.width as f64;
    let height = spec.height as f64;
    let margin = spec.margin as f64;
    let frame = Frame {
        xmin,
        ymin,
        sx: (width - 2.0 * margin) / (xmax - xmin),
        sy: (height - 2.0 * margin) / (ymax - ymin),
        height,
        margin,
        decimals: spec.decimals,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\">",
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        spec.width, spec.height
    );

    // Axis lines through the origin.
    let x0 = frame.fmt(frame.px(0.0));
    let y0 = frame.fmt(frame.py(0.0));
    let _ = writeln!(
        svg,
        "<line x1=\"{}\" y1=\"{y0}\" x2=\"{}\" y2=\"{y0}\" stroke=\"#9e9e9e\" stroke-width=\"1\"/>",
        frame.fmt(margin),
        frame.fmt(width - margin),
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{x0}\" y1=\"{}\" x2=\"{x0}\" y2=\"{}\" stroke=\"#9e9e9e\" stroke-width=\"1\"/>",
        frame.fmt(margin),
        frame.fmt(height - margin),
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#616161\" text-anchor=\"end\">axis {} ({:.2}%)</text>",
        frame.fmt(width - margin),
        frame.fmt(frame.py(0.0) - 6.0),
        spec.font_size,
        a + 1,
        doc.inertia_share[a] * 100.0
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#616161\">axis {} ({:.2}%)</text>",
        frame.fmt(frame.px(0.0) + 6.0),
        frame.fmt(margin + spec.font_size as f64),
        spec.font_size,
        b + 1,
        doc.inertia_share[b] * 100.0
    );

    for (items, color, opacity) in [
        (&doc.rows, &spec.row_color, spec.row_opacity),
        (&doc.cols, &spec.col_color, spec.col_opacity),
    ] {
        for m in items.iter() {
            draw_modality(&mut svg, m, a, b, &frame, color, opacity, spec.font_size);
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[allow(clippy::too_many_arguments)]
fn draw_modality(
    svg: &mut String,
    m: &ModalitySummary,
    a: usize,
    b: usize,
    frame: &Frame,
    color: &str,
    opacity: f64,
    font_size: u32,
) {
    let cx = frame.px(m.coords[a]);
    let cy = frame.py(m.coords[b]);
    let wa = m.rect_hi[a] - m.rect_lo[a];
    let wb = m.rect_hi[b] - m.rect_lo[b];
    if wa <= POINT_WIDTH && wb <= POINT_WIDTH {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{MARKER_RADIUS}\" fill=\"{color}\"/>",
            frame.fmt(cx),
            frame.fmt(cy),
        );
    } else {
        let x = frame.px(m.rect_lo[a]);
        let y = frame.py(m.rect_hi[b]);
        let w = frame.px(m.rect_hi[a]) - x;
        let h = frame.py(m.rect_lo[b]) - y;
        let _ = writeln!(
            svg,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{color}\" \
             fill-opacity=\"{opacity}\" stroke=\"{color}\" stroke-width=\"1\"/>",
            frame.fmt(x),
            frame.fmt(y),
            frame.fmt(w),
            frame.fmt(h),
        );
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{MARKER_RADIUS}\" fill=\"{color}\"/>",
            frame.fmt(cx),
            frame.fmt(cy),
        );
    }
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"{font_size}\" fill=\"#212121\">{}</text>",
        frame.fmt(cx + 4.0),
        frame.fmt(cy - 4.0),
        xml_escape(&m.label),
    );
}

/// Renders a full analysis result; see [`render_result_svg`].
pub fn render_principal_plane_svg(r: &SymcaResult, spec: &PlotSpec) -> Result<String> {
    render_result_svg(&r.to_doc(), spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::eye_hair_table;
    use crate::projection::symca;

    fn eye_hair_svg() -> String {
        let res = symca(&eye_hair_table(), usize::MAX).unwrap();
        render_principal_plane_svg(&res, &PlotSpec::default()).unwrap()
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(eye_hair_svg(), eye_hair_svg());
    }

    #[test]
    fn degenerate_column_is_a_point_marker() {
        let svg = eye_hair_svg();
        // 4 rows with slack + 3 columns with slack = 7 rectangles; the
        // slack-free first column contributes a marker instead.
        let rect_count = svg.matches("<rect x=").count();
        assert_eq!(rect_count, 7);
        assert!(svg.contains("black-h"));
    }

    #[test]
    fn center_markers_stay_inside_their_rectangles_on_screen() {
        let svg = eye_hair_svg();
        let rects: Vec<(f64, f64, f64, f64)> = svg
            .lines()
            .filter(|l| l.starts_with("<rect x="))
            .map(|l| {
                let grab = |key: &str| -> f64 {
                    let start = l.find(key).unwrap() + key.len();
                    let rest = &l[start..];
                    rest[..rest.find('"').unwrap()].parse().unwrap()
                };
                (grab("x=\""), grab("y=\""), grab("width=\""), grab("height=\""))
            })
            .collect();
        let circles: Vec<(f64, f64)> = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| {
                let grab = |key: &str| -> f64 {
                    let start = l.find(key).unwrap() + key.len();
                    let rest = &l[start..];
                    rest[..rest.find('"').unwrap()].parse().unwrap()
                };
                (grab("cx=\""), grab("cy=\""))
            })
            .collect();
        // Each rectangle has a center circle emitted right after it.
        let mut contained = 0;
        for (x, y, w, h) in &rects {
            for (cx, cy) in &circles {
                if cx >= x && *cx <= x + w && cy >= y && *cy <= y + h {
                    contained += 1;
                    break;
                }
            }
        }
        assert_eq!(contained, rects.len());
    }

    #[test]
    fn equal_axes_rejected() {
        let res = symca(&eye_hair_table(), usize::MAX).unwrap();
        let spec = PlotSpec {
            axis_b: 0,
            ..PlotSpec::default()
        };
        assert!(matches!(
            render_principal_plane_svg(&res, &spec),
            Err(Error::InvalidPlot(_))
        ));
    }

    #[test]
    fn unretained_axis_rejected() {
        let res = symca(&eye_hair_table(), usize::MAX).unwrap();
        let spec = PlotSpec {
            axis_b: 9,
            ..PlotSpec::default()
        };
        assert!(matches!(
            render_principal_plane_svg(&res, &spec),
            Err(Error::AxisNotRetained { axis: 9, .. })
        ));
    }

    #[test]
    fn labels_are_escaped() {
        let mut doc = symca(&eye_hair_table(), usize::MAX).unwrap().to_doc();
        doc.rows[0].label = "a<b&c".to_owned();
        let svg = render_result_svg(&doc, &PlotSpec::default()).unwrap();
        assert!(svg.contains("a&lt;b&amp;c"));
    }
}
