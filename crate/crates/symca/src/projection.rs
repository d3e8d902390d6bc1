//! Interval profiles and their rectangle projections on the factorial axes.
//!
//! Each modality of an interval table spans a hypercube of feasible
//! profiles. Projected on a factorial axis, the extreme projections are
//! attained at hypercube vertices and have a closed form: the lower bound
//! collects upper-bound cells where the axis weight is negative and
//! lower-bound cells where it is positive, the upper bound mirrors this.
//! `vertex_projection_oracle` recomputes both ends by enumerating every
//! vertex and is the executable cross-check for the closed forms.

use crate::ca::{correspondence_analysis, supplementary_projection, CaResult};
use crate::error::{Error, Result};
use crate::table::{Interval, IntervalTable};
use crate::Side;

/// Interval-valued profile matrix: entry (i,j) brackets the feasible
/// profile values, always divided by the *center* margin of the chosen
/// side.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalProfileMatrix {
    pub side: Side,
    /// `n_rows x n_cols` regardless of side; only the margin divisor
    /// changes.
    pub entries: Vec<Vec<Interval>>,
}

/// Full interval analysis: the classic analysis of the centers plus one
/// projection interval per axis and modality.
#[derive(Debug, Clone, PartialEq)]
pub struct SymcaResult {
    pub ca: CaResult,
    /// `row_rect[a][i]` brackets row i's projections on axis a.
    pub row_rect: Vec<Vec<Interval>>,
    /// `col_rect[a][j]` brackets column j's projections on axis a.
    pub col_rect: Vec<Vec<Interval>>,
}

/// Default guard for vertex enumeration (2^20 vertices).
pub const DEFAULT_VERTEX_LIMIT: u64 = 1 << 20;

/// Interval profiles of `t`: cell bounds over the grand total, divided by
/// the center margin of the requested side.
pub fn interval_profiles(t: &IntervalTable, side: Side) -> Result<IntervalProfileMatrix> {
    let centers = t.centers();
    let total = centers.total();
    let sums = match side {
        Side::Row => centers.row_sums(),
        Side::Column => centers.col_sums(),
    };
    if let Some(idx) = sums.iter().position(|&m| m <= 0.0) {
        return Err(Error::ZeroMargin { side, index: idx });
    }
    let margins: Vec<f64> = sums.iter().map(|&s| s / total).collect();
    let entries = (0..t.n_rows())
        .map(|i| {
            (0..t.n_cols())
                .map(|j| {
                    let cell = t.cell(i, j);
                    let margin = match side {
                        Side::Row => margins[i],
                        Side::Column => margins[j],
                    };
                    Interval::new(
                        (cell.lo as f64 / total) / margin,
                        (cell.hi as f64 / total) / margin,
                    )
                })
                .collect()
        })
        .collect();
    Ok(IntervalProfileMatrix { side, entries })
}

fn check_shapes(t: &IntervalTable, ca: &CaResult) -> Result<()> {
    if t.n_rows() != ca.n_rows || t.n_cols() != ca.n_cols {
        return Err(Error::ShapeMismatch {
            t_rows: t.n_rows(),
            t_cols: t.n_cols(),
            a_rows: ca.n_rows,
            a_cols: ca.n_cols,
        });
    }
    Ok(())
}

/// Closed-form projection interval of column `j` on axis `axis`.
///
/// Terms with a zero axis weight are skipped; they contribute zero to
/// either bound, so the bounds remain vertex-attained. Summation runs over
/// ascending row index to mirror the supplementary-projection loop
/// bit-for-bit.
pub fn column_rectangle(
    t: &IntervalTable,
    ca: &CaResult,
    j: usize,
    axis: usize,
) -> Result<Interval> {
    check_shapes(t, ca)?;
    if axis >= ca.n_axes {
        return Err(Error::AxisNotRetained {
            axis,
            retained: ca.n_axes,
        });
    }
    if j >= ca.n_cols {
        return Err(Error::IndexOutOfRange {
            what: "column",
            index: j,
            len: ca.n_cols,
        });
    }
    let total = ca.grand_total;
    let c = ca.col_margins[j];
    let v = &ca.row_axis_vectors[axis];
    let mut lo = 0.0;
    let mut hi = 0.0;
    for i in 0..ca.n_rows {
        let w = v[i];
        if w == 0.0 {
            continue;
        }
        let cell = t.cell(i, j);
        let f_lo = cell.lo as f64 / total;
        let f_hi = cell.hi as f64 / total;
        let r = ca.row_margins[i];
        if w > 0.0 {
            lo += f_lo / (r * c) * w;
            hi += f_hi / (r * c) * w;
        } else {
            lo += f_hi / (r * c) * w;
            hi += f_lo / (r * c) * w;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Closed-form projection interval of row `i` on axis `axis`; the mirror of
/// [`column_rectangle`] with the column-space axis vector.
pub fn row_rectangle(t: &IntervalTable, ca: &CaResult, i: usize, axis: usize) -> Result<Interval> {
    check_shapes(t, ca)?;
    if axis >= ca.n_axes {
        return Err(Error::AxisNotRetained {
            axis,
            retained: ca.n_axes,
        });
    }
    if i >= ca.n_rows {
        return Err(Error::IndexOutOfRange {
            what: "row",
            index: i,
            len: ca.n_rows,
        });
    }
    let total = ca.grand_total;
    let r = ca.row_margins[i];
    let u = &ca.col_axis_vectors[axis];
    let mut lo = 0.0;
    let mut hi = 0.0;
    for j in 0..ca.n_cols {
        let w = u[j];
        if w == 0.0 {
            continue;
        }
        let cell = t.cell(i, j);
        let f_lo = cell.lo as f64 / total;
        let f_hi = cell.hi as f64 / total;
        let c = ca.col_margins[j];
        if w > 0.0 {
            lo += f_lo / (r * c) * w;
            hi += f_hi / (r * c) * w;
        } else {
            lo += f_hi / (r * c) * w;
            hi += f_lo / (r * c) * w;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Brute-force reference for the rectangle bounds: projects every vertex of
/// the interval profile hypercube in supplementary and returns the observed
/// extremes. `limit` guards the `2^len` enumeration.
pub fn vertex_projection_oracle(
    t: &IntervalTable,
    ca: &CaResult,
    index: usize,
    axis: usize,
    side: Side,
    limit: u64,
) -> Result<Interval> {
    check_shapes(t, ca)?;
    if axis >= ca.n_axes {
        return Err(Error::AxisNotRetained {
            axis,
            retained: ca.n_axes,
        });
    }
    let len = match side {
        Side::Column => ca.n_rows,
        Side::Row => ca.n_cols,
    };
    let bound = match side {
        Side::Column => ca.n_cols,
        Side::Row => ca.n_rows,
    };
    if index >= bound {
        return Err(Error::IndexOutOfRange {
            what: match side {
                Side::Column => "column",
                Side::Row => "row",
            },
            index,
            len: bound,
        });
    }
    if len >= 64 {
        return Err(Error::EnumerationTooLarge {
            count: u128::MAX,
            limit,
        });
    }
    let count: u128 = 1u128 << len;
    if count > limit as u128 {
        return Err(Error::EnumerationTooLarge { count, limit });
    }
    let total = ca.grand_total;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut numerators = vec![0.0; len];
    for mask in 0u64..(count as u64) {
        for (k, z) in numerators.iter_mut().enumerate() {
            let cell = match side {
                Side::Column => t.cell(k, index),
                Side::Row => t.cell(index, k),
            };
            let count = if mask >> k & 1 == 1 { cell.hi } else { cell.lo };
            *z = count as f64 / total;
        }
        let p = supplementary_projection(ca, &numerators, axis, side, index)?;
        lo = lo.min(p);
        hi = hi.max(p);
    }
    Ok(Interval::new(lo, hi))
}

/// Full pipeline: centers, classic analysis, then every rectangle for every
/// retained axis.
pub fn symca(t: &IntervalTable, n_axes: usize) -> Result<SymcaResult> {
    let ca = correspondence_analysis(&t.centers(), n_axes)?;
    let mut row_rect = Vec::with_capacity(ca.n_axes);
    let mut col_rect = Vec::with_capacity(ca.n_axes);
    for axis in 0..ca.n_axes {
        row_rect.push(
            (0..ca.n_rows)
                .map(|i| row_rectangle(t, &ca, i, axis))
                .collect::<Result<Vec<_>>>()?,
        );
        col_rect.push(
            (0..ca.n_cols)
                .map(|j| column_rectangle(t, &ca, j, axis))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(SymcaResult {
        ca,
        row_rect,
        col_rect,
    })
}
