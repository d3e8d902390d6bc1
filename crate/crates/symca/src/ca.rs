//! Classic correspondence analysis of a nonnegative table.
//!
//! Profiles are compared in the chi-square metric: the distance between two
//! row profiles weights each squared coordinate difference by the reciprocal
//! column margin. The factorial axes come from the standardized residual
//! matrix `A` with
//!
//! ```text
//! A[i][j] = (f_ij - f_i. * f_.j) / sqrt(f_i. * f_.j)
//! ```
//!
//! whose squared singular values are the non-trivial eigenvalues of the
//! profile operators. Centering by the margin product removes the trivial
//! unit eigenvalue up front; the solver works on the column-side Gram matrix
//! of `A` with the known null direction (square-rooted column margins)
//! shifted down by a rank-one update so it can never surface among the
//! retained axes. Axis vectors are returned in the margin metric
//! (`u' D_c^{-1} u = 1`, `v' D_r^{-1} v = 1`) which makes the factorial
//! coordinates principal: centered, with variance equal to the eigenvalue.

use crate::error::{Error, Result};
use crate::linalg;
use crate::table::CenterTable;
use crate::Side;

/// Result of a classic correspondence analysis.
///
/// Coordinate and axis-vector collections are axis-major: `row_coords[a][i]`
/// is the coordinate of row `i` on axis `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaResult {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub n_rows: usize,
    pub n_cols: usize,
    pub grand_total: f64,
    /// Relative frequencies `f_ij`, an `n_rows x n_cols` matrix summing to 1.
    pub rel_freq: Vec<Vec<f64>>,
    pub row_margins: Vec<f64>,
    pub col_margins: Vec<f64>,
    /// Number of retained non-trivial axes.
    pub n_axes: usize,
    /// Non-trivial eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Axis vectors in column space (`u`, one per axis, each of length
    /// `n_cols`), normalized by `u' D_c^{-1} u = 1`.
    pub col_axis_vectors: Vec<Vec<f64>>,
    /// Axis vectors in row space (`v`, length `n_rows`), normalized by
    /// `v' D_r^{-1} v = 1`.
    pub row_axis_vectors: Vec<Vec<f64>>,
    /// Row coordinates (psi).
    pub row_coords: Vec<Vec<f64>>,
    /// Column coordinates (phi).
    pub col_coords: Vec<Vec<f64>>,
    /// Share of total inertia per retained axis.
    pub inertia_share: Vec<f64>,
}

struct Frequencies {
    rel: Vec<Vec<f64>>,
    row_margins: Vec<f64>,
    col_margins: Vec<f64>,
    total: f64,
}

fn frequencies(k: &CenterTable) -> Result<Frequencies> {
    let row_sums = k.row_sums();
    let col_sums = k.col_sums();
    if let Some(i) = row_sums.iter().position(|&s| s <= 0.0) {
        return Err(Error::ZeroMargin {
            side: Side::Row,
            index: i,
        });
    }
    if let Some(j) = col_sums.iter().position(|&s| s <= 0.0) {
        return Err(Error::ZeroMargin {
            side: Side::Column,
            index: j,
        });
    }
    let total = k.total();
    Ok(Frequencies {
        rel: k
            .cells()
            .iter()
            .map(|row| row.iter().map(|&v| v / total).collect())
            .collect(),
        row_margins: row_sums.iter().map(|&s| s / total).collect(),
        col_margins: col_sums.iter().map(|&s| s / total).collect(),
        total,
    })
}

/// Runs the analysis, retaining `min(n_axes, n_rows - 1, n_cols - 1)` axes.
pub fn correspondence_analysis(k: &CenterTable, n_axes: usize) -> Result<CaResult> {
    let n = k.n_rows();
    let p = k.n_cols();
    if n < 2 || p < 2 {
        return Err(Error::DegenerateDimensions);
    }
    let fr = frequencies(k)?;
    let retained = n_axes.min(n - 1).min(p - 1);

    // Standardized residuals.
    let mut a = vec![vec![0.0; p]; n];
    for i in 0..n {
        for j in 0..p {
            let expect = fr.row_margins[i] * fr.col_margins[j];
            a[i][j] = (fr.rel[i][j] - expect) / expect.sqrt();
        }
    }
    let sqrt_row: Vec<f64> = fr.row_margins.iter().map(|&r| r.sqrt()).collect();
    let sqrt_col: Vec<f64> = fr.col_margins.iter().map(|&c| c.sqrt()).collect();

    // Column-side Gram matrix with the trivial direction pushed to -1.
    let mut g = vec![vec![0.0; p]; p];
    for j in 0..p {
        for l in j..p {
            let mut s = 0.0;
            for row in &a {
                s += row[j] * row[l];
            }
            s -= sqrt_col[j] * sqrt_col[l];
            g[j][l] = s;
            g[l][j] = s;
        }
    }
    let (mu, w) = linalg::jacobi_eigen(g)?;

    // Descending eigenvalue, ties broken by solver position.
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&x, &y| mu[y].partial_cmp(&mu[x]).unwrap().then(x.cmp(&y)));

    let trace: f64 = mu.iter().map(|&m| m.max(0.0)).sum();

    let mut eigenvalues = Vec::with_capacity(retained);
    let mut col_axis_vectors = Vec::with_capacity(retained);
    let mut row_axis_vectors = Vec::with_capacity(retained);
    let mut row_coords = Vec::with_capacity(retained);
    let mut col_coords = Vec::with_capacity(retained);
    let mut left_basis: Vec<Vec<f64>> = Vec::with_capacity(retained);

    for &slot in order.iter().take(retained) {
        let mut right = w[slot].clone();
        linalg::normalize(&mut right);
        let lambda = mu[slot].max(0.0);

        let mut raw: Vec<f64> = (0..n).map(|i| linalg::dot(&a[i], &right)).collect();
        let raw_norm = linalg::norm(&raw);
        let left = if raw_norm > 0.0 {
            linalg::normalize(&mut raw);
            raw
        } else {
            // Exactly rank-deficient axis: complete the left basis away from
            // the trivial direction and the axes already built.
            let mut constraints: Vec<&[f64]> = vec![&sqrt_row];
            constraints.extend(left_basis.iter().map(|u| u.as_slice()));
            linalg::orthonormal_complement(n, &constraints)
        };

        let mut u: Vec<f64> = (0..p).map(|j| sqrt_col[j] * right[j]).collect();
        let mut v: Vec<f64> = (0..n).map(|i| sqrt_row[i] * left[i]).collect();
        let mut psi = transition_row_coords(&fr, &u);
        let mut phi = transition_col_coords(&fr, &v);

        // Sign convention: the largest-magnitude component of u is positive,
        // ties resolved toward the lowest index; u, v, psi, phi flip jointly.
        let mut jmax = 0;
        for j in 1..p {
            if u[j].abs() > u[jmax].abs() {
                jmax = j;
            }
        }
        if u[jmax] < 0.0 {
            for x in u.iter_mut() {
                *x = -*x;
            }
            for x in v.iter_mut() {
                *x = -*x;
            }
            for x in psi.iter_mut() {
                *x = -*x;
            }
            for x in phi.iter_mut() {
                *x = -*x;
            }
        }

        // Orthogonality constraints are sign-blind, so the pre-flip vector
        // serves as the basis entry.
        left_basis.push(left);
        eigenvalues.push(lambda);
        col_axis_vectors.push(u);
        row_axis_vectors.push(v);
        row_coords.push(psi);
        col_coords.push(phi);
    }

    let inertia_share = eigenvalues
        .iter()
        .map(|&l| if trace > 0.0 { l / trace } else { 0.0 })
        .collect();

    Ok(CaResult {
        row_labels: k.row_labels().to_vec(),
        col_labels: k.col_labels().to_vec(),
        n_rows: n,
        n_cols: p,
        grand_total: fr.total,
        rel_freq: fr.rel,
        row_margins: fr.row_margins,
        col_margins: fr.col_margins,
        n_axes: retained,
        eigenvalues,
        col_axis_vectors,
        row_axis_vectors,
        row_coords,
        col_coords,
        inertia_share,
    })
}

/// Row coordinates from a column-space axis vector (the row transition
/// formula). Summation order is ascending in `j` so that degenerate
/// rectangle bounds reproduce these values bit-for-bit.
fn transition_row_coords(fr: &Frequencies, u: &[f64]) -> Vec<f64> {
    (0..fr.row_margins.len())
        .map(|i| {
            let mut s = 0.0;
            for j in 0..fr.col_margins.len() {
                s += fr.rel[i][j] / (fr.row_margins[i] * fr.col_margins[j]) * u[j];
            }
            s
        })
        .collect()
}

/// Column coordinates from a row-space axis vector, ascending in `i`.
fn transition_col_coords(fr: &Frequencies, v: &[f64]) -> Vec<f64> {
    (0..fr.col_margins.len())
        .map(|j| {
            let mut s = 0.0;
            for i in 0..fr.row_margins.len() {
                s += fr.rel[i][j] / (fr.row_margins[i] * fr.col_margins[j]) * v[i];
            }
            s
        })
        .collect()
}

/// Row profiles: each row divided by its sum, so every profile sums to 1.
pub fn row_profiles(k: &CenterTable) -> Result<Vec<Vec<f64>>> {
    let sums = k.row_sums();
    if let Some(i) = sums.iter().position(|&s| s <= 0.0) {
        return Err(Error::ZeroMargin {
            side: Side::Row,
            index: i,
        });
    }
    Ok(k.cells()
        .iter()
        .zip(&sums)
        .map(|(row, &s)| row.iter().map(|&v| v / s).collect())
        .collect())
}

/// Column profiles, one profile per table column (a `n_cols x n_rows`
/// matrix).
pub fn column_profiles(k: &CenterTable) -> Result<Vec<Vec<f64>>> {
    let sums = k.col_sums();
    if let Some(j) = sums.iter().position(|&s| s <= 0.0) {
        return Err(Error::ZeroMargin {
            side: Side::Column,
            index: j,
        });
    }
    Ok((0..k.n_cols())
        .map(|j| (0..k.n_rows()).map(|i| k.cell(i, j) / sums[j]).collect())
        .collect())
}

/// Squared chi-square distance between the profiles of rows `i` and `k`.
pub fn chi2_row_distance(table: &CenterTable, i: usize, k: usize) -> Result<f64> {
    let n = table.n_rows();
    for idx in [i, k] {
        if idx >= n {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: idx,
                len: n,
            });
        }
    }
    let fr = frequencies(table)?;
    let mut d = 0.0;
    for j in 0..table.n_cols() {
        let diff = fr.rel[i][j] / fr.row_margins[i] - fr.rel[k][j] / fr.row_margins[k];
        d += diff * diff / fr.col_margins[j];
    }
    Ok(d)
}

/// Squared chi-square distance between the profiles of columns `j` and `s`.
pub fn chi2_col_distance(table: &CenterTable, j: usize, s: usize) -> Result<f64> {
    let p = table.n_cols();
    for idx in [j, s] {
        if idx >= p {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: idx,
                len: p,
            });
        }
    }
    let fr = frequencies(table)?;
    let mut d = 0.0;
    for i in 0..table.n_rows() {
        let diff = fr.rel[i][j] / fr.col_margins[j] - fr.rel[i][s] / fr.col_margins[s];
        d += diff * diff / fr.row_margins[i];
    }
    Ok(d)
}

/// Total inertia, the chi-square statistic of the table divided by its
/// grand total. Computed directly from the definition; independent of the
/// eigensolver, so the two can cross-check each other.
pub fn total_inertia(k: &CenterTable) -> Result<f64> {
    let fr = frequencies(k)?;
    let mut s = 0.0;
    for i in 0..k.n_rows() {
        for j in 0..k.n_cols() {
            let expect = fr.row_margins[i] * fr.col_margins[j];
            let diff = fr.rel[i][j] - expect;
            s += diff * diff / expect;
        }
    }
    Ok(s)
}

/// Projects a supplementary profile onto a retained axis.
///
/// `numerators` are on the relative-frequency scale (cell over grand
/// total). For `Side::Column` they run over the rows and `index` names the
/// column whose margin is applied; the projection is
/// `sum_i z_i / (f_i. * f_.j) * v[i]`. `Side::Row` mirrors with `u` and the
/// row margin. Margins are always the analysed table's own (center) margins.
pub fn supplementary_projection(
    ca: &CaResult,
    numerators: &[f64],
    axis: usize,
    side: Side,
    index: usize,
) -> Result<f64> {
    if axis >= ca.n_axes {
        return Err(Error::AxisNotRetained {
            axis,
            retained: ca.n_axes,
        });
    }
    match side {
        Side::Column => {
            if numerators.len() != ca.n_rows {
                return Err(Error::LengthMismatch {
                    expected: ca.n_rows,
                    got: numerators.len(),
                });
            }
            if index >= ca.n_cols {
                return Err(Error::IndexOutOfRange {
                    what: "column",
                    index,
                    len: ca.n_cols,
                });
            }
            let c = ca.col_margins[index];
            let v = &ca.row_axis_vectors[axis];
            let mut s = 0.0;
            for i in 0..ca.n_rows {
                s += numerators[i] / (ca.row_margins[i] * c) * v[i];
            }
            Ok(s)
        }
        Side::Row => {
            if numerators.len() != ca.n_cols {
                return Err(Error::LengthMismatch {
                    expected: ca.n_cols,
                    got: numerators.len(),
                });
            }
            if index >= ca.n_rows {
                return Err(Error::IndexOutOfRange {
                    what: "row",
                    index,
                    len: ca.n_rows,
                });
            }
            let r = ca.row_margins[index];
            let u = &ca.col_axis_vectors[axis];
            let mut s = 0.0;
            for j in 0..ca.n_cols {
                s += numerators[j] / (r * ca.col_margins[j]) * u[j];
            }
            Ok(s)
        }
    }
}
