//! Dense symmetric eigendecomposition via cyclic Jacobi rotations.
//!
//! The tables analysed here are small (a handful of modalities per side), so
//! a plain Jacobi sweep is accurate to machine precision, needs no external
//! solver, and is bit-for-bit deterministic: rotations are applied in a fixed
//! cyclic order until the off-diagonal mass vanishes.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a symmetric matrix.
///
/// Returns `(values, vectors)` where `vectors[k]` is the unit eigenvector for
/// `values[k]`. Pairs are in solver order (diagonal position), not sorted.
pub(crate) fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }

    // Rotation accumulator, starts as the identity.
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    let tol = 1e-15 * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += a[p][q] * a[p][q];
                }
            }
            s.sqrt()
        };
        if off <= tol {
            converged = true;
            break;
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                // Smaller-angle root of t^2 + 2t*theta - 1 = 0, stable form.
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[i][p];
                        let aiq = a[i][q];
                        a[i][p] = aip - s * (aiq + tau * aip);
                        a[i][q] = aiq + s * (aip - tau * aiq);
                        a[p][i] = a[i][p];
                        a[q][i] = a[i][q];
                    }
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = vp - s * (vq + tau * vp);
                    row[q] = vq + s * (vp - tau * vq);
                }
            }
        }
    }
    if !converged {
        // One last check: the final sweep may have finished the job.
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() > tol {
            return Err(Error::EigenConvergence(MAX_SWEEPS));
        }
    }

    let values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = (0..n).map(|k| (0..n).map(|i| v[i][k]).collect()).collect();
    Ok((values, vectors))
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn normalize(a: &mut [f64]) {
    let n = norm(a);
    if n > 0.0 {
        for x in a.iter_mut() {
            *x /= n;
        }
    }
}

/// Deterministic completion of an orthonormal system: returns a unit vector
/// orthogonal to every vector in `constraints` (assumed near-orthonormal).
/// Requires `constraints.len() < dim`.
pub(crate) fn orthonormal_complement(dim: usize, constraints: &[&[f64]]) -> Vec<f64> {
    debug_assert!(constraints.len() < dim);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for e in 0..dim {
        let mut cand = vec![0.0; dim];
        cand[e] = 1.0;
        // Two Gram-Schmidt passes keep the residual orthogonal.
        for _ in 0..2 {
            for c in constraints {
                let proj = dot(&cand, c);
                for (x, y) in cand.iter_mut().zip(c.iter()) {
                    *x -= proj * y;
                }
            }
        }
        let nm = norm(&cand);
        if best.as_ref().is_none_or(|(b, _)| nm > *b) {
            best = Some((nm, cand));
        }
    }
    let (_, mut out) = best.expect("dim > 0");
    normalize(&mut out);
    out
}
