//! Seeded randomized cross-checks.
//!
//! Three suites re-derive core identities on small random instances: the
//! two-product table construction against full completion enumeration,
//! closed-form rectangle bounds against vertex enumeration, and the
//! collapse of the interval analysis to the classic one on degenerate
//! tables. Every instance is driven by its own derived seed, which failure
//! messages repeat verbatim so a report can be replayed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ca::correspondence_analysis;
use crate::multivalued::MultiValuedVariable;
use crate::projection::{
    column_rectangle, row_rectangle, symca, vertex_projection_oracle, DEFAULT_VERTEX_LIMIT,
};
use crate::table::{brute_force_interval_contingency, interval_contingency, CountInterval,
    IntervalTable};
use crate::Side;

/// Outcome of one suite: instance count and the identities that failed.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("{}: {}/{} ok", self.name, self.instances, self.instances)
        } else {
            format!(
                "{}: {} of {} instances FAILED",
                self.name,
                self.failures.len(),
                self.instances
            )
        }
    }
}

fn instance_seed(base: u64, k: u64) -> u64 {
    base.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_variable(rng: &mut ChaCha8Rng, name: &str, individuals: usize) -> MultiValuedVariable {
    let q = rng.gen_range(2..=4usize);
    let labels: Vec<String> = (0..q).map(|j| format!("{name}{j}")).collect();
    let observations = (0..individuals)
        .map(|_| {
            // Mostly singletons, some ambiguity; keeps the completion
            // product well under the enumeration guard.
            let roll = rng.gen_range(0..100u32);
            let size = if roll < 50 {
                1
            } else if roll < 85 {
                2
            } else {
                3
            }
            .min(q);
            let mut set = std::collections::BTreeSet::new();
            while set.len() < size {
                set.insert(rng.gen_range(0..q));
            }
            set
        })
        .collect();
    MultiValuedVariable::new(name, labels, observations).expect("generated variable is valid")
}

/// Random interval table with no zero center margins.
fn random_interval_table(rng: &mut ChaCha8Rng, max_dim: usize) -> IntervalTable {
    let n = rng.gen_range(2..=max_dim);
    let p = rng.gen_range(2..=max_dim);
    let mut cells: Vec<Vec<CountInterval>> = (0..n)
        .map(|_| {
            (0..p)
                .map(|_| {
                    let lo = rng.gen_range(0..=8u64);
                    let hi = lo + rng.gen_range(0..=4u64);
                    CountInterval::new(lo, hi)
                })
                .collect()
        })
        .collect();
    for i in 0..n {
        if cells[i].iter().all(|c| c.hi == 0) {
            cells[i][i % p] = CountInterval::new(1, 1 + rng.gen_range(0..=2));
        }
    }
    for j in 0..p {
        if (0..n).all(|i| cells[i][j].hi == 0) {
            cells[j % n][j] = CountInterval::new(1, 1 + rng.gen_range(0..=2));
        }
    }
    IntervalTable::new(
        (0..n).map(|i| format!("r{i}")).collect(),
        (0..p).map(|j| format!("c{j}")).collect(),
        cells,
    )
    .expect("generated table is valid")
}

fn random_degenerate_table(rng: &mut ChaCha8Rng, max_dim: usize) -> IntervalTable {
    let n = rng.gen_range(2..=max_dim);
    let p = rng.gen_range(2..=max_dim);
    let mut cells: Vec<Vec<CountInterval>> = (0..n)
        .map(|_| {
            (0..p)
                .map(|_| {
                    let k = rng.gen_range(0..=9u64);
                    CountInterval::new(k, k)
                })
                .collect()
        })
        .collect();
    for i in 0..n {
        if cells[i].iter().all(|c| c.hi == 0) {
            cells[i][i % p] = CountInterval::new(1, 1);
        }
    }
    for j in 0..p {
        if (0..n).all(|i| cells[i][j].hi == 0) {
            cells[j % n][j] = CountInterval::new(1, 1);
        }
    }
    IntervalTable::new(
        (0..n).map(|i| format!("r{i}")).collect(),
        (0..p).map(|j| format!("c{j}")).collect(),
        cells,
    )
    .expect("generated table is valid")
}

/// Fast two-product table construction vs. exhaustive completion
/// enumeration, exact integer equality.
pub fn table_construction_suite(
    seed: u64,
    instances: usize,
    max_individuals: usize,
    limit: u64,
) -> SuiteReport {
    let mut failures = Vec::new();
    for k in 0..instances {
        let s = instance_seed(seed, k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let m = rng.gen_range(1..=max_individuals.max(1));
        let x = random_variable(&mut rng, "x", m);
        let y = random_variable(&mut rng, "y", m);
        let fast = match interval_contingency(&x, &y) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("seed={s}: fast path failed: {e}"));
                continue;
            }
        };
        let brute = match brute_force_interval_contingency(&x, &y, limit) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("seed={s}: enumeration failed: {e}"));
                continue;
            }
        };
        for i in 0..fast.n_rows() {
            for j in 0..fast.n_cols() {
                if fast.cell(i, j) != brute.cell(i, j) {
                    failures.push(format!(
                        "seed={s}: cell ({i},{j}) fast={} enumeration={}",
                        fast.cell(i, j),
                        brute.cell(i, j)
                    ));
                }
            }
        }
    }
    SuiteReport {
        name: "table construction vs enumeration",
        instances,
        failures,
    }
}

/// Closed-form rectangle bounds vs. vertex enumeration on every retained
/// axis, plus center containment.
pub fn rectangle_suite(seed: u64, instances: usize, max_dim: usize) -> SuiteReport {
    let tol = 1e-10;
    let mut failures = Vec::new();
    for k in 0..instances {
        let s = instance_seed(seed, k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let t = random_interval_table(&mut rng, max_dim);
        let res = match symca(&t, usize::MAX) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("seed={s}: analysis failed: {e}"));
                continue;
            }
        };
        let ca = &res.ca;
        for axis in 0..ca.n_axes {
            for j in 0..t.n_cols() {
                let closed = column_rectangle(&t, ca, j, axis).unwrap();
                let brute =
                    vertex_projection_oracle(&t, ca, j, axis, Side::Column, DEFAULT_VERTEX_LIMIT)
                        .unwrap();
                if (closed.lo - brute.lo).abs() > tol || (closed.hi - brute.hi).abs() > tol {
                    failures.push(format!(
                        "seed={s}: column {j} axis {axis}: closed {closed} vs vertices {brute}"
                    ));
                }
                if !closed.contains(ca.col_coords[axis][j]) {
                    failures.push(format!(
                        "seed={s}: column {j} axis {axis}: center {} outside {closed}",
                        ca.col_coords[axis][j]
                    ));
                }
            }
            for i in 0..t.n_rows() {
                let closed = row_rectangle(&t, ca, i, axis).unwrap();
                let brute =
                    vertex_projection_oracle(&t, ca, i, axis, Side::Row, DEFAULT_VERTEX_LIMIT)
                        .unwrap();
                if (closed.lo - brute.lo).abs() > tol || (closed.hi - brute.hi).abs() > tol {
                    failures.push(format!(
                        "seed={s}: row {i} axis {axis}: closed {closed} vs vertices {brute}"
                    ));
                }
                if !closed.contains(ca.row_coords[axis][i]) {
                    failures.push(format!(
                        "seed={s}: row {i} axis {axis}: center {} outside {closed}",
                        ca.row_coords[axis][i]
                    ));
                }
            }
        }
    }
    SuiteReport {
        name: "rectangle bounds vs vertex enumeration",
        instances,
        failures,
    }
}

/// On degenerate tables the interval analysis must reproduce the classic
/// one: equal coordinates and zero-width rectangles.
pub fn degenerate_suite(seed: u64, instances: usize, max_dim: usize) -> SuiteReport {
    let tol = 1e-12;
    let mut failures = Vec::new();
    for k in 0..instances {
        let s = instance_seed(seed, k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let t = random_degenerate_table(&mut rng, max_dim);
        let res = match symca(&t, usize::MAX) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("seed={s}: analysis failed: {e}"));
                continue;
            }
        };
        let classic = match correspondence_analysis(&t.centers(), usize::MAX) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("seed={s}: classic analysis failed: {e}"));
                continue;
            }
        };
        for axis in 0..res.ca.n_axes {
            for i in 0..t.n_rows() {
                let rect = res.row_rect[axis][i];
                if rect.width() > tol {
                    failures.push(format!(
                        "seed={s}: row {i} axis {axis}: width {} exceeds {tol}",
                        rect.width()
                    ));
                }
                if (res.ca.row_coords[axis][i] - classic.row_coords[axis][i]).abs() > tol {
                    failures.push(format!(
                        "seed={s}: row {i} axis {axis}: interval vs classic coordinate mismatch"
                    ));
                }
                if !rect.contains(res.ca.row_coords[axis][i]) {
                    failures.push(format!(
                        "seed={s}: row {i} axis {axis}: center outside point rectangle"
                    ));
                }
            }
            for j in 0..t.n_cols() {
                let rect = res.col_rect[axis][j];
                if rect.width() > tol {
                    failures.push(format!(
                        "seed={s}: column {j} axis {axis}: width {} exceeds {tol}",
                        rect.width()
                    ));
                }
                if (res.ca.col_coords[axis][j] - classic.col_coords[axis][j]).abs() > tol {
                    failures.push(format!(
                        "seed={s}: column {j} axis {axis}: interval vs classic coordinate mismatch"
                    ));
                }
                if !rect.contains(res.ca.col_coords[axis][j]) {
                    failures.push(format!(
                        "seed={s}: column {j} axis {axis}: center outside point rectangle"
                    ));
                }
            }
        }
    }
    SuiteReport {
        name: "degenerate tables vs classic analysis",
        instances,
        failures,
    }
}

/// Runs all three suites with a shared base seed.
pub fn run_all(seed: u64, instances: usize, max_individuals: usize, limit: u64) -> Vec<SuiteReport> {
    vec![
        table_construction_suite(seed, instances, max_individuals, limit),
        rectangle_suite(seed.wrapping_add(1), instances, 5),
        degenerate_suite(seed.wrapping_add(2), instances, 5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for report in run_all(7, 25, 6, 1_000_000) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        }
    }

    #[test]
    fn generated_tables_have_positive_margins() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let t = random_interval_table(&mut rng, 5);
            let d = t.centers().validate_for_analysis();
            assert!(d.analyzable(), "{:?}", d.issues());
            let t = random_degenerate_table(&mut rng, 5);
            assert!(t.is_degenerate());
            assert!(t.centers().validate_for_analysis().analyzable());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = table_construction_suite(11, 10, 5, 1_000_000);
        let b = table_construction_suite(11, 10, 5, 1_000_000);
        assert_eq!(a.failures, b.failures);
        assert_eq!(a.summary_line(), b.summary_line());
    }
}
