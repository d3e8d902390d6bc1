//! Multi-valued categorical observations.
//!
//! A multi-valued variable records, for each individual, the *set* of
//! modalities the individual may take: the answer to a multiple-selection
//! question. Ambiguity is summarised by two 0/1 matrices: the meet matrix
//! keeps only forced (singleton) answers, the join matrix keeps every
//! possible answer. Every classical single-answer completion of the data
//! sits entrywise between the two.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A categorical variable whose value per individual is a non-empty set of
/// modality indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiValuedVariable {
    name: String,
    modalities: Vec<String>,
    observations: Vec<BTreeSet<usize>>,
}

impl MultiValuedVariable {
    /// Builds a variable from already-indexed observation sets, validating
    /// that labels are unique, every set is non-empty and indices are in
    /// range.
    pub fn new(
        name: impl Into<String>,
        modalities: Vec<String>,
        observations: Vec<BTreeSet<usize>>,
    ) -> Result<Self> {
        if modalities.is_empty() || observations.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = BTreeSet::new();
        for label in &modalities {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        for (i, set) in observations.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptyObservationSet(i));
            }
            if let Some(&max) = set.iter().next_back() {
                if max >= modalities.len() {
                    return Err(Error::IndexOutOfRange {
                        what: "modality",
                        index: max,
                        len: modalities.len(),
                    });
                }
            }
        }
        Ok(Self {
            name: name.into(),
            modalities,
            observations,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Modality labels in column order.
    pub fn modalities(&self) -> &[String] {
        &self.modalities
    }

    /// Number of modalities (columns of the disjunctive matrices).
    pub fn modality_count(&self) -> usize {
        self.modalities.len()
    }

    /// Number of observed individuals.
    pub fn individuals(&self) -> usize {
        self.observations.len()
    }

    pub fn observations(&self) -> &[BTreeSet<usize>] {
        &self.observations
    }

    /// Observation sets rendered back to labels, each set in index order.
    pub fn label_sets(&self) -> Vec<Vec<&str>> {
        self.observations
            .iter()
            .map(|set| set.iter().map(|&j| self.modalities[j].as_str()).collect())
            .collect()
    }

    /// Matrix of minimum possibilities: entry (i,j) is 1 exactly when
    /// individual i is forced to modality j (the observation is the
    /// singleton {j}). Ambiguous rows are all-zero.
    pub fn meet_matrix(&self) -> BinaryMatrix {
        let mut m = BinaryMatrix::zeros(self.individuals(), self.modality_count());
        for (i, set) in self.observations.iter().enumerate() {
            if set.len() == 1 {
                m.set(i, *set.iter().next().unwrap(), 1);
            }
        }
        m
    }

    /// Matrix of maximum possibilities: entry (i,j) is 1 exactly when
    /// modality j is a possible answer for individual i. Every row has at
    /// least one 1.
    pub fn join_matrix(&self) -> BinaryMatrix {
        let mut m = BinaryMatrix::zeros(self.individuals(), self.modality_count());
        for (i, set) in self.observations.iter().enumerate() {
            for &j in set {
                m.set(i, j, 1);
            }
        }
        m
    }

    /// Number of single-answer completions, i.e. the product of the
    /// observation set sizes (saturating).
    pub fn completion_count(&self) -> u128 {
        self.observations
            .iter()
            .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128))
    }

    /// Iterates every disjunctive complete table obtained by picking one
    /// modality per individual, in lexicographic choice order (the last
    /// individual varies fastest). Errors out when the count exceeds
    /// `limit`.
    pub fn enumerate_completions(&self, limit: u64) -> Result<Completions> {
        let count = self.completion_count();
        if count > limit as u128 {
            return Err(Error::EnumerationTooLarge { count, limit });
        }
        Ok(Completions {
            choices: self
                .observations
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
            cols: self.modality_count(),
            odometer: vec![0; self.observations.len()],
            exhausted: false,
        })
    }
}

/// Iterator over the disjunctive complete tables of a variable.
#[derive(Debug, Clone)]
pub struct Completions {
    choices: Vec<Vec<usize>>,
    cols: usize,
    odometer: Vec<usize>,
    exhausted: bool,
}

impl Iterator for Completions {
    type Item = BinaryMatrix;

    fn next(&mut self) -> Option<BinaryMatrix> {
        if self.exhausted {
            return None;
        }
        let mut m = BinaryMatrix::zeros(self.choices.len(), self.cols);
        for (i, pos) in self.odometer.iter().enumerate() {
            m.set(i, self.choices[i][*pos], 1);
        }
        // Advance the odometer from the least significant (last) digit.
        let mut carried = true;
        for i in (0..self.odometer.len()).rev() {
            if self.odometer[i] + 1 < self.choices[i].len() {
                self.odometer[i] += 1;
                carried = false;
                break;
            }
            self.odometer[i] = 0;
        }
        if carried {
            self.exhausted = true;
        }
        Some(m)
    }
}

/// Parses raw label sets into a [`MultiValuedVariable`].
///
/// With a vocabulary the modality order is the vocabulary order and unknown
/// labels are rejected; without one the distinct labels are sorted
/// lexicographically. Duplicate labels within one observation collapse
/// silently (observations are sets).
pub fn parse_observations<S, V>(
    name: &str,
    rows: &[Vec<S>],
    vocabulary: Option<&[V]>,
) -> Result<MultiValuedVariable>
where
    S: AsRef<str>,
    V: AsRef<str>,
{
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let modalities: Vec<String> = match vocabulary {
        Some(voc) => voc.iter().map(|l| l.as_ref().to_owned()).collect(),
        None => {
            let mut labels = BTreeSet::new();
            for row in rows {
                for l in row {
                    labels.insert(l.as_ref().to_owned());
                }
            }
            labels.into_iter().collect()
        }
    };
    let mut index = std::collections::BTreeMap::new();
    for (j, label) in modalities.iter().enumerate() {
        if index.insert(label.as_str(), j).is_some() {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    let mut observations = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::EmptyObservationSet(i));
        }
        let mut set = BTreeSet::new();
        for l in row {
            match index.get(l.as_ref()) {
                Some(&j) => {
                    set.insert(j);
                }
                None => {
                    return Err(Error::UnknownLabel {
                        label: l.as_ref().to_owned(),
                        individual: i,
                    })
                }
            }
        }
        observations.push(set);
    }
    MultiValuedVariable::new(name, modalities, observations)
}

/// Dense 0/1 matrix over individuals by modalities.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Convenience constructor from row slices; panics on ragged input.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(v <= 1);
        self.data[i * self.cols + j] = v;
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.cols).map(|j| self.get(i, j) as usize).sum()
    }

    /// Exact integer product `self^T * other`; both matrices must cover the
    /// same individuals (rows).
    pub fn transpose_multiply(&self, other: &BinaryMatrix) -> Vec<Vec<u64>> {
        assert_eq!(self.rows, other.rows, "individual counts differ");
        let mut out = vec![vec![0u64; other.cols]; self.cols];
        for i in 0..self.rows {
            for a in 0..self.cols {
                if self.get(i, a) == 1 {
                    for b in 0..other.cols {
                        out[a][b] += other.get(i, b) as u64;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eye_color() -> MultiValuedVariable {
        // Five individuals, first one ambiguous between green and blue.
        parse_observations(
            "eyes",
            &[
                vec!["green", "blue"],
                vec!["brown"],
                vec!["green"],
                vec!["brown"],
                vec!["green"],
            ],
            Some(&["green", "blue", "brown"]),
        )
        .unwrap()
    }

    fn hair_color() -> MultiValuedVariable {
        parse_observations(
            "hair",
            &[
                vec!["black"],
                vec!["black"],
                vec!["blond", "black"],
                vec!["blond"],
                vec!["blond"],
            ],
            Some(&["blond", "black"]),
        )
        .unwrap()
    }

    #[test]
    fn parse_sorts_labels_without_vocabulary() {
        let v = parse_observations(
            "eyes",
            &[
                vec!["green", "blue"],
                vec!["brown"],
                vec!["green"],
                vec!["brown"],
                vec!["green"],
            ],
            None::<&[&str]>,
        )
        .unwrap();
        assert_eq!(v.modalities(), &["blue", "brown", "green"]);
        let sets: Vec<Vec<usize>> = v
            .observations()
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1], vec![2], vec![1], vec![2]]);
    }

    #[test]
    fn parse_respects_vocabulary_order() {
        let v = parse_observations("hair", &[vec!["black"]], Some(&["blond", "black"])).unwrap();
        assert_eq!(v.individuals(), 1);
        assert_eq!(v.observations()[0], BTreeSet::from([1]));
    }

    #[test]
    fn parse_rejects_empty_set() {
        let err = parse_observations("v", &[Vec::<&str>::new()], None::<&[&str]>).unwrap_err();
        assert_eq!(err.to_string(), "empty observation set at individual 0");
    }

    #[test]
    fn parse_rejects_unknown_label() {
        let err = parse_observations("v", &[vec!["x"]], Some(&["a", "b"])).unwrap_err();
        assert!(matches!(err, Error::UnknownLabel { individual: 0, .. }));
    }

    #[test]
    fn parse_rejects_empty_input() {
        let rows: Vec<Vec<&str>> = vec![];
        assert!(matches!(
            parse_observations("v", &rows, None::<&[&str]>),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn parse_rejects_duplicate_vocabulary() {
        let err = parse_observations("v", &[vec!["a"]], Some(&["a", "a"])).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn duplicates_within_observation_collapse() {
        let v = parse_observations("v", &[vec!["a", "a", "b"]], None::<&[&str]>).unwrap();
        assert_eq!(v.observations()[0].len(), 2);
    }

    #[test]
    fn label_round_trip_is_identity() {
        let v = eye_color();
        let rendered = v.label_sets();
        let again = parse_observations(v.name(), &rendered, Some(v.modalities())).unwrap();
        assert_eq!(v, again);
    }

    #[test]
    fn meet_matrix_matches_hand_worked_case() {
        let x = eye_color();
        let expect = BinaryMatrix::from_rows(&[
            &[0, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
        ]);
        assert_eq!(x.meet_matrix(), expect);
    }

    #[test]
    fn join_matrix_matches_hand_worked_case() {
        let x = eye_color();
        let expect = BinaryMatrix::from_rows(&[
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
        ]);
        assert_eq!(x.join_matrix(), expect);

        let y = hair_color();
        let expect_y =
            BinaryMatrix::from_rows(&[&[0, 1], &[0, 1], &[1, 1], &[1, 0], &[1, 0]]);
        assert_eq!(y.join_matrix(), expect_y);
    }

    #[test]
    fn singleton_only_meet_equals_join_and_unique_completion() {
        let v = parse_observations("v", &[vec!["a"], vec!["b"]], None::<&[&str]>).unwrap();
        assert_eq!(v.meet_matrix(), v.join_matrix());
        let all: Vec<_> = v.enumerate_completions(10).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], v.meet_matrix());
    }

    #[test]
    fn full_ambiguity_gives_zero_meet() {
        let v = parse_observations(
            "v",
            &[vec!["a", "b"], vec!["a", "b"]],
            None::<&[&str]>,
        )
        .unwrap();
        let meet = v.meet_matrix();
        assert_eq!(meet, BinaryMatrix::zeros(2, 2));
    }

    #[test]
    fn completions_enumerate_both_tables() {
        let x = eye_color();
        let all: Vec<_> = x.enumerate_completions(100).unwrap().collect();
        assert_eq!(all.len(), 2);
        // First choice for the ambiguous individual is green, then blue.
        let x1 = BinaryMatrix::from_rows(&[
            &[1, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
        ]);
        let x2 = BinaryMatrix::from_rows(&[
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 0, 0],
            &[0, 0, 1],
            &[1, 0, 0],
        ]);
        assert_eq!(all, vec![x1, x2]);
    }

    #[test]
    fn completion_guard_reports_count_and_limit() {
        let v = parse_observations(
            "v",
            &[vec!["a", "b"], vec!["a", "b"], vec!["a", "b"]],
            None::<&[&str]>,
        )
        .unwrap();
        match v.enumerate_completions(4) {
            Err(Error::EnumerationTooLarge { count, limit }) => {
                assert_eq!(count, 8);
                assert_eq!(limit, 4);
            }
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    prop_compose! {
        fn small_variable()(m in 1usize..5, q in 1usize..4)
            (sets in proptest::collection::vec(
                proptest::collection::btree_set(0usize..q, 1..=q), m),
             q in Just(q))
            -> MultiValuedVariable
        {
            let labels = (0..q).map(|j| format!("m{j}")).collect();
            MultiValuedVariable::new("v", labels, sets).unwrap()
        }
    }

    proptest! {
        #[test]
        fn completions_sit_between_meet_and_join(v in small_variable()) {
            let meet = v.meet_matrix();
            let join = v.join_matrix();
            let mut seen = std::collections::BTreeSet::new();
            let mut count = 0u128;
            for c in v.enumerate_completions(1 << 12).unwrap() {
                count += 1;
                for i in 0..c.rows() {
                    prop_assert_eq!(c.row_sum(i), 1);
                    for j in 0..c.cols() {
                        prop_assert!(meet.get(i, j) <= c.get(i, j));
                        prop_assert!(c.get(i, j) <= join.get(i, j));
                    }
                }
                seen.insert(format!("{c:?}"));
            }
            prop_assert_eq!(count, v.completion_count());
            prop_assert_eq!(seen.len() as u128, count);
        }

        #[test]
        fn meet_and_join_row_sums(v in small_variable()) {
            let meet = v.meet_matrix();
            let join = v.join_matrix();
            for (i, set) in v.observations().iter().enumerate() {
                prop_assert!(meet.row_sum(i) <= 1);
                prop_assert_eq!(join.row_sum(i), set.len());
            }
        }
    }
}
