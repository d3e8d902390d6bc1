// Shared between test targets; not every target uses every helper.
#![allow(dead_code)]

use symca::{parse_observations, IntervalTable, MultiValuedVariable, TableFormat};

/// The eye/hair study table shipped with the repository.
pub const EYE_HAIR_JSON: &str = include_str!("../../../../data/eye_hair_table.json");

pub fn eye_hair_table() -> IntervalTable {
    symca::read_interval_table(EYE_HAIR_JSON.as_bytes(), TableFormat::Json)
        .expect("bundled table parses")
}

/// Five-individual survey with one ambiguous answer per variable, in the
/// original modality order (eyes: green, blue, brown; hair: blond, black).
pub fn example_pair() -> (MultiValuedVariable, MultiValuedVariable) {
    let x = parse_observations(
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
    .unwrap();
    let y = parse_observations(
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
    .unwrap();
    (x, y)
}
