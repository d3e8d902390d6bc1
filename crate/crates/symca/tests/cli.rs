mod common;

use symca::{read_interval_table, read_result_json, TableFormat};

fn run(args: &[&str]) -> i32 {
    symca::cli::run(args.iter().map(|s| s.to_string()))
}

#[test]
fn build_table_matches_fast_path() {
    let dir = tempfile::tempdir().unwrap();
    let survey = dir.path().join("survey.csv");
    std::fs::write(
        &survey,
        "eyes,hair\n\
         green|blue,black\n\
         brown,black\n\
         green,blond|black\n\
         brown,blond\n\
         green,blond\n",
    )
    .unwrap();
    let out = dir.path().join("table.json");
    assert_eq!(
        run(&[
            "symca",
            "build-table",
            "--survey",
            survey.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ]),
        0
    );
    let table =
        read_interval_table(&std::fs::read(&out).unwrap(), TableFormat::Json).unwrap();

    // The CSV reader sorts vocabularies, so compare cells by label against
    // the hand-worked table in its original order.
    let (x, y) = common::example_pair();
    let reference = symca::interval_contingency(&x, &y).unwrap();
    for (i, rl) in reference.row_labels().iter().enumerate() {
        for (j, cl) in reference.col_labels().iter().enumerate() {
            let ti = table.row_labels().iter().position(|l| l == rl).unwrap();
            let tj = table.col_labels().iter().position(|l| l == cl).unwrap();
            assert_eq!(table.cell(ti, tj), reference.cell(i, j), "cell {rl}/{cl}");
        }
    }
}

#[test]
fn analyze_reports_point_rectangles_for_slack_free_column() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.json");
    std::fs::write(&table, common::EYE_HAIR_JSON).unwrap();
    let out = dir.path().join("result.json");
    assert_eq!(
        run(&[
            "symca",
            "analyze",
            "--table",
            table.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
        ]),
        0
    );
    let doc = read_result_json(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(doc.eigenvalues.len(), 3);
    let black = doc.cols.iter().find(|m| m.label == "black-h").unwrap();
    for a in 0..2 {
        assert_eq!(black.rect_lo[a], black.rect_hi[a]);
    }
}

#[test]
fn analyze_accepts_csv_tables_and_axis_limit() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.csv");
    std::fs::write(
        &table,
        ",black-h,brown-h,red-h,blond-h\n\
         black-e,60:60,119:123,20:28,4:7\n\
         brown-e,15:15,50:58,14:20,5:11\n\
         green-e,5:5,24:26,10:12,11:12\n\
         blue-e,20:20,70:84,16:17,90:100\n",
    )
    .unwrap();
    let out = dir.path().join("result.json");
    assert_eq!(
        run(&[
            "symca",
            "analyze",
            "--table",
            table.to_str().unwrap(),
            "--axes",
            "2",
            "-o",
            out.to_str().unwrap(),
        ]),
        0
    );
    let doc = read_result_json(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(doc.eigenvalues.len(), 2);
}

#[test]
fn analyze_drop_empty_rescues_zero_margins() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.csv");
    std::fs::write(
        &table,
        ",u,v\n\
         a,1:2,3:3\n\
         b,0:0,0:0\n\
         c,2:2,1:4\n",
    )
    .unwrap();
    let out = dir.path().join("result.json");
    let args_base = [
        "symca",
        "analyze",
        "--table",
        table.to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ];
    assert_eq!(run(&args_base), 1, "zero margin must be rejected by default");
    let mut args = args_base.to_vec();
    args.push("--drop-empty");
    assert_eq!(run(&args), 0);
    let doc = read_result_json(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(doc.rows.len(), 2);
}

#[test]
fn plot_renders_requested_axes() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table.json");
    std::fs::write(&table, common::EYE_HAIR_JSON).unwrap();
    let result = dir.path().join("result.json");
    assert_eq!(
        run(&[
            "symca",
            "analyze",
            "--table",
            table.to_str().unwrap(),
            "-o",
            result.to_str().unwrap(),
        ]),
        0
    );
    let svg_path = dir.path().join("plane.svg");
    assert_eq!(
        run(&[
            "symca",
            "plot",
            "--result",
            result.to_str().unwrap(),
            "--axes",
            "0,2",
            "-o",
            svg_path.to_str().unwrap(),
        ]),
        0
    );
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("axis 3"));

    // An unretained axis is a validation error.
    assert_eq!(
        run(&[
            "symca",
            "plot",
            "--result",
            result.to_str().unwrap(),
            "--axes",
            "0,7",
            "-o",
            svg_path.to_str().unwrap(),
        ]),
        1
    );
}

#[test]
fn verify_small_run_exits_zero() {
    assert_eq!(
        run(&[
            "symca",
            "verify",
            "--seed",
            "7",
            "--instances",
            "10",
            "--max-individuals",
            "5",
        ]),
        0
    );
}

#[test]
fn bad_invocations_exit_one() {
    assert_eq!(run(&["symca", "frobnicate"]), 1);
    assert_eq!(
        run(&["symca", "analyze", "--table", "/no/such/file.json", "-o", "/tmp/x.json"]),
        1
    );
    assert_eq!(run(&["symca", "--help"]), 0);
}
