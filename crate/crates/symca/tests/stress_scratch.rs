use symca::verify::{degenerate_suite, rectangle_suite, table_construction_suite};

#[test]
fn beyond_spec_scale() {
    // Larger tables: 2^8 vertices per modality, eight axes retained.
    let r = rectangle_suite(99, 300, 8);
    assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(3)]);
    println!("rectangles up to 8x8: {}", r.summary_line());

    let d = degenerate_suite(99, 300, 8);
    assert!(d.passed(), "{:?}", &d.failures[..d.failures.len().min(3)]);
    println!("degenerate up to 8x8: {}", d.summary_line());

    // More individuals with a wider guard.
    let t = table_construction_suite(99, 150, 8, 10_000_000);
    assert!(t.passed(), "{:?}", &t.failures[..t.failures.len().min(3)]);
    println!("construction m<=8: {}", t.summary_line());
}
