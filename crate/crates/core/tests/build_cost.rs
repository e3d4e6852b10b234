use uhs_core::instrumentation::{build_comparison_bound, build_cost_audit};
use uhs_core::Error;

#[test]
fn build_stays_under_two_comparisons_per_element() {
    let sizes: Vec<usize> = (1..=20).map(|p| 1 << p).chain([3, 5, 1000, 4097]).collect();
    let audit = build_cost_audit(&sizes, 11).unwrap();
    assert_eq!(audit.rows.len(), sizes.len());
    for row in &audit.rows {
        assert!(row.comparisons <= build_comparison_bound(row.n), "n = {}", row.n);
    }
    assert!(audit.max_ratio() < 2.0);
}

#[test]
fn empty_build_is_rejected() {
    assert!(matches!(build_cost_audit(&[0], 0), Err(Error::Domain(_))));
}
