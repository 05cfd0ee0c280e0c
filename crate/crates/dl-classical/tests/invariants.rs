//! Suite-level invariants of the classical-groups layer.

use dl_classical::suites;

#[test]
fn self_reciprocity_suite() {
    let n = suites::self_reciprocity(15).unwrap();
    assert!(n >= 100);
}

#[test]
fn eigen_parity_suite() {
    suites::eigen_parity(60).unwrap();
}

#[test]
fn counting_flags_suite() {
    let n = suites::counting_flags(20).unwrap();
    assert!(n > 20);
}

#[test]
fn projection_regularity_suite() {
    suites::projection_regularity(12).unwrap();
}

#[test]
fn non_split_certificate_suite() {
    suites::non_split_certificate(0).unwrap();
}
