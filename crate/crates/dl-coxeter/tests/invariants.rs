//! Suite-level invariants of the Weyl-combinatorics layer.

use dl_coxeter::suites;

#[test]
fn about_sigma_suite() {
    let n = suites::about_sigma(0).unwrap();
    assert!(n >= 18);
}

#[test]
fn wi_twisted_coxeter_suite() {
    suites::wi_twisted_coxeter(0).unwrap();
}

#[test]
fn closure_sets_suite() {
    let n = suites::closure_sets(0).unwrap();
    assert_eq!(n, 11); // four families, ranks min..=3
}

#[test]
fn torus_counts_suite() {
    let n = suites::torus_counts(2).unwrap();
    assert!(n > 10);
}

#[test]
fn torus_shapes_suite() {
    suites::torus_shapes(0).unwrap();
}
