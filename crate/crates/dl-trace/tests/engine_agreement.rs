//! Engine/closed-form agreement and the supporting consistency sweeps,
//! at reduced budgets (the acceptance suite runs the full budgets).

use dl_trace::suites;

#[test]
fn engine_equals_closed_form_sampled() {
    let n = suites::engine_closed_form(25).unwrap();
    assert!(n >= 25 * 20);
}

#[test]
fn torus_modes_agree_sampled() {
    suites::torus_consistency(6).unwrap();
}

#[test]
fn zero_diagnosis_sound_sampled() {
    suites::zero_diagnosis(20).unwrap();
}
