//! Acceptance gate: one test per release criterion, each driving the
//! corresponding verification suite at its full documented bounds and
//! printing a single pass or fail line.

use planarb::verify::{run_suite, SuiteConfig};

const SEED: u64 = 0x5eed_2026;

fn gate(criterion: u32, suite: &str) {
    let cfg = SuiteConfig::acceptance(SEED);
    let outcome = run_suite(suite, &cfg).expect("known suite name");
    let flag = if outcome.passed() { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {flag} [{}]", outcome.summary());
    assert!(
        outcome.passed(),
        "criterion {criterion}: {}",
        outcome.summary()
    );
}

#[test]
fn criterion_1_families_are_annihilated() {
    gate(1, "annihilation");
}

#[test]
fn criterion_2_ladder_identities_hold() {
    gate(2, "ladder");
}

#[test]
fn criterion_3_operator_recurrences_hold() {
    gate(3, "recurrences");
}

#[test]
fn criterion_4_shifted_basis_laws_hold() {
    gate(4, "shifted-basis");
}

#[test]
fn criterion_5_closed_form_evaluations_hold() {
    gate(5, "closed-forms");
}

#[test]
fn criterion_6_norms_agree_and_are_positive() {
    gate(6, "norms");
}

#[test]
fn criterion_7_summation_laws_hold() {
    gate(7, "summation-laws");
}

#[test]
fn criterion_8_oscillator_eigenfunctions_hold() {
    gate(8, "oscillator");
}

#[test]
fn criterion_9_classical_limit_degenerates() {
    gate(9, "classical-limit");
}
