//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible under `--nocapture`) and holding the stated time budget.
//! Every comparison is exact rational/integer equality.

use std::time::Duration;

use tautring_cli::verify::{self, CheckOutcome};

fn expect_pass(criterion: u32, outcome: CheckOutcome, budget: Duration) {
    println!(
        "criterion {criterion:2} {}: {} in {:.2?} ({})",
        outcome.name,
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.elapsed,
        outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {criterion} ({}) failed: {}",
        outcome.name, outcome.detail
    );
    assert!(
        outcome.elapsed <= budget,
        "criterion {criterion} ({}) took {:.2?}, budget {:.2?}",
        outcome.name,
        outcome.elapsed,
        budget
    );
}

#[test]
fn criterion_01_table_reproduction() {
    expect_pass(1, verify::check_tables(), Duration::from_secs(1));
}

#[test]
fn criterion_02_beta_vanishing_theorem() {
    expect_pass(2, verify::check_beta_theorem(), Duration::from_secs(60));
}

#[test]
fn criterion_03_beta_r1_stirling_form() {
    expect_pass(3, verify::check_beta_r1_stirling(), Duration::from_secs(5));
}

#[test]
fn criterion_04_stirling_alternating_sum() {
    expect_pass(
        4,
        verify::check_stirling_alternating(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_secant_count_identity() {
    expect_pass(5, verify::check_secant_identities(), Duration::from_secs(5));
}

#[test]
fn criterion_06_monomial_coefficient_identity() {
    expect_pass(
        6,
        verify::check_monomial_coefficient_identity(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_07_hyperplane_class() {
    expect_pass(7, verify::check_chow(), Duration::from_secs(10));
}

#[test]
fn criterion_08_pullback_recursion() {
    expect_pass(8, verify::check_recursion(5), Duration::from_secs(300));
}

#[test]
fn criterion_09_pushforward_multiplicities() {
    expect_pass(
        9,
        verify::check_sigma_multiplicities(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_pipeline_closure() {
    expect_pass(
        10,
        verify::check_pipeline_closure(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_11_summation_lemmas() {
    expect_pass(11, verify::check_sum_lemmas(), Duration::from_secs(30));
}

#[test]
fn criterion_12_first_nontrivial_threshold() {
    expect_pass(
        12,
        verify::check_first_nontrivial_threshold(),
        Duration::from_secs(120),
    );
}
