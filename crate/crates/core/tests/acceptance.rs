//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line.  `cargo test --test acceptance -- --nocapture` shows the
//! lines; the `turan verify` subcommand runs the same checks.

use turan_core::verify;

fn run(report: verify::CriterionReport) {
    println!("{}", report.line());
    assert!(report.pass, "{}", report.line());
}

#[test]
fn criterion_01_turan_equality_on_complete_graphs() {
    run(verify::check_turan_complete());
}

#[test]
fn criterion_02_oracle_equivalence() {
    run(verify::check_oracle_equivalence());
}

#[test]
fn criterion_03_standard_observation() {
    run(verify::check_standard_observation());
}

#[test]
fn criterion_04_pattern_family_suite() {
    run(verify::check_pattern_family_suite());
}

#[test]
fn criterion_05_constants() {
    run(verify::check_constants());
}

#[test]
fn criterion_06_janson_validity() {
    run(verify::check_janson_validity());
}

#[test]
fn criterion_07_riordan_warnke_reduction() {
    run(verify::check_riordan_warnke_reduction());
}

#[test]
fn criterion_08_completion_family_second_moment() {
    run(verify::check_completion_second_moment());
}

#[test]
fn criterion_09_counting_oracles() {
    run(verify::check_counting_oracles());
}

#[test]
fn criterion_10_rigidity_fixture() {
    run(verify::check_rigidity_fixture());
}

#[test]
fn criterion_11_equitable_edge_coloring() {
    run(verify::check_coloring());
}

#[test]
fn criterion_12_deterministic_endpoints() {
    run(verify::check_deterministic_endpoints());
}

#[test]
fn criterion_13_stopping_time_study() {
    run(verify::check_stopping_time_study());
}
