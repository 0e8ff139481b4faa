//! End-to-end acceptance suite.
//!
//! Each test drives one criterion through the built-in verification suites
//! and prints a single pass/fail line (visible with --nocapture). All
//! comparisons are bit-exact; there are no tolerances anywhere.

use equimod::verify::{run_suite, ClaimReport};

fn run_criterion(index: usize, title: &str, suite_names: &[&str]) {
    let mut failures: Vec<String> = Vec::new();
    for name in suite_names {
        let reports: Vec<ClaimReport> =
            run_suite(name).unwrap_or_else(|| panic!("unknown suite {name}"));
        for report in reports {
            if !report.pass {
                failures.push(format!(
                    "[{name}] {}: {}",
                    report.label,
                    report.detail.as_deref().unwrap_or("failed")
                ));
            }
        }
    }
    if failures.is_empty() {
        println!("PASS criterion {index}: {title}");
    } else {
        println!("FAIL criterion {index}: {title}");
        for f in &failures {
            println!("    {f}");
        }
        panic!("criterion {index} failed:\n{}", failures.join("\n"));
    }
}

#[test]
fn criterion_01_factorization_and_closed_minor_formula() {
    run_criterion(
        1,
        "closed minor formula and L*H factorization over the full (a, b, r) grid",
        &["factorization"],
    );
}

#[test]
fn criterion_02_fibonacci_window_minors() {
    run_criterion(
        2,
        "windowed Fibonacci Toeplitz minors with their Lucas prefactors",
        &["fibonacci-windows"],
    );
}

#[test]
fn criterion_03_pell_window_minors() {
    run_criterion(
        3,
        "windowed Pell Toeplitz minors with their doubled prefactors",
        &["pell-windows"],
    );
}

#[test]
fn criterion_04_six_family_equimodular() {
    run_criterion(
        4,
        "the six displayed matrices are equimodular with shifted Fibonacci minors",
        &["six-family"],
    );
}

#[test]
fn criterion_05_six_family_random_pairs() {
    run_criterion(
        5,
        "six-matrix equimodularity for 50 random sequence pairs",
        &["six-family-random"],
    );
}

#[test]
fn criterion_06_toeplitz_abc_engines_agree() {
    run_criterion(
        6,
        "recurrence, closed form, and oracle agree for 200 random three-value Toeplitz samples",
        &["toeplitz-abc"],
    );
}

#[test]
fn criterion_07_solved_families_round_trip() {
    run_criterion(
        7,
        "solver reproduces the quoted families and their named minor sequences",
        &["solved-families"],
    );
}

#[test]
fn criterion_08_pascal_jacobsthal_minors() {
    run_criterion(
        8,
        "doubling-border Pascal triangles give Jacobsthal minors",
        &["pascal-jacobsthal"],
    );
}

#[test]
fn criterion_09_tabulated_rows() {
    run_criterion(
        9,
        "every tabulated Toeplitz/Pascal/7-matrix row reproduces its minor sequence",
        &["table1", "table2", "table3"],
    );
}

#[test]
fn criterion_10_bespoke_families() {
    run_criterion(
        10,
        "bespoke integer families give Fibonacci, Lucas, and signed triangular minors",
        &["bespoke"],
    );
}

#[test]
fn criterion_11_recurrence_identities() {
    run_criterion(
        11,
        "transformed-window recurrences, anchored decomposition, and addition identities",
        &["gibonacci-identities"],
    );
}

#[test]
fn criterion_12_property_suites() {
    run_criterion(
        12,
        "transform inversion, engine agreement, zero-minor handling, swap symmetry",
        &["properties"],
    );
}
