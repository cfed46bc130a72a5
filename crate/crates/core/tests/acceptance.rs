//! Acceptance gate: the nine verification criteria, one test (and one
//! pass/fail line) each. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every comparison is exact.

use hyperell::verify::{
    criterion_biholomorphism, criterion_diffeomorphism, criterion_free_counts, criterion_hodge,
    criterion_kernels, criterion_orders, criterion_properties, criterion_screening,
    criterion_special_classes, Check,
};

fn gate(name: &str, checks: Vec<Check>) {
    let pass = checks.iter().all(|c| c.pass);
    println!("{}: {}", name, if pass { "PASS" } else { "FAIL" });
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!("  {}: expected {}, got {}", c.id, c.expected, c.actual);
    }
    assert!(pass, "{name} failed");
}

#[test]
fn criterion_1_screening() {
    gate("criterion 1 (screening)", criterion_screening());
}

#[test]
fn criterion_2_kernels() {
    gate("criterion 2 (kernels)", criterion_kernels());
}

#[test]
fn criterion_3_free_action_counts() {
    gate("criterion 3 (free-action counts)", criterion_free_counts());
}

#[test]
fn criterion_4_special_classes() {
    gate("criterion 4 (special cohomology classes)", criterion_special_classes());
}

#[test]
fn criterion_5_biholomorphism() {
    gate("criterion 5 (biholomorphism classification)", criterion_biholomorphism());
}

#[test]
fn criterion_6_diffeomorphism() {
    gate("criterion 6 (diffeomorphism classification)", criterion_diffeomorphism());
}

#[test]
fn criterion_7_orders() {
    gate("criterion 7 (group and normalizer orders)", criterion_orders());
}

#[test]
fn criterion_8_hodge_diamonds() {
    gate("criterion 8 (Hodge diamonds)", criterion_hodge());
}

#[test]
fn criterion_9_property_suites() {
    gate("criterion 9 (property suites)", criterion_properties());
}
