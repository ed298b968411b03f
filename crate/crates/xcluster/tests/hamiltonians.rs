//! Exact invariance of the autonomous Hamiltonians under the full listed
//! generator sets, plus the negative control without the constraint.

use xcluster::{case, case_labels, hamiltonian_residual_unconstrained, verify_hamiltonian};

fn check_case(label: &str) {
    let c = case(label).unwrap();
    for g in &c.hamiltonian_generators {
        let residual = verify_hamiltonian(&c, g).unwrap();
        assert!(
            residual.is_zero(),
            "{label}: H must be exactly invariant under {g}, residual {residual}"
        );
    }
}

#[test]
fn three_vertex_hamiltonian_is_invariant() {
    check_case("A8");
}

#[test]
fn four_cycle_hamiltonian_is_invariant() {
    check_case("A7p");
}

#[test]
fn doubled_four_vertex_hamiltonian_is_invariant() {
    check_case("A7");
}

#[test]
fn five_vertex_hamiltonian_is_invariant() {
    check_case("A6");
}

#[test]
fn six_vertex_hamiltonian_is_invariant() {
    check_case("A5");
}

#[test]
fn seven_vertex_hamiltonian_is_invariant() {
    check_case("A4");
}

#[test]
fn eight_vertex_hamiltonian_is_invariant() {
    check_case("A3");
}

#[test]
fn nine_vertex_hamiltonian_is_invariant() {
    check_case("A2");
}

#[test]
fn invariance_requires_the_constraint() {
    // Negative control: without the constraint the residual must not vanish.
    let c = case("A7p").unwrap();
    let raw = hamiltonian_residual_unconstrained(&c, "T").unwrap();
    assert!(!raw.is_zero());
}

#[test]
fn every_case_declares_a_hamiltonian_and_generators() {
    for label in case_labels() {
        let c = case(label).unwrap();
        assert!(c.hamiltonian.is_some(), "{label} must carry a Hamiltonian");
        assert!(!c.hamiltonian_generators.is_empty());
    }
}
