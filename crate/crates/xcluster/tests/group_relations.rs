//! The full symbolic relation suite: generator involutions, the 4-cycle
//! relation set, commuting Weyl subgroups and the Coxeter braid relations of
//! every case. Each relation is an exact identity of seeds.

use xcluster::{case, verify_relation};

fn check_case(label: &str) {
    let c = case(label).unwrap();
    assert!(!c.relations.is_empty(), "{label} must declare relations");
    for r in &c.relations {
        let ok = verify_relation(&c, &r.lhs, &r.rhs).unwrap();
        assert!(ok, "{label}: relation {} must hold", r.name);
    }
}

#[test]
fn three_vertex_relations_hold() {
    check_case("A8");
}

#[test]
fn four_cycle_relations_hold() {
    check_case("A7p");
}

#[test]
fn five_vertex_relations_hold() {
    check_case("A6");
}

#[test]
fn six_vertex_relations_hold() {
    check_case("A5");
}

#[test]
fn seven_vertex_relations_hold() {
    check_case("A4");
}

#[test]
fn eight_vertex_relations_hold() {
    check_case("A3");
}

#[test]
fn nine_vertex_relations_hold() {
    check_case("A2");
}

#[test]
fn a_relation_that_is_false_is_detected() {
    // Negative control: the translation word has infinite order.
    let c = case("A7p").unwrap();
    let t = c.generator("T").unwrap();
    let ok = verify_relation(&c, &t.repeat(2), &quivers::GroupWord::identity()).unwrap();
    assert!(!ok);
}
