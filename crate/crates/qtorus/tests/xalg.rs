//! Quantum X-cluster seeds on the 4-cycle quiver: exchange relations,
//! mutation closed forms, Casimir flow, and Toda invariance.

use qtorus::skew::{rat, SkewFraction};
use qtorus::xalg::{
    a7p_quiver, a7p_x_context, casimir_q, casimir_z, q_one_substitute, toda_hamiltonian_from,
    translation_closed_form, translation_word, QuantumXSeed,
};

fn initial() -> QuantumXSeed {
    QuantumXSeed::initial(&a7p_x_context(), a7p_quiver())
}

#[test]
fn initial_half_variables_satisfy_exchange_relations() {
    let seed = initial();
    assert!(seed.relations_hold());
    // Full variables: y_i y_j = p^{-2 eps_ij} y_j y_i.
    let q = seed.quiver().clone();
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                assert!(seed.var(i).exchanges_as(&seed.var(j), &rat(-2 * q.eps(i, j))));
            }
        }
    }
}

#[test]
fn translation_word_matches_closed_form() {
    let ctx = a7p_x_context();
    let seed = initial();
    let image = seed.apply_word(&translation_word()).unwrap();
    let closed = translation_closed_form(&ctx);
    for i in 1..=4 {
        assert!(
            image.half_var(i).equals(&closed[i - 1]),
            "vertex {i}: engine {:?} vs closed {:?}",
            image.half_var(i),
            closed[i - 1]
        );
    }
}

#[test]
fn squared_mutation_is_the_two_factor_product_form() {
    // One mutation at vertex 1: squaring the half-variable images gives
    // y_i (1 + p y_1^{s})^{s} (1 + p^3 y_1^{s})^{s} for eps_i1 = 2s.
    let ctx = a7p_x_context();
    let seed = initial();
    let m = seed.mutate(1).unwrap();
    let y = |i: usize| SkewFraction::gen(&ctx, &format!("y{i}"));
    let binom = |k: i64, s: i64| {
        let t = SkewFraction::p_pow(&ctx, rat(k)).mul(&y(1).pow_i(s).unwrap());
        SkewFraction::one(&ctx).add(&t)
    };
    let v4 = y(4).mul(&binom(1, 1)).mul(&binom(3, 1));
    assert!(m.var(4).equals(&v4));
    let v2 = y(2)
        .mul(&binom(1, -1).inv().unwrap())
        .mul(&binom(3, -1).inv().unwrap());
    assert!(m.var(2).equals(&v2));
}

#[test]
fn mutated_seeds_satisfy_relations_of_the_mutated_quiver() {
    let seed = initial();
    let m = seed.mutate(1).unwrap().mutate(3).unwrap();
    assert!(m.relations_hold());
    let t = seed.apply_word(&translation_word()).unwrap();
    assert!(t.relations_hold());
}

#[test]
fn casimirs_flow_as_z_to_qz_and_q_fixed() {
    let seed = initial();
    let t = seed.apply_word(&translation_word()).unwrap();
    let q0 = casimir_q(&seed);
    let z0 = casimir_z(&seed);
    let q1 = casimir_q(&t);
    let z1 = casimir_z(&t);
    assert!(q1.equals(&q0), "q changed: {q1:?}");
    assert!(z1.equals(&q0.mul(&z0)), "Z' != qZ: {z1:?}");
    // Both Casimirs are central: they commute with every half-variable.
    for i in 1..=4 {
        assert!(q0.exchanges_as(seed.half_var(i), &rat(0)));
        assert!(z0.exchanges_as(seed.half_var(i), &rat(0)));
    }
}

#[test]
fn toda_hamiltonian_is_translation_invariant_at_unit_multiplier() {
    let seed = initial();
    let t = seed.apply_word(&translation_word()).unwrap();
    let h0 = toda_hamiltonian_from(&[
        seed.half_var(1).clone(),
        seed.half_var(2).clone(),
        seed.half_var(3).clone(),
        seed.half_var(4).clone(),
    ])
    .unwrap();
    let h1 = toda_hamiltonian_from(&[
        t.half_var(1).clone(),
        t.half_var(2).clone(),
        t.half_var(3).clone(),
        t.half_var(4).clone(),
    ])
    .unwrap();
    // Without the constraint the image genuinely differs.
    assert!(!h1.equals(&h0));
    // Imposing q = 1 via y4 = (y1 y3 y2)^{-1} makes them agree exactly.
    let c0 = q_one_substitute(&h0).unwrap();
    let c1 = q_one_substitute(&h1).unwrap();
    assert!(c1.equals(&c0), "constrained images differ:\n{c1:?}\nvs\n{c0:?}");
}

#[test]
fn classical_limit_of_the_quantum_hamiltonian_is_the_classical_one() {
    let seed = initial();
    let h = toda_hamiltonian_from(&[
        seed.half_var(1).clone(),
        seed.half_var(2).clone(),
        seed.half_var(3).clone(),
        seed.half_var(4).clone(),
    ])
    .unwrap();
    let classical = xcluster::case("A7p").unwrap().hamiltonian.unwrap();
    assert!(h.classical_limit().equals(&classical));
}

#[test]
fn half_square_and_weyl_root_are_consistent() {
    let seed = initial();
    for i in 1..=4 {
        let back = seed.var(i).sqrt().unwrap();
        assert!(back.equals(seed.half_var(i)));
    }
    // A genuinely noncommutative monomial: (y1 y2)^{1/2} squares back.
    let ctx = a7p_x_context();
    let m = SkewFraction::gen(&ctx, "y1").mul(&SkewFraction::gen(&ctx, "y2"));
    let r = m.sqrt().unwrap();
    assert!(r.mul(&r).equals(&m));
}

#[test]
fn mutation_is_an_involution_on_seeds() {
    let seed = initial();
    for j in [1usize, 3] {
        let back = seed.mutate(j).unwrap().mutate(j).unwrap();
        assert!(back.seed_equals(&seed), "mu_{j} twice is not the identity");
    }
}
