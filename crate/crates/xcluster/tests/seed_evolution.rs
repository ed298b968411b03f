//! Seed-level behavior: worked mutation examples, involutivity, quiver
//! stabilization and the behavior of the product of all variables.

use quivers::{Atom, GroupWord};
use ratexpr::RatExpr;
use xcluster::{case, case_labels, coordinate_image, FactoredSeed, XSeed};

fn single(atom: Atom) -> GroupWord {
    GroupWord::new(vec![atom])
}

#[test]
fn mutation_is_an_involution_at_every_vertex() {
    for label in case_labels() {
        let c = case(label).unwrap();
        let seed = XSeed::initial(c.quiver.clone());
        for j in 1..=c.n() {
            let back = seed.mutate(j).unwrap().mutate(j).unwrap();
            assert!(
                back.seed_equals(&seed),
                "{label}: mutate twice at {j} must restore the seed"
            );
        }
    }
}

#[test]
fn inversion_inverts_every_variable_and_reverses_arrows() {
    for label in case_labels() {
        let c = case(label).unwrap();
        let seed = XSeed::initial(c.quiver.clone());
        let inv = seed.invert().unwrap();
        for i in 1..=c.n() {
            assert!(inv.var(i).equals(&seed.var(i).inv().unwrap()));
        }
        for i in 1..=c.n() {
            for j in 1..=c.n() {
                assert_eq!(inv.quiver().eps(i, j), -seed.quiver().eps(i, j));
            }
        }
        assert!(inv.invert().unwrap().seed_equals(&seed));
    }
}

#[test]
fn identity_word_leaves_the_seed_unchanged() {
    let c = case("A6").unwrap();
    let seed = XSeed::initial(c.quiver.clone());
    let same = seed.apply_word(&GroupWord::identity()).unwrap();
    assert!(same.seed_equals(&seed));
}

#[test]
fn every_generator_word_stabilizes_its_quiver() {
    for label in case_labels() {
        let c = case(label).unwrap();
        let seed = XSeed::initial(c.quiver.clone());
        for (name, w) in &c.generators {
            let acted = seed.apply_word(w).unwrap();
            assert_eq!(
                acted.quiver(),
                &c.quiver,
                "{label}: generator {name} must return the case quiver"
            );
        }
    }
}

#[test]
fn product_of_variables_transforms_by_the_exact_mutation_law() {
    // A single mutation at vertex j sends q = ∏ y_i to q · y_j^{d-2} where
    // d is the weighted in-degree of j; in particular q is fixed at every
    // vertex of the 3- and 4-vertex quivers (d = 2 throughout).
    for label in case_labels() {
        let c = case(label).unwrap();
        let q = c.coord("q").expect("every case names q");
        for j in 1..=c.n() {
            let indeg: i64 = (1..=c.n())
                .map(|i| i64::from(c.quiver.eps(i, j).max(0)))
                .sum();
            let img = coordinate_image(&c, &single(Atom::Mut(j)), "q").unwrap();
            let yj = RatExpr::gen(&format!("y{j}"));
            let expected = q.mul_ref(&yj.pow_i(indeg - 2).unwrap());
            assert!(
                img.equals(&expected),
                "{label}: mutation at {j} must scale the product by y{j}^{}",
                indeg - 2
            );
        }
    }
}

#[test]
fn product_of_variables_is_fixed_by_every_generator_up_to_inversion_parity() {
    // The generator words stabilize the quiver, so they fix q — inverted
    // once per inversion atom in the word.
    for label in case_labels() {
        let c = case(label).unwrap();
        let q = c.coord("q").unwrap();
        for (name, w) in &c.generators {
            let inversions = w.atoms().iter().filter(|a| matches!(a, Atom::Inv)).count();
            let expected = if inversions % 2 == 0 {
                q.clone()
            } else {
                q.inv().unwrap()
            };
            let img = coordinate_image(&c, w, "q").unwrap();
            assert!(
                img.equals(&expected),
                "{label}: generator {name} must fix the product up to inversion parity"
            );
        }
    }
    // Inversion alone sends the product to its reciprocal.
    let c = case("A7p").unwrap();
    let q = c.coord("q").unwrap().clone();
    let img = coordinate_image(&c, &single(Atom::Inv), "q").unwrap();
    assert!(img.equals(&q.inv().unwrap()));
}

#[test]
fn factored_and_plain_seeds_agree_along_a_word() {
    let c = case("A6").unwrap();
    let w = c.generator("T").unwrap();
    let plain = XSeed::initial(c.quiver.clone()).apply_word(w).unwrap();
    let fact = FactoredSeed::initial(c.quiver.clone()).apply_word(w).unwrap();
    for i in 1..=c.n() {
        assert!(fact.var(i).expand().unwrap().equals(plain.var(i)));
    }
}

#[test]
fn transcribed_closed_forms_reach_expected_expressions() {
    // One spot check in explicit form, independent of the transcription
    // tables: the 4-cycle quiver under its translation word.
    let c = case("A7p").unwrap();
    let seed = XSeed::initial(c.quiver.clone())
        .apply_word(c.generator("T").unwrap())
        .unwrap();
    let y = |i: usize| RatExpr::gen(&format!("y{i}"));
    let one = RatExpr::one();
    // (y2 (y3+1)^2 / (y1^{-1}+1)^2, y1^{-1}, y4 (y1+1)^2 / (y3^{-1}+1)^2, y3^{-1})
    let e1 = y(2)
        .mul_ref(&y(3).add_ref(&one).pow_i(2).unwrap())
        .div_ref(&y(1).inv().unwrap().add_ref(&one).pow_i(2).unwrap())
        .unwrap();
    assert!(seed.var(1).equals(&e1));
    assert!(seed.var(2).equals(&y(1).inv().unwrap()));
    assert!(seed.var(4).equals(&y(3).inv().unwrap()));
}
