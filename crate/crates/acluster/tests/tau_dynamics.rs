//! Tau-seed dynamics on the 4-cycle quiver: translation images, bilinear
//! equations, the induced exchange variables, and the Laurent property.

use std::collections::BTreeMap;

use acluster::{bilinear_residuals, g_coordinate, translation_word, TauSeed};
use ratexpr::{rat, RatExpr};

fn t(i: usize) -> RatExpr {
    RatExpr::gen(&format!("t{i}"))
}

fn mono(pairs: &[(&str, i64, i64)]) -> RatExpr {
    RatExpr::monomial(ratexpr::int(1), pairs)
}

#[test]
fn translation_acts_on_six_row_tau_variables_as_expected() {
    let seed = TauSeed::six_row().apply_word(&translation_word()).unwrap();
    // qz = q^{1/2} Z^{1/2}
    let qz = mono(&[("q", 1, 2), ("Z", 1, 2)]);
    let img2 = t(2)
        .pow_i(2)
        .unwrap()
        .add_ref(&qz.mul_ref(&t(4).pow_i(2).unwrap()))
        .div_ref(&t(1))
        .unwrap();
    let img4 = t(4)
        .pow_i(2)
        .unwrap()
        .add_ref(&qz.mul_ref(&t(2).pow_i(2).unwrap()))
        .div_ref(&t(3))
        .unwrap();
    assert!(seed.tau(1).equals(&t(2)));
    assert!(seed.tau(2).equals(&img2));
    assert!(seed.tau(3).equals(&t(4)));
    assert!(seed.tau(4).equals(&img4));
}

#[test]
fn translation_acts_on_eight_row_tau_variables_as_expected() {
    let seed = TauSeed::eight_row().apply_word(&translation_word()).unwrap();
    let a = mono(&[("q0", 1, 1), ("z0", 1, 1)]);
    let b = mono(&[("q1", 1, 1), ("z1", 1, 1)]);
    let img2 = a
        .mul_ref(&t(4).pow_i(2).unwrap())
        .add_ref(&b.mul_ref(&t(2).pow_i(2).unwrap()))
        .div_ref(&t(1))
        .unwrap();
    let img4 = b
        .mul_ref(&t(4).pow_i(2).unwrap())
        .add_ref(&a.mul_ref(&t(2).pow_i(2).unwrap()))
        .div_ref(&t(3))
        .unwrap();
    assert!(seed.tau(1).equals(&t(2)));
    assert!(seed.tau(2).equals(&img2));
    assert!(seed.tau(3).equals(&t(4)));
    assert!(seed.tau(4).equals(&img4));
}

#[test]
fn tau_mutation_is_an_involution_at_every_vertex() {
    for seed in [TauSeed::six_row(), TauSeed::eight_row()] {
        for j in 1..=seed.n() {
            let back = seed.mutate(j).unwrap().mutate(j).unwrap();
            assert!(back.seed_equals(&seed), "mutate twice at {j}");
        }
    }
}

#[test]
fn induced_exchange_variables_of_the_six_row_seed() {
    let seed = TauSeed::six_row();
    let ys = seed.y_from_tau().unwrap();
    let qz = mono(&[("q", 1, 2), ("Z", 1, 2)]);
    let y1 = t(2)
        .pow_i(-2)
        .unwrap()
        .mul_ref(&t(4).pow_i(2).unwrap())
        .mul_ref(&qz);
    assert!(ys[0].equals(&y1));
    // The product of the exchange variables is exactly q, and the
    // alternating combination y2^{-1} y4^{-1} is exactly Z.
    let prod = ys.iter().fold(RatExpr::one(), |acc, y| acc.mul_ref(y));
    assert!(prod.equals(&RatExpr::gen("q")));
    let z = ys[1]
        .inv()
        .unwrap()
        .mul_ref(&ys[3].inv().unwrap());
    assert!(z.equals(&RatExpr::gen("Z")));
}

#[test]
fn bilinear_equations_hold_exactly_along_the_translation() {
    let residuals = bilinear_residuals(&TauSeed::six_row()).unwrap();
    for (k, r) in residuals.iter().enumerate() {
        assert!(r.is_zero(), "bilinear residual {k} must vanish: {r}");
    }
}

#[test]
fn g_coordinate_satisfies_the_scalar_second_order_equation() {
    // Ḡ G̲ (G+1)² = (G+Z)² with Ḡ, G̲ the translation images of G.
    let seed = TauSeed::six_row();
    let w = translation_word();
    let g = g_coordinate(&seed).unwrap();
    let g_up = g_coordinate(&seed.apply_word(&w).unwrap()).unwrap();
    let g_dn = g_coordinate(&seed.apply_word(&w.inverse()).unwrap()).unwrap();
    let one = RatExpr::one();
    let z = RatExpr::gen("Z");
    let residual = g_up
        .mul_ref(&g_dn)
        .mul_ref(&g.add_ref(&one).pow_i(2).unwrap())
        .sub_ref(&g.add_ref(&z).pow_i(2).unwrap());
    assert!(residual.is_zero(), "scalar equation residual: {residual}");
}

#[test]
fn tau_variables_stay_laurent_along_the_translation_orbit() {
    let w = translation_word();
    for seed0 in [TauSeed::six_row(), TauSeed::eight_row()] {
        let mut seed = seed0;
        for step in 1..=6 {
            seed = seed.apply_word(&w).unwrap();
            assert!(
                seed.is_laurent(),
                "tau variables must be Laurent at translation step {step}"
            );
        }
    }
}

#[test]
fn bilinear_equations_hold_at_random_rational_points() {
    // Clear the fourth roots by substituting q = s⁴, Z = w⁴ first, then
    // evaluate at rational points.
    let seed = TauSeed::six_row();
    let map: BTreeMap<String, RatExpr> = [
        ("q".to_string(), mono(&[("s", 4, 1)])),
        ("Z".to_string(), mono(&[("w", 4, 1)])),
    ]
    .into_iter()
    .collect();
    let residuals = bilinear_residuals(&seed.substitute_all(&map).unwrap()).unwrap();
    let pts: &[&[(i64, i64)]] = &[
        &[(2, 3), (5, 7), (3, 2), (7, 5), (1, 2), (2, 5)],
        &[(4, 9), (1, 3), (8, 3), (5, 2), (3, 7), (9, 4)],
    ];
    for point in pts {
        let assignment: BTreeMap<String, ratexpr::Rat> = ["t1", "t2", "t3", "t4", "s", "w"]
            .iter()
            .zip(point.iter())
            .map(|(g, &(p, q))| (g.to_string(), rat(p, q)))
            .collect();
        for r in &residuals {
            let v = r.specialize(&assignment).unwrap();
            assert_eq!(v, rat(0, 1), "numeric bilinear residual at {point:?}");
        }
    }
}
