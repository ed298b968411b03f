//! Coordinate-level checks: transcribed closed forms, double coordinate
//! definitions, Casimir products and the induced actions on (Z, q, F, G).

use ratexpr::RatExpr;
use xcluster::{case, case_labels, casimir_track, constrain, coordinate_image, verify_closed_forms};

fn mono(pairs: &[(usize, i64, i64)]) -> RatExpr {
    let named: Vec<(String, i64, i64)> = pairs
        .iter()
        .map(|&(i, p, q)| (format!("y{i}"), p, q))
        .collect();
    let refs: Vec<(&str, i64, i64)> = named.iter().map(|(s, p, q)| (s.as_str(), *p, *q)).collect();
    RatExpr::monomial(ratexpr::int(1), &refs)
}

#[test]
fn all_transcribed_closed_forms_match_the_engine() {
    for label in case_labels() {
        let c = case(label).unwrap();
        if let Err(e) = verify_closed_forms(&c) {
            panic!("{label}: {e}");
        }
    }
}

#[test]
fn double_coordinate_definitions_agree() {
    for label in case_labels() {
        let c = case(label).unwrap();
        for (name, alt) in &c.coord_alternates {
            let main = c.coord(name).expect("alternate names a coordinate");
            assert!(
                main.equals(alt),
                "{label}: both definitions of {name} must agree identically"
            );
        }
    }
}

#[test]
fn casimir_products_collapse_to_one_under_the_constraint() {
    for label in case_labels() {
        let c = case(label).unwrap();
        if let Some(p) = &c.casimir_product {
            let v = constrain(&c, p).unwrap();
            assert!(
                v.equals(&RatExpr::one()),
                "{label}: constrained Casimir product must be 1"
            );
        }
    }
}

#[test]
fn four_cycle_translation_acts_on_casimirs_as_a_q_shift() {
    let c = case("A7p").unwrap();
    let t = c.generator("T").unwrap();
    let tracked = casimir_track(&c, t).unwrap();
    let get = |n: &str| {
        tracked
            .iter()
            .find(|(name, _)| name == n)
            .map(|(_, e)| e.clone())
            .unwrap()
    };
    // q ↦ q, Z ↦ qZ (= y1 y3 in the initial variables).
    assert!(get("q").equals(c.coord("q").unwrap()));
    assert!(get("Z").equals(&mono(&[(1, 1, 1), (3, 1, 1)])));
}

#[test]
fn four_cycle_rotations_act_on_all_coordinates_as_expected() {
    let c = case("A7p").unwrap();
    let pi1 = c.generator("pi1").unwrap().clone();
    let pi2 = c.generator("pi2").unwrap().clone();
    let t = c.generator("T").unwrap().clone();
    let img = |w, n| coordinate_image(&c, w, n).unwrap();

    // pi1: (Z, q, F, G) ↦ (Z^{-1}, q^{-1}, q^{-1}Z^{-1}F, G^{-1}).
    assert!(img(&pi1, "Z").equals(&mono(&[(2, 1, 1), (4, 1, 1)])));
    assert!(img(&pi1, "q").equals(&mono(&[(1, -1, 1), (2, -1, 1), (3, -1, 1), (4, -1, 1)])));
    assert!(img(&pi1, "F").equals(&mono(&[(3, -1, 1)])));
    assert!(img(&pi1, "G").equals(&mono(&[(2, 1, 1)])));

    // pi2: (Z, q, F, G) ↦ (Z^{-1}q^{-1}, q, Z^{-1}G, F^{-1}).
    assert!(img(&pi2, "Z").equals(&mono(&[(1, -1, 1), (3, -1, 1)])));
    assert!(img(&pi2, "q").equals(c.coord("q").unwrap()));
    assert!(img(&pi2, "F").equals(&mono(&[(4, 1, 1)])));
    assert!(img(&pi2, "G").equals(&mono(&[(1, -1, 1)])));

    // T: G ↦ F and F ↦ (F + qZ)^2 / ((F + 1)^2 G) as y-expressions.
    assert!(img(&t, "G").equals(c.coord("F").unwrap()));
    let one = RatExpr::one();
    let f = c.coord("F").unwrap().clone();
    let qz = mono(&[(1, 1, 1), (3, 1, 1)]);
    let g = c.coord("G").unwrap().clone();
    let expected = f
        .add_ref(&qz)
        .pow_i(2)
        .unwrap()
        .div_ref(&f.add_ref(&one).pow_i(2).unwrap().mul_ref(&g))
        .unwrap();
    assert!(img(&t, "F").equals(&expected));
}

#[test]
fn doubled_four_vertex_translation_acts_on_all_coordinates_as_expected() {
    let c = case("A7").unwrap();
    let t = c.generator("T").unwrap().clone();
    let img = |n| coordinate_image(&c, &t, n).unwrap();
    let one = RatExpr::one();
    // (Z, q, F, G) ↦ (qZ, q, Z(1+G)/F, Z(1+G)/(FG)).
    let g_im = mono(&[(1, 1, 1)]).mul_ref(&one.add_ref(&mono(&[(3, 1, 1)])));
    assert!(img("q").equals(c.coord("q").unwrap()));
    assert!(img("Z").equals(&mono(&[(1, 2, 1), (3, 3, 1), (4, 1, 1)])));
    assert!(img("F").equals(&g_im.mul_ref(&mono(&[(3, 1, 1)]))));
    assert!(img("G").equals(&g_im));
}
