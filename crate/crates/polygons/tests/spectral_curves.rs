//! Spectral polynomials of the catalog polygons and the rational change of
//! variables carrying the 4a curve onto the 4c curve.

use polygons::{
    catalog_labels, catalog_polygon, coefficient_name, spectral_poly, transformed_4a_and_target,
    verify_4a_to_4c,
};
use ratexpr::RatExpr;

#[test]
fn spectral_polynomial_of_4a_matches_the_displayed_form() {
    let f = spectral_poly("4a").unwrap();
    let a = |x: i64, y: i64| RatExpr::gen(&coefficient_name(x, y));
    let mono =
        |la: i64, mb: i64| RatExpr::monomial(ratexpr::int(1), &[("lambda", la, 1), ("mu", mb, 1)]);
    let expected = a(1, 0)
        .mul_ref(&mono(1, 0))
        .add_ref(&a(0, 1).mul_ref(&mono(0, 1)))
        .add_ref(&a(0, 0))
        .add_ref(&a(-1, 0).mul_ref(&mono(-1, 0)))
        .add_ref(&a(0, -1).mul_ref(&mono(0, -1)));
    assert!(f.equals(&expected));
}

#[test]
fn spectral_polynomials_have_one_term_per_lattice_point() {
    for label in catalog_labels() {
        let inv = catalog_polygon(label).unwrap().invariants();
        let f = spectral_poly(label).unwrap();
        assert_eq!(
            f.num().num_terms() as i64,
            inv.boundary + inv.interior,
            "{label}: B + g terms"
        );
    }
    assert_eq!(spectral_poly("3").unwrap().num().num_terms(), 4);
}

#[test]
fn the_4a_curve_transforms_exactly_into_the_4c_curve() {
    assert!(verify_4a_to_4c());
}

#[test]
fn the_4c_target_is_sensitive_to_every_term() {
    // Dropping the constant term must break the identity.
    let (transformed, target) = transformed_4a_and_target();
    let broken = target.sub_ref(&RatExpr::gen(&coefficient_name(0, 0)));
    assert!(!transformed.equals(&broken));
}
