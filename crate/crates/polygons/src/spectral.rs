//! Spectral polynomials f_Δ(λ, μ) = Σ_{(a,b)∈Δ} a_{a,b} λ^a μ^b attached to
//! the catalog polygons, and the rational change of variables identifying
//! the curves of the two 4-cycle-quiver polygons 4a and 4c.

use std::collections::BTreeMap;

use ratexpr::RatExpr;

use crate::catalog::catalog_polygon;
use crate::PolygonError;

/// Name of the coefficient symbol at a lattice point.
pub fn coefficient_name(a: i64, b: i64) -> String {
    format!("a({a},{b})")
}

/// The generic Laurent polynomial supported on the polygon's lattice points,
/// in generators `lambda`, `mu` and one coefficient symbol per point.
pub fn spectral_poly(label: &str) -> Result<RatExpr, PolygonError> {
    let p = catalog_polygon(label)?;
    let mut f = RatExpr::zero();
    for (a, b) in p.lattice_points() {
        let coeff = RatExpr::gen(&coefficient_name(a, b));
        let term = RatExpr::monomial(ratexpr::int(1), &[("lambda", a, 1), ("mu", b, 1)]);
        f = f.add_ref(&coeff.mul_ref(&term));
    }
    Ok(f)
}

/// The substitution λ = λ̃(a_{-1,0} + a_{0,1} λ̃μ̃), μ = μ̃/(a_{-1,0} + a_{0,1} λ̃μ̃)
/// turns the 4a curve into the 4c-shaped polynomial
///
/// ```text
/// a_{0,1}a_{1,0} λ̃²μ̃ + (a_{0,-1}a_{0,1} + a_{-1,0}a_{1,0}) λ̃ + a_{0,0}
///   + a_{-1,0}a_{0,-1} μ̃^{-1} + λ̃^{-1}
/// ```
///
/// The transformed expression and the target polynomial, with λ̃, μ̃ renamed
/// back to λ, μ.
pub fn transformed_4a_and_target() -> (RatExpr, RatExpr) {
    let f4a = spectral_poly("4a").expect("catalog label");
    let lam = RatExpr::gen("lambda");
    let mu = RatExpr::gen("mu");
    let a = |x: i64, y: i64| RatExpr::gen(&coefficient_name(x, y));
    let d = a(-1, 0).add_ref(&a(0, 1).mul_ref(&lam).mul_ref(&mu));
    let map: BTreeMap<String, RatExpr> = [
        ("lambda".to_string(), lam.mul_ref(&d)),
        ("mu".to_string(), mu.div_ref(&d).expect("nonzero divisor")),
    ]
    .into_iter()
    .collect();
    let transformed = f4a.substitute_all(&map).expect("valid substitution");
    let mono = |la: i64, mb: i64| {
        RatExpr::monomial(ratexpr::int(1), &[("lambda", la, 1), ("mu", mb, 1)])
    };
    let target = a(0, 1)
        .mul_ref(&a(1, 0))
        .mul_ref(&mono(2, 1))
        .add_ref(
            &a(0, -1)
                .mul_ref(&a(0, 1))
                .add_ref(&a(-1, 0).mul_ref(&a(1, 0)))
                .mul_ref(&mono(1, 0)),
        )
        .add_ref(&a(0, 0))
        .add_ref(&a(-1, 0).mul_ref(&a(0, -1)).mul_ref(&mono(0, -1)))
        .add_ref(&mono(-1, 0));
    (transformed, target)
}

/// True iff the rational substitution above carries the 4a spectral
/// polynomial exactly onto the 4c-shaped polynomial.
pub fn verify_4a_to_4c() -> bool {
    let (transformed, target) = transformed_4a_and_target();
    transformed.equals(&target)
}
