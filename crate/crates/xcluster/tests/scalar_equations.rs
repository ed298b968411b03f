//! The second-order scalar q-difference equations satisfied by the
//! G-coordinate, verified exactly and at random rational specializations.

use std::collections::BTreeMap;

use ratexpr::{rat, Rat};
use xcluster::{case, coordinate_image, verify_scalar_equation, XClusterError};

#[test]
fn four_cycle_equation_residual_is_exactly_zero() {
    let c = case("A7p").unwrap();
    let residual = verify_scalar_equation(&c).unwrap();
    assert!(residual.is_zero(), "residual {residual}");
}

#[test]
fn doubled_four_vertex_equation_residual_is_exactly_zero() {
    let c = case("A7").unwrap();
    let residual = verify_scalar_equation(&c).unwrap();
    assert!(residual.is_zero(), "residual {residual}");
}

#[test]
fn only_four_vertex_cases_have_a_scalar_equation() {
    let c = case("A6").unwrap();
    assert!(matches!(
        verify_scalar_equation(&c),
        Err(XClusterError::NoScalarEquation(_))
    ));
}

/// Deterministic pseudo-random small rationals.
struct Lcg(u64);

impl Lcg {
    fn next_rat(&mut self) -> Rat {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let p = ((self.0 >> 33) % 23) as i64 + 2;
        let q = ((self.0 >> 13) % 17) as i64 + 3;
        rat(p, q)
    }
}

#[test]
fn four_cycle_equation_holds_at_random_rational_points() {
    // Independent of the symbolic zero test: evaluate the y-space images of
    // the G-coordinate under T and T^{-1} at random rational seeds and check
    // G↑ G↓ (G+1)² = (G+Z)² numerically.
    let c = case("A7p").unwrap();
    let t = c.generator("T").unwrap().clone();
    let g_up = coordinate_image(&c, &t, "G").unwrap();
    let g_dn = coordinate_image(&c, &t.inverse(), "G").unwrap();
    let g = c.coord("G").unwrap().clone();
    let z = c.coord("Z").unwrap().clone();
    let mut lcg = Lcg(0x5eed);
    for _ in 0..5 {
        let point: BTreeMap<String, Rat> = (1..=4)
            .map(|i| (format!("y{i}"), lcg.next_rat()))
            .collect();
        let up = g_up.specialize(&point).unwrap();
        let dn = g_dn.specialize(&point).unwrap();
        let gv = g.specialize(&point).unwrap();
        let zv = z.specialize(&point).unwrap();
        let one = ratexpr::int(1);
        let lhs = up * dn * (gv.clone() + one.clone()) * (gv.clone() + one);
        let rhs = (gv.clone() + zv.clone()) * (gv + zv);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn doubled_four_vertex_equation_holds_at_random_rational_points() {
    // G↑ G² G↓ = Z (G+1) numerically at random rational seeds.
    let c = case("A7").unwrap();
    let t = c.generator("T").unwrap().clone();
    let g_up = coordinate_image(&c, &t, "G").unwrap();
    let g_dn = coordinate_image(&c, &t.inverse(), "G").unwrap();
    let g = c.coord("G").unwrap().clone();
    let z = c.coord("Z").unwrap().clone();
    let mut lcg = Lcg(0xfeed);
    for _ in 0..5 {
        let point: BTreeMap<String, Rat> = (1..=4)
            .map(|i| (format!("y{i}"), lcg.next_rat()))
            .collect();
        let up = g_up.specialize(&point).unwrap();
        let dn = g_dn.specialize(&point).unwrap();
        let gv = g.specialize(&point).unwrap();
        let zv = z.specialize(&point).unwrap();
        let lhs = up * gv.clone() * gv.clone() * dn;
        let rhs = zv * (gv + ratexpr::int(1));
        assert_eq!(lhs, rhs);
    }
}
