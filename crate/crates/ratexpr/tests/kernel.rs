//! Contract tests for the exact symbolic kernel.

use std::collections::BTreeMap;
use std::str::FromStr;

use ratexpr::{int, rat, LaurentExpr, Rat, RatExpr, SymError};

fn x() -> RatExpr {
    RatExpr::gen("x")
}

fn point(entries: &[(&str, i64, i64)]) -> BTreeMap<String, Rat> {
    entries
        .iter()
        .map(|(g, p, q)| (g.to_string(), rat(*p, *q)))
        .collect()
}

#[test]
fn difference_of_squares() {
    let lhs = (x() + RatExpr::one()) * (x() - RatExpr::one());
    let rhs = x().pow_i(2).unwrap() - RatExpr::one();
    assert!(lhs.equals(&rhs));
}

#[test]
fn half_powers_multiply_to_whole() {
    let sqrt_x = x().pow_rat(&rat(1, 2)).unwrap();
    assert!((&sqrt_x * &sqrt_x).equals(&x()));
}

#[test]
fn fractional_power_of_sum_is_rejected() {
    let s = x() + RatExpr::one();
    assert_eq!(
        s.pow_rat(&rat(1, 2)),
        Err(SymError::NonMonomialFractionalPower)
    );
}

#[test]
fn equality_ignores_common_factors() {
    let a = RatExpr::from_str("(x)/(1 + x)").unwrap();
    let b = RatExpr::from_str("(x + x^2)/(1 + 2*x + x^2)").unwrap();
    assert!(a.equals(&b));
    assert!(!a.equals(&x().inv().unwrap()));
}

#[test]
fn casimir_substitution_collapses_product() {
    // y4 <- (y1 y2 y3)^{-1} turns the product of all four into 1.
    let prod = RatExpr::monomial(int(1), &[("y1", 1, 1), ("y2", 1, 1), ("y3", 1, 1), ("y4", 1, 1)]);
    let repl = RatExpr::monomial(int(1), &[("y1", -1, 1), ("y2", -1, 1), ("y3", -1, 1)]);
    let out = prod.substitute("y4", &repl).unwrap();
    assert!(out.equals(&RatExpr::one()));
}

#[test]
fn principal_root_substitution() {
    // y4^{1/2} with y4 <- (y1 y2 y3)^{-1} resolves by exponent division.
    let half = RatExpr::monomial(int(1), &[("y4", 1, 2)]);
    let repl = RatExpr::monomial(int(1), &[("y1", -1, 1), ("y2", -1, 1), ("y3", -1, 1)]);
    let out = half.substitute("y4", &repl).unwrap();
    let expect = RatExpr::monomial(
        int(1),
        &[("y1", -1, 2), ("y2", -1, 2), ("y3", -1, 2)],
    );
    assert!(out.equals(&expect));
}

#[test]
fn fractional_substitution_needs_monomial() {
    let half = RatExpr::monomial(int(1), &[("y4", 1, 2)]);
    let repl = x() + RatExpr::one();
    assert!(matches!(
        half.substitute("y4", &repl),
        Err(SymError::FractionalPowerOfNonMonomial(_))
    ));
}

#[test]
fn general_substitution_builds_fractions() {
    // x^{-1} with x <- 1 + y gives 1/(1+y).
    let inv = x().pow_i(-1).unwrap();
    let repl = RatExpr::gen("y") + RatExpr::one();
    let out = inv.substitute("x", &repl).unwrap();
    assert!(out.equals(&repl.inv().unwrap()));
}

#[test]
fn specialize_polynomial() {
    let e = x().pow_i(2).unwrap() + RatExpr::one();
    assert_eq!(e.specialize(&point(&[("x", 2, 1)])).unwrap(), int(5));
}

#[test]
fn specialize_perfect_square_root() {
    let e = x().pow_rat(&rat(1, 2)).unwrap();
    assert_eq!(e.specialize(&point(&[("x", 9, 4)])).unwrap(), rat(3, 2));
    assert!(matches!(
        e.specialize(&point(&[("x", 2, 1)])),
        Err(SymError::NonEvaluableRoot { .. })
    ));
}

#[test]
fn specialize_detects_vanishing_denominator() {
    let e = (x() - RatExpr::one()).inv().unwrap();
    assert_eq!(
        e.specialize(&point(&[("x", 1, 1)])),
        Err(SymError::DenominatorVanishes)
    );
}

#[test]
fn symmetric_point_cancels() {
    // (x+Z)^2/(x+1)^2 at x=1, Z=1 evaluates to 1.
    let e = (x() + RatExpr::gen("Z"))
        .pow_i(2)
        .unwrap()
        .div_ref(&(x() + RatExpr::one()).pow_i(2).unwrap())
        .unwrap();
    assert_eq!(
        e.specialize(&point(&[("x", 1, 1), ("Z", 1, 1)])).unwrap(),
        int(1)
    );
}

#[test]
fn canonical_text_round_trip() {
    let samples = [
        "0",
        "1",
        "-3/2",
        "x",
        "-x",
        "2*x^3/2",
        "x^-2*y + 3",
        "(1 + x^1/2)/(1 + y)",
        "(-2*Z + q^-1/4)/(1 + 2*tau1*tau3^2)",
    ];
    for s in samples {
        let e = RatExpr::from_str(s).unwrap();
        let printed = e.to_string();
        let reparsed = RatExpr::from_str(&printed).unwrap();
        assert_eq!(e, reparsed, "round trip through `{printed}`");
        // Printing is a fixed point.
        assert_eq!(printed, reparsed.to_string());
    }
}

#[test]
fn json_round_trip() {
    let e = RatExpr::from_str("(1 + 2*x^1/2*y^-3)/(1 + z^5/3)").unwrap();
    let v = e.to_json();
    let back = RatExpr::from_json(&v).unwrap();
    assert_eq!(e, back);
}

#[test]
fn canonicalization_is_idempotent() {
    let e = RatExpr::from_str("(2*x + 2)/(2*x^-3)").unwrap();
    let re = RatExpr::new(e.num().clone(), e.den().clone()).unwrap();
    assert_eq!(e, re);
    // Denominator is monic with nonnegative minimal exponents.
    let lead = e.den().leading().unwrap();
    assert_eq!(lead.coeff, int(1));
    for m in e.den().terms() {
        for (_, exp) in m.exps.iter() {
            assert!(*exp >= int(0));
        }
    }
}

/// Deterministic pseudo-random small expressions for algebraic property checks.
fn sample_expr(seed: &mut u64) -> RatExpr {
    let mut next = || {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*seed >> 33) as i64
    };
    let gens = ["x", "y", "z"];
    let mut e = RatExpr::constant(int(next() % 5));
    for _ in 0..3 {
        let g = gens[(next().unsigned_abs() % 3) as usize];
        let c = int(next() % 7);
        let p = next() % 3;
        e = e + RatExpr::monomial(c, &[(g, p, 1)]);
    }
    if e.is_zero() {
        RatExpr::one()
    } else {
        e
    }
}

#[test]
fn ring_axioms_on_random_triples() {
    let mut seed = 0xfeed_5eed_u64;
    for _ in 0..25 {
        let a = sample_expr(&mut seed);
        let b = sample_expr(&mut seed);
        let c = sample_expr(&mut seed);
        assert!((a.add_ref(&b)).equals(&b.add_ref(&a)));
        assert!((a.mul_ref(&b)).equals(&b.mul_ref(&a)));
        assert!(a.add_ref(&b).add_ref(&c).equals(&a.add_ref(&b.add_ref(&c))));
        assert!(a.mul_ref(&b).mul_ref(&c).equals(&a.mul_ref(&b.mul_ref(&c))));
        assert!(a
            .mul_ref(&b.add_ref(&c))
            .equals(&a.mul_ref(&b).add_ref(&a.mul_ref(&c))));
    }
}

#[test]
fn substitution_commutes_with_specialization() {
    let mut seed = 0x5ca1e_u64;
    for _ in 0..10 {
        let e = sample_expr(&mut seed);
        let repl = sample_expr(&mut seed);
        let pt = point(&[("y", 3, 2), ("z", -2, 3)]);
        let Ok(repl_val) = repl.specialize(&pt) else {
            continue;
        };
        if repl_val == int(0) {
            continue;
        }
        let mut full = pt.clone();
        full.insert("x".into(), repl_val);
        let direct = e.specialize(&full);
        let composed = e.substitute("x", &repl).unwrap().specialize(&pt);
        match (direct, composed) {
            (Ok(a), Ok(b)) => assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            other => panic!("specialization mismatch: {other:?}"),
        }
    }
}

#[test]
fn exact_division_of_laurent_polynomials() {
    let poly = |e: &RatExpr| -> LaurentExpr {
        assert!(e.den().is_one());
        e.num().clone()
    };
    let x = RatExpr::gen("x");
    let y = RatExpr::gen("y");
    let one = RatExpr::one();
    // (x² − y²) / (x + y) = x − y, including with fractional-exponent factors.
    let num = poly(&x.pow_i(2).unwrap().sub_ref(&y.pow_i(2).unwrap()));
    let den = poly(&x.add_ref(&y));
    let q = num.exact_div(&den).unwrap();
    assert_eq!(RatExpr::from_laurent(q), x.sub_ref(&y));
    // A unit (monomial) divisor always divides.
    let m = RatExpr::monomial(int(3), &[("x", -1, 2)]);
    let q = poly(&x.add_ref(&one)).exact_div(&m.num().clone()).unwrap();
    assert!(RatExpr::from_laurent(q).equals(&x.add_ref(&one).div_ref(&m).unwrap()));
    // Non-divisible pairs are reported as such.
    assert!(poly(&x.add_ref(&one))
        .exact_div(&poly(&y.add_ref(&one)))
        .is_none());
    // Zero divided by anything nonzero is zero; division by zero fails.
    assert!(LaurentExpr::zero().exact_div(&den).unwrap().is_zero());
    assert!(den.exact_div(&LaurentExpr::zero()).is_none());
}
