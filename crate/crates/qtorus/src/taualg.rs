//! Quantum tau variables on the extended 4-cycle quiver: the skew
//! presentation 𝒯_I 𝒯_J = p^{Λ_IJ/2} 𝒯_J 𝒯_I, the forward/backward tau
//! flows and their bilinear relations, the Λ–B compatibility identity, and
//! the scalar quantum q-difference Painlevé identities for
//! G = p Z^{1/2} 𝒯_1² 𝒯_3^{-2}.
//!
//! Generator names: T1..T4 are the tau variables at the unfrozen vertices,
//! Q = q^{1/4} and W = Z^{1/4} are the frozen quarter-root parameters.

use std::sync::Arc;

use quivers::{catalog, ExtQuiver};
use ratexpr::{Rat, RatExpr};

use crate::skew::{rat, SkewContext, SkewFraction, P};
use crate::QTorusError;

pub const TAU_GENS: [&str; 6] = ["T1", "T2", "T3", "T4", "Q", "W"];

/// The extended exchange data (4 unfrozen + 2 frozen rows) with its
/// compatible skew form Λ.
pub fn tau_ext_quiver() -> ExtQuiver {
    catalog("A7p-ext6")
        .expect("catalog label")
        .as_extended()
        .expect("extended entry")
        .clone()
}

/// The integer skew form Λ of the tau presentation.
pub fn tau_lambda() -> Vec<Vec<i64>> {
    tau_ext_quiver()
        .lambda
        .clone()
        .expect("extended entry carries a skew form")
}

/// The quantum torus of the tau variables: λ = Λ/2, commutative core
/// {T1, T3, W}. (Q does not commute with T1 and T2, so it cannot join the
/// core; every denominator needed below lives in {T1, T3, W, p}.)
pub fn tau_context() -> Arc<SkewContext> {
    let lam = tau_lambda();
    let lambda: Vec<Vec<Rat>> = lam
        .iter()
        .map(|row| row.iter().map(|v| Rat::new((*v).into(), 2.into())).collect())
        .collect();
    let gens = TAU_GENS.iter().map(|s| s.to_string()).collect();
    SkewContext::new(gens, lambda, &["T1", "T3", "W"]).expect("valid presentation")
}

fn g(ctx: &Arc<SkewContext>, name: &str, e: i64) -> SkewFraction {
    SkewFraction::gen_pow(ctx, name, rat(e))
}

/// a² + p² shift² b² with the shift written between p² and b² (the order
/// used by the flow displays).
fn bilinear_sum(
    ctx: &Arc<SkewContext>,
    a: &SkewFraction,
    shift: &SkewFraction,
    b: &SkewFraction,
) -> SkewFraction {
    let cross = SkewFraction::p_pow(ctx, rat(2)).mul(shift).mul(&b.mul(b));
    a.mul(a).add(&cross)
}

/// Forward flow images of (T1, T2, T3, T4, Q, W): the tau analog of the
/// translation, under which Z ↦ qZ:
/// ( 𝒯2, 𝒯1^{-1}(𝒯2² + p²(qZ)^{1/2}𝒯4²), 𝒯4,
///   𝒯3^{-1}(𝒯4² + p²(qZ)^{1/2}𝒯2²), q^{1/4}, (qZ)^{1/4} ).
pub fn overline_images(ctx: &Arc<SkewContext>) -> Vec<SkewFraction> {
    let qz_half = g(ctx, "Q", 2).mul(&g(ctx, "W", 2));
    vec![
        g(ctx, "T2", 1),
        g(ctx, "T1", -1).mul(&bilinear_sum(ctx, &g(ctx, "T2", 1), &qz_half, &g(ctx, "T4", 1))),
        g(ctx, "T4", 1),
        g(ctx, "T3", -1).mul(&bilinear_sum(ctx, &g(ctx, "T4", 1), &qz_half, &g(ctx, "T2", 1))),
        g(ctx, "Q", 1),
        g(ctx, "Q", 1).mul(&g(ctx, "W", 1)),
    ]
}

/// Backward flow images, under which Z ↦ q^{-1}Z:
/// ( (𝒯1² + p²Z^{1/2}𝒯3²)𝒯2^{-1}, 𝒯1, (𝒯3² + p²Z^{1/2}𝒯1²)𝒯4^{-1}, 𝒯3,
///   q^{1/4}, (q^{-1}Z)^{1/4} ).
pub fn underline_images(ctx: &Arc<SkewContext>) -> Vec<SkewFraction> {
    let z_half = g(ctx, "W", 2);
    vec![
        bilinear_sum(ctx, &g(ctx, "T1", 1), &z_half, &g(ctx, "T3", 1)).mul(&g(ctx, "T2", -1)),
        g(ctx, "T1", 1),
        bilinear_sum(ctx, &g(ctx, "T3", 1), &z_half, &g(ctx, "T1", 1)).mul(&g(ctx, "T4", -1)),
        g(ctx, "T3", 1),
        g(ctx, "Q", 1),
        g(ctx, "W", 1).mul(&g(ctx, "Q", -1)),
    ]
}

/// Whether a 6-tuple of images satisfies every Λ-exchange relation of the
/// presentation: img_I img_J = p^{Λ_IJ/2} img_J img_I.
pub fn lambda_preserved(images: &[SkewFraction]) -> bool {
    let lam = tau_lambda();
    for i in 0..6 {
        for j in 0..6 {
            if i == j {
                continue;
            }
            let e = Rat::new(lam[i][j].into(), 2.into());
            if !images[i].exchanges_as(&images[j], &e) {
                return false;
            }
        }
    }
    true
}

/// The two bilinear flow relations:
/// τ̲1 τ̄1 − (𝒯1² + p²Z^{1/2}𝒯3²) and τ̲3 τ̄3 − (𝒯3² + p²Z^{1/2}𝒯1²).
pub fn bilinear_residuals(ctx: &Arc<SkewContext>) -> (SkewFraction, SkewFraction) {
    let over = overline_images(ctx);
    let under = underline_images(ctx);
    let z_half = g(ctx, "W", 2);
    let r1 = under[0]
        .mul(&over[0])
        .sub(&bilinear_sum(ctx, &g(ctx, "T1", 1), &z_half, &g(ctx, "T3", 1)));
    let r3 = under[2]
        .mul(&over[2])
        .sub(&bilinear_sum(ctx, &g(ctx, "T3", 1), &z_half, &g(ctx, "T1", 1)));
    (r1, r3)
}

/// The Λ–B compatibility identity ∑_J b_{Ji} Λ_{JI'} = −4 δ_{iI'} for every
/// unfrozen column i and every row I' (the orientation with B rows indexed
/// by all six vertices is the frozen convention of this module).
pub fn compat_check_with(ext: &ExtQuiver, lam: &[Vec<i64>]) -> Result<(), QTorusError> {
    let n = ext.n_total();
    for i in 1..=ext.n_unfrozen() {
        for ip in 1..=n {
            let s: i64 = (1..=n).map(|j| ext.b(j, i) * lam[j - 1][ip - 1]).sum();
            let expected = if i == ip { -4 } else { 0 };
            if s != expected {
                return Err(QTorusError::StructuralMismatch(format!(
                    "sum_J b(J,{i}) Lambda(J,{ip}) = {s}, expected {expected}"
                )));
            }
        }
    }
    Ok(())
}

/// Compatibility of the catalog pair.
pub fn compat_check() -> Result<(), QTorusError> {
    compat_check_with(&tau_ext_quiver(), &tau_lambda())
}

/// The G-coordinate and its flow images built from a 6-tuple of tau images:
/// G = p (w⁴)^{1/2} t1² t3^{-2} with w, t1, t3 the images of W, T1, T3.
pub fn g_at(images: &[SkewFraction]) -> Result<SkewFraction, QTorusError> {
    let ctx = images[0].context().clone();
    let w2 = images[5].mul(&images[5]);
    let t1sq = images[0].mul(&images[0]);
    let t3inv = images[2].inv()?;
    let t3m2 = t3inv.mul(&t3inv);
    Ok(SkewFraction::p_pow(&ctx, rat(1)).mul(&w2).mul(&t1sq).mul(&t3m2))
}

/// Square root of the G-image in the factored form
/// p^{1/2} w t1 t3^{-1} (the display's G^{1/2}).
pub fn g_half_at(images: &[SkewFraction]) -> Result<SkewFraction, QTorusError> {
    let ctx = images[0].context().clone();
    Ok(SkewFraction::p_pow(&ctx, Rat::new(1.into(), 2.into()))
        .mul(&images[5])
        .mul(&images[0])
        .mul(&images[2].inv()?))
}

/// The identity 6-tuple (the tau generators themselves).
pub fn identity_images(ctx: &Arc<SkewContext>) -> Vec<SkewFraction> {
    TAU_GENS.iter().map(|n| SkewFraction::gen(ctx, n)).collect()
}

fn core_monomial(pairs: &[(&str, i64)]) -> RatExpr {
    let with_den: Vec<(&str, i64, i64)> = pairs.iter().map(|&(n, e)| (n, e, 1)).collect();
    RatExpr::monomial(ratexpr::int(1), &with_den)
}

/// The commutative right side (G + p^{1+s}Z)(G + p^{3+s}Z) / ((G+p)(G+p³))
/// of the scalar quantum q-difference Painlevé equation, as a function of
/// the core generators, with the standalone Z carrying an extra shift p^s.
pub fn quantum_p3_rhs(z_shift: i64) -> RatExpr {
    let gc = core_monomial(&[(P, 1), ("W", 2), ("T1", 2), ("T3", -2)]);
    let z = core_monomial(&[("W", 4)]);
    let p = |k: i64| core_monomial(&[(P, k)]);
    let num = gc.add_ref(&p(1 + z_shift).mul_ref(&z)).mul_ref(&gc.add_ref(&p(3 + z_shift).mul_ref(&z)));
    let den = gc.add_ref(&p(1)).mul_ref(&gc.add_ref(&p(3)));
    num.div_ref(&den).expect("nonzero denominator")
}

/// The half-step right side (G + p^{1+s}Z)(G + p)^{-1}, same conventions.
pub fn quantum_p3_half_rhs(z_shift: i64) -> RatExpr {
    let gc = core_monomial(&[(P, 1), ("W", 2), ("T1", 2), ("T3", -2)]);
    let z = core_monomial(&[("W", 4)]);
    let p = |k: i64| core_monomial(&[(P, k)]);
    gc.add_ref(&p(1 + z_shift).mul_ref(&z))
        .div_ref(&gc.add_ref(&p(1)))
        .expect("nonzero denominator")
}

/// y-variable attached to a 1-based column j of the extended exchange
/// matrix: the ordered product ∏_I 𝒯_I^{b_Ij} over all six rows.
pub fn y_from_tau(ctx: &Arc<SkewContext>, j: usize) -> SkewFraction {
    let ext = tau_ext_quiver();
    let mut out = SkewFraction::one(ctx);
    for (idx, name) in TAU_GENS.iter().enumerate() {
        let e = ext.b(idx + 1, j);
        if e != 0 {
            out = out.mul(&g(ctx, name, e));
        }
    }
    out
}
