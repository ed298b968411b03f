//! Quantum X-cluster seeds on the 4-cycle exchange matrix: half-variables
//! h_i = y_i^{1/2} in a quantum torus with y_i y_j = p^{-2ε_ij} y_j y_i,
//! quantum mutation, the translation word, its closed form, Casimirs, and
//! the quantum relativistic Toda Hamiltonian.

use std::sync::Arc;

use quivers::{Atom, GroupWord, Perm, Quiver, QuiverError};
use ratexpr::{Rat, RatExpr};

use crate::skew::{half, rat, SkewContext, SkewFraction, P};
use crate::QTorusError;

fn yname(i: usize) -> String {
    format!("y{i}")
}

/// The 4-cycle quiver with double arrows 1→2→3→4→1.
pub fn a7p_quiver() -> Quiver {
    quivers::catalog("A7p")
        .expect("catalog label")
        .as_plain()
        .expect("plain entry")
        .clone()
}

/// Quantum torus presentation for the 4-cycle quiver: generators y1..y4,
/// λ(i,j) = -2 ε_ij, commutative core {y1, y3} (the non-adjacent pair).
pub fn a7p_x_context() -> Arc<SkewContext> {
    let q = a7p_quiver();
    let n = q.n();
    let gens: Vec<String> = (1..=n).map(yname).collect();
    let lambda: Vec<Vec<Rat>> = (1..=n)
        .map(|i| (1..=n).map(|j| rat(-2 * q.eps(i, j))).collect())
        .collect();
    SkewContext::new(gens, lambda, &["y1", "y3"]).expect("valid presentation")
}

/// A seed of the quantum X-cluster structure: the current exchange matrix
/// together with the half-variables h_i = y_i^{1/2}, written in the initial
/// quantum torus.
#[derive(Debug, Clone)]
pub struct QuantumXSeed {
    quiver: Quiver,
    h: Vec<SkewFraction>,
}

impl QuantumXSeed {
    /// The initial seed on a quiver whose vertices are the context
    /// generators in order: h_i = y_i^{1/2}.
    pub fn initial(ctx: &Arc<SkewContext>, quiver: Quiver) -> QuantumXSeed {
        let h = (1..=quiver.n())
            .map(|i| SkewFraction::gen_pow(ctx, &yname(i), half()))
            .collect();
        QuantumXSeed { quiver, h }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Half-variable y_i^{1/2} at a 1-based vertex.
    pub fn half_var(&self, i: usize) -> &SkewFraction {
        &self.h[i - 1]
    }

    /// Full variable y_i = (y_i^{1/2})².
    pub fn var(&self, i: usize) -> SkewFraction {
        self.h[i - 1].mul(&self.h[i - 1])
    }

    /// Quantum mutation at vertex j, on half-variables:
    /// h_j ↦ h_j^{-1} and, for ε_ij = ±2,
    /// h_i ↦ h_i (1 + p y_j^{±1})^{±1} with y_j = h_j²; the quiver mutates.
    /// Squaring recovers y_i ↦ y_i (1 + p y_j^{±1})^{±1} (1 + p³ y_j^{±1})^{±1}.
    pub fn mutate(&self, j: usize) -> Result<QuantumXSeed, QTorusError> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(QuiverError::IndexOutOfRange(j, n).into());
        }
        let ctx = self.h[0].context().clone();
        let hj = &self.h[j - 1];
        let mut h = Vec::with_capacity(n);
        for i in 1..=n {
            if i == j {
                h.push(hj.inv()?);
                continue;
            }
            let e = self.quiver.eps(i, j);
            if e == 0 {
                h.push(self.h[i - 1].clone());
                continue;
            }
            if e.abs() != 2 {
                return Err(QTorusError::UnsupportedExchange(e));
            }
            let s = e.signum();
            let yj_s = hj.pow_i(2 * s)?;
            let binom = SkewFraction::one(&ctx).add(&SkewFraction::p_pow(&ctx, rat(1)).mul(&yj_s));
            let factor = if s > 0 { binom } else { binom.inv()? };
            h.push(self.h[i - 1].mul(&factor));
        }
        Ok(QuantumXSeed {
            quiver: self.quiver.mutate(j)?,
            h,
        })
    }

    /// Relabel vertices: the content of vertex i moves to vertex σ(i).
    pub fn permute(&self, sigma: &Perm) -> Result<QuantumXSeed, QTorusError> {
        let quiver = self.quiver.permute(sigma)?;
        let ctx = self.h[0].context().clone();
        let mut h = vec![SkewFraction::zero(&ctx); self.n()];
        for i in 1..=self.n() {
            h[sigma.image(i) - 1] = self.h[i - 1].clone();
        }
        Ok(QuantumXSeed { quiver, h })
    }

    /// Inversion ς: every half-variable inverts and every arrow reverses.
    pub fn invert(&self) -> Result<QuantumXSeed, QTorusError> {
        let h = self
            .h
            .iter()
            .map(|v| v.inv())
            .collect::<Result<Vec<_>, QTorusError>>()?;
        Ok(QuantumXSeed {
            quiver: self.quiver.invert(),
            h,
        })
    }

    /// Apply a group word, leftmost atom first.
    pub fn apply_word(&self, w: &GroupWord) -> Result<QuantumXSeed, QTorusError> {
        let mut s = self.clone();
        for atom in w.atoms() {
            s = match atom {
                Atom::Mut(j) => s.mutate(*j)?,
                Atom::Perm(p) => s.permute(p)?,
                Atom::Inv => s.invert()?,
            };
        }
        Ok(s)
    }

    pub fn seed_equals(&self, other: &QuantumXSeed) -> bool {
        self.quiver == other.quiver
            && self.h.iter().zip(&other.h).all(|(a, b)| a.equals(b))
    }

    /// The half-variable exchange relation h_i h_j = p^{-ε_ij/2} h_j h_i
    /// with ε read off this seed's quiver, checked for all pairs.
    pub fn relations_hold(&self) -> bool {
        let n = self.n();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let e = Rat::new((-self.quiver.eps(i, j)).into(), 2.into());
                if !self.h[i - 1].exchanges_as(&self.h[j - 1], &e) {
                    return false;
                }
            }
        }
        true
    }
}

/// The translation word: the permutation (1,2)(3,4) after the commuting
/// mutations at vertices 1 and 3.
pub fn translation_word() -> GroupWord {
    let perm = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).expect("valid cycles");
    GroupWord::new(vec![Atom::Mut(3), Atom::Mut(1), Atom::Perm(perm)])
}

fn core(ctx: &Arc<SkewContext>, f: RatExpr) -> SkewFraction {
    SkewFraction::from_core(ctx, f)
}

/// 1 + p·y_i^{±1} as a commutative core function (i must be core).
fn one_plus_p_y(ctx: &Arc<SkewContext>, i: usize, sign: i64) -> SkewFraction {
    let name = yname(i);
    let m = RatExpr::monomial(ratexpr::int(1), &[(P, 1, 1), (name.as_str(), sign, 1)]);
    core(ctx, RatExpr::one().add_ref(&m))
}

/// Closed-form images of the half-variables under the translation:
/// ( y2^{1/2}(1+p y3)(1+p y1^{-1})^{-1}, y1^{-1/2},
///   y4^{1/2}(1+p y1)(1+p y3^{-1})^{-1}, y3^{-1/2} ).
pub fn translation_closed_form(ctx: &Arc<SkewContext>) -> Vec<SkewFraction> {
    let hp = |i: usize, e: (i64, i64)| {
        SkewFraction::gen_pow(ctx, &yname(i), Rat::new(e.0.into(), e.1.into()))
    };
    vec![
        hp(2, (1, 2))
            .mul(&one_plus_p_y(ctx, 3, 1))
            .mul(&one_plus_p_y(ctx, 1, -1).inv().expect("core binomial")),
        hp(1, (-1, 2)),
        hp(4, (1, 2))
            .mul(&one_plus_p_y(ctx, 1, 1))
            .mul(&one_plus_p_y(ctx, 3, -1).inv().expect("core binomial")),
        hp(3, (-1, 2)),
    ]
}

/// The Casimir Z = y1 y3 of a seed (product of the squared half-variables
/// at the core pair).
pub fn casimir_z(seed: &QuantumXSeed) -> SkewFraction {
    seed.var(1).mul(&seed.var(3))
}

/// The Casimir q = y1 y3 y2 y4 of a seed.
pub fn casimir_q(seed: &QuantumXSeed) -> SkewFraction {
    seed.var(1).mul(&seed.var(3)).mul(&seed.var(2)).mul(&seed.var(4))
}

/// The quantum relativistic Toda Hamiltonian assembled from half-variables
/// v = (y1^{1/2}, y2^{1/2}, y3^{1/2}, y4^{1/2}) (or their images under a
/// seed map):
/// H = y2^{1/2} y1^{1/2} + y1^{1/2} y2^{-1/2} + y2^{-1/2} y1^{-1/2}
///   + Z y1^{-1/2} y2^{1/2},  Z = y1 y3.
pub fn toda_hamiltonian_from(v: &[SkewFraction]) -> Result<SkewFraction, QTorusError> {
    let (v1, v2, v3) = (&v[0], &v[1], &v[2]);
    let z = v1.mul(v1).mul(&v3.mul(v3));
    let t1 = v2.mul(v1);
    let t2 = v1.mul(&v2.inv()?);
    let t3 = v2.inv()?.mul(&v1.inv()?);
    let t4 = z.mul(&v1.inv()?).mul(v2);
    Ok(t1.add(&t2).add(&t3).add(&t4))
}

/// Impose the unit-multiplier constraint q = 1 by eliminating y4:
/// y4 ↦ (y1 y3 y2)^{-1}. This extends to half-variables because the
/// replacement has the same exchange exponents as y4 itself.
pub fn q_one_substitute(f: &SkewFraction) -> Result<SkewFraction, QTorusError> {
    let ctx = f.context().clone();
    let repl = SkewFraction::gen(&ctx, "y1")
        .mul(&SkewFraction::gen(&ctx, "y3"))
        .mul(&SkewFraction::gen(&ctx, "y2"))
        .inv()?;
    f.substitute_outer("y4", &repl)
}
