//! Quantum torus algebra with a central parameter p: generators g_a with
//! relations g_a g_b = p^{λ(a,b)} g_b g_a, rational exponents, and a
//! localization whose denominators live in a designated commutative core.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use ratexpr::{rat_pow, ExpMap, LaurentExpr, Monomial, Rat, RatExpr};

use crate::QTorusError;

/// Name of the central quantization parameter inside coefficient expressions.
pub const P: &str = "p";

/// The presentation of a quantum torus: ordered generators, the skew form λ
/// with g_a g_b = p^{λ(a,b)} g_b g_a, and a commutative core (a subset of
/// mutually commuting generators allowed in denominators).
#[derive(Debug)]
pub struct SkewContext {
    gens: Vec<String>,
    lambda: Vec<Vec<Rat>>,
    core: Vec<bool>,
    /// Indices of the non-core ("outer") generators in generator order.
    outer: Vec<usize>,
    /// Normal-form position of each generator: core generators first, then
    /// outer generators, both in generator order.
    pos: Vec<usize>,
}

fn rint(n: i64) -> Rat {
    ratexpr::int(n)
}

impl SkewContext {
    pub fn new(
        gens: Vec<String>,
        lambda: Vec<Vec<Rat>>,
        core: &[&str],
    ) -> Result<Arc<SkewContext>, QTorusError> {
        let n = gens.len();
        if lambda.len() != n || lambda.iter().any(|r| r.len() != n) {
            return Err(QTorusError::BadForm("λ matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if lambda[i][j] != -lambda[j][i].clone() {
                    return Err(QTorusError::BadForm("λ is not antisymmetric".into()));
                }
            }
        }
        let core_flags: Vec<bool> = gens.iter().map(|g| core.contains(&g.as_str())).collect();
        if core_flags.iter().filter(|c| **c).count() != core.len() {
            return Err(QTorusError::BadForm("unknown core generator".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if core_flags[i] && core_flags[j] && !lambda[i][j].is_zero() {
                    return Err(QTorusError::BadForm(
                        "commutative core does not commute".into(),
                    ));
                }
            }
        }
        let outer: Vec<usize> = (0..n).filter(|i| !core_flags[*i]).collect();
        let mut pos = vec![0usize; n];
        let mut k = 0;
        for i in 0..n {
            if core_flags[i] {
                pos[i] = k;
                k += 1;
            }
        }
        for i in 0..n {
            if !core_flags[i] {
                pos[i] = k;
                k += 1;
            }
        }
        Ok(Arc::new(SkewContext {
            gens,
            lambda,
            core: core_flags,
            outer,
            pos,
        }))
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn is_core(&self, name: &str) -> bool {
        self.gen_index(name).map(|i| self.core[i]).unwrap_or(false)
    }

    fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub fn lambda(&self, a: &str, b: &str) -> Rat {
        let (i, j) = (
            self.gen_index(a).expect("generator"),
            self.gen_index(b).expect("generator"),
        );
        self.lambda[i][j].clone()
    }

    /// λ(X^m, c) for an outer exponent vector m and a single generator index.
    fn lambda_outer(&self, m: &[Rat], g: usize) -> Rat {
        let mut acc = Rat::zero();
        for (k, oi) in self.outer.iter().enumerate() {
            if !m[k].is_zero() {
                acc += m[k].clone() * self.lambda[*oi][g].clone();
            }
        }
        acc
    }

    /// Reordering exponent of X^{m1} · X^{m2} over outer generators:
    /// Σ_{pos(i) > pos(j)} λ_ij m1_i m2_j.
    fn phi_outer(&self, m1: &[Rat], m2: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (ki, oi) in self.outer.iter().enumerate() {
            if m1[ki].is_zero() {
                continue;
            }
            for (kj, oj) in self.outer.iter().enumerate() {
                if kj < ki && !m2[kj].is_zero() {
                    acc += self.lambda[*oi][*oj].clone() * m1[ki].clone() * m2[kj].clone();
                }
            }
        }
        acc
    }

    /// Reordering exponent over full exponent vectors (core + outer), with
    /// the core-first position order of the normal form.
    fn phi_full(&self, v1: &[Rat], v2: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        let n = self.gens.len();
        for i in 0..n {
            if v1[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.pos[i] > self.pos[j] && !v2[j].is_zero() {
                    acc += self.lambda[i][j].clone() * v1[i].clone() * v2[j].clone();
                }
            }
        }
        acc
    }
}

/// An element of the localized quantum torus: a sum of parts, each a
/// commutative coefficient (rational function of the core generators and p)
/// times a normal-ordered monomial in the outer generators.
#[derive(Debug, Clone)]
pub struct SkewFraction {
    ctx: Arc<SkewContext>,
    parts: BTreeMap<Vec<Rat>, RatExpr>,
}

fn p_monomial(e: &Rat) -> RatExpr {
    if e.is_zero() {
        return RatExpr::one();
    }
    let m = Monomial {
        coeff: Rat::one(),
        exps: ExpMap::single(P, e.clone()),
    };
    RatExpr::from_laurent(LaurentExpr::from_monomial(m))
}

impl SkewFraction {
    pub fn zero(ctx: &Arc<SkewContext>) -> SkewFraction {
        SkewFraction {
            ctx: ctx.clone(),
            parts: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<SkewContext>) -> SkewFraction {
        SkewFraction::from_core(ctx, RatExpr::one())
    }

    pub fn constant(ctx: &Arc<SkewContext>, c: Rat) -> SkewFraction {
        SkewFraction::from_core(ctx, RatExpr::constant(c))
    }

    /// A power of the central parameter p.
    pub fn p_pow(ctx: &Arc<SkewContext>, e: Rat) -> SkewFraction {
        SkewFraction::from_core(ctx, p_monomial(&e))
    }

    /// Embed a commutative rational function of the core generators and p.
    pub fn from_core(ctx: &Arc<SkewContext>, f: RatExpr) -> SkewFraction {
        let mut parts = BTreeMap::new();
        if !f.is_zero() {
            parts.insert(vec![Rat::zero(); ctx.outer.len()], f);
        }
        SkewFraction {
            ctx: ctx.clone(),
            parts,
        }
    }

    /// g^e for a single generator.
    pub fn gen_pow(ctx: &Arc<SkewContext>, name: &str, e: Rat) -> SkewFraction {
        let gi = ctx.gen_index(name).expect("generator in context");
        if ctx.core[gi] {
            let m = Monomial {
                coeff: Rat::one(),
                exps: ExpMap::single(name, e),
            };
            return SkewFraction::from_core(ctx, RatExpr::from_laurent(LaurentExpr::from_monomial(m)));
        }
        let mut key = vec![Rat::zero(); ctx.outer.len()];
        let k = ctx.outer.iter().position(|o| *o == gi).expect("outer");
        key[k] = e;
        let mut parts = BTreeMap::new();
        parts.insert(key, RatExpr::one());
        SkewFraction {
            ctx: ctx.clone(),
            parts,
        }
    }

    pub fn gen(ctx: &Arc<SkewContext>, name: &str) -> SkewFraction {
        SkewFraction::gen_pow(ctx, name, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    fn insert(parts: &mut BTreeMap<Vec<Rat>, RatExpr>, key: Vec<Rat>, f: RatExpr) {
        if f.is_zero() {
            return;
        }
        match parts.remove(&key) {
            None => {
                parts.insert(key, f);
            }
            Some(old) => {
                let s = old.add_ref(&f);
                if !s.is_zero() {
                    parts.insert(key, s);
                }
            }
        }
    }

    pub fn add(&self, other: &SkewFraction) -> SkewFraction {
        let mut parts = self.parts.clone();
        for (k, f) in &other.parts {
            Self::insert(&mut parts, k.clone(), f.clone());
        }
        SkewFraction {
            ctx: self.ctx.clone(),
            parts,
        }
    }

    pub fn neg(&self) -> SkewFraction {
        SkewFraction {
            ctx: self.ctx.clone(),
            parts: self
                .parts
                .iter()
                .map(|(k, f)| (k.clone(), f.neg_ref()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SkewFraction) -> SkewFraction {
        self.add(&other.neg())
    }

    /// Conjugate a core coefficient through the outer monomial X^m:
    /// X^m f = σ_m(f) X^m with σ_m(c) = p^{λ(X^m, c)} c on core generators.
    fn sigma(&self, m: &[Rat], f: &RatExpr) -> RatExpr {
        let ctx = &self.ctx;
        let mut out = f.clone();
        for (gi, name) in ctx.gens.iter().enumerate() {
            if !ctx.core[gi] {
                continue;
            }
            let e = ctx.lambda_outer(m, gi);
            if e.is_zero() {
                continue;
            }
            let repl = p_monomial(&e).mul_ref(&RatExpr::gen(name));
            out = out.substitute(name, &repl).expect("monomial substitution");
        }
        out
    }

    pub fn mul(&self, other: &SkewFraction) -> SkewFraction {
        let mut parts = BTreeMap::new();
        for (m1, f1) in &self.parts {
            for (m2, f2) in &other.parts {
                let key: Vec<Rat> = m1
                    .iter()
                    .zip(m2.iter())
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                let phi = self.ctx.phi_outer(m1, m2);
                let coeff = f1
                    .mul_ref(&self.sigma(m1, f2))
                    .mul_ref(&p_monomial(&phi));
                Self::insert(&mut parts, key, coeff);
            }
        }
        SkewFraction {
            ctx: self.ctx.clone(),
            parts,
        }
    }

    /// Scale by a commutative core function from the left.
    pub fn core_scale(&self, f: &RatExpr) -> SkewFraction {
        SkewFraction::from_core(&self.ctx, f.clone()).mul(self)
    }

    /// Two-sided inverse. Only single-part elements are invertible in this
    /// localization (denominators must stay inside the commutative core).
    pub fn inv(&self) -> Result<SkewFraction, QTorusError> {
        if self.parts.is_empty() {
            return Err(QTorusError::DivisionByZero);
        }
        if self.parts.len() > 1 {
            return Err(QTorusError::NonCoreDenominator);
        }
        let (m, f) = self.parts.iter().next().expect("one part");
        let minv: Vec<Rat> = m.iter().map(|e| -e.clone()).collect();
        let phi = self.ctx.phi_outer(m, &minv);
        let finv = f.inv().map_err(|_| QTorusError::DivisionByZero)?;
        let g = p_monomial(&-phi).mul_ref(&self.sigma(&minv, &finv));
        let mut parts = BTreeMap::new();
        Self::insert(&mut parts, minv, g);
        Ok(SkewFraction {
            ctx: self.ctx.clone(),
            parts,
        })
    }

    pub fn div(&self, other: &SkewFraction) -> Result<SkewFraction, QTorusError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow_i(&self, n: i64) -> Result<SkewFraction, QTorusError> {
        if n < 0 {
            return self.inv()?.pow_i(-n);
        }
        let mut acc = SkewFraction::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Full exponent vector (over all generators) and the (coeff, p-power)
    /// pair of a single-part monomial element, if it is one.
    fn monomial_data(&self) -> Option<(Rat, Rat, Vec<Rat>)> {
        if self.parts.len() != 1 {
            return None;
        }
        let (m, f) = self.parts.iter().next().expect("one part");
        if !f.den().is_one() {
            return None;
        }
        let mono = f.num().as_monomial()?;
        let n = self.ctx.gens.len();
        let mut v = vec![Rat::zero(); n];
        let mut ppow = Rat::zero();
        for (g, e) in mono.exps.iter() {
            if g == P {
                ppow = e.clone();
            } else {
                let gi = self.ctx.gen_index(g)?;
                v[gi] = e.clone();
            }
        }
        for (k, oi) in self.ctx.outer.iter().enumerate() {
            v[*oi] = m[k].clone();
        }
        Some((mono.coeff.clone(), ppow, v))
    }

    /// Rational power of a single-part monomial element, through the Weyl
    /// normal form W(v) = p^{φ(v,v)/2} X^v, which satisfies W(v)^k = W(kv).
    pub fn pow_rat(&self, t: &Rat) -> Result<SkewFraction, QTorusError> {
        let (coeff, ppow, v) = self
            .monomial_data()
            .ok_or(QTorusError::NonMonomialRoot)?;
        let ct = rat_pow(&coeff, t).map_err(|_| QTorusError::NonMonomialRoot)?;
        let half = Rat::new(1.into(), 2.into());
        let phi_vv = self.ctx.phi_full(&v, &v);
        // X^v = p^{-φ(v,v)/2} W(v); (c p^β X^v)^t = c^t p^{t(β - φ/2)} W(tv).
        let weyl_exp = (ppow - phi_vv.clone() * half.clone()) * t.clone();
        let tv: Vec<Rat> = v.iter().map(|e| e.clone() * t.clone()).collect();
        let back = self.ctx.phi_full(&tv, &tv) * half;
        let p_exp = weyl_exp + back;
        // Reassemble: core exponents into the coefficient, outer into the key.
        let mut exps = ExpMap::single(P, p_exp);
        for (gi, name) in self.ctx.gens.iter().enumerate() {
            if self.ctx.core[gi] && !tv[gi].is_zero() {
                exps = exps.mul(&ExpMap::single(name, tv[gi].clone()));
            }
        }
        let f = RatExpr::from_laurent(LaurentExpr::from_monomial(Monomial { coeff: ct, exps }));
        let key: Vec<Rat> = self.ctx.outer.iter().map(|oi| tv[*oi].clone()).collect();
        let mut parts = BTreeMap::new();
        Self::insert(&mut parts, key, f);
        Ok(SkewFraction {
            ctx: self.ctx.clone(),
            parts,
        })
    }

    pub fn sqrt(&self) -> Result<SkewFraction, QTorusError> {
        self.pow_rat(&Rat::new(1.into(), 2.into()))
    }

    /// Substitute an outer generator by a single-part element (its rational
    /// powers must exist, i.e. the replacement must be monomial). The part
    /// f·X^m is rebuilt as the ordered product f·g₁^{m₁}⋯g_r^{m_r} with the
    /// substituted generator replaced by repl^{m_k}.
    pub fn substitute_outer(
        &self,
        name: &str,
        repl: &SkewFraction,
    ) -> Result<SkewFraction, QTorusError> {
        let gi = self
            .ctx
            .gen_index(name)
            .ok_or_else(|| QTorusError::BadForm(format!("unknown generator {name}")))?;
        if self.ctx.core[gi] {
            return Err(QTorusError::BadForm(format!("{name} is a core generator")));
        }
        let mut out = SkewFraction::zero(&self.ctx);
        for (m, f) in &self.parts {
            let mut acc = SkewFraction::from_core(&self.ctx, f.clone());
            for (k, oi) in self.ctx.outer.iter().enumerate() {
                if m[k].is_zero() {
                    continue;
                }
                let factor = if *oi == gi {
                    repl.pow_rat(&m[k])?
                } else {
                    SkewFraction::gen_pow(&self.ctx, &self.ctx.gens[*oi], m[k].clone())
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    pub fn equals(&self, other: &SkewFraction) -> bool {
        if self.parts.len() != other.parts.len() {
            return false;
        }
        self.parts.iter().all(|(k, f)| {
            other
                .parts
                .get(k)
                .map(|g| f.equals(g))
                .unwrap_or(false)
        })
    }

    /// Commutative shadow at p = 1: coefficients lose their p-dependence and
    /// the outer monomial becomes an ordinary commutative monomial.
    pub fn classical_limit(&self) -> RatExpr {
        let mut out = RatExpr::zero();
        for (m, f) in &self.parts {
            let mut term = f
                .substitute(P, &RatExpr::one())
                .expect("p -> 1 specialization");
            for (k, oi) in self.ctx.outer.iter().enumerate() {
                if m[k].is_zero() {
                    continue;
                }
                let mono = Monomial {
                    coeff: Rat::one(),
                    exps: ExpMap::single(&self.ctx.gens[*oi], m[k].clone()),
                };
                term = term.mul_ref(&RatExpr::from_laurent(LaurentExpr::from_monomial(mono)));
            }
            out = out.add_ref(&term);
        }
        out
    }

    /// Check the defining exchange relation: a·b = p^e · b·a.
    pub fn exchanges_as(&self, other: &SkewFraction, e: &Rat) -> bool {
        let lhs = self.mul(other);
        let rhs = other.mul(self).core_scale(&p_monomial(e));
        lhs.equals(&rhs)
    }
}

pub fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

pub fn quarter() -> Rat {
    Rat::new(1.into(), 4.into())
}

impl SkewFraction {
    pub fn context(&self) -> &Arc<SkewContext> {
        &self.ctx
    }
}

pub fn rat(n: i64) -> Rat {
    rint(n)
}
