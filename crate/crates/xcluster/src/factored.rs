//! Seed variables kept in factored form.
//!
//! A [`Factored`] value is `coeff · ∏ gen^{e} · ∏ P_k^{r_k}` where each `P_k`
//! is a normalized Laurent polynomial (unit leading coefficient, zero
//! monomial content, more than one term) and the exponents are exact
//! rationals. The invariant Hamiltonians are Laurent polynomials in
//! *fractional* powers of the seed variables; their images under mutations
//! only make sense because the fractional powers of the polynomial factors
//! recombine into integers term by term. The factored form makes that
//! recombination explicit and exact: monomial parts take principal roots,
//! polynomial factors accumulate rational exponents, and expansion demands
//! the accumulated exponents be integers.

use quivers::{Atom, GroupWord, Perm, Quiver, QuiverError};
use ratexpr::{rat_pow, ExpMap, LaurentExpr, Monomial, Rat, RatExpr, SymError};

use crate::XClusterError;

/// `coeff · ∏ gen^{exps} · ∏ factors[k].0 ^ factors[k].1`.
#[derive(Debug, Clone)]
pub struct Factored {
    coeff: Rat,
    exps: ExpMap,
    factors: Vec<(LaurentExpr, Rat)>,
}

impl Factored {
    pub fn one() -> Factored {
        Factored {
            coeff: ratexpr::int(1),
            exps: ExpMap::new(),
            factors: Vec::new(),
        }
    }

    pub fn gen(name: &str) -> Factored {
        Factored {
            coeff: ratexpr::int(1),
            exps: ExpMap::single(name, ratexpr::int(1)),
            factors: Vec::new(),
        }
    }

    pub fn from_monomial(m: &Monomial) -> Factored {
        Factored {
            coeff: m.coeff.clone(),
            exps: m.exps.clone(),
            factors: Vec::new(),
        }
    }

    /// Multiply by `f^e` for a general rational expression `f`.
    pub fn push(&mut self, f: &RatExpr, e: &Rat) -> Result<(), SymError> {
        self.push_poly(f.num(), e)?;
        self.push_poly(f.den(), &-e.clone())
    }

    /// Multiply by `p^e` for a Laurent polynomial `p`: split off the monomial
    /// content and leading coefficient, then merge the normalized remainder
    /// into the factor list.
    fn push_poly(&mut self, p: &LaurentExpr, e: &Rat) -> Result<(), SymError> {
        if p.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        if let Some(m) = p.as_monomial() {
            let powed = m.pow(e)?;
            self.coeff *= powed.coeff;
            self.exps = self.exps.mul(&powed.exps);
            return Ok(());
        }
        let content = p.content_monomial();
        let shifted = p.mul_monomial(&Monomial {
            coeff: ratexpr::int(1),
            exps: content.inv(),
        });
        let lead = shifted.leading().expect("nonzero polynomial").coeff;
        let norm = shifted.scale(&lead.recip());
        self.coeff *= rat_pow(&lead, e)?;
        self.exps = self.exps.mul(&content.pow(e));
        if let Some(slot) = self.factors.iter_mut().find(|(q, _)| *q == norm) {
            slot.1 += e;
        } else {
            self.factors.push((norm, e.clone()));
        }
        self.factors.retain(|(_, r)| r != &ratexpr::int(0));
        Ok(())
    }

    pub fn mul(&self, other: &Factored) -> Result<Factored, SymError> {
        let mut out = self.clone();
        out.coeff *= other.coeff.clone();
        out.exps = out.exps.mul(&other.exps);
        for (p, e) in &other.factors {
            out.push_poly(p, e)?;
        }
        Ok(out)
    }

    /// Raise to an exact rational power. The coefficient takes its principal
    /// root; factor exponents simply scale.
    pub fn pow(&self, r: &Rat) -> Result<Factored, SymError> {
        let coeff = rat_pow(&self.coeff, r)?;
        let factors = self
            .factors
            .iter()
            .map(|(p, e)| (p.clone(), e * r))
            .filter(|(_, e)| e != &ratexpr::int(0))
            .collect();
        Ok(Factored {
            coeff,
            exps: self.exps.pow(r),
            factors,
        })
    }

    pub fn inv(&self) -> Result<Factored, SymError> {
        self.pow(&ratexpr::int(-1))
    }

    /// Expand into a single rational expression. Every polynomial factor must
    /// carry an integer exponent by now; a leftover fractional exponent means
    /// the value genuinely involves the root of a sum and is reported as
    /// such, never approximated.
    pub fn expand(&self) -> Result<RatExpr, SymError> {
        let mut out = RatExpr::from_laurent(LaurentExpr::from_monomial(Monomial {
            coeff: self.coeff.clone(),
            exps: self.exps.clone(),
        }));
        for (p, e) in &self.factors {
            if !e.denom().eq(&1.into()) {
                return Err(SymError::FractionalPowerOfNonMonomial(p.to_string()));
            }
            let k: i64 = e
                .numer()
                .try_into()
                .map_err(|_| SymError::NonMonomialFractionalPower)?;
            out = out.mul_ref(&RatExpr::from_laurent(p.clone()).pow_i(k)?);
        }
        Ok(out)
    }
}

/// A seed whose variables are kept factored.
#[derive(Debug, Clone)]
pub struct FactoredSeed {
    quiver: Quiver,
    vars: Vec<Factored>,
}

impl FactoredSeed {
    pub fn initial(quiver: Quiver) -> FactoredSeed {
        let vars = (1..=quiver.n())
            .map(|i| Factored::gen(&format!("y{i}")))
            .collect();
        FactoredSeed { quiver, vars }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Variable at a 1-based vertex.
    pub fn var(&self, i: usize) -> &Factored {
        &self.vars[i - 1]
    }

    pub fn mutate(&self, j: usize) -> Result<FactoredSeed, XClusterError> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(XClusterError::Quiver(QuiverError::IndexOutOfRange(j, n)));
        }
        // The exchange factor needs the current value of y_j as a rational
        // expression; seed variables always expand (their factor exponents
        // are integers throughout the evolution).
        let yj = self.vars[j - 1].expand()?;
        let mut vars = Vec::with_capacity(n);
        for i in 1..=n {
            if i == j {
                vars.push(self.vars[j - 1].inv()?);
                continue;
            }
            let e = self.quiver.eps(i, j);
            if e == 0 {
                vars.push(self.vars[i - 1].clone());
                continue;
            }
            let base = if e > 0 {
                RatExpr::one().add_ref(&yj)
            } else {
                RatExpr::one().add_ref(&yj.inv()?)
            };
            let mut v = self.vars[i - 1].clone();
            v.push(&base, &ratexpr::int(e))?;
            vars.push(v);
        }
        Ok(FactoredSeed {
            quiver: self.quiver.mutate(j)?,
            vars,
        })
    }

    pub fn permute(&self, sigma: &Perm) -> Result<FactoredSeed, XClusterError> {
        let quiver = self.quiver.permute(sigma)?;
        let mut vars = vec![Factored::one(); self.n()];
        for i in 1..=self.n() {
            vars[sigma.image(i) - 1] = self.vars[i - 1].clone();
        }
        Ok(FactoredSeed { quiver, vars })
    }

    pub fn invert(&self) -> Result<FactoredSeed, XClusterError> {
        let vars = self
            .vars
            .iter()
            .map(|v| v.inv())
            .collect::<Result<Vec<_>, SymError>>()?;
        Ok(FactoredSeed {
            quiver: self.quiver.invert(),
            vars,
        })
    }

    pub fn apply_word(&self, w: &GroupWord) -> Result<FactoredSeed, XClusterError> {
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

    /// Exact seed equality: same quiver, and every variable expands to the
    /// same rational function.
    pub fn seed_equals(&self, other: &FactoredSeed) -> Result<bool, XClusterError> {
        if self.quiver != other.quiver {
            return Ok(false);
        }
        for (a, b) in self.vars.iter().zip(&other.vars) {
            if !a.expand()?.equals(&b.expand()?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of one monomial `coeff · ∏ y_i^{r_i}` (fractional exponents
    /// allowed) under the seed's evolution, kept factored.
    pub fn monomial_image(&self, m: &Monomial) -> Result<Factored, XClusterError> {
        let mut acc = Factored::from_monomial(&Monomial {
            coeff: m.coeff.clone(),
            exps: ExpMap::new(),
        });
        for (gen, exp) in m.exps.iter() {
            let idx: usize = gen
                .strip_prefix('y')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| SymError::MissingGenerator(gen.to_string()))?;
            acc = acc.mul(&self.vars[idx - 1].pow(exp)?)?;
        }
        Ok(acc)
    }

    /// Image of a Laurent polynomial in (fractional powers of) the initial
    /// variables: term-by-term monomial images, expanded and summed.
    pub fn laurent_image(&self, h: &LaurentExpr) -> Result<RatExpr, XClusterError> {
        let mut out = RatExpr::zero();
        for term in h.terms() {
            out = out.add_ref(&self.monomial_image(&term)?.expand()?);
        }
        Ok(out)
    }
}
