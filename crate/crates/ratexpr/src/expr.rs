use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{error::SymError, Rat};

/// Exponent vector: generator name → exact rational exponent.
///
/// Zero exponents are never stored, so structural equality of the map is
/// equality of monomials up to coefficient. The derived `Ord` (lexicographic
/// over sorted (name, exponent) pairs) is the canonical term order used for
/// rendering and for picking the denominator's leading term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExpMap(BTreeMap<String, Rat>);

impl ExpMap {
    pub fn new() -> Self {
        ExpMap(BTreeMap::new())
    }

    pub fn single(gen: &str, exp: Rat) -> Self {
        let mut m = BTreeMap::new();
        if !exp.is_zero() {
            m.insert(gen.to_string(), exp);
        }
        ExpMap(m)
    }

    pub fn get(&self, gen: &str) -> Rat {
        self.0.get(gen).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rat)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Product of monomial parts: add exponents, dropping zeros.
    pub fn mul(&self, other: &ExpMap) -> ExpMap {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            let entry = out.entry(g.clone()).or_insert_with(Rat::zero);
            *entry += e;
            if entry.is_zero() {
                out.remove(g);
            }
        }
        ExpMap(out)
    }

    /// Raise every exponent to the given rational power.
    pub fn pow(&self, r: &Rat) -> ExpMap {
        if r.is_zero() {
            return ExpMap::new();
        }
        ExpMap(self.0.iter().map(|(g, e)| (g.clone(), e * r)).collect())
    }

    pub fn inv(&self) -> ExpMap {
        ExpMap(self.0.iter().map(|(g, e)| (g.clone(), -e)).collect())
    }

    /// Remove a generator, returning its exponent (zero if absent).
    pub fn without(&self, gen: &str) -> (ExpMap, Rat) {
        let mut m = self.0.clone();
        let e = m.remove(gen).unwrap_or_else(Rat::zero);
        (ExpMap(m), e)
    }

    pub fn contains(&self, gen: &str) -> bool {
        self.0.contains_key(gen)
    }
}

/// A single term: exact rational coefficient times a product of generator
/// powers with exact rational exponents. Invariant: `coeff != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial {
    pub coeff: Rat,
    pub exps: ExpMap,
}

impl Monomial {
    pub fn constant(c: Rat) -> Self {
        Monomial {
            coeff: c,
            exps: ExpMap::new(),
        }
    }

    pub fn gen(name: &str) -> Self {
        Monomial {
            coeff: Rat::one(),
            exps: ExpMap::single(name, Rat::one()),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            exps: self.exps.mul(&other.exps),
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            coeff: self.coeff.recip(),
            exps: self.exps.inv(),
        }
    }

    /// Principal rational power. Exponents multiply exactly; the coefficient
    /// must admit an exact root (perfect q-th power for exponent p/q), else
    /// the root is reported as non-evaluable.
    pub fn pow(&self, r: &Rat) -> Result<Monomial, SymError> {
        Ok(Monomial {
            coeff: rat_pow(&self.coeff, r)?,
            exps: self.exps.pow(r),
        })
    }
}

/// Exact q-th-root-then-p-th-power of a rational, for exponent r = p/q.
/// Fails unless numerator and denominator are perfect q-th powers (with the
/// usual sign rule: negative bases only under odd root orders).
pub fn rat_pow(v: &Rat, r: &Rat) -> Result<Rat, SymError> {
    if r.is_zero() {
        return Ok(Rat::one());
    }
    if v.is_zero() {
        // 0^r with r > 0 is 0; negative exponents of 0 are a division by zero.
        return if r.is_positive() {
            Ok(Rat::zero())
        } else {
            Err(SymError::DivisionByZero)
        };
    }
    let q = r.denom().clone();
    let p = r.numer().clone();
    let rooted = if q.is_one() {
        v.clone()
    } else {
        exact_nth_root(v, &q)?
    };
    // Integer power by exact repeated multiplication.
    let exp_mag: u64 = p
        .abs()
        .try_into()
        .map_err(|_| SymError::NonEvaluableRoot {
            value: v.to_string(),
            root: r.to_string(),
        })?;
    let mut acc = Rat::one();
    let mut base = rooted;
    let mut e = exp_mag;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    if p.is_negative() {
        Ok(acc.recip())
    } else {
        Ok(acc)
    }
}

fn exact_nth_root(v: &Rat, q: &BigInt) -> Result<Rat, SymError> {
    let err = || SymError::NonEvaluableRoot {
        value: v.to_string(),
        root: q.to_string(),
    };
    let q32: u32 = q.try_into().map_err(|_| err())?;
    let negative = v.is_negative();
    if negative && q32 % 2 == 0 {
        return Err(err());
    }
    let num = v.numer().abs();
    let den = v.denom().abs();
    let rn = num.nth_root(q32);
    let rd = den.nth_root(q32);
    if num != rn.pow(q32) || den != rd.pow(q32) {
        return Err(err());
    }
    let root = Rat::new(rn, rd);
    Ok(if negative { -root } else { root })
}

/// Canonical finite sum of monomials: no two terms share an exponent vector,
/// no zero coefficients. Terms are kept sorted by exponent vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentExpr {
    terms: BTreeMap<ExpMap, Rat>,
}

impl LaurentExpr {
    pub fn zero() -> Self {
        LaurentExpr::default()
    }

    pub fn one() -> Self {
        LaurentExpr::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExpMap::new(), c);
        }
        LaurentExpr { terms }
    }

    pub fn gen(name: &str) -> Self {
        LaurentExpr::from_monomial(Monomial::gen(name))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !m.coeff.is_zero() {
            terms.insert(m.exps, m.coeff);
        }
        LaurentExpr { terms }
    }

    pub fn from_terms(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut out = LaurentExpr::zero();
        for m in ms {
            out.add_term(&m.exps, &m.coeff);
        }
        out
    }

    fn add_term(&mut self, exps: &ExpMap, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(exps);
                }
            }
            None => {
                self.terms.insert(exps.clone(), coeff.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExpMap::new())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial {
            coeff: c.clone(),
            exps: e.clone(),
        })
    }

    /// The greatest term in the canonical order, if any.
    pub fn leading(&self) -> Option<Monomial> {
        self.terms.iter().next_back().map(|(e, c)| Monomial {
            coeff: c.clone(),
            exps: e.clone(),
        })
    }

    /// If the expression is a single term, return it.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() == 1 {
            self.leading()
        } else {
            None
        }
    }

    pub fn add(&self, other: &LaurentExpr) -> LaurentExpr {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> LaurentExpr {
        LaurentExpr {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentExpr) -> LaurentExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentExpr) -> LaurentExpr {
        let mut out = LaurentExpr::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(&ea.mul(eb), &(ca * cb));
            }
        }
        out
    }

    /// Exact division: returns `q` with `self = q · den`, or `None` when
    /// `den` does not divide `self` exactly (search is step-bounded).
    pub fn exact_div(&self, den: &LaurentExpr) -> Option<LaurentExpr> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentExpr::zero());
        }
        if let Some(m) = den.as_monomial() {
            return Some(self.mul_monomial(&m.inv()));
        }
        // Leading-term elimination needs a multiplicative term order. The
        // structural ExpMap order drops zero exponents, so work with full
        // exponent vectors over the union of generators, precomputed once.
        let mut gens: Vec<String> = self.generators();
        for g in den.generators() {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        gens.sort();
        let key = |e: &ExpMap| -> Vec<Rat> { gens.iter().map(|g| e.get(g)).collect() };
        let mut rem: BTreeMap<Vec<Rat>, Rat> = self
            .terms
            .iter()
            .map(|(e, c)| (key(e), c.clone()))
            .collect();
        let den_keyed: Vec<(Vec<Rat>, Rat)> = den
            .terms
            .iter()
            .map(|(e, c)| (key(e), c.clone()))
            .collect();
        let (lb_key, lb_coeff) = den_keyed
            .iter()
            .max_by(|a, b| a.0.cmp(&b.0))
            .expect("nonzero polynomial has a leading term")
            .clone();
        let mut quo: Vec<(Vec<Rat>, Rat)> = Vec::new();
        // Exact quotients terminate in num_terms(quotient) steps; the cap
        // only cuts off the non-divisible case.
        let cap = 16 * (self.num_terms() + 1) * (den.num_terms() + 1) + 1024;
        for _ in 0..cap {
            let Some((lr_key, lr_coeff)) = rem.last_key_value() else {
                let quo_terms = quo.into_iter().map(|(k, c)| {
                    let exps = gens
                        .iter()
                        .zip(&k)
                        .fold(ExpMap::new(), |m, (g, e)| m.mul(&ExpMap::single(g, e.clone())));
                    Monomial { coeff: c, exps }
                });
                return Some(LaurentExpr::from_terms(quo_terms));
            };
            let t_key: Vec<Rat> = lr_key.iter().zip(&lb_key).map(|(a, b)| a - b).collect();
            let t_coeff = lr_coeff / &lb_coeff;
            for (dk, dc) in &den_keyed {
                let k: Vec<Rat> = t_key.iter().zip(dk).map(|(a, b)| a + b).collect();
                let c = &t_coeff * dc;
                match rem.get_mut(&k) {
                    Some(v) => {
                        *v -= c;
                        if v.is_zero() {
                            rem.remove(&k);
                        }
                    }
                    None => {
                        rem.insert(k, -c);
                    }
                }
            }
            quo.push((t_key, t_coeff));
        }
        None
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentExpr {
        let mut out = LaurentExpr::zero();
        for (e, c) in &self.terms {
            out.add_term(&e.mul(&m.exps), &(c * &m.coeff));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> LaurentExpr {
        self.mul_monomial(&Monomial::constant(c.clone()))
    }

    /// Nonnegative integer power by binary exponentiation.
    pub fn pow_u(&self, n: u64) -> LaurentExpr {
        let mut acc = LaurentExpr::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Per-generator minimal exponent across all terms, as a monomial with
    /// unit coefficient. Dividing by it makes every exponent of every
    /// generator nonnegative with at least one zero.
    pub fn content_monomial(&self) -> ExpMap {
        let mut mins: BTreeMap<String, Rat> = BTreeMap::new();
        let mut seen_count: BTreeMap<String, usize> = BTreeMap::new();
        for e in self.terms.keys() {
            for (g, x) in e.iter() {
                mins.entry(g.to_string())
                    .and_modify(|m| {
                        if x < m {
                            *m = x.clone();
                        }
                    })
                    .or_insert_with(|| x.clone());
                *seen_count.entry(g.to_string()).or_insert(0) += 1;
            }
        }
        let n = self.terms.len();
        // A generator absent from some term effectively has exponent 0 there.
        let mut out = BTreeMap::new();
        for (g, m) in mins {
            let m = if seen_count[&g] < n && m.is_positive() {
                Rat::zero()
            } else {
                m
            };
            if !m.is_zero() {
                out.insert(g, m);
            }
        }
        ExpMap(out)
    }

    /// Exact evaluation at a point of nonzero rationals. Fractional exponents
    /// require the point value to be a perfect power of the exponent's
    /// denominator.
    pub fn eval(&self, point: &BTreeMap<String, Rat>) -> Result<Rat, SymError> {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (g, x) in e.iter() {
                let base = point
                    .get(g)
                    .ok_or_else(|| SymError::MissingGenerator(g.to_string()))?;
                v *= rat_pow(base, x)?;
            }
            total += v;
        }
        Ok(total)
    }

    /// All generators appearing in the expression.
    pub fn generators(&self) -> Vec<String> {
        let mut gens: Vec<String> = Vec::new();
        for e in self.terms.keys() {
            for (g, _) in e.iter() {
                if !gens.iter().any(|h| h == g) {
                    gens.push(g.to_string());
                }
            }
        }
        gens.sort();
        gens
    }
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, e: &Rat) -> fmt::Result {
    if e.denom().is_one() {
        write!(f, "{}", e.numer())
    } else {
        write!(f, "{}/{}", e.numer(), e.denom())
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, c: &Rat) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Render one term with a positive-magnitude coefficient (sign handled by
/// the caller).
fn fmt_term(f: &mut fmt::Formatter<'_>, exps: &ExpMap, coeff: &Rat) -> fmt::Result {
    if exps.is_empty() {
        return fmt_coeff(f, coeff);
    }
    let mut lead = true;
    if !coeff.is_one() {
        fmt_coeff(f, coeff)?;
        lead = false;
    }
    for (g, e) in exps.iter() {
        if !lead {
            write!(f, "*")?;
        }
        lead = false;
        write!(f, "{g}")?;
        if !e.is_one() {
            write!(f, "^")?;
            fmt_exp(f, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, e, &c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_negative() {
            write!(f, "-")?;
        }
        fmt_term(f, &self.exps, &self.coeff.abs())
    }
}
