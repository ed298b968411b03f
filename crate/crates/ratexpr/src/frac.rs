use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::SymError;
use crate::expr::{ExpMap, LaurentExpr, Monomial};
use crate::Rat;

/// Quotient of two Laurent expressions, the universal carrier for all
/// classical symbolic values.
///
/// Canonical form: the denominator's monomial content is extracted (so its
/// minimal exponent in every generator is zero and negative exponents live in
/// the numerator), and both parts are scaled so the denominator's leading
/// coefficient is 1. Zero is represented as 0/1. There is deliberately no
/// polynomial GCD; equality goes through [`RatExpr::equals`]
/// (cross-multiplication), which is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatExpr {
    num: LaurentExpr,
    den: LaurentExpr,
}

impl RatExpr {
    /// Build and canonicalize. The denominator must be nonzero.
    pub fn new(num: LaurentExpr, den: LaurentExpr) -> Result<Self, SymError> {
        if den.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentExpr, den: LaurentExpr) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatExpr {
                num: LaurentExpr::zero(),
                den: LaurentExpr::one(),
            };
        }
        // Pull the denominator's monomial content into the numerator.
        let content = den.content_monomial();
        let shift = Monomial {
            coeff: Rat::one(),
            exps: content.inv(),
        };
        let den = den.mul_monomial(&shift);
        let num = num.mul_monomial(&shift);
        // Unit leading coefficient on the denominator.
        let lead = den.leading().expect("nonzero denominator").coeff;
        let scale = lead.recip();
        RatExpr {
            num: num.scale(&scale),
            den: den.scale(&scale),
        }
    }

    pub fn zero() -> Self {
        RatExpr {
            num: LaurentExpr::zero(),
            den: LaurentExpr::one(),
        }
    }

    pub fn one() -> Self {
        RatExpr {
            num: LaurentExpr::one(),
            den: LaurentExpr::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatExpr {
            num: LaurentExpr::constant(c),
            den: LaurentExpr::one(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(crate::int(n))
    }

    pub fn gen(name: &str) -> Self {
        RatExpr {
            num: LaurentExpr::gen(name),
            den: LaurentExpr::one(),
        }
    }

    /// Monomial `coeff * prod gen^(p/q)` from machine-int exponent pairs.
    pub fn monomial(coeff: Rat, powers: &[(&str, i64, i64)]) -> Self {
        let mut exps = ExpMap::new();
        for (g, p, q) in powers {
            exps = exps.mul(&ExpMap::single(g, crate::rat(*p, *q)));
        }
        RatExpr {
            num: LaurentExpr::from_monomial(Monomial { coeff, exps }),
            den: LaurentExpr::one(),
        }
    }

    pub fn from_laurent(num: LaurentExpr) -> Self {
        RatExpr {
            num,
            den: LaurentExpr::one(),
        }
    }

    pub fn num(&self) -> &LaurentExpr {
        &self.num
    }

    pub fn den(&self) -> &LaurentExpr {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.equals(&RatExpr::one())
    }

    /// Exact equality as rational functions: cross-multiplied difference
    /// expands to the zero Laurent expression.
    pub fn equals(&self, other: &RatExpr) -> bool {
        self.num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den))
            .is_zero()
    }

    pub fn add_ref(&self, other: &RatExpr) -> RatExpr {
        Self::canonical(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub_ref(&self, other: &RatExpr) -> RatExpr {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &RatExpr) -> RatExpr {
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div_ref(&self, other: &RatExpr) -> Result<RatExpr, SymError> {
        if other.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(Self::canonical(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn neg_ref(&self) -> RatExpr {
        RatExpr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatExpr, SymError> {
        if self.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow_i(&self, n: i64) -> Result<RatExpr, SymError> {
        if n < 0 {
            Ok(self
                .inv()?
                .pow_i(n.checked_neg().expect("i64::MIN unsupported"))?)
        } else {
            Ok(Self::canonical(
                self.num.pow_u(n as u64),
                self.den.pow_u(n as u64),
            ))
        }
    }

    /// Rational power. Only defined when both numerator and denominator are
    /// single terms; fractional powers of sums are rejected.
    pub fn pow_rat(&self, r: &Rat) -> Result<RatExpr, SymError> {
        if r.denom().is_one() {
            let n: i64 = r
                .numer()
                .try_into()
                .map_err(|_| SymError::NonMonomialFractionalPower)?;
            return self.pow_i(n);
        }
        let (nm, dm) = match (self.num.as_monomial(), self.den.as_monomial()) {
            (Some(n), Some(d)) => (n, d),
            _ => return Err(SymError::NonMonomialFractionalPower),
        };
        let m = nm.mul(&dm.inv()).pow(r)?;
        Ok(RatExpr {
            num: LaurentExpr::from_monomial(m),
            den: LaurentExpr::one(),
        })
    }

    /// Exact substitution of a generator by another rational expression.
    ///
    /// If the generator occurs with fractional exponents, the replacement
    /// must reduce to a single monomial so its principal root is defined by
    /// exponent division; otherwise any rational replacement is accepted.
    pub fn substitute(&self, gen: &str, repl: &RatExpr) -> Result<RatExpr, SymError> {
        let fractional = self
            .num
            .terms()
            .chain(self.den.terms())
            .any(|m| !m.exps.get(gen).denom().is_one());
        if fractional {
            let (nm, dm) = match (repl.num.as_monomial(), repl.den.as_monomial()) {
                (Some(n), Some(d)) => (n, d),
                _ => return Err(SymError::FractionalPowerOfNonMonomial(gen.to_string())),
            };
            let mono = nm.mul(&dm.inv());
            let num = subst_monomial(&self.num, gen, &mono)?;
            let den = subst_monomial(&self.den, gen, &mono)?;
            if den.is_zero() {
                return Err(SymError::DivisionByZero);
            }
            return Ok(Self::canonical(num, den));
        }
        let num = subst_general(&self.num, gen, repl)?;
        let den = subst_general(&self.den, gen, repl)?;
        num.div_ref(&den)
    }

    /// Apply a batch of substitutions simultaneously (all replacements read
    /// the *original* generators, as in a coordinate change).
    pub fn substitute_all(&self, map: &BTreeMap<String, RatExpr>) -> Result<RatExpr, SymError> {
        // Route each original generator through a staging name first, so a
        // replacement mentioning another substituted generator is not
        // rewritten twice.
        let mut cur = self.clone();
        for gen in map.keys() {
            cur = cur.substitute(gen, &RatExpr::gen(&format!("__stage_{gen}")))?;
        }
        for (gen, repl) in map {
            cur = cur.substitute(&format!("__stage_{gen}"), repl)?;
        }
        Ok(cur)
    }

    /// Exact rational evaluation at a point of nonzero rationals.
    pub fn specialize(&self, point: &BTreeMap<String, Rat>) -> Result<Rat, SymError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(SymError::DenominatorVanishes);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// All generators appearing in numerator or denominator.
    pub fn generators(&self) -> Vec<String> {
        let mut gens = self.num.generators();
        for g in self.den.generators() {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        gens.sort();
        gens
    }
}

/// Substitute `gen := mono` into every term of a Laurent expression,
/// resolving fractional powers by the principal monomial root.
fn subst_monomial(
    expr: &LaurentExpr,
    gen: &str,
    mono: &Monomial,
) -> Result<LaurentExpr, SymError> {
    let mut out = LaurentExpr::zero();
    for term in expr.terms() {
        let (rest, e) = term.exps.without(gen);
        let replaced = if e.is_zero() {
            Monomial {
                coeff: term.coeff,
                exps: rest,
            }
        } else {
            let powed = mono.pow(&e)?;
            Monomial {
                coeff: term.coeff * powed.coeff,
                exps: rest.mul(&powed.exps),
            }
        };
        out = out.add(&LaurentExpr::from_monomial(replaced));
    }
    Ok(out)
}

/// Substitute `gen := repl` (general rational expression) into a Laurent
/// expression with integer exponents of `gen`, producing a rational result.
fn subst_general(expr: &LaurentExpr, gen: &str, repl: &RatExpr) -> Result<RatExpr, SymError> {
    let mut out = RatExpr::zero();
    for term in expr.terms() {
        let (rest, e) = term.exps.without(gen);
        let base = RatExpr::from_laurent(LaurentExpr::from_monomial(Monomial {
            coeff: term.coeff,
            exps: rest,
        }));
        let piece = if e.is_zero() {
            base
        } else {
            let n: i64 = e
                .numer()
                .try_into()
                .map_err(|_| SymError::NonMonomialFractionalPower)?;
            debug_assert!(e.denom().is_one());
            base.mul_ref(&repl.pow_i(n)?)
        };
        out = out.add_ref(&piece);
    }
    Ok(out)
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait for &RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: &RatExpr) -> RatExpr {
                self.$impl(rhs)
            }
        }
        impl $trait for RatExpr {
            type Output = RatExpr;
            fn $method(self, rhs: RatExpr) -> RatExpr {
                (&self).$impl(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div for &RatExpr {
    type Output = RatExpr;
    fn div(self, rhs: &RatExpr) -> RatExpr {
        self.div_ref(rhs).expect("division by zero expression")
    }
}

impl Div for RatExpr {
    type Output = RatExpr;
    fn div(self, rhs: RatExpr) -> RatExpr {
        &self / &rhs
    }
}

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        self.neg_ref()
    }
}

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        self.neg_ref()
    }
}
