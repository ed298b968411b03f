//! Tau-variable (A-type) cluster seeds over quivers extended by frozen
//! directions, and the bilinear form of the q-difference dynamics.
//!
//! A tau seed carries one variable per unfrozen vertex plus fixed monomial
//! values on the frozen vertices. Mutation at an unfrozen vertex j replaces
//!
//! ```text
//! τ_j ← ( ∏_{b_{Ij} > 0} v_I^{b_{Ij}} + ∏_{b_{Ij} < 0} v_I^{-b_{Ij}} ) / τ_j
//! ```
//!
//! where I runs over all vertices and v_I is the current value (tau variable
//! or frozen monomial). The induced exchange variables `y_j = ∏_I v_I^{b_{Ij}}`
//! intertwine tau mutation with the usual exchange-variable mutation.

use std::collections::BTreeMap;

use quivers::{catalog, Atom, ExtQuiver, GroupWord, Perm, QuiverError};
use ratexpr::{RatExpr, SymError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AClusterError {
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("inversion is not defined on tau seeds")]
    InversionUnsupported,
    #[error("frozen value count {0} does not match frozen row count {1}")]
    FrozenCountMismatch(usize, usize),
    #[error("quiver error: {0}")]
    Quiver(#[from] QuiverError),
    #[error("symbolic error: {0}")]
    Sym(#[from] SymError),
}

/// A tau seed: an extended quiver, one tau variable per unfrozen vertex and
/// one fixed value per frozen vertex.
#[derive(Debug, Clone)]
pub struct TauSeed {
    ext: ExtQuiver,
    taus: Vec<RatExpr>,
    frozen: Vec<RatExpr>,
}

impl TauSeed {
    /// Seed with symbolic tau variables `t1..tn` and the given frozen values.
    pub fn initial(ext: ExtQuiver, frozen: Vec<RatExpr>) -> Result<TauSeed, AClusterError> {
        if frozen.len() != ext.frozen.len() {
            return Err(AClusterError::FrozenCountMismatch(
                frozen.len(),
                ext.frozen.len(),
            ));
        }
        let taus = (1..=ext.n_unfrozen())
            .map(|i| RatExpr::gen(&format!("t{i}")))
            .collect();
        Ok(TauSeed { ext, taus, frozen })
    }

    /// The 4-cycle quiver with two frozen directions carrying the fourth
    /// roots `q^{1/4}` and `Z^{1/4}`.
    pub fn six_row() -> TauSeed {
        let ext = catalog("A7p-ext6")
            .expect("built-in label")
            .as_extended()
            .expect("extended entry")
            .clone();
        let root = |g: &str| RatExpr::monomial(ratexpr::int(1), &[(g, 1, 4)]);
        TauSeed::initial(ext, vec![root("q"), root("Z")]).expect("consistent built-in data")
    }

    /// The 4-cycle quiver with four frozen directions carrying the
    /// independent parameters `q0, z0, q1, z1`.
    pub fn eight_row() -> TauSeed {
        let ext = catalog("A7p-ext8")
            .expect("built-in label")
            .as_extended()
            .expect("extended entry")
            .clone();
        let frozen = ["q0", "z0", "q1", "z1"]
            .iter()
            .map(|g| RatExpr::gen(g))
            .collect();
        TauSeed::initial(ext, frozen).expect("consistent built-in data")
    }

    pub fn n(&self) -> usize {
        self.ext.n_unfrozen()
    }

    pub fn n_total(&self) -> usize {
        self.ext.n_total()
    }

    pub fn ext(&self) -> &ExtQuiver {
        &self.ext
    }

    /// Tau variable at an unfrozen vertex (1-based).
    pub fn tau(&self, i: usize) -> &RatExpr {
        &self.taus[i - 1]
    }

    /// Current value at any vertex: tau variable or frozen monomial.
    pub fn value(&self, i: usize) -> &RatExpr {
        let n = self.n();
        if i <= n {
            &self.taus[i - 1]
        } else {
            &self.frozen[i - n - 1]
        }
    }

    /// Tau mutation at an unfrozen vertex.
    pub fn mutate(&self, j: usize) -> Result<TauSeed, AClusterError> {
        let n = self.n();
        if j == 0 || j > self.n_total() {
            return Err(AClusterError::IndexOutOfRange(j, self.n_total()));
        }
        if j > n {
            return Err(AClusterError::Quiver(QuiverError::FrozenVertexMutation(j)));
        }
        let mut pos = RatExpr::one();
        let mut neg = RatExpr::one();
        for i in 1..=self.n_total() {
            let b = self.ext.b(i, j);
            if b > 0 {
                pos = pos.mul_ref(&self.value(i).pow_i(b)?);
            } else if b < 0 {
                neg = neg.mul_ref(&self.value(i).pow_i(-b)?);
            }
        }
        let mut taus = self.taus.clone();
        taus[j - 1] = reduce(&pos.add_ref(&neg).div_ref(&self.taus[j - 1])?);
        Ok(TauSeed {
            ext: self.ext.mutate(j)?,
            taus,
            frozen: self.frozen.clone(),
        })
    }

    /// Relabel unfrozen vertices: the tau at vertex i moves to vertex σ(i).
    pub fn permute(&self, sigma: &Perm) -> Result<TauSeed, AClusterError> {
        let n = self.n();
        if sigma.n() != n {
            return Err(AClusterError::IndexOutOfRange(sigma.n(), n));
        }
        let mut taus = self.taus.clone();
        for i in 1..=n {
            taus[sigma.image(i) - 1] = self.taus[i - 1].clone();
        }
        Ok(TauSeed {
            ext: self.ext.permute(sigma)?,
            taus,
            frozen: self.frozen.clone(),
        })
    }

    /// Apply a group word, leftmost atom first. Inversion atoms are rejected:
    /// there is no inversion on tau variables.
    pub fn apply_word(&self, w: &GroupWord) -> Result<TauSeed, AClusterError> {
        let mut s = self.clone();
        for atom in w.atoms() {
            s = match atom {
                Atom::Mut(j) => s.mutate(*j)?,
                Atom::Perm(p) => s.permute(p)?,
                Atom::Inv => return Err(AClusterError::InversionUnsupported),
            };
        }
        Ok(s)
    }

    /// Exchange variables induced by the current seed:
    /// `y_j = ∏_I v_I^{b_{Ij}}` over all vertices I.
    pub fn y_from_tau(&self) -> Result<Vec<RatExpr>, AClusterError> {
        (1..=self.n())
            .map(|j| {
                let mut y = RatExpr::one();
                for i in 1..=self.n_total() {
                    let b = self.ext.b(i, j);
                    if b != 0 {
                        y = y.mul_ref(&self.value(i).pow_i(b)?);
                    }
                }
                Ok(y)
            })
            .collect()
    }

    /// True when every tau variable is a Laurent polynomial in the initial
    /// data (polynomial numerator over a monomial denominator).
    pub fn is_laurent(&self) -> bool {
        self.taus
            .iter()
            .all(|t| t.den().as_monomial().is_some())
    }

    /// Structural and variable equality.
    pub fn seed_equals(&self, other: &TauSeed) -> bool {
        self.ext == other.ext
            && self.taus.len() == other.taus.len()
            && self
                .taus
                .iter()
                .zip(&other.taus)
                .all(|(a, b)| a.equals(b))
            && self
                .frozen
                .iter()
                .zip(&other.frozen)
                .all(|(a, b)| a.equals(b))
    }

    /// Substitute expressions for generators in every tau variable.
    pub fn substitute_all(&self, map: &BTreeMap<String, RatExpr>) -> Result<TauSeed, AClusterError> {
        let taus = self
            .taus
            .iter()
            .map(|t| t.substitute_all(map))
            .collect::<Result<_, _>>()?;
        let frozen = self
            .frozen
            .iter()
            .map(|t| t.substitute_all(map))
            .collect::<Result<_, _>>()?;
        Ok(TauSeed {
            ext: self.ext.clone(),
            taus,
            frozen,
        })
    }
}

/// Cancel a polynomial denominator when it divides the numerator exactly;
/// the Laurent phenomenon guarantees this for mutated tau variables.
fn reduce(e: &RatExpr) -> RatExpr {
    if e.den().as_monomial().is_some() {
        return e.clone();
    }
    match e.num().exact_div(e.den()) {
        Some(q) => RatExpr::from_laurent(q),
        None => e.clone(),
    }
}

/// The translation word `(1,2)(3,4)∘μ1∘μ3` of the 4-cycle quiver, in
/// application order (mutations first).
pub fn translation_word() -> GroupWord {
    let p = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).expect("valid cycles");
    GroupWord::new(vec![Atom::Mut(3), Atom::Mut(1), Atom::Perm(p)])
}

/// Residuals of the two bilinear equations satisfied along the translation
/// orbit of the 4-cycle tau seed:
///
/// ```text
/// τ̲1 τ̄1 − τ1² − Z^{1/2} τ3²,    τ̲3 τ̄3 − τ3² − Z^{1/2} τ1²
/// ```
///
/// with `τ̄` the image under the translation and `τ̲` under its inverse.
/// Both vanish identically.
pub fn bilinear_residuals(seed: &TauSeed) -> Result<Vec<RatExpr>, AClusterError> {
    let t = translation_word();
    let up = seed.apply_word(&t)?;
    let dn = seed.apply_word(&t.inverse())?;
    // For the six-row seed the second frozen value is Z^{1/4}.
    let z_half = seed.value(6).pow_i(2)?;
    let res = |i: usize, k: usize| -> Result<RatExpr, AClusterError> {
        Ok(dn
            .tau(i)
            .mul_ref(up.tau(i))
            .sub_ref(&seed.tau(i).pow_i(2)?)
            .sub_ref(&z_half.mul_ref(&seed.tau(k).pow_i(2)?)))
    };
    Ok(vec![res(1, 3)?, res(3, 1)?])
}

/// The G coordinate of a 4-cycle tau seed: `G = Z^{1/2} τ3² / τ1²`.
pub fn g_coordinate(seed: &TauSeed) -> Result<RatExpr, AClusterError> {
    let z_half = seed.value(6).pow_i(2)?;
    Ok(z_half
        .mul_ref(&seed.tau(3).pow_i(2)?)
        .div_ref(&seed.tau(1).pow_i(2)?)?)
}
