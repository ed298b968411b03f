//! Seeds with fully expanded rational-expression variables.

use quivers::{Atom, GroupWord, Perm, Quiver, QuiverError};
use ratexpr::{RatExpr, SymError};

use crate::XClusterError;

/// A quiver with one rational expression per vertex, written in the initial
/// generators `y1..yn`.
#[derive(Debug, Clone)]
pub struct XSeed {
    quiver: Quiver,
    vars: Vec<RatExpr>,
}

impl XSeed {
    /// The initial seed: `vars[i] = y_{i+1}`.
    pub fn initial(quiver: Quiver) -> XSeed {
        let vars = (1..=quiver.n())
            .map(|i| RatExpr::gen(&format!("y{i}")))
            .collect();
        XSeed { quiver, vars }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Variable at a 1-based vertex.
    pub fn var(&self, i: usize) -> &RatExpr {
        &self.vars[i - 1]
    }

    pub fn vars(&self) -> &[RatExpr] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Mutation at vertex j: `y_j ↦ y_j^{-1}`,
    /// `y_i ↦ y_i (1 + y_j^{sgn ε_ij})^{ε_ij}` (ε read off the current
    /// quiver), then the quiver mutates.
    pub fn mutate(&self, j: usize) -> Result<XSeed, XClusterError> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(XClusterError::Quiver(QuiverError::IndexOutOfRange(j, n)));
        }
        let yj = &self.vars[j - 1];
        let mut vars = Vec::with_capacity(n);
        for i in 1..=n {
            if i == j {
                vars.push(yj.inv()?);
                continue;
            }
            let e = self.quiver.eps(i, j);
            if e == 0 {
                vars.push(self.vars[i - 1].clone());
                continue;
            }
            let base = if e > 0 { yj.clone() } else { yj.inv()? };
            let factor = RatExpr::one().add_ref(&base).pow_i(e)?;
            vars.push(self.vars[i - 1].mul_ref(&factor));
        }
        Ok(XSeed {
            quiver: self.quiver.mutate(j)?,
            vars,
        })
    }

    /// Relabel vertices: the content of vertex i moves to vertex σ(i).
    pub fn permute(&self, sigma: &Perm) -> Result<XSeed, XClusterError> {
        let quiver = self.quiver.permute(sigma)?;
        let mut vars = vec![RatExpr::zero(); self.n()];
        for i in 1..=self.n() {
            vars[sigma.image(i) - 1] = self.vars[i - 1].clone();
        }
        Ok(XSeed { quiver, vars })
    }

    /// Inversion ς: every variable inverts and every arrow reverses.
    pub fn invert(&self) -> Result<XSeed, XClusterError> {
        let vars = self
            .vars
            .iter()
            .map(|v| v.inv())
            .collect::<Result<Vec<_>, SymError>>()?;
        Ok(XSeed {
            quiver: self.quiver.invert(),
            vars,
        })
    }

    /// Apply a group word, leftmost atom first.
    pub fn apply_word(&self, w: &GroupWord) -> Result<XSeed, XClusterError> {
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

    /// Exact equality of seeds: same quiver and the same rational function at
    /// every vertex.
    pub fn seed_equals(&self, other: &XSeed) -> bool {
        self.quiver == other.quiver
            && self
                .vars
                .iter()
                .zip(&other.vars)
                .all(|(a, b)| a.equals(b))
    }
}
