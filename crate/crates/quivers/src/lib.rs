//! Quivers as antisymmetric exchange matrices: mutation, permutation,
//! inversion, brute-force isomorphism, and the built-in catalog of the
//! quivers attached to Newton polygons with a single interior point.
//!
//! Vertices are 1-based throughout the public API, matching the labels used
//! in the catalog and in group words like `(1,2)(3,4)∘μ1∘μ3`.

mod catalog;
mod iso;
mod json;
mod word;

pub use catalog::{catalog, catalog_labels, CatalogEntry};
pub use iso::quiver_isomorphic;
pub use word::{Atom, GroupWord, Perm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("exchange matrix is not antisymmetric at ({0},{1})")]
    NotAntisymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),
    #[error("quiver too large for brute-force isomorphism (n = {0} > 11)")]
    TooLarge(usize),
    #[error("permutation {0:?} is not a bijection on 1..={1}")]
    BadPermutation(Vec<usize>, usize),
    #[error("mutation at frozen vertex {0}")]
    FrozenVertexMutation(usize),
    #[error("invalid quiver encoding: {0}")]
    Encoding(String),
    #[error("permutation size {0} does not match quiver size {1}")]
    SizeMismatch(usize, usize),
}

/// Antisymmetric integer exchange matrix ε.
///
/// `eps[i][j] > 0` means `eps[i][j]` arrows from vertex i+1 to vertex j+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    eps: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new(eps: Vec<Vec<i64>>) -> Result<Self, QuiverError> {
        let n = eps.len();
        for row in &eps {
            if row.len() != n {
                return Err(QuiverError::NotSquare);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if eps[i][j] != -eps[j][i] {
                    return Err(QuiverError::NotAntisymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(Quiver { eps })
    }

    /// Build from a list of weighted arrows `(from, to, multiplicity)`,
    /// 1-based vertices. Opposite arrows cancel.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, i64)]) -> Result<Self, QuiverError> {
        let mut eps = vec![vec![0i64; n]; n];
        for &(a, b, w) in arrows {
            if a == 0 || a > n {
                return Err(QuiverError::IndexOutOfRange(a, n));
            }
            if b == 0 || b > n {
                return Err(QuiverError::IndexOutOfRange(b, n));
            }
            eps[a - 1][b - 1] += w;
            eps[b - 1][a - 1] -= w;
        }
        Ok(Quiver { eps })
    }

    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// ε_{ij} with 1-based indices.
    pub fn eps(&self, i: usize, j: usize) -> i64 {
        self.eps[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.eps
    }

    /// Matrix mutation at vertex j (1-based):
    /// ε'_{ik} = −ε_{ik} if i = j or k = j, else
    /// ε'_{ik} = ε_{ik} + (ε_{ij}|ε_{jk}| + ε_{jk}|ε_{ij}|)/2.
    pub fn mutate(&self, j: usize) -> Result<Quiver, QuiverError> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(QuiverError::IndexOutOfRange(j, n));
        }
        let jj = j - 1;
        let mut out = self.eps.clone();
        for i in 0..n {
            for k in 0..n {
                if i == jj || k == jj {
                    out[i][k] = -self.eps[i][k];
                } else {
                    let a = self.eps[i][jj];
                    let b = self.eps[jj][k];
                    out[i][k] = self.eps[i][k] + (a * b.abs() + b * a.abs()) / 2;
                }
            }
        }
        Ok(Quiver { eps: out })
    }

    /// Relabel vertices: the content of vertex i moves to vertex σ(i), so
    /// ε'_{σ(i)σ(j)} = ε_{ij}.
    pub fn permute(&self, sigma: &Perm) -> Result<Quiver, QuiverError> {
        let n = self.n();
        sigma.check_len(n)?;
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[sigma.image(i + 1) - 1][sigma.image(j + 1) - 1] = self.eps[i][j];
            }
        }
        Ok(Quiver { eps: out })
    }

    /// Inversion ς: reverses the orientation of every edge.
    pub fn invert(&self) -> Quiver {
        Quiver {
            eps: self
                .eps
                .iter()
                .map(|row| row.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    /// Apply a group word, leftmost atom first.
    pub fn apply_word(&self, w: &GroupWord) -> Result<Quiver, QuiverError> {
        let mut q = self.clone();
        for atom in w.atoms() {
            q = match atom {
                Atom::Mut(j) => q.mutate(*j)?,
                Atom::Perm(p) => q.permute(p)?,
                Atom::Inv => q.invert(),
            };
        }
        Ok(q)
    }

    /// Weighted out-degree minus in-degree per vertex (row sums of ε).
    pub fn row_sums(&self) -> Vec<i64> {
        self.eps.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Quiver extended by frozen rows (coefficient directions) and, optionally,
/// a compatible skew form Λ on all vertices (mutable + frozen).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtQuiver {
    pub base: Quiver,
    /// `frozen[r][j]`: exchange entry b_{I j} from frozen vertex I = n+r+1
    /// into unfrozen vertex j+1.
    pub frozen: Vec<Vec<i64>>,
    /// Optional (n+f)×(n+f) integer matrix Λ with τ_I τ_J = p^{Λ_IJ/2} τ_J τ_I.
    pub lambda: Option<Vec<Vec<i64>>>,
}

impl ExtQuiver {
    pub fn new(
        base: Quiver,
        frozen: Vec<Vec<i64>>,
        lambda: Option<Vec<Vec<i64>>>,
    ) -> Result<Self, QuiverError> {
        let n = base.n();
        for row in &frozen {
            if row.len() != n {
                return Err(QuiverError::NotSquare);
            }
        }
        if let Some(l) = &lambda {
            let total = n + frozen.len();
            if l.len() != total || l.iter().any(|r| r.len() != total) {
                return Err(QuiverError::NotSquare);
            }
        }
        Ok(ExtQuiver {
            base,
            frozen,
            lambda,
        })
    }

    pub fn n_unfrozen(&self) -> usize {
        self.base.n()
    }

    pub fn n_total(&self) -> usize {
        self.base.n() + self.frozen.len()
    }

    /// Full exchange entry b_{I j}: I ranges over all vertices (1-based,
    /// frozen after unfrozen), j over unfrozen only.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        let n = self.base.n();
        if i <= n {
            self.base.eps(i, j)
        } else {
            self.frozen[i - n - 1][j - 1]
        }
    }

    /// Relabel the unfrozen vertices: the base quiver permutes and the
    /// frozen-row columns follow; frozen vertices keep their labels.
    pub fn permute(&self, sigma: &Perm) -> Result<ExtQuiver, QuiverError> {
        let n = self.base.n();
        if sigma.n() != n {
            return Err(QuiverError::SizeMismatch(sigma.n(), n));
        }
        let base = self.base.permute(sigma)?;
        let frozen = self
            .frozen
            .iter()
            .map(|row| {
                let mut out = vec![0; n];
                for (j, &v) in row.iter().enumerate() {
                    out[sigma.image(j + 1) - 1] = v;
                }
                out
            })
            .collect();
        let lambda = self.lambda.as_ref().map(|l| {
            let total = self.n_total();
            let img = |i: usize| if i < n { sigma.image(i + 1) - 1 } else { i };
            let mut out = vec![vec![0; total]; total];
            for (i, row) in l.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    out[img(i)][img(j)] = v;
                }
            }
            out
        });
        Ok(ExtQuiver {
            base,
            frozen,
            lambda,
        })
    }

    /// Mutation at an unfrozen vertex: the square block mutates as usual and
    /// the frozen rows follow the same exchange rule.
    pub fn mutate(&self, j: usize) -> Result<ExtQuiver, QuiverError> {
        let n = self.base.n();
        if j == 0 || j > self.n_total() {
            return Err(QuiverError::IndexOutOfRange(j, self.n_total()));
        }
        if j > n {
            return Err(QuiverError::FrozenVertexMutation(j));
        }
        let base = self.base.mutate(j)?;
        let jj = j - 1;
        let mut frozen = self.frozen.clone();
        for row in frozen.iter_mut() {
            let bij = row[jj];
            for (k, cell) in row.iter_mut().enumerate() {
                if k == jj {
                    *cell = -bij;
                } else {
                    let ejk = self.base.eps(jj + 1, k + 1);
                    *cell += (bij * ejk.abs() + ejk * bij.abs()) / 2;
                }
            }
        }
        // Λ is carried by the quantum layer via its own mutation rule; the
        // catalog Λ describes the *initial* seed only.
        Ok(ExtQuiver {
            base,
            frozen,
            lambda: self.lambda.clone(),
        })
    }
}
