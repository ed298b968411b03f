use std::fmt;

use crate::QuiverError;

/// Permutation of vertices 1..=n, stored as the image list:
/// `image[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm, QuiverError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(QuiverError::BadPermutation(images.clone(), n));
            }
            seen[v - 1] = true;
        }
        Ok(Perm(images))
    }

    /// Build from disjoint cycles, e.g. `[(1,2),(3,4)]` on n vertices.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, QuiverError> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > n || to == 0 || to > n {
                    return Err(QuiverError::IndexOutOfRange(from.max(to), n));
                }
                images[from - 1] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn preimage(&self, i: usize) -> usize {
        self.0.iter().position(|&v| v == i).expect("bijection") + 1
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm(images)
    }

    /// `self` then `other`: (other ∘ self)(i) = other(self(i)).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&v| other.image(v)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<(), QuiverError> {
        if self.0.len() != n {
            return Err(QuiverError::BadPermutation(self.0.clone(), n));
        }
        Ok(())
    }

    /// Disjoint cycle decomposition, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.image(start) == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.image(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One step of a group word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// Mutation μ_j at a vertex (involution).
    Mut(usize),
    /// Vertex relabeling.
    Perm(Perm),
    /// Inversion ς: ε ↦ −ε and y_i ↦ y_i^{-1}.
    Inv,
}

/// A word in mutations, permutations, and inversion. Atoms are stored in
/// application order: the first atom acts first. The paper-style composition
/// `(1,2)(3,4)∘μ1∘μ3` therefore reads right to left into
/// `[Mut(3), Mut(1), Perm((1,2)(3,4))]` (μ1, μ3 commute here, but the
/// general rule is rightmost-first).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupWord(Vec<Atom>);

impl GroupWord {
    pub fn new(atoms: Vec<Atom>) -> GroupWord {
        GroupWord(atoms)
    }

    pub fn identity() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut atoms = self.0.clone();
        atoms.extend(other.0.iter().cloned());
        GroupWord(atoms)
    }

    pub fn repeat(&self, k: usize) -> GroupWord {
        let mut atoms = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            atoms.extend(self.0.iter().cloned());
        }
        GroupWord(atoms)
    }

    /// Formal inverse: reverse the order; mutations and inversion are
    /// involutions, permutations invert.
    pub fn inverse(&self) -> GroupWord {
        GroupWord(
            self.0
                .iter()
                .rev()
                .map(|a| match a {
                    Atom::Mut(j) => Atom::Mut(*j),
                    Atom::Perm(p) => Atom::Perm(p.inverse()),
                    Atom::Inv => Atom::Inv,
                })
                .collect(),
        )
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        // Paper-style: rightmost acts first.
        for (i, atom) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "∘")?;
            }
            match atom {
                Atom::Mut(j) => write!(f, "μ{j}")?,
                Atom::Perm(p) => write!(f, "{p}")?,
                Atom::Inv => write!(f, "ς")?,
            }
        }
        Ok(())
    }
}
