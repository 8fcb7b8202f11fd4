//! Automorphism groups of simple digraphs, used to check that only the
//! complete and the empty digraph on `n` vertices have every vertex
//! permutation as a symmetry.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub const AUTOMORPHISM_GUARD: usize = 8;
pub const PROP31_GUARD: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QautError {
    #[error("{0} vertices exceed the limit {1}")]
    GuardExceeded(usize, usize),
    #[error("adjacency matrix is not square, 0/1 with zero diagonal")]
    NotSimple,
}

/// Loop-free digraph without multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleDigraph {
    n: usize,
    adj: Vec<bool>,
}

impl SimpleDigraph {
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self, QautError> {
        let n = rows.len();
        let mut adj = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QautError::NotSimple);
            }
            for (j, &x) in row.iter().enumerate() {
                if x > 1 || (i == j && x != 0) {
                    return Err(QautError::NotSimple);
                }
                adj.push(x == 1);
            }
        }
        Ok(SimpleDigraph { n, adj })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, QautError> {
        let mut adj = vec![false; n * n];
        for &(i, j) in arcs {
            if i == j || i >= n || j >= n {
                return Err(QautError::NotSimple);
            }
            adj[i * n + j] = true;
        }
        Ok(SimpleDigraph { n, adj })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n * n).map(|k| k / n != k % n).collect();
        SimpleDigraph { n, adj }
    }

    pub fn empty(n: usize) -> Self {
        SimpleDigraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// The digraph whose off-diagonal entries, in row-major order, are the
    /// bits of `code` from least significant up.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut adj = vec![false; n * n];
        let mut bit = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj[i * n + j] = code >> bit & 1 == 1;
                    bit += 1;
                }
            }
        }
        SimpleDigraph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.has_arc(i, j))).collect())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.has_arc(i, j)))
    }

    pub fn is_empty(&self) -> bool {
        !self.adj.iter().any(|&x| x)
    }

    /// `π(Γ)`: arc `π(i) → π(j)` for every arc `i → j`.
    pub fn relabeled(&self, pi: &[usize]) -> Self {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                if self.has_arc(i, j) {
                    adj[pi[i] * n + pi[j]] = true;
                }
            }
        }
        SimpleDigraph { n, adj }
    }

    fn preserved_by(&self, pi: &[usize]) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.has_arc(pi[i], pi[j]) == self.has_arc(i, j)))
    }

    fn guard(&self, limit: usize) -> Result<(), QautError> {
        if self.n > limit {
            Err(QautError::GuardExceeded(self.n, limit))
        } else {
            Ok(())
        }
    }

    /// Number of vertex permutations preserving adjacency.
    pub fn automorphism_count(&self) -> Result<u64, QautError> {
        self.guard(AUTOMORPHISM_GUARD)?;
        Ok((0..self.n)
            .permutations(self.n)
            .filter(|pi| self.preserved_by(pi))
            .count() as u64)
    }

    /// Whether every permutation is an automorphism, that is, whether the
    /// count equals `n!`. Stops at the first non-automorphism.
    pub fn fully_symmetric(&self) -> Result<bool, QautError> {
        self.guard(AUTOMORPHISM_GUARD)?;
        Ok((0..self.n)
            .permutations(self.n)
            .all(|pi| self.preserved_by(&pi)))
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop31Report {
    pub n: usize,
    pub digraphs: u64,
    pub full_symmetry: usize,
    pub full_symmetry_graphs: Vec<Vec<Vec<u8>>>,
    pub discrepancies: Vec<Vec<Vec<u8>>>,
}

impl Prop31Report {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Enumerates every simple digraph on `n` labeled vertices and checks that
/// full symmetry occurs exactly for the complete and the empty digraph.
pub fn verify_prop31(n: usize) -> Result<Prop31Report, QautError> {
    if n > PROP31_GUARD {
        return Err(QautError::GuardExceeded(n, PROP31_GUARD));
    }
    let bits = n * n.saturating_sub(1);
    let total = 1u64 << bits;
    // (digraph, fully symmetric, complete or empty), kept when either holds
    let hits: Vec<(SimpleDigraph, bool, bool)> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let g = SimpleDigraph::from_code(n, code);
            let full = g.fully_symmetric().expect("within guard");
            let expected = g.is_complete() || g.is_empty();
            (full || expected).then_some((g, full, expected))
        })
        .collect();
    let full_symmetry_graphs: Vec<_> = hits.iter().filter(|h| h.1).map(|h| h.0.matrix()).collect();
    let discrepancies = hits
        .iter()
        .filter(|h| h.1 != h.2)
        .map(|h| h.0.matrix())
        .collect();
    Ok(Prop31Report {
        n,
        digraphs: total,
        full_symmetry: full_symmetry_graphs.len(),
        full_symmetry_graphs,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> SimpleDigraph {
        SimpleDigraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn predicates() {
        assert!(SimpleDigraph::complete(4).is_complete());
        assert!(SimpleDigraph::empty(4).is_empty());
        assert!(!cycle3().is_complete() && !cycle3().is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(SimpleDigraph::complete(4).automorphism_count().unwrap(), 24);
        assert_eq!(SimpleDigraph::empty(3).automorphism_count().unwrap(), 6);
        assert_eq!(cycle3().automorphism_count().unwrap(), 3);
        assert_eq!(
            SimpleDigraph::empty(9).automorphism_count(),
            Err(QautError::GuardExceeded(9, 8))
        );
    }

    #[test]
    fn small_exhaustive_runs() {
        let r = verify_prop31(3).unwrap();
        assert_eq!((r.digraphs, r.full_symmetry), (64, 2));
        let r = verify_prop31(1).unwrap();
        assert_eq!((r.digraphs, r.full_symmetry), (1, 1));
        assert!(r.ok());
        assert!(verify_prop31(6).is_err());
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            SimpleDigraph::from_matrix(&[vec![1]]),
            Err(QautError::NotSimple)
        );
        let g = SimpleDigraph::from_matrix(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(g.automorphism_count().unwrap(), 1);
    }
}
