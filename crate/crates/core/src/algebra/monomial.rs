use crate::graph::{DirectedMultigraph, Path, VertexId};
use std::cmp::Ordering;
use std::fmt;

/// The monomial `S_α S_β*` for paths with a common range. The pair of
/// empty paths at `v` is the vertex projection `p_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathMonomial {
    pub alpha: Path,
    pub beta: Path,
}

impl PathMonomial {
    /// Panics in debug builds if the ranges differ; see [`try_new`](Self::try_new).
    pub fn new(alpha: Path, beta: Path) -> Self {
        debug_assert_eq!(alpha.range(), beta.range());
        PathMonomial { alpha, beta }
    }

    pub fn try_new(alpha: Path, beta: Path) -> Option<Self> {
        (alpha.range() == beta.range()).then_some(PathMonomial { alpha, beta })
    }

    pub fn vertex(v: VertexId) -> Self {
        PathMonomial {
            alpha: Path::vertex(v),
            beta: Path::vertex(v),
        }
    }

    pub fn range(&self) -> VertexId {
        self.alpha.range()
    }

    pub fn is_vertex(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.alpha.len().max(self.beta.len())
    }

    pub fn adjoint(&self) -> Self {
        PathMonomial {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// `(αβ*)(γδ*)`: `(αγ')δ*` when `γ = βγ'`, `α(δβ')*` when `β = γβ'`,
    /// otherwise zero.
    pub fn product(&self, rhs: &PathMonomial) -> Option<PathMonomial> {
        if let Some(rest) = rhs.alpha.strip_prefix(&self.beta) {
            return Some(PathMonomial {
                alpha: self.alpha.concat(&rest),
                beta: rhs.beta.clone(),
            });
        }
        if let Some(rest) = self.beta.strip_prefix(&rhs.alpha) {
            return Some(PathMonomial {
                alpha: self.alpha.clone(),
                beta: rhs.beta.concat(&rest),
            });
        }
        None
    }

    pub fn display<'a>(&'a self, graph: &'a DirectedMultigraph) -> MonomialDisplay<'a> {
        MonomialDisplay {
            graph,
            monomial: self,
        }
    }
}

impl Ord for PathMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.alpha.len() + self.beta.len())
            .cmp(&(other.alpha.len() + other.beta.len()))
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for PathMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    graph: &'a DirectedMultigraph,
    monomial: &'a PathMonomial,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let PathMonomial { alpha, beta } = self.monomial;
        let g = self.graph;
        if alpha.is_empty() && beta.is_empty() {
            return write!(f, "P({})", g.vertex_name(alpha.source()));
        }
        if !alpha.is_empty() {
            write!(f, "S({})", g.display_path(alpha))?;
        }
        if !beta.is_empty() {
            write!(f, "S*({})", g.display_path(beta))?;
        }
        Ok(())
    }
}
