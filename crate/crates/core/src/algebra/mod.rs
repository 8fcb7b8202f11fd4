//! Exact arithmetic in the Leavitt path algebra of a finite graph, the
//! dense *-subalgebra of C*(Γ) spanned by the monomials `S_α S_β*`.
//!
//! Every [`AlgebraElement`] is held in normal form: a finite map from
//! monomials to nonzero rationals in which no monomial ends, on both sides,
//! in the special (least outgoing) edge of its last source vertex. These
//! monomials form a linear basis, so two elements are equal exactly when
//! their maps coincide.

mod linear;
mod monomial;
pub mod normal;
mod tau;

pub use linear::{independence_check, rank};
pub use monomial::{MonomialDisplay, PathMonomial};
pub use tau::{f_matrix, tau, FMatrix, TauValue};

use crate::graph::{DirectedMultigraph, EdgeId, Path, VertexId};
use num::{BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A raw (not necessarily normalized) term mapping.
pub type Terms = BTreeMap<PathMonomial, Coeff>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different graphs")]
    GraphMismatch,
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("monomial paths end at different vertices: {0}")]
    RangeMismatch(String),
    #[error("element is outside span{{p_u, S_e S_f*}}: offending monomial {0}")]
    NotInV2Plus(String),
    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<String>),
    #[error("empty element list")]
    EmptyList,
}

/// Generator factory bound to one graph.
#[derive(Debug, Clone)]
pub struct LeavittAlgebra {
    graph: Arc<DirectedMultigraph>,
}

impl LeavittAlgebra {
    pub fn new(graph: impl Into<Arc<DirectedMultigraph>>) -> Self {
        LeavittAlgebra {
            graph: graph.into(),
        }
    }

    pub fn graph(&self) -> &Arc<DirectedMultigraph> {
        &self.graph
    }

    fn monomial(&self, m: PathMonomial) -> AlgebraElement {
        AlgebraElement::from_raw(self.graph.clone(), [(m, Coeff::one())])
            .expect("generators have matching ranges")
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            graph: self.graph.clone(),
            terms: Terms::new(),
        }
    }

    pub fn scalar(&self, c: Coeff) -> AlgebraElement {
        self.unit().scale(&c)
    }

    /// `Σ_v p_v`.
    pub fn unit(&self) -> AlgebraElement {
        let terms = self
            .graph
            .vertices()
            .map(|v| (PathMonomial::vertex(v), Coeff::one()))
            .collect();
        AlgebraElement {
            graph: self.graph.clone(),
            terms,
        }
    }

    pub fn p(&self, v: VertexId) -> AlgebraElement {
        self.monomial(PathMonomial::vertex(v))
    }

    pub fn s(&self, e: EdgeId) -> AlgebraElement {
        let g = &self.graph;
        self.monomial(PathMonomial::new(
            Path::edge(g, e),
            Path::vertex(g.range(e)),
        ))
    }

    pub fn s_star(&self, e: EdgeId) -> AlgebraElement {
        let g = &self.graph;
        self.monomial(PathMonomial::new(
            Path::vertex(g.range(e)),
            Path::edge(g, e),
        ))
    }

    /// `S_γ` for a path `γ` (a vertex projection when empty).
    pub fn s_path(&self, path: &Path) -> AlgebraElement {
        self.monomial(PathMonomial::new(path.clone(), Path::vertex(path.range())))
    }

    /// `S_e S_f*`. Zero unless the ranges agree.
    pub fn s_s_star(&self, e: EdgeId, f: EdgeId) -> AlgebraElement {
        let g = &self.graph;
        match PathMonomial::try_new(Path::edge(g, e), Path::edge(g, f)) {
            Some(m) => self.monomial(m),
            None => self.zero(),
        }
    }

    pub fn s_named(&self, name: &str) -> Result<AlgebraElement, AlgebraError> {
        self.graph
            .edge(name)
            .map(|e| self.s(e))
            .ok_or_else(|| AlgebraError::UnknownEdge(name.to_string()))
    }

    pub fn s_star_named(&self, name: &str) -> Result<AlgebraElement, AlgebraError> {
        self.graph
            .edge(name)
            .map(|e| self.s_star(e))
            .ok_or_else(|| AlgebraError::UnknownEdge(name.to_string()))
    }

    pub fn p_named(&self, name: &str) -> Result<AlgebraElement, AlgebraError> {
        self.graph
            .vertex(name)
            .map(|v| self.p(v))
            .ok_or_else(|| AlgebraError::UnknownVertex(name.to_string()))
    }
}

/// An element of the Leavitt path algebra in normal form.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    graph: Arc<DirectedMultigraph>,
    terms: Terms,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

fn same_graph(a: &Arc<DirectedMultigraph>, b: &Arc<DirectedMultigraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    /// Normalizes a raw term mapping.
    pub fn from_raw<I>(graph: Arc<DirectedMultigraph>, raw: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (PathMonomial, Coeff)>,
    {
        let terms = normal::normal_form(&graph, raw)?;
        Ok(AlgebraElement { graph, terms })
    }

    pub fn graph(&self) -> &Arc<DirectedMultigraph> {
        &self.graph
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PathMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Longest path occurring in any monomial.
    pub fn max_path_len(&self) -> usize {
        self.terms
            .keys()
            .map(PathMonomial::max_len)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn check(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if same_graph(&self.graph, &other.graph) {
            Ok(())
        } else {
            Err(AlgebraError::GraphMismatch)
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            normal::accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(AlgebraElement {
            graph: self.graph.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.try_add(&other.neg_ref())
    }

    /// Bilinear extension of the monomial product, followed by
    /// normalization.
    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(m) = a.product(b) {
                    raw.push((m, x * y));
                }
            }
        }
        AlgebraElement::from_raw(self.graph.clone(), raw)
    }

    /// Decides equality in the algebra by comparing normal forms.
    pub fn equals(&self, other: &AlgebraElement) -> Result<bool, AlgebraError> {
        self.check(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn scale(&self, c: &Coeff) -> AlgebraElement {
        let terms = if c.is_zero() {
            Terms::new()
        } else {
            self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect()
        };
        AlgebraElement {
            graph: self.graph.clone(),
            terms,
        }
    }

    fn neg_ref(&self) -> AlgebraElement {
        AlgebraElement {
            graph: self.graph.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// The *-operation: `(αβ*) ↦ (βα*)`. Rational coefficients are fixed
    /// by conjugation.
    pub fn adjoint(&self) -> AlgebraElement {
        let raw = self.terms.iter().map(|(m, c)| (m.adjoint(), c.clone()));
        AlgebraElement::from_raw(self.graph.clone(), raw).expect("adjoint keeps ranges")
    }

    /// Level expansion of this element; see [`normal::expand_to_level`].
    pub fn expand_to_level(&self, level: usize) -> Terms {
        normal::expand_to_level(
            &self.graph,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
            level,
        )
    }

    /// Equality through level expansion only, independent of the normal
    /// form rewrite direction.
    pub fn equals_by_expansion(&self, other: &AlgebraElement) -> Result<bool, AlgebraError> {
        self.check(other)?;
        Ok(normal::equal_by_expansion(
            &self.graph,
            &self.terms,
            &other.terms,
        ))
    }

    pub fn tau(&self) -> Result<TauValue, AlgebraError> {
        tau(self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;

            /// Panics if the operands belong to different graphs.
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$try(rhs).expect("operands belong to different graphs")
            }
        }

        impl $trait<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;

            fn $method(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;

            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

/// Writes `terms` as `c · S(α)S*(β)` summands in monomial order.
pub fn format_terms(g: &DirectedMultigraph, terms: &Terms, f: &mut impl fmt::Write) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (m, c)) in terms.iter().enumerate() {
        let magnitude = c.abs();
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => f.write_str("-")?,
            (_, false) => f.write_str(" + ")?,
            (_, true) => f.write_str(" - ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude} · ")?;
        }
        write!(f, "{}", m.display(g))?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.graph, &self.terms, f)
    }
}
