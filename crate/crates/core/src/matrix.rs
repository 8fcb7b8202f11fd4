//! Path-space representation of the algebra of a finite acyclic graph.
//!
//! The representation space has one basis vector per path ending at a
//! sink. `S_e` prepends `e` to paths starting at `r(e)`, and `p_v` keeps
//! the paths starting at `v`.

use crate::algebra::{AlgebraElement, Coeff};
use crate::expr::Interpretation;
use crate::graph::{DirectedMultigraph, EdgeId, Path, VertexId};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("graph has a directed cycle")]
    Cyclic,
    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<String>),
    #[error("relation check failed: {0}")]
    RelationFailure(String),
    #[error("element belongs to a different graph")]
    GraphMismatch,
}

/// Dense square-or-rectangular matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Coeff::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Coeff) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&Coeff, &Coeff) -> Coeff) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.matmul(rhs)
    }
}

/// Generator matrices of the path-space representation.
#[derive(Debug, Clone)]
pub struct FiniteDimRep {
    graph: Arc<DirectedMultigraph>,
    basis: Vec<Path>,
    s: Vec<RationalMatrix>,
    p: Vec<RationalMatrix>,
}

impl FiniteDimRep {
    pub fn graph(&self) -> &Arc<DirectedMultigraph> {
        &self.graph
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn s_matrix(&self, e: EdgeId) -> &RationalMatrix {
        &self.s[e.index()]
    }

    pub fn p_matrix(&self, v: VertexId) -> &RationalMatrix {
        &self.p[v.index()]
    }

    fn path_matrix(&self, path: &Path) -> RationalMatrix {
        path.edges()
            .iter()
            .fold(self.p_matrix(path.source()).clone(), |acc, &e| {
                acc.matmul(self.s_matrix(e))
            })
    }

    fn verify(&self) -> Result<(), MatrixError> {
        let g = &self.graph;
        let fail = |what: String| Err(MatrixError::RelationFailure(what));
        let n = self.dim();
        let mut total = RationalMatrix::zeros(n, n);
        for u in g.vertices() {
            let pu = self.p_matrix(u);
            if pu.transpose() != *pu {
                return fail(format!("p_{} is not self-adjoint", g.vertex_name(u)));
            }
            for v in g.vertices() {
                let prod = pu * self.p_matrix(v);
                let expected = if u == v {
                    pu.clone()
                } else {
                    RationalMatrix::zeros(n, n)
                };
                if prod != expected {
                    return fail(format!(
                        "p_{} p_{} is not {}",
                        g.vertex_name(u),
                        g.vertex_name(v),
                        if u == v { "idempotent" } else { "zero" }
                    ));
                }
            }
            total = &total + pu;
            if !g.is_sink(u) {
                let sum = g
                    .out_edges(u)
                    .iter()
                    .fold(RationalMatrix::zeros(n, n), |acc, &f| {
                        let sf = self.s_matrix(f);
                        &acc + &(sf * &sf.transpose())
                    });
                if sum != *pu {
                    return fail(format!("vertex relation at {}", g.vertex_name(u)));
                }
            }
        }
        if total != RationalMatrix::identity(n) {
            return fail("projections do not sum to the identity".into());
        }
        for e in g.edges() {
            let se = self.s_matrix(e);
            if &se.transpose() * se != *self.p_matrix(g.range(e)) {
                return fail(format!(
                    "S_{}* S_{} is not p_r(e)",
                    g.edge_name(e),
                    g.edge_name(e)
                ));
            }
        }
        Ok(())
    }

    /// Image of a normal-form element, built from generator products.
    pub fn matrix_of(&self, a: &AlgebraElement) -> Result<RationalMatrix, MatrixError> {
        if **a.graph() != *self.graph {
            return Err(MatrixError::GraphMismatch);
        }
        let n = self.dim();
        let mut out = RationalMatrix::zeros(n, n);
        for (m, c) in a.terms() {
            let term = &self.path_matrix(&m.alpha) * &self.path_matrix(&m.beta).transpose();
            out = &out + &term.scale(c);
        }
        Ok(out)
    }

    pub fn oracle_equals(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<bool, MatrixError> {
        Ok(self.matrix_of(a)? == self.matrix_of(b)?)
    }
}

/// Builds the representation and checks the graph relations exactly.
pub fn represent(graph: impl Into<Arc<DirectedMultigraph>>) -> Result<FiniteDimRep, MatrixError> {
    let graph = graph.into();
    let g = &*graph;
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(MatrixError::IsolatedVertices(
            isolated
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect(),
        ));
    }
    if !g.is_acyclic() {
        return Err(MatrixError::Cyclic);
    }
    let basis: Vec<Path> = g
        .enumerate_paths(g.vertex_count())
        .into_iter()
        .filter(|p| g.is_sink(p.range()))
        .collect();
    let n = basis.len();
    let position = |p: &Path| basis.iter().position(|q| q == p);
    let mut s = vec![RationalMatrix::zeros(n, n); g.edge_count()];
    let mut p = vec![RationalMatrix::zeros(n, n); g.vertex_count()];
    for (j, gamma) in basis.iter().enumerate() {
        p[gamma.source().index()].set(j, j, Coeff::one());
        for &e in g.in_edges(gamma.source()) {
            let target = Path::edge(g, e).concat(gamma);
            let i = position(&target).expect("prefixing keeps the range a sink");
            s[e.index()].set(i, j, Coeff::one());
        }
    }
    let rep = FiniteDimRep { graph, basis, s, p };
    rep.verify()?;
    Ok(rep)
}

impl Interpretation for FiniteDimRep {
    type Value = RationalMatrix;

    fn scalar(&self, c: &Coeff) -> RationalMatrix {
        RationalMatrix::identity(self.dim()).scale(c)
    }
    fn s(&self, e: EdgeId) -> RationalMatrix {
        self.s_matrix(e).clone()
    }
    fn s_star(&self, e: EdgeId) -> RationalMatrix {
        self.s_matrix(e).transpose()
    }
    fn p(&self, v: VertexId) -> RationalMatrix {
        self.p_matrix(v).clone()
    }
    fn add(&self, a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
        a + b
    }
    fn mul(&self, a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
        a * b
    }
    fn sub(&self, a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
        a - b
    }
}
