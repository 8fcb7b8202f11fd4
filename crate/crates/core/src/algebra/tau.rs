use super::{AlgebraElement, AlgebraError, Coeff};
use crate::graph::DirectedMultigraph;
use num::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Value of the functional `τ` on `span{p_u, S_e S_f*}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauValue {
    pub value: Coeff,
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Linear extension of `τ(p_u) = 1` at sinks, `τ(p_v) = |s⁻¹(v)|`
/// elsewhere, and `τ(S_e S_f*) = δ_ef`.
pub fn tau(a: &AlgebraElement) -> Result<TauValue, AlgebraError> {
    let g = a.graph();
    let mut value = Coeff::zero();
    for (m, c) in a.terms() {
        let weight = match (m.alpha.len(), m.beta.len()) {
            (0, 0) => {
                let v = m.range();
                if g.is_sink(v) {
                    Coeff::one()
                } else {
                    Coeff::from_integer(g.outdegree(v).into())
                }
            }
            (1, 1) => {
                if m.alpha == m.beta {
                    Coeff::one()
                } else {
                    Coeff::zero()
                }
            }
            _ => return Err(AlgebraError::NotInV2Plus(m.display(g).to_string())),
        };
        value += c * weight;
    }
    Ok(TauValue { value })
}

/// The diagonal matrix `F^Γ` indexed by edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FMatrix {
    pub diag: Vec<u64>,
    pub scalar: bool,
}

pub fn f_matrix(g: &DirectedMultigraph) -> Result<FMatrix, AlgebraError> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(AlgebraError::IsolatedVertices(
            isolated
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect(),
        ));
    }
    let diag: Vec<u64> = g
        .edges()
        .map(|e| g.outdegree(g.range(e)).max(1) as u64)
        .collect();
    let scalar = diag.windows(2).all(|w| w[0] == w[1]);
    Ok(FMatrix { diag, scalar })
}
