//! Whether the symmetry group can be the universal group `A_{u^t}(F^Γ)`
//! of the matrix `F^Γ`, with symbolic witnesses when `F^Γ` is not scalar.
//!
//! The verdict is in the identical sense only: the fundamental
//! representations would have to match entrywise.

use super::{memberships, require_no_isolated, Family, SymmetryError};
use crate::algebra::{f_matrix, FMatrix, LeavittAlgebra};
use crate::graph::{DirectedMultigraph, EdgeId};
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessCase {
    /// `e` is not a loop and `r(e)` emits `g`.
    NonLoop,
    /// `e` is a loop and its vertex also emits the non-loop `g`.
    LoopIntoEdge,
    /// Every edge with a large entry is a loop at a vertex emitting only
    /// loops; some other non-loop edge still lies on a path of length two.
    EdgeInPath,
    /// No pair has a vanishing square and a nonzero product. The pair shown
    /// joins two entries of `F^Γ` that differ.
    NoPathProduct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutFWitness {
    pub case: WitnessCase,
    pub e: String,
    pub g: String,
    /// The edge whose square is tested.
    pub square_of: String,
    pub square_vanishes: bool,
    pub product_nonzero: bool,
    pub identities: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutFReport {
    pub f: FMatrix,
    pub scalar: bool,
    pub possible: bool,
    pub witness: Option<AutFWitness>,
    pub scope: &'static str,
}

fn choose(g: &DirectedMultigraph, f: &FMatrix) -> (WitnessCase, EdgeId, EdgeId, EdgeId) {
    let big = |e: EdgeId| f.diag[e.index()] >= 2;
    if let Some(e) = g.edges().find(|&e| big(e) && !g.is_loop(e)) {
        let next = g.out_edges(g.range(e))[0];
        return (WitnessCase::NonLoop, e, next, e);
    }
    for e in g.edges().filter(|&e| big(e)) {
        if let Some(&x) = g.out_edges(g.range(e)).iter().find(|&&x| !g.is_loop(x)) {
            return (WitnessCase::LoopIntoEdge, e, x, x);
        }
    }
    for x in g.edges().filter(|&x| !g.is_loop(x)) {
        if let Some(&y) = g.in_edges(g.source(x)).first() {
            return (WitnessCase::EdgeInPath, y, x, x);
        }
        if let Some(&z) = g.out_edges(g.range(x)).first() {
            return (WitnessCase::EdgeInPath, x, z, x);
        }
    }
    let e = g
        .edges()
        .find(|&e| big(e))
        .expect("a non-scalar matrix has an entry above one");
    let other = g
        .edges()
        .find(|&h| f.diag[h.index()] != f.diag[e.index()])
        .expect("a non-scalar matrix has two distinct entries");
    let square_of = if g.is_loop(other) { e } else { other };
    (WitnessCase::NoPathProduct, e, other, square_of)
}

fn witness(g: &DirectedMultigraph, f: &FMatrix) -> AutFWitness {
    let (case, e, h, sq) = choose(g, f);
    let alg = LeavittAlgebra::new(Arc::new(g.clone()));
    let square = alg.s(sq) * alg.s(sq);
    let product = alg.s(e) * alg.s(h);
    let name = |x: EdgeId| g.edge_name(x).to_string();
    let identities = vec![
        format!("S({0})S({0}) = {1}", name(sq), square),
        format!("S({})S({}) = {}", name(e), name(h), product),
    ];
    AutFWitness {
        case,
        e: name(e),
        g: name(h),
        square_of: name(sq),
        square_vanishes: square.is_zero(),
        product_nonzero: !product.is_zero(),
        identities,
    }
}

pub(crate) fn report_for(g: &DirectedMultigraph, family: Family, f: &FMatrix) -> AutFReport {
    let (possible, witness) = if f.scalar {
        (matches!(family, Family::Ln | Family::ClassS), None)
    } else {
        (false, Some(witness(g, f)))
    };
    AutFReport {
        f: f.clone(),
        scalar: f.scalar,
        possible,
        witness,
        scope: "identical",
    }
}

pub fn aut_f_report(g: &DirectedMultigraph) -> Result<AutFReport, SymmetryError> {
    require_no_isolated(g)?;
    let f = f_matrix(g)?;
    let family = memberships(g).first().copied().unwrap_or(Family::None);
    Ok(report_for(g, family, &f))
}
