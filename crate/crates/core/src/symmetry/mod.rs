//! Which graph algebras carry maximal permutational symmetry, that is,
//! which admit every permutation of the edge set as a τ-preserving
//! *-endomorphism, and the name of their quantum symmetry group.
//!
//! [`classify`] is the structural decision procedure; it is checked
//! against [`maximal_perm_sym_bruteforce`], which evaluates every edge
//! permutation symbolically.

mod admissible;
mod autf;
mod obstruction;
mod permutation;
mod verify;

pub use admissible::{
    admissible_permutation, has_maximal_perm_sym, maximal_perm_sym_bruteforce, CheckFailure,
    CheckKind, PermSymReport, PermutationCertificate, DEFAULT_FACTORIAL_BUDGET,
};
pub use autf::{aut_f_report, AutFReport, AutFWitness, WitnessCase};
pub use obstruction::{obstructions, Obstruction, ObstructionKind};
pub use permutation::EdgePermutation;
pub use verify::{verify_theorem, Discrepancy, TheoremReport};

use crate::algebra::{f_matrix, AlgebraError};
use crate::graph::{DirectedMultigraph, GraphError};
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<String>),
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<AlgebraError> for SymmetryError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::IsolatedVertices(v) => SymmetryError::IsolatedVertices(v),
            other => unreachable!("algebra error on a well-formed graph: {other}"),
        }
    }
}

pub(crate) fn require_no_isolated(g: &DirectedMultigraph) -> Result<(), SymmetryError> {
    let isolated = g.isolated_vertices();
    if isolated.is_empty() {
        Ok(())
    } else {
        Err(SymmetryError::IsolatedVertices(
            isolated
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect(),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    Ln,
    DisjointLoops,
    C2,
    ClassS,
    #[serde(rename = "ClassI1_Son")]
    ClassI1Son,
    #[serde(rename = "ClassI1_Other")]
    ClassI1Other,
    None,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ln => "Ln",
            Family::DisjointLoops => "DisjointLoops",
            Family::C2 => "C2",
            Family::ClassS => "ClassS",
            Family::ClassI1Son => "ClassI1_Son",
            Family::ClassI1Other => "ClassI1_Other",
            Family::None => "None",
        }
    }

    /// Group attached to a family with `n` edges.
    pub fn group(self, n: usize) -> GroupLabel {
        match self {
            Family::Ln | Family::ClassS => GroupLabel::UnPlus(n),
            Family::DisjointLoops => GroupLabel::HnInfPlus(n),
            Family::C2 => GroupLabel::H2InfPlus,
            Family::ClassI1Son | Family::ClassI1Other => GroupLabel::SHnInfPlus(n),
            Family::None => GroupLabel::NotMaximal,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Quantum symmetry group label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupLabel {
    UnPlus(usize),
    HnInfPlus(usize),
    SHnInfPlus(usize),
    H2InfPlus,
    NotMaximal,
}

impl GroupLabel {
    pub fn is_maximal(self) -> bool {
        self != GroupLabel::NotMaximal
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::UnPlus(n) => write!(f, "U+({n})"),
            GroupLabel::HnInfPlus(n) => write!(f, "Hinf+({n})"),
            GroupLabel::SHnInfPlus(n) => write!(f, "SHinf+({n})"),
            GroupLabel::H2InfPlus => f.write_str("Hinf+(2)"),
            GroupLabel::NotMaximal => f.write_str("NotMaximal"),
        }
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Another classification family the graph also belongs to, possible only when
/// `n = 1` where all the groups agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coincidence {
    pub family: Family,
    pub group: GroupLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub family: Family,
    pub group: GroupLabel,
    pub n: usize,
    pub connected: bool,
    pub f_diag: Vec<u64>,
    pub f_scalar: bool,
    pub obstruction: Option<Obstruction>,
    pub autf_possible: bool,
    pub witnesses: Vec<AutFWitness>,
    pub coincidences: Vec<Coincidence>,
}

/// No loops and a common range vertex.
pub fn in_class_s(g: &DirectedMultigraph) -> Result<bool, SymmetryError> {
    require_no_isolated(g)?;
    let mut ranges = g.edges().map(|e| g.range(e));
    let Some(v) = ranges.next() else {
        return Ok(false);
    };
    Ok(!g.has_loops() && ranges.all(|w| w == v))
}

/// No loops and every range is a sink of indegree one.
pub fn in_class_i1(g: &DirectedMultigraph) -> Result<bool, SymmetryError> {
    require_no_isolated(g)?;
    Ok(g.edge_count() > 0
        && !g.has_loops()
        && g.edges().all(|e| {
            let v = g.range(e);
            g.is_sink(v) && g.indegree(v) == 1
        }))
}

fn is_c2(g: &DirectedMultigraph) -> bool {
    if g.vertex_count() != 2 || g.edge_count() != 2 {
        return false;
    }
    let mut es = g.edges();
    let (a, b) = (es.next().unwrap(), es.next().unwrap());
    !g.is_loop(a) && g.source(a) == g.range(b) && g.source(b) == g.range(a)
}

fn is_disjoint_loops(g: &DirectedMultigraph) -> bool {
    g.edges().all(|e| g.is_loop(e)) && g.vertices().all(|v| g.outdegree(v) == 1)
}

/// Every classification family the graph belongs to, in priority order.
fn memberships(g: &DirectedMultigraph) -> Vec<Family> {
    let mut out = Vec::new();
    if g.has_loops() {
        if g.vertex_count() == 1 {
            out.push(Family::Ln);
        }
        if is_disjoint_loops(g) {
            out.push(Family::DisjointLoops);
        }
        return out;
    }
    if is_c2(g) {
        out.push(Family::C2);
    }
    if in_class_s(g).unwrap_or(false) {
        out.push(Family::ClassS);
    }
    if in_class_i1(g).unwrap_or(false) {
        let mut sources = g.edges().map(|e| g.source(e));
        let first = sources.next();
        if sources.all(|s| Some(s) == first) {
            out.push(Family::ClassI1Son);
        } else {
            out.push(Family::ClassI1Other);
        }
    }
    out
}

pub fn classify(g: &DirectedMultigraph) -> Result<ClassificationVerdict, SymmetryError> {
    require_no_isolated(g)?;
    if g.edge_count() == 0 {
        return Err(SymmetryError::NoEdges);
    }
    let n = g.edge_count();
    let found = memberships(g);
    let family = found.first().copied().unwrap_or(Family::None);
    let obstruction = if family == Family::None {
        Some(obstructions(g)?.expect("every graph outside the families has an obstruction"))
    } else {
        None
    };
    let coincidences = found[found.len().min(1)..]
        .iter()
        .map(|&f| Coincidence {
            family: f,
            group: f.group(n),
        })
        .collect();
    let f = f_matrix(g)?;
    let report = autf::report_for(g, family, &f);
    Ok(ClassificationVerdict {
        family,
        group: family.group(n),
        n,
        connected: g.is_connected(),
        f_diag: f.diag,
        f_scalar: f.scalar,
        obstruction,
        autf_possible: report.possible,
        witnesses: report.witness.into_iter().collect(),
        coincidences,
    })
}
