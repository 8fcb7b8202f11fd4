//! Classical test of whether an edge permutation `σ` lifts to a unital
//! τ-preserving *-endomorphism `φ` with `φ(S_e) = S_σ(e)`.

use super::{require_no_isolated, EdgePermutation, SymmetryError};
use crate::algebra::{tau, AlgebraElement, Coeff, LeavittAlgebra};
use crate::graph::{DirectedMultigraph, EdgeId, VertexId};
use num::{One, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_FACTORIAL_BUDGET: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    RangeConsistency,
    Ck2Image,
    ProjectionSystem,
    Ck1Image,
    TauPreservation,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::RangeConsistency => "range-consistency",
            CheckKind::Ck2Image => "ck2-image",
            CheckKind::ProjectionSystem => "projection-system",
            CheckKind::Ck1Image => "ck1-image",
            CheckKind::TauPreservation => "tau-preservation",
        })
    }
}

fn display_opt<T: fmt::Display, S: Serializer>(x: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub check: CheckKind,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    #[serde(serialize_with = "display_opt")]
    pub lhs: Option<AlgebraElement>,
    #[serde(serialize_with = "display_opt")]
    pub rhs: Option<AlgebraElement>,
    /// `[expected, found]` for a τ mismatch.
    pub tau: Option<[String; 2]>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationCertificate {
    #[serde(skip)]
    pub permutation: EdgePermutation,
    #[serde(rename = "permutation")]
    pub cycles: String,
    pub admissible: bool,
    pub failure: Option<CheckFailure>,
}

/// Generators and CK2 sums of one graph, shared across permutations.
struct Context {
    alg: LeavittAlgebra,
    s: Vec<AlgebraElement>,
    s_star: Vec<AlgebraElement>,
}

impl Context {
    fn new(g: &DirectedMultigraph) -> Self {
        let alg = LeavittAlgebra::new(Arc::new(g.clone()));
        let s = g.edges().map(|e| alg.s(e)).collect();
        let s_star = g.edges().map(|e| alg.s_star(e)).collect();
        Context { alg, s, s_star }
    }

    fn graph(&self) -> &DirectedMultigraph {
        self.alg.graph()
    }

    fn names<'a>(&self, edges: impl IntoIterator<Item = &'a EdgeId>) -> Vec<String> {
        edges
            .into_iter()
            .map(|&e| self.graph().edge_name(e).to_string())
            .collect()
    }

    fn vname(&self, v: VertexId) -> String {
        self.graph().vertex_name(v).to_string()
    }

    /// `S_σ(e)* S_σ(e)`.
    fn ck1_image(&self, sigma: &EdgePermutation, e: EdgeId) -> AlgebraElement {
        let t = sigma.apply(e).index();
        &self.s_star[t] * &self.s[t]
    }

    /// `Σ_{s(f)=v} S_σ(f) S_σ(f)*`.
    fn ck2_image(&self, sigma: &EdgePermutation, v: VertexId) -> AlgebraElement {
        self.graph()
            .out_edges(v)
            .iter()
            .fold(self.alg.zero(), |acc, &f| {
                let t = sigma.apply(f).index();
                acc + &self.s[t] * &self.s_star[t]
            })
    }

    fn check(&self, sigma: &EdgePermutation) -> Option<CheckFailure> {
        let g = self.graph();
        let fail = |check, vertices: Vec<String>, edges: Vec<String>, lhs, rhs, detail: String| {
            Some(CheckFailure {
                check,
                vertices,
                edges,
                lhs,
                rhs,
                tau: None,
                detail,
            })
        };

        // (1) and (2): the images of the vertex projections.
        let mut phi: Vec<AlgebraElement> = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let ins = g.in_edges(v);
            if let Some(&e0) = ins.first() {
                let target = self.ck1_image(sigma, e0);
                for &e in &ins[1..] {
                    let other = self.ck1_image(sigma, e);
                    if !target.equals(&other).expect("same graph") {
                        return fail(
                            CheckKind::RangeConsistency,
                            vec![self.vname(v)],
                            self.names(&[e0, e]),
                            Some(target),
                            Some(other),
                            format!(
                                "edges {} and {} end at {} but their images do not share a range",
                                g.edge_name(e0),
                                g.edge_name(e),
                                g.vertex_name(v)
                            ),
                        );
                    }
                }
                phi.push(target);
            } else {
                phi.push(self.ck2_image(sigma, v));
            }
        }

        // (3) vertex relation at every non-sink that also receives edges.
        for v in g.vertices() {
            if g.is_sink(v) || g.is_rigid_source(v) {
                continue;
            }
            let rhs = self.ck2_image(sigma, v);
            if !phi[v.index()].equals(&rhs).expect("same graph") {
                return fail(
                    CheckKind::Ck2Image,
                    vec![self.vname(v)],
                    self.names(g.out_edges(v)),
                    Some(phi[v.index()].clone()),
                    Some(rhs),
                    format!("vertex relation at {} is not preserved", g.vertex_name(v)),
                );
            }
        }

        // (4) the images form a partition of unity by projections.
        let zero = self.alg.zero();
        for u in g.vertices() {
            let pu = &phi[u.index()];
            let adj = pu.adjoint();
            if adj != *pu {
                return fail(
                    CheckKind::ProjectionSystem,
                    vec![self.vname(u)],
                    vec![],
                    Some(pu.clone()),
                    Some(adj),
                    format!("image of p_{} is not self-adjoint", g.vertex_name(u)),
                );
            }
            for v in g.vertices() {
                let pv = &phi[v.index()];
                let prod = pu * pv;
                let expected = if u == v { pv } else { &zero };
                if prod != *expected {
                    return fail(
                        CheckKind::ProjectionSystem,
                        vec![self.vname(u), self.vname(v)],
                        vec![],
                        Some(prod),
                        Some(expected.clone()),
                        format!(
                            "images of p_{} and p_{} are not orthogonal projections",
                            g.vertex_name(u),
                            g.vertex_name(v)
                        ),
                    );
                }
            }
        }
        let total = phi.iter().fold(self.alg.zero(), |acc, x| acc + x);
        let unit = self.alg.unit();
        if total != unit {
            return fail(
                CheckKind::ProjectionSystem,
                vec![],
                vec![],
                Some(total),
                Some(unit),
                "images of the vertex projections do not sum to the unit".into(),
            );
        }

        // (5) CK1 images.
        for e in g.edges() {
            let lhs = self.ck1_image(sigma, e);
            let rhs = &phi[g.range(e).index()];
            if lhs != *rhs {
                return fail(
                    CheckKind::Ck1Image,
                    vec![self.vname(g.range(e))],
                    self.names(&[e]),
                    Some(lhs),
                    Some(rhs.clone()),
                    format!("S*S relation for {} is not preserved", g.edge_name(e)),
                );
            }
        }

        // (6) τ on the spanning set {p_u : u sink} ∪ {S_e S_f* : r(e) = r(f)}.
        let tau_fail =
            |vertices: Vec<String>, edges: Vec<String>, x: AlgebraElement, expected: Coeff| {
                let found = match tau(&x) {
                    Ok(t) if t.value == expected => return None,
                    Ok(t) => t.value.to_string(),
                    Err(err) => err.to_string(),
                };
                Some(CheckFailure {
                    check: CheckKind::TauPreservation,
                    vertices,
                    edges,
                    lhs: Some(x),
                    rhs: None,
                    tau: Some([expected.to_string(), found]),
                    detail: "τ is not preserved".into(),
                })
            };
        for u in g.vertices().filter(|&u| g.is_sink(u)) {
            if let Some(f) = tau_fail(
                vec![self.vname(u)],
                vec![],
                phi[u.index()].clone(),
                Coeff::one(),
            ) {
                return Some(f);
            }
        }
        for e in g.edges() {
            for f in g.edges() {
                if g.range(e) != g.range(f) {
                    continue;
                }
                let (a, b) = (sigma.apply(e).index(), sigma.apply(f).index());
                let image = &self.s[a] * &self.s_star[b];
                let expected = if e == f { Coeff::one() } else { Coeff::zero() };
                if let Some(fl) = tau_fail(vec![], self.names(&[e, f]), image, expected) {
                    return Some(fl);
                }
            }
        }
        None
    }

    fn certificate(&self, sigma: EdgePermutation) -> PermutationCertificate {
        let failure = self.check(&sigma);
        PermutationCertificate {
            cycles: sigma.to_cycles(self.graph()),
            permutation: sigma,
            admissible: failure.is_none(),
            failure,
        }
    }
}

pub fn admissible_permutation(
    g: &DirectedMultigraph,
    sigma: &EdgePermutation,
) -> Result<PermutationCertificate, SymmetryError> {
    require_no_isolated(g)?;
    if sigma.len() != g.edge_count() {
        return Err(SymmetryError::InvalidPermutation(format!(
            "permutation of {} edges on a graph with {}",
            sigma.len(),
            g.edge_count()
        )));
    }
    Ok(Context::new(g).certificate(sigma.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermSymReport {
    pub maximal: bool,
    pub checked: usize,
    pub failures: Vec<PermutationCertificate>,
}

fn check_budget(g: &DirectedMultigraph, budget: usize) -> Result<(), SymmetryError> {
    require_no_isolated(g)?;
    if g.edge_count() > budget {
        return Err(SymmetryError::BudgetExceeded(format!(
            "{} edges exceed the factorial budget {budget}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Evaluates every permutation of the edge set and collects the failures.
pub fn maximal_perm_sym_bruteforce(
    g: &DirectedMultigraph,
    budget: usize,
) -> Result<PermSymReport, SymmetryError> {
    check_budget(g, budget)?;
    let ctx = Context::new(g);
    let mut checked = 0;
    let mut failures = Vec::new();
    for sigma in EdgePermutation::all(g.edge_count()) {
        checked += 1;
        let cert = ctx.certificate(sigma);
        if !cert.admissible {
            failures.push(cert);
        }
    }
    Ok(PermSymReport {
        maximal: failures.is_empty(),
        checked,
        failures,
    })
}

/// Same decision as [`maximal_perm_sym_bruteforce`], stopping at the first
/// inadmissible permutation.
pub fn has_maximal_perm_sym(g: &DirectedMultigraph, budget: usize) -> Result<bool, SymmetryError> {
    check_budget(g, budget)?;
    let ctx = Context::new(g);
    Ok(EdgePermutation::all(g.edge_count()).all(|sigma| ctx.check(&sigma).is_none()))
}
