use super::{classify, has_maximal_perm_sym, GroupLabel, SymmetryError, DEFAULT_FACTORIAL_BUDGET};
use crate::graph::{enumerate_graphs, DirectedMultigraph, EnumerationBudget};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub graph: String,
    pub bruteforce: bool,
    pub family: String,
    pub group: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub v_max: usize,
    pub e_max: usize,
    pub graphs: usize,
    pub maximal: usize,
    pub connected_maximal: usize,
    pub families: BTreeMap<String, usize>,
    /// Secondary memberships of single-edge graphs.
    pub coincidences: BTreeMap<String, usize>,
    pub discrepancies: Vec<Discrepancy>,
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

struct Outcome {
    family: String,
    coincidences: Vec<String>,
    maximal: bool,
    connected: bool,
    discrepancy: Option<Discrepancy>,
}

fn examine(g: &DirectedMultigraph) -> Outcome {
    let verdict = classify(g).expect("enumerated graphs have no isolated vertices");
    let brute =
        has_maximal_perm_sym(g, usize::MAX).expect("enumerated graphs have no isolated vertices");
    let predicted = verdict.group.is_maximal();
    let mut reason = None;
    if brute != predicted {
        reason = Some("brute force and classification disagree".to_string());
    } else if predicted && verdict.connected && verdict.n >= 2 {
        if let GroupLabel::HnInfPlus(_) = verdict.group {
            reason = Some("connected graph classified with Hinf+(n)".to_string());
        }
        if verdict.group == GroupLabel::H2InfPlus && verdict.n != 2 {
            reason = Some("Hinf+(2) away from two edges".to_string());
        }
    }
    Outcome {
        family: verdict.family.name().to_string(),
        coincidences: verdict
            .coincidences
            .iter()
            .map(|c| c.family.name().to_string())
            .collect(),
        maximal: predicted,
        connected: verdict.connected,
        discrepancy: reason.map(|reason| Discrepancy {
            graph: g.to_text(),
            bruteforce: brute,
            family: verdict.family.name().to_string(),
            group: verdict.group.to_string(),
            reason,
        }),
    }
}

/// Compares [`classify`] with brute force on every labeled graph with at
/// most `v_max` vertices, at most `e_max` edges and no isolated vertices.
pub fn verify_theorem(
    v_max: usize,
    e_max: usize,
    budget: EnumerationBudget,
) -> Result<TheoremReport, SymmetryError> {
    if e_max > DEFAULT_FACTORIAL_BUDGET.max(budget.max_edges) {
        return Err(SymmetryError::BudgetExceeded(format!(
            "{e_max} edges exceed the factorial budget"
        )));
    }
    let graphs: Vec<DirectedMultigraph> = enumerate_graphs(v_max, e_max, true, budget)?.collect();
    let outcomes: Vec<Outcome> = graphs.par_iter().map(examine).collect();
    let mut report = TheoremReport {
        v_max,
        e_max,
        graphs: outcomes.len(),
        maximal: 0,
        connected_maximal: 0,
        families: BTreeMap::new(),
        coincidences: BTreeMap::new(),
        discrepancies: Vec::new(),
    };
    for o in outcomes {
        *report.families.entry(o.family).or_default() += 1;
        for c in o.coincidences {
            *report.coincidences.entry(c).or_default() += 1;
        }
        if o.maximal {
            report.maximal += 1;
            if o.connected {
                report.connected_maximal += 1;
            }
        }
        report.discrepancies.extend(o.discrepancy);
    }
    Ok(report)
}
