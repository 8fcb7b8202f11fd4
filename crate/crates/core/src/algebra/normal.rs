//! Normal form and level expansion of raw term mappings.
//!
//! The rewrite rule is the vertex relation read right to left at the
//! special edge `d` of `w = s(d)`:
//!
//! ```text
//! (α'd)(β'd)*  ->  α'β'* - Σ_{f ∈ s⁻¹(w), f ≠ d} (α'f)(β'f)*
//! ```
//!
//! The first term is strictly shorter and the others end in a non-special
//! edge, so rewriting terminates. The only redex in a monomial is its
//! common last edge, so the result does not depend on the order in which
//! redexes are contracted.

use super::{AlgebraError, Coeff, PathMonomial, Terms};
use crate::graph::{DirectedMultigraph, EdgeId};
use num::Zero;
use std::collections::btree_map::Entry;

/// The special edge at which `m` can be rewritten, if any.
pub fn redex(g: &DirectedMultigraph, m: &PathMonomial) -> Option<EdgeId> {
    let d = m.alpha.last_edge()?;
    if m.beta.last_edge()? != d {
        return None;
    }
    (g.special_edge(g.source(d)) == Some(d)).then_some(d)
}

fn contract(g: &DirectedMultigraph, m: &PathMonomial, d: EdgeId) -> Vec<(PathMonomial, bool)> {
    let w = g.source(d);
    let alpha = m.alpha.truncated(w);
    let beta = m.beta.truncated(w);
    let mut out = Vec::with_capacity(g.outdegree(w));
    for &f in g.out_edges(w) {
        if f != d {
            out.push((
                PathMonomial::new(alpha.extended(g, f), beta.extended(g, f)),
                false,
            ));
        }
    }
    out.push((PathMonomial::new(alpha, beta), true));
    out
}

pub(crate) fn accumulate(terms: &mut Terms, m: PathMonomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

pub fn check_ranges<'a>(
    g: &DirectedMultigraph,
    monomials: impl IntoIterator<Item = &'a PathMonomial>,
) -> Result<(), AlgebraError> {
    for m in monomials {
        if m.alpha.range() != m.beta.range() {
            return Err(AlgebraError::RangeMismatch(format!(
                "{} / {}",
                g.display_path(&m.alpha),
                g.display_path(&m.beta)
            )));
        }
    }
    Ok(())
}

/// Rewrites every monomial to the normal basis, combining like terms.
pub fn normal_form<I>(g: &DirectedMultigraph, raw: I) -> Result<Terms, AlgebraError>
where
    I: IntoIterator<Item = (PathMonomial, Coeff)>,
{
    let mut stack: Vec<(PathMonomial, Coeff)> = raw.into_iter().collect();
    check_ranges(g, stack.iter().map(|(m, _)| m))?;
    let mut out = Terms::new();
    while let Some((m, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        match redex(g, &m) {
            None => accumulate(&mut out, m, c),
            Some(d) => {
                for (next, positive) in contract(g, &m, d) {
                    let coeff = if positive { c.clone() } else { -c.clone() };
                    stack.push((next, coeff));
                }
            }
        }
    }
    Ok(out)
}

/// Normal form where the caller picks which redex to contract next.
///
/// `pick(n)` receives the number of reducible monomials in the current
/// combined mapping and returns the index (in monomial order) of the one
/// to contract. Used to exercise order independence.
pub fn normal_form_by<I, F>(
    g: &DirectedMultigraph,
    raw: I,
    mut pick: F,
) -> Result<Terms, AlgebraError>
where
    I: IntoIterator<Item = (PathMonomial, Coeff)>,
    F: FnMut(usize) -> usize,
{
    let mut current = Terms::new();
    for (m, c) in raw {
        accumulate(&mut current, m, c);
    }
    check_ranges(g, current.keys())?;
    loop {
        let redexes: Vec<(PathMonomial, EdgeId)> = current
            .keys()
            .filter_map(|m| redex(g, m).map(|d| (m.clone(), d)))
            .collect();
        if redexes.is_empty() {
            return Ok(current);
        }
        let (m, d) = &redexes[pick(redexes.len()) % redexes.len()];
        let c = current.remove(m).expect("redex is present");
        for (next, positive) in contract(g, m, *d) {
            let coeff = if positive { c.clone() } else { -c.clone() };
            accumulate(&mut current, next, coeff);
        }
    }
}

/// Replaces every monomial whose range is not a sink and whose longer path
/// is shorter than `level` by `Σ_{s(f)=r} (αf)(βf)*`, until no such
/// monomial remains. Like terms are combined; the result is not normalized.
pub fn expand_to_level<I>(g: &DirectedMultigraph, raw: I, level: usize) -> Terms
where
    I: IntoIterator<Item = (PathMonomial, Coeff)>,
{
    let mut stack: Vec<(PathMonomial, Coeff)> = raw.into_iter().collect();
    let mut out = Terms::new();
    while let Some((m, c)) = stack.pop() {
        let r = m.range();
        if g.is_sink(r) || m.max_len() >= level {
            accumulate(&mut out, m, c);
            continue;
        }
        for &f in g.out_edges(r) {
            stack.push((
                PathMonomial::new(m.alpha.extended(g, f), m.beta.extended(g, f)),
                c.clone(),
            ));
        }
    }
    out
}

/// Equality decided by expansion alone: both sides are expanded to the
/// longest path length occurring in either, and the difference must vanish.
pub fn equal_by_expansion(g: &DirectedMultigraph, a: &Terms, b: &Terms) -> bool {
    let level = a
        .keys()
        .chain(b.keys())
        .map(PathMonomial::max_len)
        .max()
        .unwrap_or(0);
    let diff = a
        .iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .chain(b.iter().map(|(m, c)| (m.clone(), -c.clone())));
    expand_to_level(g, diff, level).is_empty()
}
