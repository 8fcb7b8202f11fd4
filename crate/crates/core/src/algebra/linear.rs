use super::{AlgebraElement, AlgebraError, Coeff, PathMonomial};
use num::Zero;
use std::collections::BTreeMap;

/// Rank of a list of rational row vectors by exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut().filter(|row| !row[c].is_zero()) {
            let factor = &row[c] / &pivot_row[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * y;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Whether the normal-form coordinate vectors of `elems` are linearly
/// independent over the rationals.
pub fn independence_check(elems: &[AlgebraElement]) -> Result<bool, AlgebraError> {
    let first = elems.first().ok_or(AlgebraError::EmptyList)?;
    for x in &elems[1..] {
        first.check(x)?;
    }
    let mut index: BTreeMap<&PathMonomial, usize> = BTreeMap::new();
    for x in elems {
        for m in x.terms().keys() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let rows = elems
        .iter()
        .map(|x| {
            let mut row = vec![Coeff::zero(); index.len()];
            for (m, c) in x.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    Ok(rank(rows) == elems.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LeavittAlgebra;
    use crate::graph::{make_family, parse_graph, GraphFamily};

    #[test]
    fn rank_of_small_matrices() {
        let q = |x: i64| Coeff::from_integer(x.into());
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
        assert_eq!(rank(vec![vec![q(0), q(0)]]), 0);
    }

    #[test]
    fn paths_of_length_two_in_t_are_independent() {
        let a = LeavittAlgebra::new(parse_graph("v w ; e: v -> v ; g: v -> w").unwrap());
        let g = a.graph().clone();
        let mut elems = Vec::new();
        for e in g.edges() {
            for f in g.edges() {
                if g.range(e) == g.source(f) {
                    elems.push(a.s(e) * a.s(f));
                }
            }
        }
        assert_eq!(elems.len(), 2);
        assert!(independence_check(&elems).unwrap());
    }

    #[test]
    fn ck2_makes_a_dependent_pair() {
        let a = LeavittAlgebra::new(make_family(GraphFamily::Son, 3).unwrap());
        let g = a.graph().clone();
        let v = g.vertex("v").unwrap();
        let sum = g
            .out_edges(v)
            .iter()
            .fold(a.zero(), |acc, &f| acc + a.s_s_star(f, f));
        assert!(!independence_check(&[a.p(v), sum]).unwrap());
    }

    #[test]
    fn tau_basis_of_son_is_independent() {
        let a = LeavittAlgebra::new(make_family(GraphFamily::Son, 3).unwrap());
        let g = a.graph().clone();
        let mut elems: Vec<_> = g
            .vertices()
            .filter(|&u| g.is_sink(u))
            .map(|u| a.p(u))
            .collect();
        for e in g.edges() {
            for f in g.edges() {
                if g.range(e) == g.range(f) {
                    elems.push(a.s_s_star(e, f));
                }
            }
        }
        assert_eq!(elems.len(), 6);
        assert!(independence_check(&elems).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(independence_check(&[]), Err(AlgebraError::EmptyList));
        let a = LeavittAlgebra::new(make_family(GraphFamily::C2, 1).unwrap());
        let b = LeavittAlgebra::new(make_family(GraphFamily::P2, 1).unwrap());
        assert_eq!(
            independence_check(&[a.unit(), b.unit()]),
            Err(AlgebraError::GraphMismatch)
        );
    }
}
