//! Exhaustive labeled enumeration of small multigraphs.
//!
//! A graph with `nv` vertices and `ne` edges is one assignment of an
//! ordered `(source, range)` pair to each edge, so there are `(nv²)^ne` of
//! them. Assignments are visited in odometer order with the first edge as
//! the most significant digit.

use super::{DirectedMultigraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_vertices: 5,
            max_edges: 5,
        }
    }
}

impl EnumerationBudget {
    pub fn check(&self, v_max: usize, e_max: usize) -> Result<(), GraphError> {
        if v_max > self.max_vertices || e_max > self.max_edges {
            return Err(GraphError::BudgetExceeded(format!(
                "requested {v_max} vertices / {e_max} edges, limit is {} / {}",
                self.max_vertices, self.max_edges
            )));
        }
        Ok(())
    }
}

/// Stream over all labeled graphs with sizes in the given list.
pub struct GraphEnumerator {
    sizes: Vec<(usize, usize)>,
    current: usize,
    digits: Vec<usize>,
    exhausted_size: bool,
    no_isolated: bool,
}

impl GraphEnumerator {
    fn new(sizes: Vec<(usize, usize)>, no_isolated: bool) -> Self {
        let digits = sizes
            .first()
            .map(|&(_, ne)| vec![0; ne])
            .unwrap_or_default();
        GraphEnumerator {
            sizes,
            current: 0,
            digits,
            exhausted_size: false,
            no_isolated,
        }
    }

    fn advance_size(&mut self) {
        self.current += 1;
        self.exhausted_size = false;
        if let Some(&(_, ne)) = self.sizes.get(self.current) {
            self.digits = vec![0; ne];
        }
    }

    fn next_raw(&mut self) -> Option<DirectedMultigraph> {
        loop {
            let &(nv, _) = self.sizes.get(self.current)?;
            if self.exhausted_size {
                self.advance_size();
                continue;
            }
            let pairs: Vec<(usize, usize)> =
                self.digits.iter().map(|&d| (d / nv, d % nv)).collect();
            let g = DirectedMultigraph::from_index_pairs(nv, &pairs);
            // odometer increment
            let base = nv * nv;
            let mut i = self.digits.len();
            loop {
                if i == 0 {
                    self.exhausted_size = true;
                    break;
                }
                i -= 1;
                self.digits[i] += 1;
                if self.digits[i] < base {
                    break;
                }
                self.digits[i] = 0;
            }
            return Some(g);
        }
    }
}

impl Iterator for GraphEnumerator {
    type Item = DirectedMultigraph;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let g = self.next_raw()?;
            if !self.no_isolated || g.isolated_vertices().is_empty() {
                return Some(g);
            }
        }
    }
}

/// Every labeled multigraph with `1 ≤ |V| ≤ v_max` and `1 ≤ |E| ≤ e_max`,
/// ordered by vertex count, then edge count, then assignment.
pub fn enumerate_graphs(
    v_max: usize,
    e_max: usize,
    no_isolated: bool,
    budget: EnumerationBudget,
) -> Result<GraphEnumerator, GraphError> {
    budget.check(v_max, e_max)?;
    let sizes = (1..=v_max)
        .flat_map(|nv| (1..=e_max).map(move |ne| (nv, ne)))
        .collect();
    Ok(GraphEnumerator::new(sizes, no_isolated))
}

/// Every labeled multigraph with exactly `nv` vertices and `ne` edges.
pub fn enumerate_graphs_exact(
    nv: usize,
    ne: usize,
    no_isolated: bool,
    budget: EnumerationBudget,
) -> Result<GraphEnumerator, GraphError> {
    budget.check(nv, ne)?;
    let sizes = if nv == 0 { Vec::new() } else { vec![(nv, ne)] };
    Ok(GraphEnumerator::new(sizes, no_isolated))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(nv: usize, ne: usize, flag: bool) -> Vec<DirectedMultigraph> {
        enumerate_graphs_exact(nv, ne, flag, EnumerationBudget::default())
            .unwrap()
            .collect()
    }

    #[test]
    fn single_loop() {
        let gs = exact(1, 1, true);
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].to_text(), "v1 ; e1: v1 -> v1");
    }

    #[test]
    fn two_vertices_one_edge_without_isolated() {
        let texts: Vec<String> = exact(2, 1, true).iter().map(|g| g.to_text()).collect();
        assert_eq!(texts, ["v1 v2 ; e1: v1 -> v2", "v1 v2 ; e1: v2 -> v1"]);
    }

    #[test]
    fn two_vertices_two_edges_all() {
        assert_eq!(exact(2, 2, false).len(), 16);
    }

    #[test]
    fn union_sizes_follow_the_power_formula() {
        for (v_max, e_max) in [(1usize, 1usize), (2, 2), (3, 2), (2, 3)] {
            let expected: usize = (1..=v_max)
                .flat_map(|nv| (1..=e_max).map(move |ne| (nv * nv).pow(ne as u32)))
                .sum();
            let got = enumerate_graphs(v_max, e_max, false, EnumerationBudget::default())
                .unwrap()
                .count();
            assert_eq!(got, expected);
        }
        // (1,1,true) and the exact (2,1,true) case together.
        assert_eq!(
            enumerate_graphs(2, 1, true, EnumerationBudget::default())
                .unwrap()
                .count(),
            3
        );
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            enumerate_graphs(6, 2, true, EnumerationBudget::default()),
            Err(GraphError::BudgetExceeded(_))
        ));
        assert!(enumerate_graphs(
            6,
            2,
            true,
            EnumerationBudget {
                max_vertices: 6,
                max_edges: 6
            }
        )
        .is_ok());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<_> = exact(3, 2, true);
        let b: Vec<_> = exact(3, 2, true);
        assert_eq!(a, b);
    }
}
