use super::SymmetryError;
use crate::graph::{DirectedMultigraph, EdgeId};
use std::fmt::Write as _;

/// A bijection on the edge set, stored as `image[e] = σ(e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePermutation {
    image: Vec<EdgeId>,
}

fn invalid(msg: impl Into<String>) -> SymmetryError {
    SymmetryError::InvalidPermutation(msg.into())
}

impl EdgePermutation {
    pub fn identity(n: usize) -> Self {
        EdgePermutation {
            image: (0..n as u32).map(EdgeId).collect(),
        }
    }

    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn from_images(image: Vec<EdgeId>) -> Result<Self, SymmetryError> {
        let mut seen = vec![false; image.len()];
        for &e in &image {
            match seen.get_mut(e.index()) {
                Some(slot) if !*slot => *slot = true,
                Some(_) => return Err(invalid(format!("edge index {} appears twice", e.index()))),
                None => return Err(invalid(format!("edge index {} out of range", e.index()))),
            }
        }
        Ok(EdgePermutation { image })
    }

    pub fn transposition(n: usize, a: EdgeId, b: EdgeId) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a.index(), b.index());
        p
    }

    /// Parses cycle notation such as `(e12 e21)(e3)` or `()`, or a one-line
    /// list of images in edge order such as `e21 e12`.
    pub fn parse(g: &DirectedMultigraph, text: &str) -> Result<Self, SymmetryError> {
        let lookup = |name: &str| {
            g.edge(name)
                .ok_or_else(|| invalid(format!("unknown edge `{name}`")))
        };
        let text = text.trim();
        if text.starts_with('(') {
            let mut image: Vec<EdgeId> = g.edges().collect();
            let mut used = vec![false; g.edge_count()];
            let mut rest = text;
            while !rest.is_empty() {
                let Some(body) = rest.strip_prefix('(') else {
                    return Err(invalid(format!("expected `(` at `{rest}`")));
                };
                let Some(close) = body.find(')') else {
                    return Err(invalid("unbalanced parenthesis"));
                };
                let inner = &body[..close];
                if inner.contains('(') {
                    return Err(invalid("nested parenthesis"));
                }
                let cycle = inner
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(lookup)
                    .collect::<Result<Vec<_>, _>>()?;
                for &e in &cycle {
                    if std::mem::replace(&mut used[e.index()], true) {
                        return Err(invalid(format!("edge `{}` repeated", g.edge_name(e))));
                    }
                }
                for (i, &e) in cycle.iter().enumerate() {
                    image[e.index()] = cycle[(i + 1) % cycle.len()];
                }
                rest = body[close + 1..].trim_start();
            }
            Ok(EdgePermutation { image })
        } else {
            let inner = text
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .unwrap_or(text);
            let image = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(lookup)
                .collect::<Result<Vec<_>, _>>()?;
            if image.len() != g.edge_count() {
                return Err(invalid(format!(
                    "expected {} images, got {}",
                    g.edge_count(),
                    image.len()
                )));
            }
            Self::from_images(image)
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, e: EdgeId) -> EdgeId {
        self.image[e.index()]
    }

    pub fn images(&self) -> &[EdgeId] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, e)| e.index() == i)
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &EdgePermutation) -> EdgePermutation {
        assert_eq!(self.len(), other.len(), "permutations of different sets");
        EdgePermutation {
            image: other.image.iter().map(|&e| self.apply(e)).collect(),
        }
    }

    pub fn inverse(&self) -> EdgePermutation {
        let mut image = vec![EdgeId(0); self.len()];
        for (i, &e) in self.image.iter().enumerate() {
            image[e.index()] = EdgeId(i as u32);
        }
        EdgePermutation { image }
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = EdgePermutation> {
        use itertools::Itertools;
        (0..n as u32)
            .map(EdgeId)
            .permutations(n)
            .map(|image| EdgePermutation { image })
    }

    /// Cycle notation with fixed points omitted.
    pub fn to_cycles(&self, g: &DirectedMultigraph) -> String {
        let mut seen = vec![false; self.len()];
        let mut out = String::new();
        for start in 0..self.len() {
            if seen[start] || self.image[start].index() == start {
                continue;
            }
            out.push('(');
            let mut e = start;
            loop {
                seen[e] = true;
                if !out.ends_with('(') {
                    out.push(' ');
                }
                let _ = write!(out, "{}", g.edge_name(EdgeId(e as u32)));
                e = self.image[e].index();
                if e == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphFamily};

    #[test]
    fn parse_forms_agree() {
        let g = make_family(GraphFamily::Son, 3).unwrap();
        let a = EdgePermutation::parse(&g, "(e1 e2 e3)").unwrap();
        let b = EdgePermutation::parse(&g, "e2 e3 e1").unwrap();
        let c = EdgePermutation::parse(&g, "[e2, e3, e1]").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_cycles(&g), "(e1 e2 e3)");
        assert_eq!(a.compose(&a.inverse()), EdgePermutation::identity(3));
        assert!(EdgePermutation::parse(&g, "()").unwrap().is_identity());
        assert_eq!(
            EdgePermutation::parse(&g, "(e1 e3)(e2)")
                .unwrap()
                .to_cycles(&g),
            "(e1 e3)"
        );
    }

    #[test]
    fn malformed_input() {
        let g = make_family(GraphFamily::C2, 1).unwrap();
        for bad in [
            "(e12 e21",
            "(e12 x)",
            "(e12)(e12)",
            "e12",
            "e12 e12",
            "(e12 (e21))",
            "(e12) e21",
        ] {
            assert!(
                matches!(
                    EdgePermutation::parse(&g, bad),
                    Err(SymmetryError::InvalidPermutation(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn enumerates_factorial_many() {
        assert_eq!(EdgePermutation::all(4).count(), 24);
        assert_eq!(EdgePermutation::all(0).count(), 1);
    }
}
