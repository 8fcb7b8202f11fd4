use super::{DirectedMultigraph, GraphError};
use std::fmt;
use std::str::FromStr;

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// One vertex carrying `n` loops.
    Ln,
    /// `n` vertices, each carrying exactly one loop.
    DisjointLoops,
    /// The 2-cycle.
    C2,
    /// The path of length two.
    P2,
    /// One source with `n` edges to `n` distinct sinks.
    Son,
    /// `n` distinct sources each with one edge into a common vertex.
    IntoStar,
    /// Complete digraph on `n` vertices, both directions, no loops.
    Kn,
    /// `n` isolated vertices.
    KnComplement,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 8] = [
        GraphFamily::Ln,
        GraphFamily::DisjointLoops,
        GraphFamily::C2,
        GraphFamily::P2,
        GraphFamily::Son,
        GraphFamily::IntoStar,
        GraphFamily::Kn,
        GraphFamily::KnComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Ln => "Ln",
            GraphFamily::DisjointLoops => "DisjointLoops",
            GraphFamily::C2 => "C2",
            GraphFamily::P2 => "P2",
            GraphFamily::Son => "Son",
            GraphFamily::IntoStar => "IntoStar",
            GraphFamily::Kn => "Kn",
            GraphFamily::KnComplement => "KnComplement",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

fn edge(id: String, src: &str, dst: &str) -> (String, String, String) {
    (id, src.to_string(), dst.to_string())
}

fn pair_name(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// Constructs the labeled member of a family. `C2` and `P2` ignore `n`.
pub fn make_family(family: GraphFamily, n: usize) -> Result<DirectedMultigraph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(n));
    }
    let numbered = |prefix: &'static str| (1..=n).map(move |i| format!("{prefix}{i}"));
    let g = match family {
        GraphFamily::Ln => DirectedMultigraph::new(
            ["v1"],
            (1..=n).map(|i| edge(pair_name(i, i, n), "v1", "v1")),
        ),
        GraphFamily::DisjointLoops => DirectedMultigraph::new(
            numbered("v"),
            (1..=n).map(|i| {
                let v = format!("v{i}");
                edge(format!("e{i}"), &v, &v)
            }),
        ),
        GraphFamily::C2 => DirectedMultigraph::new(
            ["v1", "v2"],
            [
                edge("e12".into(), "v1", "v2"),
                edge("e21".into(), "v2", "v1"),
            ],
        ),
        GraphFamily::P2 => DirectedMultigraph::new(
            ["v1", "v2", "v3"],
            [
                edge("e12".into(), "v1", "v2"),
                edge("e23".into(), "v2", "v3"),
            ],
        ),
        GraphFamily::Son => DirectedMultigraph::new(
            std::iter::once("v".to_string()).chain(numbered("v")),
            (1..=n).map(|i| edge(format!("e{i}"), "v", &format!("v{i}"))),
        ),
        GraphFamily::IntoStar => DirectedMultigraph::new(
            numbered("w").chain(std::iter::once("v".to_string())),
            (1..=n).map(|i| edge(format!("e{i}"), &format!("w{i}"), "v")),
        ),
        GraphFamily::Kn => DirectedMultigraph::new(
            numbered("v"),
            (1..=n).flat_map(|i| {
                (1..=n)
                    .filter(move |&j| j != i)
                    .map(move |j| edge(pair_name(i, j, n), &format!("v{i}"), &format!("v{j}")))
            }),
        ),
        GraphFamily::KnComplement => DirectedMultigraph::new(numbered("v"), []),
    };
    Ok(g.expect("family constructions are well formed"))
}
