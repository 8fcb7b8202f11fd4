use super::{require_no_isolated, SymmetryError};
use crate::graph::{DirectedMultigraph, EdgeId, VertexId};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ObstructionKind {
    /// A loop together with an edge between distinct vertices.
    #[serde(rename = "loop-with-non-loop")]
    LoopWithNonLoop,
    /// Only loops, with some vertex carrying two of them and another vertex
    /// present.
    #[serde(rename = "uneven-loops")]
    UnevenLoops,
    /// Three or more edges and a vertex that is neither a sink nor a rigid
    /// source.
    #[serde(rename = "intermediate-vertex")]
    IntermediateVertex,
    /// A sink of indegree `m ≥ 2` and more than `m` edges.
    #[serde(rename = "shared-sink")]
    SharedSink,
    /// Two edges forming a path of length two that is not the 2-cycle.
    #[serde(rename = "P2-shaped")]
    P2Shaped,
}

impl ObstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ObstructionKind::LoopWithNonLoop => "loop-with-non-loop",
            ObstructionKind::UnevenLoops => "uneven-loops",
            ObstructionKind::IntermediateVertex => "intermediate-vertex",
            ObstructionKind::SharedSink => "shared-sink",
            ObstructionKind::P2Shaped => "P2-shaped",
        }
    }
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a graph lacks maximal permutational symmetry, with the
/// transposition the argument evaluates on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub transposition: [String; 2],
    #[serde(skip)]
    pub refuting: (EdgeId, EdgeId),
}

impl Obstruction {
    fn new(
        g: &DirectedMultigraph,
        kind: ObstructionKind,
        vertices: &[VertexId],
        edges: &[EdgeId],
        (a, b): (EdgeId, EdgeId),
    ) -> Self {
        Obstruction {
            kind,
            vertices: vertices
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect(),
            edges: edges.iter().map(|&e| g.edge_name(e).to_string()).collect(),
            transposition: [g.edge_name(a).to_string(), g.edge_name(b).to_string()],
            refuting: (a, b),
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (vertices {:?}, edges {:?}, transposition ({} {}))",
            self.kind, self.vertices, self.edges, self.transposition[0], self.transposition[1]
        )
    }
}

fn loop_with_non_loop(g: &DirectedMultigraph) -> Option<Obstruction> {
    let l = g.edges().find(|&e| g.is_loop(e))?;
    let e = g.edges().find(|&e| !g.is_loop(e))?;
    Some(Obstruction::new(
        g,
        ObstructionKind::LoopWithNonLoop,
        &[g.source(l), g.source(e), g.range(e)],
        &[l, e],
        (l, e),
    ))
}

fn uneven_loops(g: &DirectedMultigraph) -> Option<Obstruction> {
    if !g.edges().all(|e| g.is_loop(e)) || g.vertex_count() < 2 {
        return None;
    }
    let v = g.vertices().find(|&v| g.outdegree(v) >= 2)?;
    let w = g.vertices().find(|&w| w != v && g.outdegree(w) >= 1)?;
    let (e1, e2) = (g.out_edges(v)[0], g.out_edges(v)[1]);
    let f1 = g.out_edges(w)[0];
    Some(Obstruction::new(
        g,
        ObstructionKind::UnevenLoops,
        &[v, w],
        &[e1, e2, f1],
        (e2, f1),
    ))
}

fn intermediate_vertex(g: &DirectedMultigraph) -> Option<Obstruction> {
    if g.edge_count() < 3 {
        return None;
    }
    let v = g
        .vertices()
        .find(|&v| !g.is_sink(v) && !g.is_rigid_source(v))?;
    let ins = g.in_edges(v);
    let outs = g.out_edges(v);
    let (p, q) = (ins.len(), outs.len());
    let swap = match (p > 1, q > 1) {
        (true, false) | (true, true) => (ins[1], outs[0]),
        (false, true) => (ins[0], outs[1]),
        (false, false) => {
            let other = g.edges().find(|&e| e != ins[0] && e != outs[0])?;
            (ins[0], other)
        }
    };
    let edges: Vec<EdgeId> = ins.iter().chain(outs).copied().collect();
    Some(Obstruction::new(
        g,
        ObstructionKind::IntermediateVertex,
        &[v],
        &edges,
        swap,
    ))
}

fn shared_sink(g: &DirectedMultigraph) -> Option<Obstruction> {
    let n = g.edge_count();
    let v = g
        .vertices()
        .find(|&v| g.is_sink(v) && g.indegree(v) >= 2 && n > g.indegree(v))?;
    let e1 = g.in_edges(v)[0];
    let e = g.edges().find(|&e| g.range(e) != v)?;
    Some(Obstruction::new(
        g,
        ObstructionKind::SharedSink,
        &[v],
        g.in_edges(v),
        (e1, e),
    ))
}

fn p2_shaped(g: &DirectedMultigraph) -> Option<Obstruction> {
    if g.edge_count() != 2 {
        return None;
    }
    let v = g
        .vertices()
        .find(|&v| !g.is_sink(v) && !g.is_rigid_source(v))?;
    let (e, f) = (EdgeId(0), EdgeId(1));
    Some(Obstruction::new(
        g,
        ObstructionKind::P2Shaped,
        &[v],
        &[e, f],
        (e, f),
    ))
}

/// The first applicable obstruction in the order loop-with-non-loop,
/// uneven-loops, intermediate-vertex, shared-sink, P2-shaped.
pub fn obstructions(g: &DirectedMultigraph) -> Result<Option<Obstruction>, SymmetryError> {
    require_no_isolated(g)?;
    if g.has_loops() {
        return Ok(loop_with_non_loop(g).or_else(|| uneven_loops(g)));
    }
    let c2_like = super::is_c2(g);
    Ok(intermediate_vertex(g)
        .or_else(|| shared_sink(g))
        .or_else(|| if c2_like { None } else { p2_shaped(g) }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, parse_graph, GraphFamily};

    fn obs(text: &str) -> Option<Obstruction> {
        obstructions(&parse_graph(text).unwrap()).unwrap()
    }

    #[test]
    fn loop_into_vertex() {
        let o = obs("v w ; g: v -> v ; e: w -> v").unwrap();
        assert_eq!(o.kind, ObstructionKind::LoopWithNonLoop);
        assert_eq!(o.transposition, ["g".to_string(), "e".to_string()]);
    }

    #[test]
    fn intermediate_vertex_example() {
        let o = obs("v1 v2 v3 v4 ; e1: v1 -> v2 ; e2: v2 -> v3 ; e3: v2 -> v4").unwrap();
        assert_eq!(o.kind, ObstructionKind::IntermediateVertex);
        assert_eq!(o.vertices, ["v2"]);
        // p = 1, q = 2, so the swap is (e1 f2).
        assert_eq!(o.transposition, ["e1".to_string(), "e3".to_string()]);
    }

    #[test]
    fn shared_sink_example() {
        let o = obs("a b v w x ; e1: a -> v ; e2: b -> v ; e3: w -> x").unwrap();
        assert_eq!(o.kind, ObstructionKind::SharedSink);
        assert_eq!(o.vertices, ["v"]);
        assert_eq!(o.edges, ["e1", "e2"]);
        assert_eq!(o.transposition, ["e1".to_string(), "e3".to_string()]);
    }

    #[test]
    fn p2_is_p2_shaped_and_c2_has_none() {
        let o = obstructions(&make_family(GraphFamily::P2, 1).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(o.kind, ObstructionKind::P2Shaped);
        assert_eq!(
            obstructions(&make_family(GraphFamily::C2, 1).unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn uneven_loops_example() {
        let o = obs("v w ; a: v -> v ; b: v -> v ; c: w -> w").unwrap();
        assert_eq!(o.kind, ObstructionKind::UnevenLoops);
        assert_eq!(o.transposition, ["b".to_string(), "c".to_string()]);
    }

    #[test]
    fn families_have_no_obstruction() {
        for (f, n) in [
            (GraphFamily::Ln, 3),
            (GraphFamily::DisjointLoops, 3),
            (GraphFamily::Son, 3),
            (GraphFamily::IntoStar, 3),
        ] {
            assert_eq!(obstructions(&make_family(f, n).unwrap()).unwrap(), None);
        }
    }
}
