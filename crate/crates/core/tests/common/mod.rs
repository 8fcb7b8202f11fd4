//! Random graphs, expressions and raw term lists shared by the integration
//! tests. Everything is driven by a seeded ChaCha generator so failures
//! replay from the printed seed.

#![allow(dead_code)]

use graphsym::algebra::{AlgebraElement, Coeff, LeavittAlgebra, PathMonomial};
use graphsym::expr::Expr;
use graphsym::graph::{make_family, parse_graph, DirectedMultigraph, GraphFamily};
use num::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// Loop `e` at `v` and an edge `g: v -> w`.
pub fn t_graph() -> DirectedMultigraph {
    parse_graph("v w ; e: v -> v ; g: v -> w").unwrap()
}

/// Loop `g` at `v` and an edge `e: w -> v`.
pub fn t_prime() -> DirectedMultigraph {
    parse_graph("v w ; g: v -> v ; e: w -> v").unwrap()
}

/// The cyclic graphs used for expansion-oracle checks.
pub fn cyclic_graphs() -> Vec<(&'static str, DirectedMultigraph)> {
    vec![
        ("L1", make_family(GraphFamily::Ln, 1).unwrap()),
        ("L2", make_family(GraphFamily::Ln, 2).unwrap()),
        ("L3", make_family(GraphFamily::Ln, 3).unwrap()),
        ("C2", make_family(GraphFamily::C2, 1).unwrap()),
        ("T", t_graph()),
        ("T'", t_prime()),
    ]
}

/// A handful of acyclic shapes with branching, merging and parallel edges.
pub fn acyclic_examples() -> Vec<DirectedMultigraph> {
    [
        "v1 v2 v3 ; e12: v1 -> v2 ; e23: v2 -> v3",
        "v1 v2 v3 v4 ; e1: v1 -> v2 ; e2: v2 -> v3 ; e3: v2 -> v4",
        "u v ; a: u -> v ; b: u -> v",
        "a b c ; x: a -> c ; y: b -> c ; z: a -> b",
        "v v1 v2 v3 ; e1: v -> v1 ; e2: v -> v2 ; e3: v -> v3",
    ]
    .iter()
    .map(|t| parse_graph(t).unwrap())
    .collect()
}

/// Acyclic multigraph with 1 to `max_edges` edges and no isolated vertices.
pub fn random_acyclic(rng: &mut TestRng, max_edges: usize) -> DirectedMultigraph {
    let nv = rng.gen_range(2..=5);
    let ne = rng.gen_range(1..=max_edges);
    let mut pairs = Vec::with_capacity(ne);
    for _ in 0..ne {
        let a = rng.gen_range(0..nv - 1);
        let b = rng.gen_range(a + 1..nv);
        pairs.push((a, b));
    }
    let mut used: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    used.sort_unstable();
    used.dedup();
    let pos = |x: usize| used.binary_search(&x).unwrap();
    let pairs: Vec<_> = pairs.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
    DirectedMultigraph::from_index_pairs(used.len(), &pairs)
}

fn boxed(f: fn(Box<Expr>, Box<Expr>) -> Expr, a: Expr, b: Expr) -> Expr {
    f(Box::new(a), Box::new(b))
}

pub fn add(a: Expr, b: Expr) -> Expr {
    boxed(Expr::Add, a, b)
}

pub fn sub(a: Expr, b: Expr) -> Expr {
    boxed(Expr::Sub, a, b)
}

pub fn mul(a: Expr, b: Expr) -> Expr {
    boxed(Expr::Mul, a, b)
}

fn s(g: &DirectedMultigraph, e: graphsym::EdgeId) -> Expr {
    Expr::S(vec![g.edge_name(e).to_string()])
}

fn s_star(g: &DirectedMultigraph, e: graphsym::EdgeId) -> Expr {
    Expr::SStar(vec![g.edge_name(e).to_string()])
}

fn p(g: &DirectedMultigraph, v: graphsym::VertexId) -> Expr {
    Expr::P(g.vertex_name(v).to_string())
}

pub fn random_scalar(rng: &mut TestRng) -> Coeff {
    let (n, d) = *[(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 2), (3, 1)]
        .choose(rng)
        .unwrap();
    q(n, d)
}

pub fn random_leaf(rng: &mut TestRng, g: &DirectedMultigraph) -> Expr {
    let e = graphsym::EdgeId(rng.gen_range(0..g.edge_count()) as u32);
    let v = graphsym::VertexId(rng.gen_range(0..g.vertex_count()) as u32);
    match rng.gen_range(0..9) {
        0 => Expr::Scalar(random_scalar(rng)),
        1 | 2 => s(g, e),
        3 | 4 => s_star(g, e),
        5 => p(g, v),
        6 => mul(s(g, e), s_star(g, e)),
        _ => {
            // a path of length two when one starts at r(e)
            match g.out_edges(g.range(e)).choose(rng) {
                Some(&f) => {
                    let names = vec![g.edge_name(e).to_string(), g.edge_name(f).to_string()];
                    if rng.gen_bool(0.5) {
                        Expr::S(names)
                    } else {
                        Expr::SStar(names)
                    }
                }
                None => s(g, e),
            }
        }
    }
}

pub fn random_expr(rng: &mut TestRng, g: &DirectedMultigraph, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return random_leaf(rng, g);
    }
    let a = random_expr(rng, g, depth - 1);
    let b = random_expr(rng, g, depth - 1);
    match rng.gen_range(0..5) {
        0 | 1 => mul(a, b),
        2 => sub(a, b),
        3 => mul(Expr::Scalar(random_scalar(rng)), a),
        _ => add(a, b),
    }
}

/// An expression that the graph relations force to zero.
pub fn random_relation(rng: &mut TestRng, g: &DirectedMultigraph) -> Expr {
    let e = graphsym::EdgeId(rng.gen_range(0..g.edge_count()) as u32);
    let f = graphsym::EdgeId(rng.gen_range(0..g.edge_count()) as u32);
    let v = graphsym::VertexId(rng.gen_range(0..g.vertex_count()) as u32);
    let w = graphsym::VertexId(rng.gen_range(0..g.vertex_count()) as u32);
    match rng.gen_range(0..6) {
        0 => sub(mul(s_star(g, e), s(g, e)), p(g, g.range(e))),
        1 if !g.is_sink(v) => {
            let sum = g
                .out_edges(v)
                .iter()
                .map(|&x| mul(s(g, x), s_star(g, x)))
                .reduce(add)
                .unwrap();
            sub(p(g, v), sum)
        }
        2 if e != f => mul(s_star(g, e), s(g, f)),
        3 if v != w => mul(p(g, v), p(g, w)),
        4 => sub(s(g, e), mul(p(g, g.source(e)), s(g, e))),
        _ => sub(mul(p(g, v), p(g, v)), p(g, v)),
    }
}

/// A pair of expressions that are equal about half the time: either the
/// second adds a sandwiched relation to the first, or it is perturbed or
/// drawn independently.
pub fn random_pair(rng: &mut TestRng, g: &DirectedMultigraph) -> (Expr, Expr) {
    let a = random_expr(rng, g, 3);
    let b = match rng.gen_range(0..4) {
        0 | 1 => {
            let zero = mul(
                mul(random_expr(rng, g, 1), random_relation(rng, g)),
                random_expr(rng, g, 1),
            );
            add(a.clone(), zero)
        }
        2 => add(a.clone(), random_leaf(rng, g)),
        _ => random_expr(rng, g, 3),
    };
    (a, b)
}

pub fn eval(alg: &LeavittAlgebra, x: &Expr) -> AlgebraElement {
    x.evaluate(alg.graph(), alg)
        .expect("generated expressions are well formed")
}

pub fn random_element(rng: &mut TestRng, alg: &LeavittAlgebra) -> AlgebraElement {
    let x = random_expr(rng, alg.graph(), 3);
    eval(alg, &x)
}

/// Unnormalized monomials `S_α S_β*` with `r(α) = r(β)` and random
/// coefficients, to feed the rewriting procedures directly.
pub fn random_raw_terms(rng: &mut TestRng, g: &DirectedMultigraph) -> Vec<(PathMonomial, Coeff)> {
    let paths = g.enumerate_paths(3);
    let count = rng.gen_range(1..=6);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alpha = paths.choose(rng).unwrap();
        let same: Vec<_> = paths
            .iter()
            .filter(|b| b.range() == alpha.range())
            .collect();
        let beta = (*same.choose(rng).unwrap()).clone();
        if let Some(m) = PathMonomial::try_new(alpha.clone(), beta) {
            out.push((m, random_scalar(rng)));
        }
    }
    out
}

/// Graphs with at least one vertex relation to rewrite against, cyclic and
/// acyclic.
pub fn rewriting_corpus() -> Vec<DirectedMultigraph> {
    let mut out: Vec<_> = cyclic_graphs().into_iter().map(|(_, g)| g).collect();
    out.extend(acyclic_examples());
    out.push(parse_graph("v w ; a: v -> v ; b: v -> w ; c: w -> v").unwrap());
    out
}
