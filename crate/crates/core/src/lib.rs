//! Exact computation in graph C*-algebras of finite directed multigraphs
//! and classification of the graphs whose algebras have maximal
//! permutational symmetry.

pub mod algebra;
pub mod graph;

pub use algebra::{AlgebraElement, AlgebraError, Coeff, LeavittAlgebra, PathMonomial};
pub use graph::{DirectedMultigraph, EdgeId, GraphError, Path, VertexId};
pub mod expr;
pub mod matrix;
pub mod qaut;
pub mod symmetry;
