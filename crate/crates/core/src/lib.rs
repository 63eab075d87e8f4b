//! Minimum coloring, maximum arc-disjoint packing with a matching minimum
//! multicut, and kernels of clique-acyclic orientations, for collections of
//! dipaths on a directed tree.
//!
//! Every algorithm walks the tree one star at a time. The dipaths through a
//! vertex become the edges of a bipartite multigraph ([`star`]), and the
//! per-star work is done by the primitives in [`bipartite`].

pub mod bipartite;
pub mod coloring;
pub mod error;
pub mod generate;
pub mod kernel;
pub mod multicut;
pub mod oracle;
pub mod star;
pub mod tree;

pub use coloring::{color_dipaths, max_arc_load, ColoringResult};
pub use kernel::{kernel, solve_kernel, ArcPriorities, KernelResult, PriorityRelation, Witness};
pub use error::{BipartiteError, OracleError, PriorityError, SolveError, StarError, TreeError};
pub use multicut::{multicut, solve_multicut, MulticutCertificate};
pub use tree::{Arc, ArcId, Dipath, DirectedTree, PathId, PathIndex, RootedTree, VertexId};

/// Elementary-step counter threaded through the solvers.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Steps(pub u64);

impl Steps {
    pub fn tick(&mut self, k: usize) {
        self.0 += k as u64;
    }

    pub fn count(&self) -> u64 {
        self.0
    }
}
