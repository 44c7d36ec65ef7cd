//! Exact machinery for parameterized problems on graphs of bounded degeneracy:
//! graph predicates and degeneracy orderings, typed problem instances with
//! seeded generators, brute-force oracles with witnesses, twin-rule
//! kernelizations for connected and capacitated vertex cover, OR-composition
//! gadget constructions, inter-problem reductions, and a verification harness
//! that turns the structural claims behind all of the above into executable
//! checks.
//!
//! Everything in this crate is deterministic: generators are pure functions of
//! their seed, solvers enumerate in fixed orders, and compositions assign node
//! ids in a documented sequence so that gadget nodes can be addressed by label.

pub mod compose;
pub mod graph;
pub mod harness;
pub mod kernels;
pub mod oracles;
pub mod problems;
pub mod reduce;

mod util;

pub use graph::{degeneracy_ordering, DegeneracyResult, Graph, GraphError, MultiGraph};
pub use oracles::{Budget, OracleError, SolveResult, Witness};
