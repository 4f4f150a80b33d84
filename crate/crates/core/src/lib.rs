//! Deciding Clique through OR-kernels.
//!
//! A [`kernels::Kernel`] turns an instance into a [`kernels::QuerySet`] of
//! small induced subinstances whose OR is the answer. [`batching`] merges
//! consecutive queries by disjoint union, [`solver`] answers them, and
//! [`pipeline`] ties the stages together with invariant checks and
//! benchmark accounting.
//!
//! ```
//! use orkernel::{CliqueInstance, Graph, Kernel, Answer};
//!
//! let inst = CliqueInstance::new(Graph::petersen(), 3).unwrap();
//! let qs = Kernel::Degeneracy.apply(&inst);
//! assert_eq!(qs.len(), 10);
//! assert_eq!(qs.resolve_with(orkernel::solver::brute_force_has_clique), Answer::No);
//! ```

pub mod batching;
pub mod decomp;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod kernels;
pub mod modulators;
pub mod pipeline;
pub mod solver;

pub use error::{GraphError, PipelineError};
pub use graph::{encoding_size, CliqueInstance, Graph, VertexSet};
pub use kernels::{Kernel, Provenance, Query, QuerySet};
pub use solver::{has_clique, Answer, SolveBudget, SolveOutcome};
