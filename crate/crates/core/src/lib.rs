//! Minimum vertex cover by stochastic local search.
//!
//! The solver keeps a candidate solution `C` and searches for a vertex cover
//! of size `|C*| - 1` after every cover `C*` it finds. Each exchange step
//! removes the candidate vertex whose removal costs least, then adds an
//! endpoint of a random uncovered edge chosen under configuration checking.
//! Uncovered edges accumulate weight and all weights are periodically scaled
//! down once their mean reaches a threshold.
//!
//! ```
//! use numvc::{graph::parse_dimacs_str, solver::{solve, SolverConfig}};
//!
//! let g = parse_dimacs_str("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n").unwrap();
//! let (cover, record) = solve(&g, &SolverConfig::with_max_steps(1_000)).unwrap();
//! assert_eq!(cover.len(), 1);
//! assert_eq!(record.best_size, 1);
//! ```

pub mod bench;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod state;
pub mod stats;
pub mod targets;
mod variants;

pub use graph::{Graph, VertexSet};
pub use solver::{solve, RunRecord, SearchParams, SolverConfig, StepOutcome, Variant};
pub use state::{SolverState, StateError};
