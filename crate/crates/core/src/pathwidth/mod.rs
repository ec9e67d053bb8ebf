//! Path decompositions, the exact solver, `t`-separations and the apex join.

mod apex;
mod decomposition;
mod exact;
mod separation;

pub use apex::apex_join;
pub use decomposition::{make_nice, validate_path_decomposition, PathDecomposition};
pub use exact::{exact_pathwidth, pathwidth_at_most, PathwidthSolver, DEFAULT_PATHWIDTH_CAP};
pub use separation::{marked_separation, refine_separation, TSeparation};
