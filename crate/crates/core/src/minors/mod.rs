//! Minor models, rooted canonical forms, folios and the reduction.

mod binary_tree;
pub mod canon;
mod folio;
mod model;
mod reduce;

pub use binary_tree::{binary_tree_depth, has_rooted_binary_tree_minor, tree_height};
pub use canon::{canonical_form, canonical_form_with_cap, CanonicalRootedGraph, DEFAULT_CANON_CAP};
pub(crate) use folio::subsets_of_size;
pub use folio::{deletion_folio, q_folio, DeletionFolio, Folio, FolioBuilder, DEFAULT_MAX_ROOTS};
pub use model::{find_model, find_rooted_model, MinorModel, MinorSearch, DEFAULT_NODE_BUDGET};
pub use reduce::{reduce_separation, Reducer, ReductionCertificate, DEFAULT_CANDIDATE_BUDGET, REDUCTION_SIZE_CAP};
