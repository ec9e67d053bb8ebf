//! Packing and covering: exact oracles, the bounded-pathwidth and
//! `O(k log k)` transversals, the small-subgraph search, the duality driver
//! and the branching algorithm for pathwidth deletion.

mod bounded_pw;
mod duality;
mod family;
mod forest;
mod fpt;
mod intervals;
mod klogk;
mod main_pw;
mod oracle;

pub use bounded_pw::{bounded_pw_duality, packing_or_transversal_bounded_pw, PackingOrTransversal};
pub use duality::{
    ep_duality, ep_duality_with, verify_certificate, DualityCertificate, DualityConfig, Mode, SEPARATION_SIZE,
};
pub use family::{Family, Packing, Transversal};
pub use forest::{forest_bound, forest_transversal, forest_transversal_with, tree_from_forest};
pub use fpt::{fpt_pw_deletion, fpt_pw_deletion_with, FptConfig};
pub use intervals::{max_disjoint, select_disjoint_subpaths, Interval};
pub use klogk::{klogk_bound, klogk_transversal, klogk_transversal_with};
pub use main_pw::{
    find_small_pw_subgraph, find_small_pw_subgraph_with, main_pw_constants, minimal_pw_subgraph,
    minimal_pw_subgraph_with, ConstantsSource, FixedConstants, LiteralConstants, Magnitude, MainPwConstants,
    SmallPwOutcome, MAX_CONSTANT_BITS,
};
pub use oracle::{nu_exact, tau_exact, ContainmentTable, Oracle, DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP};
