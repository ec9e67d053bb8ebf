pub mod enumerate;
pub mod erdosposa;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod minors;
pub mod pathwidth;

pub use error::{ErdosPosaError, GraphError, MinorError, PathwidthError};
pub use graph::{validate_separation, Graph, RootedGraph, Separation, Subgraph, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/pathwidth.md")]
    mod pathwidth {}
    #[doc = include_str!("../../../book/src/minors.md")]
    mod minors {}
    #[doc = include_str!("../../../book/src/packing.md")]
    mod packing {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/deletion.md")]
    mod deletion {}
    #[doc = include_str!("../../../book/src/ratio.md")]
    mod ratio {}
}
