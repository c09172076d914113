pub mod characterization;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod metrics;
pub mod pebbling;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Graph, VertexSet};
pub use pebbling::{Configuration, MoveSequence, Pebbler};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/pebbling.md")]
    mod pebbling {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/characterization.md")]
    mod characterization {}
}
