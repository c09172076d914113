//! Verification campaigns, report streams and the `pebblab` command-line
//! tool built on `pebblab-core`.

pub mod explore;
pub mod instance;
pub mod report;
pub mod suites;
pub mod witness;

pub use instance::Instance;
pub use report::{Record, Report, Status, Summary};
pub use suites::{Suite, VerifyOptions};
pub use witness::{Item, Witness};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
mod book {}
