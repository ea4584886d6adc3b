//! File formats and command implementations behind the `zdbox` binary.

pub mod bundle;
pub mod commands;
pub mod edgelist;

pub use bundle::{CertificateBundle, SCHEMA_VERSION};
