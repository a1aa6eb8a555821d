//! Serialization, Graphviz export, parallel sweeps and the `kunz` command
//! line on top of `kunz-core`.

pub mod cli;
pub mod dot;
mod error;
pub mod json;
pub mod sweep;

pub use cli::run;
pub use error::{ToolError, ToolResult};
