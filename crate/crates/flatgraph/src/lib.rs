//! File formats, SVG rendering and the `flatgraph` command line on top of
//! [`flatgraph_core`].

pub mod cli;
pub mod error;
pub mod formats;
pub mod json;
pub mod svg;

pub use error::{ParseError, ParseResult};
