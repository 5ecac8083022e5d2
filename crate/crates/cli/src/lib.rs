//! Command line front end for `poincare-core`: JSON reports for the
//! engine operations and SVG panels of interval pairs with their curves.

pub mod commands;
pub mod doc;
pub mod error;
pub mod format;
pub mod sample;
pub mod scene;
pub mod svg;

pub use doc::Document;
pub use error::{CliError, Result};
pub use scene::{Scene, Viewport};
