//! File formats, SVG rendering and the command-line front end for
//! `tverberg-core`.

pub mod cli;
pub mod document;
pub mod svg;

pub use document::{parse_pointset, parse_witness, serialize_pointset, ParseError, PointSetDocument, WitnessDocument, WitnessKind};
