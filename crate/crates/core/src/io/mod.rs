//! Document format, reports and the command-line front end.

pub mod cli;
pub mod document;
pub mod report;

pub use document::{parse_document, serialize_document, AlgebraDocument, DeformationBlock, ExtensionBlock, RepresentationBlock};
pub use report::Report;
