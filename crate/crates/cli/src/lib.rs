//! Command-line front end: argument parsing, JSON documents and text tables.

pub mod app;
pub mod json;
pub mod render;
