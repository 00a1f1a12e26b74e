//! Enhanced power graphs and power graphs of finite groups.

pub mod error;
pub mod field;
pub mod expr;
pub mod graph;
pub mod group;
pub mod zoo;
pub mod epg;
pub mod lab;

pub use error::{Error, Result};
