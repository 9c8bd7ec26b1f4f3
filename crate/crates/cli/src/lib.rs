//! Command-line front end for the `nilmult` library.

pub mod app;
pub mod expr;

pub use app::{group_json, run};
pub use expr::{parse_group, GroupExpr, SyntaxError};
