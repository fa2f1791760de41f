//! File formats and command-line front end for `polyopt-core`.

pub mod cli;
pub mod document;
pub mod problem;

pub use cli::main_with;
pub use document::{PolyDoc, ResultDocument, ValueDoc};
pub use problem::{parse_problem, parse_problem_str, ProblemError, ProblemFile};
