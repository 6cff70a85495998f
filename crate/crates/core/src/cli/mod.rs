//! Problem-file parsing, command dispatch and report rendering for the
//! `frobsig` binary.

pub mod parse;
pub mod report;

pub use parse::{parse_expr, parse_poly, parse_problem, Expr, ProblemFile};
pub use report::{run, run_text, Command, Flags, Report, DEFAULT_EMAX};
