//! The operator language: `let` bindings, assertions and directives.

mod ast;
mod lexer;
mod parser;
mod printer;

use std::fmt;

pub use ast::{Arg, BinOp, CmpOp, Directive, Expr, Script, Statement, Stmt};
pub use parser::{parse, parse_expr};
pub use printer::{print_directive, print_expr, print_script, print_stmt};

/// A syntax error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected ", self.line, self.col)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

/// Directive names recognized at the start of a statement.
pub const DIRECTIVES: [&str; 6] = ["build-lattice", "rep-matrices", "hw", "ef-chain", "verify", "paper-suite"];
