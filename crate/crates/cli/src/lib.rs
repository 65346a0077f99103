//! Parsing and evaluation layer behind the `rcwb` binary: the model text
//! format, the expression language, and report rendering.

pub mod expr;
pub mod lex;
pub mod model_file;
pub mod report;

use std::fmt;

use lex::Span;

#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, col: usize, message: String },
    Validation { name: String, reason: String, line: usize, col: usize },
    Eval { line: usize, col: usize, message: String },
    Io(String),
}

impl CliError {
    pub fn parse(span: Span, message: String) -> CliError {
        CliError::Parse {
            line: span.line,
            col: span.col,
            message,
        }
    }

    pub fn validation(name: &str, reason: &str, span: Span) -> CliError {
        CliError::Validation {
            name: name.to_string(),
            reason: reason.to_string(),
            line: span.line,
            col: span.col,
        }
    }

    pub fn eval(span: Span, message: String) -> CliError {
        CliError::Eval {
            line: span.line,
            col: span.col,
            message,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, col, message } => {
                write!(f, "parse error at {line}:{col}: {message}")
            }
            CliError::Validation { name, reason, line, col } => {
                write!(f, "invalid declaration `{name}` at {line}:{col}: {reason}")
            }
            CliError::Eval { line, col, message } => {
                write!(f, "error at {line}:{col}: {message}")
            }
            CliError::Io(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for CliError {}
