use std::fmt;

use thiserror::Error;

use crate::formula::Formula;

/// Syntax error with a 1-based line/column position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, line: usize, column: usize) -> Self {
        ParseError { message: message.into(), line, column }
    }

    /// Shifts a position found inside a fragment to the enclosing document.
    pub(crate) fn offset(mut self, line: usize, column: usize) -> Self {
        if self.line == 1 {
            self.column += column - 1;
        }
        self.line += line - 1;
        self
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {0}")]
    Parse(#[from] ParseError),

    #[error("{count} atoms exceed the enumeration bound of {max}")]
    AtomBound { count: usize, max: usize },

    #[error("evaluation set of {size} formulas exceeds the bound of {max}")]
    EvalSetBound { size: usize, max: usize },

    #[error("resource bound exceeded: {0}")]
    ResourceExceeded(String),

    #[error("atom `{0}` is not in the valuation's domain")]
    UnknownAtom(String),

    #[error("no entry for `{0}`")]
    MissingEntry(Formula),

    #[error("`{0}` is outside the valuation universe")]
    OutsideUniverse(Formula),

    #[error("level out of range: {0}")]
    LevelOutOfRange(String),

    #[error("operation not supported for the {0} logic")]
    UnsupportedLogic(&'static str),

    #[error("knowledge bases use different logics")]
    BackendMismatch,

    #[error("default rules admit no tolerated rule: {}", DisplayList(.0))]
    InconsistentDefaults(Vec<String>),

    #[error("derivation depth {depth} exceeds the configured maximum {max}")]
    DepthBound { depth: usize, max: usize },

    #[error("invalid level `{0}`")]
    BadLevel(String),
}

impl Error {
    /// True for errors that reflect an exhausted size or search budget.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::AtomBound { .. } | Error::EvalSetBound { .. } | Error::ResourceExceeded(_) | Error::DepthBound { .. }
        )
    }
}

struct DisplayList<'a>(&'a [String]);

impl fmt::Display for DisplayList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(", "))
    }
}

/// Error found while reading a knowledge-base or defaults file.
#[derive(Debug, Error)]
#[error("{line}:{column}: {message}")]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl FileError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        FileError { line, column, message: message.into() }
    }

    pub(crate) fn from_parse(err: ParseError, line: usize, column: usize) -> Self {
        let err = err.offset(line, column);
        FileError { line: err.line, column: err.column, message: err.message }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
