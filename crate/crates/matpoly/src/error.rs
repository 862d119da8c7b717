use std::fmt;

use crate::bipoly::Shape;

/// Position of a syntax error inside some parsed text.
///
/// `offset` is a byte offset; `line` and `column` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl Position {
    pub fn locate(text: &str, offset: usize) -> Self {
        let offset = offset.min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = match before.rfind('\n') {
            Some(nl) => before[nl + 1..].chars().count() + 1,
            None => before.chars().count() + 1,
        };
        Position { offset, line, column }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at {position}: {message}")]
    Parse { position: Position, message: String },

    #[error("{op}: incompatible shapes {left} and {right}")]
    ShapeMismatch {
        op: &'static str,
        left: Shape,
        right: Shape,
    },

    #[error("{op}: expected a square operand, got {shape}")]
    NotSquare { op: &'static str, shape: Shape },

    #[error("term x^{k1}*y^{k2} does not fit in declared shape {shape}")]
    DegreeExceedsShape { k1: usize, k2: usize, shape: Shape },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("singular matrix: no pivot in column {column}")]
    Singular { column: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position: Position::locate(text, offset),
            message: message.into(),
        }
    }

    /// Broad class of the error, used by front ends to pick exit codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ShapeMismatch { .. }
            | Error::NotSquare { .. }
            | Error::DegreeExceedsShape { .. }
            | Error::InvalidShape(_)
            | Error::IndexOutOfRange { .. } => ErrorKind::Shape,
            Error::Singular { .. } | Error::DivisionByZero => ErrorKind::Singular,
            Error::Parse { .. } => ErrorKind::Parse,
            Error::InvalidArgument(_) => ErrorKind::Argument,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Shape,
    Singular,
    Parse,
    Argument,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
