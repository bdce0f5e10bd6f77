use std::fmt;

use thiserror::Error;

/// Location of a subterm, as the list of child indices from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Position(pub Vec<usize>);

impl Position {
    pub fn root() -> Self {
        Position(Vec::new())
    }

    pub fn child(&self, index: usize) -> Self {
        let mut path = self.0.clone();
        path.push(index);
        Position(path)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("width mismatch at {position}: {left} vs {right}")]
    WidthMismatch {
        position: Position,
        left: usize,
        right: usize,
    },
    #[error("ill-typed 2-morphism at {position}: {reason}")]
    Ill2Typed { position: Position, reason: String },
    #[error("argument kind mismatch for `{schema}`: {reason}")]
    KindMismatch { schema: String, reason: String },
    #[error("unknown relation schema `{0}`")]
    UnknownSchema(String),
    #[error("no match for rule `{rule}` at {site}")]
    NoMatch { rule: String, site: String },
    #[error("terms are not parallel: {0}")]
    NotParallel(String),
    #[error("form matrix is singular")]
    SingularForm,
    #[error("model error: {0}")]
    Model(String),
    #[error("parse error at {line}:{col}: expected {expected}")]
    Parse {
        line: usize,
        col: usize,
        expected: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
