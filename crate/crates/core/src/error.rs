use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse letter `{0}`")]
    BadLetter(String),
    #[error("parse error at row {row}, col {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },
    #[error("not semi-standard at row {row}, col {col}")]
    NotSemistandard { row: usize, col: usize },
    #[error("column {col} is not admissible: N({z}) > {z}")]
    NotAdmissible { col: usize, z: i32 },
    #[error("not a KN tableau: split not semi-standard at row {row}, split-col {col}")]
    SplitNotSemistandard { row: usize, col: usize },
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("invalid color {0}")]
    BadColor(usize),
    #[error("invalid interval [{0},{1}]")]
    BadInterval(usize, usize),
    #[error("{0}")]
    Domain(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
