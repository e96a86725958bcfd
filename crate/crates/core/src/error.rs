use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto exit codes, so keep the
/// size-cap variants distinct from plain input errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown cell `{0}`")]
    UnknownCell(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("cell `{cell}` has negative weight {weight}")]
    NegativeWeight { cell: String, weight: String },
    #[error("element `{0}` covers no cells")]
    EmptyElement(String),
    #[error("{what}: needs {needed}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    EpsilonRange(String),
    #[error("worst-case construction unavailable: {0}")]
    ConstructionInfeasible(String),
    #[error("no pure equilibrium exists")]
    NoPureEquilibrium,
    #[error("degenerate game: optimal welfare is zero")]
    DegenerateOptimum,
    #[error("linear program infeasible")]
    LpInfeasible,
    #[error("linear program unbounded")]
    LpUnbounded,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad rational literal `{0}`")]
    BadRational(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
