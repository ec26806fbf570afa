use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable table: {0}")]
    VarTable(String),
    #[error("polynomials belong to different variable tables")]
    VarTableMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial is constant in `{0}`")]
    ConstantIn(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("quotient is infinite-dimensional: no pure power of `{0}` among the leading monomials")]
    InfiniteQuotient(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("normal form needs division by the nonconstant parameter polynomial {0}")]
    NonconstantScale(String),
    #[error("not quasihomogeneous: {0}")]
    NotQuasihomogeneous(String),
    #[error("matrix is not symmetric")]
    Asymmetric,
    #[error("degenerate parameter point: {0}")]
    Degenerate(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
