use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined on the unit ideal")]
    UnitIdeal,
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("variable subset must be non-empty")]
    EmptySubset,
    #[error("variable index {0} is out of range")]
    VariableOutOfRange(usize),
    #[error("too many variables for this operation: {found} (limit {limit})")]
    TooManyVariables { found: usize, limit: usize },
    #[error("lcm lattice exceeds the cap of {cap} elements")]
    LatticeCap { cap: usize },
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("variables x1..x{t} meet the support of J")]
    SupportOverlap { t: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("claim ({clause}) failed: {statement}")]
    ClaimFailed { clause: char, statement: String },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
