use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different coefficient universes")]
    MixedUniverse,
    #[error("prime {0} divides a coefficient denominator")]
    BadDenominator(u64),
    #[error("no rational fits the residue within the bound")]
    NotFound,
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("duplicate abscissa in interpolation samples")]
    DuplicateAbscissa,
    #[error("interpolation samples are inconsistent with the degree bound")]
    Inconsistent,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("requested rank exceeds matrix size")]
    RankTooLarge,
    #[error("system is positive dimensional over the field")]
    PositiveDimensional,
    #[error("jacobian is singular modulo p at the base solution")]
    SingularJacobian,
    #[error("coefficient reconstruction failed: {0}")]
    ReconstructFailed(String),
    #[error("exact verification failed: {0}")]
    VerificationFailed(String),
    #[error("cover elements have incompatible relation data")]
    IncompatibleRelation,
    #[error("key equation f·σ(f)·σ²(f) = d³ fails on the background ring")]
    KeyEquationFails,
    #[error("group action table violates its defining relations: {0}")]
    ActionTableInconsistent(String),
    #[error("sampling budget exhausted")]
    BudgetExhausted,
    #[error("bundled dataset failed a load-time check: {0}")]
    DataCorrupt(String),
    #[error("point does not satisfy the surface equations")]
    PointNotOnX,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
