use thiserror::Error;

/// Errors produced by the exact-arithmetic and module-construction layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("specialization pole: denominator evaluates to zero")]
    SpecializationPole,

    #[error("specialization requires a value for variable z{0}")]
    MissingAssignment(u32),

    #[error("invalid specialization point: {0}")]
    BadSpecializationPoint(String),

    #[error("tableau shape error: {0}")]
    Shape(String),

    #[error("index ({0},{1}) outside the triangular range of a height-{2} tableau")]
    EntryRange(usize, usize, usize),

    #[error("omega index (p={p}, s={s}, u={u}) out of range for height {n}")]
    OmegaRange { p: usize, s: usize, u: usize, n: usize },

    #[error("weight {0:?} is not dominant integral")]
    NonDominant(String),

    #[error("tableau is not q-generic: {0}")]
    NonGeneric(String),

    #[error("tableaux do not share a top row")]
    TopRowMismatch,

    #[error("top-row shifts are not allowed here")]
    TopRowShift,

    #[error("finite-dimensional closure violated: {0}")]
    ClosureViolation(String),

    #[error("root-of-unity order must exceed 2, got {0}")]
    OrderTooSmall(u64),

    #[error("d must be odd for this construction, got {0}")]
    EvenOrder(u64),

    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("module dimension {0} exceeds the desk-scale guard {1}")]
    DimensionGuard(usize, usize),

    #[error("incompatible module signatures: {0}")]
    SignatureMismatch(String),

    #[error("cyclotomic field order mismatch: {0} vs {1}")]
    FieldMismatch(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
