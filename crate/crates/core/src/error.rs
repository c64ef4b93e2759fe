use thiserror::Error;

/// Errors raised by the algebra, operator and ladder layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rings")]
    IncompatibleRings,
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("pole at evaluation point")]
    Pole,
    #[error("indeterminate `{0}` is not assigned a value")]
    Unassigned(String),
    #[error("unknown indeterminate `{0}`")]
    UnknownIndeterminate(String),
    #[error("too many indeterminates: {0} (limit {1})")]
    TooManyIndeterminates(usize, usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("exponent not closed under map")]
    ExponentNotClosed,
    #[error("exponent mismatch between quasi-functions")]
    ExponentMismatch,
    #[error("map must be a verified involution")]
    NotInvolution,
    #[error("gauge data is not an exact logarithmic differential")]
    InexactGauge,
    #[error("singular metric")]
    SingularMetric,
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("denominator factor {factor} vanishes for the given parameters")]
    VanishingDenominator { factor: String },
    #[error("alpha = 0 is degenerate for the I2 descent; use system C reduction")]
    DegenerateAlpha,
    #[error("basis not invariant: {0}")]
    BasisNotInvariant(String),
    #[error("not a function: expected an order-zero operator")]
    NotAFunction,
    #[error("square root is only defined for monomials with square coefficients: {0}")]
    BadSquareRoot(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
