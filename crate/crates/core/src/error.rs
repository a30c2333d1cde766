use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// [`Error::code`] gives the stable machine-readable name used in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no square root in the quadratic extension")]
    NonSquare(String),
    #[error("modulus {0} is not an odd prime below 2^63")]
    BadModulus(u64),
    #[error("{0} is not a quadratic non-residue modulo {1}")]
    BadNonResidue(u64, u64),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("genus must be at least 1")]
    BadGenus,
    #[error("root {0} occurs more than once")]
    RepeatedRoot(String),
    #[error("expected {expected} roots, got {got}")]
    WrongRootCount { expected: usize, got: usize },
    #[error("root {0} is not in the prime field")]
    RootNotRational(String),
    #[error("x-coordinate {0} is not in the prime field")]
    AbscissaNotRational(String),
    #[error("point ({0}, {1}) is not on the curve")]
    PointNotOnCurve(String, String),
    #[error("operation requires a finite point")]
    InfinitePoint,
    #[error("not a reduced Mumford representation: {0}")]
    InvalidDivisor(String),
    #[error("support of size {0} is odd")]
    OddSupport(usize),
    #[error("malformed sign vector: {0}")]
    BadSignVector(String),
    #[error("r({index})^2 != a - root")]
    BadSquareRoot { index: usize },
    #[error("product of square roots is not -b")]
    BadProduct,
    #[error("{0} is not a half of the point")]
    NotAHalf(String),
    #[error("recovery denominator vanishes")]
    DegenerateDenominator,
    #[error("divisor has degree below the genus")]
    ThetaDegenerate,
    #[error("Weierstrass point {0} lies in the support of the divisor")]
    WeierstrassInSupport(String),
    #[error("{0} is not a root of f")]
    RootNotInR(String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("invalid verification grid: {0}")]
    InvalidGrid(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NonSquare(_) => "NonSquare",
            Error::BadModulus(_) => "BadModulus",
            Error::BadNonResidue(..) => "BadNonResidue",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::BadGenus => "BadGenus",
            Error::RepeatedRoot(_) => "RepeatedRoot",
            Error::WrongRootCount { .. } => "WrongRootCount",
            Error::RootNotRational(_) => "RootNotRational",
            Error::AbscissaNotRational(_) => "AbscissaNotRational",
            Error::PointNotOnCurve(..) => "PointNotOnCurve",
            Error::InfinitePoint => "InfinitePoint",
            Error::InvalidDivisor(_) => "InvalidDivisor",
            Error::OddSupport(_) => "OddSupport",
            Error::BadSignVector(_) => "BadSignVector",
            Error::BadSquareRoot { .. } => "BadSquareRoot",
            Error::BadProduct => "BadProduct",
            Error::NotAHalf(_) => "NotAHalf",
            Error::DegenerateDenominator => "DegenerateDenominator",
            Error::ThetaDegenerate => "ThetaDegenerate",
            Error::WeierstrassInSupport(_) => "WeierstrassInSupport",
            Error::RootNotInR(_) => "RootNotInR",
            Error::TooLarge(_) => "TooLarge",
            Error::InvalidGrid(_) => "InvalidGrid",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::Parse(_) => "Parse",
        }
    }
}
