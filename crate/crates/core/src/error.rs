use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the arithmetic, classification and construction routines.
///
/// Internal consistency failures (two independent computations disagreeing)
/// are not represented here; they panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of zeros")]
    GcdOfZeros,
    #[error("ord of zero")]
    OrdOfZero,
    #[error("zero has no {0}")]
    ZeroArgument(&'static str),
    #[error("not prime: {0}")]
    NotPrime(BigInt),
    #[error("not split: {0} is not congruent to 1 mod 3")]
    NotSplit(BigInt),
    #[error("not inert: {0} is not congruent to 2 mod 3")]
    NotInert(BigInt),
    #[error("zero residue")]
    ZeroResidue,
    #[error("zero target")]
    ZeroTarget,
    #[error("scope Q requires a rational target, got {0}")]
    NonRationalTarget(String),
    #[error("not a valid relation")]
    InvalidRelation,
    #[error("triple does not match target")]
    TripleMismatch,
    #[error("tangent degenerate")]
    TangentDegenerate,
    #[error("secant degenerate: {0}")]
    SecantDegenerate(&'static str),
    #[error("point is not on x^3 + y^3 = {0}")]
    NotOnCurve(String),
    #[error("degenerate solution: {0}")]
    DegenerateSolution(&'static str),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("triple not in descent form: {0}")]
    NotDescentForm(String),
    #[error("not a cube triple")]
    NotCubeTriple,
    #[error("descent did not terminate within {0} steps")]
    StepsExhausted(usize),
    #[error("invalid budget: {0}")]
    InvalidBudget(&'static str),
    #[error("parse error at '{token}': {message}")]
    Parse { token: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }
}
