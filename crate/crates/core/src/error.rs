use thiserror::Error;

/// Every failure a library operation can report.
///
/// Each variant names the precondition that was violated so front ends can
/// print a one-line diagnostic without extra context.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic collision: division by a residue that is zero in {context}")]
    CharacteristicCollision { context: &'static str },
    #[error("division by zero in {context}")]
    DivisionByZero { context: &'static str },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("leading coefficient zero")]
    LeadingCoefficientZero,
    #[error("form has multiple roots")]
    MultipleRoots,
    #[error("{op} needs degree at least {min}, got {got}")]
    DegreeTooSmall { op: &'static str, min: usize, got: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coordinate forms share a root; not a morphism")]
    NotAMorphism,
    #[error("size cap exceeded: degree {degree} above cap {cap}")]
    SizeCapExceeded { degree: usize, cap: usize },
    #[error("nonscalar c_{step}: B_{next} is not a scalar multiple of F_X(A_{step}, B_{step})", next = step + 1)]
    NonscalarRatio { step: usize },
    #[error("inexact division at recursion step {step}")]
    InexactDivision { step: usize },
    #[error("dynamically trivial degree-1 map: periodic polynomials need n = 1")]
    DynamicallyTrivial,
    #[error("duplicate points")]
    DuplicatePoints,
    #[error("expected {expected} points for r = {r} without infinity, got {got}")]
    PointCountMismatch { expected: String, r: String, got: usize },
    #[error("r equals deg f = {degree}: infinity cannot be a fixed point")]
    InfinityNotFixed { degree: usize },
    #[error("point is not periodic with period dividing {period}")]
    NotPeriodic { period: usize },
    #[error("irrational fixed points: unsplit factor {factor}")]
    IrrationalFixedPoints { factor: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("singular curve: discriminant of the cubic is zero")]
    SingularCurve,
    #[error("unsupported characteristic {characteristic} for {op}")]
    UnsupportedCharacteristic { op: &'static str, characteristic: u64 },
    #[error("not a recognized CM family (need y^2 = x^3 + bx or y^2 = x^3 + c)")]
    NotCmFamily,
    #[error("y-factor did not cancel in {0}")]
    YFactorRemains(&'static str),
    #[error("ratio not well-defined: {0} is zero")]
    RatioUndefined(&'static str),
    #[error("field too large for exhaustive root search (p = {0})")]
    FieldTooLarge(u64),
    #[error("no translate of the form has a nonzero leading coefficient over this field")]
    NoUsableChart,
}

pub type Result<T> = std::result::Result<T, Error>;
