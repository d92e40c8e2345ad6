use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero class has no divisibility")]
    ZeroClass,
    #[error("not in algebraic part: {0}")]
    NotAlgebraic(String),
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("wrong arity: expected {expected} classes, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unknown class label `{0}`")]
    UnknownLabel(String),
    #[error("odd number of points ({0}) admits no perfect matching")]
    OddMatching(usize),
    #[error("matching enumeration limited to n <= {max}, got {got}")]
    MatchingTooLarge { max: usize, got: usize },
    #[error("pairing-only class: product `{0}` is not defined in the ring")]
    PairingOnly(String),
    #[error("no Hodge classes in odd degree {0}")]
    OddDegree(u32),
    #[error("degree {0} exceeds the top degree 12")]
    DegreeOverflow(u32),
    #[error("expected a class of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter must be positive, got {0}")]
    NonPositive(String),
    #[error("evaluation point is a pole")]
    Pole,
    #[error("singular linear system")]
    Singular,
    #[error("point is not on the wall: {0}")]
    OffWall(String),
    #[error("genus {0} is too small (need g >= 3)")]
    GenusTooSmall(u64),
    #[error("no involution case is compatible with the class")]
    NoAdmissibleCase,
    #[error("ambiguous: both involution cases are compatible with the class")]
    AmbiguousCase,
}
