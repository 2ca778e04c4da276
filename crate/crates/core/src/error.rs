use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("Laurent evaluation is only integral at 1 and -1, got {0}")]
    BadEvaluationPoint(i64),
    #[error("value at 1 is {0}, expected 1 or -1 for an Alexander polynomial")]
    NotAlexanderLike(String),
    #[error("span of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("letter {letter} is out of range for {strands} strands")]
    BadLetter { letter: i32, strands: usize },
    #[error("closure has {components} components, not a knot")]
    NotAKnot { components: usize },
    #[error("closure diagram has no crossings")]
    EmptyDiagram,
    #[error("strands {strands} exceeds threshold {threshold} (Temperley-Lieb basis size {basis_size})")]
    TooManyStrands {
        strands: usize,
        threshold: usize,
        basis_size: String,
    },
    #[error("writhe-normalized bracket has exponent {0} not divisible by 4")]
    ExponentNotDivisibleBy4(i64),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
