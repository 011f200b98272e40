use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,

    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "undefined finite continued fraction: suffix starting at index {suffix} evaluates to 0"
    )]
    UndefinedContinuedFraction { suffix: usize },

    #[error("folding requires a nonzero middle term")]
    ZeroFoldTerm,

    #[error("folding requires a nonempty tail")]
    EmptyTail,

    #[error("non-termination suspected in Hurwitz expansion after {steps} steps")]
    NonTermination { steps: usize },

    #[error("digit {0} is not in the Hurwitz alphabet")]
    DigitNotInAlphabet(String),

    #[error("rule applies to real-integer sequences only (got {0})")]
    NonRealDigit(String),

    #[error("denominator q_n is zero")]
    ZeroDenominator,

    #[error("index {index} out of range for a table with last index {last}")]
    IndexOutOfRange { index: usize, last: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("automaton failed to close: more than {cap} states")]
    AutomatonDidNotClose { cap: usize },

    #[error("unsupported base {0}")]
    UnsupportedBase(String),

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("oracle restricted to desk scale: norm {norm} exceeds cap {cap}")]
    OracleCapExceeded { norm: String, cap: String },

    #[error("tau must be a rational >= 2")]
    InvalidTau,

    #[error("lambda must be a positive rational")]
    InvalidLambda,

    #[error("unsupported Psi: {0}")]
    UnsupportedPsi(String),

    #[error("variant requires A >= 2")]
    VariantNeedsLargerBase,

    #[error("base must have the form -A+i or -A-i with A >= 1 (got {0})")]
    NotKataiSzaboBase(String),

    #[error("seed is not full and mirror-full")]
    SeedNotFull,

    #[error("stage {stage}: {reason}")]
    StageViolation { stage: usize, reason: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("certificate for {base}^{power} rejected:\n{transcript}")]
    CertificateRejected {
        base: String,
        power: u32,
        transcript: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
