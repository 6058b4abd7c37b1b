use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation closure has a cycle through {0} and {1}")]
    CycleDetected(String, String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("{0} and {1} are not comparable")]
    NotComparable(String, String),
    #[error("map leaves {0:?} unmapped or maps it outside the target")]
    UnmappedElement(String),
    #[error("poset has no unique minimum and maximum")]
    NotBounded,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bad range [{0}, {1}] for size {2}")]
    BadRange(usize, usize, usize),
    #[error("no dual Knuth move at {0}")]
    NotApplicable(usize),
    #[error("letter {0} occurs more than once")]
    RepeatedLetter(u8),
    #[error("letter {0} is already present in the tableau")]
    AlphabetError(u8),
    #[error("alphabets overlap at letter {0}")]
    AlphabetOverlap(u8),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("KL preorder cells differ from Knuth classes at n = {0}")]
    CellMismatch(usize),
    #[error("inclusion {0} violated by ({1}, {2})")]
    InclusionViolated(String, String, String),
    #[error("skew orders need the inner translation property; base {0} lacks it")]
    InnerTranslationUnsupported(String),
    #[error("hypothesis {0} fails at {1}")]
    HypothesisFailed(String, String),
    #[error("Möbius value {computed} differs from expected {expected}")]
    MobiusMismatch { computed: i64, expected: i64 },
    #[error("{0}")]
    LimitExceeded(String),
    #[error("KL cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
