use thiserror::Error;

use crate::corpus::CorpusResult;
use crate::family::FamilyReport;
use crate::stretched::TheoremViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    NonPositiveGenerator,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(u64),
    #[error("the semigroup is all of N")]
    TrivialSemigroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("valuation list is empty")]
    EmptyValuations,
    #[error("valuation {0} does not lie in the semigroup")]
    GeneratorNotInRing(u64),
    #[error("ideals live over different semigroups")]
    BaseMismatch,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("second ideal is not contained in the first")]
    NotNested,
    #[error("invalid ideal representation: {0}")]
    InvalidRepresentation(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("Hilbert function did not stabilize below n = {0}")]
    NotStabilized(usize),
    #[error("I^(n+1) = QI^n never held below n = {0}")]
    NotAReduction(usize),
    #[error("Q is not the monomial reduction (u^{expected})")]
    NotMonomialReduction { expected: u64 },
    #[error("independent computations disagree: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("theorem violation: {}", .0.failed.join(", "))]
    TheoremViolation(Box<TheoremViolation>),
}

impl From<IdealError> for ClassifyError {
    fn from(e: IdealError) -> Self {
        ClassifyError::Hilbert(HilbertError::Ideal(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based column of the offending character.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("family prediction failed: {}", .0.failed().join(", "))]
    Violation(Box<FamilyReport>),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorpusError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("instance cap of {cap} exceeded; partial results kept", cap = .0.query.cap)]
    CapExceeded(Box<CorpusResult>),
    #[error("theorem violation at <{}>: {}", join(&.0.semigroup), .0.failed.join(", "))]
    Violation(Box<TheoremViolation>),
    #[error("engine error at <{}>: {source}", join(semigroup))]
    Engine {
        semigroup: Vec<u32>,
        source: HilbertError,
    },
}

fn join(v: &[u32]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
