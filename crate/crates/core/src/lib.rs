//! Hilbert coefficients and stretchedness of monomial ideals in numerical
//! semigroup rings `k[[H]]`.
//!
//! Monomial ideals are represented by their valuation sets, so every length is
//! a count of semigroup elements. On top of that the crate computes Hilbert
//! functions, reduction numbers, the stretched invariants `k`, `r` and `Λ`, and
//! checks the numerical characterizations of stretched ideals with small first
//! Hilbert coefficient.

mod bits;
pub mod corpus;
pub mod error;
pub mod family;
pub mod hilbert;
pub mod ideal;
pub mod parse;
pub mod report;
pub mod semigroup;
pub mod stretched;
pub mod tower;
pub mod verification;

pub use error::{
    ClassifyError, CorpusError, FamilyError, HilbertError, IdealError, ParseError, SemigroupError,
};
pub use hilbert::HilbertData;
pub use ideal::SemigroupIdeal;
pub use semigroup::NumericalSemigroup;
pub use stretched::{
    analyze, classify, Analysis, ClassificationReport, ReductionProfile, TheoremViolation,
};
pub use tower::{monomial_reduction, PowerTower};
