//! Exact arithmetic over finite fields `GF(p^e)` (p odd), together with the
//! reciprocal-polynomial toolkit used by the character-formula and
//! intersection-number computations: deterministic factorization, the
//! self-reciprocal / non-self-reciprocal splitting of a factorization,
//! the multiplicity product `M(f)`, the `UU* = h` enumerations, and
//! admissible enumerations of roots of self-reciprocal irreducibles.
//!
//! All operations are pure and deterministic: field moduli are chosen
//! canonically, and the equal-degree splitting is driven by a pseudorandom
//! stream seeded from the polynomial itself.

pub mod factor;
pub mod field;
pub mod format;
pub mod poly;
pub mod reciprocal;
pub mod sampling;
pub mod suites;

pub use factor::{factor, is_irreducible, roots_in_field, squarefree_radical};
pub use field::{FieldCtx, FieldEmbedding, FqElem};
pub use format::{format_poly, parse_poly};
pub use poly::Poly;
pub use reciprocal::{
    admissible_enumerations, enumerate_uu_star, reciprocal, script_m, sr_classify, AdmissibleMode,
    SRFactorization,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree {0} out of range 1..=16")]
    DegreeOutOfRange(usize),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not self-reciprocal")]
    NotSelfReciprocal,
    #[error("conjugate mode requires a field with a declared quadratic structure (e = 2*q_exp), got e = {e}, q_exp = {q_exp}")]
    NoConjugation { e: usize, q_exp: usize },
    #[error("{0}")]
    HypothesisViolation(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("elements belong to different fields")]
    FieldMismatch,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

#[cfg(test)]
mod shareability {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn contexts_are_shareable_across_threads() {
        assert_send_sync::<crate::FieldCtx>();
        assert_send_sync::<crate::FqElem>();
        assert_send_sync::<crate::Poly>();
        assert_send_sync::<crate::FieldEmbedding>();
    }
}
