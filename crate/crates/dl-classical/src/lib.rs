//! The four standard classical spaces and groups over finite fields:
//! Gram matrices, isometry tests, seeded random group elements, regularity,
//! eigenvalue-parity facts, and the enumeration of group-stable isotropic
//! flags through reciprocal-pair divisors of the characteristic polynomial.

pub mod flags;
pub mod format;
pub mod linalg;
pub mod space;
pub mod suites;

pub use flags::{
    divisors_with_reciprocal_pair, eigen_parity_check, invariant_flags, is_gl_regular,
    isotropic_stable_subspace_count, levi_projection, poly_at_matrix, FlagWitness,
};
pub use linalg::Matrix;
pub use space::{standard_space, ClassicalSpace, SpaceKind};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("even characteristic is not supported")]
    EvenCharacteristic,
    #[error("rank {1} too small for kind {0}")]
    RankTooSmall(&'static str, usize),
    #[error("element is not GL-regular (minimal polynomial differs from characteristic polynomial)")]
    NotGlRegular,
    #[error("witness invariant broken: {0}")]
    WitnessInvariantBroken(String),
    #[error("induced form on the quotient is degenerate")]
    DegenerateInducedForm,
    #[error("exhaustive scan too large: {0} candidate subspaces")]
    ScanTooLarge(u128),
    #[error("operation applies to {0}")]
    WrongKind(&'static str),
    #[error("algebra error: {0}")]
    Algebra(#[from] dl_algebra::AlgebraError),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ClassicalError>;
