//! Fixed-precision pi-adic lattice computations and the arithmetic
//! intersection front-ends: the Krylov lattice of a group element, its
//! invariant and minuscule test, the residue space with induced action,
//! intersection-length formulas on residue characteristic polynomials, and
//! the residual determinant law for reflection products.

pub mod format;
pub mod intersection;
pub mod lattice;
pub mod matrix;
pub mod pipeline;
pub mod reflections;
pub mod ring;
pub mod suites;
pub mod synth;

pub use intersection::{afl_int, gspin_int, IntersectionValue};
pub use lattice::{invariant_and_minuscule, lattice_of_g, residue_space, LatticeData, ResidueSpace};
pub use matrix::PMatrix;
pub use pipeline::{afl_pipeline, AflReport};
pub use reflections::{residual_determinant_check, DeterminantCheck};
pub use ring::{PadicCtx, PadicElem};
pub use synth::{synthesize_minuscule, SynthesizedInstance};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PadicError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("lattice is not minuscule: invariant {0:?}")]
    NotMinuscule(Vec<usize>),
    #[error("lattice not stable: {0}")]
    NotStable(String),
    #[error("algebra error: {0}")]
    Algebra(#[from] dl_algebra::AlgebraError),
    #[error("classical error: {0}")]
    Classical(#[from] dl_classical::ClassicalError),
    #[error("trace error: {0}")]
    Trace(#[from] dl_trace::TraceError),
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, PadicError>;

impl PadicError {
    /// Pipeline stage classification for exit-code mapping.
    pub fn stage_exit_code(&self) -> i32 {
        match self {
            PadicError::PrecisionExhausted(_) => 4,
            _ => 3,
        }
    }
}
