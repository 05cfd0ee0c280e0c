//! The stratified trace engine: sums, over the strata of the closed space
//! and the matching semisimple torus classes, the product of the number of
//! stable-flag witnesses with the torus counting quantity, and evaluates
//! the closed-form expressions in the characteristic polynomial for
//! cross-checking. The two routes must agree exactly on every valid input.

pub mod closed_form;
pub mod engine;
pub mod named_instances;
pub mod report;
pub mod suites;

pub use closed_form::{trace_closed_form, ClosedForm, ClosedFormCase};
pub use engine::{monotone_multiplicity_check, stratum_count_check, trace_engine, TorusCountMode};
pub use report::TraceReport;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("element is not GL-regular")]
    NotGlRegular,
    #[error("wrong parity or coefficient mode for kind {kind}: {message}")]
    WrongParity { kind: &'static str, message: String },
    #[error("classical-layer error: {0}")]
    Classical(#[from] dl_classical::ClassicalError),
    #[error("coxeter-layer error: {0}")]
    Coxeter(#[from] dl_coxeter::CoxeterError),
    #[error("algebra error: {0}")]
    Algebra(#[from] dl_algebra::AlgebraError),
}

pub type Result<T> = std::result::Result<T, TraceError>;

/// Map a space kind to its stratification family.
pub fn family_of(kind: dl_classical::SpaceKind) -> dl_coxeter::Family {
    match kind {
        dl_classical::SpaceKind::SOEven => dl_coxeter::Family::EvenSO,
        dl_classical::SpaceKind::SOOdd => dl_coxeter::Family::OddSO,
        dl_classical::SpaceKind::Sp => dl_coxeter::Family::Sp,
        dl_classical::SpaceKind::Unitary => dl_coxeter::Family::Unitary,
    }
}
