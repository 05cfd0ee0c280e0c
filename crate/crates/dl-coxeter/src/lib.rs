//! Dynkin diagrams with a Frobenius action, sigma-unbranched data and their
//! derived stratification elements, exact Weyl-group combinatorics (lengths,
//! Bruhat order, twisted closure sets), and brute-force torus counting in
//! signed-permutation coordinates for the four classical families.

pub mod diagram;
pub mod families;
pub mod format;
pub mod monomial;
pub mod suites;
pub mod table;
pub mod weyl;

pub use diagram::{DynkinDiagram, SigmaDatum, UnbranchedData};
pub use families::{Family, TorusClass};
pub use monomial::Monomial;
pub use weyl::WeylGroup;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("sigma is not a diagram automorphism")]
    SigmaNotAutomorphism,
    #[error("axiom violated: S - J is not contained in one sigma-orbit")]
    ComplementNotInOneOrbit,
    #[error("axiom violated: L is not connected")]
    LNotConnected,
    #[error("axiom violated: L is branched")]
    LBranched,
    #[error("axiom violated: L is not ordered consecutively")]
    LNotConsecutive,
    #[error("axiom violated: nodes of L are not a complete set of sigma-orbit representatives")]
    LNotOrbitTransversal,
    #[error("axiom violated: exactly one end-node of L must lie in S - J, and it must be listed last ({0})")]
    EndNode(String),
    #[error("derived check failed: {0}")]
    DerivedCheck(String),
    #[error("group too large for exhaustive computation: {0} elements")]
    GroupTooLarge(usize),
    #[error("elements belong to different Weyl groups")]
    GroupMismatch,
    #[error("unrealizable torus class: {0}")]
    Unrealizable(String),
    #[error("algebra error: {0}")]
    Algebra(#[from] dl_algebra::AlgebraError),
}

pub type Result<T> = std::result::Result<T, CoxeterError>;

#[cfg(test)]
mod shareability {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn groups_and_data_are_shareable_across_threads() {
        assert_send_sync::<crate::WeylGroup>();
        assert_send_sync::<crate::SigmaDatum>();
        assert_send_sync::<crate::Monomial>();
        assert_send_sync::<crate::TorusClass>();
    }
}
