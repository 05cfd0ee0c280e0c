//! Named arithmetic instances with frozen expected values, used by tests
//! and the acceptance run.

use crate::engine::{trace_engine, TorusCountMode};
use crate::{Result, TraceError};
use dl_classical::{standard_space, ClassicalSpace, Matrix, SpaceKind};
use dl_algebra::{FieldCtx, Poly};

/// A regular unipotent element of the rank-one symplectic space over GF(3):
/// characteristic polynomial `(lambda - 1)^2`.
pub fn sp2_regular_unipotent(q: u64) -> Result<(ClassicalSpace, Matrix)> {
    let base = FieldCtx::base(q, 1)?;
    let space = standard_space(SpaceKind::Sp, 1, &base)?;
    let f = &space.field;
    // [[1, 1], [0, 1]] preserves the rank-one symplectic form
    let mut g = Matrix::identity(f, 2);
    g.set(0, 1, f.one());
    assert!(space.is_isometry(&g));
    Ok((space, g))
}

/// Search the seeded generator for an isometry with the given
/// characteristic polynomial; used to pin named instances.
pub fn find_isometry_with_charpoly(
    space: &ClassicalSpace,
    target: &Poly,
    max_seeds: u64,
) -> Result<Matrix> {
    for seed in 0..max_seeds {
        let g = space.random_isometry(seed);
        if g.charpoly() == *target && dl_classical::is_gl_regular(&g) {
            return Ok(g);
        }
    }
    Err(TraceError::WrongParity {
        kind: space.kind.name(),
        message: format!("no isometry with characteristic polynomial {target:?} found"),
    })
}

/// Search for an isometry whose characteristic polynomial is irreducible
/// (and self-reciprocal, as all characteristic polynomials here are).
pub fn find_irreducible_charpoly_isometry(
    space: &ClassicalSpace,
    max_seeds: u64,
) -> Result<(Matrix, Poly)> {
    for seed in 0..max_seeds {
        let g = space.random_isometry(seed);
        let f = g.charpoly();
        if dl_algebra::is_irreducible(&f) && dl_classical::is_gl_regular(&g) {
            return Ok((g, f));
        }
    }
    Err(TraceError::WrongParity {
        kind: space.kind.name(),
        message: "no irreducible characteristic polynomial found".into(),
    })
}

/// The three named engine instances: returns `(description, total)` pairs.
pub fn run_named_instances() -> Result<Vec<(String, u64, u64)>> {
    let mut out = vec![];

    // symplectic rank one, regular unipotent: two strata, each contributing 1
    let (space, g) = sp2_regular_unipotent(3)?;
    let report = trace_engine(&space, &g, TorusCountMode::BruteForce)?;
    assert_eq!(report.strata.len(), 2);
    assert!(report.strata.iter().all(|r| r.contribution == 1));
    out.push(("sp n=1 q=3 regular unipotent".into(), report.total, 2));

    // odd orthogonal (lambda-1)^3
    let base = FieldCtx::base(3, 1)?;
    let so3 = standard_space(SpaceKind::SOOdd, 1, &base)?;
    let lm1 = Poly::from_i64_coeffs(&so3.field, &[-1, 1]);
    let g = find_isometry_with_charpoly(&so3, &lm1.pow(3), 5000)?;
    let report = trace_engine(&so3, &g, TorusCountMode::BruteForce)?;
    out.push(("so-odd n=1 q=3 unipotent cube".into(), report.total, 2));

    // unitary rank one with irreducible self-reciprocal cubic: one stratum, 3 * 1
    let u3 = standard_space(SpaceKind::Unitary, 1, &base)?;
    let (g, _f) = find_irreducible_charpoly_isometry(&u3, 20_000)?;
    let report = trace_engine(&u3, &g, TorusCountMode::BruteForce)?;
    assert_eq!(report.strata.len(), 1);
    out.push(("u n=1 q=3 irreducible cubic".into(), report.total, 3));

    // even orthogonal rank two with irreducible quartic: total 2
    let so4 = standard_space(SpaceKind::SOEven, 2, &base)?;
    let (g, _f) = find_irreducible_charpoly_isometry(&so4, 20_000)?;
    let report = trace_engine(&so4, &g, TorusCountMode::BruteForce)?;
    out.push(("so-even n=2 q=3 irreducible quartic".into(), report.total, 2));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_instances_reproduce() {
        for (desc, got, want) in run_named_instances().unwrap() {
            assert_eq!(got, want, "{desc}");
        }
    }
}
