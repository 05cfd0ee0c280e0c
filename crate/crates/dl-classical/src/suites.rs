//! Verification suites for the classical-groups layer.

use crate::flags::{
    eigen_parity_check, invariant_flags, is_gl_regular, isotropic_stable_subspace_count,
    levi_projection,
};
use crate::space::{standard_space, SpaceKind};
use dl_algebra::reciprocal::is_self_reciprocal;
use dl_algebra::FieldCtx;

pub type SuiteOutcome = Result<usize, String>;

fn base(q: u64) -> FieldCtx {
    FieldCtx::base(q, 1).unwrap()
}

/// Characteristic polynomials of isometries are self-reciprocal in the
/// correct mode.
pub fn self_reciprocity(budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for q in [3u64, 5] {
        for kind in SpaceKind::ALL {
            let s = standard_space(kind, 2, &base(q)).map_err(|e| e.to_string())?;
            for seed in 0..budget as u64 {
                let g = s.random_isometry(seed);
                let f = g.charpoly();
                let sr = is_self_reciprocal(&f, kind.conjugate_mode())
                    .map_err(|e| e.to_string())?;
                if !sr {
                    return Err(format!(
                        "char poly of {:?} isometry (q={q}, seed={seed}) is not self-reciprocal",
                        kind
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Eigenvalue 1 and -1 multiplicities of GL-regular orthogonal isometries
/// are each zero or odd.
pub fn eigen_parity(budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    // 2 even-orthogonal ranks + 3 odd-orthogonal ranks, at two field sizes
    let configs = 10;
    for q in [3u64, 5] {
        for kind in [SpaceKind::SOEven, SpaceKind::SOOdd] {
            for n in kind.min_rank()..=3 {
                let s = standard_space(kind, n, &base(q)).map_err(|e| e.to_string())?;
                let mut seed = 0u64;
                let mut found = 0;
                while found < budget.div_ceil(configs) {
                    let g = s.random_isometry(seed);
                    seed += 1;
                    if seed > 40 * budget as u64 {
                        break;
                    }
                    if !is_gl_regular(&g) {
                        continue;
                    }
                    found += 1;
                    let rep = eigen_parity_check(&s, &g).map_err(|e| e.to_string())?;
                    if !rep.pass {
                        return Err(format!(
                            "parity violation for {:?} q={q} n={n} seed={}: {:?}",
                            kind,
                            seed - 1,
                            rep
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Divisor-kernel flag counts agree with the exhaustive isotropic-subspace
/// scan, for all kinds at scan-feasible sizes.
pub fn counting_flags(budget: usize) -> SuiteOutcome {
    let f3 = base(3);
    let mut cases = 0;
    let configs: Vec<(SpaceKind, usize)> = vec![
        (SpaceKind::Sp, 1),
        (SpaceKind::Sp, 2),
        (SpaceKind::Sp, 3),
        (SpaceKind::SOOdd, 1),
        (SpaceKind::SOOdd, 2),
        (SpaceKind::SOOdd, 3),
        (SpaceKind::SOEven, 2),
        (SpaceKind::SOEven, 3),
        (SpaceKind::Unitary, 1),
        (SpaceKind::Unitary, 2),
    ];
    for (kind, n) in configs {
        let s = standard_space(kind, n, &f3).map_err(|e| e.to_string())?;
        let mut tested = 0;
        let mut seed = 0u64;
        let per_config = (budget / 10).max(1);
        while tested < per_config && seed < 400 {
            let g = s.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            for i in 1..=kind.i_max(n) {
                let flags = invariant_flags(&s, &g, i).map_err(|e| e.to_string())?;
                let scan = isotropic_stable_subspace_count(&s, Some(&g), i - 1, 1_000_000)
                    .map_err(|e| e.to_string())?;
                if flags.len() as u64 != scan {
                    return Err(format!(
                        "flag count mismatch: {:?} n={n} seed={} stratum {i}: divisors {} scan {scan}",
                        kind,
                        seed - 1,
                        flags.len()
                    ));
                }
                cases += 1;
            }
            tested += 1;
        }
        if tested == 0 {
            return Err(format!("no GL-regular elements found for {kind:?} n={n}"));
        }
    }
    Ok(cases)
}

/// Quotient actions of witnesses of GL-regular elements are GL-regular, and
/// the dimension bookkeeping of the two induced characteristic polynomials
/// is exact.
pub fn projection_regularity(budget: usize) -> SuiteOutcome {
    let f3 = base(3);
    let mut cases = 0;
    for kind in SpaceKind::ALL {
        let n = 2;
        let s = standard_space(kind, n, &f3).map_err(|e| e.to_string())?;
        let conj = kind.conjugate_mode();
        let mut tested = 0;
        let mut seed = 0u64;
        while tested < (budget / 4).max(1) && seed < 300 {
            let g = s.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            let f = g.charpoly();
            for i in 1..=kind.i_max(n) {
                for w in invariant_flags(&s, &g, i).map_err(|e| e.to_string())? {
                    let levi = levi_projection(&s, &g, &w).map_err(|e| e.to_string())?;
                    if !is_gl_regular(&levi.quotient_action) {
                        return Err(format!(
                            "quotient action not GL-regular: {:?} seed={} stratum {i}",
                            kind,
                            seed - 1
                        ));
                    }
                    let ustar =
                        dl_algebra::reciprocal(&w.u, conj).map_err(|e| e.to_string())?;
                    if levi.quotient_charpoly.mul(&w.u).mul(&ustar) != f {
                        return Err("induced polynomial bookkeeping broken".into());
                    }
                    cases += 1;
                }
            }
            tested += 1;
        }
    }
    Ok(cases)
}

/// The even orthogonal space certifies non-splitness: Witt index `n - 1`.
pub fn non_split_certificate(_budget: usize) -> SuiteOutcome {
    let f3 = base(3);
    let s = standard_space(SpaceKind::SOEven, 2, &f3).map_err(|e| e.to_string())?;
    let top = isotropic_stable_subspace_count(&s, None, 2, 1_000_000).map_err(|e| e.to_string())?;
    if top != 0 {
        return Err(format!("found {top} two-dimensional isotropic subspaces"));
    }
    let lines = isotropic_stable_subspace_count(&s, None, 1, 1_000_000).map_err(|e| e.to_string())?;
    if lines == 0 {
        return Err("no isotropic lines at all".into());
    }
    Ok(2)
}
