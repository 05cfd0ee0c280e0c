//! Verification suites for the trace engine.

use crate::engine::{monotone_multiplicity_check, stratum_count_check, trace_engine, TorusCountMode};
use crate::ClosedFormCase;
use dl_classical::{is_gl_regular, standard_space, SpaceKind};
use dl_algebra::FieldCtx;

pub type SuiteOutcome = Result<usize, String>;

/// Configurations exercised by the randomized sweeps.
pub fn sweep_configs() -> Vec<(SpaceKind, usize, u64)> {
    let mut out = vec![];
    for q in [3u64, 5] {
        for kind in SpaceKind::ALL {
            for n in kind.min_rank()..=3 {
                if kind == SpaceKind::Unitary && q == 5 && n > 2 {
                    continue;
                }
                out.push((kind, n, q));
            }
        }
    }
    out
}

/// Engine total equals the closed form on random GL-regular isometries,
/// including all zero cases; stratum-count and multiplicity patterns match.
pub fn engine_closed_form(per_config: usize) -> SuiteOutcome {
    let mut cases = 0;
    for (kind, n, q) in sweep_configs() {
        let base = FieldCtx::base(q, 1).map_err(|e| e.to_string())?;
        let space = standard_space(kind, n, &base).map_err(|e| e.to_string())?;
        let mut found = 0;
        let mut seed = 0u64;
        let seed_cap = 60 * per_config as u64 + 1000;
        while found < per_config && seed < seed_cap {
            let g = space.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            found += 1;
            let report = trace_engine(&space, &g, TorusCountMode::ClosedForm)
                .map_err(|e| e.to_string())?;
            if !report.agreement() {
                return Err(format!(
                    "engine {} != closed form {} for {} n={n} q={q} seed={} f={}",
                    report.total,
                    report.closed_form_value,
                    kind.name(),
                    seed - 1,
                    report.f_g
                ));
            }
            if !stratum_count_check(&report) {
                return Err(format!(
                    "stratum count check failed for {} n={n} q={q} seed={} f={}",
                    kind.name(),
                    seed - 1,
                    report.f_g
                ));
            }
            if !monotone_multiplicity_check(&report) {
                return Err(format!(
                    "multiplicity pattern check failed for {} n={n} q={q} seed={}",
                    kind.name(),
                    seed - 1
                ));
            }
            cases += 1;
        }
        if found < per_config {
            return Err(format!(
                "only {found} GL-regular elements found for {} n={n} q={q}",
                kind.name()
            ));
        }
    }
    Ok(cases)
}

/// Every torus quantity the engine uses agrees with the coset brute force:
/// run the engine in both modes and compare reports row by row.
pub fn torus_consistency(per_config: usize) -> SuiteOutcome {
    let mut cases = 0;
    for (kind, n, q) in sweep_configs() {
        if q == 5 && kind == SpaceKind::Unitary && n > 1 {
            continue; // large splitting circles; covered at q = 3
        }
        let base = FieldCtx::base(q, 1).map_err(|e| e.to_string())?;
        let space = standard_space(kind, n, &base).map_err(|e| e.to_string())?;
        let mut found = 0;
        let mut seed = 0u64;
        while found < per_config && seed < 50 * per_config as u64 + 500 {
            let g = space.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            found += 1;
            let fast = trace_engine(&space, &g, TorusCountMode::ClosedForm)
                .map_err(|e| e.to_string())?;
            let brute = trace_engine(&space, &g, TorusCountMode::BruteForce)
                .map_err(|e| e.to_string())?;
            if fast.total != brute.total || fast.strata.len() != brute.strata.len() {
                return Err(format!(
                    "mode disagreement for {} n={n} q={q} seed={}",
                    kind.name(),
                    seed - 1
                ));
            }
            for (a, b) in fast.strata.iter().zip(&brute.strata) {
                if a.torus_count != b.torus_count || a.contribution != b.contribution {
                    return Err(format!(
                        "torus count mismatch at stratum {} shape {}: closed {} brute {}",
                        a.i, a.shape, a.torus_count, b.torus_count
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Whenever the closed form returns zero with a named reason, the engine
/// finds no contributing pair at all.
pub fn zero_diagnosis(per_config: usize) -> SuiteOutcome {
    let mut cases = 0;
    let mut zero_seen = 0;
    for (kind, n, q) in sweep_configs() {
        let base = FieldCtx::base(q, 1).map_err(|e| e.to_string())?;
        let space = standard_space(kind, n, &base).map_err(|e| e.to_string())?;
        let mut found = 0;
        let mut seed = 100_000u64;
        while found < per_config && seed < 100_000 + 40 * per_config as u64 + 400 {
            let g = space.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            found += 1;
            let report =
                trace_engine(&space, &g, TorusCountMode::ClosedForm).map_err(|e| e.to_string())?;
            if matches!(report.closed_case, ClosedFormCase::Zero { .. }) {
                zero_seen += 1;
                if !report.strata.is_empty() || report.total != 0 {
                    return Err(format!(
                        "zero diagnosis uns sound for {} n={n} q={q} seed={}: {}",
                        kind.name(),
                        seed - 1,
                        report.diagnosis
                    ));
                }
            }
            cases += 1;
        }
    }
    if zero_seen == 0 {
        return Err("no zero-trace cases encountered; sweep too small".into());
    }
    Ok(cases)
}
