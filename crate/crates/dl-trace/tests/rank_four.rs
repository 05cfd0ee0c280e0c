//! Scale-out spot check beyond the acceptance ranks: rank-four orthogonal
//! and symplectic configurations, with brute-force torus counts.

use dl_classical::{is_gl_regular, standard_space, SpaceKind};
use dl_trace::{trace_engine, TorusCountMode};
use dl_algebra::FieldCtx;

#[test]
fn rank_four_engine_agrees_with_closed_form() {
    let f3 = FieldCtx::base(3, 1).unwrap();
    for kind in [SpaceKind::Sp, SpaceKind::SOOdd, SpaceKind::SOEven] {
        let space = standard_space(kind, 4, &f3).unwrap();
        let mut found = 0;
        let mut seed = 0u64;
        while found < 5 && seed < 500 {
            let g = space.random_isometry(seed);
            seed += 1;
            if !is_gl_regular(&g) {
                continue;
            }
            found += 1;
            let report = trace_engine(&space, &g, TorusCountMode::BruteForce).unwrap();
            assert!(
                report.agreement(),
                "{} n=4 seed={}: engine {} closed {}",
                kind.name(),
                seed - 1,
                report.total,
                report.closed_form_value
            );
        }
        assert!(found >= 5, "not enough regular elements for {kind:?}");
    }
}
