//! The verification-suite registry: names map one-to-one onto the invariant
//! batches of the computational layers.

use crate::{RunError, RunResult};
use std::time::Instant;

type SuiteFn = fn(usize) -> Result<usize, String>;

/// `(name, default small budget, full budget, runner)`.
pub fn registry() -> Vec<(&'static str, usize, usize, SuiteFn)> {
    use dl_algebra::suites as alg;
    use dl_classical::suites as cls;
    use dl_coxeter::suites as cox;
    use dl_padic::suites as pad;
    use dl_trace::suites as trc;
    vec![
        ("reciprocal-involution", 100, 500, alg::reciprocal_involution),
        ("reciprocal-multiplicativity", 100, 500, alg::reciprocal_multiplicativity),
        ("root-characterization", 20, 60, alg::root_characterization),
        ("lemma-mmm", 40, 100, alg::lemma_mmm),
        ("even-deg", 0, 0, alg::even_deg),
        ("odd-deg-relation", 0, 0, alg::odd_deg_relation),
        ("about-sigma", 0, 0, cox::about_sigma),
        ("wi-twisted-coxeter", 0, 0, cox::wi_twisted_coxeter),
        ("closure-sets", 0, 0, cox::closure_sets),
        ("torus-counts", 2, 3, cox::torus_counts),
        ("torus-shapes", 0, 0, cox::torus_shapes),
        ("self-reciprocity", 15, 25, cls::self_reciprocity),
        ("eigen-parity", 60, 1000, cls::eigen_parity),
        ("counting-flags", 10, 40, cls::counting_flags),
        ("projection-regularity", 8, 40, cls::projection_regularity),
        ("non-split-certificate", 0, 0, cls::non_split_certificate),
        ("engine-closed-form", 25, 200, trc::engine_closed_form),
        ("t-consistency", 4, 20, trc::torus_consistency),
        ("zero-diagnosis", 15, 80, trc::zero_diagnosis),
        ("pipeline-formula", 10, 50, pad::pipeline_formula),
        ("smith-invariance", 4, 20, pad::smith_invariance),
        ("determinant-parity", 60, 500, pad::determinant_parity),
        ("residue-regularity", 8, 30, pad::residue_regularity),
        ("empty-intersection", 0, 0, |_| {
            pad::empty_intersection_instance()
        }),
    ]
}

pub fn run_verify(suite: &str, budget: &str) -> RunResult {
    let reg = registry();
    let selected: Vec<_> = if suite == "all" {
        reg
    } else {
        let found: Vec<_> = reg.into_iter().filter(|(n, _, _, _)| *n == suite).collect();
        if found.is_empty() {
            return Err(RunError::Usage(format!(
                "unknown suite {suite:?}; known: all, {}",
                registry()
                    .iter()
                    .map(|(n, _, _, _)| *n)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        found
    };
    let mut out = String::new();
    let mut failed = false;
    for (name, small, full, runner) in selected {
        let b = match budget {
            "small" => small,
            "full" => full,
            other => other
                .parse()
                .map_err(|_| RunError::Usage(format!("bad budget {other:?}")))?,
        };
        let start = Instant::now();
        match runner(b) {
            Ok(cases) => {
                out += &format!(
                    "ok   {name}: {cases} case(s) in {:.2}s\n",
                    start.elapsed().as_secs_f64()
                );
            }
            Err(counterexample) => {
                failed = true;
                out += &format!("FAIL {name}: {counterexample}\n");
            }
        }
        print!(
            "{}",
            out.lines().last().map(|l| format!("{l}\n")).unwrap_or_default()
        );
    }
    if failed {
        Err(RunError::Verification(out))
    } else {
        Ok(String::new())
    }
}
