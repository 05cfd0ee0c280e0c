//! The acceptance gate: each test runs one criterion at its full budget and
//! prints a single pass/fail line. All checks are exact (integer equality,
//! zero tolerance).

use dl_algebra::FieldCtx;
use dl_classical::SpaceKind;

fn report(criterion: &str, outcome: Result<usize, String>) {
    match outcome {
        Ok(cases) => println!("[{criterion}] PASS ({cases} cases)"),
        Err(e) => {
            println!("[{criterion}] FAIL: {e}");
            panic!("{criterion} failed: {e}");
        }
    }
}

/// Criterion 1: engine total equals the closed form for each family,
/// q in {3, 5}, n <= 3 (unitary n <= 2 at q = 5), 200 random GL-regular
/// isometries per configuration.
#[test]
fn criterion_1_engine_equals_closed_form() {
    report(
        "criterion 1: engine = closed form (200 per configuration)",
        dl_trace::suites::engine_closed_form(200),
    );
}

/// Criterion 2: the `U U* = f / Q0^m` count equals `M(f)` for 100 random
/// valid triples per mode, independently of the odd `m` chosen.
#[test]
fn criterion_2_uu_star_counts() {
    report(
        "criterion 2: UU* enumeration count = M(f) (100 per mode)",
        dl_algebra::suites::lemma_mmm(200),
    );
}

/// Criterion 3: divisor-kernel flag counts equal exhaustive
/// isotropic-subspace scans for every stratum, all kinds, q = 3,
/// dimensions <= 7 (<= 5 Hermitian).
#[test]
fn criterion_3_counting_flags_bijection() {
    report(
        "criterion 3: divisor counts = exhaustive scans",
        dl_classical::suites::counting_flags(30),
    );
}

/// Criterion 4: brute-force torus counts equal the closed forms
/// ((deg Q)/2 on the even orthogonal strata, deg Q elsewhere) for every
/// realizable class with torus rank <= 3, and the rational-point shapes
/// realize the classification exactly at q = 3, torus rank <= 2.
#[test]
fn criterion_4_torus_counts_and_shapes() {
    report(
        "criterion 4a: torus brute force = closed forms (n' <= 3)",
        dl_coxeter::suites::torus_counts(3),
    );
    report(
        "criterion 4b: rational point shapes realize the classification",
        dl_coxeter::suites::torus_shapes(0),
    );
}

/// Criterion 5: the twisted closure of the top stratum is exactly
/// `{w_1, ..., w_imax}` for the four families at ranks up to 3.
#[test]
fn criterion_5_closure_sets() {
    report(
        "criterion 5: closure sets match the stratification",
        dl_coxeter::suites::closure_sets(0),
    );
}

/// Criterion 6: the named instances reproduce exactly: the rank-one
/// symplectic regular unipotent gives 2 with two contributing strata, the
/// odd orthogonal unipotent cube gives 2, the irreducible unitary cubic
/// gives 3, the irreducible even orthogonal quartic gives 2, and the
/// intersection formulas reproduce their instances including an empty case.
#[test]
fn criterion_6_named_instances() {
    let run = || -> Result<usize, String> {
        let mut cases = 0;
        for (desc, got, want) in
            dl_trace::named_instances::run_named_instances().map_err(|e| e.to_string())?
        {
            if got != want {
                return Err(format!("{desc}: got {got}, want {want}"));
            }
            cases += 1;
        }
        // unitary intersection instances
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let cubic = dl_algebra::sampling::sr2_irreducibles_via_circle(&f9, 3)[0].clone();
        match dl_padic::afl_int(&cubic).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Length(3) => cases += 1,
            other => return Err(format!("irreducible cubic: {other:?}, want 3")),
        }
        let lins = dl_algebra::sampling::sr2_irreducibles_via_circle(&f9, 1);
        let x = f9.add(&f9.one(), &f9.generator());
        let q = dl_algebra::Poly::lambda_minus(&f9, &x);
        let qs = dl_algebra::reciprocal(&q, true).map_err(|e| e.to_string())?;
        let paired = lins[0].mul(&q).mul(&qs);
        match dl_padic::afl_int(&paired).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Length(2) => cases += 1,
            other => return Err(format!("linear with pair: {other:?}, want 2")),
        }
        let empty = lins[0].mul(&lins[1]).mul(&lins[2]);
        match dl_padic::afl_int(&empty).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Empty { .. } => cases += 1,
            other => return Err(format!("three odd factors: {other:?}, want empty")),
        }
        // spin-orthogonal instances
        let quartic = dl_algebra::sampling::sr_irreducibles(&f3, 4, false)[0].clone();
        match dl_padic::gspin_int(&quartic).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Length(4) => cases += 1,
            other => return Err(format!("irreducible quartic: {other:?}, want 4")),
        }
        let q0 = dl_algebra::sampling::sr_irreducibles(&f3, 2, false)[0].clone();
        let nsr = dl_algebra::sampling::nsr_pair_reps(&f3, 2, false)[0].clone();
        let nsr_star = dl_algebra::reciprocal(&nsr, false).map_err(|e| e.to_string())?;
        let padded = q0.mul(&nsr.mul(&nsr_star).pow(2));
        match dl_padic::gspin_int(&padded).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Length(6) => cases += 1,
            other => return Err(format!("quadratic with squared pair: {other:?}, want 6")),
        }
        match dl_padic::gspin_int(&q0.pow(2)).map_err(|e| e.to_string())? {
            dl_padic::IntersectionValue::Empty { .. } => cases += 1,
            other => return Err(format!("all-even: {other:?}, want empty")),
        }
        Ok(cases)
    };
    report("criterion 6: named instances reproduce exactly", run());
}

/// Criterion 7: fifty synthesized minuscule instances per q in {3, 5}:
/// the invariant matches the construction, the residue action is regular,
/// and the pipeline length equals the unitary closed form.
#[test]
fn criterion_7_padic_pipeline() {
    report(
        "criterion 7: pi-adic pipeline on synthesized instances (50 per q)",
        dl_padic::suites::pipeline_formula(50),
    );
}

/// Criterion 8: the property sweeps at their stated budgets, with zero
/// violations: reciprocal involution and multiplicativity (500), isometry
/// characteristic polynomial self-reciprocity (100 per kind), orthogonal
/// eigenvalue parity (1000 regular elements), and the residual determinant
/// parity law (500 reflection products).
#[test]
fn criterion_8_property_sweeps() {
    report(
        "criterion 8a: reciprocal involution (500)",
        dl_algebra::suites::reciprocal_involution(500),
    );
    report(
        "criterion 8b: reciprocal multiplicativity (500)",
        dl_algebra::suites::reciprocal_multiplicativity(500),
    );
    let sweep = || -> Result<usize, String> {
        let mut cases = 0;
        for q in [3u64, 5] {
            for kind in SpaceKind::ALL {
                let base = FieldCtx::base(q, 1).unwrap();
                let space =
                    dl_classical::standard_space(kind, 2, &base).map_err(|e| e.to_string())?;
                for seed in 0..100u64 {
                    let g = space.random_isometry(seed);
                    let f = g.charpoly();
                    if !dl_algebra::reciprocal::is_self_reciprocal(&f, kind.conjugate_mode())
                        .map_err(|e| e.to_string())?
                    {
                        return Err(format!("non-self-reciprocal charpoly: {kind:?} q={q}"));
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    };
    report("criterion 8c: self-reciprocity (100 per kind per q)", sweep());
    report(
        "criterion 8d: orthogonal eigenvalue parity (1000)",
        dl_classical::suites::eigen_parity(1000),
    );
    report(
        "criterion 8e: determinant parity law (500)",
        dl_padic::suites::determinant_parity(1000),
    );
}
