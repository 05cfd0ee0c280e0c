//! Verification suites for the pi-adic layer.

use crate::matrix::PMatrix;
use crate::pipeline::afl_pipeline;
use crate::reflections::{certified_norm_valuation, residual_determinant_check};
use crate::ring::{PadicCtx, PadicElem};
use crate::synth::{random_unimodular, synthesize_minuscule};
use crate::IntersectionValue;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SuiteOutcome = Result<usize, String>;

/// Random residue polynomials for the synthesized sweep: a mix of
/// irreducible, cubed-linear, and pair-padded shapes, plus multi-odd
/// (empty-intersection) shapes.
fn residue_poly_pool(
    rf: &dl_algebra::FieldCtx,
    rng: &mut ChaCha8Rng,
) -> dl_algebra::Poly {
    use dl_algebra::sampling::sr2_irreducibles_via_circle;
    let lins = sr2_irreducibles_via_circle(rf, 1);
    let cubics = sr2_irreducibles_via_circle(rf, 3);
    match rng.gen_range(0..5) {
        0 => cubics[rng.gen_range(0..cubics.len())].clone(),
        1 => lins[rng.gen_range(0..lins.len())].pow(3),
        2 => lins[rng.gen_range(0..lins.len())].clone(),
        3 => {
            // three distinct odd factors: empty intersection
            let mut idx = (0..lins.len()).collect::<Vec<_>>();
            for i in (1..idx.len()).rev() {
                idx.swap(i, rng.gen_range(0..=i));
            }
            lins[idx[0]].mul(&lins[idx[1]]).mul(&lins[idx[2]])
        }
        _ => {
            let q0 = lins[rng.gen_range(0..lins.len())].clone();
            q0.pow(if rng.gen_bool(0.5) { 1 } else { 3 })
        }
    }
}

/// Synthesized minuscule instances roundtrip through the pipeline: the
/// invariant matches the construction, the induced action is regular, and
/// the pipeline length agrees with the closed form.
pub fn pipeline_formula(per_q: usize) -> SuiteOutcome {
    let mut cases = 0;
    for q in [3u64, 5] {
        let ctx = PadicCtx::unitary(q, 1, 16).map_err(|e| e.to_string())?;
        let rf = ctx.residue_field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0xaf1 + q);
        for _ in 0..per_q {
            let fbar = residue_poly_pool(&rf, &mut rng);
            let pairs = rng.gen_range(0..=1usize);
            let inst =
                synthesize_minuscule(&ctx, &fbar, pairs, &mut rng).map_err(|e| e.to_string())?;
            let report =
                afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).map_err(|e| e.to_string())?;
            if report.inv != inst.expected_inv {
                return Err(format!(
                    "invariant mismatch: got {:?}, expected {:?}",
                    report.inv, inst.expected_inv
                ));
            }
            // residue polynomial: the filler contributes pairs to M_2(f),
            // the residue block is exactly fbar
            let got = report.f_residue.clone().unwrap_or_default();
            if got != dl_algebra::format_poly(&fbar) {
                return Err(format!(
                    "residue characteristic polynomial mismatch: {got}"
                ));
            }
            if !report.agreement {
                return Err(format!(
                    "pipeline value disagrees with the closed form: {report:?}"
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// The invariant is unchanged under unimodular basis changes.
pub fn smith_invariance(budget: usize) -> SuiteOutcome {
    let ctx = PadicCtx::unitary(3, 1, 16).map_err(|e| e.to_string())?;
    let rf = ctx.residue_field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5111);
    let mut cases = 0;
    for _ in 0..budget.max(1) {
        let fbar = residue_poly_pool(&rf, &mut rng);
        let inst = synthesize_minuscule(&ctx, &fbar, 1, &mut rng).map_err(|e| e.to_string())?;
        let report0 =
            afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).map_err(|e| e.to_string())?;
        // re-run in a random new basis
        let (k, k_inv) = random_unimodular(&ctx, inst.n, &mut rng);
        let g2 = k.mul(&ctx, &inst.g).mul(&ctx, &k_inv);
        let gram2 = k_inv
            .transpose(&ctx)
            .mul(&ctx, &inst.gram)
            .mul(&ctx, &k_inv.map_conj(&ctx));
        let u2 = k.mul_vec(&ctx, &inst.u);
        let report2 = afl_pipeline(&ctx, &g2, &u2, &gram2).map_err(|e| e.to_string())?;
        if report0.inv != report2.inv || report0.int != report2.int {
            return Err("invariant changed under a unimodular basis change".into());
        }
        cases += 1;
    }
    Ok(cases)
}

/// The determinant parity law on random reflection products.
pub fn determinant_parity(budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for q in [3u64, 5] {
        let ctx = PadicCtx::orthogonal(q, 1, 12).map_err(|e| e.to_string())?;
        let rf = ctx.residue_field().clone();
        let elems = rf.enumerate();
        let mut rng = ChaCha8Rng::seed_from_u64(0xde7 + q);
        // chain lattice diag(1,1,p,p,p)
        let n = 5;
        let mut gram = PMatrix::identity(&ctx, n);
        for i in 2..n {
            gram.set(i, i, ctx.pi_pow(1));
        }
        for _ in 0..budget / 2 {
            let count = rng.gen_range(1..=6usize);
            let mut vs: Vec<Vec<PadicElem>> = vec![];
            while vs.len() < count {
                let v: Vec<PadicElem> = (0..n)
                    .map(|_| {
                        let r = elems[rng.gen_range(0..elems.len())].clone();
                        ctx.random_lift(&r, &mut rng)
                    })
                    .collect();
                let minv = v
                    .iter()
                    .filter_map(|x| ctx.valuation(x).ok())
                    .min()
                    .unwrap_or(usize::MAX);
                if minv == usize::MAX {
                    continue;
                }
                let v: Vec<PadicElem> = v
                    .iter()
                    .map(|x| ctx.shift_down(x, minv).unwrap())
                    .collect();
                if certified_norm_valuation(&ctx, &gram, &v).is_ok() {
                    vs.push(v);
                }
            }
            let check =
                residual_determinant_check(&ctx, &gram, &vs).map_err(|e| e.to_string())?;
            if !check.parity_law_holds {
                return Err(format!(
                    "parity law violated with {} valuation-one reflections",
                    check.valuation_one_count
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// The residue action of every synthesized instance is regular.
pub fn residue_regularity(budget: usize) -> SuiteOutcome {
    let ctx = PadicCtx::unitary(3, 1, 16).map_err(|e| e.to_string())?;
    let rf = ctx.residue_field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e6);
    let mut cases = 0;
    for _ in 0..budget.max(1) {
        let fbar = residue_poly_pool(&rf, &mut rng);
        let inst = synthesize_minuscule(&ctx, &fbar, rng.gen_range(0..=1), &mut rng)
            .map_err(|e| e.to_string())?;
        let data = crate::lattice::lattice_of_g(&ctx, &inst.g, &inst.u, &inst.gram)
            .map_err(|e| e.to_string())?;
        let residue =
            crate::lattice::residue_space(&ctx, &data, &inst.g).map_err(|e| e.to_string())?;
        if !dl_classical::is_gl_regular(&residue.gbar) {
            return Err("synthesized residue action is not regular".into());
        }
        cases += 1;
    }
    Ok(cases)
}

/// Empty-intersection instances really produce empty intersections.
pub fn empty_intersection_instance() -> SuiteOutcome {
    let ctx = PadicCtx::unitary(3, 1, 16).map_err(|e| e.to_string())?;
    let rf = ctx.residue_field().clone();
    let lins = dl_algebra::sampling::sr2_irreducibles_via_circle(&rf, 1);
    let fbar = lins[0].mul(&lins[1]).mul(&lins[2]);
    let mut rng = ChaCha8Rng::seed_from_u64(0xe321);
    let inst = synthesize_minuscule(&ctx, &fbar, 0, &mut rng).map_err(|e| e.to_string())?;
    let report = afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).map_err(|e| e.to_string())?;
    match report.int {
        IntersectionValue::Empty { .. } if report.agreement => Ok(1),
        other => Err(format!("expected an empty intersection, got {other:?}")),
    }
}
