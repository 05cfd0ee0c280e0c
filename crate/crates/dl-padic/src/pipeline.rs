//! The unitary intersection pipeline: lattice, invariant, residue space,
//! intersection length, with a closed-form cross-check and stage-tagged
//! failures.

use crate::intersection::{afl_int, IntersectionValue};
use crate::lattice::{lattice_of_g, residue_space};
use crate::matrix::PMatrix;
use crate::ring::{PadicCtx, PadicElem};
use crate::{PadicError, Result};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct AflReport {
    pub schema: u32,
    /// Pipeline stages completed, in order.
    pub stages: Vec<&'static str>,
    pub n: usize,
    pub q: u64,
    pub inv: Vec<usize>,
    pub minuscule: bool,
    pub dim_v: usize,
    /// Zero-dimensional residue space (unimodular Krylov lattice).
    pub degenerate_empty_residue: bool,
    pub f_residue: Option<String>,
    pub int: IntersectionValue,
    /// The unitary closed-form trace on the residue polynomial.
    pub closed_form_cross: Option<u64>,
    pub agreement: bool,
}

fn stage<T>(name: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        PadicError::PrecisionExhausted(m) => {
            PadicError::PrecisionExhausted(format!("[stage {name}] {m}"))
        }
        other => PadicError::Internal(format!("[stage {name}] {other}")),
    })
}

/// Chain the lattice pipeline on a unitary ring element and cross-check the
/// intersection length against the closed-form trace.
pub fn afl_pipeline(
    ctx: &PadicCtx,
    g: &PMatrix,
    u: &[PadicElem],
    gram: &PMatrix,
) -> Result<AflReport> {
    if !ctx.is_unitary() {
        return Err(PadicError::BadParameter(
            "the intersection pipeline runs over the unitary ring".into(),
        ));
    }
    let data = stage("lattice", lattice_of_g(ctx, g, u, gram))?;
    if !data.minuscule {
        return Err(PadicError::NotMinuscule(data.invariant.clone()));
    }
    let dim_v = data.invariant.iter().filter(|&&r| r == 1).count();
    if dim_v == 0 {
        return Ok(AflReport {
            schema: 1,
            stages: vec!["lattice", "invariant"],
            n: data.invariant.len(),
            q: ctx.residue_field().q() as u64,
            inv: data.invariant.clone(),
            minuscule: true,
            dim_v: 0,
            degenerate_empty_residue: true,
            f_residue: None,
            int: IntersectionValue::Empty {
                reason: "zero-dimensional residue space (unimodular lattice)".into(),
            },
            closed_form_cross: None,
            agreement: true,
        });
    }
    let residue = stage("residue", residue_space(ctx, &data, g))?;
    if !dl_classical::is_gl_regular(&residue.gbar) {
        return Err(PadicError::Internal(
            "[stage residue] induced action is not regular (non-cyclic residue module)".into(),
        ));
    }
    let f_residue = residue.charpoly.clone();
    let int = stage("intersection", afl_int(&f_residue))?;
    let closed = dl_trace::trace_closed_form(dl_classical::SpaceKind::Unitary, &f_residue)
        .map_err(PadicError::Trace)?;
    let agreement = match &int {
        IntersectionValue::Length(v) => *v == closed.value,
        IntersectionValue::Empty { .. } => closed.value == 0,
    };
    Ok(AflReport {
        schema: 1,
        stages: vec!["lattice", "invariant", "residue", "intersection"],
        n: data.invariant.len(),
        q: ctx.residue_field().q() as u64,
        inv: data.invariant.clone(),
        minuscule: true,
        dim_v,
        degenerate_empty_residue: false,
        f_residue: Some(dl_algebra::format_poly(&f_residue)),
        int,
        closed_form_cross: Some(closed.value),
        agreement,
    })
}

impl AflReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::synthesize_minuscule;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pipeline_on_synthesized_cubic() {
        let ctx = PadicCtx::unitary(3, 1, 16).unwrap();
        let rf = ctx.residue_field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let fbar = dl_algebra::sampling::sr2_irreducibles_via_circle(&rf, 3)[0].clone();
        let inst = synthesize_minuscule(&ctx, &fbar, 1, &mut rng).unwrap();
        let report = afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).unwrap();
        assert_eq!(report.inv, inst.expected_inv);
        assert_eq!(report.dim_v, 3);
        assert_eq!(report.int, IntersectionValue::Length(3));
        assert!(report.agreement);
        assert_eq!(
            report.f_residue.unwrap(),
            dl_algebra::format_poly(&fbar)
        );
    }

    #[test]
    fn degenerate_unimodular_lattice_is_flagged() {
        let ctx = PadicCtx::unitary(3, 1, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let inst = crate::synth::synthesize_unimodular(&ctx, 2, &mut rng).unwrap();
        let report = afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).unwrap();
        assert!(report.degenerate_empty_residue);
        assert_eq!(report.dim_v, 0);
        assert_eq!(report.inv, vec![0; inst.n]);
        assert!(matches!(report.int, IntersectionValue::Empty { .. }));
    }

    #[test]
    fn pipeline_rejects_non_minuscule() {
        let ctx = PadicCtx::unitary(3, 1, 12).unwrap();
        let n = 2;
        // companion of a self-reciprocal quadratic, with a p^2-scaled form:
        // the Krylov lattice is standard but the Gram has invariant 2
        let mut g = PMatrix::zero(&ctx, n, n);
        g.set(1, 0, ctx.one());
        g.set(0, 1, ctx.neg(&ctx.one()));
        g.set(1, 1, ctx.from_u64(1));
        let mut gram = PMatrix::identity(&ctx, n);
        gram.set(0, 0, ctx.from_u64(9));
        gram.set(1, 1, ctx.from_u64(9));
        let u = vec![ctx.one(), ctx.zero()];
        let err = afl_pipeline(&ctx, &g, &u, &gram).unwrap_err();
        assert!(matches!(err, PadicError::NotMinuscule(_)));
    }
}
