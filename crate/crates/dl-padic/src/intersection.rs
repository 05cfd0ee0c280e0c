//! Closed intersection-length formulas on residue characteristic
//! polynomials, for the unitary and spin-orthogonal front-ends.

use crate::{PadicError, Result};
use dl_algebra::reciprocal::sr_classify;
use dl_algebra::Poly;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IntersectionValue {
    /// The fixed-point locus misses the divisor: no unique odd-multiplicity
    /// self-reciprocal factor.
    Empty { reason: String },
    Length(u64),
}

/// Intersection length for the unitary front-end: `f` self-reciprocal over
/// `GF(q^2)`, odd degree, nonzero constant term.
pub fn afl_int(f: &Poly) -> Result<IntersectionValue> {
    let fld = f.field();
    if !fld.has_conjugation() {
        return Err(PadicError::BadParameter(
            "unitary intersection needs a GF(q^2) coefficient field".into(),
        ));
    }
    if f.degree() % 2 == 0 || f.is_zero() {
        return Err(PadicError::BadParameter(format!(
            "degree {} must be odd",
            f.degree()
        )));
    }
    let cls = sr_classify(f, true).map_err(PadicError::Algebra)?;
    let odd = cls.odd_sr_factors();
    if odd.len() != 1 {
        return Ok(IntersectionValue::Empty {
            reason: format!(
                "{} odd-multiplicity self-reciprocal factors (need exactly one)",
                odd.len()
            ),
        });
    }
    let (q0, m) = &odd[0];
    Ok(IntersectionValue::Length(
        q0.degree() as u64 * ((*m as u64 + 1) / 2) * cls.script_m(),
    ))
}

/// Intersection length for the spin-orthogonal front-end: `f`
/// self-reciprocal over `GF(p)`, even degree at least 2.
pub fn gspin_int(f: &Poly) -> Result<IntersectionValue> {
    if f.degree() % 2 == 1 || f.degree() == 0 {
        return Err(PadicError::BadParameter(format!(
            "degree {} must be even and positive",
            f.degree()
        )));
    }
    let cls = sr_classify(f, false).map_err(PadicError::Algebra)?;
    let odd = cls.odd_sr_factors();
    if odd.len() != 1 {
        return Ok(IntersectionValue::Empty {
            reason: format!(
                "{} odd-multiplicity self-reciprocal factors (need exactly one)",
                odd.len()
            ),
        });
    }
    let (q0, m) = &odd[0];
    Ok(IntersectionValue::Length(
        q0.degree() as u64 * ((*m as u64 + 1) / 2) * cls.script_m(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dl_algebra::sampling::{sr2_irreducibles_via_circle, sr_irreducibles};
    use dl_algebra::{reciprocal, FieldCtx};

    #[test]
    fn afl_irreducible_cubic_gives_three() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let q = sr2_irreducibles_via_circle(&f9, 3)[0].clone();
        assert_eq!(afl_int(&q).unwrap(), IntersectionValue::Length(3));
    }

    #[test]
    fn afl_with_pair_gives_two() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let q0 = sr2_irreducibles_via_circle(&f9, 1)[0].clone();
        // one non-self-reciprocal pair
        let x = f9.add(&f9.one(), &f9.generator());
        let q = dl_algebra::Poly::lambda_minus(&f9, &x);
        let qs = reciprocal(&q, true).unwrap();
        let f = q0.mul(&q).mul(&qs);
        assert_eq!(afl_int(&f).unwrap(), IntersectionValue::Length(2));
    }

    #[test]
    fn afl_empty_with_three_odd_factors() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let lins = sr2_irreducibles_via_circle(&f9, 1);
        assert!(lins.len() >= 3);
        let f = lins[0].mul(&lins[1]).mul(&lins[2]);
        assert!(matches!(
            afl_int(&f).unwrap(),
            IntersectionValue::Empty { .. }
        ));
    }

    #[test]
    fn afl_rejects_even_degree() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let lins = sr2_irreducibles_via_circle(&f9, 1);
        let f = lins[0].mul(&lins[1]);
        assert!(afl_int(&f).is_err());
    }

    #[test]
    fn gspin_instances() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        // irreducible self-reciprocal quartic: length 4
        let quartic = sr_irreducibles(&f3, 4, false)[0].clone();
        assert_eq!(gspin_int(&quartic).unwrap(), IntersectionValue::Length(4));
        // Q0 quadratic with a squared pair: 2 * 1 * 3 = 6
        let q0 = sr_irreducibles(&f3, 2, false)[0].clone();
        let nsr = dl_algebra::sampling::nsr_pair_reps(&f3, 2, false);
        let q = nsr[0].clone();
        let qs = reciprocal(&q, false).unwrap();
        let f = q0.mul(&q.mul(&qs).pow(2));
        assert_eq!(gspin_int(&f).unwrap(), IntersectionValue::Length(6));
        // all even multiplicities: empty
        let f = q0.pow(2);
        assert!(matches!(
            gspin_int(&f).unwrap(),
            IntersectionValue::Empty { .. }
        ));
    }
}
