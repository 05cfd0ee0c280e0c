//! Closed-form trace values from the characteristic polynomial alone, with
//! full case splits and named zero diagnoses.

use crate::{Result, TraceError};
use dl_algebra::reciprocal::sr_classify;
use dl_algebra::Poly;
use dl_classical::SpaceKind;

/// Which clause of the case split produced the value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// A unique odd-multiplicity self-reciprocal factor away from
    /// `lambda +- 1` drives the weighted formula.
    UniqueOddFactor { q0: Poly, m: usize },
    /// Odd orthogonal: every factor other than `lambda - 1` has even
    /// multiplicity.
    LambdaOneOnly { m_lambda_one: usize },
    /// Symplectic: all self-reciprocal multiplicities even.
    AllEven { m_eigen_one: usize, m_eigen_minus_one: usize },
    /// Trace is zero; the violated necessary condition is named.
    Zero { reason: String },
}

#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub value: u64,
    pub case: ClosedFormCase,
    /// The product over non-self-reciprocal pairs of `1 + multiplicity`.
    pub script_m: u64,
}

fn mult_of(cls: &dl_algebra::SRFactorization, q: &Poly) -> usize {
    cls.sr_multiplicity(q)
}

/// Evaluate the closed-form trace for the given kind on a self-reciprocal
/// characteristic polynomial of the correct parity and mode.
pub fn trace_closed_form(kind: SpaceKind, f: &Poly) -> Result<ClosedForm> {
    let fld = f.field();
    let conj = kind.conjugate_mode();
    if conj && !fld.has_conjugation() {
        return Err(TraceError::WrongParity {
            kind: kind.name(),
            message: "unitary polynomials live over GF(q^2)".into(),
        });
    }
    if f.is_zero() || f.degree() == 0 {
        return Err(TraceError::WrongParity {
            kind: kind.name(),
            message: "constant polynomial".into(),
        });
    }
    let want_even = matches!(kind, SpaceKind::SOEven | SpaceKind::Sp);
    if (f.degree() % 2 == 0) != want_even {
        return Err(TraceError::WrongParity {
            kind: kind.name(),
            message: format!("degree {} has the wrong parity", f.degree()),
        });
    }
    let cls = sr_classify(f, conj)?;
    let script_m = cls.script_m();
    let one = Poly::lambda_minus(fld, &fld.one());
    let minus_one = Poly::lambda_minus(fld, &fld.neg(&fld.one()));
    let odd: Vec<(Poly, usize)> = cls.odd_sr_factors();
    let zero = |reason: String| ClosedForm {
        value: 0,
        case: ClosedFormCase::Zero { reason },
        script_m,
    };

    let out = match kind {
        SpaceKind::SOEven => {
            if mult_of(&cls, &minus_one) > 0 {
                zero("m_(lambda+1) positive (excluded for regular special orthogonal elements)".into())
            } else if mult_of(&cls, &one) > 0 && mult_of(&cls, &one) % 2 == 0 {
                zero("m_(lambda-1) positive even (excluded for regular orthogonal elements)".into())
            } else if odd.len() != 1 {
                zero(format!(
                    "number of odd-multiplicity self-reciprocal factors is {}, not 1",
                    odd.len()
                ))
            } else {
                let (q0, m) = odd[0].clone();
                if q0 == one || q0 == minus_one {
                    zero("unique odd-multiplicity factor is lambda -+ 1".into())
                } else {
                    ClosedForm {
                        value: (q0.degree() as u64 / 2) * ((m as u64 + 1) / 2) * script_m,
                        case: ClosedFormCase::UniqueOddFactor { q0, m },
                        script_m,
                    }
                }
            }
        }
        SpaceKind::SOOdd => {
            if mult_of(&cls, &minus_one) > 0 {
                zero("m_(lambda+1) positive (excluded for regular orthogonal elements)".into())
            } else if mult_of(&cls, &one) % 2 == 0 {
                zero("m_(lambda-1) must be odd".into())
            } else {
                let others: Vec<(Poly, usize)> =
                    odd.iter().filter(|(q, _)| *q != one).cloned().collect();
                match others.len() {
                    0 => {
                        let m1 = mult_of(&cls, &one);
                        ClosedForm {
                            value: ((m1 as u64 + 1) / 2) * script_m,
                            case: ClosedFormCase::LambdaOneOnly { m_lambda_one: m1 },
                            script_m,
                        }
                    }
                    1 => {
                        let (q0, m) = others[0].clone();
                        ClosedForm {
                            value: q0.degree() as u64 * ((m as u64 + 1) / 2) * script_m,
                            case: ClosedFormCase::UniqueOddFactor { q0, m },
                            script_m,
                        }
                    }
                    k => zero(format!(
                        "{k} odd-multiplicity self-reciprocal factors besides lambda - 1"
                    )),
                }
            }
        }
        SpaceKind::Sp => match odd.len() {
            0 => {
                let m1 = mult_of(&cls, &one);
                let m_neg = mult_of(&cls, &minus_one);
                ClosedForm {
                    value: (m1 as u64 / 2 + 1 + m_neg as u64 / 2) * script_m,
                    case: ClosedFormCase::AllEven {
                        m_eigen_one: m1,
                        m_eigen_minus_one: m_neg,
                    },
                    script_m,
                }
            }
            1 => {
                let (q0, m) = odd[0].clone();
                if q0 == one || q0 == minus_one {
                    zero("unique odd-multiplicity factor is lambda -+ 1".into())
                } else {
                    ClosedForm {
                        value: q0.degree() as u64 * ((m as u64 + 1) / 2) * script_m,
                        case: ClosedFormCase::UniqueOddFactor { q0, m },
                        script_m,
                    }
                }
            }
            k => zero(format!("{k} odd-multiplicity self-reciprocal factors")),
        },
        SpaceKind::Unitary => match odd.len() {
            1 => {
                let (q0, m) = odd[0].clone();
                ClosedForm {
                    value: q0.degree() as u64 * ((m as u64 + 1) / 2) * script_m,
                    case: ClosedFormCase::UniqueOddFactor { q0, m },
                    script_m,
                }
            }
            k => zero(format!("{k} odd-multiplicity self-reciprocal factors, not 1")),
        },
    };
    Ok(out)
}

impl ClosedForm {
    pub fn case_name(&self) -> String {
        match &self.case {
            ClosedFormCase::UniqueOddFactor { q0, m } => format!(
                "unique odd-multiplicity factor of degree {} with multiplicity {m}",
                q0.degree()
            ),
            ClosedFormCase::LambdaOneOnly { m_lambda_one } => {
                format!("only lambda - 1 has odd multiplicity ({m_lambda_one})")
            }
            ClosedFormCase::AllEven {
                m_eigen_one,
                m_eigen_minus_one,
            } => format!(
                "all multiplicities even (m_(lambda-1) = {m_eigen_one}, m_(lambda+1) = {m_eigen_minus_one})"
            ),
            ClosedFormCase::Zero { reason } => format!("zero: {reason}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dl_algebra::FieldCtx;

    fn f3() -> FieldCtx {
        FieldCtx::base(3, 1).unwrap()
    }

    #[test]
    fn symplectic_regular_unipotent() {
        let f = f3();
        let lm1 = Poly::from_i64_coeffs(&f, &[-1, 1]);
        let cf = trace_closed_form(SpaceKind::Sp, &lm1.pow(2)).unwrap();
        assert_eq!(cf.value, 2);
    }

    #[test]
    fn odd_orthogonal_unipotent_cube() {
        let f = f3();
        let lm1 = Poly::from_i64_coeffs(&f, &[-1, 1]);
        let cf = trace_closed_form(SpaceKind::SOOdd, &lm1.pow(3)).unwrap();
        assert_eq!(cf.value, 2);
    }

    #[test]
    fn unitary_weighted_instance() {
        // f = Q0^3 * (Q Q*) with deg Q0 = 1 and one pair of multiplicity one:
        // 1 * 2 * 2 = 4
        let f3 = f3();
        let (f9, _) = f3.extension(2).unwrap();
        let t = f9.generator(); // norm-one
        let q0 = Poly::lambda_minus(&f9, &t);
        // non-self-reciprocal linear: root of norm != 1
        let x = f9.add(&f9.one(), &t);
        let q = Poly::lambda_minus(&f9, &x);
        let qs = dl_algebra::reciprocal(&q, true).unwrap();
        assert_ne!(q, qs);
        let f = q0.pow(3).mul(&q.mul(&qs));
        let cf = trace_closed_form(SpaceKind::Unitary, &f).unwrap();
        assert_eq!(cf.value, 4);
        assert_eq!(cf.script_m, 2);
    }

    #[test]
    fn even_orthogonal_quartic() {
        let f = f3();
        let quartics = dl_algebra::sampling::sr_irreducibles(&f, 4, false);
        let cf = trace_closed_form(SpaceKind::SOEven, &quartics[0]).unwrap();
        assert_eq!(cf.value, 2);
    }

    #[test]
    fn zero_cases_are_named() {
        let f = f3();
        let lm1 = Poly::from_i64_coeffs(&f, &[-1, 1]);
        let lp1 = Poly::from_i64_coeffs(&f, &[1, 1]);
        // even orthogonal with eigenvalue -1 present
        let cf = trace_closed_form(SpaceKind::SOEven, &lp1.pow(2)).unwrap();
        assert!(matches!(cf.case, ClosedFormCase::Zero { .. }));
        assert_eq!(cf.value, 0);
        // two odd factors in the symplectic case
        let q = Poly::from_i64_coeffs(&f, &[1, 0, 1]);
        let two_odd = q.mul(&lm1).mul(&lp1);
        let cf = trace_closed_form(SpaceKind::Sp, &two_odd).unwrap();
        assert_eq!(cf.value, 0);
    }

    #[test]
    fn parity_errors() {
        let f = f3();
        let lm1 = Poly::from_i64_coeffs(&f, &[-1, 1]);
        assert!(trace_closed_form(SpaceKind::Sp, &lm1.pow(3)).is_err());
        assert!(trace_closed_form(SpaceKind::SOOdd, &lm1.pow(2)).is_err());
        assert!(trace_closed_form(SpaceKind::Unitary, &lm1.pow(3)).is_err());
    }
}
