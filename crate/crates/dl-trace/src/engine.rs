//! The stratum-by-stratum trace engine.
//!
//! For each stratum the flag witnesses are enumerated through the divisor
//! bijection, each witness's quotient characteristic polynomial is matched
//! against the torus shape conditions of the family (with every rejection
//! recorded by clause name), matching witnesses are grouped by shape, and
//! each group contributes `count * torus_quantity`.

use crate::closed_form::trace_closed_form;
use crate::report::{RejectedRow, StratumRow, TraceReport};
use crate::{family_of, Result, TraceError};
use dl_algebra::{factor, format_poly, Poly};
use dl_classical::{invariant_flags, is_gl_regular, ClassicalSpace, Matrix};
use dl_coxeter::families::{torus_t_bruteforce, torus_t_closed_form, TorusClass};
use std::collections::HashMap;

/// Where the engine takes its torus counting quantities from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusCountMode {
    /// The verified closed forms (fast path).
    ClosedForm,
    /// The coset brute force, memoized per shape.
    BruteForce,
}

/// The shape-matching outcome for one witness quotient.
enum ShapeMatch {
    /// Matches a torus class: `(Q, m)` in the torus shape convention.
    Torus(Poly, usize),
    /// The stratum group is trivial and the witness matches the identity.
    TrivialStratum,
    Rejected(&'static str),
}

fn match_shape(
    space: &ClassicalSpace,
    nprime: usize,
    quotient: &Poly,
) -> Result<ShapeMatch> {
    use dl_classical::SpaceKind::*;
    let fld = &space.field;
    let one = Poly::lambda_minus(fld, &fld.one());
    let minus_one = Poly::lambda_minus(fld, &fld.neg(&fld.one()));
    let kind = space.kind;

    // trivial stratum groups at the bottom of the flag
    if nprime == 0 {
        return Ok(match kind {
            Sp => {
                debug_assert!(quotient.is_one());
                ShapeMatch::TrivialStratum
            }
            SOOdd => {
                if *quotient == one {
                    ShapeMatch::TrivialStratum
                } else {
                    ShapeMatch::Rejected("missing mandatory eigenvalue-one factor")
                }
            }
            Unitary => {
                // the rank-zero torus is the norm-one circle
                let fac = factor(quotient)?;
                if fac.len() == 1
                    && fac[0].0.degree() == 1
                    && dl_algebra::reciprocal::is_self_reciprocal(&fac[0].0, true)?
                {
                    ShapeMatch::Torus(fac[0].0.clone(), fac[0].1)
                } else {
                    ShapeMatch::Rejected("quotient is not a norm-one linear factor")
                }
            }
            SOEven => unreachable!("even orthogonal strata stop at torus rank 1"),
        });
    }

    let work = match kind {
        SOOdd => {
            if !one.divides(quotient) {
                return Ok(ShapeMatch::Rejected("missing mandatory eigenvalue-one factor"));
            }
            quotient.div_exact(&one)
        }
        _ => quotient.clone(),
    };
    let fac = factor(&work)?;
    if fac.len() != 1 {
        return Ok(ShapeMatch::Rejected("quotient is not a prime power"));
    }
    let (q, m) = fac.into_iter().next().unwrap();
    let out = match kind {
        SOEven => {
            if q == one || q == minus_one {
                ShapeMatch::Rejected("central class excluded on the non-split even strata")
            } else if m % 2 == 0 {
                ShapeMatch::Rejected("non-central factor with even multiplicity")
            } else {
                ShapeMatch::Torus(q, m)
            }
        }
        SOOdd => {
            if q == minus_one {
                ShapeMatch::Rejected("eigenvalue minus-one class excluded (disconnected centralizer)")
            } else if q == one {
                // the identity class (lambda - 1)^(2n'+1)
                ShapeMatch::Torus(q, m)
            } else if m % 2 == 0 {
                ShapeMatch::Rejected("non-central factor with even multiplicity")
            } else {
                ShapeMatch::Torus(q, m)
            }
        }
        Sp => {
            if q == one || q == minus_one {
                ShapeMatch::Torus(q, m)
            } else if m % 2 == 0 {
                ShapeMatch::Rejected("non-central factor with even multiplicity")
            } else {
                ShapeMatch::Torus(q, m)
            }
        }
        Unitary => {
            if dl_algebra::reciprocal::is_self_reciprocal(&q, true)? {
                ShapeMatch::Torus(q, m)
            } else {
                // unreachable for characteristic polynomials of isometries
                ShapeMatch::Rejected("prime-power factor is not self-reciprocal")
            }
        }
    };
    Ok(out)
}

/// Compute the full trace report of a GL-regular isometry.
pub fn trace_engine(
    space: &ClassicalSpace,
    g: &Matrix,
    mode: TorusCountMode,
) -> Result<TraceReport> {
    if !is_gl_regular(g) {
        return Err(TraceError::NotGlRegular);
    }
    let family = family_of(space.kind);
    let f = g.charpoly();
    let conj = space.kind.conjugate_mode();
    let i_max = space.kind.i_max(space.n);
    let mut torus_cache: HashMap<(usize, String, usize), u64> = HashMap::new();
    let mut strata = vec![];
    let mut rejected = vec![];
    let mut total: u64 = 0;
    for i in 1..=i_max {
        let nprime = space.n + 1 - i;
        let witnesses = invariant_flags(space, g, i)?;
        // group by quotient shape
        let mut groups: Vec<(Poly, Vec<Poly>)> = vec![];
        for w in &witnesses {
            let ustar = dl_algebra::reciprocal(&w.u, conj)?;
            let quotient = f.div_exact(&w.u.mul(&ustar));
            match groups.iter_mut().find(|(q, _)| *q == quotient) {
                Some((_, us)) => us.push(w.u.clone()),
                None => groups.push((quotient, vec![w.u.clone()])),
            }
        }
        for (quotient, us) in groups {
            match match_shape(space, nprime, &quotient)? {
                ShapeMatch::TrivialStratum => {
                    let contribution = us.len() as u64;
                    total += contribution;
                    strata.push(StratumRow {
                        i,
                        shape: format_poly(&quotient),
                        witnesses: us.len() as u64,
                        torus_count: 1,
                        contribution,
                        quotient: Some(quotient.clone()),
                    });
                }
                ShapeMatch::Torus(q, m) => {
                    let key = (nprime, format_poly(&q), m);
                    let torus_count = match torus_cache.get(&key) {
                        Some(&t) => t,
                        None => {
                            let class = TorusClass::new(family, nprime, q.clone(), m)?;
                            let t = match mode {
                                TorusCountMode::ClosedForm => torus_t_closed_form(&class),
                                TorusCountMode::BruteForce => torus_t_bruteforce(&class)?,
                            };
                            torus_cache.insert(key, t);
                            t
                        }
                    };
                    let contribution = us.len() as u64 * torus_count;
                    total += contribution;
                    strata.push(StratumRow {
                        i,
                        shape: format_poly(&quotient),
                        witnesses: us.len() as u64,
                        torus_count,
                        contribution,
                        quotient: Some(quotient.clone()),
                    });
                }
                ShapeMatch::Rejected(reason) => {
                    rejected.push(RejectedRow {
                        i,
                        shape: format_poly(&quotient),
                        witnesses: us.len() as u64,
                        reason: reason.to_string(),
                    });
                }
            }
        }
    }
    let closed = trace_closed_form(space.kind, &f)?;
    Ok(TraceReport {
        schema: 1,
        family: space.kind.name().to_string(),
        n: space.n,
        q: space.field.q() as u64,
        f_g: format_poly(&f),
        strata,
        rejected,
        total,
        closed_form_value: closed.value,
        diagnosis: closed.case_name(),
        closed_case: closed.case,
        status: if total == 0 { "zero trace" } else { "nonzero trace" }.to_string(),
    })
}

/// The number of contributing `(stratum, class)` rows must match the case
/// split: one row per odd multiplicity step in the unique-factor cases, and
/// `m_1/2 + 1 + m_-1/2` rows in the symplectic all-even case (where a
/// stratum can host both central classes).
pub fn stratum_count_check(report: &TraceReport) -> bool {
    use crate::closed_form::ClosedFormCase::*;
    let expected = match &report.closed_case {
        UniqueOddFactor { m, .. } => (m + 1) / 2,
        LambdaOneOnly { m_lambda_one } => (m_lambda_one + 1) / 2,
        AllEven {
            m_eigen_one,
            m_eigen_minus_one,
        } => m_eigen_one / 2 + 1 + m_eigen_minus_one / 2,
        Zero { .. } => 0,
    };
    if report.strata.len() != expected {
        return false;
    }
    if matches!(&report.closed_case, UniqueOddFactor { .. } | LambdaOneOnly { .. }) {
        // one shape per stratum in the unique-factor cases
        let distinct: std::collections::BTreeSet<usize> =
            report.strata.iter().map(|r| r.i).collect();
        if distinct.len() != expected {
            return false;
        }
    }
    true
}

/// In unique-odd-factor runs the quotient multiplicities of the contributing
/// strata are exactly `{1, 3, ..., m_Q0}`.
pub fn monotone_multiplicity_check(report: &TraceReport) -> bool {
    use crate::closed_form::ClosedFormCase::UniqueOddFactor;
    let UniqueOddFactor { q0, m } = &report.closed_case else {
        return true;
    };
    let mut seen = vec![];
    for row in &report.strata {
        let Some(shape) = &row.quotient else {
            return false;
        };
        let mut mult = 0;
        let mut rem = shape.clone();
        loop {
            let (quo, r) = rem.div_rem(q0);
            if !r.is_zero() {
                break;
            }
            mult += 1;
            rem = quo;
        }
        seen.push(mult);
    }
    seen.sort_unstable();
    let expected: Vec<usize> = (1..=*m).step_by(2).collect();
    seen == expected
}
